#include <wuritt/pseudo.hpp>

namespace wuritt {

PseudoResult pseudoDivide(const Polynomial& g, const Polynomial& f) {
    g.requireSameContext(f);
    const Field& field = g.field();
    const VarOrderPtr& order = g.order();

    if (f.isZero()) return {0, Polynomial::zero(field, order), g};
    if (f.isConstant()) {
        Coeff c = f.terms().front().second;
        return {0, g.scale(c.inv()), Polynomial::zero(field, order)};
    }

    std::size_t m = *f.mainVariable();
    std::uint32_t df = f.degreeOf(m);
    Polynomial lead = f.initialOf(m);

    std::uint32_t s = 0;
    Polynomial q = Polynomial::zero(field, order);
    Polynomial r = g;
    while (r.degreeOf(m) >= df) {
        std::uint32_t dr = r.degreeOf(m);
        Polynomial t = r.initialOf(m) * Polynomial::variable(field, order, m, dr - df);
        r = lead * r - t * f;
        q = lead * q + t;
        ++s;  // the main-variable degree of r strictly decreases each pass
    }
    return {s, std::move(q), std::move(r)};
}

bool checkIdentity(const Polynomial& g, const Polynomial& f, const PseudoResult& res) {
    Polynomial lhs = f.initial().pow(res.exponent) * g;
    Polynomial rhs = res.quotient * f + res.remainder;
    return lhs == rhs;
}

SetPseudoResult setPseudoDivide(const Polynomial& g, const TriangularSet& s) {
    const auto& members = s.members();
    if (!members.empty()) g.requireSameContext(members.front());

    SetPseudoResult out{{}, {}, g};
    for (std::size_t k = members.size(); k-- > 0;) {
        PseudoResult step = pseudoDivide(out.remainder, members[k]);
        Polynomial factor = members[k].initial().pow(step.exponent);
        for (auto& q : out.quotients) q = q * factor;
        out.exponents.insert(out.exponents.begin(), step.exponent);
        out.quotients.insert(out.quotients.begin(), std::move(step.quotient));
        out.remainder = std::move(step.remainder);
    }
    return out;
}

bool checkSetIdentity(const Polynomial& g, const TriangularSet& s, const SetPseudoResult& res) {
    const auto& members = s.members();
    if (res.exponents.size() != members.size() || res.quotients.size() != members.size())
        return false;
    Polynomial lhs = g;
    for (std::size_t i = 0; i < members.size(); ++i)
        lhs = lhs * members[i].initial().pow(res.exponents[i]);
    Polynomial rhs = res.remainder;
    for (std::size_t i = 0; i < members.size(); ++i)
        rhs = rhs + res.quotients[i] * members[i];
    return lhs == rhs;
}

Polynomial setRemainder(const Polynomial& g, const TriangularSet& s) {
    return setPseudoDivide(g, s).remainder;
}

}  // namespace wuritt
