#include <wuritt/poly.hpp>

#include <algorithm>

namespace wuritt {

VarOrder::VarOrder(std::vector<std::string> names) : m_names(std::move(names)) {
    for (std::size_t i = 0; i < m_names.size(); ++i) {
        if (m_names[i].empty()) throw UsageError("variable name at index " + std::to_string(i) + " is empty");
        for (std::size_t j = i + 1; j < m_names.size(); ++j)
            if (m_names[i] == m_names[j])
                throw UsageError("duplicate variable name '" + m_names[i] + "'");
    }
}

std::optional<std::size_t> VarOrder::indexOf(const std::string& name) const {
    for (std::size_t i = 0; i < m_names.size(); ++i)
        if (m_names[i] == name) return i;
    return std::nullopt;
}

VarOrderPtr makeVarOrder(std::vector<std::string> names) {
    return std::make_shared<const VarOrder>(std::move(names));
}

Monomial Monomial::variable(std::size_t v, std::uint32_t e) {
    Monomial m;
    if (e > 0) {
        if (e > kMaxExponent) throw OverflowError("exponent exceeds supported range");
        m.m_exps.emplace_back(static_cast<std::uint32_t>(v), e);
    }
    return m;
}

Monomial Monomial::fromPairs(std::vector<std::pair<std::size_t, std::uint32_t>> pairs) {
    Monomial m;
    std::sort(pairs.begin(), pairs.end());
    for (std::size_t i = 0; i < pairs.size(); ++i) {
        if (i > 0 && pairs[i].first == pairs[i - 1].first)
            throw UsageError("repeated variable in monomial");
        if (pairs[i].second == 0) continue;
        if (pairs[i].second > kMaxExponent) throw OverflowError("exponent exceeds supported range");
        m.m_exps.emplace_back(static_cast<std::uint32_t>(pairs[i].first), pairs[i].second);
    }
    return m;
}

std::uint32_t Monomial::degreeOf(std::size_t v) const {
    for (const auto& [var, exp] : m_exps)
        if (var == v) return exp;
    return 0;
}

std::uint64_t Monomial::totalDegree() const {
    std::uint64_t d = 0;
    for (const auto& [var, exp] : m_exps) d += exp;
    return d;
}

std::optional<std::size_t> Monomial::maxVar() const {
    if (m_exps.empty()) return std::nullopt;
    return m_exps.back().first;
}

Monomial Monomial::erase(std::size_t v) const {
    Monomial m;
    m.m_exps.reserve(m_exps.size());
    for (const auto& e : m_exps)
        if (e.first != v) m.m_exps.push_back(e);
    return m;
}

Monomial Monomial::operator*(const Monomial& o) const {
    Monomial m;
    m.m_exps.reserve(m_exps.size() + o.m_exps.size());
    std::size_t i = 0, j = 0;
    while (i < m_exps.size() || j < o.m_exps.size()) {
        if (j == o.m_exps.size() || (i < m_exps.size() && m_exps[i].first < o.m_exps[j].first)) {
            m.m_exps.push_back(m_exps[i++]);
        } else if (i == m_exps.size() || o.m_exps[j].first < m_exps[i].first) {
            m.m_exps.push_back(o.m_exps[j++]);
        } else {
            std::uint64_t e = std::uint64_t(m_exps[i].second) + o.m_exps[j].second;
            if (e > kMaxExponent) throw OverflowError("exponent overflow in monomial product");
            m.m_exps.emplace_back(m_exps[i].first, static_cast<std::uint32_t>(e));
            ++i;
            ++j;
        }
    }
    return m;
}

std::strong_ordering monomialCompare(const Monomial& a, const Monomial& b) {
    std::uint64_t ta = a.totalDegree(), tb = b.totalDegree();
    if (ta != tb) return ta <=> tb;
    // same grade: scan exponents from the greatest variable down
    const auto& ea = a.exponents();
    const auto& eb = b.exponents();
    std::size_t i = ea.size(), j = eb.size();
    while (i > 0 && j > 0) {
        const auto& [va, xa] = ea[i - 1];
        const auto& [vb, xb] = eb[j - 1];
        if (va != vb) return va <=> vb;  // greater top variable wins
        if (xa != xb) return xa <=> xb;
        --i;
        --j;
    }
    return i <=> j;
}

std::strong_ordering rankKeyCompare(const RankKey& a, const RankKey& b) {
    if (a.mainVar != b.mainVar) {
        if (!a.mainVar) return std::strong_ordering::less;  // Bottom least
        if (!b.mainVar) return std::strong_ordering::greater;
        return *a.mainVar <=> *b.mainVar;
    }
    return a.mainDeg <=> b.mainDeg;
}

Polynomial Polynomial::zero(const Field& f, VarOrderPtr order) {
    return Polynomial(f, std::move(order));
}

Polynomial Polynomial::constant(const Field& f, VarOrderPtr order, const Coeff& c) {
    if (c.field() != f) throw UsageError("constant coefficient from the wrong field");
    Polynomial p(f, std::move(order));
    if (!c.isZero()) p.m_terms.emplace_back(Monomial(), c);
    return p;
}

Polynomial Polynomial::constant(const Field& f, VarOrderPtr order, long v) {
    return constant(f, std::move(order), Coeff::fromInteger(f, v));
}

Polynomial Polynomial::variable(const Field& f, VarOrderPtr order, std::size_t v,
                                std::uint32_t e) {
    if (!order || v >= order->size())
        throw UsageError("variable index " + std::to_string(v) + " out of range");
    Polynomial p(f, std::move(order));
    p.m_terms.emplace_back(Monomial::variable(v, e), Coeff::one(f));
    if (e == 0) return fromTerms(p.m_field, p.m_order, std::move(p.m_terms));
    return p;
}

Polynomial Polynomial::fromTerms(const Field& f, VarOrderPtr order, std::vector<Term> terms) {
    Polynomial p(f, std::move(order));
    for (const auto& [mono, coeff] : terms) {
        if (coeff.field() != f) throw UsageError("term coefficient from the wrong field");
        if (auto mv = mono.maxVar(); mv && *mv >= p.m_order->size())
            throw UsageError("monomial uses variable index " + std::to_string(*mv) +
                             " beyond the declared order");
    }
    std::sort(terms.begin(), terms.end(), [](const Term& a, const Term& b) {
        return monomialCompare(a.first, b.first) == std::strong_ordering::greater;
    });
    for (auto& t : terms) {
        if (!p.m_terms.empty() && p.m_terms.back().first == t.first)
            p.m_terms.back().second = p.m_terms.back().second + t.second;
        else
            p.m_terms.push_back(std::move(t));
        if (p.m_terms.back().second.isZero()) p.m_terms.pop_back();
    }
    return p;
}

bool Polynomial::isConstant() const noexcept {
    return m_terms.empty() || (m_terms.size() == 1 && m_terms[0].first.isUnit());
}

bool Polynomial::sameContext(const Polynomial& o) const {
    return m_field == o.m_field &&
           (m_order == o.m_order || (m_order && o.m_order && *m_order == *o.m_order));
}

void Polynomial::requireSameContext(const Polynomial& o) const {
    if (m_field != o.m_field)
        throw UsageError("polynomial field mismatch: " + m_field.name() + " vs " +
                         o.m_field.name());
    if (!(m_order == o.m_order || (m_order && o.m_order && *m_order == *o.m_order)))
        throw UsageError("polynomial variable-order mismatch");
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
    requireSameContext(o);
    Polynomial out(m_field, m_order);
    out.m_terms.reserve(m_terms.size() + o.m_terms.size());
    std::size_t i = 0, j = 0;
    while (i < m_terms.size() || j < o.m_terms.size()) {
        if (j == o.m_terms.size()) {
            out.m_terms.push_back(m_terms[i++]);
        } else if (i == m_terms.size()) {
            out.m_terms.push_back(o.m_terms[j++]);
        } else {
            auto c = monomialCompare(m_terms[i].first, o.m_terms[j].first);
            if (c == std::strong_ordering::greater) {
                out.m_terms.push_back(m_terms[i++]);
            } else if (c == std::strong_ordering::less) {
                out.m_terms.push_back(o.m_terms[j++]);
            } else {
                Coeff s = m_terms[i].second + o.m_terms[j].second;
                if (!s.isZero()) out.m_terms.emplace_back(m_terms[i].first, std::move(s));
                ++i;
                ++j;
            }
        }
    }
    return out;
}

Polynomial Polynomial::operator-() const {
    Polynomial out(m_field, m_order);
    out.m_terms.reserve(m_terms.size());
    for (const auto& [mono, coeff] : m_terms) out.m_terms.emplace_back(mono, -coeff);
    return out;
}

Polynomial Polynomial::operator-(const Polynomial& o) const { return *this + (-o); }

Polynomial Polynomial::operator*(const Polynomial& o) const {
    requireSameContext(o);
    std::vector<Term> products;
    products.reserve(m_terms.size() * o.m_terms.size());
    for (const auto& [ma, ca] : m_terms)
        for (const auto& [mb, cb] : o.m_terms) products.emplace_back(ma * mb, ca * cb);
    return fromTerms(m_field, m_order, std::move(products));
}

Polynomial Polynomial::scale(const Coeff& c) const {
    if (c.field() != m_field) throw UsageError("scale coefficient from the wrong field");
    Polynomial out(m_field, m_order);
    if (c.isZero()) return out;
    out.m_terms.reserve(m_terms.size());
    for (const auto& [mono, coeff] : m_terms) out.m_terms.emplace_back(mono, coeff * c);
    return out;
}

Polynomial Polynomial::pow(std::uint32_t e) const {
    Polynomial acc = constant(m_field, m_order, 1);  // convention: p^0 = 1, also for p = 0
    Polynomial base = *this;
    while (e) {
        if (e & 1) acc = acc * base;
        if (e >>= 1) base = base * base;
    }
    return acc;
}

std::optional<std::size_t> Polynomial::mainVariable() const {
    std::optional<std::size_t> best;
    for (const auto& [mono, coeff] : m_terms)
        if (auto mv = mono.maxVar(); mv && (!best || *mv > *best)) best = mv;
    return best;
}

std::uint32_t Polynomial::degreeOf(std::size_t v) const {
    if (m_order && v >= m_order->size())
        throw UsageError("variable index " + std::to_string(v) + " out of range");
    std::uint32_t d = 0;
    for (const auto& [mono, coeff] : m_terms) d = std::max(d, mono.degreeOf(v));
    return d;
}

std::uint32_t Polynomial::mainDegree() const {
    auto mv = mainVariable();
    return mv ? degreeOf(*mv) : 0;
}

Polynomial Polynomial::initialOf(std::size_t v) const {
    std::uint32_t d = degreeOf(v);
    std::vector<Term> picked;
    for (const auto& [mono, coeff] : m_terms)
        if (mono.degreeOf(v) == d) picked.emplace_back(mono.erase(v), coeff);
    return fromTerms(m_field, m_order, std::move(picked));
}

Polynomial Polynomial::initial() const {
    if (isZero()) return zero(m_field, m_order);
    auto mv = mainVariable();
    if (!mv) return constant(m_field, m_order, 1);
    return initialOf(*mv);
}

RankKey Polynomial::rank() const { return RankKey{mainVariable(), mainDegree()}; }

Coeff Polynomial::evaluate(const std::map<std::size_t, Coeff>& point) const {
    for (const auto& [v, c] : point)
        if (c.field() != m_field) throw UsageError("evaluation point from the wrong field");
    Coeff acc = Coeff::zero(m_field);
    for (const auto& [mono, coeff] : m_terms) {
        Coeff t = coeff;
        for (const auto& [var, exp] : mono.exponents()) {
            auto it = point.find(var);
            if (it == point.end())
                throw UsageError("evaluation point misses variable index " + std::to_string(var));
            t = t * it->second.pow(exp);
        }
        acc = acc + t;
    }
    return acc;
}

bool Polynomial::operator==(const Polynomial& o) const {
    if (!sameContext(o) || m_terms.size() != o.m_terms.size()) return false;
    for (std::size_t i = 0; i < m_terms.size(); ++i)
        if (m_terms[i].first != o.m_terms[i].first || m_terms[i].second != o.m_terms[i].second)
            return false;
    return true;
}

std::weak_ordering rankCompare(const Polynomial& p, const Polynomial& q) {
    p.requireSameContext(q);
    auto c = rankKeyCompare(p.rank(), q.rank());
    if (c == std::strong_ordering::less) return std::weak_ordering::less;
    if (c == std::strong_ordering::greater) return std::weak_ordering::greater;
    return std::weak_ordering::equivalent;
}

bool reducedTo(const Polynomial& q, const Polynomial& p) {
    if (q.isZero()) return true;
    auto mv = p.mainVariable();
    if (!mv) return false;  // constants (and 0) reduce nothing nonzero
    return q.degreeOf(*mv) < p.mainDegree();
}

std::strong_ordering canonicalCompare(const Polynomial& p, const Polynomial& q) {
    p.requireSameContext(q);
    const auto& a = p.terms();
    const auto& b = q.terms();
    for (std::size_t i = 0; i < a.size() && i < b.size(); ++i) {
        auto mc = monomialCompare(a[i].first, b[i].first);
        if (mc != std::strong_ordering::equal) return mc;
        auto cc = a[i].second.cmp(b[i].second);
        if (cc != std::strong_ordering::equal) return cc;
    }
    return a.size() <=> b.size();
}

}  // namespace wuritt
