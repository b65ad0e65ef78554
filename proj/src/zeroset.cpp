#include <wuritt/zeroset.hpp>

#include <algorithm>

namespace wuritt {

PointSet::PointSet(std::vector<Point> points) : m_points(std::move(points)) {
    std::sort(m_points.begin(), m_points.end());
    m_points.erase(std::unique(m_points.begin(), m_points.end()), m_points.end());
}

bool PointSet::contains(const Point& p) const {
    return std::binary_search(m_points.begin(), m_points.end(), p);
}

PointSet PointSet::setUnion(const PointSet& o) const {
    PointSet out;
    std::set_union(m_points.begin(), m_points.end(), o.m_points.begin(), o.m_points.end(),
                   std::back_inserter(out.m_points));
    return out;
}

PointSet PointSet::setMinus(const PointSet& o) const {
    PointSet out;
    std::set_difference(m_points.begin(), m_points.end(), o.m_points.begin(), o.m_points.end(),
                        std::back_inserter(out.m_points));
    return out;
}

PointSet PointSet::setIntersect(const PointSet& o) const {
    PointSet out;
    std::set_intersection(m_points.begin(), m_points.end(), o.m_points.begin(),
                          o.m_points.end(), std::back_inserter(out.m_points));
    return out;
}

bool PointSet::subsetOf(const PointSet& o) const {
    return std::includes(o.m_points.begin(), o.m_points.end(), m_points.begin(), m_points.end());
}

std::optional<Point> PointSet::firstNotIn(const PointSet& o) const {
    for (const auto& p : m_points)
        if (!o.contains(p)) return p;
    return std::nullopt;
}

ZeroOracle::ZeroOracle(const Field& f, VarOrderPtr order)
    : m_field(f), m_order(std::move(order)), m_pointCount(1) {
    if (!f.isPrimeField())
        throw UsageError("zero-set enumeration needs a prime field; the rationals are not enumerable");
    if (!m_order) throw UsageError("zero oracle needs a variable order");
    constexpr std::uint64_t kBudget = 10'000'000;
    for (std::size_t i = 0; i < m_order->size(); ++i) {
        m_pointCount *= f.prime();
        if (m_pointCount > kBudget)
            throw UsageError("enumeration budget exceeded: p^n > 10^7");
    }
}

void ZeroOracle::requireCompatible(const Polynomial& p) const {
    if (p.field() != m_field)
        throw UsageError("oracle field mismatch: " + m_field.name() + " vs " + p.field().name());
    if (!(p.order() == m_order || (p.order() && *p.order() == *m_order)))
        throw UsageError("oracle variable-order mismatch");
}

PointSet ZeroOracle::vanishingSet(const std::vector<Polynomial>& ps) const {
    for (const auto& p : ps) requireCompatible(p);
    const std::size_t n = m_order->size();
    const std::uint64_t prime = m_field.prime();

    std::vector<Point> hits;
    Point z(n, 0);
    std::map<std::size_t, Coeff> assignment;
    for (std::size_t v = 0; v < n; ++v) assignment.emplace(v, Coeff::zero(m_field));

    for (std::uint64_t idx = 0; idx < m_pointCount; ++idx) {
        for (std::size_t v = 0; v < n; ++v)
            assignment.find(v)->second = Coeff::residue(m_field, z[v]);
        bool vanishes = true;
        for (const auto& p : ps)
            if (!p.evaluate(assignment).isZero()) {
                vanishes = false;
                break;
            }
        if (vanishes) hits.push_back(z);
        // odometer step, first coordinate most significant
        for (std::size_t v = n; v-- > 0;) {
            if (++z[v] < prime) break;
            z[v] = 0;
        }
    }
    return PointSet(std::move(hits));  // already lexicographic, constructor keeps it canonical
}

PointSet ZeroOracle::vanishingSet(const TriangularSet& s) const {
    return vanishingSet(s.members());
}

PointSet ZeroOracle::quasiVanishingSet(const TriangularSet& s, const Polynomial& ip) const {
    requireCompatible(ip);
    return vanishingSet(s).setMinus(vanishingSet(std::vector<Polynomial>{ip}));
}

CheckResult checkEq1(const ZeroOracle& oracle, const std::vector<Polynomial>& ps,
                     const TriangularSet& cs) {
    PointSet lhs = oracle.vanishingSet(ps);
    PointSet rhs = oracle.quasiVanishingSet(cs, initialProd(cs));
    for (const auto& p : cs.members()) {
        if (p.isConstant()) continue;
        std::vector<Polynomial> adjoined = ps;
        adjoined.push_back(p.initial());
        rhs = rhs.setUnion(oracle.vanishingSet(adjoined));
    }
    if (lhs == rhs) return {true, std::nullopt};
    auto witness = lhs.firstNotIn(rhs);
    if (!witness) witness = rhs.firstNotIn(lhs);
    return {false, witness};
}

CheckResult checkEq2(const ZeroOracle& oracle, const std::vector<Polynomial>& ps,
                     const ZeroDecomposition& zd) {
    PointSet lhs = oracle.vanishingSet(ps);
    PointSet rhs;
    for (const auto& comp : zd.components)
        rhs = rhs.setUnion(oracle.quasiVanishingSet(comp.set, initialProd(comp.set)));
    if (lhs == rhs) return {true, std::nullopt};
    auto witness = lhs.firstNotIn(rhs);
    if (!witness) witness = rhs.firstNotIn(lhs);
    return {false, witness};
}

std::uint64_t evalResidueDirect(const Polynomial& p, const Point& z) {
    if (!p.field().isPrimeField())
        throw UsageError("direct residue evaluation needs a prime field");
    const std::uint64_t prime = p.field().prime();
    std::uint64_t acc = 0;
    for (const auto& [mono, coeff] : p.terms()) {
        std::uint64_t t = coeff.residueValue();
        for (const auto& [var, exp] : mono.exponents()) {
            if (var >= z.size()) throw UsageError("point misses variable index " + std::to_string(var));
            // square-and-multiply, written out so this path stays independent
            std::uint64_t base = z[var] % prime, pw = 1, e = exp;
            while (e) {
                if (e & 1) pw = (pw * base) % prime;
                base = (base * base) % prime;
                e >>= 1;
            }
            t = (t * pw) % prime;
        }
        acc = (acc + t) % prime;
    }
    return acc;
}

}  // namespace wuritt
