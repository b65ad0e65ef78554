#ifndef WURITT_ZEROSET_HPP
#define WURITT_ZEROSET_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <wuritt/charset.hpp>
#include <wuritt/poly.hpp>
#include <wuritt/triset.hpp>

namespace wuritt {

/// Point of F_p^n: one residue per declared variable, in declaration order.
using Point = std::vector<std::uint64_t>;

/// Finite set of points, kept sorted and unique; equality is set equality.
class PointSet {
public:
    PointSet() = default;
    explicit PointSet(std::vector<Point> points);

    const std::vector<Point>& points() const noexcept { return m_points; }
    std::size_t size() const noexcept { return m_points.size(); }
    bool contains(const Point& p) const;

    PointSet setUnion(const PointSet& o) const;
    PointSet setMinus(const PointSet& o) const;
    PointSet setIntersect(const PointSet& o) const;
    bool subsetOf(const PointSet& o) const;
    /// A point of *this missing from o, if any (least such point).
    std::optional<Point> firstNotIn(const PointSet& o) const;

    friend bool operator==(const PointSet&, const PointSet&) = default;

private:
    std::vector<Point> m_points;
};

/// Exhaustive vanishing-set enumeration over F_p^n. Construction enforces
/// the budget p^n <= 10^7.
class ZeroOracle {
public:
    ZeroOracle(const Field& f, VarOrderPtr order);

    const Field& field() const noexcept { return m_field; }
    const VarOrderPtr& order() const noexcept { return m_order; }
    std::uint64_t pointCount() const noexcept { return m_pointCount; }

    /// Common zeros of every polynomial in ps; all points if ps is empty.
    PointSet vanishingSet(const std::vector<Polynomial>& ps) const;
    PointSet vanishingSet(const TriangularSet& s) const;

    /// Zeros of s away from the zeros of ip (a quasi-variety).
    PointSet quasiVanishingSet(const TriangularSet& s, const Polynomial& ip) const;

private:
    void requireCompatible(const Polynomial& p) const;

    Field m_field;
    VarOrderPtr m_order;
    std::uint64_t m_pointCount;
};

struct CheckResult {
    bool holds;
    std::optional<Point> counterexample;
    explicit operator bool() const noexcept { return holds; }
};

/// Exact point-set identity of the well-ordering decomposition:
/// Zero(PS) = Zero(CS/IP) ∪ ⋃ Zero(PS ∪ {initial(p)}) over nonconstant
/// members p of CS.
CheckResult checkEq1(const ZeroOracle& oracle, const std::vector<Polynomial>& ps,
                     const TriangularSet& cs);

/// Exact point-set identity Zero(PS) = ⋃_j Zero(CS_j / IP_j).
CheckResult checkEq2(const ZeroOracle& oracle, const std::vector<Polynomial>& ps,
                     const ZeroDecomposition& zd);

/// Independent membership route: term-by-term evaluation on raw residues
/// with its own modular exponentiation. Shares no code with
/// Polynomial::evaluate; used to cross-check every oracle decision.
std::uint64_t evalResidueDirect(const Polynomial& p, const Point& z);

}  // namespace wuritt

#endif
