#ifndef WURITT_TRISET_HPP
#define WURITT_TRISET_HPP

#include <compare>
#include <vector>

#include <wuritt/poly.hpp>

namespace wuritt {

/// Finite sequence of nonzero polynomials whose main variables strictly
/// increase (Bottom least, so at most the first member is a constant).
class TriangularSet {
public:
    /// Validates members; names the offending index on failure.
    static TriangularSet make(std::vector<Polynomial> members);
    static TriangularSet empty(const Field& f, VarOrderPtr order);

    const std::vector<Polynomial>& members() const noexcept { return m_members; }
    std::size_t size() const noexcept { return m_members.size(); }
    bool isEmpty() const noexcept { return m_members.empty(); }

    const Field& field() const noexcept { return m_field; }
    const VarOrderPtr& order() const noexcept { return m_order; }

    /// A contradictory set: some member is a nonzero constant (necessarily
    /// the first). Its zero set is empty.
    bool containsNonzeroConstant() const;

    std::vector<RankKey> orderKey() const;

    bool operator==(const TriangularSet& o) const;

private:
    TriangularSet(Field f, VarOrderPtr order, std::vector<Polynomial> members)
        : m_field(f), m_order(std::move(order)), m_members(std::move(members)) {}

    Field m_field;
    VarOrderPtr m_order;
    std::vector<Polynomial> m_members;
};

/// q reduced w.r.t. every member of S.
bool reducedToSet(const Polynomial& q, const TriangularSet& s);

/// Order on triangular sets: positionwise rank comparison, where a missing
/// position counts as Top. A strictly longer set with a rank-equivalent
/// prefix therefore compares smaller.
std::weak_ordering triCompare(const TriangularSet& s, const TriangularSet& t);

/// Every later member reduced w.r.t. every earlier member.
bool isAscending(const TriangularSet& s);

/// For every nonconstant member p, initial(p) is reduced w.r.t. the whole
/// set. Holds for every ascending set; exposed so tests can check it.
bool initialsReduced(const TriangularSet& s);

/// Unique scalar-normal form: over the rationals, coprime integer
/// coefficients with positive leading coefficient (canonical term order);
/// over F_p, leading coefficient 1. Zero maps to zero.
Polynomial normalizePrimitive(const Polynomial& p);

/// Greedy minimal ascending subset of ps: repeatedly picks a rank-minimal
/// polynomial among those reduced w.r.t. everything chosen so far, with main
/// variable above the last choice. Inputs are deduplicated up to
/// normalizePrimitive; rank ties break by term count, then by canonical
/// comparison, so the result does not depend on input permutation.
TriangularSet basicSet(const std::vector<Polynomial>& ps);

/// normalizePrimitive + drop zeros + first-occurrence dedup.
std::vector<Polynomial> dedupNormalized(const std::vector<Polynomial>& ps);

}  // namespace wuritt

#endif
