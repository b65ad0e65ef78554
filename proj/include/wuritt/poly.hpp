#ifndef WURITT_POLY_HPP
#define WURITT_POLY_HPP

#include <compare>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <wuritt/coeff.hpp>
#include <wuritt/errors.hpp>

namespace wuritt {

/// Declared total order on variables. Index 0 is the least variable.
class VarOrder {
public:
    explicit VarOrder(std::vector<std::string> names);

    std::size_t size() const noexcept { return m_names.size(); }
    const std::string& name(std::size_t i) const { return m_names.at(i); }
    const std::vector<std::string>& names() const noexcept { return m_names; }
    std::optional<std::size_t> indexOf(const std::string& name) const;

    friend bool operator==(const VarOrder&, const VarOrder&) = default;

private:
    std::vector<std::string> m_names;
};

using VarOrderPtr = std::shared_ptr<const VarOrder>;

VarOrderPtr makeVarOrder(std::vector<std::string> names);

/// Exponents are bounded; arithmetic past this limit is a hard error.
inline constexpr std::uint32_t kMaxExponent = 1u << 30;

/// Sparse power product. Only strictly positive exponents are stored,
/// sorted by variable index.
class Monomial {
public:
    Monomial() = default;
    static Monomial variable(std::size_t v, std::uint32_t e = 1);
    static Monomial fromPairs(std::vector<std::pair<std::size_t, std::uint32_t>> pairs);

    bool isUnit() const noexcept { return m_exps.empty(); }
    std::uint32_t degreeOf(std::size_t v) const;
    std::uint64_t totalDegree() const;
    std::optional<std::size_t> maxVar() const;
    Monomial erase(std::size_t v) const;
    Monomial operator*(const Monomial& o) const;

    const std::vector<std::pair<std::uint32_t, std::uint32_t>>& exponents() const noexcept {
        return m_exps;
    }

    friend bool operator==(const Monomial&, const Monomial&) = default;

private:
    // (variable index, exponent) sorted ascending by index; exponents > 0
    std::vector<std::pair<std::uint32_t, std::uint32_t>> m_exps;
};

/// Canonical term order: by total degree, ties by exponents compared from the
/// greatest variable down. Purely a device for deterministic storage, output
/// and hashing; no part of the method depends on it.
std::strong_ordering monomialCompare(const Monomial& a, const Monomial& b);

/// Rank of a polynomial: (main variable, main degree), with Bottom (no
/// variable) below every variable. Constants, including 0, rank (Bottom, 0).
struct RankKey {
    std::optional<std::size_t> mainVar;  // nullopt = Bottom
    std::uint32_t mainDeg = 0;

    friend bool operator==(const RankKey&, const RankKey&) = default;
};

std::strong_ordering rankKeyCompare(const RankKey& a, const RankKey& b);

/// Sparse exact multivariate polynomial over a coefficient field, under a
/// declared variable order. Immutable value type; all operations are pure.
class Polynomial {
public:
    using Term = std::pair<Monomial, Coeff>;

    static Polynomial zero(const Field& f, VarOrderPtr order);
    static Polynomial constant(const Field& f, VarOrderPtr order, const Coeff& c);
    static Polynomial constant(const Field& f, VarOrderPtr order, long v);
    static Polynomial variable(const Field& f, VarOrderPtr order, std::size_t v,
                               std::uint32_t e = 1);
    /// Normalizes: merges equal monomials, drops zero coefficients, sorts.
    static Polynomial fromTerms(const Field& f, VarOrderPtr order, std::vector<Term> terms);

    const Field& field() const noexcept { return m_field; }
    const VarOrderPtr& order() const noexcept { return m_order; }
    /// Terms in canonical order, greatest monomial first.
    const std::vector<Term>& terms() const noexcept { return m_terms; }
    std::size_t termCount() const noexcept { return m_terms.size(); }

    bool isZero() const noexcept { return m_terms.empty(); }
    bool isConstant() const noexcept;

    Polynomial operator+(const Polynomial& o) const;
    Polynomial operator-(const Polynomial& o) const;
    Polynomial operator*(const Polynomial& o) const;
    Polynomial operator-() const;
    Polynomial scale(const Coeff& c) const;
    Polynomial pow(std::uint32_t e) const;

    /// Greatest variable with positive degree; nullopt (Bottom) for constants.
    std::optional<std::size_t> mainVariable() const;
    /// Degree in the main variable; 0 for constants including 0.
    std::uint32_t mainDegree() const;
    std::uint32_t degreeOf(std::size_t v) const;

    /// Coefficient of v^degreeOf(v), as a polynomial with v erased.
    /// If v does not occur, this is the polynomial itself.
    Polynomial initialOf(std::size_t v) const;
    /// Leading coefficient w.r.t. the main variable: 0 for the zero
    /// polynomial, 1 for nonzero constants.
    Polynomial initial() const;

    RankKey rank() const;

    /// Exact evaluation; the point must assign every variable occurring here.
    Coeff evaluate(const std::map<std::size_t, Coeff>& point) const;

    bool operator==(const Polynomial& o) const;
    bool operator!=(const Polynomial& o) const { return !(*this == o); }

    bool sameContext(const Polynomial& o) const;
    void requireSameContext(const Polynomial& o) const;

private:
    Polynomial(const Field& f, VarOrderPtr order) : m_field(f), m_order(std::move(order)) {}

    Field m_field;
    VarOrderPtr m_order;
    std::vector<Term> m_terms;
};

/// Rank comparison (Less / Equivalent / Greater): lexicographic on
/// (main variable, main degree) with Bottom least. Equivalent means equal
/// rank, not equal polynomials.
std::weak_ordering rankCompare(const Polynomial& p, const Polynomial& q);

/// q is reduced w.r.t. p: true for q = 0; false for q != 0 when p is constant
/// (including 0); otherwise deg of q in p's main variable < p's main degree.
bool reducedTo(const Polynomial& q, const Polynomial& p);

/// Deterministic total order on same-context polynomials (term-by-term,
/// canonical monomial order, then coefficient order). Tie-breaking device.
std::strong_ordering canonicalCompare(const Polynomial& p, const Polynomial& q);

}  // namespace wuritt

#endif
