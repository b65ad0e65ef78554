#ifndef WURITT_PSEUDO_HPP
#define WURITT_PSEUDO_HPP

#include <cstdint>
#include <vector>

#include <wuritt/triset.hpp>

namespace wuritt {

/// Witness of the division identity initial(f)^exponent * g = quotient * f + remainder,
/// with the remainder reduced w.r.t. f.
struct PseudoResult {
    std::uint32_t exponent;
    Polynomial quotient;
    Polynomial remainder;
};

/// Witness of (prod_i initial(s_i)^exponents[i]) * g = sum_i quotients[i] * s_i + remainder,
/// with the remainder reduced w.r.t. the whole set. Lists align with the set's members.
struct SetPseudoResult {
    std::vector<std::uint32_t> exponents;
    std::vector<Polynomial> quotients;
    Polynomial remainder;
};

/// Pseudo-division of g by f. Degenerate divisors follow the conventions:
/// f = 0 yields (0, 0, g); a nonzero constant c yields (0, c^-1 * g, 0).
/// Otherwise runs the cancellation loop, guard checked before the first
/// iteration, so an already-reduced g returns (0, 0, g).
PseudoResult pseudoDivide(const Polynomial& g, const Polynomial& f);

/// Exact check of the division identity for a claimed result.
bool checkIdentity(const Polynomial& g, const Polynomial& f, const PseudoResult& res);

/// Pseudo-division of g by a triangular set, folding from the last member
/// down; previously collected quotients pick up the factor initial(s_i)^e_i.
SetPseudoResult setPseudoDivide(const Polynomial& g, const TriangularSet& s);

bool checkSetIdentity(const Polynomial& g, const TriangularSet& s, const SetPseudoResult& res);

/// Remainder component of setPseudoDivide.
Polynomial setRemainder(const Polynomial& g, const TriangularSet& s);

}  // namespace wuritt

#endif
