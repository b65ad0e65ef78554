#ifndef WURITT_CHARSET_HPP
#define WURITT_CHARSET_HPP

#include <cstdint>
#include <utility>
#include <vector>

#include <wuritt/pseudo.hpp>
#include <wuritt/triset.hpp>

namespace wuritt {

class ZeroOracle;

struct CharsetIteration {
    TriangularSet basicSet;
    std::size_t nonzeroRemainderCount;
};

/// Termination witness: the basic sets recorded across iterations strictly
/// decrease under triCompare, and the final iteration produced no nonzero
/// remainders.
struct CharsetTrace {
    std::vector<CharsetIteration> iterations;
};

struct CharsetOptions {
    std::size_t maxIterations = 10000;
};

/// Fixed point of: take the basic set, pseudo-reduce everything else by it,
/// adjoin the nonzero remainders, repeat. The result CS has
/// setRemainder(p, CS) = 0 for every input p.
std::pair<TriangularSet, CharsetTrace> characteristicSet(const std::vector<Polynomial>& ps,
                                                         const CharsetOptions& opts = {});

/// Product of the members' initials; 1 for the empty set.
Polynomial initialProd(const TriangularSet& s);

/// Both conditions of the characteristic-set contract: zero remainders
/// (exact) and zero-set containment (checked by exhaustive enumeration, so
/// the oracle must be over a prime field).
bool isCharacteristicSet(const TriangularSet& cs, const std::vector<Polynomial>& ps,
                         const ZeroOracle& oracle);

/// One application of the well-ordering principle: the quasi-component
/// (CS away from the zeros of its initial product) plus one recursion branch
/// per nonconstant member, adjoining that member's initial.
struct WellOrderingSplit {
    TriangularSet cs;
    Polynomial initialProduct;
    std::vector<std::vector<Polynomial>> branches;  // initial(p), CS..., PS...
};

WellOrderingSplit wellOrderingSplit(const std::vector<Polynomial>& ps, const TriangularSet& cs);

struct ZeroComponent {
    TriangularSet set;
    std::vector<Polynomial> adjoinedInitials;  // recursion path that led here
};

/// Components in depth-first order: each characteristic set precedes its
/// branch descendants, branches in member order.
struct ZeroDecomposition {
    std::vector<ZeroComponent> components;
};

struct DecomposeOptions {
    /// Skip branches whose adjoined initial is a nonzero constant; their
    /// zero sets are empty. Off reproduces the unpruned recursion.
    bool pruneConstantBranches = true;
    std::size_t maxDepth = 64;
    CharsetOptions charset;
};

ZeroDecomposition zeroDecompose(const std::vector<Polynomial>& ps,
                                const DecomposeOptions& opts = {});

/// Wu's theorem-proving mode: the conclusion holds on the hypotheses' zero
/// set wherever no nondegeneracy initial vanishes, certified by the set
/// pseudo-division witness.
struct GeometricProof {
    bool provedGenerically;
    std::vector<Polynomial> nondegeneracyConditions;  // nonconstant initials of the charset
    SetPseudoResult witness;
    TriangularSet charset;
};

GeometricProof proveGeometric(const std::vector<Polynomial>& hyps, const Polynomial& conclusion,
                              const CharsetOptions& opts = {});

}  // namespace wuritt

#endif
