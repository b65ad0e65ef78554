#include <wuritt/charset.hpp>

#include <algorithm>

#include <wuritt/zeroset.hpp>

namespace wuritt {

namespace {

bool containsPoly(const std::vector<Polynomial>& ps, const Polynomial& p) {
    for (const auto& q : ps)
        if (q == p) return true;
    return false;
}

void requireNonemptyWithNonzero(const std::vector<Polynomial>& ps, const char* what) {
    for (const auto& p : ps)
        if (!p.isZero()) return;
    throw UsageError(std::string(what) + " needs at least one nonzero polynomial");
}

}  // namespace

std::pair<TriangularSet, CharsetTrace> characteristicSet(const std::vector<Polynomial>& ps,
                                                         const CharsetOptions& opts) {
    requireNonemptyWithNonzero(ps, "characteristic set");
    const std::vector<Polynomial> base = dedupNormalized(ps);

    CharsetTrace trace;
    std::vector<Polynomial> pool = base;
    for (std::size_t iter = 0; iter < opts.maxIterations; ++iter) {
        TriangularSet bs = basicSet(pool);
        if (!trace.iterations.empty() &&
            triCompare(bs, trace.iterations.back().basicSet) != std::weak_ordering::less)
            throw InternalError("basic set failed to strictly decrease across iterations");

        std::vector<Polynomial> remainders;
        for (const auto& p : pool) {
            if (containsPoly(bs.members(), p)) continue;
            Polynomial r = setRemainder(p, bs);
            if (!r.isZero()) remainders.push_back(std::move(r));
        }
        trace.iterations.push_back({bs, remainders.size()});
        if (remainders.empty()) return {std::move(bs), std::move(trace)};

        std::vector<Polynomial> next = base;
        next.insert(next.end(), remainders.begin(), remainders.end());
        next.insert(next.end(), bs.members().begin(), bs.members().end());
        pool = dedupNormalized(next);
    }
    throw CeilingError("characteristic set exceeded " + std::to_string(opts.maxIterations) +
                       " iterations; this indicates a bug, not bad input");
}

Polynomial initialProd(const TriangularSet& s) {
    Polynomial prod = Polynomial::constant(s.field(), s.order(), 1);
    for (const auto& p : s.members()) prod = prod * p.initial();
    return prod;
}

bool isCharacteristicSet(const TriangularSet& cs, const std::vector<Polynomial>& ps,
                         const ZeroOracle& oracle) {
    for (const auto& p : ps)
        if (!setRemainder(p, cs).isZero()) return false;
    return oracle.vanishingSet(ps).subsetOf(oracle.vanishingSet(cs));
}

WellOrderingSplit wellOrderingSplit(const std::vector<Polynomial>& ps, const TriangularSet& cs) {
    WellOrderingSplit out{cs, initialProd(cs), {}};
    for (const auto& p : cs.members()) {
        if (p.isConstant()) continue;
        std::vector<Polynomial> branch;
        branch.reserve(1 + cs.size() + ps.size());
        branch.push_back(p.initial());
        branch.insert(branch.end(), cs.members().begin(), cs.members().end());
        branch.insert(branch.end(), ps.begin(), ps.end());
        out.branches.push_back(std::move(branch));
    }
    return out;
}

namespace {

void decomposeInto(const std::vector<Polynomial>& ps, const DecomposeOptions& opts,
                   std::vector<Polynomial>& pathInitials, std::size_t depth,
                   ZeroDecomposition& out) {
    if (depth > opts.maxDepth)
        throw CeilingError("zero decomposition exceeded recursion depth " +
                           std::to_string(opts.maxDepth) + "; this indicates a bug");

    auto [cs, trace] = characteristicSet(ps, opts.charset);
    out.components.push_back({cs, pathInitials});
    if (cs.containsNonzeroConstant()) return;

    WellOrderingSplit split = wellOrderingSplit(ps, cs);
    std::size_t branchIdx = 0;
    for (const auto& p : cs.members()) {
        if (p.isConstant()) continue;
        const std::vector<Polynomial>& branch = split.branches[branchIdx++];
        Polynomial init = p.initial();
        if (opts.pruneConstantBranches && init.isConstant()) continue;  // empty zero set
        pathInitials.push_back(init);
        decomposeInto(branch, opts, pathInitials, depth + 1, out);
        pathInitials.pop_back();
    }
}

}  // namespace

ZeroDecomposition zeroDecompose(const std::vector<Polynomial>& ps, const DecomposeOptions& opts) {
    requireNonemptyWithNonzero(ps, "zero decomposition");
    ZeroDecomposition out;
    std::vector<Polynomial> path;
    decomposeInto(ps, opts, path, 0, out);
    return out;
}

GeometricProof proveGeometric(const std::vector<Polynomial>& hyps, const Polynomial& conclusion,
                              const CharsetOptions& opts) {
    auto [cs, trace] = characteristicSet(hyps, opts);
    SetPseudoResult witness = setPseudoDivide(conclusion, cs);
    std::vector<Polynomial> nondegeneracy;
    for (const auto& p : cs.members()) {
        Polynomial init = p.initial();
        if (!init.isConstant()) nondegeneracy.push_back(std::move(init));
    }
    bool proved = witness.remainder.isZero();
    return {proved, std::move(nondegeneracy), std::move(witness), std::move(cs)};
}

}  // namespace wuritt
