// Command-line front end: pseudo-division, basic/characteristic sets,
// zero decomposition, finite-field verification, and geometry-style proving
// over polynomial system files.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include <wuritt/charset.hpp>
#include <wuritt/io.hpp>
#include <wuritt/pseudo.hpp>
#include <wuritt/triset.hpp>
#include <wuritt/zeroset.hpp>

namespace {

using namespace wuritt;

constexpr int kExitOk = 0;
constexpr int kExitPropertyFailed = 1;
constexpr int kExitUsage = 2;
constexpr int kExitInternal = 3;

struct GlobalOptions {
    bool json = false;
    std::uint64_t seed = 0;  // reserved for randomized tooling
    std::size_t maxIter = 10000;
    std::size_t maxDepth = 64;
};

SystemFile loadSystem(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw UsageError("cannot open file '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parseSystem(buf.str());
}

void emit(const Json& result, const GlobalOptions& opts) {
    if (opts.json)
        std::cout << result.dump(2) << "\n";
    else
        std::cout << renderResultText(result);
}

const Polynomial& polyAt(const SystemFile& sys, std::size_t idx, const char* what) {
    if (idx >= sys.polys.size())
        throw UsageError(std::string(what) + " index " + std::to_string(idx) +
                         " out of range (file has " + std::to_string(sys.polys.size()) +
                         " polynomials)");
    return sys.polys[idx];
}

int runPrem(const SystemFile& sys, std::size_t dividend, std::size_t divisor,
            const GlobalOptions& opts) {
    const Polynomial& g = polyAt(sys, dividend, "dividend");
    const Polynomial& f = polyAt(sys, divisor, "divisor");
    PseudoResult res = pseudoDivide(g, f);
    Json j = serializePseudo("prem", g, f, res);
    emit(j, opts);
    return j["identity_checked"].get<bool>() && j["remainder_reduced"].get<bool>()
               ? kExitOk
               : kExitPropertyFailed;
}

int runSetPrem(const SystemFile& sys, std::size_t dividend, const GlobalOptions& opts) {
    const Polynomial& g = polyAt(sys, dividend, "dividend");
    std::vector<Polynomial> rest;
    for (std::size_t i = 0; i < sys.polys.size(); ++i)
        if (i != dividend) rest.push_back(sys.polys[i]);
    TriangularSet s = rest.empty() ? TriangularSet::empty(sys.field, sys.order)
                                   : TriangularSet::make(std::move(rest));
    SetPseudoResult res = setPseudoDivide(g, s);
    Json j = serializeSetPseudo("setprem", g, s, res);
    emit(j, opts);
    return j["identity_checked"].get<bool>() && j["remainder_reduced"].get<bool>()
               ? kExitOk
               : kExitPropertyFailed;
}

int runBasicSet(const SystemFile& sys, const GlobalOptions& opts) {
    TriangularSet bs = basicSet(sys.polys);
    emit(serializeBasicSet(bs), opts);
    return kExitOk;
}

int runCharset(const SystemFile& sys, bool trace, const GlobalOptions& opts) {
    auto [cs, tr] = characteristicSet(sys.polys, {opts.maxIter});
    Json j = serializeCharset(cs, tr, trace, sys.polys);
    emit(j, opts);
    return j["remainders_zero"].get<bool>() ? kExitOk : kExitPropertyFailed;
}

int runZdecomp(const SystemFile& sys, bool noPrune, const GlobalOptions& opts) {
    DecomposeOptions dopts;
    dopts.pruneConstantBranches = !noPrune;
    dopts.maxDepth = opts.maxDepth;
    dopts.charset.maxIterations = opts.maxIter;
    ZeroDecomposition zd = zeroDecompose(sys.polys, dopts);
    Json j = serializeDecomposition(zd, sys.polys, dopts.pruneConstantBranches);
    emit(j, opts);
    for (const auto& comp : j["components"])
        if (!comp["remainders_zero"].get<bool>()) return kExitPropertyFailed;
    return kExitOk;
}

int runVerify(const SystemFile& sys, std::uint32_t primeFlag, const std::string& check,
              const GlobalOptions& opts) {
    bool doCharset = check.empty() || check == "charset";
    bool doEq1 = check.empty() || check == "eq1";
    bool doEq2 = check.empty() || check == "eq2";

    std::optional<ZeroOracle> oracle;
    if (sys.field.isPrimeField()) {
        if (primeFlag != 0 && primeFlag != sys.field.prime())
            throw UsageError("--prime " + std::to_string(primeFlag) +
                             " does not match the file's " + sys.field.name());
        oracle.emplace(sys.field, sys.order);
    } else if (primeFlag != 0) {
        throw UsageError("--prime is only meaningful for GF systems; this file is over QQ");
    }

    auto [cs, tr] = characteristicSet(sys.polys, {opts.maxIter});

    Json j = resultHeader("verify", sys.field, *sys.order);
    j["prime"] = oracle ? Json(sys.field.prime()) : Json(nullptr);
    j["charset"] = polyListJson(cs.members());
    Json checks = Json::array();
    bool allHold = true;

    if (doCharset) {
        Json c;
        c["name"] = "charset";
        bool cond1 = true;
        for (const auto& p : sys.polys)
            if (!setRemainder(p, cs).isZero()) cond1 = false;
        c["checked"] = true;
        c["condition_remainders"] = cond1;
        if (oracle) {
            PointSet zp = oracle->vanishingSet(sys.polys);
            PointSet zc = oracle->vanishingSet(cs);
            bool cond2 = zp.subsetOf(zc);
            c["condition_containment"] = cond2;
            c["holds"] = cond1 && cond2;
            auto witness = zp.firstNotIn(zc);
            c["counterexample"] = witness ? pointJson(*witness) : Json(nullptr);
            c["note"] = nullptr;
        } else {
            c["condition_containment"] = "not checked";
            c["holds"] = cond1;
            c["counterexample"] = nullptr;
            c["note"] = "containment not machine-checkable over QQ";
        }
        if (!c["holds"].get<bool>()) allHold = false;
        checks.push_back(std::move(c));
    }
    if (doEq1) {
        Json c;
        c["name"] = "eq1";
        if (oracle) {
            CheckResult r = checkEq1(*oracle, sys.polys, cs);
            c["checked"] = true;
            c["holds"] = r.holds;
            c["counterexample"] = r.counterexample ? pointJson(*r.counterexample) : Json(nullptr);
            c["note"] = nullptr;
            if (!r.holds) allHold = false;
        } else {
            c["checked"] = false;
            c["holds"] = nullptr;
            c["counterexample"] = nullptr;
            c["note"] = "not checked over QQ";
        }
        checks.push_back(std::move(c));
    }
    if (doEq2) {
        Json c;
        c["name"] = "eq2";
        if (oracle) {
            DecomposeOptions dopts;
            dopts.maxDepth = opts.maxDepth;
            dopts.charset.maxIterations = opts.maxIter;
            ZeroDecomposition zd = zeroDecompose(sys.polys, dopts);
            CheckResult r = checkEq2(*oracle, sys.polys, zd);
            c["checked"] = true;
            c["holds"] = r.holds;
            c["counterexample"] = r.counterexample ? pointJson(*r.counterexample) : Json(nullptr);
            c["note"] = nullptr;
            if (!r.holds) allHold = false;
        } else {
            c["checked"] = false;
            c["holds"] = nullptr;
            c["counterexample"] = nullptr;
            c["note"] = "not checked over QQ";
        }
        checks.push_back(std::move(c));
    }
    j["checks"] = checks;
    j["all_hold"] = allHold;
    emit(j, opts);
    return allHold ? kExitOk : kExitPropertyFailed;
}

int runProve(const SystemFile& sys, const GlobalOptions& opts) {
    if (!sys.conclusion)
        throw UsageError("prove needs a 'conclusion:' line in the system file");
    GeometricProof proof = proveGeometric(sys.polys, *sys.conclusion, {opts.maxIter});
    Json j = serializeProof(proof, *sys.conclusion);
    emit(j, opts);
    if (!j["witness"]["identity_checked"].get<bool>()) return kExitPropertyFailed;
    return proof.provedGenerically ? kExitOk : kExitPropertyFailed;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Wu-Ritt characteristic set toolkit: pseudo-division, triangular\n"
                 "decompositions, and finite-field verification of polynomial systems"};
    app.require_subcommand(1);
    app.fallthrough();

    GlobalOptions opts;
    app.add_flag("--json", opts.json, "structured JSON output");
    app.add_option("--seed", opts.seed, "reserved for randomized tooling");
    app.add_option("--max-iter", opts.maxIter, "characteristic-set iteration ceiling");
    app.add_option("--max-depth", opts.maxDepth, "zero-decomposition recursion ceiling");

    std::string file;
    std::size_t dividend = 0, divisor = 0;
    bool trace = false, noPrune = false;
    std::uint32_t prime = 0;
    std::string check;

    auto* prem = app.add_subcommand("prem", "pseudo-divide one polynomial by another");
    prem->add_option("file", file)->required();
    prem->add_option("--dividend", dividend, "0-based index into polys:")->required();
    prem->add_option("--divisor", divisor, "0-based index into polys:")->required();

    auto* setprem = app.add_subcommand("setprem",
                                       "pseudo-divide by the triangular set of the other polynomials");
    setprem->add_option("file", file)->required();
    setprem->add_option("--dividend", dividend, "0-based index into polys:")->required();

    auto* basicset = app.add_subcommand("basicset", "minimal ascending subset");
    basicset->add_option("file", file)->required();

    auto* charset = app.add_subcommand("charset", "characteristic set");
    charset->add_option("file", file)->required();
    charset->add_flag("--trace", trace, "include the per-iteration basic sets");

    auto* zdecomp = app.add_subcommand("zdecomp", "recursive zero decomposition");
    zdecomp->add_option("file", file)->required();
    zdecomp->add_flag("--no-prune", noPrune, "keep branches with constant adjoined initials");

    auto* verify = app.add_subcommand("verify", "enumerate F_p points and check the decompositions");
    verify->add_option("file", file)->required();
    verify->add_option("--prime", prime, "must match the file's GF modulus");
    verify->add_option("--check", check, "restrict to one check")
        ->check(CLI::IsMember({"eq1", "eq2", "charset"}));

    auto* prove = app.add_subcommand("prove", "generic truth of conclusion: under the hypotheses");
    prove->add_option("file", file)->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        SystemFile sys = loadSystem(file);
        if (prem->parsed()) return runPrem(sys, dividend, divisor, opts);
        if (setprem->parsed()) return runSetPrem(sys, dividend, opts);
        if (basicset->parsed()) return runBasicSet(sys, opts);
        if (charset->parsed()) return runCharset(sys, trace, opts);
        if (zdecomp->parsed()) return runZdecomp(sys, noPrune, opts);
        if (verify->parsed()) return runVerify(sys, prime, check, opts);
        if (prove->parsed()) return runProve(sys, opts);
        return kExitUsage;
    } catch (const CeilingError& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitInternal;
    } catch (const InternalError& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitInternal;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitInternal;
    }
}
