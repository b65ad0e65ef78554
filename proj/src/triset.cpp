#include <wuritt/triset.hpp>

#include <algorithm>

namespace wuritt {

TriangularSet TriangularSet::make(std::vector<Polynomial> members) {
    if (members.empty())
        throw UsageError("empty triangular set needs an explicit field and variable order");
    Field f = members[0].field();
    VarOrderPtr order = members[0].order();
    std::optional<std::size_t> prev;
    bool first = true;
    for (std::size_t i = 0; i < members.size(); ++i) {
        members[i].requireSameContext(members[0]);
        if (members[i].isZero())
            throw UsageError("triangular set member " + std::to_string(i) + " is zero");
        auto mv = members[i].mainVariable();
        if (!first) {
            bool increasing = mv && (!prev || *mv > *prev);
            if (!increasing)
                throw UsageError("triangular set member " + std::to_string(i) +
                                 " does not strictly increase the main variable");
        }
        prev = mv;
        first = false;
    }
    return TriangularSet(f, std::move(order), std::move(members));
}

TriangularSet TriangularSet::empty(const Field& f, VarOrderPtr order) {
    return TriangularSet(f, std::move(order), {});
}

bool TriangularSet::containsNonzeroConstant() const {
    for (const auto& p : m_members)
        if (p.isConstant()) return true;  // members are nonzero by invariant
    return false;
}

std::vector<RankKey> TriangularSet::orderKey() const {
    std::vector<RankKey> ranks;
    ranks.reserve(m_members.size());
    for (const auto& p : m_members) ranks.push_back(p.rank());
    return ranks;
}

bool TriangularSet::operator==(const TriangularSet& o) const {
    if (m_members.size() != o.m_members.size()) return false;
    for (std::size_t i = 0; i < m_members.size(); ++i)
        if (m_members[i] != o.m_members[i]) return false;
    return true;
}

bool reducedToSet(const Polynomial& q, const TriangularSet& s) {
    for (const auto& p : s.members())
        if (!reducedTo(q, p)) return false;
    return true;
}

std::weak_ordering triCompare(const TriangularSet& s, const TriangularSet& t) {
    if (s.field() != t.field() || !(s.order() == t.order() || *s.order() == *t.order()))
        throw UsageError("triangular sets over different contexts are not comparable");
    const auto& a = s.members();
    const auto& b = t.members();
    std::size_t n = std::min(a.size(), b.size());
    for (std::size_t i = 0; i < n; ++i) {
        auto c = rankCompare(a[i], b[i]);
        if (c != std::weak_ordering::equivalent) return c;
    }
    if (a.size() == b.size()) return std::weak_ordering::equivalent;
    // missing positions count as Top, so the longer set is smaller
    return a.size() > b.size() ? std::weak_ordering::less : std::weak_ordering::greater;
}

bool isAscending(const TriangularSet& s) {
    const auto& m = s.members();
    for (std::size_t i = 0; i < m.size(); ++i)
        for (std::size_t j = i + 1; j < m.size(); ++j)
            if (!reducedTo(m[j], m[i])) return false;
    return true;
}

bool initialsReduced(const TriangularSet& s) {
    for (const auto& p : s.members()) {
        if (p.isConstant()) continue;
        if (!reducedToSet(p.initial(), s)) return false;
    }
    return true;
}

Polynomial normalizePrimitive(const Polynomial& p) {
    if (p.isZero()) return p;
    if (p.field().isPrimeField()) {
        const Coeff& lead = p.terms().front().second;
        return p.scale(lead.inv());
    }
    // rationals: clear denominators, strip integer content, positive lead
    mpz_class denLcm = 1;
    for (const auto& [mono, coeff] : p.terms())
        mpz_lcm(denLcm.get_mpz_t(), denLcm.get_mpz_t(), coeff.rationalValue().get_den().get_mpz_t());
    mpz_class numGcd = 0;
    for (const auto& [mono, coeff] : p.terms()) {
        mpz_class n = coeff.rationalValue().get_num() * (denLcm / coeff.rationalValue().get_den());
        mpz_gcd(numGcd.get_mpz_t(), numGcd.get_mpz_t(), n.get_mpz_t());
    }
    mpq_class scale(denLcm, numGcd);
    scale.canonicalize();
    if (p.terms().front().second.rationalValue() < 0) scale = -scale;
    return p.scale(Coeff::rational(scale.get_num(), scale.get_den()));
}

std::vector<Polynomial> dedupNormalized(const std::vector<Polynomial>& ps) {
    std::vector<Polynomial> out;
    out.reserve(ps.size());
    for (const auto& p : ps) {
        if (p.isZero()) continue;
        Polynomial n = normalizePrimitive(p);
        bool seen = false;
        for (const auto& q : out)
            if (q == n) {
                seen = true;
                break;
            }
        if (!seen) out.push_back(std::move(n));
    }
    return out;
}

namespace {

// rank, then fewer terms, then canonical comparison
bool extractionPrefers(const Polynomial& a, const Polynomial& b) {
    auto rc = rankCompare(a, b);
    if (rc != std::weak_ordering::equivalent) return rc == std::weak_ordering::less;
    if (a.termCount() != b.termCount()) return a.termCount() < b.termCount();
    return canonicalCompare(a, b) == std::strong_ordering::less;
}

}  // namespace

TriangularSet basicSet(const std::vector<Polynomial>& ps) {
    std::vector<Polynomial> pool = dedupNormalized(ps);
    if (pool.empty()) throw UsageError("basic set of an empty or all-zero polynomial list");

    std::vector<Polynomial> chosen;
    const Polynomial* best = nullptr;
    for (const auto& p : pool)
        if (!best || extractionPrefers(p, *best)) best = &p;
    chosen.push_back(*best);

    while (!chosen.back().isConstant()) {
        std::size_t lastVar = *chosen.back().mainVariable();
        const Polynomial* next = nullptr;
        for (const auto& p : pool) {
            auto mv = p.mainVariable();
            if (!mv || *mv <= lastVar) continue;
            bool reduced = true;
            for (const auto& b : chosen)
                if (!reducedTo(p, b)) {
                    reduced = false;
                    break;
                }
            if (!reduced) continue;
            if (!next || extractionPrefers(p, *next)) next = &p;
        }
        if (!next) break;
        chosen.push_back(*next);
    }
    return TriangularSet::make(std::move(chosen));
}

}  // namespace wuritt
