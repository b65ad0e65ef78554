#include <wuritt/coeff.hpp>

namespace wuritt {

bool isPrime(std::uint32_t n) {
    if (n < 2) return false;
    if (n % 2 == 0) return n == 2;
    for (std::uint64_t d = 3; d * d <= n; d += 2)
        if (n % d == 0) return false;
    return true;
}

Field Field::primeField(std::uint32_t p) {
    if (p >= (1u << 31))
        throw UsageError("prime field modulus must be < 2^31, got " + std::to_string(p));
    if (!isPrime(p))
        throw UsageError("prime field modulus must be prime, got " + std::to_string(p));
    return Field(FieldKind::PrimeField, p);
}

std::string Field::name() const {
    return isRationals() ? "QQ" : "GF " + std::to_string(m_prime);
}

namespace {

std::uint64_t addMod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
    std::uint64_t s = a + b;
    return s >= p ? s - p : s;
}

std::uint64_t subMod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
    return a >= b ? a - b : a + p - b;
}

std::uint64_t mulMod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
    // p < 2^31, so a*b < 2^62 fits in 64 bits.
    return (a * b) % p;
}

std::uint64_t invMod(std::uint64_t a, std::uint64_t p) {
    // extended Euclid on (a, p), a in [1, p)
    std::int64_t t = 0, newT = 1;
    std::int64_t r = static_cast<std::int64_t>(p), newR = static_cast<std::int64_t>(a);
    while (newR != 0) {
        std::int64_t q = r / newR;
        std::int64_t tmp = t - q * newT;
        t = newT;
        newT = tmp;
        tmp = r - q * newR;
        r = newR;
        newR = tmp;
    }
    if (t < 0) t += static_cast<std::int64_t>(p);
    return static_cast<std::uint64_t>(t);
}

std::uint64_t reduceMpz(const mpz_class& v, std::uint32_t p) {
    mpz_class r;
    mpz_fdiv_r_ui(r.get_mpz_t(), v.get_mpz_t(), p);  // floor remainder, in [0, p)
    return r.get_ui();
}

}  // namespace

Coeff Coeff::zero(const Field& f) { return Coeff(f); }

Coeff Coeff::one(const Field& f) {
    Coeff c(f);
    if (f.isRationals())
        c.m_rat = 1;
    else
        c.m_res = 1 % f.prime();
    return c;
}

Coeff Coeff::fromInteger(const Field& f, const mpz_class& v) {
    Coeff c(f);
    if (f.isRationals())
        c.m_rat = mpq_class(v);
    else
        c.m_res = reduceMpz(v, f.prime());
    return c;
}

Coeff Coeff::fromInteger(const Field& f, long v) { return fromInteger(f, mpz_class(v)); }

Coeff Coeff::rational(const mpz_class& num, const mpz_class& den) {
    if (den == 0) throw DivisionByZeroError("rational with zero denominator");
    Coeff c(Field::rationals());
    c.m_rat = mpq_class(num, den);
    c.m_rat.canonicalize();
    return c;
}

Coeff Coeff::residue(const Field& f, std::uint64_t r) {
    if (!f.isPrimeField()) throw UsageError("residue constructor needs a prime field");
    Coeff c(f);
    c.m_res = r % f.prime();
    return c;
}

bool Coeff::isZero() const {
    return m_field.isRationals() ? m_rat == 0 : m_res == 0;
}

bool Coeff::isOne() const {
    return m_field.isRationals() ? m_rat == 1 : m_res == 1 % m_field.prime();
}

void Coeff::requireSameField(const Coeff& o) const {
    if (m_field != o.m_field)
        throw UsageError("coefficient field mismatch: " + m_field.name() + " vs " +
                         o.m_field.name());
}

Coeff Coeff::operator+(const Coeff& o) const {
    requireSameField(o);
    Coeff c(m_field);
    if (m_field.isRationals())
        c.m_rat = m_rat + o.m_rat;
    else
        c.m_res = addMod(m_res, o.m_res, m_field.prime());
    return c;
}

Coeff Coeff::operator-(const Coeff& o) const {
    requireSameField(o);
    Coeff c(m_field);
    if (m_field.isRationals())
        c.m_rat = m_rat - o.m_rat;
    else
        c.m_res = subMod(m_res, o.m_res, m_field.prime());
    return c;
}

Coeff Coeff::operator*(const Coeff& o) const {
    requireSameField(o);
    Coeff c(m_field);
    if (m_field.isRationals())
        c.m_rat = m_rat * o.m_rat;
    else
        c.m_res = mulMod(m_res, o.m_res, m_field.prime());
    return c;
}

Coeff Coeff::operator/(const Coeff& o) const { return *this * o.inv(); }

Coeff Coeff::operator-() const {
    Coeff c(m_field);
    if (m_field.isRationals())
        c.m_rat = -m_rat;
    else
        c.m_res = m_res == 0 ? 0 : m_field.prime() - m_res;
    return c;
}

Coeff Coeff::inv() const {
    if (isZero()) throw DivisionByZeroError();
    Coeff c(m_field);
    if (m_field.isRationals())
        c.m_rat = 1 / m_rat;
    else
        c.m_res = invMod(m_res, m_field.prime());
    return c;
}

Coeff Coeff::pow(std::uint32_t e) const {
    Coeff acc = one(m_field);
    Coeff base = *this;
    while (e) {
        if (e & 1) acc = acc * base;
        base = base * base;
        e >>= 1;
    }
    return acc;
}

bool Coeff::operator==(const Coeff& o) const {
    if (m_field != o.m_field) return false;
    return m_field.isRationals() ? m_rat == o.m_rat : m_res == o.m_res;
}

std::strong_ordering Coeff::cmp(const Coeff& o) const {
    requireSameField(o);
    if (m_field.isRationals()) {
        int c = ::cmp(m_rat, o.m_rat);
        return c < 0   ? std::strong_ordering::less
               : c > 0 ? std::strong_ordering::greater
                       : std::strong_ordering::equal;
    }
    return m_res <=> o.m_res;
}

std::string Coeff::str() const {
    if (m_field.isRationals()) {
        if (m_rat.get_den() == 1) return m_rat.get_num().get_str();
        return m_rat.get_num().get_str() + "/" + m_rat.get_den().get_str();
    }
    return std::to_string(m_res);
}

const mpq_class& Coeff::rationalValue() const {
    if (!m_field.isRationals()) throw UsageError("rationalValue on a prime-field element");
    return m_rat;
}

std::uint64_t Coeff::residueValue() const {
    if (!m_field.isPrimeField()) throw UsageError("residueValue on a rational element");
    return m_res;
}

}  // namespace wuritt
