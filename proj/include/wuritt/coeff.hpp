#ifndef WURITT_COEFF_HPP
#define WURITT_COEFF_HPP

#include <compare>
#include <cstdint>
#include <string>

#include <gmpxx.h>

#include <wuritt/errors.hpp>

namespace wuritt {

enum class FieldKind : std::uint8_t { Rationals, PrimeField };

/// Coefficient field descriptor: the rationals, or F_p for a prime p < 2^31.
class Field {
public:
    static Field rationals() { return Field(FieldKind::Rationals, 0); }

    /// Constructs F_p. Primality is checked eagerly by trial division;
    /// p must satisfy 2 <= p < 2^31 so products fit 64-bit intermediates.
    static Field primeField(std::uint32_t p);

    FieldKind kind() const noexcept { return m_kind; }
    bool isRationals() const noexcept { return m_kind == FieldKind::Rationals; }
    bool isPrimeField() const noexcept { return m_kind == FieldKind::PrimeField; }

    /// The modulus; only meaningful for PrimeField.
    std::uint32_t prime() const { return m_prime; }

    std::string name() const;

    friend bool operator==(const Field&, const Field&) = default;

private:
    Field(FieldKind k, std::uint32_t p) : m_kind(k), m_prime(p) {}

    FieldKind m_kind;
    std::uint32_t m_prime;
};

bool isPrime(std::uint32_t n);

/// Exact field element in canonical form: a reduced fraction with positive
/// denominator over the rationals, or a representative in [0, p) over F_p.
/// Values are immutable; every operation is pure.
class Coeff {
public:
    static Coeff zero(const Field& f);
    static Coeff one(const Field& f);
    static Coeff fromInteger(const Field& f, const mpz_class& v);
    static Coeff fromInteger(const Field& f, long v);
    /// Rationals only; den must be nonzero. Reduced on construction.
    static Coeff rational(const mpz_class& num, const mpz_class& den);
    /// Prime field only; r is reduced mod p.
    static Coeff residue(const Field& f, std::uint64_t r);

    const Field& field() const noexcept { return m_field; }
    bool isZero() const;
    bool isOne() const;

    Coeff operator+(const Coeff& o) const;
    Coeff operator-(const Coeff& o) const;
    Coeff operator*(const Coeff& o) const;
    Coeff operator/(const Coeff& o) const;
    Coeff operator-() const;

    /// Multiplicative inverse; zero throws DivisionByZeroError.
    Coeff inv() const;
    Coeff pow(std::uint32_t e) const;

    bool operator==(const Coeff& o) const;
    bool operator!=(const Coeff& o) const { return !(*this == o); }

    /// Total order on values of one field (rationals by value, F_p by
    /// canonical representative). Used for deterministic tie-breaking.
    std::strong_ordering cmp(const Coeff& o) const;

    /// Textual form: `a/b` or `a` for rationals, decimal in [0, p) for F_p.
    std::string str() const;

    const mpq_class& rationalValue() const;
    std::uint64_t residueValue() const;

private:
    explicit Coeff(const Field& f) : m_field(f), m_rat(0), m_res(0) {}

    void requireSameField(const Coeff& o) const;

    Field m_field;
    mpq_class m_rat;       // Rationals payload
    std::uint64_t m_res;   // PrimeField payload, in [0, p)
};

}  // namespace wuritt

#endif
