#pragma once

#include <compare>
#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>
#include <variant>

#include <gmpxx.h>

namespace hopfaz {

class Scalar;

/// The exact field a computation runs over: the rationals, or F_p for an odd prime p.
/// Characteristic 2 is rejected because E(n) and its Clifford extensions need 1/2.
class Field {
public:
    static Field rational() { return Field(0); }
    /// Throws std::invalid_argument unless p is an odd prime that fits in 32 bits.
    static Field prime(std::uint64_t p);
    /// Parses "rational" or "prime:p".
    static Field parse(std::string_view spec);

    bool is_rational() const { return modulus_ == 0; }
    std::uint64_t modulus() const { return modulus_; }
    std::string to_string() const;

    Scalar zero() const;
    Scalar one() const;
    Scalar from_int(long long v) const;
    /// num/den reduced into the field; den must be invertible.
    Scalar from_fraction(long long num, long long den) const;
    Scalar from_rational(const mpq_class& q) const;
    /// Accepts "7", "-3", "a/b"; residues are reduced modulo p.
    Scalar parse_scalar(std::string_view text) const;

    friend bool operator==(const Field&, const Field&) = default;

private:
    friend class Scalar;
    explicit Field(std::uint64_t p) : modulus_(p) {}
    std::uint64_t modulus_;
};

/// An exact field element. Rationals are kept canonical (lowest terms, positive
/// denominator) by GMP; prime-field elements are residues in [0, p).
class Scalar {
public:
    /// Rational zero.
    Scalar() : value_(mpq_class(0)) {}

    Field field() const;
    bool is_zero() const;
    bool is_one() const;
    Scalar inverse() const;

    /// Only valid for rational scalars.
    const mpq_class& rational() const;
    std::uint64_t residue() const;
    std::string to_string() const;

    Scalar& operator+=(const Scalar& o);
    Scalar& operator-=(const Scalar& o);
    Scalar& operator*=(const Scalar& o);
    Scalar& operator/=(const Scalar& o);
    Scalar operator-() const;

    friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
    friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
    friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
    friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
    friend bool operator==(const Scalar& a, const Scalar& b);
    friend std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.to_string(); }

private:
    friend class Field;
    struct Residue {
        std::uint64_t value;
        std::uint64_t modulus;
    };
    explicit Scalar(mpq_class q) : value_(std::move(q)) {}
    explicit Scalar(Residue r) : value_(r) {}

    void check_same_field(const Scalar& o) const;

    std::variant<mpq_class, Residue> value_;
};

} // namespace hopfaz
