#include "hopfaz/scalar.hpp"

#include <cctype>
#include <charconv>
#include <stdexcept>

#include "hopfaz/error.hpp"

namespace hopfaz {

namespace {

bool is_prime(std::uint64_t p)
{
    if (p < 2) return false;
    for (std::uint64_t d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

std::uint64_t reduce(long long v, std::uint64_t p)
{
    long long r = v % static_cast<long long>(p);
    if (r < 0) r += static_cast<long long>(p);
    return static_cast<std::uint64_t>(r);
}

std::uint64_t reduce(const mpz_class& v, std::uint64_t p)
{
    mpz_class r = v % p;
    if (r < 0) r += p;
    return r.get_ui();
}

// Fermat inverse; p prime.
std::uint64_t inverse_mod(std::uint64_t a, std::uint64_t p)
{
    std::uint64_t result = 1, base = a % p, e = p - 2;
    while (e) {
        if (e & 1) result = result * base % p;
        base = base * base % p;
        e >>= 1;
    }
    return result;
}

} // namespace

Field Field::prime(std::uint64_t p)
{
    if (p == 2) throw std::invalid_argument("characteristic 2 is not supported");
    if (p > 0xFFFFFFFFull || !is_prime(p))
        throw std::invalid_argument("prime field modulus must be an odd prime below 2^32, got " + std::to_string(p));
    return Field(p);
}

Field Field::parse(std::string_view spec)
{
    if (spec == "rational" || spec == "Q") return rational();
    constexpr std::string_view prefix = "prime:";
    if (spec.substr(0, prefix.size()) == prefix) {
        auto digits = spec.substr(prefix.size());
        std::uint64_t p = 0;
        auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), p);
        if (ec != std::errc() || ptr != digits.data() + digits.size())
            throw std::invalid_argument("malformed field spec '" + std::string(spec) + "'");
        return prime(p);
    }
    throw std::invalid_argument("unknown field spec '" + std::string(spec) + "' (expected rational or prime:p)");
}

std::string Field::to_string() const
{
    return is_rational() ? "rational" : "prime:" + std::to_string(modulus_);
}

Scalar Field::zero() const { return from_int(0); }
Scalar Field::one() const { return from_int(1); }

Scalar Field::from_int(long long v) const
{
    if (is_rational()) return Scalar(mpq_class(static_cast<long>(v)));
    return Scalar(Scalar::Residue{reduce(v, modulus_), modulus_});
}

Scalar Field::from_fraction(long long num, long long den) const
{
    if (den == 0) throw std::domain_error("zero denominator");
    return from_int(num) / from_int(den);
}

Scalar Field::from_rational(const mpq_class& q) const
{
    if (is_rational()) return Scalar(q);
    std::uint64_t den = reduce(q.get_den(), modulus_);
    if (den == 0)
        throw std::domain_error("denominator of " + q.get_str() + " vanishes modulo " + std::to_string(modulus_));
    std::uint64_t num = reduce(q.get_num(), modulus_);
    return Scalar(Scalar::Residue{num * inverse_mod(den, modulus_) % modulus_, modulus_});
}

Scalar Field::parse_scalar(std::string_view text) const
{
    std::string s(text);
    auto trim = [](std::string& t) {
        auto b = t.find_first_not_of(" \t");
        auto e = t.find_last_not_of(" \t");
        t = b == std::string::npos ? std::string() : t.substr(b, e - b + 1);
    };
    trim(s);
    if (s.empty()) throw std::invalid_argument("empty scalar");
    if (s.front() == '+') s.erase(0, 1);
    for (char ch : s) {
        if (!(std::isdigit(static_cast<unsigned char>(ch)) || ch == '-' || ch == '/'))
            throw std::invalid_argument("malformed scalar '" + std::string(text) + "' (expected integer or a/b)");
    }
    mpq_class q;
    if (q.set_str(s, 10) != 0) throw std::invalid_argument("malformed scalar '" + std::string(text) + "'");
    if (q.get_den() == 0) throw std::domain_error("zero denominator in '" + std::string(text) + "'");
    q.canonicalize();
    return from_rational(q);
}

Field Scalar::field() const
{
    if (auto r = std::get_if<Residue>(&value_)) return Field(r->modulus);
    return Field::rational();
}

bool Scalar::is_zero() const
{
    if (auto r = std::get_if<Residue>(&value_)) return r->value == 0;
    return sgn(std::get<mpq_class>(value_)) == 0;
}

bool Scalar::is_one() const
{
    if (auto r = std::get_if<Residue>(&value_)) return r->value == 1;
    return std::get<mpq_class>(value_) == 1;
}

const mpq_class& Scalar::rational() const
{
    if (auto q = std::get_if<mpq_class>(&value_)) return *q;
    throw FieldMismatch("scalar is not rational");
}

std::uint64_t Scalar::residue() const
{
    if (auto r = std::get_if<Residue>(&value_)) return r->value;
    throw FieldMismatch("scalar is not a prime-field residue");
}

std::string Scalar::to_string() const
{
    if (auto r = std::get_if<Residue>(&value_)) return std::to_string(r->value);
    return std::get<mpq_class>(value_).get_str();
}

void Scalar::check_same_field(const Scalar& o) const
{
    if (value_.index() != o.value_.index()) throw FieldMismatch("mixing rational and prime-field scalars");
    if (auto r = std::get_if<Residue>(&value_)) {
        if (r->modulus != std::get<Residue>(o.value_).modulus) throw FieldMismatch("mixing prime fields");
    }
}

Scalar Scalar::inverse() const
{
    if (is_zero()) throw std::domain_error("inverse of zero");
    if (auto r = std::get_if<Residue>(&value_)) return Scalar(Residue{inverse_mod(r->value, r->modulus), r->modulus});
    mpq_class q = 1 / std::get<mpq_class>(value_);
    return Scalar(std::move(q));
}

Scalar& Scalar::operator+=(const Scalar& o)
{
    check_same_field(o);
    if (auto r = std::get_if<Residue>(&value_)) {
        r->value = (r->value + std::get<Residue>(o.value_).value) % r->modulus;
    } else {
        std::get<mpq_class>(value_) += std::get<mpq_class>(o.value_);
    }
    return *this;
}

Scalar& Scalar::operator-=(const Scalar& o)
{
    check_same_field(o);
    if (auto r = std::get_if<Residue>(&value_)) {
        r->value = (r->value + r->modulus - std::get<Residue>(o.value_).value) % r->modulus;
    } else {
        std::get<mpq_class>(value_) -= std::get<mpq_class>(o.value_);
    }
    return *this;
}

Scalar& Scalar::operator*=(const Scalar& o)
{
    check_same_field(o);
    if (auto r = std::get_if<Residue>(&value_)) {
        r->value = r->value * std::get<Residue>(o.value_).value % r->modulus;
    } else {
        std::get<mpq_class>(value_) *= std::get<mpq_class>(o.value_);
    }
    return *this;
}

Scalar& Scalar::operator/=(const Scalar& o)
{
    check_same_field(o);
    if (o.is_zero()) throw std::domain_error("division by zero");
    if (auto r = std::get_if<Residue>(&value_)) {
        r->value = r->value * inverse_mod(std::get<Residue>(o.value_).value, r->modulus) % r->modulus;
    } else {
        std::get<mpq_class>(value_) /= std::get<mpq_class>(o.value_);
    }
    return *this;
}

Scalar Scalar::operator-() const
{
    if (auto r = std::get_if<Residue>(&value_)) return Scalar(Residue{(r->modulus - r->value) % r->modulus, r->modulus});
    mpq_class q = -std::get<mpq_class>(value_);
    return Scalar(std::move(q));
}

bool operator==(const Scalar& a, const Scalar& b)
{
    if (a.value_.index() != b.value_.index()) return false;
    if (auto r = std::get_if<Scalar::Residue>(&a.value_)) {
        const auto& o = std::get<Scalar::Residue>(b.value_);
        return r->modulus == o.modulus && r->value == o.value;
    }
    return std::get<mpq_class>(a.value_) == std::get<mpq_class>(b.value_);
}

} // namespace hopfaz
