#include "dgkit/scalar.hpp"

#include <charconv>
#include <ostream>

namespace dgkit {

namespace {

bool is_prime(int p)
{
    if (p < 2)
        return false;
    for (int k = 2; k * k <= p; ++k)
        if (p % k == 0)
            return false;
    return true;
}

std::uint32_t reduce_mod(long v, std::uint32_t p)
{
    long r = v % static_cast<long>(p);
    if (r < 0)
        r += p;
    return static_cast<std::uint32_t>(r);
}

std::uint32_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t p)
{
    std::uint64_t result = 1;
    base %= p;
    while (exp) {
        if (exp & 1)
            result = result * base % p;
        base = base * base % p;
        exp >>= 1;
    }
    return static_cast<std::uint32_t>(result);
}

}  // namespace

Field Field::prime(int p)
{
    if (!is_prime(p) || p > 97)
        throw std::invalid_argument("Fp requires a prime p <= 97, got " + std::to_string(p));
    return Field(p);
}

Field Field::parse(const std::string& text)
{
    if (text == "Q")
        return rationals();
    if (text.rfind("Fp:", 0) == 0) {
        int p = 0;
        auto tail = text.substr(3);
        auto [ptr, ec] = std::from_chars(tail.data(), tail.data() + tail.size(), p);
        if (ec != std::errc() || ptr != tail.data() + tail.size())
            throw std::invalid_argument("bad field declaration: " + text);
        return prime(p);
    }
    throw std::invalid_argument("bad field declaration: " + text);
}

Scalar Field::zero() const { return of(0); }
Scalar Field::one() const { return of(1); }

Scalar Field::of(long value) const
{
    if (p_ == 0)
        return Scalar(mpq_class(value));
    return Scalar(Scalar::Residue{reduce_mod(value, p_), static_cast<std::uint32_t>(p_)});
}

Scalar Field::of(long num, long den) const
{
    if (den == 0)
        throw DivisionByZero();
    return of(num) / of(den);
}

Scalar Field::sign(long exponent) const { return of(exponent % 2 == 0 ? 1 : -1); }

std::string Field::to_string() const { return p_ == 0 ? "Q" : "Fp:" + std::to_string(p_); }

Field Scalar::field() const
{
    if (auto r = residue())
        return Field::prime(static_cast<int>(r->modulus));
    return Field::rationals();
}

bool Scalar::is_zero() const
{
    if (auto r = residue())
        return r->value == 0;
    return sgn(*rational()) == 0;
}

bool Scalar::is_one() const
{
    if (auto r = residue())
        return r->value == 1;
    return *rational() == 1;
}

Scalar Scalar::operator-() const
{
    if (auto r = residue())
        return Residue{r->value == 0 ? 0 : r->modulus - r->value, r->modulus};
    return Scalar(mpq_class(-*rational()));
}

Scalar Scalar::inverse() const
{
    if (is_zero())
        throw DivisionByZero();
    if (auto r = residue())
        return Residue{pow_mod(r->value, r->modulus - 2, r->modulus), r->modulus};
    return Scalar(mpq_class(1 / *rational()));
}

Scalar& Scalar::operator+=(const Scalar& b)
{
    if (value_.index() != b.value_.index())
        throw MixedFields();
    if (auto r = std::get_if<Residue>(&value_)) {
        auto s = *b.residue();
        if (s.modulus != r->modulus)
            throw MixedFields();
        r->value = (r->value + s.value) % r->modulus;
    }
    else {
        std::get<mpq_class>(value_) += *b.rational();
    }
    return *this;
}

Scalar& Scalar::operator-=(const Scalar& b) { return *this += -b; }

Scalar& Scalar::operator*=(const Scalar& b)
{
    if (value_.index() != b.value_.index())
        throw MixedFields();
    if (auto r = std::get_if<Residue>(&value_)) {
        auto s = *b.residue();
        if (s.modulus != r->modulus)
            throw MixedFields();
        r->value = static_cast<std::uint32_t>(std::uint64_t(r->value) * s.value % r->modulus);
    }
    else {
        std::get<mpq_class>(value_) *= *b.rational();
    }
    return *this;
}

bool operator==(const Scalar& a, const Scalar& b)
{
    if (a.value_.index() != b.value_.index())
        throw MixedFields();
    if (auto r = a.residue()) {
        if (r->modulus != b.residue()->modulus)
            throw MixedFields();
        return r->value == b.residue()->value;
    }
    return *a.rational() == *b.rational();
}

std::string Scalar::to_string() const
{
    if (auto r = residue())
        return std::to_string(r->value);
    const mpq_class& q = *rational();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

std::string Scalar::pretty() const
{
    if (auto r = residue())
        return std::to_string(r->value);
    return rational()->get_str();
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.pretty(); }

Scalar parse_scalar(const std::string& text, const Field& field)
{
    auto bad = [&] { return std::invalid_argument("malformed coefficient \"" + text + "\""); };
    if (text.empty())
        throw bad();
    auto slash = text.find('/');
    std::string num = text.substr(0, slash);
    std::string den = slash == std::string::npos ? "1" : text.substr(slash + 1);
    auto is_int = [](const std::string& s, bool allow_sign) {
        std::size_t i = 0;
        if (allow_sign && !s.empty() && (s[0] == '-' || s[0] == '+'))
            i = 1;
        if (i == s.size())
            return false;
        for (; i < s.size(); ++i)
            if (s[i] < '0' || s[i] > '9')
                return false;
        return true;
    };
    if (!is_int(num, true) || !is_int(den, false))
        throw bad();
    mpz_class n(num[0] == '+' ? num.substr(1) : num), d(den);
    if (d == 0)
        throw bad();
    if (field.is_rational())
        return Scalar(mpq_class(n, d));
    mpz_class p = field.characteristic();
    mpz_class nr = n % p, dr = d % p;
    if (dr == 0)
        throw DivisionByZero();
    return field.of(nr.get_si()) / field.of(dr.get_si());
}

}  // namespace dgkit
