#pragma once

#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <variant>

#include <gmpxx.h>

namespace dgkit {

struct DivisionByZero : std::domain_error {
    DivisionByZero() : std::domain_error("division by zero") {}
};

struct MixedFields : std::invalid_argument {
    MixedFields() : std::invalid_argument("scalars belong to different fields") {}
};

class Scalar;

/// The coefficient field: either Q (characteristic 0) or F_p for a prime p <= 97.
class Field {
public:
    static Field rationals() { return Field(0); }
    static Field prime(int p);
    /// Parses "Q" or "Fp:<p>".
    static Field parse(const std::string& text);

    int characteristic() const { return p_; }
    bool is_rational() const { return p_ == 0; }

    Scalar zero() const;
    Scalar one() const;
    Scalar of(long value) const;
    Scalar of(long num, long den) const;
    /// (-1)^exponent as a field element.
    Scalar sign(long exponent) const;

    std::string to_string() const;

    friend bool operator==(const Field&, const Field&) = default;

private:
    explicit Field(int p) : p_(p) {}
    int p_ = 0;
};

/// Exact field element. Rationals are kept in lowest terms (mpq canonical form);
/// residues lie in [0, p).
class Scalar {
public:
    struct Residue {
        std::uint32_t value;
        std::uint32_t modulus;
        friend bool operator==(const Residue&, const Residue&) = default;
    };

    Scalar() : value_(mpq_class(0)) {}
    explicit Scalar(mpq_class q) : value_(std::move(q)) { std::get<mpq_class>(value_).canonicalize(); }
    Scalar(Residue r) : value_(r) {}

    Field field() const;
    bool is_zero() const;
    bool is_one() const;

    Scalar operator-() const;
    Scalar inverse() const;
    Scalar& operator+=(const Scalar& b);
    Scalar& operator-=(const Scalar& b);
    Scalar& operator*=(const Scalar& b);
    Scalar& operator/=(const Scalar& b) { return *this *= b.inverse(); }

    friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
    friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
    friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
    friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
    friend bool operator==(const Scalar& a, const Scalar& b);

    const mpq_class* rational() const { return std::get_if<mpq_class>(&value_); }
    const Residue* residue() const { return std::get_if<Residue>(&value_); }

    /// "p/q" for rationals (always with a denominator), decimal residue otherwise.
    std::string to_string() const;
    /// Shorter display form ("3", "-1/2").
    std::string pretty() const;

private:
    std::variant<mpq_class, Residue> value_;
};

std::ostream& operator<<(std::ostream& os, const Scalar& s);

/// Parses "p/q", "p" or "-p/q" into a scalar of the given field.
Scalar parse_scalar(const std::string& text, const Field& field);

}  // namespace dgkit
