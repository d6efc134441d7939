#pragma once

// Scalar coefficient domains: arbitrary-precision rationals and integers
// (GMP-backed) and prime fields with a runtime modulus.

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace dyndeg {

using Integer = mpz_class;
using Rational = mpq_class;

/// Thrown when two operands live in different coefficient domains
/// (different prime moduli, or polynomials over different variable sets).
class DomainMismatch : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Parses "17", "-3/4", "+2" into a canonical rational. Throws
/// std::invalid_argument on malformed input or a zero denominator.
Rational parse_rational(std::string_view text);

std::string to_string(Rational const& q);
std::string to_string(Integer const& z);

bool is_probable_prime(std::uint64_t n);

/// Element of Z/pZ. The modulus travels with the value so that mixing
/// elements of different fields is detected at runtime.
class Zp {
public:
    static constexpr std::uint64_t max_modulus = std::uint64_t{1} << 62;

    Zp() = default;
    Zp(std::int64_t value, std::uint64_t modulus);
    static Zp from_integer(Integer const& value, std::uint64_t modulus);

    std::uint64_t value() const noexcept { return value_; }
    std::uint64_t modulus() const noexcept { return modulus_; }
    bool is_zero() const noexcept { return value_ == 0; }

    Zp inverse() const;
    Zp pow(std::uint64_t e) const;

    Zp& operator+=(Zp const& o);
    Zp& operator-=(Zp const& o);
    Zp& operator*=(Zp const& o);
    Zp& operator/=(Zp const& o) { return *this *= o.inverse(); }

    friend Zp operator+(Zp a, Zp const& b) { return a += b; }
    friend Zp operator-(Zp a, Zp const& b) { return a -= b; }
    friend Zp operator*(Zp a, Zp const& b) { return a *= b; }
    friend Zp operator/(Zp a, Zp const& b) { return a /= b; }
    Zp operator-() const noexcept { return negated(); }

    friend bool operator==(Zp const& a, Zp const& b) noexcept {
        return a.value_ == b.value_ && a.modulus_ == b.modulus_;
    }

private:
    Zp negated() const noexcept;
    void check_same_field(Zp const& o) const;

    std::uint64_t value_ = 0;
    std::uint64_t modulus_ = 0;
};

std::string to_string(Zp const& x);

/// Per-domain glue used by the polynomial templates. `context` carries
/// whatever is needed to manufacture constants (the modulus for Z/pZ).
template <class C>
struct coeff_traits;

template <>
struct coeff_traits<Rational> {
    struct context {
        friend bool operator==(context, context) noexcept { return true; }
    };
    static constexpr bool is_field = true;
    static constexpr bool is_integer = false;
    static context context_of(Rational const&) noexcept { return {}; }
    static Rational zero(context) { return Rational(0); }
    static Rational from_int(context, long v) { return Rational(v); }
    static bool is_zero(Rational const& q) noexcept { return sgn(q) == 0; }
    static bool is_one(Rational const& q) { return q == 1; }
    /// gmpxx arithmetic assumes reduced fractions; values built from a
    /// numerator/denominator pair may not be.
    static void canonicalize(Rational& q) { q.canonicalize(); }
};

template <>
struct coeff_traits<Integer> {
    struct context {
        friend bool operator==(context, context) noexcept { return true; }
    };
    static constexpr bool is_field = false;
    static constexpr bool is_integer = true;
    static context context_of(Integer const&) noexcept { return {}; }
    static Integer zero(context) { return Integer(0); }
    static Integer from_int(context, long v) { return Integer(v); }
    static bool is_zero(Integer const& z) noexcept { return sgn(z) == 0; }
    static bool is_one(Integer const& z) { return z == 1; }
    static void canonicalize(Integer&) noexcept {}
};

template <>
struct coeff_traits<Zp> {
    struct context {
        std::uint64_t modulus = 0;
        friend bool operator==(context, context) noexcept = default;
    };
    static constexpr bool is_field = true;
    static constexpr bool is_integer = false;
    static context context_of(Zp const& x) noexcept { return {x.modulus()}; }
    static Zp zero(context c) { return Zp(0, c.modulus); }
    static Zp from_int(context c, long v) { return Zp(v, c.modulus); }
    static bool is_zero(Zp const& x) noexcept { return x.is_zero(); }
    static bool is_one(Zp const& x) noexcept { return x.value() == 1; }
    static void canonicalize(Zp&) noexcept {}
};

}  // namespace dyndeg
