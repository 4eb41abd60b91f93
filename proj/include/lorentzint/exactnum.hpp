#pragma once

/**
 * @file exactnum.hpp
 * @brief Exact arithmetic over Q and Q + Q*pi.
 *
 * Every integral of the family lives in Q + Q*pi, so values are carried as a
 * pair of canonical rationals and only converted to double at the edges.
 */

#include <gmpxx.h>

#include <compare>
#include <stdexcept>
#include <string>
#include <string_view>

#include "json.hpp"

namespace lorentzint {

using BigInt = mpz_class;

BigInt factorial(unsigned n);
BigInt power_of_two(unsigned exponent);

/// Raised when a value does not fit in a finite double.
class OverflowError : public std::overflow_error {
public:
    using std::overflow_error::overflow_error;
};

/// Raised by the text/JSON readers on malformed input.
class ParseError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/**
 * Arbitrary-precision rational, always in lowest terms with a positive
 * denominator. Zero is 0/1.
 */
class Rational {
public:
    Rational() = default;
    Rational(long value) : value_(value) {}
    Rational(const BigInt& value) : value_(value) {}
    Rational(const BigInt& numerator, const BigInt& denominator);

    BigInt numerator() const { return value_.get_num(); }
    BigInt denominator() const { return value_.get_den(); }

    bool is_zero() const { return sgn(value_) == 0; }
    bool is_integer() const { return value_.get_den() == 1; }
    int sign() const { return sgn(value_); }

    Rational operator-() const;
    Rational& operator+=(const Rational& rhs);
    Rational& operator-=(const Rational& rhs);
    Rational& operator*=(const Rational& rhs);
    Rational& operator/=(const Rational& rhs);

    friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
    friend Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
    friend Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }
    friend Rational operator/(Rational lhs, const Rational& rhs) { return lhs /= rhs; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

    /// "num" or "num/den".
    std::string to_string() const;
    static Rational parse(std::string_view text);

    const mpq_class& raw() const { return value_; }

private:
    explicit Rational(mpq_class value);
    mpq_class value_;
};

Rational abs(const Rational& value);

/// Nearest double to an exact rational, computed without forming huge
/// intermediate floats. Throws OverflowError when the value is out of range.
double to_double(const Rational& value);

/**
 * Exact value rat + pi_coef * pi. The set is closed under addition and
 * rational scaling; there is intentionally no PiRational * PiRational.
 */
class PiRational {
public:
    PiRational() = default;
    PiRational(Rational rat) : rat_(std::move(rat)) {}
    PiRational(Rational rat, Rational pi_coef) : rat_(std::move(rat)), pi_(std::move(pi_coef)) {}

    static PiRational pi_multiple(Rational coef) { return {Rational{}, std::move(coef)}; }

    const Rational& rat_part() const { return rat_; }
    const Rational& pi_part() const { return pi_; }
    bool is_zero() const { return rat_.is_zero() && pi_.is_zero(); }

    PiRational operator-() const { return {-rat_, -pi_}; }
    PiRational& operator+=(const PiRational& rhs);
    PiRational& operator-=(const PiRational& rhs);
    PiRational& operator*=(const Rational& scale);

    friend PiRational operator+(PiRational a, const PiRational& b) { return a += b; }
    friend PiRational operator-(PiRational a, const PiRational& b) { return a -= b; }
    friend PiRational operator*(PiRational a, const Rational& s) { return a *= s; }
    friend PiRational operator*(const Rational& s, PiRational a) { return a *= s; }

    friend bool operator==(const PiRational&, const PiRational&) = default;

private:
    Rational rat_;
    Rational pi_;
};

/// Double approximation within a few ulp of the exact value.
double to_float(const PiRational& value);

enum class RenderFormat { text, json };

/// Text: "-1/2 + 1/8*pi", "1/4*pi", "-2", "0". JSON: {"rat":[n,d],"pi":[n,d]}
/// with integers as decimal strings.
std::string render(const PiRational& value, RenderFormat format = RenderFormat::text);

nlohmann::json to_json(const PiRational& value);
PiRational pi_rational_from_json(const nlohmann::json& value);

/// Inverse of render(value, RenderFormat::text).
PiRational parse_pi_rational(std::string_view text);

}  // namespace lorentzint
