#pragma once

/**
 * @file derivkernel.hpp
 * @brief Exact derivatives of f(x) = 1/(1+x^2).
 *
 * The n-th derivative has the shape f_n(x) = P_n(x) / (1+x^2)^(n+1) with an
 * integer polynomial P_n of degree n. Only P_n is stored; the denominator
 * exponent is implied by the order. Differentiating that quotient gives
 *
 *     P_{n+1} = (1+x^2) P_n' - 2(n+1) x P_n,   P_0 = 1.
 *
 * f_n itself satisfies (1+x^2) f_{n+2} + 2(n+2) x f_{n+1} + (n+2)(n+1) f_n = 0,
 * which after clearing denominators is an identity between integer
 * polynomials (see ode_residual).
 */

#include "lorentzint/exactnum.hpp"

#include <cstddef>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <vector>

namespace lorentzint {

/// Dense integer polynomial; coeffs[k] multiplies x^k, no trailing zeros.
class IntPoly {
public:
    IntPoly() = default;
    explicit IntPoly(std::vector<BigInt> coeffs);
    IntPoly(std::initializer_list<long> coeffs);

    const std::vector<BigInt>& coefficients() const { return coeffs_; }
    /// -1 for the zero polynomial.
    long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }
    BigInt coefficient(std::size_t power) const;

    IntPoly derivative() const;
    IntPoly times_x() const;

    IntPoly& operator+=(const IntPoly& rhs);
    IntPoly& operator-=(const IntPoly& rhs);
    IntPoly& operator*=(const BigInt& scale);
    friend IntPoly operator+(IntPoly a, const IntPoly& b) { return a += b; }
    friend IntPoly operator-(IntPoly a, const IntPoly& b) { return a -= b; }
    friend IntPoly operator*(IntPoly a, const BigInt& s) { return a *= s; }
    friend IntPoly operator*(const BigInt& s, IntPoly a) { return a *= s; }
    friend IntPoly operator*(const IntPoly& a, const IntPoly& b);
    friend bool operator==(const IntPoly&, const IntPoly&) = default;

    Rational evaluate(const Rational& x) const;
    /// Horner in double precision.
    double evaluate(double x) const;

    /// Descending powers, e.g. "-24*x^3 + 24*x"; "0" for the zero polynomial.
    std::string to_string(const std::string& var = "x") const;

private:
    void trim();
    std::vector<BigInt> coeffs_;
};

/// f_n = numerator / (1+x^2)^(order+1).
struct DerivRep {
    unsigned order = 0;
    IntPoly numerator;

    unsigned denominator_exponent() const { return order + 1; }
};

/// Memoized P_n; safe to call concurrently. The reference stays valid for the
/// lifetime of the process.
const DerivRep& derivative_rep(unsigned n);

/// n! cos(n pi / 2), from the closed form rather than from P_n.
Rational value_at_zero(unsigned n);

/// P_{n+2} + 2(n+2) x P_{n+1} + (n+2)(n+1)(1+x^2) P_n; zero for every n.
IntPoly ode_residual(unsigned n);

inline constexpr unsigned kDefaultFloatSafetyBound = 30;

class OrderTooLargeError : public std::out_of_range {
public:
    using std::out_of_range::out_of_range;
};

/// f_n(x) in double precision. Throws OrderTooLargeError when n > max_order.
double eval_f(unsigned n, double x, unsigned max_order = kDefaultFloatSafetyBound);

/// P_n(tan t) cos^n t given (sin t, cos t), evaluated as the homogeneous form
/// sum_k c_k sin^k cos^(n-k). Bounded on the whole of [0, pi/2].
double eval_numerator_homogeneous(unsigned n, double sin_t, double cos_t,
                                  unsigned max_order = kDefaultFloatSafetyBound);

}  // namespace lorentzint
