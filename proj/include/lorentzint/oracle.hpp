#pragma once

/**
 * @file oracle.hpp
 * @brief Ground truth for I(m,n): exact moment integration and quadrature.
 *
 * integral_exact expands f_m f_n = P_m P_n / (1+x^2)^(m+n+2) and integrates
 * term by term with the moments
 *
 *     M(k,s) = int_0^inf x^k / (1+x^2)^s dx = B((k+1)/2, s-(k+1)/2) / 2,
 *
 * reduced by M(k,s) = (k-1)/(2(s-1)) M(k-2, s-1) to
 *     M(0,s) = (pi/2) prod_{i=1}^{s-1} (2i-1)/(2i),   M(1,s) = 1/(2(s-1)).
 *
 * quadrature evaluates the same integral in floating point after the change
 * of variables x = tan(t), which turns the integrand into a bounded
 * trigonometric polynomial on [0, pi/2].
 */

#include "lorentzint/derivkernel.hpp"
#include "lorentzint/exactnum.hpp"

#include <cstddef>
#include <stdexcept>

namespace lorentzint {

struct MomentKey {
    unsigned k = 0;  ///< power of x
    unsigned s = 1;  ///< power of (1+x^2)
    bool converges() const { return s >= 1 && k + 2 <= 2 * s; }
    friend auto operator<=>(const MomentKey&, const MomentKey&) = default;
};

class DivergenceError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

struct QuadratureResult {
    double value = 0.0;
    double abs_error_estimate = 0.0;
    std::size_t evaluations = 0;
    bool converged = false;
};

class NonConvergenceError : public std::runtime_error {
public:
    NonConvergenceError(const std::string& what, QuadratureResult last)
        : std::runtime_error(what), last_(last) {}
    const QuadratureResult& last_estimate() const { return last_; }

private:
    QuadratureResult last_;
};

/// Memoized; throws DivergenceError when k > 2s - 2.
PiRational moment(unsigned k, unsigned s);

/// Exact I(m,n); memoized.
PiRational integral_exact(unsigned m, unsigned n);

struct QuadratureOptions {
    unsigned max_doublings = 22;
    unsigned max_order = kDefaultFloatSafetyBound;
    /// Relative tolerances are measured against max(|estimate|, floor).
    double floor = 1e-30;
};

/**
 * Composite 10-point Gauss-Legendre on [0, pi/2] with panel doubling.
 * Stops when two successive estimates differ by at most
 * rel_tol * max(|estimate|, floor), or when the difference is at the
 * rounding level of int |integrand| (exact zeros such as I(2,1)).
 * Requires rel_tol >= 1e-12 and m, n <= options.max_order.
 */
QuadratureResult quadrature(unsigned m, unsigned n, double rel_tol,
                            const QuadratureOptions& options = {});

struct TransformCheck {
    QuadratureResult numeric;  ///< truncated integral plus tail handling
    double expected = 0.0;     ///< (pi/2) e^{-z}
    double cutoff = 0.0;       ///< truncation point X
    double tail_bound = 0.0;   ///< bound on |int_X^inf|, folded into the error estimate

    double relative_error() const;
    bool agrees(double rel_tol) const;
};

/// Numerically checks int_0^inf cos(xz)/(1+x^2) dx = (pi/2) e^{-z}.
TransformCheck cosine_transform_check(double z, double rel_tol = 1e-6);

}  // namespace lorentzint
