#include "lorentzint/oracle.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <map>
#include <mutex>
#include <numbers>
#include <shared_mutex>
#include <string>
#include <utility>

namespace lorentzint {

namespace {

// Insert-once cache: concurrent readers, writers may race to compute the
// same entry but the stored value is identical either way.
template <typename Key, typename Value>
class MemoTable {
public:
    template <typename Compute>
    Value get(const Key& key, Compute&& compute)
    {
        {
            std::shared_lock lock(mutex_);
            if (auto it = table_.find(key); it != table_.end())
                return it->second;
        }
        Value value = compute();
        std::unique_lock lock(mutex_);
        return table_.try_emplace(key, std::move(value)).first->second;
    }

private:
    std::shared_mutex mutex_;
    std::map<Key, Value> table_;
};

MemoTable<MomentKey, PiRational>& moment_table()
{
    static MemoTable<MomentKey, PiRational> table;
    return table;
}

MemoTable<std::pair<unsigned, unsigned>, PiRational>& integral_table()
{
    static MemoTable<std::pair<unsigned, unsigned>, PiRational> table;
    return table;
}

PiRational compute_moment(unsigned k, unsigned s)
{
    // Walk the recurrence down to k in {0, 1}, collecting the rational factor.
    Rational scale(1);
    while (k >= 2) {
        scale *= Rational(BigInt(k - 1), BigInt(2UL * (s - 1)));
        k -= 2;
        s -= 1;
    }
    if (k == 1)
        return PiRational(scale * Rational(BigInt(1), BigInt(2UL * (s - 1))));

    Rational wallis(BigInt(1), BigInt(2));
    for (unsigned i = 1; i < s; ++i)
        wallis *= Rational(BigInt(2UL * i - 1), BigInt(2UL * i));
    return PiRational::pi_multiple(scale * wallis);
}

constexpr std::array<double, 5> kGaussNodes = {
    0.14887433898163122, 0.4333953941292472, 0.6794095682990244,
    0.8650633666889845, 0.9739065285171717};
constexpr std::array<double, 5> kGaussWeights = {
    0.295524224714753, 0.2692667193099965, 0.219086362515982,
    0.14945134915058036, 0.06667134430868807};

struct PanelSum {
    double value = 0.0;
    double abs_value = 0.0;
    std::size_t evaluations = 0;
};

template <typename F>
PanelSum composite_gauss(F&& f, double a, double b, std::size_t panels)
{
    PanelSum out;
    const double width = (b - a) / static_cast<double>(panels);
    for (std::size_t p = 0; p < panels; ++p) {
        const double mid = a + (static_cast<double>(p) + 0.5) * width;
        const double half = 0.5 * width;
        double sum = 0.0;
        double abs_sum = 0.0;
        for (std::size_t i = 0; i < kGaussNodes.size(); ++i) {
            const double lo = f(mid - half * kGaussNodes[i]);
            const double hi = f(mid + half * kGaussNodes[i]);
            sum += kGaussWeights[i] * (lo + hi);
            abs_sum += kGaussWeights[i] * (std::abs(lo) + std::abs(hi));
        }
        out.value += half * sum;
        out.abs_value += half * abs_sum;
    }
    out.evaluations = panels * 2 * kGaussNodes.size();
    return out;
}

// Refines by doubling the panel count until successive estimates agree.
template <typename F>
QuadratureResult refine(F&& f, double a, double b, std::size_t initial_panels, double rel_tol,
                        double floor, unsigned max_doublings)
{
    constexpr double kRoundoff = 64 * std::numeric_limits<double>::epsilon();
    QuadratureResult result;
    PanelSum previous = composite_gauss(f, a, b, initial_panels);
    result.evaluations = previous.evaluations;
    std::size_t panels = initial_panels;
    for (unsigned level = 1; level <= max_doublings; ++level) {
        panels *= 2;
        const PanelSum current = composite_gauss(f, a, b, panels);
        result.evaluations += current.evaluations;
        result.value = current.value;
        result.abs_error_estimate = std::abs(current.value - previous.value);
        const double scale = std::max(std::abs(current.value), floor);
        if (result.abs_error_estimate <= rel_tol * scale ||
            result.abs_error_estimate <= kRoundoff * current.abs_value) {
            result.converged = true;
            return result;
        }
        previous = current;
    }
    throw NonConvergenceError("quadrature did not converge after " + std::to_string(max_doublings) +
                                  " doublings",
                              result);
}

}  // namespace

PiRational moment(unsigned k, unsigned s)
{
    const MomentKey key{k, s};
    if (!key.converges())
        throw DivergenceError("moment diverges for k=" + std::to_string(k) + ", s=" + std::to_string(s));
    return moment_table().get(key, [&] { return compute_moment(k, s); });
}

PiRational integral_exact(unsigned m, unsigned n)
{
    // Keyed on the sorted pair: the integrand is symmetric in (m, n).
    const auto key = std::minmax(m, n);
    return integral_table().get(key, [&] {
        const IntPoly product = derivative_rep(m).numerator * derivative_rep(n).numerator;
        const unsigned s = m + n + 2;
        PiRational total;
        const auto& coeffs = product.coefficients();
        for (unsigned k = 0; k < coeffs.size(); ++k) {
            if (coeffs[k] == 0)
                continue;
            total += moment(k, s) * Rational(coeffs[k]);
        }
        return total;
    });
}

QuadratureResult quadrature(unsigned m, unsigned n, double rel_tol, const QuadratureOptions& options)
{
    if (!(rel_tol >= 1e-12))
        throw std::invalid_argument("quadrature: rel_tol must be >= 1e-12");
    if (m > options.max_order || n > options.max_order)
        throw OrderTooLargeError("quadrature: order exceeds float-safety bound " +
                                 std::to_string(options.max_order));

    const int cos_power = static_cast<int>(m + n + 2);
    auto integrand = [&](double t) {
        if (t >= std::numbers::pi / 2)
            return 0.0;
        const double s = std::sin(t);
        const double c = std::cos(t);
        return eval_numerator_homogeneous(m, s, c, options.max_order) *
               eval_numerator_homogeneous(n, s, c, options.max_order) * std::pow(c, cos_power);
    };
    return refine(integrand, 0.0, std::numbers::pi / 2, 4, rel_tol, options.floor,
                  options.max_doublings);
}

double TransformCheck::relative_error() const
{
    return std::abs(numeric.value - expected) / std::abs(expected);
}

bool TransformCheck::agrees(double rel_tol) const
{
    return relative_error() <= std::max(rel_tol, 1e-6);
}

TransformCheck cosine_transform_check(double z, double rel_tol)
{
    if (!(z >= 0.0))
        throw std::invalid_argument("cosine_transform_check: z must be >= 0");

    constexpr double pi = std::numbers::pi;
    const double target = std::max(rel_tol, 1e-6);

    TransformCheck check;
    check.expected = 0.5 * pi * std::exp(-z);

    double cutoff = std::max(2000.0, 400.0 / std::max(z, 0.1));
    std::size_t panels = static_cast<std::size_t>(std::ceil(cutoff));
    if (z > 0.0) {
        // End on a zero of sin(zX) so the leading tail term vanishes.
        const double half_period = pi / z;
        const double half_periods = std::ceil(cutoff / half_period);
        cutoff = half_periods * half_period;
        panels = std::max(panels, static_cast<std::size_t>(half_periods));
        // Two integrations by parts with sin(zX) = 0 bound the tail by
        // 2|g'(X)|/z^2 for g = 1/(1+x^2), decreasing and convex past X.
        check.tail_bound = 4.0 * cutoff / (std::pow(1.0 + cutoff * cutoff, 2) * z * z);
    }
    check.cutoff = cutoff;

    auto integrand = [z](double x) { return std::cos(x * z) / (1.0 + x * x); };
    check.numeric = refine(integrand, 0.0, cutoff, panels, 0.1 * target, 1e-30, 8);
    if (z == 0.0)
        check.numeric.value += std::atan(1.0 / cutoff);  // exact tail of 1/(1+x^2)
    check.numeric.abs_error_estimate += check.tail_bound;
    check.numeric.converged =
        check.numeric.abs_error_estimate <= target * std::abs(check.numeric.value);
    if (!check.numeric.converged)
        throw NonConvergenceError("cosine transform check: error estimate above tolerance", check.numeric);
    return check;
}

}  // namespace lorentzint
