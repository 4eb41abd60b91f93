#include "lorentzint/oracle.hpp"

#include "lorentzint/derivkernel.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <future>
#include <numbers>
#include <vector>

using namespace lorentzint;

namespace {

Rational q(long num, long den = 1) { return Rational(BigInt(num), BigInt(den)); }
PiRational pi_times(long num, long den = 1) { return PiRational::pi_multiple(q(num, den)); }

// Gamma(x) for x a positive multiple of 1/2, as (coefficient, power of sqrt(pi)).
struct HalfGamma {
    Rational coef;
    int sqrt_pi_power = 0;
};

HalfGamma half_gamma(unsigned twice_x)
{
    if (twice_x % 2 == 0)
        return {Rational(factorial(twice_x / 2 - 1)), 0};
    // Gamma(p + 1/2) = (2p)! / (4^p p!) sqrt(pi)
    const unsigned p = (twice_x - 1) / 2;
    return {Rational(factorial(2 * p), BigInt(power_of_two(2 * p) * factorial(p))), 1};
}

// M(k,s) = B(a, s-a)/2 with a = (k+1)/2, expanded through Gamma values.
PiRational moment_via_beta(unsigned k, unsigned s)
{
    const HalfGamma ga = half_gamma(k + 1);
    const HalfGamma gb = half_gamma(2 * s - k - 1);
    const Rational value = ga.coef * gb.coef / Rational(factorial(s - 1)) / q(2);
    const int pi_power = ga.sqrt_pi_power + gb.sqrt_pi_power;  // 0 or 2
    return pi_power == 0 ? PiRational(value) : PiRational::pi_multiple(value);
}

}  // namespace

TEST(Moment, Examples)
{
    EXPECT_EQ(moment(0, 1), pi_times(1, 2));
    EXPECT_EQ(moment(1, 2), PiRational(q(1, 2)));
    EXPECT_EQ(moment(0, 3), pi_times(3, 16));
    EXPECT_EQ(moment(2, 4), pi_times(1, 32));
}

TEST(Moment, Divergence)
{
    EXPECT_THROW(moment(1, 1), DivergenceError);
    EXPECT_THROW(moment(5, 3), DivergenceError);
    EXPECT_THROW(moment(0, 0), DivergenceError);
    EXPECT_NO_THROW(moment(4, 3));
    EXPECT_FALSE((MomentKey{3, 2}).converges());
    EXPECT_TRUE((MomentKey{2, 2}).converges());
}

TEST(Moment, MatchesBetaFunction)
{
    for (unsigned s = 1; s <= 12; ++s)
        for (unsigned k = 0; k <= 12 && k + 2 <= 2 * s; ++k)
            EXPECT_EQ(moment(k, s), moment_via_beta(k, s)) << "k=" << k << " s=" << s;
}

TEST(IntegralExact, Examples)
{
    EXPECT_EQ(integral_exact(0, 0), pi_times(1, 4));
    EXPECT_EQ(integral_exact(1, 1), pi_times(1, 8));
    EXPECT_EQ(integral_exact(3, 2), PiRational(q(-2)));
    EXPECT_EQ(integral_exact(1, 0), PiRational(q(-1, 2)));
    EXPECT_EQ(integral_exact(3, 0), PiRational(q(2)));
    EXPECT_EQ(integral_exact(2, 1), PiRational());
}

TEST(IntegralExact, SymmetricAndParityTyped)
{
    for (unsigned sum = 0; sum <= 30; ++sum) {
        for (unsigned n = 0; n <= sum; ++n) {
            const unsigned m = sum - n;
            const PiRational v = integral_exact(m, n);
            EXPECT_EQ(v, integral_exact(n, m));
            if (sum % 2 == 0)
                EXPECT_TRUE(v.rat_part().is_zero()) << m << "," << n;
            else
                EXPECT_TRUE(v.pi_part().is_zero()) << m << "," << n;
        }
    }
}

// I(n+1, n) = [f_n^2 / 2]_0^inf = -f_n(0)^2 / 2.
TEST(IntegralExact, AdjacentIdentity)
{
    for (unsigned n = 0; n <= 12; ++n) {
        const Rational f0 = value_at_zero(n);
        EXPECT_EQ(integral_exact(n + 1, n), PiRational(-(f0 * f0) / q(2))) << "n=" << n;
    }
}

TEST(IntegralExact, PositiveOnDiagonal)
{
    for (unsigned n = 0; n <= 20; ++n)
        EXPECT_GT(to_float(integral_exact(n, n)), 0.0) << "n=" << n;
}

TEST(IntegralExact, ConcurrentCallsAgree)
{
    std::vector<std::future<std::vector<PiRational>>> jobs;
    for (int t = 0; t < 6; ++t)
        jobs.push_back(std::async(std::launch::async, [] {
            std::vector<PiRational> out;
            for (unsigned m = 0; m <= 16; ++m)
                for (unsigned n = 0; n <= m; ++n)
                    out.push_back(integral_exact(m, n));
            return out;
        }));
    const auto first = jobs[0].get();
    for (std::size_t t = 1; t < jobs.size(); ++t)
        EXPECT_EQ(jobs[t].get(), first);
}

TEST(Quadrature, Examples)
{
    const auto r00 = quadrature(0, 0, 1e-10);
    EXPECT_TRUE(r00.converged);
    EXPECT_NEAR(r00.value, 0.7853981633974483, 1e-10);
    EXPECT_NEAR(r00.value, to_float(integral_exact(0, 0)), 1e-10);

    EXPECT_NEAR(quadrature(2, 1, 1e-10).value, 0.0, 1e-10);
    EXPECT_NEAR(quadrature(3, 0, 1e-10).value, 2.0, 2e-10);
}

TEST(Quadrature, ErrorEstimateRespectsTolerance)
{
    const auto r = quadrature(4, 2, 1e-10);
    EXPECT_TRUE(r.converged);
    EXPECT_GT(r.evaluations, 0u);
    EXPECT_LE(r.abs_error_estimate, 1e-10 * std::abs(r.value) + 1e-14);
}

TEST(Quadrature, AgreesWithExactOracle)
{
    for (unsigned sum = 0; sum <= 12; ++sum) {
        for (unsigned n = 0; n <= sum; ++n) {
            const unsigned m = sum - n;
            const double exact = to_float(integral_exact(m, n));
            const double got = quadrature(m, n, 1e-10).value;
            EXPECT_LE(std::abs(got - exact), 1e-9 * std::max(1.0, std::abs(exact))) << m << "," << n;
        }
    }
}

TEST(Quadrature, Preconditions)
{
    EXPECT_THROW(quadrature(1, 1, 1e-13), std::invalid_argument);
    EXPECT_THROW(quadrature(31, 0, 1e-10), OrderTooLargeError);
    QuadratureOptions tight;
    tight.max_doublings = 0;
    EXPECT_THROW(quadrature(1, 1, 1e-10, tight), NonConvergenceError);
    try {
        quadrature(3, 3, 1e-10, tight);
    } catch (const NonConvergenceError& ex) {
        EXPECT_FALSE(ex.last_estimate().converged);
    }
}

TEST(CosineTransform, Examples)
{
    const auto at0 = cosine_transform_check(0.0);
    EXPECT_EQ(at0.expected, std::numbers::pi / 2);
    EXPECT_NEAR(at0.numeric.value, 1.5707963267948966, 1e-6);

    const auto at1 = cosine_transform_check(1.0);
    EXPECT_EQ(at1.expected, 0.5778636748954609);
    EXPECT_TRUE(at1.agrees(1e-6));

    const auto at2 = cosine_transform_check(2.0);
    EXPECT_EQ(at2.expected, 0.21258416579381817);
    EXPECT_TRUE(at2.agrees(1e-6));
}

TEST(CosineTransform, CutoffEndsOnHalfPeriod)
{
    for (double z : {0.5, 1.0, 2.0, 3.7}) {
        const auto check = cosine_transform_check(z);
        EXPECT_NEAR(std::sin(check.cutoff * z), 0.0, 1e-9);
        EXPECT_GE(check.cutoff, 2000.0);
        EXPECT_TRUE(check.numeric.converged);
        EXPECT_LE(check.numeric.abs_error_estimate, 1e-6 * std::abs(check.numeric.value));
        EXPECT_LT(check.relative_error(), 1e-6);
    }
}

TEST(CosineTransform, RejectsNegativeFrequency)
{
    EXPECT_THROW(cosine_transform_check(-1.0), std::invalid_argument);
}
