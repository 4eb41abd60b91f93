#include "lorentzint/exactnum.hpp"

#include "test_support.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <limits>

using namespace lorentzint;
using lorentzint::testing::exact;
using lorentzint::testing::Generator;

namespace {

Rational q(long num, long den = 1) { return Rational(BigInt(num), BigInt(den)); }

// Bracket for pi, tight enough that the ulp checks below are decided by the
// conversion error rather than by the bracket width.
const Rational kPiLow = Rational::parse("314159265358979323846264338327950288/100000000000000000000000000000000000");
const Rational kPiHigh = Rational::parse("314159265358979323846264338327950289/100000000000000000000000000000000000");

double ulp(double x)
{
    const double ax = std::abs(x);
    return std::nextafter(ax, std::numeric_limits<double>::infinity()) - ax;
}

// |to_float(v) - v| <= max_ulps * ulp, checked exactly against the pi bracket.
::testing::AssertionResult within_ulps(const PiRational& v, double max_ulps)
{
    const double d = to_float(v);
    const Rational dx = exact(d);
    const Rational lo = v.rat_part() + v.pi_part() * (v.pi_part().sign() >= 0 ? kPiLow : kPiHigh);
    const Rational hi = v.rat_part() + v.pi_part() * (v.pi_part().sign() >= 0 ? kPiHigh : kPiLow);
    const Rational err = std::max(abs(dx - lo), abs(dx - hi));
    const Rational bound = exact(ulp(d)) * Rational(static_cast<long>(max_ulps));
    if (err <= bound)
        return ::testing::AssertionSuccess();
    return ::testing::AssertionFailure() << render(v) << " -> " << d << " error exceeds "
                                         << max_ulps << " ulp";
}

}  // namespace

TEST(Rational, CanonicalForm)
{
    const Rational r(BigInt(6), BigInt(-4));
    EXPECT_EQ(r.numerator(), -3);
    EXPECT_EQ(r.denominator(), 2);

    const Rational zero(BigInt(0), BigInt(-17));
    EXPECT_TRUE(zero.is_zero());
    EXPECT_EQ(zero.numerator(), 0);
    EXPECT_EQ(zero.denominator(), 1);

    EXPECT_THROW(Rational(BigInt(1), BigInt(0)), std::domain_error);
    EXPECT_THROW(q(1) / Rational(), std::domain_error);
}

TEST(Rational, ParseAndPrint)
{
    EXPECT_EQ(Rational::parse("10/-4").to_string(), "-5/2");
    EXPECT_EQ(Rational::parse("-7").to_string(), "-7");
    EXPECT_EQ(Rational::parse("+3/9"), q(1, 3));
    EXPECT_THROW(Rational::parse("1/0"), ParseError);
    EXPECT_THROW(Rational::parse("abc"), ParseError);
    EXPECT_THROW(Rational::parse(""), ParseError);
}

TEST(Rational, NormalizationIsIdempotent)
{
    Generator gen(1);
    for (int i = 0; i < 500; ++i) {
        const Rational r = gen.rational();
        const Rational again(r.numerator(), r.denominator());
        EXPECT_EQ(again.numerator(), r.numerator());
        EXPECT_EQ(again.denominator(), r.denominator());
        EXPECT_GT(r.denominator(), 0);
        BigInt g;
        mpz_gcd(g.get_mpz_t(), r.numerator().get_mpz_t(), r.denominator().get_mpz_t());
        EXPECT_EQ(g, 1);
    }
}

TEST(PiRational, Arithmetic)
{
    const PiRational half(q(1, 2));
    const PiRational quarter_pi = PiRational::pi_multiple(q(1, 4));
    EXPECT_EQ(half + quarter_pi, PiRational(q(1, 2), q(1, 4)));

    const PiRational eighth_pi = PiRational::pi_multiple(q(1, 8));
    EXPECT_EQ(eighth_pi * q(-1), PiRational(q(0), q(-1, 8)));

    EXPECT_EQ(PiRational(q(-2)) + PiRational(q(2)), PiRational());
    EXPECT_TRUE((PiRational(q(-2)) + PiRational(q(2))).is_zero());
}

TEST(PiRational, RingAxioms)
{
    Generator gen(2);
    for (int i = 0; i < 300; ++i) {
        const PiRational a = gen.pi_rational();
        const PiRational b = gen.pi_rational();
        const PiRational c = gen.pi_rational();
        const Rational s = gen.rational();
        const Rational t = gen.rational();
        EXPECT_EQ((a + b) + c, a + (b + c));
        EXPECT_EQ(a + b, b + a);
        EXPECT_EQ((a + b) * s, a * s + b * s);
        EXPECT_EQ(a * (s + t), a * s + a * t);
        EXPECT_EQ((a * s) * t, a * (s * t));
        EXPECT_EQ(a - a, PiRational());
    }
}

TEST(PiRational, ToFloatExamples)
{
    EXPECT_EQ(to_float(PiRational::pi_multiple(q(1, 4))), 0.7853981633974483);
    EXPECT_EQ(to_float(PiRational(q(-1, 2))), -0.5);
    EXPECT_EQ(to_float(PiRational::pi_multiple(q(3, 8))), 1.1780972450961724);
    EXPECT_EQ(to_float(PiRational()), 0.0);
}

TEST(PiRational, ToFloatWithinFourUlps)
{
    Generator gen(3);
    for (int i = 0; i < 500; ++i) {
        const int which = gen.small(0, 2);
        PiRational v = gen.pi_rational(4);
        if (which == 0)
            v = PiRational(v.rat_part());
        else if (which == 1)
            v = PiRational::pi_multiple(v.pi_part());
        EXPECT_TRUE(within_ulps(v, 4));
    }
}

TEST(PiRational, ToFloatBalancedScaling)
{
    // (m+n)! / 2^(m+n+2) * pi for m+n = 150: both components far beyond
    // double range, the value itself is not.
    BigInt f;
    mpz_fac_ui(f.get_mpz_t(), 150);
    const PiRational v = PiRational::pi_multiple(Rational(f, power_of_two(152)));
    EXPECT_TRUE(std::isfinite(to_float(v)));
    EXPECT_TRUE(within_ulps(v, 4));

    // Huge numerator and denominator with a moderate quotient.
    const BigInt big = power_of_two(5000);
    EXPECT_EQ(to_double(Rational(BigInt(big * 3), BigInt(big * 4))), 0.75);

    // Tiny but representable.
    EXPECT_EQ(to_double(Rational(BigInt(1), power_of_two(1000))), std::ldexp(1.0, -1000));
}

TEST(PiRational, ToFloatOverflow)
{
    EXPECT_THROW(to_double(Rational(power_of_two(1100))), OverflowError);
    EXPECT_THROW(to_float(PiRational::pi_multiple(Rational(power_of_two(1024)))), OverflowError);
}

TEST(PiRational, RenderText)
{
    EXPECT_EQ(render(PiRational::pi_multiple(q(1, 4))), "1/4*pi");
    EXPECT_EQ(render(PiRational(q(-2))), "-2");
    EXPECT_EQ(render(PiRational(q(-1, 2), q(1, 8))), "-1/2 + 1/8*pi");
    EXPECT_EQ(render(PiRational(q(-1, 2), q(-1, 8))), "-1/2 - 1/8*pi");
    EXPECT_EQ(render(PiRational()), "0");
    EXPECT_EQ(render(PiRational::pi_multiple(q(-1))), "-pi");
    EXPECT_EQ(render(PiRational(q(3), q(1))), "3 + pi");
}

TEST(PiRational, RenderJson)
{
    EXPECT_EQ(render(PiRational(q(-1, 2), q(1, 8)), RenderFormat::json),
              R"({"pi":["1","8"],"rat":["-1","2"]})");
    EXPECT_EQ(render(PiRational(), RenderFormat::json), R"({"pi":["0","1"],"rat":["0","1"]})");
}

TEST(PiRational, TextAndJsonRoundTrip)
{
    Generator gen(4);
    for (int i = 0; i < 300; ++i) {
        PiRational v = gen.pi_rational(3);
        switch (gen.small(0, 3)) {
        case 0: v = PiRational(v.rat_part()); break;
        case 1: v = PiRational::pi_multiple(v.pi_part()); break;
        default: break;
        }
        const PiRational from_text = parse_pi_rational(render(v));
        const PiRational from_json =
            pi_rational_from_json(nlohmann::json::parse(render(v, RenderFormat::json)));
        EXPECT_EQ(from_text, v);
        EXPECT_EQ(from_json, v);
        EXPECT_EQ(render(from_json, RenderFormat::json), render(v, RenderFormat::json));
        if (!v.is_zero() && std::abs(v.rat_part().numerator().get_d()) < 1e300) {
            try {
                EXPECT_EQ(to_float(from_json), to_float(v));
            } catch (const OverflowError&) {
            }
        }
    }
}

TEST(PiRational, ParseRejectsGarbage)
{
    EXPECT_THROW(parse_pi_rational(""), ParseError);
    EXPECT_THROW(parse_pi_rational("1/2 + 3pi"), ParseError);
    EXPECT_THROW(pi_rational_from_json(nlohmann::json::parse(R"({"rat":[1,2],"pi":["0","1"]})")),
                 ParseError);
    EXPECT_THROW(pi_rational_from_json(nlohmann::json::parse(R"({"rat":["1","2"]})")), ParseError);
}
