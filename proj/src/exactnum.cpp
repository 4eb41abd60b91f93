#include "lorentzint/exactnum.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <utility>

namespace lorentzint {

namespace {

// pi to 110 significant digits; the truncation error (< 1e-109) is far below
// double resolution for any coefficient that still converts to a finite value.
const Rational& pi_approximation()
{
    static const Rational value{
        BigInt{"31415926535897932384626433832795028841971693993751058209749445923078164062862089986280348253421170679821480865"},
        BigInt{"10000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000"}};
    return value;
}

BigInt parse_integer(std::string_view text)
{
    std::string_view digits = text;
    if (!digits.empty() && (digits.front() == '-' || digits.front() == '+'))
        digits.remove_prefix(1);
    if (digits.empty())
        throw ParseError("empty integer");
    for (char c : digits)
        if (c < '0' || c > '9')
            throw ParseError("invalid integer: " + std::string(text));
    if (text.front() == '+')
        text.remove_prefix(1);
    return BigInt{std::string(text)};
}

std::string_view trim(std::string_view s)
{
    while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
    while (!s.empty() && s.back() == ' ') s.remove_suffix(1);
    return s;
}

}  // namespace

BigInt factorial(unsigned n)
{
    BigInt out;
    mpz_fac_ui(out.get_mpz_t(), n);
    return out;
}

BigInt power_of_two(unsigned exponent)
{
    BigInt out;
    mpz_ui_pow_ui(out.get_mpz_t(), 2, exponent);
    return out;
}

Rational::Rational(const BigInt& numerator, const BigInt& denominator)
{
    if (denominator == 0)
        throw std::domain_error("Rational: zero denominator");
    value_ = mpq_class(numerator, denominator);
    value_.canonicalize();
}

Rational::Rational(mpq_class value) : value_(std::move(value)) {}

Rational Rational::operator-() const { return Rational(mpq_class(-value_)); }

// mpq arithmetic keeps operands canonical, so no explicit reduction is needed.
Rational& Rational::operator+=(const Rational& rhs) { value_ += rhs.value_; return *this; }
Rational& Rational::operator-=(const Rational& rhs) { value_ -= rhs.value_; return *this; }
Rational& Rational::operator*=(const Rational& rhs) { value_ *= rhs.value_; return *this; }

Rational& Rational::operator/=(const Rational& rhs)
{
    if (rhs.is_zero())
        throw std::domain_error("Rational: division by zero");
    value_ /= rhs.value_;
    return *this;
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b)
{
    const int c = cmp(a.value_, b.value_);
    return c < 0 ? std::strong_ordering::less
         : c > 0 ? std::strong_ordering::greater
                 : std::strong_ordering::equal;
}

std::string Rational::to_string() const
{
    if (is_integer())
        return value_.get_num().get_str();
    return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

Rational Rational::parse(std::string_view text)
{
    text = trim(text);
    const auto slash = text.find('/');
    if (slash == std::string_view::npos)
        return Rational(parse_integer(text));
    const BigInt den = parse_integer(text.substr(slash + 1));
    if (den == 0)
        throw ParseError("zero denominator: " + std::string(text));
    return Rational(parse_integer(text.substr(0, slash)), den);
}

Rational abs(const Rational& value) { return value.sign() < 0 ? -value : value; }

double to_double(const Rational& value)
{
    if (value.is_zero())
        return 0.0;

    BigInt num = value.numerator();
    const BigInt den = value.denominator();
    const bool negative = num < 0;
    if (negative)
        num = -num;

    // Scale by 2^shift so the integer quotient carries 64 or 65 bits, then
    // fold the remainder into a sticky bit so the final rounding is correct.
    const long num_bits = static_cast<long>(mpz_sizeinbase(num.get_mpz_t(), 2));
    const long den_bits = static_cast<long>(mpz_sizeinbase(den.get_mpz_t(), 2));
    const long shift = 64 - (num_bits - den_bits);

    BigInt scaled = num;
    BigInt divisor = den;
    if (shift > 0)
        mpz_mul_2exp(scaled.get_mpz_t(), scaled.get_mpz_t(), static_cast<mp_bitcnt_t>(shift));
    else if (shift < 0)
        mpz_mul_2exp(divisor.get_mpz_t(), divisor.get_mpz_t(), static_cast<mp_bitcnt_t>(-shift));

    BigInt quotient, remainder;
    mpz_tdiv_qr(quotient.get_mpz_t(), remainder.get_mpz_t(), scaled.get_mpz_t(), divisor.get_mpz_t());

    long exponent = -shift;
    bool sticky = remainder != 0;
    if (mpz_sizeinbase(quotient.get_mpz_t(), 2) > 64) {
        sticky = sticky || mpz_odd_p(quotient.get_mpz_t());
        mpz_tdiv_q_2exp(quotient.get_mpz_t(), quotient.get_mpz_t(), 1);
        ++exponent;
    }

    std::uint64_t bits = 0;
    mpz_export(&bits, nullptr, -1, sizeof bits, 0, 0, quotient.get_mpz_t());
    if (sticky)
        bits |= 1u;

    if (exponent > std::numeric_limits<int>::max() || exponent < std::numeric_limits<int>::min())
        throw OverflowError("rational magnitude outside double range");
    const double result = std::ldexp(static_cast<double>(bits), static_cast<int>(exponent));
    if (!std::isfinite(result))
        throw OverflowError("rational magnitude outside double range");
    return negative ? -result : result;
}

PiRational& PiRational::operator+=(const PiRational& rhs)
{
    rat_ += rhs.rat_;
    pi_ += rhs.pi_;
    return *this;
}

PiRational& PiRational::operator-=(const PiRational& rhs)
{
    rat_ -= rhs.rat_;
    pi_ -= rhs.pi_;
    return *this;
}

PiRational& PiRational::operator*=(const Rational& scale)
{
    rat_ *= scale;
    pi_ *= scale;
    return *this;
}

double to_float(const PiRational& value)
{
    if (value.pi_part().is_zero())
        return to_double(value.rat_part());
    return to_double(value.rat_part() + value.pi_part() * pi_approximation());
}

std::string render(const PiRational& value, RenderFormat format)
{
    if (format == RenderFormat::json)
        return to_json(value).dump();

    const Rational& rat = value.rat_part();
    const Rational& pi = value.pi_part();
    if (pi.is_zero())
        return rat.to_string();

    std::string pi_term;
    const Rational magnitude = abs(pi);
    pi_term = magnitude == Rational(1) ? "pi" : magnitude.to_string() + "*pi";

    if (rat.is_zero())
        return (pi.sign() < 0 ? "-" : "") + pi_term;
    return rat.to_string() + (pi.sign() < 0 ? " - " : " + ") + pi_term;
}

nlohmann::json to_json(const PiRational& value)
{
    auto pair = [](const Rational& r) {
        return nlohmann::json::array({r.numerator().get_str(), r.denominator().get_str()});
    };
    return {{"rat", pair(value.rat_part())}, {"pi", pair(value.pi_part())}};
}

PiRational pi_rational_from_json(const nlohmann::json& value)
{
    auto read = [&](const char* key) {
        if (!value.is_object() || !value.contains(key))
            throw ParseError(std::string("missing field: ") + key);
        const auto& pair = value.at(key);
        if (!pair.is_array() || pair.size() != 2 || !pair[0].is_string() || !pair[1].is_string())
            throw ParseError(std::string("field must be [num, den] strings: ") + key);
        return Rational::parse(pair[0].get<std::string>() + "/" + pair[1].get<std::string>());
    };
    return {read("rat"), read("pi")};
}

PiRational parse_pi_rational(std::string_view text)
{
    text = trim(text);
    if (text.empty())
        throw ParseError("empty value");

    constexpr std::string_view suffix = "pi";
    if (text.size() < suffix.size() || text.substr(text.size() - suffix.size()) != suffix)
        return PiRational(Rational::parse(text));

    Rational rat;
    std::string_view pi_text = text;
    int pi_sign = 1;
    const auto plus = text.rfind(" + ");
    const auto minus = text.rfind(" - ");
    const auto split = plus == std::string_view::npos ? minus
                     : minus == std::string_view::npos ? plus
                                                       : std::max(plus, minus);
    if (split != std::string_view::npos) {
        rat = Rational::parse(text.substr(0, split));
        pi_sign = text[split + 1] == '-' ? -1 : 1;
        pi_text = text.substr(split + 3);
    }

    pi_text.remove_suffix(suffix.size());
    Rational coef(1);
    if (pi_text == "-") {
        coef = Rational(-1);
    } else if (!pi_text.empty()) {
        if (pi_text.back() != '*')
            throw ParseError("malformed pi term: " + std::string(text));
        pi_text.remove_suffix(1);
        coef = Rational::parse(pi_text);
    }
    return {rat, pi_sign < 0 ? -coef : coef};
}

}  // namespace lorentzint
