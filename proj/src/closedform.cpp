#include "lorentzint/closedform.hpp"

#include "lorentzint/derivkernel.hpp"

#include <string>

namespace lorentzint {

namespace {

void require_even(unsigned m, unsigned n, const char* what)
{
    if ((m + n) % 2 != 0)
        throw ParityError(std::string(what) + ": m+n must be even, got (" + std::to_string(m) +
                          ", " + std::to_string(n) + ")");
}

// sin(k pi / 2) for odd k.
int sin_half_pi_odd(unsigned k) { return ((k - 1) / 2) % 2 == 0 ? 1 : -1; }

// (m+n)! / 2^(m+n+2), the common magnitude of the even-case values (pi omitted).
Rational even_magnitude(unsigned m, unsigned n)
{
    return Rational(factorial(m + n), power_of_two(m + n + 2));
}

}  // namespace

Rational IbpReduction::boundary_sum() const
{
    Rational sum;
    for (const auto& term : boundary_terms)
        sum += term.value;
    return sum;
}

int epsilon(unsigned m, unsigned n)
{
    require_even(m, n, "epsilon");
    return (m == n && m % 2 == 1) ? -1 : 1;
}

PiRational even_case_paper(unsigned m, unsigned n)
{
    require_even(m, n, "even_case_paper");
    return PiRational::pi_multiple(even_magnitude(m, n) * Rational(epsilon(m, n)));
}

PiRational even_case_corrected(unsigned m, unsigned n)
{
    require_even(m, n, "even_case_corrected");
    const unsigned phase = n + (m + n) / 2;
    const Rational sign(phase % 2 == 0 ? 1 : -1);
    return PiRational::pi_multiple(even_magnitude(m, n) * sign);
}

PiRational odd_case(unsigned m, unsigned n)
{
    if ((m + n) % 2 == 0)
        throw ParityError("odd_case: m+n must be odd, got (" + std::to_string(m) + ", " +
                          std::to_string(n) + ")");
    if (m < n)
        std::swap(m, n);

    const int sin_sum = sin_half_pi_odd(m + n);
    const int sin_diff = sin_half_pi_odd(m - n);

    BigInt total = 0;
    for (unsigned j = 1; j <= m - n; ++j) {
        const int bracket = sin_sum - (j % 2 == 0 ? 1 : -1) * sin_diff;
        if (bracket == 0)
            continue;
        total += BigInt(bracket) * factorial(m - j) * factorial(n + j - 1);
    }
    if (m % 2 == 1)
        total = -total;
    return PiRational(Rational(total, BigInt(4)));
}

PiRational special_case_adjacent(unsigned k, AdjacentKind kind)
{
    if (kind == AdjacentKind::upper)
        return {};
    const BigInt f = factorial(2 * k);
    return PiRational(Rational(BigInt(-f * f), BigInt(2)));
}

IbpReduction ibp_reduce(unsigned m, unsigned n)
{
    IbpReduction out;
    out.boundary_terms.reserve(n);
    for (unsigned j = 1; j <= n; ++j) {
        Rational term = -(value_at_zero(m + j - 1) * value_at_zero(n - j));
        if (j % 2 == 0)
            term = -term;
        out.boundary_terms.push_back({j, std::move(term)});
    }
    out.terminal = {m + n, 0};
    out.sign = n % 2 == 0 ? 1 : -1;
    return out;
}

}  // namespace lorentzint
