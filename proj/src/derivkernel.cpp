#include "lorentzint/derivkernel.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <mutex>
#include <shared_mutex>

namespace lorentzint {

IntPoly::IntPoly(std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

IntPoly::IntPoly(std::initializer_list<long> coeffs)
{
    coeffs_.reserve(coeffs.size());
    for (long c : coeffs)
        coeffs_.emplace_back(c);
    trim();
}

void IntPoly::trim()
{
    while (!coeffs_.empty() && coeffs_.back() == 0)
        coeffs_.pop_back();
}

BigInt IntPoly::coefficient(std::size_t power) const
{
    return power < coeffs_.size() ? coeffs_[power] : BigInt(0);
}

IntPoly IntPoly::derivative() const
{
    if (coeffs_.size() <= 1)
        return {};
    std::vector<BigInt> out(coeffs_.size() - 1);
    for (std::size_t k = 1; k < coeffs_.size(); ++k)
        out[k - 1] = coeffs_[k] * static_cast<unsigned long>(k);
    return IntPoly(std::move(out));
}

IntPoly IntPoly::times_x() const
{
    if (is_zero())
        return {};
    std::vector<BigInt> out;
    out.reserve(coeffs_.size() + 1);
    out.emplace_back(0);
    out.insert(out.end(), coeffs_.begin(), coeffs_.end());
    return IntPoly(std::move(out));
}

IntPoly& IntPoly::operator+=(const IntPoly& rhs)
{
    if (rhs.coeffs_.size() > coeffs_.size())
        coeffs_.resize(rhs.coeffs_.size());
    for (std::size_t k = 0; k < rhs.coeffs_.size(); ++k)
        coeffs_[k] += rhs.coeffs_[k];
    trim();
    return *this;
}

IntPoly& IntPoly::operator-=(const IntPoly& rhs)
{
    if (rhs.coeffs_.size() > coeffs_.size())
        coeffs_.resize(rhs.coeffs_.size());
    for (std::size_t k = 0; k < rhs.coeffs_.size(); ++k)
        coeffs_[k] -= rhs.coeffs_[k];
    trim();
    return *this;
}

IntPoly& IntPoly::operator*=(const BigInt& scale)
{
    if (scale == 0) {
        coeffs_.clear();
        return *this;
    }
    for (auto& c : coeffs_)
        c *= scale;
    return *this;
}

IntPoly operator*(const IntPoly& a, const IntPoly& b)
{
    if (a.is_zero() || b.is_zero())
        return {};
    std::vector<BigInt> out(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
        if (a.coeffs_[i] == 0)
            continue;
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
            out[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return IntPoly(std::move(out));
}

Rational IntPoly::evaluate(const Rational& x) const
{
    Rational acc;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
        acc = acc * x + Rational(*it);
    return acc;
}

double IntPoly::evaluate(double x) const
{
    double acc = 0.0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
        acc = acc * x + it->get_d();
    return acc;
}

std::string IntPoly::to_string(const std::string& var) const
{
    if (is_zero())
        return "0";
    std::string out;
    for (std::size_t k = coeffs_.size(); k-- > 0;) {
        const BigInt& c = coeffs_[k];
        if (c == 0)
            continue;
        const BigInt magnitude = abs(c);
        if (out.empty())
            out += c < 0 ? "-" : "";
        else
            out += c < 0 ? " - " : " + ";

        if (k == 0) {
            out += magnitude.get_str();
            continue;
        }
        if (magnitude != 1)
            out += magnitude.get_str() + "*";
        out += var;
        if (k > 1)
            out += "^" + std::to_string(k);
    }
    return out;
}

namespace {

class DerivativeCache {
public:
    const DerivRep& get(unsigned n)
    {
        {
            std::shared_lock lock(mutex_);
            if (n < reps_.size())
                return reps_[n];
        }
        std::unique_lock lock(mutex_);
        if (reps_.empty())
            reps_.push_back({0, IntPoly{1}});
        // deque::push_back keeps references to existing elements valid.
        while (reps_.size() <= n) {
            const DerivRep& prev = reps_.back();
            const unsigned k = prev.order;
            const IntPoly one_plus_x2{1, 0, 1};
            IntPoly next = one_plus_x2 * prev.numerator.derivative()
                         - prev.numerator.times_x() * BigInt(2UL * (k + 1));
            reps_.push_back({k + 1, std::move(next)});
        }
        return reps_[n];
    }

private:
    std::shared_mutex mutex_;
    std::deque<DerivRep> reps_;
};

DerivativeCache& cache()
{
    static DerivativeCache instance;
    return instance;
}

void check_order(unsigned n, unsigned max_order)
{
    if (n > max_order)
        throw OrderTooLargeError("derivative order " + std::to_string(n) +
                                 " exceeds float-safety bound " + std::to_string(max_order));
}

}  // namespace

const DerivRep& derivative_rep(unsigned n) { return cache().get(n); }

Rational value_at_zero(unsigned n)
{
    if (n % 2 == 1)
        return {};
    const BigInt f = factorial(n);
    return (n / 2) % 2 == 0 ? Rational(f) : Rational(BigInt(-f));
}

IntPoly ode_residual(unsigned n)
{
    const IntPoly& p0 = derivative_rep(n).numerator;
    const IntPoly& p1 = derivative_rep(n + 1).numerator;
    const IntPoly& p2 = derivative_rep(n + 2).numerator;
    const IntPoly one_plus_x2{1, 0, 1};
    return p2 + p1.times_x() * BigInt(2UL * (n + 2))
              + one_plus_x2 * p0 * BigInt(static_cast<unsigned long>(n + 2) * (n + 1));
}

double eval_f(unsigned n, double x, unsigned max_order)
{
    check_order(n, max_order);
    const double numerator = derivative_rep(n).numerator.evaluate(x);
    return numerator / std::pow(1.0 + x * x, static_cast<int>(n + 1));
}

double eval_numerator_homogeneous(unsigned n, double sin_t, double cos_t, unsigned max_order)
{
    check_order(n, max_order);
    const auto& c = derivative_rep(n).numerator.coefficients();
    // Horner in sin with a running power of cos: sum_k c_k s^k c^(n-k).
    double acc = 0.0;
    double cos_power = 1.0;
    for (std::size_t k = c.size(); k-- > 0;) {
        acc = acc * sin_t + c[k].get_d() * cos_power;
        cos_power *= cos_t;
    }
    return acc;
}

}  // namespace lorentzint
