#pragma once

/**
 * @file closedform.hpp
 * @brief Closed forms for I(m,n) = int_0^inf f_m(x) f_n(x) dx.
 *
 * Two even-case formulas are provided side by side:
 *
 *  - even_case_paper:     eps(m,n) (m+n)! pi / 2^(m+n+2), with eps = -1 only
 *                         for m = n odd, exactly as published;
 *  - even_case_corrected: (-1)^(n + (m+n)/2) (m+n)! pi / 2^(m+n+2), which keeps
 *                         the phase of the (m+n)-th derivative of cos(xz) and
 *                         the (-1)^n produced by n integrations by parts.
 *
 * Validation against oracle::integral_exact (tests/closedform_test.cpp and
 * the acceptance suite): the corrected formula agrees exactly for every pair
 * with m+n even, m+n <= 24. The published formula always has the right
 * magnitude but agrees in sign only where eps(m,n) = (-1)^(n + (m+n)/2):
 * for m = n even, and for m != n with n + (m+n)/2 even. It is off by a sign
 * for every m = n odd (e.g. it gives -pi/8 for I(1,1) = int f_1^2 > 0) and
 * for m != n with n + (m+n)/2 odd (e.g. I(2,0), I(3,1)); 48 of the 91
 * unordered pairs with m+n <= 24. The odd-case sum agrees exactly for every
 * m+n <= 25.
 */

#include "lorentzint/exactnum.hpp"

#include <stdexcept>
#include <utility>
#include <vector>

namespace lorentzint {

struct IndexPair {
    unsigned m = 0;
    unsigned n = 0;
    friend bool operator==(const IndexPair&, const IndexPair&) = default;
};

class ParityError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// One boundary term of an integration-by-parts chain.
struct BoundaryTerm {
    unsigned step = 0;  ///< 1-based
    Rational value;     ///< already carries the running sign
};

/**
 * I(m,n) = sum(boundary_terms) + sign * I(terminal).
 */
struct IbpReduction {
    std::vector<BoundaryTerm> boundary_terms;
    IndexPair terminal;
    int sign = 1;

    Rational boundary_sum() const;
};

/// Published sign factor; requires m+n even.
int epsilon(unsigned m, unsigned n);

PiRational even_case_paper(unsigned m, unsigned n);
PiRational even_case_corrected(unsigned m, unsigned n);

/// Odd-case finite sum; arguments are swapped internally so that m > n.
PiRational odd_case(unsigned m, unsigned n);

enum class AdjacentKind { upper, lower };

/// upper: I(2k+2, 2k+1) = 0; lower: I(2k+1, 2k) = -[(2k)!]^2 / 2.
PiRational special_case_adjacent(unsigned k, AdjacentKind kind);

/// Moves all n derivatives from the second factor to the first:
/// I(m,n) = -f_m(0) f_{n-1}(0) - I(m+1, n-1), iterated down to (m+n, 0).
IbpReduction ibp_reduce(unsigned m, unsigned n);

}  // namespace lorentzint
