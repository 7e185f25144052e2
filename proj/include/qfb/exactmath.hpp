#pragma once

#include <gmpxx.h>

namespace qfb {

// All counting in this library is exact. Count is an arbitrary-precision
// integer (signed where needed, e.g. Krawtchouk values), Ratio an
// arbitrary-precision rational kept in canonical reduced form.
using Count = mpz_class;
using Ratio = mpq_class;

// num/den reduced, den > 0. Throws std::invalid_argument on den == 0.
Ratio make_ratio(Count num, Count den);

// C(n,m). Returns 0 when m < 0, n < 0 or m > n; the summations built on
// top of this rely on vanishing out-of-range terms.
Count binomial(long n, long m);

// Base-2 Gaussian binomial: the number of k-dimensional subspaces of an
// n-dimensional binary vector space. Returns 0 when k < 0 or k > n.
// Computed as [n] / ([k][n-k]) with the division asserted exact.
Count gaussian_binomial(long n, long k);

// [n] = (2^n - 1)(2^(n-1) - 1) ... (2 - 1).
Count bracket_product(long n);

// q-ary Krawtchouk polynomial K_j(i) of degree j on {0,...,n}:
//   K_j(i) = sum_t (-q)^t (q-1)^(j-t) C(n-t, j-t) C(i, t).
// Requires q >= 2, 0 <= j <= n, 0 <= i <= n.
Count krawtchouk(int q, int n, int j, int i);

// 2^e as an exact integer.
Count pow2(unsigned long e);

// base^e as an exact integer (base may be negative).
Count pow_count(const Count& base, unsigned long e);

} // namespace qfb
