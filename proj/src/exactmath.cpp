#include "qfb/exactmath.hpp"

#include <stdexcept>

namespace qfb {

Ratio make_ratio(Count num, Count den) {
  if (den == 0) throw std::invalid_argument("make_ratio: zero denominator");
  Ratio r(std::move(num), std::move(den));
  r.canonicalize();
  return r;
}

Count binomial(long n, long m) {
  if (n < 0 || m < 0 || m > n) return 0;
  Count r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n),
               static_cast<unsigned long>(m));
  return r;
}

Count bracket_product(long n) {
  Count r = 1;
  for (long i = 1; i <= n; ++i) r *= pow2(static_cast<unsigned long>(i)) - 1;
  return r;
}

Count gaussian_binomial(long n, long k) {
  if (n < 0 || k < 0 || k > n) return 0;
  Count num = bracket_product(n);
  Count den = bracket_product(k) * bracket_product(n - k);
  Count q, rem;
  mpz_tdiv_qr(q.get_mpz_t(), rem.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  if (rem != 0) throw std::logic_error("gaussian_binomial: inexact division");
  return q;
}

Count krawtchouk(int q, int n, int j, int i) {
  if (q < 2 || j < 0 || j > n || i < 0 || i > n)
    throw std::invalid_argument("krawtchouk: arguments out of range");
  Count total = 0;
  for (int t = 0; t <= j; ++t) {
    Count term = pow_count(Count(-q), static_cast<unsigned long>(t));
    term *= pow_count(Count(q - 1), static_cast<unsigned long>(j - t));
    term *= binomial(n - t, j - t);
    term *= binomial(i, t);
    total += term;
  }
  return total;
}

Count pow2(unsigned long e) {
  Count r;
  mpz_ui_pow_ui(r.get_mpz_t(), 2, e);
  return r;
}

Count pow_count(const Count& base, unsigned long e) {
  Count r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
  return r;
}

} // namespace qfb
