#pragma once

#include <cmath>
#include <cstdint>
#include <limits>

#include "qfb/exactmath.hpp"

namespace qfb {

// Signed log-magnitude real. Holds sign in {-1,0,+1} and ln|x|, so that
// products like (p/3)^m (1-p)^(n-m) at n ~ 3000 stay representable where a
// plain double would underflow. sign == 0 iff the value is exactly zero.
struct LogReal {
  int sign = 0;
  double log_mag = -std::numeric_limits<double>::infinity();

  static LogReal zero() { return {}; }
  static LogReal one() { return {1, 0.0}; }

  static LogReal from_log(int sign, double log_mag) {
    if (sign == 0) return zero();
    return {sign < 0 ? -1 : 1, log_mag};
  }

  static LogReal from_double(double x) {
    if (x == 0.0) return zero();
    return {x < 0 ? -1 : 1, std::log(std::fabs(x))};
  }

  double to_double() const { return sign == 0 ? 0.0 : sign * std::exp(log_mag); }

  // log base 4 of |x|; the reporting convention for exponents.
  double log4() const { return log_mag / std::log(4.0); }

  bool is_zero() const { return sign == 0; }
};

inline LogReal lr_mul(const LogReal& a, const LogReal& b) {
  if (a.sign == 0 || b.sign == 0) return LogReal::zero();
  return {a.sign * b.sign, a.log_mag + b.log_mag};
}

inline LogReal lr_add(const LogReal& a, const LogReal& b) {
  if (a.sign == 0) return b;
  if (b.sign == 0) return a;
  const LogReal& hi = (a.log_mag >= b.log_mag) ? a : b;
  const LogReal& lo = (a.log_mag >= b.log_mag) ? b : a;
  double d = lo.log_mag - hi.log_mag; // <= 0
  if (a.sign == b.sign) {
    // Same sign never cancels: log(|hi| + |lo|) = hi + log1p(e^d).
    return {a.sign, hi.log_mag + std::log1p(std::exp(d))};
  }
  if (a.log_mag == b.log_mag) return LogReal::zero();
  return {hi.sign, hi.log_mag + std::log1p(-std::exp(d))};
}

inline LogReal lr_neg(const LogReal& a) { return {-a.sign, a.log_mag}; }

inline LogReal lr_sub(const LogReal& a, const LogReal& b) { return lr_add(a, lr_neg(b)); }

// a * base^e without forming base^e.
inline LogReal lr_mul_pow(const LogReal& a, double base, long e) {
  if (a.sign == 0) return a;
  return {a.sign, a.log_mag + static_cast<double>(e) * std::log(base)};
}

// Exact integer -> LogReal via a split into top bits and a power of two;
// relative error is a few ulps (<= 1e-14).
inline LogReal lr_from_count(const Count& c) {
  int s = sgn(c);
  if (s == 0) return LogReal::zero();
  signed long exp2;
  double d = mpz_get_d_2exp(&exp2, c.get_mpz_t()); // |d| in [0.5, 1)
  return {s, std::log(std::fabs(d)) + static_cast<double>(exp2) * std::log(2.0)};
}

inline LogReal lr_from_ratio(const Ratio& r) {
  LogReal num = lr_from_count(Count(r.get_num()));
  LogReal den = lr_from_count(Count(r.get_den()));
  if (num.sign == 0) return LogReal::zero();
  return {num.sign * den.sign, num.log_mag - den.log_mag};
}

// Compares |a| and |b| through the log magnitudes.
inline bool lr_less(const LogReal& a, const LogReal& b) {
  if (a.sign != b.sign) return a.sign < b.sign;
  if (a.sign == 0) return false;
  return a.sign > 0 ? a.log_mag < b.log_mag : a.log_mag > b.log_mag;
}

} // namespace qfb
