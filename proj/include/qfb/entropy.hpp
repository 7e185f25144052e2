#pragma once

namespace qfb {

// T(x,y) = x log4(3) - x log4(y) - (1-x) log4(1-y), with the 0*log0 = 0
// convention where x forces it. Exponents throughout the library are base 4.
double entropy_t(double x, double y);

// H(x) = T(x,x): x log4(3) - x log4(x) - (1-x) log4(1-x). Increasing on
// [0, 3/4] with H(3/4) = 1. Throws std::domain_error outside [0,1].
double entropy_h(double x);

// Binary entropy, base 2.
double entropy_h2(double x);

// Inverse of H on the increasing branch [0, 3/4]; y in [0,1].
double inverse_entropy_h(double y);

// Inverse of H2 on the increasing branch [0, 1/2]; y in [0,1].
double inverse_entropy_h2(double y);

} // namespace qfb
