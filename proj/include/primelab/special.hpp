#pragma once

#include <complex>

namespace primelab {

// Complex gamma function via a 15-term Lanczos rational approximation with
// reflection for Re(z) < 1/2. Relative accuracy around 1e-13 away from poles.
std::complex<double> gamma_complex(std::complex<double> z);

// Exponential integral E1(s) = Gamma(0, s) for Re(s) > 0: power series near
// the origin, modified-Lentz continued fraction beyond.
std::complex<double> exp_integral_e1(std::complex<double> s);

}  // namespace primelab
