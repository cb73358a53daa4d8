#pragma once

// Extended-precision scalars used for every alternating finite sum in the
// library. 50 decimal digits leave ~20 correct digits after the worst
// cancellation met at the stability ceiling (dim 64).

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/cpp_complex.hpp>

#include <complex>

namespace wphase {

using WideReal = boost::multiprecision::cpp_bin_float_50;
using WideComplex = boost::multiprecision::cpp_complex_50;

inline constexpr int kWideDigits = 50;

namespace detail {

/// n! in wide precision, tabulated up to n = 1024 and computed past it.
const WideReal& factorial_wide(int n);

/// Gamma(twice / 2) for positive twice, tabulated up to twice = 2048.
const WideReal& gamma_half_wide(int twice);

/// sqrt(2)^k for k >= 0.
WideReal sqrt2_pow_wide(int k);

inline std::complex<double> to_complex(const WideComplex& z) {
  return {static_cast<double>(z.real()), static_cast<double>(z.imag())};
}

}  // namespace detail
}  // namespace wphase
