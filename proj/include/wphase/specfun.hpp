#pragma once

// Special functions needed by the closed forms of the Wigner phase operator.
// Every routine has a fixed evaluation range and throws DomainError outside
// it rather than degrading silently.

#include <complex>

#include "wphase/errors.hpp"
#include "wphase/wide.hpp"

namespace wphase {

/// Real number stored as (sign, log|x|). Factorial and Gamma prefactors are
/// carried in this form until the final multiply.
class SignedLogReal {
 public:
  constexpr SignedLogReal() = default;
  constexpr SignedLogReal(int sign, double logmag)
      : sign_(sign == 0 ? 0 : (sign > 0 ? 1 : -1)), logmag_(sign == 0 ? 0.0 : logmag) {}

  static SignedLogReal from_double(double x);
  static SignedLogReal from_wide(const WideReal& x);
  static constexpr SignedLogReal zero() { return {}; }
  static constexpr SignedLogReal one() { return {1, 0.0}; }

  int sign() const { return sign_; }
  double logmag() const { return logmag_; }
  bool is_zero() const { return sign_ == 0; }

  /// Throws OverflowError if |x| exceeds the largest finite double.
  double to_double() const;

  SignedLogReal operator*(const SignedLogReal& o) const {
    return {sign_ * o.sign_, logmag_ + o.logmag_};
  }
  SignedLogReal operator/(const SignedLogReal& o) const;
  SignedLogReal& operator*=(const SignedLogReal& o) { return *this = *this * o; }
  SignedLogReal& operator/=(const SignedLogReal& o) { return *this = *this / o; }
  SignedLogReal sqrt() const;
  SignedLogReal negated() const { return {-sign_, logmag_}; }

 private:
  int sign_ = 0;
  double logmag_ = 0.0;
};

/// Exact half-integer: value = twice / 2.
class HalfInt {
 public:
  constexpr explicit HalfInt(int twice) : twice_(twice) {}
  static constexpr HalfInt from_int(int n) { return HalfInt(2 * n); }
  /// numerator / 2
  static constexpr HalfInt halves(int numerator) { return HalfInt(numerator); }

  constexpr int twice() const { return twice_; }
  constexpr bool is_integer() const { return twice_ % 2 == 0; }
  constexpr double value() const { return 0.5 * twice_; }
  constexpr HalfInt operator+(int n) const { return HalfInt(twice_ + 2 * n); }
  constexpr bool operator==(const HalfInt&) const = default;

 private:
  int twice_;
};

/// Gamma at a positive half-integer, by exact recurrence from Gamma(1) = 1
/// and Gamma(1/2) = sqrt(pi). Throws DomainError for x <= 0.
SignedLogReal log_gamma_half(HalfInt x);

/// Real error function, absolute error <= 1e-14.
double erf_real(double x);

/// Supported disc for the complex error function.
inline constexpr double kErfComplexRadius = 12.0;

/// Complex error function on |z| <= 12, relative error <= 1e-10 away from
/// its zeros. Maclaurin series in wide precision near the origin and the
/// imaginary axis, Laplace continued fraction for erfc elsewhere.
std::complex<double> erf_complex(std::complex<double> z);

/// 1 - erf(z) on the same disc, computed without the cancellation of the
/// naive subtraction when erf(z) is close to 1.
std::complex<double> erfc_complex(std::complex<double> z);

/// 2F1(-neg_a, b; c; z): finite Pochhammer sum of neg_a + 1 terms,
/// accumulated in wide precision in descending-magnitude order.
/// Throws PoleError if (c)_n vanishes within the summation range.
SignedLogReal hyp2f1_terminating(int neg_a, HalfInt b, int c, double z);

/// Range limit of hyp1f1.
inline constexpr double kHyp1f1MaxArg = 200.0;

/// 1F1(a; b; x) for b >= 1, 0 <= x <= 200. Relative error <= 1e-10.
double hyp1f1(HalfInt a, int b, double x);

/// 1F1(a; b; z) for real parameters and complex |z| <= 60, b not a
/// non-positive integer.
std::complex<double> hyp1f1_complex(double a, double b, std::complex<double> z);

/// Modified Bessel function I0 on 0 <= x <= 200, relative error <= 1e-12.
double bessel_i0(double x);

}  // namespace wphase
