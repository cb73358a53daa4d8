#pragma once

#include <cmath>
#include <complex>

namespace wphase {

/// Neumaier variant of Kahan summation. Works for double or any type with
/// abs(), including the wide-precision reals.
template <typename T>
class CompensatedSum {
 public:
  void add(const T& x) {
    using std::abs;
    T t = sum_ + x;
    if (abs(sum_) >= abs(x)) {
      comp_ += (sum_ - t) + x;
    } else {
      comp_ += (x - t) + sum_;
    }
    sum_ = t;
  }
  CompensatedSum& operator+=(const T& x) {
    add(x);
    return *this;
  }
  T value() const { return sum_ + comp_; }

 private:
  T sum_ = T(0);
  T comp_ = T(0);
};

/// Complex accumulator compensating real and imaginary parts separately.
class CompensatedComplexSum {
 public:
  void add(std::complex<double> z) {
    re_.add(z.real());
    im_.add(z.imag());
  }
  CompensatedComplexSum& operator+=(std::complex<double> z) {
    add(z);
    return *this;
  }
  std::complex<double> value() const { return {re_.value(), im_.value()}; }

 private:
  CompensatedSum<double> re_;
  CompensatedSum<double> im_;
};

}  // namespace wphase
