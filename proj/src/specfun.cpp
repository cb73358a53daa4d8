#include "wphase/specfun.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <mutex>
#include <numbers>
#include <string>
#include <vector>

#include "wphase/compensated_sum.hpp"

namespace wphase {

namespace detail {
namespace {

constexpr int kFactorialTable = 1024;
constexpr int kGammaHalfTable = 2048;

const std::vector<WideReal>& factorial_table() {
  static const std::vector<WideReal> table = [] {
    std::vector<WideReal> t(kFactorialTable + 1);
    t[0] = 1;
    for (int n = 1; n <= kFactorialTable; ++n) t[n] = t[n - 1] * n;
    return t;
  }();
  return table;
}

// Entry i holds Gamma(i / 2); entry 0 is unused (pole).
const std::vector<WideReal>& gamma_half_table() {
  static const std::vector<WideReal> table = [] {
    std::vector<WideReal> t(kGammaHalfTable + 1);
    t[0] = 0;
    t[1] = boost::multiprecision::sqrt(boost::math::constants::pi<WideReal>());
    t[2] = 1;
    for (int i = 3; i <= kGammaHalfTable; ++i) {
      // Gamma(x + 1) = x Gamma(x) with x = (i - 2) / 2
      t[i] = t[i - 2] * WideReal(i - 2) / 2;
    }
    return t;
  }();
  return table;
}

}  // namespace

const WideReal& factorial_wide(int n) {
  if (n < 0) throw DomainError("factorial of negative integer " + std::to_string(n));
  if (n <= kFactorialTable) return factorial_table()[n];
  static std::mutex mu;
  static std::vector<WideReal> extra;  // extra[k] = (kFactorialTable + 1 + k)!
  std::lock_guard<std::mutex> lock(mu);
  while (static_cast<int>(extra.size()) <= n - kFactorialTable - 1) {
    const WideReal& prev = extra.empty() ? factorial_table().back() : extra.back();
    extra.push_back(prev * (kFactorialTable + 1 + static_cast<int>(extra.size())));
  }
  return extra[n - kFactorialTable - 1];
}

const WideReal& gamma_half_wide(int twice) {
  if (twice <= 0) {
    throw DomainError("Gamma pole at non-positive argument " + std::to_string(twice) + "/2");
  }
  if (twice <= kGammaHalfTable) return gamma_half_table()[twice];
  static std::mutex mu;
  static std::vector<WideReal> extra;  // extra[k] = Gamma((kGammaHalfTable + 1 + k) / 2)
  std::lock_guard<std::mutex> lock(mu);
  const auto& base = gamma_half_table();
  while (static_cast<int>(extra.size()) <= twice - kGammaHalfTable - 1) {
    const int i = kGammaHalfTable + 1 + static_cast<int>(extra.size());
    const WideReal& two_back = (i - 2 <= kGammaHalfTable) ? base[i - 2] : extra[i - 2 - kGammaHalfTable - 1];
    extra.push_back(two_back * WideReal(i - 2) / 2);
  }
  return extra[twice - kGammaHalfTable - 1];
}

WideReal sqrt2_pow_wide(int k) {
  if (k < 0) throw DomainError("sqrt2_pow_wide: negative exponent");
  static const WideReal sqrt2 = boost::multiprecision::sqrt(WideReal(2));
  WideReal out = boost::multiprecision::ldexp(WideReal(1), k / 2);
  if (k % 2 != 0) out *= sqrt2;
  return out;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// SignedLogReal

SignedLogReal SignedLogReal::from_double(double x) {
  if (!std::isfinite(x)) throw DomainError("SignedLogReal: non-finite input");
  if (x == 0.0) return zero();
  return {x > 0 ? 1 : -1, std::log(std::fabs(x))};
}

SignedLogReal SignedLogReal::from_wide(const WideReal& x) {
  if (x == 0) return zero();
  return {x > 0 ? 1 : -1, static_cast<double>(boost::multiprecision::log(boost::multiprecision::abs(x)))};
}

double SignedLogReal::to_double() const {
  if (sign_ == 0) return 0.0;
  static const double max_log = std::log(std::numeric_limits<double>::max());
  if (logmag_ > max_log) {
    throw OverflowError("SignedLogReal: magnitude exp(" + std::to_string(logmag_) + ") overflows double");
  }
  return sign_ * std::exp(logmag_);
}

SignedLogReal SignedLogReal::operator/(const SignedLogReal& o) const {
  if (o.sign_ == 0) throw DomainError("SignedLogReal: division by zero");
  return {sign_ * o.sign_, logmag_ - o.logmag_};
}

SignedLogReal SignedLogReal::sqrt() const {
  if (sign_ < 0) throw DomainError("SignedLogReal: square root of negative value");
  return {sign_, 0.5 * logmag_};
}

// ---------------------------------------------------------------------------
// Gamma

SignedLogReal log_gamma_half(HalfInt x) {
  if (x.twice() <= 0) {
    throw DomainError("log_gamma_half: argument " + std::to_string(x.value()) + " is not positive");
  }
  return SignedLogReal::from_wide(detail::gamma_half_wide(x.twice()));
}

// ---------------------------------------------------------------------------
// Error functions

double erf_real(double x) { return std::erf(x); }

namespace {

const WideReal& two_over_sqrt_pi_wide() {
  static const WideReal v = 2 / boost::multiprecision::sqrt(boost::math::constants::pi<WideReal>());
  return v;
}

// Maclaurin series erf(z) = 2/sqrt(pi) sum (-1)^n z^(2n+1) / (n! (2n+1)).
// Terms reach |z| exp(|z|^2) before decaying; 50 digits absorb that on the
// supported disc.
WideComplex erf_maclaurin_wide(std::complex<double> z_in) {
  const WideComplex z(z_in.real(), z_in.imag());
  const WideComplex minus_z2 = -(z * z);
  const double mod2 = std::norm(z_in);
  WideComplex term = z;
  WideComplex sum(0);
  static const WideReal rel_stop("1e-45");
  for (int n = 0; n < 4000; ++n) {
    const WideComplex contrib = term / WideReal(2 * n + 1);
    sum += contrib;
    if (n > mod2 && boost::multiprecision::abs(contrib) <= rel_stop * boost::multiprecision::abs(sum)) break;
    term *= minus_z2 / WideReal(n + 1);
  }
  return sum * two_over_sqrt_pi_wide();
}

// Laplace continued fraction for erfc, valid for Re z > 0:
// erfc(z) = exp(-z^2)/sqrt(pi) / (z + (1/2)/(z + 1/(z + (3/2)/(z + ...))))
std::complex<double> erfc_continued_fraction(std::complex<double> z) {
  constexpr double tiny = 1e-300;
  std::complex<double> f = z;
  std::complex<double> c = f;
  std::complex<double> d = 0.0;
  bool converged = false;
  for (int k = 1; k < 20000; ++k) {
    const double a = 0.5 * k;
    d = z + a * d;
    if (std::abs(d) < tiny) d = tiny;
    c = z + a / c;
    if (std::abs(c) < tiny) c = tiny;
    d = 1.0 / d;
    const std::complex<double> delta = c * d;
    f *= delta;
    if (std::abs(delta - 1.0) < 1e-16) {
      converged = true;
      break;
    }
  }
  if (!converged) throw DomainError("erfc continued fraction did not converge");
  return std::exp(-z * z) / (std::sqrt(std::numbers::pi) * f);
}

void check_erf_domain(std::complex<double> z) {
  if (!std::isfinite(z.real()) || !std::isfinite(z.imag()) || std::abs(z) > kErfComplexRadius) {
    throw DomainError("erf_complex: |z| = " + std::to_string(std::abs(z)) + " outside supported disc |z| <= 12");
  }
}

// Right half plane, Re z >= 0: which branch applies.
bool use_continued_fraction(std::complex<double> z) { return z.real() >= 2.0 && std::abs(z) >= 4.0; }

}  // namespace

std::complex<double> erf_complex(std::complex<double> z) {
  check_erf_domain(z);
  if (z.real() < 0.0) return -erf_complex(-z);
  if (use_continued_fraction(z)) return 1.0 - erfc_continued_fraction(z);
  return detail::to_complex(erf_maclaurin_wide(z));
}

std::complex<double> erfc_complex(std::complex<double> z) {
  check_erf_domain(z);
  if (z.real() < 0.0) return 2.0 - erfc_complex(-z);
  if (use_continued_fraction(z)) return erfc_continued_fraction(z);
  return detail::to_complex(WideComplex(1) - erf_maclaurin_wide(z));
}

// ---------------------------------------------------------------------------
// Hypergeometric functions

SignedLogReal hyp2f1_terminating(int neg_a, HalfInt b, int c, double z) {
  if (neg_a < 0) throw DomainError("hyp2f1_terminating: first parameter must be a non-positive integer");
  if (!std::isfinite(z)) throw DomainError("hyp2f1_terminating: non-finite argument");
  // (c)_n = c (c+1) ... (c+n-1) vanishes for n > -c when c <= 0.
  if (c <= 0 && neg_a > -c) {
    throw PoleError("hyp2f1_terminating: (c)_n vanishes for c = " + std::to_string(c) +
                    " within " + std::to_string(neg_a + 1) + " terms");
  }
  const WideReal bw = WideReal(b.twice()) / 2;
  const WideReal zw(z);
  std::vector<WideReal> terms;
  terms.reserve(neg_a + 1);
  WideReal t = 1;
  terms.push_back(t);
  for (int n = 0; n < neg_a; ++n) {
    t *= WideReal(n - neg_a) * (bw + n) * zw / (WideReal(c + n) * (n + 1));
    terms.push_back(t);
  }
  std::sort(terms.begin(), terms.end(), [](const WideReal& x, const WideReal& y) {
    return boost::multiprecision::abs(x) > boost::multiprecision::abs(y);
  });
  CompensatedSum<WideReal> acc;
  for (const auto& term : terms) acc.add(term);
  const WideReal sum = acc.value();
  if (sum != 0) {
    static const WideReal unit_roundoff("1e-49");
    const WideReal bound = boost::multiprecision::abs(terms.front()) * unit_roundoff * (neg_a + 1);
    if (bound > WideReal("1e-16") * boost::multiprecision::abs(sum)) {
      throw PrecisionLossError("hyp2f1_terminating: cancellation exceeds working precision");
    }
  }
  return SignedLogReal::from_wide(sum);
}

double hyp1f1(HalfInt a, int b, double x) {
  if (b < 1) throw DomainError("hyp1f1: requires b >= 1");
  if (!(x >= 0.0 && x <= kHyp1f1MaxArg)) {
    throw DomainError("hyp1f1: argument " + std::to_string(x) + " outside [0, 200]");
  }
  const WideReal aw = WideReal(a.twice()) / 2;
  const WideReal xw(x);
  const double n_monotone = std::max({x, std::fabs(a.value()), static_cast<double>(b)}) + 1.0;
  static const WideReal rel_stop("1e-30");
  CompensatedSum<WideReal> acc;
  WideReal t = 1;
  for (int n = 0;; ++n) {
    acc.add(t);
    if (t == 0) break;  // terminating series (a a non-positive integer)
    const WideReal ratio = (aw + n) * xw / (WideReal(b + n) * (n + 1));
    const WideReal next = t * ratio;
    if (n >= n_monotone) {
      const WideReal q = boost::multiprecision::abs(ratio);
      if (q < 1) {
        // Ratios decrease from here on, so the tail is dominated by a geometric series.
        const WideReal tail = boost::multiprecision::abs(next) / (1 - q);
        if (tail <= rel_stop * boost::multiprecision::abs(acc.value())) break;
      }
    }
    if (n > 100000) throw DomainError("hyp1f1: series did not converge");
    t = next;
  }
  const WideReal sum = acc.value();
  if (boost::multiprecision::abs(sum) > WideReal(std::numeric_limits<double>::max())) {
    throw OverflowError("hyp1f1: result overflows double");
  }
  return static_cast<double>(sum);
}

std::complex<double> hyp1f1_complex(double a, double b, std::complex<double> z) {
  if (b <= 0.0 && b == std::floor(b)) throw PoleError("hyp1f1_complex: b is a non-positive integer");
  if (!(std::abs(z) <= 60.0)) throw DomainError("hyp1f1_complex: |z| outside supported range 60");
  const WideComplex zw(z.real(), z.imag());
  const WideReal aw(a), bw(b);
  WideComplex sum(0);
  WideComplex t(1);
  const double mod = std::abs(z);
  static const WideReal rel_stop("1e-35");
  for (int n = 0; n < 100000; ++n) {
    sum += t;
    if (t == WideComplex(0)) break;
    t *= zw * (aw + n) / ((bw + n) * (n + 1));
    if (n > mod + std::fabs(a) + std::fabs(b) &&
        boost::multiprecision::abs(t) <= rel_stop * boost::multiprecision::abs(sum)) {
      break;
    }
  }
  return detail::to_complex(sum);
}

double bessel_i0(double x) {
  if (!(x >= 0.0 && x <= 200.0)) throw DomainError("bessel_i0: argument outside [0, 200]");
  const double q0 = 0.25 * x * x;
  CompensatedSum<double> acc;
  double t = 1.0;
  for (int k = 0; k < 10000; ++k) {
    acc.add(t);
    const double ratio = q0 / ((k + 1.0) * (k + 1.0));
    t *= ratio;
    if (k + 1 > 0.5 * x && ratio < 1.0) {
      if (t / (1.0 - ratio) <= 1e-17 * acc.value()) break;
    }
  }
  return acc.value();
}

}  // namespace wphase
