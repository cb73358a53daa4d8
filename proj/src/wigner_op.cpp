#include "wphase/wigner_op.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <numbers>
#include <string>
#include <thread>
#include <vector>

#include "wphase/compensated_sum.hpp"
#include "wphase/errors.hpp"
#include "wphase/specfun.hpp"
#include "wphase/wide.hpp"

namespace wphase {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

// Absolute error allowed on an entry before we refuse to return it.
const WideReal& max_abs_error() {
  static const WideReal v("1e-16");
  return v;
}

const WideReal& unit_roundoff() {
  static const WideReal v("1e-49");
  return v;
}

const WideReal& two_pi_wide() {
  static const WideReal v = 2 * boost::math::constants::pi<WideReal>();
  return v;
}

void require_indices(int s, int r) {
  if (s < 0 || r < 0) {
    throw DomainError("matrix element indices must be non-negative, got (" + std::to_string(s) + ", " +
                      std::to_string(r) + ")");
  }
}

double reduce_angle(double theta) {
  double t = std::fmod(theta, kTwoPi);
  if (t < 0) t += kTwoPi;
  return t;
}

// Accumulates the terms of an alternating sum together with the largest
// term, so the final value carries an a-priori rounding bound.
class TrackedSum {
 public:
  void add(const WideReal& t) {
    acc_.add(t);
    const WideReal a = boost::multiprecision::abs(t);
    if (a > largest_) largest_ = a;
    ++count_;
  }
  WideReal value() const { return acc_.value(); }
  WideReal error_bound(const WideReal& prefactor) const {
    return largest_ * prefactor * unit_roundoff() * (count_ + 1);
  }

 private:
  CompensatedSum<WideReal> acc_;
  WideReal largest_ = 0;
  int count_ = 0;
};

double checked_entry(const TrackedSum& sum, const WideReal& prefactor, const char* form, int s, int r) {
  if (sum.error_bound(prefactor) > max_abs_error()) {
    throw PrecisionLossError(std::string(form) + ": cancellation at (" + std::to_string(s) + ", " +
                             std::to_string(r) + ") exceeds working precision");
  }
  return static_cast<double>(sum.value() * prefactor);
}

// sqrt(s! r!) / (2 pi)
WideReal sqrt_factorials_over_two_pi(int s, int r) {
  return boost::multiprecision::sqrt(detail::factorial_wide(s) * detail::factorial_wide(r)) / two_pi_wide();
}

// Finite alternating sum, with separate branches for r >= s and s >= r;
// the two agree on the diagonal.
double double_sum_coefficient(int s, int r) {
  TrackedSum sum;
  if (r >= s) {
    const int d = r - s;
    for (int n = 0; n <= s; ++n) {
      // (sqrt2 e^{-i theta})^{d+n} (sqrt2 e^{i theta})^n has modulus sqrt2^{d+2n}
      WideReal t = detail::sqrt2_pow_wide(d + 2 * n) * detail::gamma_half_wide(d + 2 * n + 2) /
                   (detail::factorial_wide(n) * detail::factorial_wide(s - n) * detail::factorial_wide(d + n));
      if ((s - n) % 2 != 0) t = -t;
      sum.add(t);
    }
  } else {
    const int d = s - r;
    for (int n = 0; n <= r; ++n) {
      WideReal t = detail::sqrt2_pow_wide(2 * n + d) * detail::gamma_half_wide(d + 2 * n + 2) /
                   (detail::factorial_wide(n) * detail::factorial_wide(r - n) * detail::factorial_wide(d + n));
      if ((r - n) % 2 != 0) t = -t;
      sum.add(t);
    }
  }
  return checked_entry(sum, sqrt_factorials_over_two_pi(s, r), "element_double_sum", s, r);
}

SignedLogReal log_factorial(int n) { return log_gamma_half(HalfInt::from_int(n + 1)); }

// Closed form with the terminating 2F1 and the Gamma(1/2 + d/2) denominator.
double hypergeometric_coefficient(int s, int r) {
  const int lo = std::min(s, r);
  const int d = std::abs(r - s);
  // 2F1 is symmetric in its numerator parameters, so the s >= r branch
  // 2F1(1 + d/2, -r; 1 + d; 2) is the same call with lo = r.
  const SignedLogReal f = hyp2f1_terminating(lo, HalfInt::halves(d + 2), 1 + d, 2.0);
  SignedLogReal prefactor = (log_factorial(s) * log_factorial(r) / SignedLogReal::from_double(4.0 * std::numbers::pi)).sqrt();
  prefactor /= log_factorial(lo);
  prefactor *= SignedLogReal(1, -0.5 * d * std::numbers::ln2);  // (1/sqrt2)^d
  prefactor /= log_gamma_half(HalfInt::halves(d + 1));
  if (lo % 2 != 0) prefactor = prefactor.negated();
  return (prefactor * f).to_double();
}

// rho_w = (1/2pi) sum_{n,k} sum_{l<=n} Gamma(n/2+1) (-1)^k/k! (e^{-i theta} sqrt2)^{n-l}/(n-l)!
//         (e^{i theta} sqrt2)^l/l! sqrt((k+l)! (n+k-l)!) |k+l><n+k-l|
// Only k + l = s and n + k - l = r contribute to <s|.|r>.
struct FockDecompositionResult {
  double coefficient;
  int phase_winding;  // exponent of e^{-i theta}, n - 2l
};

FockDecompositionResult fock_decomposition_coefficient(int s, int r) {
  TrackedSum sum;
  int winding = r - s;
  for (int l = 0; l <= s; ++l) {
    const int k = s - l;
    const int n = r - k + l;
    if (n < l) continue;
    winding = n - 2 * l;
    WideReal t = detail::gamma_half_wide(n + 2) / detail::factorial_wide(k) *
                 detail::sqrt2_pow_wide(n - l) / detail::factorial_wide(n - l) * detail::sqrt2_pow_wide(l) /
                 detail::factorial_wide(l) *
                 boost::multiprecision::sqrt(detail::factorial_wide(k + l) * detail::factorial_wide(n + k - l));
    if (k % 2 != 0) t = -t;
    sum.add(t);
  }
  const double c = checked_entry(sum, 1 / two_pi_wide(), "element_fock_decomposition", s, r);
  return {c, winding};
}

}  // namespace

std::string_view form_name(ElementForm form) {
  switch (form) {
    case ElementForm::DoubleSum:
      return "double";
    case ElementForm::Hypergeometric:
      return "hyp";
    case ElementForm::FockDecomposition:
      return "fock";
  }
  return "unknown";
}

Complex element_double_sum(int s, int r, double theta) {
  require_indices(s, r);
  return double_sum_coefficient(s, r) * std::polar(1.0, (s - r) * theta);
}

Complex element_hypergeometric(int s, int r, double theta) {
  require_indices(s, r);
  // (e^{-i theta}/sqrt2)^{r-s} for r >= s, (e^{i theta}/sqrt2)^{s-r} otherwise
  const double phase = r >= s ? -(r - s) * theta : (s - r) * theta;
  return hypergeometric_coefficient(s, r) * std::polar(1.0, phase);
}

Complex element_fock_decomposition(int s, int r, double theta) {
  require_indices(s, r);
  const auto res = fock_decomposition_coefficient(s, r);
  return res.coefficient * std::polar(1.0, -res.phase_winding * theta);
}

Complex element(ElementForm form, int s, int r, double theta) {
  switch (form) {
    case ElementForm::DoubleSum:
      return element_double_sum(s, r, theta);
    case ElementForm::Hypergeometric:
      return element_hypergeometric(s, r, theta);
    case ElementForm::FockDecomposition:
      return element_fock_decomposition(s, r, theta);
  }
  throw DomainError("unknown element form");
}

namespace {

double coefficient(ElementForm form, int s, int r) {
  switch (form) {
    case ElementForm::DoubleSum:
      return double_sum_coefficient(s, r);
    case ElementForm::Hypergeometric:
      return hypergeometric_coefficient(s, r);
    case ElementForm::FockDecomposition:
      return fock_decomposition_coefficient(s, r).coefficient;
  }
  throw DomainError("unknown element form");
}

void require_ceiling(int dim, const char* what) {
  if (dim < 1 || dim > kStabilityCeiling) {
    throw DomainError(std::string(what) + ": dim " + std::to_string(dim) + " outside [1, " +
                      std::to_string(kStabilityCeiling) + "]");
  }
}

// Each entry is an independent pure computation, so the row partition does
// not affect the result.
Eigen::MatrixXd compute_coefficients(int dim, ElementForm form) {
  Eigen::MatrixXd c(dim, dim);
  const int workers = std::clamp(static_cast<int>(std::thread::hardware_concurrency()), 1, 8);
  std::vector<std::thread> pool;
  std::vector<std::exception_ptr> errors(workers);
  for (int w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      try {
        for (int s = w; s < dim; s += workers) {
          for (int r = 0; r < dim; ++r) c(s, r) = coefficient(form, s, r);
        }
      } catch (...) {
        errors[w] = std::current_exception();
      }
    });
  }
  for (auto& t : pool) t.join();
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  return c;
}

}  // namespace

const Eigen::MatrixXd& coefficient_matrix(int dim, ElementForm form) {
  require_ceiling(dim, "coefficient_matrix");
  // Coefficients do not depend on the truncation, so one matrix at the
  // ceiling serves every dim; requested blocks are cached by value.
  static std::mutex mu;
  static std::vector<Eigen::MatrixXd> full(3);
  static std::map<std::pair<int, int>, std::unique_ptr<Eigen::MatrixXd>> blocks;
  const int idx = static_cast<int>(form);
  std::lock_guard<std::mutex> lock(mu);
  auto& slot = blocks[{idx, dim}];
  if (!slot) {
    if (full[idx].rows() < dim) full[idx] = compute_coefficients(dim, form);
    slot = std::make_unique<Eigen::MatrixXd>(full[idx].topLeftCorner(dim, dim));
  }
  return *slot;
}

WignerPhaseMatrix build_matrix(double theta, int dim, ElementForm form) {
  require_ceiling(dim, "build_matrix");
  const double t = reduce_angle(theta);
  const Eigen::MatrixXd& c = coefficient_matrix(dim, form);
  Eigen::VectorXcd phase(dim);
  for (int n = 0; n < dim; ++n) phase[n] = std::polar(1.0, n * t);
  Eigen::MatrixXcd m = phase.asDiagonal() * c.cast<Complex>() * phase.conjugate().asDiagonal();
  return {t, FockOperator(std::move(m)), form};
}

FockOperator completeness_integral(int dim, int n_theta) {
  require_ceiling(dim, "completeness_integral");
  if (n_theta < 1) throw DomainError("completeness_integral: n_theta must be positive");
  const double h = kTwoPi / n_theta;
  std::vector<CompensatedComplexSum> acc(static_cast<std::size_t>(dim) * dim);
  for (int j = 0; j < n_theta; ++j) {
    const FockOperator m = build_matrix(j * h, dim).op;
    for (int s = 0; s < dim; ++s) {
      for (int r = 0; r < dim; ++r) acc[s * dim + r].add(h * m(s, r));
    }
  }
  FockOperator out(dim);
  for (int s = 0; s < dim; ++s) {
    for (int r = 0; r < dim; ++r) out(s, r) = acc[s * dim + r].value();
  }
  return out;
}

double idempotence_defect(double theta, int dim) {
  const FockOperator m = build_matrix(theta, dim).op;
  return (m * m - m).frobenius_norm();
}

}  // namespace wphase
