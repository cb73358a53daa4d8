#include "wphase/distributions.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "wphase/compensated_sum.hpp"
#include "wphase/errors.hpp"
#include "wphase/specfun.hpp"
#include "wphase/wigner_op.hpp"

namespace wphase {

namespace {
constexpr double kPi = std::numbers::pi;
constexpr double kTwoPi = 2.0 * kPi;
}  // namespace

double PhaseDistribution::spacing() const { return kTwoPi / n_grid; }

double PhaseDistribution::integral() const {
  CompensatedSum<double> acc;
  for (double v : values) acc.add(v);
  return acc.value() * spacing();
}

double PhaseDistribution::min_value() const { return *std::min_element(values.begin(), values.end()); }

Complex PhaseDistribution::trig_moment(int m) const {
  CompensatedComplexSum acc;
  for (int k = 0; k < n_grid; ++k) acc.add(values[k] * std::polar(1.0, m * theta(k)));
  return acc.value() * spacing();
}

PhaseDistribution phase_distribution(const DensityOperator& rho, int n_grid, int dim) {
  if (rho.dim() != dim) {
    throw DimensionError("phase_distribution: state dim " + std::to_string(rho.dim()) + " != " + std::to_string(dim));
  }
  if (n_grid < 2 * dim + 1) {
    throw DomainError("phase_distribution: n_grid " + std::to_string(n_grid) + " below 2*dim+1");
  }
  const Eigen::MatrixXd& c = coefficient_matrix(dim);
  const Eigen::MatrixXcd& p = rho.op().matrix();
  // Tr[rho M(theta)] = sum_k D_k exp(i k theta), D_k = sum_{s-r=k} rho(r,s) C(s,r)
  std::vector<Complex> band(2 * dim - 1);
  for (int k = -(dim - 1); k <= dim - 1; ++k) {
    CompensatedComplexSum acc;
    for (int s = std::max(0, k); s < dim && s - k < dim; ++s) {
      const int r = s - k;
      acc.add(p(r, s) * c(s, r));
    }
    band[k + dim - 1] = acc.value();
  }
  PhaseDistribution out;
  out.n_grid = n_grid;
  out.values.resize(n_grid);
  out.source = "trace";
  const double h = kTwoPi / n_grid;
  for (int j = 0; j < n_grid; ++j) {
    CompensatedComplexSum acc;
    for (int k = -(dim - 1); k <= dim - 1; ++k) acc.add(band[k + dim - 1] * std::polar(1.0, k * (j * h)));
    const Complex v = acc.value();
    out.values[j] = v.real();
    out.max_imag_residue = std::max(out.max_imag_residue, std::fabs(v.imag()));
  }
  return out;
}

double coherent_phase_closed(Complex alpha, double theta) {
  const double mod = std::abs(alpha);
  if (!(mod <= kCoherentClosedMaxAlpha)) {
    throw DomainError("coherent_phase_closed: |alpha| = " + std::to_string(mod) + " exceeds 20");
  }
  const double a = mod * std::cos(theta - std::arg(alpha));
  const double n2 = 2.0 * mod * mod;
  // 1 + erf(x) = erfc(-x) keeps full relative accuracy for a < 0.
  const double bracket_tail =
      std::sqrt(kPi / 2.0) * a * std::exp(2.0 * a * a - n2) * std::erfc(-a * std::numbers::sqrt2);
  return (0.5 * std::exp(-n2) + bracket_tail) / kPi;
}

PhaseDistribution coherent_distribution(Complex alpha, int n_grid) {
  if (n_grid < 1) throw DomainError("coherent_distribution: n_grid must be positive");
  PhaseDistribution out;
  out.n_grid = n_grid;
  out.values.resize(n_grid);
  out.source = "closed";
  for (int j = 0; j < n_grid; ++j) out.values[j] = coherent_phase_closed(alpha, out.theta(j));
  return out;
}

Complex bargmann_kernel(Complex alpha, Complex beta, double theta) {
  const Complex e_minus = std::polar(1.0, -theta);
  const Complex z = (alpha * e_minus + std::conj(beta) * std::conj(e_minus)) / std::numbers::sqrt2;
  // erfc(-z) = 1 + erf(z); throws outside the erf_complex disc.
  const Complex one_plus_erf = erfc_complex(-z);
  const Complex log_prefactor =
      -0.5 * (std::norm(alpha) + std::norm(beta)) + std::conj(beta) * alpha - 2.0 * alpha * std::conj(beta);
  const Complex base = std::exp(log_prefactor) / kTwoPi;
  const Complex tail = std::exp(log_prefactor + z * z) / kTwoPi * std::sqrt(kPi) * z * one_plus_erf;
  return base + tail;
}

Complex coherent_phase_moment(Complex alpha, int m) {
  if (m < 0 || m > 40) throw DomainError("coherent_phase_moment: m must be in [0, 40]");
  const double mod = std::abs(alpha);
  const double x = 2.0 * mod * mod;
  if (x > kHyp1f1MaxArg) throw DomainError("coherent_phase_moment: 2|alpha|^2 exceeds hyp1f1 range");
  if (m == 0) {
    // e^{-x} 1F1(1; 1; x) = 1
    return std::exp(-x) * hyp1f1(HalfInt::from_int(1), 1, x);
  }
  if (mod == 0.0) return 0.0;
  const double f = hyp1f1(HalfInt::halves(m + 2), m + 1, x);
  const double log_mag = -x + m * std::log(mod / std::numbers::sqrt2) + 0.5 * std::log(kPi) -
                         std::lgamma(0.5 * (m + 1)) + std::log(f);
  return std::polar(std::exp(log_mag), m * std::arg(alpha));
}

CircularStats circular_stats(const PhaseDistribution& dist) {
  const Complex first = dist.trig_moment(1);
  return {std::arg(first), 1.0 - std::abs(first)};
}

}  // namespace wphase
