#pragma once

// Wigner phase distributions P(theta) = Tr[rho rho_w(theta)], the closed
// forms for coherent states, and circular statistics of sampled
// distributions.

#include <string>
#include <vector>

#include "wphase/hilbert.hpp"

namespace wphase {

/// P sampled at theta_k = 2 pi k / n_grid, k = 0..n_grid-1.
struct PhaseDistribution {
  int n_grid = 0;
  std::vector<double> values;
  std::string source;
  /// Largest |Im Tr[rho rho_w(theta_k)]| seen while sampling (0 for closed forms).
  double max_imag_residue = 0.0;

  double spacing() const;
  double theta(int k) const { return k * spacing(); }
  /// Rectangle rule, which is the trapezoid rule for periodic integrands.
  double integral() const;
  double min_value() const;
  /// sum_k P_k exp(i m theta_k) * spacing
  Complex trig_moment(int m) const;
};

struct CircularStats {
  double mean_angle;
  double circular_variance;
};

/// Trace-rule distribution on an n_grid-point grid, using one coefficient
/// matrix and the phase covariance of rho_w. Requires rho.dim() == dim and
/// n_grid >= 2 dim + 1.
PhaseDistribution phase_distribution(const DensityOperator& rho, int n_grid, int dim);

inline constexpr double kCoherentClosedMaxAlpha = 20.0;

/// exp(-2|alpha|^2)/pi [1/2 + sqrt(pi/2) a exp(2a^2) (1 + erf(a sqrt2))],
/// a = |alpha| cos(theta - arg alpha); exp(2a^2) is always paired with
/// exp(-2|alpha|^2). Throws DomainError for |alpha| > 20.
double coherent_phase_closed(Complex alpha, double theta);

/// coherent_phase_closed sampled on the standard grid.
PhaseDistribution coherent_distribution(Complex alpha, int n_grid);

/// <beta|rho_w(theta)|alpha> for coherent states, with the overlap
/// <beta|alpha> = exp(-(|alpha|^2 + |beta|^2)/2 + beta* alpha) and the factor
/// exp(-2 alpha beta*). Domain limited by erf_complex.
Complex bargmann_kernel(Complex alpha, Complex beta, double theta);

/// int_0^{2pi} exp(i m theta) P_alpha(theta) d theta from the 1F1 closed form.
Complex coherent_phase_moment(Complex alpha, int m);

CircularStats circular_stats(const PhaseDistribution& dist);

}  // namespace wphase
