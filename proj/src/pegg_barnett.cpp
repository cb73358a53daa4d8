#include "wphase/pegg_barnett.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "wphase/distributions.hpp"
#include "wphase/errors.hpp"
#include "wphase/wigner_op.hpp"

namespace wphase {

namespace {
constexpr double kTwoPi = 2.0 * std::numbers::pi;

double angle_gap(double a, double b) {
  double d = std::fmod(a - b, kTwoPi);
  if (d < 0) d += kTwoPi;
  return std::min(d, kTwoPi - d);
}
}  // namespace

PhaseState phase_state(double theta0, int s_dim, int dim) {
  if (s_dim < 1 || s_dim > dim) {
    throw DimensionError("phase_state: s_dim " + std::to_string(s_dim) + " outside [1, " + std::to_string(dim) + "]");
  }
  FockVector v(dim);
  const double amp = 1.0 / std::sqrt(static_cast<double>(s_dim));
  for (int n = 0; n < s_dim; ++n) v[n] = std::polar(amp, n * theta0);
  return {s_dim, theta0, std::move(v)};
}

FockOperator pb_projector(double theta0, int s_dim, int dim) {
  const PhaseState ps = phase_state(theta0, s_dim, dim);
  return FockOperator::outer(ps.vec, ps.vec);
}

double wigner_phase_of_phase_state(double phi, double theta, int s_dim, int dim) {
  const PhaseState ps = phase_state(phi, s_dim, dim);
  const FockOperator m = build_matrix(theta, dim).op;
  return ps.vec.inner(m * ps.vec).real();
}

WeakEquivalenceReport weak_equivalence_scan(const std::vector<AngleQuadruple>& quads, int s_dim, int dim,
                                            double tolerance) {
  WeakEquivalenceReport rep;
  rep.tolerance = tolerance;
  for (int i = 0; i < static_cast<int>(quads.size()); ++i) {
    const auto& q = quads[i];
    if (angle_gap(q.theta - q.phi, q.theta_prime - q.phi_prime) > 1e-12) {
      rep.invalid.push_back(i);
      rep.defects.push_back(std::nan(""));
      continue;
    }
    const double lhs = wigner_phase_of_phase_state(q.phi, q.theta, s_dim, dim);
    const double rhs = wigner_phase_of_phase_state(q.phi_prime, q.theta_prime, s_dim, dim);
    const double defect = std::fabs(lhs - rhs);
    rep.defects.push_back(defect);
    rep.max_defect = std::max(rep.max_defect, defect);
  }
  rep.pass = rep.invalid.empty() && rep.max_defect <= tolerance;
  return rep;
}

PhaseStateConvergence phase_state_convergence(double phi, const std::vector<int>& s_dims, int dim,
                                              int moment_count, int n_grid) {
  PhaseStateConvergence out;
  out.s_dims = s_dims;
  out.moment_count = moment_count;
  std::vector<std::vector<Complex>> moments;
  std::vector<PhaseDistribution> dists;
  for (int sd : s_dims) {
    const PhaseState ps = phase_state(phi, sd, dim);
    const PhaseDistribution d = phase_distribution(DensityOperator::pure(ps.vec), n_grid, dim);
    std::vector<Complex> mu(moment_count);
    double defect = 0.0;
    for (int m = 1; m <= moment_count; ++m) {
      mu[m - 1] = d.trig_moment(m);
      defect = std::max(defect, std::fabs(1.0 - std::abs(mu[m - 1])));
    }
    out.moment_defect.push_back(defect);
    moments.push_back(std::move(mu));
    dists.push_back(d);
  }
  for (std::size_t i = 1; i < s_dims.size(); ++i) {
    double step = 0.0;
    for (int m = 0; m < moment_count; ++m) step = std::max(step, std::abs(moments[i][m] - moments[i - 1][m]));
    out.moment_step.push_back(step);
    double sup = 0.0;
    for (int k = 0; k < n_grid; ++k) sup = std::max(sup, std::fabs(dists[i].values[k] - dists[i - 1].values[k]));
    out.sup_step.push_back(sup);
  }
  out.moments_converging = true;
  for (std::size_t i = 1; i < out.moment_defect.size(); ++i) {
    if (!(out.moment_defect[i] < out.moment_defect[i - 1])) out.moments_converging = false;
  }
  for (std::size_t i = 1; i < out.moment_step.size(); ++i) {
    if (!(out.moment_step[i] < out.moment_step[i - 1])) out.moments_converging = false;
  }
  return out;
}

}  // namespace wphase
