#pragma once

// Finite-s Pegg-Barnett phase states |theta0> = (s+1)^{-1/2} sum_{n<=s}
// e^{i n theta0} |n>, their projectors, and the Wigner phase distribution
// they carry. The s -> infinity limit is never extrapolated; convergence in
// s is reported instead.

#include <vector>

#include "wphase/hilbert.hpp"

namespace wphase {

struct PhaseState {
  int s_dim;  // number of occupied Fock levels, s + 1
  double theta0;
  FockVector vec;
};

/// Throws DimensionError unless 1 <= s_dim <= dim.
PhaseState phase_state(double theta0, int s_dim, int dim);

/// |theta0><theta0| (rank one).
FockOperator pb_projector(double theta0, int s_dim, int dim);

/// <phi|rho_w(theta)|phi> = Tr[rho_w(theta) rho_PB(phi)].
double wigner_phase_of_phase_state(double phi, double theta, int s_dim, int dim);

struct AngleQuadruple {
  double theta, phi, theta_prime, phi_prime;
};

struct WeakEquivalenceReport {
  double max_defect = 0.0;
  double tolerance = 1e-11;
  bool pass = true;
  std::vector<double> defects;
  /// Indices of quadruples that violate theta - phi = theta' - phi' (mod 2 pi).
  std::vector<int> invalid;
};

/// Compares Tr[rho_w(theta) rho_PB(phi)] with Tr[rho_w(theta') rho_PB(phi')]
/// for every quadruple. Defects above tolerance are reported, not thrown.
WeakEquivalenceReport weak_equivalence_scan(const std::vector<AngleQuadruple>& quads, int s_dim, int dim,
                                            double tolerance = 1e-11);

struct PhaseStateConvergence {
  std::vector<int> s_dims;
  int moment_count = 0;
  /// max_{1<=m<=moment_count} |1 - |mu_m(s)||, per s_dim
  std::vector<double> moment_defect;
  /// max_m |mu_m(s_{i+1}) - mu_m(s_i)|
  std::vector<double> moment_step;
  /// sup_theta |P_{s_{i+1}} - P_{s_i}|; grows as the distribution sharpens.
  std::vector<double> sup_step;
  bool moments_converging = false;
};

/// Trigonometric moments mu_m of theta -> <phi|rho_w(theta)|phi> approach
/// e^{i m phi}, i.e. the distribution tends to a delta at phi.
PhaseStateConvergence phase_state_convergence(double phi, const std::vector<int>& s_dims, int dim,
                                              int moment_count = 4, int n_grid = 256);

}  // namespace wphase
