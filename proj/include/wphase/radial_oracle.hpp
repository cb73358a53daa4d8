#pragma once

// Brute-force phase-space oracle. Wigner functions of Fock dyads and pure
// states are built from oscillator wavefunctions,
//   W_sr(x, p) = (1/pi) int psi_r(x + y) psi_s(x - y) exp(-2 i p y) dy,
// with alpha = (x + i p)/sqrt2, and integrated along rays,
//   P(theta) = int_0^inf r W(r cos theta, r sin theta) dr.
//
// Shifting the y contour by -i p turns the integrand into
// exp(-u^2) times a polynomial, and along a ray W = exp(-r^2) times a
// polynomial in r, so both integrals are done by Gauss rules that are exact
// for the degrees involved. All products are accumulated in wide precision.

#include <vector>

#include "wphase/distributions.hpp"
#include "wphase/hilbert.hpp"
#include "wphase/quadrature.hpp"

namespace wphase {

inline constexpr int kOracleMaxIndex = 40;

/// psi_n(x) with psi_0(x) = pi^{-1/4} exp(-x^2/2). Requires n <= 60, |x| <= 20.
double oscillator_wavefunction(int n, double x);

/// Polar rule sized for Fock indices up to max_index: radial rule exact to
/// degree 2 max_index and 4 max_index + 16 Gauss-Hermite nodes for the
/// y-integral.
struct PolarQuadrature {
  int max_index = 0;
  RadialRule radial;
  int n_theta = 0;
  int hermite_nodes = 0;
};

PolarQuadrature make_polar_quadrature(int max_index, int n_theta = 64);

/// W_sr(x, p), the Wigner function of |r><s|. Requires s, r <= 40 and
/// |x|, |p| <= 20.
Complex cross_wigner(int s, int r, double x, double p);

/// Wigner function of the pure state psi (dim <= 40).
Complex state_wigner(const FockVector& psi, double x, double p);

/// Values over signed radii x angles; point (i, j) is
/// (radial.radii[i] cos theta_j, radial.radii[i] sin theta_j).
struct WignerGrid {
  std::vector<double> radii;
  std::vector<double> thetas;
  std::vector<Complex> values;  // row-major in (radius, theta)
  int dyad_s = -1, dyad_r = -1;  // -1 for a pure state

  Complex at(int i, int j) const { return values[i * thetas.size() + j]; }
  /// max |Im W| over the grid
  double max_imag() const;
  /// int int W dx dp through the radial rule times the angular rectangle rule.
  double phase_space_integral(const RadialRule& radial) const;
};

WignerGrid wigner_grid(int s, int r, const PolarQuadrature& quad);
WignerGrid wigner_grid(const FockVector& psi, const PolarQuadrature& quad);

/// int_0^inf r W_sr(r cos theta, r sin theta) dr, the oracle for
/// <s|rho_w(theta)|r>. Requires s, r <= quad.max_index.
Complex radial_phase_element(int s, int r, double theta, const PolarQuadrature& quad);

/// All oracle elements (s, r < dim) at one angle; dim - 1 <= quad.max_index.
FockOperator radial_phase_matrix(double theta, int dim, const PolarQuadrature& quad);

/// Phase distribution of a pure state on theta_k = 2 pi k / n_theta.
/// Requires psi.dim() <= 40 and psi.dim() - 1 <= quad.max_index.
PhaseDistribution radial_phase_distribution(const FockVector& psi, const PolarQuadrature& quad, int n_theta);

}  // namespace wphase
