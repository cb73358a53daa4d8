#pragma once

// The un-normalized family |z,m> = sum_n z^n/n! (a^dagger)^n |m>, the
// projector-form reconstruction
//   rho_w(theta) = (1/pi) int_0^inf u exp(-u^2) sum_m (-1)^m
//                  |sqrt2 u e^{i theta}, m><sqrt2 u e^{i theta}, m| du,
// and the z-plane resolution of unity. For an entry (s, r) the m-sum stops
// at min(s, r), so both integrals reduce to finite sums under a radial rule.

#include <vector>

#include "wphase/hilbert.hpp"
#include "wphase/quadrature.hpp"

namespace wphase {

struct ZmState {
  Complex z;
  int m;
  FockVector vec;
  /// Bound on the norm of the coefficients beyond the truncation.
  double tail_bound;
  /// tail_bound exceeds 1e-12; the vector is still returned.
  bool truncated;

  int dim() const { return vec.dim(); }
};

inline constexpr double kZmTailTolerance = 1e-12;

/// <m+n|z,m> = z^n/n! sqrt((m+n)!/m!) by recurrence. Throws DimensionError
/// unless 0 <= m < dim.
ZmState zm_state(Complex z, int m, int dim);

struct ZmNormReport {
  Complex z;
  int m;
  double direct;    // || |z,m> || from the truncated series
  double sqrt_i0;   // sqrt(I_0(2|z|))
  double relative_difference;
  bool discrepancy;  // relative_difference > 1e-6
  double tail_bound;
};

ZmNormReport zm_norm_report(Complex z, int m, int dim);

struct ZmInnerReport {
  Complex direct;
  /// z^m (z'*)^{m+m'}/(m+m')! sqrt(m!/m'!) 1F1(m+1; m+m'+1; z'*)
  /// with (z', m') = (z1, m1) and (z, m) = (z2, m2).
  Complex formula;
  double difference;
};

/// <z1,m1|z2,m2> from the truncated series, with the closed-form expression
/// evaluated alongside. The closed form is never used as a reference.
ZmInnerReport zm_inner_direct(Complex z1, int m1, Complex z2, int m2, int dim);

/// Wide-precision quadrature of the projector form; radial.exact_degree must
/// be at least 2 (dim - 1).
FockOperator projector_reconstruction(double theta, int dim, const RadialRule& radial);

struct UnityGrid {
  /// Gaussian weight exp(-kappa |z|^2); kappa = 1 is the unit weight.
  double kappa = 1.0;
  int n_phi = 0;          // 0 selects 2 dim + 1
  int radial_degree = -1;  // -1 selects 2 (dim - 1)
};

struct UnityReport {
  int dim = 0;
  double kappa = 1.0;
  std::vector<double> diagonal;
  double offdiag_sup = 0.0;
  double diagonal_spread = 0.0;  // (max - min)/|mean| of the diagonal
  double constant = 0.0;         // mean diagonal entry
  double ratio_to_one = 0.0;
  double ratio_to_pi = 0.0;
  bool proportional_to_identity = false;  // both defects <= 1e-8
};

/// int dz dz* exp(-kappa |z|^2) sum_m (-1)^m |z,m><z,m| with
/// dz dz* = 2 rho d rho d phi, on a radial x equispaced angular product rule.
UnityReport unity_resolution_check(int dim, const UnityGrid& grid);

}  // namespace wphase
