#include "wphase/zm_family.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "wphase/compensated_sum.hpp"
#include <boost/math/constants/constants.hpp>

#include "wphase/errors.hpp"
#include "wphase/specfun.hpp"
#include "wphase/wide.hpp"

namespace wphase {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

// sqrt(s! r!) / (m! (s-m)! (r-m)!)
WideReal zm_dyad_coefficient(int s, int r, int m) {
  using detail::factorial_wide;
  return boost::multiprecision::sqrt(factorial_wide(s) * factorial_wide(r)) /
         (factorial_wide(m) * factorial_wide(s - m) * factorial_wide(r - m));
}

// sum_m (-1)^m moments[s + r - 2m] zm_dyad_coefficient(s, r, m)
WideReal alternating_entry(int s, int r, const std::vector<WideReal>& moments) {
  CompensatedSum<WideReal> acc;
  for (int m = 0; m <= std::min(s, r); ++m) {
    WideReal t = moments[s + r - 2 * m] * zm_dyad_coefficient(s, r, m);
    acc.add(m % 2 == 0 ? t : WideReal(-t));
  }
  return acc.value();
}

// sum_k w_k (scale x_k)^e for e = 0..max_power
std::vector<WideReal> radial_moments(const RadialRule& radial, const WideReal& scale, int max_power) {
  std::vector<WideReal> mu(max_power + 1, WideReal(0));
  for (int k = 0; k < radial.size(); ++k) {
    const WideReal x = scale * radial.radii_wide[k];
    WideReal pw = radial.weights_wide[k];
    for (int e = 0; e <= max_power; ++e) {
      mu[e] += pw;
      pw *= x;
    }
  }
  return mu;
}

Complex int_pow(Complex z, int n) {
  Complex out = 1.0;
  for (int k = 0; k < n; ++k) out *= z;
  return out;
}

void require_degree(const RadialRule& radial, int dim, const char* what) {
  if (radial.exact_degree < 2 * (dim - 1)) {
    throw DomainError(std::string(what) + ": radial rule exact to degree " + std::to_string(radial.exact_degree) +
                      ", need " + std::to_string(2 * (dim - 1)));
  }
}

}  // namespace

ZmState zm_state(Complex z, int m, int dim) {
  if (m < 0 || m >= dim) {
    throw DimensionError("zm_state: m = " + std::to_string(m) + " outside [0, " + std::to_string(dim) + ")");
  }
  FockVector v(dim);
  Complex c = 1.0;
  v[m] = c;
  for (int n = 0; m + n + 1 < dim; ++n) {
    c *= z * std::sqrt(static_cast<double>(m + n + 1)) / static_cast<double>(n + 1);
    v[m + n + 1] = c;
  }
  // |c_{n+1}/c_n|^2 = |z|^2 (m+n+1)/(n+1)^2 decreases in n, so the tail is
  // dominated by a geometric series from the last kept term.
  const int n_last = dim - 1 - m;
  const double q = std::norm(z) * (m + n_last + 1) / ((n_last + 1.0) * (n_last + 1.0));
  double tail = std::numeric_limits<double>::infinity();
  if (q < 1.0) tail = std::sqrt(std::norm(c) * q / (1.0 - q));
  return {z, m, std::move(v), tail, !(tail <= kZmTailTolerance)};
}

ZmNormReport zm_norm_report(Complex z, int m, int dim) {
  const ZmState st = zm_state(z, m, dim);
  ZmNormReport rep;
  rep.z = z;
  rep.m = m;
  rep.direct = std::sqrt(st.vec.norm_squared());
  rep.sqrt_i0 = std::sqrt(bessel_i0(2.0 * std::abs(z)));
  rep.relative_difference = std::fabs(rep.direct - rep.sqrt_i0) / std::fabs(rep.direct);
  rep.discrepancy = rep.relative_difference > 1e-6;
  rep.tail_bound = st.tail_bound;
  return rep;
}

ZmInnerReport zm_inner_direct(Complex z1, int m1, Complex z2, int m2, int dim) {
  const ZmState a = zm_state(z1, m1, dim);
  const ZmState b = zm_state(z2, m2, dim);
  ZmInnerReport rep;
  rep.direct = a.vec.inner(b.vec);
  const Complex zp = std::conj(z1);
  const SignedLogReal ratio =
      (log_gamma_half(HalfInt::from_int(m2 + 1)) / log_gamma_half(HalfInt::from_int(m1 + 1))).sqrt() /
      log_gamma_half(HalfInt::from_int(m1 + m2 + 1));
  rep.formula = int_pow(z2, m2) * int_pow(zp, m1 + m2) * ratio.to_double() *
                hyp1f1_complex(m2 + 1.0, m1 + m2 + 1.0, zp);
  rep.difference = std::abs(rep.direct - rep.formula);
  return rep;
}

FockOperator projector_reconstruction(double theta, int dim, const RadialRule& radial) {
  if (dim < 1) throw DimensionError("projector_reconstruction: dim must be positive");
  require_degree(radial, dim, "projector_reconstruction");
  const auto mu = radial_moments(radial, boost::multiprecision::sqrt(WideReal(2)), 2 * (dim - 1));
  const WideReal inv_pi = 1 / boost::math::constants::pi<WideReal>();
  FockOperator out(dim);
  for (int s = 0; s < dim; ++s) {
    for (int r = 0; r < dim; ++r) {
      const double c = static_cast<double>(alternating_entry(s, r, mu) * inv_pi);
      out(s, r) = c * std::polar(1.0, (s - r) * theta);
    }
  }
  return out;
}

UnityReport unity_resolution_check(int dim, const UnityGrid& grid) {
  if (dim < 1) throw DimensionError("unity_resolution_check: dim must be positive");
  if (!(grid.kappa > 0.0)) throw DomainError("unity_resolution_check: kappa must be positive");
  const int n_phi = grid.n_phi > 0 ? grid.n_phi : 2 * dim + 1;
  const int degree = grid.radial_degree >= 0 ? grid.radial_degree : 2 * (dim - 1);
  const RadialRule radial = make_radial_rule(degree);
  require_degree(radial, dim, "unity_resolution_check");

  // int_0^inf 2 rho exp(-kappa rho^2) f(rho) d rho
  //   = (2/kappa) int_0^inf t exp(-t^2) f(t/sqrt(kappa)) dt
  const WideReal kappa(grid.kappa);
  auto mu = radial_moments(radial, 1 / boost::multiprecision::sqrt(kappa), 2 * (dim - 1));
  for (auto& v : mu) v *= 2 / kappa;

  std::vector<Complex> angular(2 * dim - 1);
  const double h = kTwoPi / n_phi;
  for (int k = -(dim - 1); k <= dim - 1; ++k) {
    CompensatedComplexSum acc;
    for (int j = 0; j < n_phi; ++j) acc.add(std::polar(h, k * j * h));
    angular[k + dim - 1] = acc.value();
  }

  UnityReport rep;
  rep.dim = dim;
  rep.kappa = grid.kappa;
  for (int s = 0; s < dim; ++s) {
    for (int r = 0; r < dim; ++r) {
      const Complex v = static_cast<double>(alternating_entry(s, r, mu)) * angular[s - r + dim - 1];
      if (s == r) {
        rep.diagonal.push_back(v.real());
      } else {
        rep.offdiag_sup = std::max(rep.offdiag_sup, std::abs(v));
      }
    }
  }
  CompensatedSum<double> total;
  for (double d : rep.diagonal) total.add(d);
  rep.constant = total.value() / dim;
  const auto [lo, hi] = std::minmax_element(rep.diagonal.begin(), rep.diagonal.end());
  rep.diagonal_spread = (*hi - *lo) / std::fabs(rep.constant);
  rep.ratio_to_one = rep.constant;
  rep.ratio_to_pi = rep.constant / std::numbers::pi;
  rep.proportional_to_identity = rep.offdiag_sup <= 1e-8 && rep.diagonal_spread <= 1e-8;
  return rep;
}

}  // namespace wphase
