#include "wphase/radial_oracle.hpp"

#include <algorithm>
#include <cmath>
#include <mutex>
#include <numbers>
#include <string>

#include <boost/math/constants/constants.hpp>

#include "wphase/errors.hpp"
#include "wphase/wide.hpp"

namespace wphase {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

const WideReal& pi_wide() {
  static const WideReal v = boost::math::constants::pi<WideReal>();
  return v;
}

// sqrt(2/(n+1)) and sqrt(n/(n+1)) for the Hermite-function recurrence.
struct HermiteCoefficients {
  std::vector<WideReal> up, down;
  WideReal h0;  // pi^{-1/4}
};

const HermiteCoefficients& hermite_coefficients() {
  static const HermiteCoefficients c = [] {
    HermiteCoefficients out;
    constexpr int kMax = 2 * kOracleMaxIndex + 8;
    for (int n = 0; n <= kMax; ++n) {
      out.up.push_back(boost::multiprecision::sqrt(WideReal(2) / (n + 1)));
      out.down.push_back(boost::multiprecision::sqrt(WideReal(n) / (n + 1)));
    }
    out.h0 = 1 / boost::multiprecision::sqrt(boost::multiprecision::sqrt(pi_wide()));
    return out;
  }();
  return c;
}

// h_0..h_n at xi, where psi_k(xi) = h_k(xi) exp(-xi^2/2).
void hermite_parts(const WideComplex& xi, int n, std::vector<WideComplex>& h) {
  const auto& c = hermite_coefficients();
  h.resize(n + 1);
  h[0] = WideComplex(c.h0);
  if (n >= 1) h[1] = xi * h[0] * c.up[0];
  for (int k = 1; k < n; ++k) h[k + 1] = xi * h[k] * c.up[k] - h[k - 1] * c.down[k];
}

void require_index(int n, int limit, const char* what) {
  if (n < 0 || n > limit) {
    throw DomainError(std::string(what) + ": index " + std::to_string(n) + " outside [0, " + std::to_string(limit) +
                      "]");
  }
}

void require_point(double x, double p, const char* what) {
  if (!(std::fabs(x) <= 20.0) || !(std::fabs(p) <= 20.0)) {
    throw DomainError(std::string(what) + ": phase-space point outside |x|, |p| <= 20");
  }
}

int hermite_nodes_for_degree(int degree) { return 2 * degree + 16; }

// Evaluates the shifted Hermite parts H+[k] = h_k(x + u - i p) and
// H-[k] = h_k(x - u + i p) at every Gauss-Hermite node and hands them to
// visit(weight, H+, H-).
template <typename Visit>
void along_contour(const WideReal& x, const WideReal& p, int n, const GaussRule& gh, Visit&& visit) {
  std::vector<WideComplex> plus, minus;
  for (int j = 0; j < gh.size(); ++j) {
    const WideReal& u = gh.nodes_wide[j];
    hermite_parts(WideComplex(x + u, -p), n, plus);
    hermite_parts(WideComplex(x - u, p), n, minus);
    visit(gh.weights_wide[j], plus, minus);
  }
}

std::vector<WideComplex> widen(const FockVector& psi, bool conjugate) {
  std::vector<WideComplex> out(psi.dim());
  for (int k = 0; k < psi.dim(); ++k) {
    const Complex c = conjugate ? std::conj(psi[k]) : psi[k];
    out[k] = WideComplex(WideReal(c.real()), WideReal(c.imag()));
  }
  return out;
}

WideComplex dot(const std::vector<WideComplex>& coeffs, const std::vector<WideComplex>& h) {
  WideComplex acc(0);
  for (std::size_t k = 0; k < coeffs.size(); ++k) acc += coeffs[k] * h[k];
  return acc;
}

// Polynomial part pi exp(x^2 + p^2) W_psi(x, p) of a pure state.
WideComplex state_polynomial(const std::vector<WideComplex>& ket, const std::vector<WideComplex>& bra,
                             const WideReal& x, const WideReal& p, const GaussRule& gh) {
  WideComplex acc(0);
  along_contour(x, p, static_cast<int>(ket.size()) - 1, gh,
                [&](const WideReal& w, const auto& plus, const auto& minus) { acc += w * dot(ket, plus) * dot(bra, minus); });
  return acc;
}

// Polynomial parts of every dyad W_sr with s, r <= n, entry (s, r).
std::vector<WideComplex> dyad_polynomials(int n, const WideReal& x, const WideReal& p, const GaussRule& gh) {
  const int m = n + 1;
  std::vector<WideComplex> g(static_cast<std::size_t>(m) * m, WideComplex(0));
  along_contour(x, p, n, gh, [&](const WideReal& w, const auto& plus, const auto& minus) {
    for (int s = 0; s < m; ++s) {
      const WideComplex ws = w * minus[s];
      for (int r = 0; r < m; ++r) g[s * m + r] += ws * plus[r];
    }
  });
  return g;
}

Complex gaussian_scaled(const WideComplex& poly, double x, double p) {
  return detail::to_complex(poly) * (std::exp(-x * x - p * p) / std::numbers::pi);
}

}  // namespace

double oscillator_wavefunction(int n, double x) {
  if (n < 0 || n > 60) throw DomainError("oscillator_wavefunction: n outside [0, 60]");
  if (!(std::fabs(x) <= 20.0)) throw DomainError("oscillator_wavefunction: |x| exceeds 20");
  double prev = 0.0;
  double cur = std::exp(-0.5 * x * x) / std::sqrt(std::sqrt(std::numbers::pi));
  for (int k = 0; k < n; ++k) {
    const double next = std::sqrt(2.0 / (k + 1)) * x * cur - std::sqrt(static_cast<double>(k) / (k + 1)) * prev;
    prev = cur;
    cur = next;
  }
  return cur;
}

PolarQuadrature make_polar_quadrature(int max_index, int n_theta) {
  require_index(max_index, kOracleMaxIndex, "make_polar_quadrature");
  if (n_theta < 1) throw DomainError("make_polar_quadrature: n_theta must be positive");
  PolarQuadrature q;
  q.max_index = max_index;
  q.radial = make_radial_rule(2 * max_index);
  q.n_theta = n_theta;
  q.hermite_nodes = hermite_nodes_for_degree(2 * max_index);
  return q;
}

Complex cross_wigner(int s, int r, double x, double p) {
  require_index(s, kOracleMaxIndex, "cross_wigner");
  require_index(r, kOracleMaxIndex, "cross_wigner");
  require_point(x, p, "cross_wigner");
  const GaussRule& gh = gauss_hermite_cached(hermite_nodes_for_degree(s + r));
  WideComplex acc(0);
  along_contour(WideReal(x), WideReal(p), std::max(s, r), gh,
                [&](const WideReal& w, const auto& plus, const auto& minus) { acc += w * plus[r] * minus[s]; });
  return gaussian_scaled(acc, x, p);
}

Complex state_wigner(const FockVector& psi, double x, double p) {
  if (psi.dim() < 1 || psi.dim() > kOracleMaxIndex) throw DomainError("state_wigner: state dim outside [1, 40]");
  require_point(x, p, "state_wigner");
  const GaussRule& gh = gauss_hermite_cached(hermite_nodes_for_degree(2 * (psi.dim() - 1)));
  return gaussian_scaled(state_polynomial(widen(psi, false), widen(psi, true), WideReal(x), WideReal(p), gh), x, p);
}

double WignerGrid::max_imag() const {
  double m = 0.0;
  for (const Complex& v : values) m = std::max(m, std::fabs(v.imag()));
  return m;
}

double WignerGrid::phase_space_integral(const RadialRule& radial) const {
  const int nt = static_cast<int>(thetas.size());
  double total = 0.0;
  for (std::size_t i = 0; i < radii.size(); ++i) {
    double ray = 0.0;
    for (int j = 0; j < nt; ++j) ray += at(static_cast<int>(i), j).real();
    total += radial.weights[i] * std::exp(radii[i] * radii[i]) * ray;
  }
  return total * kTwoPi / nt;
}

namespace {

template <typename PointValue>
WignerGrid fill_grid(const PolarQuadrature& quad, PointValue&& value) {
  WignerGrid g;
  g.radii = quad.radial.radii;
  for (int j = 0; j < quad.n_theta; ++j) g.thetas.push_back(kTwoPi * j / quad.n_theta);
  g.values.reserve(g.radii.size() * g.thetas.size());
  for (double rad : g.radii) {
    for (double th : g.thetas) g.values.push_back(value(rad * std::cos(th), rad * std::sin(th)));
  }
  return g;
}

}  // namespace

WignerGrid wigner_grid(int s, int r, const PolarQuadrature& quad) {
  WignerGrid g = fill_grid(quad, [&](double x, double p) { return cross_wigner(s, r, x, p); });
  g.dyad_s = s;
  g.dyad_r = r;
  return g;
}

WignerGrid wigner_grid(const FockVector& psi, const PolarQuadrature& quad) {
  return fill_grid(quad, [&](double x, double p) { return state_wigner(psi, x, p); });
}

Complex radial_phase_element(int s, int r, double theta, const PolarQuadrature& quad) {
  require_index(s, quad.max_index, "radial_phase_element");
  require_index(r, quad.max_index, "radial_phase_element");
  const GaussRule& gh = gauss_hermite_cached(quad.hermite_nodes);
  const WideReal c = WideReal(std::cos(theta)), sn = WideReal(std::sin(theta));
  WideComplex acc(0);
  for (int k = 0; k < quad.radial.size(); ++k) {
    const WideReal& rad = quad.radial.radii_wide[k];
    WideComplex g(0);
    along_contour(rad * c, rad * sn, std::max(s, r), gh,
                  [&](const WideReal& w, const auto& plus, const auto& minus) { g += w * plus[r] * minus[s]; });
    acc += quad.radial.weights_wide[k] * g;
  }
  return detail::to_complex(acc / pi_wide());
}

FockOperator radial_phase_matrix(double theta, int dim, const PolarQuadrature& quad) {
  if (dim < 1 || dim - 1 > quad.max_index) throw DomainError("radial_phase_matrix: dim exceeds quadrature range");
  const GaussRule& gh = gauss_hermite_cached(quad.hermite_nodes);
  const WideReal c = WideReal(std::cos(theta)), sn = WideReal(std::sin(theta));
  const int n = dim - 1;
  std::vector<WideComplex> acc(static_cast<std::size_t>(dim) * dim, WideComplex(0));
  for (int k = 0; k < quad.radial.size(); ++k) {
    const WideReal& rad = quad.radial.radii_wide[k];
    const auto g = dyad_polynomials(n, rad * c, rad * sn, gh);
    for (std::size_t e = 0; e < acc.size(); ++e) acc[e] += quad.radial.weights_wide[k] * g[e];
  }
  FockOperator out(dim);
  for (int s = 0; s < dim; ++s) {
    for (int r = 0; r < dim; ++r) out(s, r) = detail::to_complex(acc[s * dim + r] / pi_wide());
  }
  return out;
}

PhaseDistribution radial_phase_distribution(const FockVector& psi, const PolarQuadrature& quad, int n_theta) {
  if (psi.dim() < 1 || psi.dim() > kOracleMaxIndex) {
    throw DomainError("radial_phase_distribution: state dim " + std::to_string(psi.dim()) + " outside [1, 40]");
  }
  if (psi.dim() - 1 > quad.max_index) throw DomainError("radial_phase_distribution: quadrature sized too small");
  if (n_theta < 1) throw DomainError("radial_phase_distribution: n_theta must be positive");
  const GaussRule& gh = gauss_hermite_cached(quad.hermite_nodes);
  const auto ket = widen(psi, false);
  const auto bra = widen(psi, true);
  PhaseDistribution out;
  out.n_grid = n_theta;
  out.source = "oracle";
  out.values.resize(n_theta);
  for (int j = 0; j < n_theta; ++j) {
    const double th = kTwoPi * j / n_theta;
    const WideReal c = WideReal(std::cos(th)), sn = WideReal(std::sin(th));
    WideComplex acc(0);
    for (int k = 0; k < quad.radial.size(); ++k) {
      const WideReal& rad = quad.radial.radii_wide[k];
      acc += quad.radial.weights_wide[k] * state_polynomial(ket, bra, rad * c, rad * sn, gh);
    }
    const Complex v = detail::to_complex(acc / pi_wide());
    out.values[j] = v.real();
    out.max_imag_residue = std::max(out.max_imag_residue, std::fabs(v.imag()));
  }
  return out;
}

}  // namespace wphase
