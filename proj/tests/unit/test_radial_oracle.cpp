#include <doctest.h>

#include <cmath>
#include <numbers>

#include "wphase/distributions.hpp"
#include "wphase/errors.hpp"
#include "wphase/quadrature.hpp"
#include "wphase/radial_oracle.hpp"
#include "wphase/wigner_op.hpp"

using namespace wphase;

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kUniform = 0.159154943091895335769;

// W_sr(x, p) by a fine trapezoid rule on the real y axis, no contour shift.
Complex cross_wigner_trapezoid(int s, int r, double x, double p) {
  const double h = 1.0 / 64.0;
  Complex sum = 0.0;
  for (int k = -12 * 64; k <= 12 * 64; ++k) {
    const double y = k * h;
    if (std::fabs(x + y) > 20 || std::fabs(x - y) > 20) continue;
    sum += oscillator_wavefunction(r, x + y) * oscillator_wavefunction(s, x - y) * std::polar(1.0, -2 * p * y);
  }
  return sum * h / kPi;
}

}  // namespace

TEST_CASE("oscillator wavefunctions") {
  CHECK(oscillator_wavefunction(0, 0.0) == doctest::Approx(std::pow(kPi, -0.25)).epsilon(1e-15));
  CHECK(oscillator_wavefunction(1, 0.0) == 0.0);
  CHECK(oscillator_wavefunction(2, 1.3) == doctest::Approx((2 * 1.69 - 1) / std::sqrt(2.0) * std::pow(kPi, -0.25) *
                                                            std::exp(-0.845))
                                               .epsilon(1e-14));
  const GaussRule gh = gauss_hermite(80);
  for (int m = 0; m <= 30; m += 3) {
    for (int n = 0; n <= 30; n += 4) {
      double sum = 0.0;
      for (int j = 0; j < gh.size(); ++j) {
        const double x = gh.nodes[j];
        sum += gh.weights[j] * std::exp(x * x) * oscillator_wavefunction(m, x) * oscillator_wavefunction(n, x);
      }
      CHECK(std::fabs(sum - (m == n ? 1.0 : 0.0)) < 1e-9);
    }
  }
  CHECK_THROWS_AS(oscillator_wavefunction(61, 0.0), DomainError);
  CHECK_THROWS_AS(oscillator_wavefunction(3, 20.5), DomainError);
}

TEST_CASE("cross Wigner functions") {
  for (double x : {0.0, 0.4, -1.2}) {
    for (double p : {0.0, 0.9}) {
      CHECK(std::abs(cross_wigner(0, 0, x, p) - std::exp(-x * x - p * p) / kPi) < 1e-15);
    }
  }
  for (int n = 0; n <= 12; ++n) CHECK(std::abs(cross_wigner(n, n, 0.0, 0.0) - (n % 2 == 0 ? 1.0 : -1.0) / kPi) < 1e-14);
  for (auto [s, r] : {std::pair{0, 1}, std::pair{2, 5}, std::pair{7, 3}, std::pair{10, 10}}) {
    for (auto [x, p] : {std::pair{0.3, -0.8}, std::pair{-1.7, 1.1}, std::pair{2.2, 0.4}}) {
      const Complex w = cross_wigner(s, r, x, p);
      CHECK(std::abs(w - std::conj(cross_wigner(r, s, x, p))) < 1e-15);
      CHECK(std::abs(w - cross_wigner_trapezoid(s, r, x, p)) < 1e-12);
    }
  }
  CHECK_THROWS_AS(cross_wigner(41, 0, 0.0, 0.0), DomainError);
  CHECK_THROWS_AS(cross_wigner(1, 0, 0.0, 25.0), DomainError);
}

TEST_CASE("coherent Wigner function fixes the phase-space convention") {
  const Complex alpha{0.9, -0.6};
  const auto psi = coherent_state(alpha, 30);
  for (double x = -2.0; x <= 3.0; x += 0.5) {
    for (double p = -2.5; p <= 2.0; p += 0.5) {
      const double want = std::exp(-std::pow(x - std::sqrt(2.0) * alpha.real(), 2) -
                                   std::pow(p - std::sqrt(2.0) * alpha.imag(), 2)) /
                          kPi;
      CHECK(std::abs(state_wigner(psi, x, p) - want) < 1e-8);
    }
  }
}

TEST_CASE("Wigner grids are real and normalized") {
  const auto quad = make_polar_quadrature(13, 24);
  const auto psi = coherent_state({0.7, 0.3}, 14);
  const auto grid = wigner_grid(psi, quad);
  CHECK(grid.max_imag() < 1e-10);
  CHECK(grid.phase_space_integral(quad.radial) == doctest::Approx(psi.norm_squared()).epsilon(1e-10));
  const auto fock = wigner_grid(fock_state(4, 5), quad);
  CHECK(fock.phase_space_integral(quad.radial) == doctest::Approx(1.0).epsilon(1e-8));
  const auto dyad = wigner_grid(4, 4, quad);
  CHECK(dyad.dyad_s == 4);
  CHECK(std::abs(dyad.at(3, 5) - fock.at(3, 5)) < 1e-15);
}

TEST_CASE("radial integration reproduces the operator elements") {
  const auto quad = make_polar_quadrature(12);
  CHECK(std::abs(radial_phase_element(0, 0, 0.4, quad) - kUniform) < 1e-15);
  CHECK(std::abs(radial_phase_element(3, 3, 2.0, quad) - kUniform) < 1e-14);
  CHECK(std::abs(radial_phase_element(0, 1, 1.0, quad) - std::polar(0.199471140200716338970, -1.0)) < 1e-14);
  for (double theta : {0.0, 1.3}) {
    const auto oracle = radial_phase_matrix(theta, 13, quad);
    CHECK((oracle - build_matrix(theta, 13).op).max_abs() < 1e-12);
  }
  CHECK_THROWS_AS(radial_phase_element(13, 0, 0.0, quad), DomainError);
  CHECK_THROWS_AS(radial_phase_matrix(0.0, 14, quad), DomainError);
}

TEST_CASE("radial phase distributions") {
  const auto vac = radial_phase_distribution(fock_state(0, 1), make_polar_quadrature(0), 16);
  for (double v : vac.values) CHECK(std::fabs(v - kUniform) < 1e-15);

  const auto coherent = coherent_state(1.0, coherent_min_dim(1.0));
  const auto quad = make_polar_quadrature(coherent.dim() - 1);
  const auto d = radial_phase_distribution(coherent, quad, 40);
  for (int k = 0; k < 40; ++k) CHECK(std::fabs(d.values[k] - coherent_phase_closed(1.0, d.theta(k))) < 1e-5);
  // Against the trace rule at the same truncation the only error is rounding.
  const auto trace = phase_distribution(DensityOperator::pure(coherent), 40, coherent.dim());
  for (int k = 0; k < 40; ++k) CHECK(std::fabs(d.values[k] - trace.values[k]) < 1e-12);

  FockVector sup(2);
  sup[0] = sup[1] = 1.0 / std::sqrt(2.0);
  const auto ds = radial_phase_distribution(sup, make_polar_quadrature(1), 32);
  const auto ts = phase_distribution(DensityOperator::pure(sup), 32, 2);
  for (int k = 0; k < 32; ++k) CHECK(std::fabs(ds.values[k] - ts.values[k]) < 1e-6);
  CHECK(ds.integral() == doctest::Approx(1.0).epsilon(1e-6));
  CHECK(ds.min_value() < 0.0);

  CHECK_THROWS_AS(radial_phase_distribution(fock_state(0, 41), make_polar_quadrature(40), 4), DomainError);
  CHECK_THROWS_AS(radial_phase_distribution(fock_state(0, 5), make_polar_quadrature(3), 4), DomainError);
}
