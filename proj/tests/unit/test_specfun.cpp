#include <doctest.h>

#include <cmath>
#include <numbers>

#include "oracles.hpp"
#include "wphase/specfun.hpp"

using namespace wphase;
using C = std::complex<double>;

namespace {

double rel(C got, C want) { return std::abs(got - want) / std::abs(want); }

}  // namespace

TEST_CASE("half-integer gamma matches Lanczos and frozen values") {
  CHECK(log_gamma_half(HalfInt::halves(11)).to_double() == doctest::Approx(52.3427777845535201811).epsilon(1e-15));
  CHECK(log_gamma_half(HalfInt::halves(1)).to_double() == doctest::Approx(std::sqrt(std::numbers::pi)).epsilon(1e-15));
  for (int twice = 1; twice <= 80; ++twice) {
    const double want = oracle::lanczos_gamma(0.5 * twice);
    CHECK(log_gamma_half(HalfInt(twice)).to_double() == doctest::Approx(want).epsilon(1e-12));
  }
  CHECK(log_gamma_half(HalfInt::from_int(401)).logmag() == doctest::Approx(std::lgamma(401.0)).epsilon(1e-14));
  CHECK_THROWS_AS(log_gamma_half(HalfInt(0)), DomainError);
  CHECK_THROWS_AS(log_gamma_half(HalfInt(-3)), DomainError);
}

TEST_CASE("SignedLogReal arithmetic") {
  const auto a = SignedLogReal::from_double(-6.0);
  const auto b = SignedLogReal::from_double(1.5);
  CHECK((a * b).to_double() == doctest::Approx(-9.0).epsilon(1e-15));
  CHECK((a / b).to_double() == doctest::Approx(-4.0).epsilon(1e-15));
  CHECK(b.sqrt().to_double() == doctest::Approx(std::sqrt(1.5)).epsilon(1e-15));
  CHECK(SignedLogReal::zero().to_double() == 0.0);
  CHECK(a.negated().to_double() == doctest::Approx(6.0));
  CHECK_THROWS_AS(SignedLogReal(1, 800.0).to_double(), OverflowError);
  CHECK_THROWS_AS(SignedLogReal::from_double(-1.0).sqrt(), DomainError);
}

TEST_CASE("real error function") {
  CHECK(erf_real(1.0) == doctest::Approx(0.842700792949714869341).epsilon(1e-15));
  CHECK(erf_real(0.0) == 0.0);
  CHECK(erf_real(-2.0) == doctest::Approx(-erf_real(2.0)));
}

TEST_CASE("complex error function against frozen high-precision values") {
  CHECK(rel(erf_complex({1, 1}), {1.31615128169794764488, 0.190453469237834686284}) < 1e-13);
  CHECK(rel(erf_complex({3, 4}), {-120.186991395079444098, -27.7503372936239024981}) < 1e-12);
  CHECK(rel(erf_complex({2.5, -7}), {-26281643822608200.807, 280222360204482363.22}) < 1e-11);
  CHECK(rel(erf_complex({0.5, 11.5}), {-9.35475329611412173e55, 4.64227129934468430e55}) < 1e-11);
  CHECK(rel(erf_complex({-6, 6}), {-1.05763424013567859, -0.0331391147411565005}) < 1e-11);
  const C big = erf_complex({10, 3});
  CHECK(std::abs(big.real() - 1.0) < 1e-15);
  CHECK(big.imag() == doctest::Approx(-1.88171075887672047e-35).epsilon(1e-9));
  CHECK(rel(erfc_complex({8, 2}), {4.03620956482523177e-28, -4.37539214960958550e-28}) < 1e-10);
}

TEST_CASE("complex error function against the decimal Maclaurin series") {
  for (double re = -5.0; re <= 5.0; re += 0.625) {
    for (double im = -5.0; im <= 5.0; im += 0.625) {
      const C z{re, im};
      const C want = oracle::erf_maclaurin(z);
      if (std::abs(want) < 1e-3) continue;
      INFO("z = " << re << " + " << im << "i");
      CHECK(rel(erf_complex(z), want) < 1e-10);
    }
  }
}

TEST_CASE("complex error function symmetries and domain") {
  for (const C z : {C(0.3, 2.2), C(4.5, -1.0), C(-7.0, 3.0), C(0.0, 9.0)}) {
    CHECK(rel(erf_complex(std::conj(z)), std::conj(erf_complex(z))) < 1e-14);
    CHECK(rel(erf_complex(-z), -erf_complex(z)) < 1e-14);
    CHECK(std::abs(erfc_complex(z) - (1.0 - erf_complex(z))) <= 1e-12 * std::max(1.0, std::abs(erf_complex(z))));
  }
  CHECK(erf_complex({0, 0}) == C(0, 0));
  CHECK_THROWS_AS(erf_complex({12.5, 0}), DomainError);
  CHECK_THROWS_AS(erfc_complex({0, -13}), DomainError);
}

TEST_CASE("terminating 2F1 against exact rational sums") {
  CHECK(hyp2f1_terminating(4, HalfInt::halves(3), 3, 2.0).to_double() == doctest::Approx(0.125).epsilon(1e-15));
  for (int n = 0; n <= 30; ++n) {
    for (int d = 0; d <= 12; d += 3) {
      const double want = oracle::hyp2f1_exact(n, oracle::Rational(d + 2, 2), 1 + d, 2);
      const double got = hyp2f1_terminating(n, HalfInt::halves(d + 2), 1 + d, 2.0).to_double();
      INFO("n = " << n << ", d = " << d);
      CHECK(got == doctest::Approx(want).epsilon(1e-13));
    }
  }
  CHECK(hyp2f1_terminating(0, HalfInt(5), 3, 2.0).to_double() == 1.0);
  CHECK_THROWS_AS(hyp2f1_terminating(3, HalfInt(3), -1, 2.0), PoleError);
  CHECK_NOTHROW(hyp2f1_terminating(1, HalfInt(3), -1, 2.0));
}

TEST_CASE("confluent 1F1 against decimal series and frozen values") {
  CHECK(hyp1f1(HalfInt::halves(3), 2, 5.0) == doctest::Approx(70.7383259631103985230).epsilon(1e-13));
  CHECK(hyp1f1(HalfInt::halves(41), 40, 200.0) == doctest::Approx(5.49991780812081992e69).epsilon(1e-12));
  CHECK(hyp1f1(HalfInt::from_int(1), 1, 3.0) == doctest::Approx(std::exp(3.0)).epsilon(1e-14));
  for (int twice_a : {1, 3, 8, 15}) {
    for (int b : {1, 2, 7}) {
      for (double x : {0.0, 0.5, 4.0, 20.0, 90.0}) {
        const double want = oracle::hyp1f1_series(oracle::Dec(twice_a) / 2, oracle::Dec(b), oracle::Dec(x));
        CHECK(hyp1f1(HalfInt(twice_a), b, x) == doctest::Approx(want).epsilon(1e-12));
      }
    }
  }
  CHECK_THROWS_AS(hyp1f1(HalfInt(3), 2, 200.5), DomainError);
  CHECK_THROWS_AS(hyp1f1(HalfInt(3), 0, 1.0), DomainError);
  CHECK_THROWS_AS(hyp1f1(HalfInt(3), 2, -1.0), DomainError);
}

TEST_CASE("complex 1F1 reduces to the exponential") {
  const C z{0.4, -1.3};
  CHECK(rel(hyp1f1_complex(1.0, 1.0, z), std::exp(z)) < 1e-14);
  CHECK_THROWS_AS(hyp1f1_complex(1.0, -2.0, z), DomainError);
  CHECK_THROWS_AS(hyp1f1_complex(1.0, 1.0, {61, 0}), DomainError);
}

TEST_CASE("Bessel I0") {
  CHECK(bessel_i0(2.0) == doctest::Approx(2.27958530233606726744).epsilon(1e-14));
  CHECK(bessel_i0(50.0) == doctest::Approx(293255378384933632665.4675).epsilon(1e-13));
  CHECK(bessel_i0(0.0) == 1.0);
  for (double x : {0.1, 1.0, 7.5, 33.0, 120.0, 199.0}) {
    CHECK(bessel_i0(x) == doctest::Approx(oracle::bessel_i0_series(x)).epsilon(1e-12));
  }
  CHECK_THROWS_AS(bessel_i0(-1.0), DomainError);
  CHECK_THROWS_AS(bessel_i0(250.0), DomainError);
}
