#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "deszeta/bernoulli.hpp"
#include "deszeta/numeric/gamma.hpp"
#include "deszeta/numeric/hurwitz.hpp"
#include "testutil.hpp"

using namespace deszeta;
using deszeta::testing::dist;

TEST_CASE("gamma at exact points") {
  PrecisionGuard guard(128);
  CHECK(dist(gamma_complex(Cplx{5.0}).value, 24.0) < 1e-30);
  CHECK(dist(gamma_complex(Cplx{1.0}).value, 1.0) < 1e-30);
  const double sqrt_pi = 1.7724538509055160273;
  CHECK(dist(gamma_complex(Cplx{0.5}).value, sqrt_pi) < 1e-15);
  CHECK(dist(gamma_complex(Cplx{-0.5}).value, -2 * sqrt_pi) < 1e-15);
  // |Gamma(i)|^2 = pi / sinh(pi)
  const auto gi = gamma_complex(Cplx{0.0, 1.0}).value;
  CHECK(static_cast<double>(abs(norm(gi) - pi_value() / sinh(pi_value()))) < 1e-30);
}

TEST_CASE("gamma reflection and recurrence") {
  PrecisionGuard guard(128);
  const Cplx z{0.3, 0.4};
  const auto lhs = gamma_complex(z).value * gamma_complex(Cplx{1.0} - z).value;
  const auto rhs = Cplx{pi_value()} / sin(Cplx{pi_value()} * z);
  CHECK(dist(lhs, rhs) < 1e-30);
  const Cplx w{-2.3, 1.1};
  CHECK(dist(gamma_complex(w + Cplx{1.0}).value, w * gamma_complex(w).value) < 1e-28);
}

TEST_CASE("gamma poles") {
  CHECK_THROWS_AS(gamma_complex(Cplx{0.0}), PoleOfGamma);
  CHECK_THROWS_AS(gamma_complex(Cplx{-3.0}), PoleOfGamma);
  CHECK_NOTHROW(gamma_complex(Cplx{-3.0, 0.5}));
}

TEST_CASE("hurwitz zeta at positive arguments") {
  PrecisionGuard guard(128);
  const double pi2_6 = 1.6449340668482264365;
  auto r = hurwitz_zeta(Cplx{2.0}, Real(1));
  CHECK(dist(r.value, pi2_6) < 1e-15);
  CHECK(r.err_estimate >= 0);
  // shift identity zeta_H(s, a) - a^{-s} = zeta_H(s, a+1)
  const Cplx s{2.5, 1.25};
  const Real a{3};
  auto lhs = hurwitz_zeta(s, a).value - pow_real(a, -s);
  auto rhs = hurwitz_zeta(s, a + 1).value;
  CHECK(dist(lhs, rhs) < 1e-30);
  CHECK(dist(riemann_zeta(Cplx{4.0}).value, 1.0823232337111381916) < 1e-15);
}

TEST_CASE("hurwitz zeta at non-positive integers: Bernoulli polynomials") {
  PrecisionGuard guard(128);
  // zeta_H(-n, a) = -B_{n+1}(a)/(n+1)
  for (unsigned n = 0; n <= 8; ++n) {
    for (double av : {1.0, 2.0, 3.5}) {
      auto poly = bernoulli_polynomial(n + 1);
      Rational acc = 0, p = 1;
      const Rational ar(av == 3.5 ? Rational(7, 2) : Rational(static_cast<int>(av)));
      for (const auto& c : poly) {
        acc += c * p;
        p *= ar;
      }
      const Real expect = to_real(-acc / Rational(n + 1));
      auto got = hurwitz_zeta(Cplx{-static_cast<double>(n)}, Real(av));
      CHECK(static_cast<double>(abs(got.value.re - expect)) < 1e-25);
      CHECK(static_cast<double>(abs(got.value.im)) < 1e-25);
    }
  }
}

TEST_CASE("hurwitz zeta pole and domain guards") {
  CHECK_THROWS_AS(hurwitz_zeta(Cplx{1.0}, Real(2)), PoleAtOne);
  CHECK_THROWS_AS(hurwitz_zeta(Cplx{1.0 + 1e-8}, Real(2)), PoleAtOne);
  CHECK_NOTHROW(hurwitz_zeta(Cplx{1.0, 0.5}, Real(2)));
  CHECK_THROWS_AS(hurwitz_zeta(Cplx{2.0}, Real(0.5)), Error);
}

TEST_CASE("critical strip sanity") {
  PrecisionGuard guard(128);
  // zeta(-1) = -1/12, zeta(0) = -1/2
  CHECK(dist(riemann_zeta(Cplx{-1.0}).value, -1.0 / 12) < 1e-15);
  CHECK(dist(riemann_zeta(Cplx{0.0}).value, -0.5) < 1e-25);
  // zeta(1/2) known to double accuracy
  CHECK(dist(riemann_zeta(Cplx{0.5}).value, -1.4603545088095868129) < 1e-15);
}
