#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>
#include <vector>

#include "thermal_ising/asymptotics.hpp"
#include "thermal_ising/errors.hpp"
#include "thermal_ising/glm.hpp"
#include "thermal_ising/scattering.hpp"

using namespace thermal_ising;

namespace {

constexpr double kPi = std::numbers::pi;
const cplx kI(0.0, 1.0);

void check_close(cplx got, cplx want, double tol) {
  INFO("got " << got << " want " << want);
  CHECK(std::abs(got - want) <= tol * std::max(1.0, std::abs(want)));
}

}  // namespace

TEST_CASE("light-cone coordinates") {
  const auto c = LightconeCoords::from_xt(4.0, 6.0);
  CHECK(c.v == 2.0);
  CHECK(c.w == 10.0);
  CHECK(c.x() == 4.0);
  CHECK(c.t() == 6.0);
  CHECK(c.regime() == "time-like");
  const auto s = LightconeCoords::from_xt(6.0, 4.0);
  CHECK(s.regime() == "space-like");
  check_close(s.sqrt_v(), cplx(0, -std::sqrt(2.0)), 1e-15);
  check_close(sqrt_v_branch(-2.0), cplx(0, -std::sqrt(2.0)), 1e-15);
  CHECK_THROWS_AS(LightconeCoords::from_xt(3.0, 3.0).validate(), BranchError);
  CHECK_THROWS_AS(LightconeCoords({1.0, -1.0}).validate(), DomainError);
  const ThermalParams p;
  CHECK(regime_warning({1.0, 3.0}, p).has_value());
  CHECK_FALSE(regime_warning({1.0, 40.0}, p).has_value());
}

TEST_CASE("printed series coefficients at zero temperature") {
  const auto s = SeriesCoefficients::zero_temperature();
  check_close(s.g[0][0], kI / 8.0, 0.0);
  check_close(s.g[1][0], -9.0 / 128.0, 0.0);
  check_close(s.g[2][0], -75.0 * kI / 1024.0, 0.0);
  check_close(s.f[0][0], 3.0 * kI / 4.0, 0.0);
  check_close(s.f[1][0], -33.0 / 32.0, 0.0);
  check_close(s.f[2][0], -255.0 * kI / 128.0, 0.0);
  for (const auto& poly : s.g) {
    for (std::size_t k = 1; k < poly.size(); ++k) CHECK(poly[k] == cplx(0.0));
  }
  // the low-temperature coefficients go to zero
  const auto cold = c_mu_coefficients(3, {30.0, 1.0});
  for (int mu = 1; mu <= 3; ++mu) CHECK(std::abs(cold[mu]) < 1e-10);
}

TEST_CASE("g_n from the large-argument expansion of K_mu") {
  const ThermalParams p;
  const auto s = series_coefficients(p);
  for (int n = 1; n <= 3; ++n) {
    const auto poly = g_from_bessel_asymptotics(n, s.c);
    REQUIRE(poly.size() == s.g[n - 1].size());
    for (std::size_t k = 0; k < poly.size(); ++k) {
      INFO("n = " << n << " k = " << k);
      check_close(poly[k], s.g[n - 1][k], 1e-14);
    }
  }
}

TEST_CASE("phi series against the Bessel sum") {
  const ThermalParams p;
  const auto s = series_coefficients(p);
  for (double w : {200.0, 400.0}) {
    const LightconeCoords c{0.5, w};
    const cplx full = phi_lightcone(c, s.c, p.m);
    const cplx series = phi_series(c, s, p.m);
    const double z = p.m * std::sqrt(c.v * c.w);
    // omitted terms are O(z^{-4}) relative
    CHECK(std::abs(series / full - 1.0) < 50.0 * std::pow(z, -4.0));
  }
}

TEST_CASE("G bracket from the phi and chi series") {
  const ThermalParams p;
  const auto s = series_coefficients(p);
  for (const LightconeCoords c : {LightconeCoords{1.0, 100.0}, LightconeCoords{0.3, 500.0}}) {
    const cplx z = p.m * std::sqrt(c.v * c.w);
    const auto terms = g_bracket_terms(c, s, p.m);
    // (i/4 pi z)[(f1 - 2 g1)/z + (f2 - 2 g2 - g1^2)/z^2 + (f3 - 2 g3 - 2 g1 g2)/z^3]
    const cplx mv = p.m * c.v;
    const cplx g1 = evaluate(s.g[0], mv), g2 = evaluate(s.g[1], mv), g3 = evaluate(s.g[2], mv);
    const cplx f1 = evaluate(s.f[0], mv), f2 = evaluate(s.f[1], mv), f3 = evaluate(s.f[2], mv);
    check_close(terms[0], kI / (4 * kPi * z) * (f1 - 2.0 * g1) / z, 1e-13);
    check_close(terms[1], kI / (4 * kPi * z) * (f2 - 2.0 * g2 - g1 * g1) / (z * z), 1e-13);
    check_close(terms[2], kI / (4 * kPi * z) * (f3 - 2.0 * g3 - 2.0 * g1 * g2) / (z * z * z),
                1e-13);
  }
}

TEST_CASE("zero-temperature head of G") {
  const auto s = SeriesCoefficients::zero_temperature();
  for (const LightconeCoords c : {LightconeCoords{1.0, 50.0}, LightconeCoords{2.5, 80.0}}) {
    for (double m : {1.0, 2.0}) {
      const auto terms = g_bracket_terms(c, s, m);
      check_close(terms[0], -1.0 / (8.0 * kPi * m * m * c.v * c.w), 1e-15);
    }
  }
  // T-independent leading term: same at any temperature
  const LightconeCoords c{1.0, 50.0};
  const auto hot = series_coefficients({1.0, 3.0});
  check_close(g_bracket_terms(c, hot, 1.0)[0], g_bracket_terms(c, s, 1.0)[0], 0.0);
}

TEST_CASE("light-cone correlators") {
  const ThermalParams p;
  const double x = 1.0, t = 3.0;
  const LightconeCoords c = LightconeCoords::from_xt(x, t);
  const auto r = correlators_lightcone(c, p);
  CHECK(std::isfinite(r.G.real()));
  CHECK(std::isfinite(r.Gtilde.imag()));
  CHECK(r.warning.has_value());
  // Gtilde = s_T^2 phi / 2 with A = B = C = 0
  const double st = s_T(p);
  const auto s = series_coefficients(p);
  const auto r2 = correlators_lightcone(c, s, p.m, st * st);
  check_close(r2.Gtilde, 0.5 * st * st * phi_lightcone(c, s.c, p.m), 1e-14);
  const ExponentialConstants abc{0.1, 0.2, 0.3};
  const auto r3 = correlators_lightcone(c, s, p.m, st * st, abc);
  check_close(r3.Gtilde, r2.Gtilde * std::exp(-0.1 - 0.2 * x - 0.3 * t), 1e-14);
}

TEST_CASE("Klein-Gordon property of the basis") {
  for (const LightconeCoords c : {LightconeCoords{2.0, 30.0}, LightconeCoords{-2.0, 30.0},
                                  LightconeCoords{0.5, 50.0}}) {
    for (int mu = 0; mu <= 3; ++mu) {
      INFO("v = " << c.v << " mu = " << mu);
      CHECK(klein_gordon_residual(mu, c, 1.0) < 1e-5);
    }
  }
}

TEST_CASE("chi series is consistent with the quadratic equation") {
  const ThermalParams p;
  const auto s = series_coefficients(p);
  const double r40 = chi_consistency_residual({1.0, 40.0}, s, p.m);
  const double r80 = chi_consistency_residual({1.0, 80.0}, s, p.m);
  const double r160 = chi_consistency_residual({1.0, 160.0}, s, p.m);
  CHECK(r80 < 0.3 * r40);
  CHECK(r160 < 0.3 * r80);
  CHECK(r160 < 2e-3);
}

TEST_CASE("phi_lightcone at zero temperature and across the v plane") {
  const LightconeCoords c{1.5, 20.0};
  const cplx want = (2.0 / kPi) * bessel_k(0, kI * std::sqrt(1.5 * 20.0));
  check_close(phi_lightcone(c, std::vector<cplx>{1.0}, 1.0), want, 1e-14);
  // path v = 2 e^{-i a}, a from 0 to pi, through the lower half plane
  const ThermalParams p;
  const auto cm = c_mu_coefficients(3, p);
  const double w = 10.0;
  // no branch jump: second differences stay far below first differences
  std::vector<cplx> path;
  for (int k = 0; k <= 200; ++k) {
    path.push_back(phi_lightcone(2.0 * std::exp(cplx(0, -kPi * k / 200.0)), w, cm, p.m));
  }
  double max_first = 0.0, max_second = 0.0;
  for (std::size_t k = 1; k < path.size(); ++k) {
    max_first = std::max(max_first, std::abs(path[k] - path[k - 1]));
    if (k >= 2) max_second = std::max(max_second, std::abs(path[k] - 2.0 * path[k - 1] + path[k - 2]));
  }
  CHECK(max_second < 0.1 * max_first);
  const cplx prev = path.back();
  const auto space_like = LightconeCoords::from_xt(6.0, 4.0);
  check_close(phi_lightcone(space_like, cm, p.m), prev, 1e-12);
}

TEST_CASE("phi_lightcone equals -2i F_{-1}(2x, t) in the matching zone") {
  const ThermalParams p;
  for (double w : {20.0, 40.0, 60.0}) {
    for (double v : {2.0, 0.5, -0.5, -2.0}) {
      const LightconeCoords c{v, w};
      const auto mt = lightcone_match(c, p);
      INFO("v = " << v << " w = " << w << " budget " << mt.budget);
      CHECK(mt.difference < 1e-12 * std::abs(mt.phi));
      CHECK(mt.direct_difference < mt.budget);
    }
  }
}

TEST_CASE("8x8 ansatz system") {
  const double m = 1.0;
  const auto base = verify_appendixC_system(-kI, -kI, m);
  for (int s = 0; s < 2; ++s) {
    const double sz = s == 0 ? 1.0 : -1.0;
    for (int k = 0; k < 8; ++k) {
      const cplx want = (k == 2 || k == 6) ? cplx(-m * sz / 2.0) : cplx(0.0);
      check_close(base.coefficients[s][k], want, 1e-14);
    }
  }
  std::mt19937_64 rng(7);
  std::normal_distribution<double> normal;
  for (int i = 0; i < 20; ++i) {
    const cplx K(normal(rng), normal(rng)), Kt(normal(rng), normal(rng));
    const auto sol = verify_appendixC_system(K, Kt, m);
    CHECK(sol.residual < 1e-12);
    CHECK(sol.deviation < 1e-12);
  }
  const auto twice = verify_appendixC_system(0.3 + 0.2 * kI, -1.1 * kI, 2.0);
  CHECK(std::abs(twice.coefficients[0][2] + 1.0) < 1e-14);
  CHECK(std::abs(twice.coefficients[1][6] - 1.0) < 1e-14);
}

TEST_CASE("delta-function weights") {
  const ThermalParams p;
  const auto w = u1_delta_weight(p);
  check_close(w[0], -kI, 1e-12);
  check_close(w[1], kI, 1e-12);
  // F_0 = (2i/m) delta(x - 2t) + F_0^P: the weight is r(infinity)/m
  const double m = 2.0;
  check_close(reflection_r(Branch::kPositive, 30.0, 0.0, {m, 1.0}) / m, 2.0 * kI / m, 1e-12);
}

TEST_CASE("xi check: delta terms and oscillation class") {
  const ThermalParams p;
  const auto sc = xi_scaling_check(p, 1.0, 1.5, 10.0);
  CHECK(sc.at_t.delta_cancellation < 1e-6);
  CHECK(sc.at_2t.delta_cancellation < 1e-6);
  CHECK(sc.frequency_passed);
  CHECK(std::abs(sc.omega_measured - sc.omega_neglected_class) <
        0.02 * sc.omega_neglected_class);
}

// The remaining contour integral is O(1) at t = 10 and 20 and does not fall
// off faster than F_0^P(x + y, t); see the README for the analysis.
TEST_CASE("xi check: residual decays faster than the retained terms" * doctest::may_fail()) {
  const ThermalParams p;
  const auto sc = xi_scaling_check(p, 1.0, 1.5, 10.0);
  CHECK(sc.residual_ratio > sc.leading_ratio);
}

TEST_CASE("F_0^P continued to complex X") {
  const ThermalParams p;
  const auto cm = c_mu_coefficients(3, p);
  const double t = 2.0;
  const cplx a = f0_principal_complex(cplx(7.0, 0.0), t, cm, p.m);
  const cplx b = f0_principal_complex(cplx(7.0, 1e-6), t, cm, p.m);
  CHECK(std::abs(a - b) < 1e-5 * std::abs(a));
}
