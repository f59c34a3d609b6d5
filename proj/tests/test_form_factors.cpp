#include <doctest.h>

#include <cmath>
#include <numbers>
#include <vector>

#include "thermal_ising/errors.hpp"
#include "thermal_ising/form_factors.hpp"
#include "thermal_ising/glm.hpp"

using namespace thermal_ising;

namespace {

// e_k by enumeration of ordered k-tuples n_1 < ... < n_k
double brute_force_sum(const CircleModeSet& modes, double x, int k, const ThermalParams& p) {
  const int n = static_cast<int>(modes.size());
  std::vector<int> idx(k);
  for (int i = 0; i < k; ++i) idx[i] = i;
  double total = 0.0;
  if (k == 0) return 1.0;
  while (true) {
    std::vector<double> th;
    double w = 1.0;
    for (int i : idx) {
      th.push_back(modes.theta_n[i]);
      w *= modes.g2[i] * std::exp(-p.m * x * std::cosh(modes.theta_n[i]));
    }
    const double f = ff_tanh_product(th);
    total += w * f * f;
    int pos = k - 1;
    while (pos >= 0 && idx[pos] == n - k + pos) --pos;
    if (pos < 0) break;
    ++idx[pos];
    for (int i = pos + 1; i < k; ++i) idx[i] = idx[i - 1] + 1;
  }
  return total;
}

}  // namespace

TEST_CASE("circle weight and g") {
  const ThermalParams p;
  // mpmath quad of exp(-(1/2pi) \int L / cosh)
  CHECK(g_circle(0.0, p) == doctest::Approx(0.80572393921461505).epsilon(1e-12));
  for (double th : {0.3, 1.7, 3.1}) CHECK(g_circle(th, p) == doctest::Approx(g_circle(-th, p)));
  const ThermalParams cold{40.0, 1.0};
  CHECK(g_circle(0.5, cold) ==
        doctest::Approx(1.0 / std::sqrt(40.0 * std::cosh(0.5))).epsilon(1e-12));
}

TEST_CASE("ff_tanh_product") {
  CHECK(ff_tanh_product({}) == 1.0);
  CHECK(ff_tanh_product({0.3}) == 1.0);
  CHECK(ff_tanh_product({0.8, 0.8}) == 0.0);
  CHECK(ff_tanh_product({1.0, -1.0}) == doctest::Approx(0.76159415595576489).epsilon(1e-15));
}

TEST_CASE("particle sums against enumeration") {
  const ThermalParams p;
  const auto modes = CircleModeSet::build(p, 5);
  for (double x : {0.5, 2.0}) {
    const auto e = particle_sums(modes, x, 0.0, p, 4);
    for (int k = 0; k <= 4; ++k) {
      INFO("x = " << x << " k = " << k);
      CHECK(e[k].real() == doctest::Approx(brute_force_sum(modes, x, k, p)).epsilon(1e-12));
      CHECK(std::abs(e[k].imag()) < 1e-15);
    }
  }
  // unrestricted double sum with 1/2! equals the ordered sum at N = 2
  double unrestricted = 0.0;
  const double x = 1.0;
  for (std::size_t i = 0; i < modes.size(); ++i) {
    for (std::size_t j = 0; j < modes.size(); ++j) {
      const double f = ff_tanh_product({modes.theta_n[i], modes.theta_n[j]});
      unrestricted += modes.g2[i] * modes.g2[j] * f * f *
                      std::exp(-x * (std::cosh(modes.theta_n[i]) + std::cosh(modes.theta_n[j])));
    }
  }
  CHECK(particle_sums(modes, x, 0.0, p, 2)[2].real() ==
        doctest::Approx(unrestricted / 2.0).epsilon(1e-13));
}

TEST_CASE("equal-time correlators") {
  const ThermalParams p;
  const double st = s_T(p), de = delta_vacuum_energy(p);
  TruncationPolicy one;
  one.n_sigma = 0;
  one.n_mu = 1;
  CHECK(correlator_equal_time(2.0, p, one, Field::kSigma) ==
        doctest::Approx(st * st * std::exp(-de * 2.0)).epsilon(1e-14));
  // mpmath: s_T^2 e^{-2 dE} sum_n g_n^2 e^{-2 cosh theta_n}
  CHECK(correlator_equal_time(2.0, p, one, Field::kMu) ==
        doctest::Approx(0.0012201636534873888).epsilon(1e-10));
  TruncationPolicy def;
  for (double x : {6.0, 8.0}) {
    const double g = correlator_equal_time(x, p, def, Field::kSigma);
    CHECK(std::abs(std::log(g / (st * st)) + de * x) < 1e-4);
  }
  // each extra particle block is smaller than the previous one
  const auto modes = CircleModeSet::build(p, 20);
  for (double x : {1.0, 2.0, 3.5, 5.0}) {
    const auto e = particle_sums(modes, x, 0.0, p, 5);
    for (int k = 2; k <= 5; ++k) CHECK(e[k].real() < e[k - 1].real());
  }
}

TEST_CASE("phi at equal time") {
  const ThermalParams p;
  TruncationPolicy n3;
  n3.n_sigma = 2;
  n3.n_mu = 3;
  // mpmath enumeration of 1_ff, 2_ff, 3_ff with n_max = 20
  CHECK(phi_equal_time(2.0, p, n3) == doctest::Approx(0.17617281406409879).epsilon(1e-10));
  CHECK(phi_equal_time(3.0, p, n3) == doctest::Approx(0.064665167016399183).epsilon(1e-10));
  double prev = 1e9;
  for (int i = 0; i <= 8; ++i) {
    const double x = 1.0 + 0.5 * i;
    const double phi = phi_equal_time(x, p, TruncationPolicy{});
    CHECK(phi > 0.0);
    CHECK(phi < prev);
    prev = phi;
  }
  // phi / (2 1_ff) -> 1 at large x
  const auto modes = CircleModeSet::build(p, 20);
  const double x = 9.0;
  const double one_ff = particle_sums(modes, x, 0.0, p, 1)[1].real();
  CHECK(phi_equal_time(x, p, TruncationPolicy{}) / (2.0 * one_ff) ==
        doctest::Approx(1.0).epsilon(1e-6));
}

TEST_CASE("tau derivative vanishes at tau = 0") {
  const ThermalParams p;
  for (double x : {0.5, 1.0, 3.0}) CHECK(std::abs(dphi_dtau(x, p, TruncationPolicy{})) < 1e-8);
}

TEST_CASE("1_ff equals a quarter of 1_GLM") {
  const ThermalParams p;
  const auto modes = CircleModeSet::build(p, 20);
  for (double x : {2.0, 3.0, 4.0, 5.0}) {
    const double one_ff = particle_sums(modes, x, 0.0, p, 1)[1].real();
    const auto orders = neumann_orders(x, p, 1);
    CHECK(orders.k_glm[1].real() == doctest::Approx(4.0 * one_ff).epsilon(1e-6));
  }
}

TEST_CASE("truncation policy guards") {
  const ThermalParams p;
  TruncationPolicy bad;
  bad.n_sigma = 3;
  CHECK_THROWS_AS(bad.validate(), DomainError);
  TruncationPolicy small;
  small.n_max = 2;
  CHECK_THROWS_AS(correlator_equal_time(0.05, p, small, Field::kSigma), TailTooLarge);
  small.enforce_tail = false;
  CHECK_NOTHROW(correlator_equal_time(0.05, p, small, Field::kSigma));
}
