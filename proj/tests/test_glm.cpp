#include <doctest.h>

#include <cmath>
#include <numbers>

#include "thermal_ising/errors.hpp"
#include "thermal_ising/form_factors.hpp"
#include "thermal_ising/glm.hpp"

using namespace thermal_ising;

namespace {

void check_close(cplx got, cplx want, double tol) {
  INFO("got " << got << " want " << want);
  CHECK(std::abs(got - want) <= tol * std::max(1.0, std::abs(want)));
}

}  // namespace

TEST_CASE("residue sums against mpmath") {
  const ThermalParams p;
  // mpmath sums over |n| <= 20 with 20-digit circle weights
  check_close(kernel_residue_sum(-1, 3.0, 0.0, p), cplx(0, 0.14487415278425362), 1e-13);
  check_close(kernel_residue_sum(0, 3.0, 0.0, p), -0.14498165159928062, 1e-13);
  check_close(kernel_residue_sum(0, 2.5, 1.0, p), -0.61736304872222100, 1e-13);
  check_close(kernel_residue_sum(-2, 2.5, 1.0, p), 0.18821517760682879, 1e-13);
  CHECK(kernel_residue_sum(-1, 2.0, 0.0, p).imag() > 0.0);
  for (double x : {2.0, 3.0, 5.0}) {
    CHECK(std::abs(kernel_residue_sum(0, x, 0.0, p) + kernel_residue_sum(-2, x, 0.0, p)) < 1e-15);
  }
  CHECK_THROWS_AS(kernel_residue_sum(-1, 1.0, 1.0, p), ValidityError);
  CHECK_THROWS_AS(kernel_residue_sum(-1, 0.01, 0.0, p, 2), TruncationError);
}

TEST_CASE("direct quadrature against residue sums") {
  const ThermalParams p;
  for (double x : {2.0, 3.0, 4.5, 6.0}) {
    CHECK(std::abs(kernel_direct(-1, x, 0.0, p) - kernel_residue_sum(-1, x, 0.0, p)) < 1e-8);
  }
  for (int j : {0, -1, -2}) {
    INFO("j = " << j);
    CHECK(std::abs(kernel_direct(j, 2.5, 1.0, p) - kernel_residue_sum(j, 2.5, 1.0, p)) < 1e-6);
  }
  DirectKernelOptions half;
  half.window = 20.0;
  CHECK(std::abs(kernel_direct(-2, 3.0, 0.5, p, half) - kernel_direct(-2, 3.0, 0.5, p)) < 1e-10);
  CHECK_THROWS(kernel_direct(0, 2.0, 1.0, p));
}

TEST_CASE("Bessel-series kernel") {
  const ThermalParams p;
  const BesselSeriesKernel bk(p);
  for (int j : {0, -1}) {
    const auto r = bk.evaluate(j, 6.0, 2.0);
    const cplx d = kernel_direct(j, 6.0, 2.0, p);
    INFO("j = " << j << " value " << r.value << " direct " << d);
    CHECK(std::abs(r.value - d) < r.tail_estimate);
  }
  // mu = nu = 0 term carries the pole at x = 2t: K_1(z) ~ 1/z
  const double t = 3.0;
  const cplx near1 = bk.basis_term(0, 2 * t + 1e-3, t, 0, 0, false);
  const cplx near2 = bk.basis_term(0, 2 * t + 2e-3, t, 0, 0, false);
  CHECK(std::abs(near1 / near2) == doctest::Approx(2.0).epsilon(1e-2));
  // printed indices: exponent (mu - 1 - j)/2 on a/b, Bessel order 1 + j - mu
  const double x = 7.0, tt = 2.0;
  const cplx a(0.0, 0.5 * p.m * (tt - x / 2.0));
  const cplx b(0.0, 0.5 * p.m * (tt + x / 2.0));
  for (int j : {0, -1, -2}) {
    for (int mu = 0; mu <= 3; ++mu) {
      const cplx want = cplx(0, 1.0 / std::numbers::pi) *
                        std::pow(a / b, 0.5 * (mu - 1 - j)) *
                        bessel_k(1 + j - mu, 2.0 * std::sqrt(a) * std::sqrt(b));
      check_close(bk.basis_term(j, x, tt, mu, 0, false), want, 1e-12);
    }
  }
  CHECK(bk.coefficient(0, 0, false) == cplx(1.0, 0.0));
  CHECK(bk.coefficient(0, 1, true) == cplx(-1.0, 0.0));
}

TEST_CASE("kernel table flags invalid points") {
  const ThermalParams p;
  const auto grid = kernel_table(-1, 1.0, {1.0, 3.0}, KernelRep::kResidueSum, p);
  REQUIRE(grid.valid.size() == 2);
  CHECK_FALSE(grid.valid[0]);
  CHECK(grid.valid[1]);
  CHECK(to_string(KernelRep::kBesselSeries) == "bessel_series");
}

TEST_CASE("Volterra solve with vanishing kernel") {
  const ThermalParams p;
  const KernelFn zero = [](int, double, int) { return cplx(0.0); };
  VolterraOptions opts;
  opts.L = 10.0;
  const auto sol = volterra_solve(3.0, 0.0, zero, p, opts);
  for (int c = 0; c < 2; ++c) {
    CHECK(std::abs(sol.U_at_x[c]) == 0.0);
    CHECK(std::abs(sol.W_at_x[c]) == 0.0);
  }
  const auto phi = reconstruct_phi(sol, p);
  CHECK(std::abs(phi.phi) < 1e-15);
}

TEST_CASE("first Neumann iterate matches the closed forms") {
  const ThermalParams p;
  const double x = 3.0;
  const auto sol = neumann_solve(x, 0.0, p, 1);
  const cplx w_plus = 0.5 * p.m * kernel_residue_sum(-1, 2.0 * x, 0.0, p);
  const cplx u_plus = -0.5 * p.m * kernel_residue_sum(0, 2.0 * x, 0.0, p);
  check_close(sol.W_at_x[0], w_plus, 1e-12);
  check_close(sol.W_at_x[1], -w_plus, 1e-12);
  check_close(sol.U_at_x[0], u_plus, 1e-12);
  check_close(sol.U_at_x[1], -u_plus, 1e-12);
  // closed form (iT/2) sum_n W_n e^{-2 m x cosh theta_n} / cosh theta_n
  const auto modes = CircleModeSet::build(p, 20);
  cplx closed = 0.0;
  for (std::size_t i = 0; i < modes.size(); ++i) {
    closed += modes.weight_w[i] * std::exp(-p.m * x * std::cosh(modes.theta_n[i])) /
              std::cosh(modes.theta_n[i]);
  }
  closed *= cplx(0, 0.5 * p.T);
  check_close(sol.W_at_x[0], closed, 1e-12);
}

TEST_CASE("full solve against Neumann series") {
  const ThermalParams p;
  const auto full = volterra_solve(3.0, 0.0, p);
  const auto neu = neumann_solve(3.0, 0.0, p, 3);
  for (int c = 0; c < 2; ++c) {
    CHECK(std::abs(full.U_at_x[c] - neu.U_at_x[c]) < 1e-6);
    CHECK(std::abs(full.W_at_x[c] - neu.W_at_x[c]) < 1e-6);
  }
  const auto deep = neumann_solve(3.0, 0.0, p, 12);
  for (int c = 0; c < 2; ++c) CHECK(std::abs(full.U_at_x[c] - deep.U_at_x[c]) < 1e-8);
  CHECK(full.residual < 1e-12);
  // decay at the far end of the truncated domain
  CHECK(std::abs(full.U[0].back()) < 1e-10);
  CHECK(std::abs(full.W[0].back()) < 1e-10);
}

TEST_CASE("Gauss-Legendre and trapezoid rules agree") {
  const ThermalParams p;
  VolterraOptions gl;
  gl.tail_tol = 1e-6;
  VolterraOptions trap = gl;
  trap.rule = NystromRule::kTrapezoid;
  trap.h = 0.08;
  const auto a = volterra_solve(3.0, 0.0, p, gl);
  const auto b = volterra_solve(3.0, 0.0, p, trap);
  trap.h = 0.04;
  const auto c = volterra_solve(3.0, 0.0, p, trap);
  const double eb = std::abs(b.U_at_x[0] - a.U_at_x[0]);
  const double ec = std::abs(c.U_at_x[0] - a.U_at_x[0]);
  CHECK(ec < 1e-6);
  CHECK(eb / ec == doctest::Approx(4.0).epsilon(0.05));
  // panel refinement is already converged
  VolterraOptions fine = gl;
  fine.panel_nodes = 16;
  CHECK(std::abs(volterra_solve(3.0, 0.0, p, fine).U_at_x[0] - a.U_at_x[0]) < 1e-14);
}

TEST_CASE("phi from the GLM solve") {
  const ThermalParams p;
  TruncationPolicy n3;
  n3.n_sigma = 2;
  n3.n_mu = 3;
  const std::vector<double> xs{2.0, 3.5, 5.0};
  const auto prof = glm_phi_profile(xs, 0.0, p);
  for (std::size_t i = 0; i < xs.size(); ++i) {
    const double ff = phi_equal_time(xs[i], p, n3);
    CHECK(std::abs(prof[i].phi.real() / ff - 1.0) < 1e-3);
    CHECK(std::abs(prof[i].phi.imag()) < 1e-12);
  }
  // (dt - dx) phi at t = 0 against a centred difference in x
  const double h = 1e-3;
  const auto around = glm_phi_profile({3.0 - h, 3.0, 3.0 + h}, 0.0, p);
  const cplx dx = (around[2].phi - around[0].phi) / (2.0 * h);
  CHECK(std::abs(around[1].dt_minus_dx_phi + dx) < 1e-5);
}

TEST_CASE("Neumann orders") {
  const ThermalParams p;
  const auto modes = CircleModeSet::build(p, 20);
  for (double x : {2.5, 4.0}) {
    const auto o = neumann_orders(x, p, 3);
    CHECK(std::abs(o.quadratic_combination) < 1e-6 * std::norm(o.k_glm[1]));
  }
  const double x = 3.0;
  const auto o = neumann_orders(x, p, 3);
  const auto e = particle_sums(modes, x, 0.0, p, 3);
  const double f1 = e[1].real(), f2 = e[2].real(), f3 = e[3].real();
  const double want = 2.0 * (f1 * f1 * f1 / 3.0 - f1 * f2 + f3);
  CHECK(std::abs(o.cubic_combination.real() / want - 1.0) < 1e-4);
}
