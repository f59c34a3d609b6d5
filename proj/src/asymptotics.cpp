#include "thermal_ising/asymptotics.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <functional>
#include <numbers>

#include "thermal_ising/errors.hpp"
#include "thermal_ising/glm.hpp"
#include "thermal_ising/quadrature.hpp"
#include "thermal_ising/scattering.hpp"

namespace thermal_ising {

namespace {

constexpr double kPi = std::numbers::pi;
const cplx kI(0.0, 1.0);

cplx z_of(const LightconeCoords& c, double m) { return m * c.sqrt_v() * std::sqrt(c.w); }

std::vector<cplx> padded(const std::vector<cplx>& c, std::size_t n) {
  std::vector<cplx> out = c;
  out.resize(std::max(n, c.size()), cplx{});
  return out;
}

}  // namespace

void LightconeCoords::validate() const {
  if (!(w > 0.0)) throw DomainError("LightconeCoords: need w = t + x > 0");
  if (v == 0.0) throw BranchError("LightconeCoords: v = t - x = 0 is on the light cone");
}

cplx sqrt_v_branch(cplx v) {
  double arg = std::arg(v);
  if (v.imag() == 0.0 && v.real() < 0.0) arg = -kPi;
  if (arg > 0.0) throw BranchError("sqrt_v_branch: v must lie in the closed lower half plane");
  return std::sqrt(std::abs(v)) * std::exp(cplx(0.0, arg / 2.0));
}

cplx LightconeCoords::sqrt_v() const { return sqrt_v_branch(cplx(v, 0.0)); }

cplx LightconeCoords::v_complex() const {
  const cplx s = sqrt_v();
  return s * s;
}

std::optional<std::string> regime_warning(const LightconeCoords& c, const ThermalParams& p) {
  const double scale = std::max({std::abs(c.v), 1.0 / p.m, 1.0 / p.T});
  if (c.w < 5.0 * scale) {
    return "w = " + std::to_string(c.w) + " is not large against max(|v|, 1/m, 1/T) = " +
           std::to_string(scale);
  }
  return std::nullopt;
}

cplx lightcone_basis(int mu, cplx v, double w, double m) {
  if (mu < 0) throw DomainError("lightcone_basis: mu must be non-negative");
  if (!(w > 0.0)) throw DomainError("lightcone_basis: need w > 0");
  if (v == cplx(0.0)) throw BranchError("lightcone_basis: v = 0");
  const cplx sv = sqrt_v_branch(v);
  const double sw = std::sqrt(w);
  return std::pow(sv / sw, mu) * bessel_k(mu, kI * m * sv * sw);
}

cplx phi_lightcone(cplx v, double w, const std::vector<cplx>& c_mu, double m) {
  cplx sum = 0.0;
  for (std::size_t mu = 0; mu < c_mu.size(); ++mu) {
    if (c_mu[mu] == cplx(0.0)) continue;
    sum += c_mu[mu] * lightcone_basis(static_cast<int>(mu), v, w, m);
  }
  return 2.0 / kPi * sum;
}

cplx phi_lightcone(const LightconeCoords& c, const std::vector<cplx>& c_mu, double m) {
  c.validate();
  return phi_lightcone(cplx(c.v, 0.0), c.w, c_mu, m);
}

cplx phi_lightcone(const LightconeCoords& c, const ThermalParams& p, int mu_max,
                   const QuadratureConfig& cfg) {
  p.validate();
  return phi_lightcone(c, c_mu_coefficients(mu_max, p, cfg), p.m);
}

cplx evaluate(const MvPolynomial& poly, cplx mv) {
  cplx out = 0.0;
  for (auto it = poly.rbegin(); it != poly.rend(); ++it) out = out * mv + *it;
  return out;
}

SeriesCoefficients SeriesCoefficients::from_c(const std::vector<cplx>& c_in) {
  SeriesCoefficients s;
  s.c = padded(c_in, 4);
  const cplx c1 = s.c[1], c2 = s.c[2], c3 = s.c[3];
  s.g[0] = {kI / 8.0, c1};
  s.g[1] = {-9.0 / 128.0, -3.0 * kI * c1 / 8.0, c2};
  s.g[2] = {-75.0 * kI / 1024.0, 15.0 * c1 / 128.0, -15.0 * kI * c2 / 8.0, c3};
  s.f[0] = {3.0 * kI / 4.0, 2.0 * c1};
  s.f[1] = {-33.0 / 32.0, kI * c1 / 2.0, 2.0 * c2 + c1 * c1};
  s.f[2] = {-255.0 * kI / 128.0, -9.0 * c1 / 16.0, -kI / 4.0 * (c1 * c1 + 10.0 * c2),
            2.0 * (c1 * c2 + c3)};
  return s;
}

SeriesCoefficients SeriesCoefficients::zero_temperature() { return from_c({1.0}); }

SeriesCoefficients series_coefficients(const ThermalParams& p, const QuadratureConfig& cfg) {
  p.validate();
  return SeriesCoefficients::from_c(c_mu_coefficients(3, p, cfg));
}

MvPolynomial g_from_bessel_asymptotics(int n, const std::vector<cplx>& c_in) {
  if (n < 0) throw DomainError("g_from_bessel_asymptotics: n must be non-negative");
  const std::vector<cplx> c = padded(c_in, static_cast<std::size_t>(n) + 1);
  MvPolynomial poly(static_cast<std::size_t>(n) + 1, cplx{});
  for (int mu = 0; mu <= n; ++mu) {
    const int k = n - mu;
    double a = 1.0;
    for (int j = 1; j <= k; ++j) a *= (4.0 * mu * mu - (2.0 * j - 1) * (2.0 * j - 1)) / (8.0 * j);
    poly[mu] = c[mu] * a / std::pow(kI, k);
  }
  return poly;
}

cplx phi_series(const LightconeCoords& c, const SeriesCoefficients& s, double m) {
  c.validate();
  const cplx z = z_of(c, m);
  const cplx mv = m * c.v_complex();
  cplx bracket = 1.0;
  for (int k = 0; k < 3; ++k) bracket += evaluate(s.g[k], mv) / std::pow(z, k + 1);
  return std::sqrt(-2.0 * kI / (kPi * z)) * std::exp(-kI * z) * bracket;
}

cplx chi_series(const LightconeCoords& c, const SeriesCoefficients& s, double m) {
  c.validate();
  const cplx z = z_of(c, m);
  const cplx mv = m * c.v_complex();
  cplx bracket = 1.0;
  for (int k = 0; k < 3; ++k) bracket += evaluate(s.f[k], mv) / std::pow(z, k + 1);
  return kI / (2.0 * kPi * z) * std::exp(-2.0 * kI * z) * bracket;
}

std::array<cplx, 3> g_bracket_terms(const LightconeCoords& c, const SeriesCoefficients& s,
                                    double m) {
  c.validate();
  const cplx z = z_of(c, m);
  const cplx mv = m * c.v_complex();
  const cplx c1 = s.c[1], c2 = s.c[2];
  return {cplx(-1.0 / (8.0 * kPi * m * m * c.v * c.w)),
          -(7.0 * kI + 8.0 * c1 * mv) / (32.0 * kPi * std::pow(z, 3)),
          (117.0 - 48.0 * kI * c1 * mv - 32.0 * (c1 * c1 + 2.0 * c2) * mv * mv) /
              (256.0 * kPi * std::pow(z, 4))};
}

LightconeCorrelators correlators_lightcone(const LightconeCoords& c, const SeriesCoefficients& s,
                                           double m, double st2,
                                           const ExponentialConstants& abc) {
  c.validate();
  const double pref = st2 * std::exp(-abc.A - abc.B * c.x() - abc.C * c.t());
  const auto terms = g_bracket_terms(c, s, m);
  const cplx z = z_of(c, m);
  LightconeCorrelators out;
  out.G = pref * (1.0 + std::exp(-2.0 * kI * z) * (terms[0] + terms[1] + terms[2]));
  out.Gtilde = pref * phi_lightcone(c, s.c, m) / 2.0;
  return out;
}

LightconeCorrelators correlators_lightcone(const LightconeCoords& c, const ThermalParams& p,
                                           const ExponentialConstants& abc, int mu_max,
                                           const QuadratureConfig& cfg) {
  p.validate();
  const std::vector<cplx> cm = c_mu_coefficients(std::max(mu_max, 3), p, cfg);
  SeriesCoefficients s = SeriesCoefficients::from_c(cm);
  s.c.resize(static_cast<std::size_t>(mu_max) + 1);
  const double st = s_T(p, cfg);
  LightconeCorrelators out = correlators_lightcone(c, s, p.m, st * st, abc);
  out.warning = regime_warning(c, p);
  return out;
}

double klein_gordon_residual(int mu, const LightconeCoords& c, double m, double h) {
  c.validate();
  const double x = c.x(), t = c.t();
  auto phi = [&](double xx, double tt) { return lightcone_basis(mu, cplx(tt - xx, 0.0), tt + xx, m); };
  auto second = [&](auto&& f) {
    return (-f(2.0 * h) + 16.0 * f(h) - 30.0 * f(0.0) + 16.0 * f(-h) - f(-2.0 * h)) / (12.0 * h * h);
  };
  const cplx dxx = second([&](double d) { return phi(x + d, t); });
  const cplx dtt = second([&](double d) { return phi(x, t + d); });
  const cplx centre = phi(x, t);
  return std::abs((dxx - dtt) / 4.0 - m * m / 4.0 * centre) / std::abs(m * m / 4.0 * centre);
}

double chi_consistency_residual(const LightconeCoords& c, const SeriesCoefficients& s, double m,
                                double h) {
  c.validate();
  const double x = c.x(), t = c.t();
  auto chi = [&](double xx, double tt) {
    return chi_series(LightconeCoords::from_xt(xx, tt), s, m);
  };
  auto second = [&](auto&& f) {
    return (-f(2.0 * h) + 16.0 * f(h) - 30.0 * f(0.0) + 16.0 * f(-h) - f(-2.0 * h)) / (12.0 * h * h);
  };
  const cplx dxx = second([&](double d) { return chi(x + d, t); });
  const cplx dtt = second([&](double d) { return chi(x, t + d); });
  const cplx ph = phi_series(c, s, m);
  const cplx source = m * m / 4.0 * ph * ph;
  return std::abs((dxx - dtt) / 4.0 + source) / std::abs(source);
}

LightconeMatch lightcone_match(const LightconeCoords& c, const ThermalParams& p, int mu_max,
                               const QuadratureConfig& cfg) {
  c.validate();
  const BesselSeriesKernel kernel(p, mu_max, cfg);
  const double x2 = 2.0 * c.x(), t = c.t();
  const BesselSeriesResult series = kernel.evaluate(-1, x2, t);
  LightconeMatch out;
  out.mu_terms = series.mu_terms;
  std::vector<cplx> kept(kernel.c().begin(), kernel.c().begin() + series.mu_terms);
  out.phi = phi_lightcone(c, kept, p.m);
  cplx f = 0.0;
  for (int mu = 0; mu < series.mu_terms; ++mu) f += kernel.term(-1, x2, t, mu, 0, false);
  out.minus_2i_f_m1 = -2.0 * kI * f;
  out.difference = std::abs(out.phi - out.minus_2i_f_m1);
  out.budget = 2.0 * series.tail_estimate;
  out.minus_2i_direct = -2.0 * kI * kernel_direct(-1, x2, t, p);
  out.direct_difference = std::abs(out.phi - out.minus_2i_direct);
  return out;
}

std::array<std::array<cplx, 8>, 8> appendix_c_matrix(cplx K, cplx Kt, double s) {
  const cplx i = kI;
  const cplx z = 0.0;
  return {{
      {0.5, -i * s - s * Kt / 4.0, -i * s / 2.0 - s * K / 4.0, z, z, s * Kt / 4.0, s * K / 4.0, z},
      {-i * s / 2.0, i * Kt / 4.0, -0.5 + i * K / 4.0, z, z, -i * Kt / 4.0, -i * K / 4.0, z},
      {s * K / 4.0, z, 0.5, -i * s / 2.0 + s * Kt / 4.0, z, z, z, z},
      {-i * K / 4.0, z, -i * s / 2.0, 0.5 - i * Kt / 4.0, z, z, z, z},
      {z, -i * s - s * Kt / 2.0, -i * s - s * K / 2.0, z, 1.0, s * Kt / 2.0, s * K / 2.0, z},
      {z, z, z, z, z, 1.0, z, z},
      {s * K / 2.0, z, z, s * Kt / 2.0, z, z, 1.0, z},
      {z, z, z, z, z, z, z, 1.0},
  }};
}

std::array<cplx, 8> appendix_c_rhs(double m, double s) {
  return {m * kI / 4.0, m * s / 4.0, -m * s / 4.0, m * kI / 4.0,
          m * kI / 2.0, 0.0,        -m * s / 2.0, 0.0};
}

AppendixCSolution verify_appendixC_system(cplx K, cplx Kt, double m) {
  AppendixCSolution out;
  for (int idx = 0; idx < 2; ++idx) {
    const double s = idx == 0 ? 1.0 : -1.0;
    const auto mat = appendix_c_matrix(K, Kt, s);
    const auto rhs = appendix_c_rhs(m, s);
    Eigen::Matrix<cplx, 8, 8> a;
    Eigen::Matrix<cplx, 8, 1> b;
    for (int r = 0; r < 8; ++r) {
      b(r) = rhs[r];
      for (int col = 0; col < 8; ++col) a(r, col) = mat[r][col];
    }
    Eigen::FullPivLU<Eigen::Matrix<cplx, 8, 8>> lu(a);
    if (!lu.isInvertible()) throw SingularMatrix("8x8 ansatz system is singular");
    const Eigen::Matrix<cplx, 8, 1> x = lu.solve(b);
    out.residual = std::max(out.residual, (a * x - b).cwiseAbs().maxCoeff());
    for (int r = 0; r < 8; ++r) {
      out.coefficients[idx][r] = x(r);
      const cplx expected = (r == 2 || r == 6) ? cplx(-m * s / 2.0) : cplx(0.0);
      out.deviation = std::max(out.deviation, std::abs(x(r) - expected));
    }
  }
  return out;
}

cplx f0_principal_complex(cplx X, double t, const std::vector<cplx>& c_mu, double m) {
  const cplx a = 0.5 * m * kI * (t - 0.5 * X);
  const cplx b = 0.5 * m * kI * (t + 0.5 * X);
  if (a == cplx(0.0)) throw ValidityError("f0_principal_complex: X = 2t");
  const cplx la = std::log(a), lb = std::log(b);
  const cplx arg = 2.0 * std::sqrt(a) * std::sqrt(b);
  cplx sum = 0.0;
  for (std::size_t mu = 0; mu < c_mu.size(); ++mu) {
    const double power = 0.5 * (static_cast<double>(mu) - 1.0);
    sum += c_mu[mu] * std::exp(power * (la - lb)) * bessel_k(1 - static_cast<int>(mu), arg);
  }
  return kI / kPi * sum;
}

XiCheck xi_solution_check(const ThermalParams& p, double x, double y, double t, int mu_max,
                          const QuadratureConfig& cfg) {
  p.validate();
  if (!(t > x) || !(t > y)) throw DomainError("xi_solution_check: requires t > x and t > y");
  if (x == y) throw DomainError("xi_solution_check: x == y gives a double pole");
  const double m = p.m;
  const std::vector<cplx> c = c_mu_coefficients(mu_max, p, cfg);
  auto f0 = [&](cplx X) { return f0_principal_complex(X, t, c, m); };

  // residue of F_0^P(X) at X = 2t, approached from the upper half plane
  const double eps = 1e-9;
  const cplx res = kI * eps * f0(cplx(2.0 * t, eps));

  // integrand F_0^P(y + z) xi(x, z) is (m/2) F(y+z) F(x+z) (-1, 1)
  const double z1 = 2.0 * t - y, z2 = 2.0 * t - x;
  const cplx half_res = kI * kPi * 0.5 * m * (res * f0(x + z1) + res * f0(y + z2));
  cplx delta = f0(y + 2.0 * t - x) * (-kI);  // first component of (-i, i)
  if (2.0 * t - x - y > 0.0) {
    delta += 2.0 * kI / m * 0.5 * m * f0(x + 2.0 * t - y) * (-1.0);
  }
  // first components; the second components are the negatives
  const cplx cancel = delta + half_res * (-1.0);

  const cplx dir = std::exp(cplx(0.0, kPi / 4.0));
  auto integrand = [&](double s) -> cplx {
    if (s > 1e4) return 0.0;
    const cplx z = x + s * dir;
    return 0.5 * m * f0(y + z) * f0(x + z) * dir;
  };
  const cplx contour = integrate_half_line(integrand, 0.0, cfg).value * (-1.0);

  XiCheck out;
  out.t = t;
  out.delta_cancellation = std::abs(cancel) / std::abs(delta);
  const cplx r0 = cancel + contour;
  out.residual = {r0, -r0};
  out.residual_norm = std::abs(r0);
  out.leading_scale = std::abs(f0(x + y));
  return out;
}

XiScaling xi_scaling_check(const ThermalParams& p, double x, double y, double t, int mu_max,
                           const QuadratureConfig& cfg) {
  XiScaling out;
  out.at_t = xi_solution_check(p, x, y, t, mu_max, cfg);
  out.at_2t = xi_solution_check(p, x, y, 2.0 * t, mu_max, cfg);
  out.residual_ratio = out.at_t.residual_norm / out.at_2t.residual_norm;
  out.leading_ratio = out.at_t.leading_scale / out.at_2t.leading_scale;
  out.magnitude_passed = out.residual_ratio > out.leading_ratio;

  const double dt = 1e-3;
  const XiCheck later = xi_solution_check(p, x, y, t + dt, mu_max, cfg);
  out.omega_measured = -std::arg(later.residual[0] / out.at_t.residual[0]) / dt;
  const double s = 0.5 * (x + y);
  out.omega_retained = p.m * t / std::sqrt(t * t - s * s);
  out.omega_neglected_class = p.m * t / std::sqrt(t * t - x * x) + out.omega_retained;
  out.frequency_passed =
      std::abs(out.omega_measured - out.omega_neglected_class) < 0.02 * out.omega_neglected_class;
  return out;
}

std::array<cplx, 2> u1_delta_weight(const ThermalParams& p, double theta_head,
                                    const QuadratureConfig& cfg) {
  const cplx r_inf = reflection_r(Branch::kPositive, cplx(theta_head, 0.0), 0.0, p, cfg);
  // (1/4 pi) r_inf \int_0^inf d lambda e^{i m lambda (x - 2t)/4} -> (r_inf / m) delta(x - 2t)
  const cplx f0_weight = r_inf / p.m;
  return {-0.5 * p.m * f0_weight, 0.5 * p.m * f0_weight};
}

}  // namespace thermal_ising
