#include "thermal_ising/specfn.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "thermal_ising/errors.hpp"

namespace thermal_ising {
namespace {

constexpr double kPi = std::numbers::pi;
constexpr cplx kI{0.0, 1.0};
// beyond this |theta| every integrand built from L is zero in double precision
constexpr double kThetaCut = 40.0;

// 1/sinh(w) without overflow for large |Re w|
cplx inv_sinh(cplx w) {
  if (w.real() > 20.0) {
    const cplx e = std::exp(-w);
    return 2.0 * e / (1.0 - e * e);
  }
  if (w.real() < -20.0) return -inv_sinh(-w);
  return 1.0 / std::sinh(w);
}

// Distance from s to the lattice theta_n + i sgn pi/2 (n integer or half-integer).
double lattice_distance(cplx s, const ThermalParams& p) {
  const double dy = std::abs(std::abs(s.imag()) - kPi / 2.0);
  const double n = std::round(2.0 * p.m * std::sinh(s.real()) / (2.0 * kPi * p.T)) / 2.0;
  double best = 1e300;
  for (double k : {n - 0.5, n, n + 0.5}) {
    best = std::min(best, std::hypot(s.real() - quantized_rapidity(k, p), dy));
  }
  return best;
}

cplx h_plus_exponent(cplx th, const ThermalParams& p, const QuadratureConfig& cfg) {
  const double eta = th.imag();
  if (!(eta > -kPi / 2.0) || !(eta < 1.5 * kPi)) {
    throw DomainError("h_pm: Im theta outside (-pi/2, 3pi/2)");
  }
  const double c = th.real();
  if (eta < kPi / 4.0) {
    const cplx lt = thermal_log_kernel(th, p);
    const cplx dl = thermal_log_kernel_derivative(th, p);
    auto f = [&](double tp) -> cplx {
      if (std::abs(tp - c) > kThetaCut + std::abs(c)) return 0.0;
      const cplx w = th - tp;
      if (std::abs(w) < 1e-7) return -dl;
      return (thermal_log_kernel(tp, p) - lt) * inv_sinh(w);
    };
    const cplx integral = integrate_real_line(f, cfg, c).value;
    return integral / (2.0 * kPi * kI) - 0.5 * lt;
  }
  if (eta <= 0.75 * kPi) {
    auto f = [&](double tp) -> cplx {
      if (std::abs(tp) > kThetaCut) return 0.0;
      return thermal_log_kernel(tp, p) * inv_sinh(th - tp);
    };
    return integrate_real_line(f, cfg, c).value / (2.0 * kPi * kI);
  }
  const cplx s = th - kPi * kI;
  const cplx ls = thermal_log_kernel(s, p);
  const cplx dls = thermal_log_kernel_derivative(s, p);
  auto f = [&](double tp) -> cplx {
    if (std::abs(tp - c) > kThetaCut + std::abs(c)) return 0.0;
    const cplx w = s - tp;
    if (std::abs(w) < 1e-7) return dls;
    return (thermal_log_kernel(tp, p) - ls) * inv_sinh(th - tp);
  };
  const cplx integral = integrate_real_line(f, cfg, c).value;
  return integral / (2.0 * kPi * kI) - 0.5 * ls;
}

cplx h_plus(cplx th, const ThermalParams& p, const QuadratureConfig& cfg, double guard) {
  const double eta = th.imag();
  // zeros/poles of h_+ sit at theta_n - i pi/2 and theta_n + 3 i pi/2
  if (eta < 0.0 && lattice_distance(th, p) < guard) {
    throw NearSingularity("h_pm: theta too close to the pole/zero lattice");
  }
  if (eta > kPi && lattice_distance(th - kPi * kI, p) < guard) {
    throw NearSingularity("h_pm: theta too close to the pole/zero lattice");
  }
  const cplx pref = std::exp(kI * (kPi / 4.0)) / std::sqrt(2.0 * kPi);
  return pref * std::exp(h_plus_exponent(th, p, cfg));
}

}  // namespace

void ThermalParams::validate() const {
  if (!(m > 0.0) || !(T > 0.0) || !std::isfinite(m) || !std::isfinite(T)) {
    throw DomainError("ThermalParams: m and T must be positive and finite");
  }
  const double r = m / T;
  if (!std::isfinite(r) || r == 0.0) throw DomainError("ThermalParams: m/T must be finite and nonzero");
}

double thermal_log_kernel(double theta, const ThermalParams& p) {
  const double z = std::exp(-p.m * std::cosh(theta) / p.T);
  return 2.0 * std::atanh(z);
}

cplx thermal_log_kernel(cplx theta, const ThermalParams& p) {
  if (std::abs(theta.real()) > 700.0) return 0.0;
  const cplx z = std::exp(-p.m * std::cosh(theta) / p.T);
  return 2.0 * std::atanh(z);
}

cplx thermal_log_kernel_derivative(cplx theta, const ThermalParams& p) {
  if (std::abs(theta.real()) > 700.0) return 0.0;
  const cplx z = std::exp(-p.m * std::cosh(theta) / p.T);
  return -2.0 * z * (p.m * std::sinh(theta) / p.T) / (1.0 - z * z);
}

cplx h_pm(Sign s, cplx theta, const ThermalParams& p, const QuadratureConfig& cfg,
          double guard_radius) {
  p.validate();
  cfg.validate();
  if (s == Sign::kPlus) return h_plus(theta, p, cfg, guard_radius);
  return std::conj(h_plus(std::conj(theta), p, cfg, guard_radius));
}

cplx h_pm_shifted_contour(Sign s, double theta, const ThermalParams& p,
                          const QuadratureConfig& cfg) {
  p.validate();
  cfg.validate();
  const double delta = cfg.pv_offset;
  if (delta >= kPi / 2.0) throw DomainError("h_pm_shifted_contour: pv_offset must be below pi/2");
  const double sg = s == Sign::kPlus ? 1.0 : -1.0;
  // contour Im theta' = -sg delta
  auto f = [&](double u) -> cplx {
    if (std::abs(u - theta) > kThetaCut + std::abs(theta)) return 0.0;
    const cplx tp(u, -sg * delta);
    return thermal_log_kernel(tp, p) * inv_sinh(theta - tp);
  };
  const cplx exponent = sg * integrate_real_line(f, cfg, theta).value / (2.0 * kPi * kI);
  const cplx pref = std::exp(sg * kI * (kPi / 4.0)) / std::sqrt(2.0 * kPi);
  return pref * std::exp(exponent);
}

cplx g_pm(Sign s, cplx theta, const ThermalParams& p, Sector sector) {
  p.validate();
  const double sg = s == Sign::kPlus ? 1.0 : -1.0;
  const cplx e = std::exp(-sg * p.m * std::cosh(theta) / p.T);
  const cplx den = sector == Sector::kR ? 1.0 - e : 1.0 + e;
  if (std::abs(den) < 1e-13 * std::max(1.0, std::abs(e))) {
    throw PoleError("g_pm: theta on the pole E_theta = 2 pi i n T");
  }
  return 1.0 / den;
}

double quantized_rapidity(double n, const ThermalParams& p) {
  return std::asinh(2.0 * kPi * n * p.T / p.m);
}

double delta_vacuum_energy(const ThermalParams& p, const QuadratureConfig& cfg) {
  p.validate();
  cfg.validate();
  auto f = [&](double th) -> double {
    if (th > kThetaCut) return 0.0;
    return std::cosh(th) * thermal_log_kernel(th, p);
  };
  return 2.0 * integrate_half_line([&](double u) { return f(u); }, 0.0, cfg).value;
}

double s_T(const ThermalParams& p, const QuadratureConfig& cfg) {
  p.validate();
  cfg.validate();
  const double mb = p.m_beta();
  auto weight = [&](double th) -> double {
    const double a = mb * std::cosh(th);
    if (a > 700.0) return 0.0;
    const double e = std::exp(-a);
    return std::sinh(th) * 2.0 * e / (1.0 - e * e);
  };
  // G(u) = \int dv w((v+u)/2) w((v-u)/2), even in u
  auto inner = [&](double u) -> double {
    if (u > 2.0 * kThetaCut) return 0.0;
    auto g = [&](double v) -> double {
      if (std::abs(v) > 2.0 * kThetaCut) return 0.0;
      return weight(0.5 * (v + u)) * weight(0.5 * (v - u));
    };
    return integrate_real_line(g, cfg).value;
  };
  // \int\int d1 d2 = (1/2) \int du \int dv; even in u folds to 2 \int_0^inf du.
  // The exp-sinh map clusters nodes at u = 0 where ln coth(u/2) is singular.
  auto outer = [&](double u) -> double {
    if (u <= 0.0) return 0.0;
    const double lc = u < 1.0 ? -std::log(std::tanh(0.5 * u)) : 2.0 * std::atanh(std::exp(-u));
    return lc * inner(u);
  };
  const double dbl = integrate_half_line(outer, 0.0, cfg).value;
  const double expo = 0.5 * mb * mb * dbl / (4.0 * kPi * kPi);
  const double pref = std::pow(p.m, 0.125) * std::pow(2.0, 1.0 / 12.0) * std::exp(-0.125) *
                      std::pow(kGlaisher, 1.5);
  return pref * std::exp(expo);
}

double log_kernel_moment(int omega, const ThermalParams& p, const QuadratureConfig& cfg) {
  p.validate();
  cfg.validate();
  if (omega < 0) throw DomainError("log_kernel_moment: omega must be non-negative");
  const double k = 2.0 * omega + 1.0;
  auto f = [&](double th) -> double {
    if (th > kThetaCut) return 0.0;
    return std::cosh(k * th) * thermal_log_kernel(th, p);
  };
  return 2.0 * integrate_half_line(f, 0.0, cfg).value;
}

std::vector<cplx> c_mu_coefficients(int mu_max, const ThermalParams& p,
                                    const QuadratureConfig& cfg) {
  if (mu_max < 0 || mu_max > kDefaultMuMax) {
    throw DomainError("c_mu_coefficients: mu_max must lie in [0, " +
                      std::to_string(kDefaultMuMax) + "]");
  }
  // exponent coefficients e_k of q^k
  std::vector<cplx> e(mu_max + 1, 0.0);
  for (int k = 1; k <= mu_max; k += 2) {
    e[k] = -2.0 * kI / kPi * log_kernel_moment((k - 1) / 2, p, cfg);
  }
  std::vector<cplx> c(mu_max + 1, 0.0);
  c[0] = 1.0;
  for (int n = 1; n <= mu_max; ++n) {
    cplx acc = 0.0;
    for (int k = 1; k <= n; ++k) acc += double(k) * e[k] * c[n - k];
    c[n] = acc / double(n);
  }
  return c;
}

cplx c_mu_generating_function(double q, int omega_max, const ThermalParams& p,
                              const QuadratureConfig& cfg) {
  cplx expo = 0.0;
  for (int w = 0; w <= omega_max; ++w) {
    expo += std::pow(q, 2 * w + 1) * (-2.0 * kI / kPi) * log_kernel_moment(w, p, cfg);
  }
  return std::exp(expo);
}

}  // namespace thermal_ising
