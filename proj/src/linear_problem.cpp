#include "thermal_ising/linear_problem.hpp"

#include <algorithm>
#include <cmath>
#include <memory>
#include <string>

#include "thermal_ising/errors.hpp"
#include "thermal_ising/parallel.hpp"
#include "thermal_ising/scattering.hpp"

namespace thermal_ising {

namespace {

// Uniform table on [0, spacing (size - 1)], evaluated at |x| with four-point
// Lagrange interpolation.
template <typename V>
struct UniformTable {
  double spacing = 0.0;
  std::vector<V> values;

  double reach() const { return spacing * static_cast<double>(values.size() - 1); }

  V operator()(double x) const {
    const double u = std::abs(x) / spacing;
    const auto n = static_cast<long>(values.size());
    long k = static_cast<long>(std::floor(u));
    const double f = u - static_cast<double>(k);
    if (f < 1e-9 && k < n) return values[k];
    if (f > 1.0 - 1e-9 && k + 1 < n) return values[k + 1];
    k = std::clamp(k - 1, 0L, n - 4);
    const double s = u - static_cast<double>(k);
    V out{};
    for (int i = 0; i < 4; ++i) {
      double w = 1.0;
      for (int j = 0; j < 4; ++j) {
        if (j != i) w *= (s - j) / (i - j);
      }
      out += w * values[k + i];
    }
    return out;
  }
};

// Even function: fine table near the origin, where the truncated series
// varies on the scale 1/cosh(theta_{n_max}), coarse table elsewhere.
template <typename V>
struct EvenTable {
  UniformTable<V> fine, coarse;

  V operator()(double x) const {
    return std::abs(x) < fine.reach() - 2.0 * fine.spacing ? fine(x) : coarse(x);
  }
};

Vec2 mul(const Mat2& a, const Vec2& v) {
  return {a[0][0] * v[0] + a[0][1] * v[1], a[1][0] * v[0] + a[1][1] * v[1]};
}

Vec2 axpy(const Vec2& v, cplx s, const Vec2& k) { return {v[0] + s * k[0], v[1] + s * k[1]}; }

double norm(const Vec2& v) { return std::hypot(std::abs(v[0]), std::abs(v[1])); }

struct Trajectory {
  std::vector<double> x;
  std::vector<Vec2> psi;
};

// Classical RK4 from x_max to x_min with n uniform steps.
Trajectory rk4(double theta, const FieldProfile& profile, const ThermalParams& p, Vec2 psi,
               long n, int stride) {
  const double h = -(profile.x_max - profile.x_min) / static_cast<double>(n);
  Trajectory out;
  out.x.reserve(static_cast<std::size_t>(n / stride + 2));
  out.psi.reserve(out.x.capacity());
  out.x.push_back(profile.x_max);
  out.psi.push_back(psi);
  for (long i = 0; i < n; ++i) {
    const double x = profile.x_max + h * static_cast<double>(i);
    const double xh = x + 0.5 * h;
    const double x1 = i + 1 == n ? profile.x_min : x + h;
    const Mat2 a0 = connection_Ax(x, theta, profile, p);
    const Mat2 ah = connection_Ax(xh, theta, profile, p);
    const Mat2 a1 = connection_Ax(x1, theta, profile, p);
    const Vec2 k1 = mul(a0, psi);
    const Vec2 k2 = mul(ah, axpy(psi, 0.5 * h, k1));
    const Vec2 k3 = mul(ah, axpy(psi, 0.5 * h, k2));
    const Vec2 k4 = mul(a1, axpy(psi, h, k3));
    for (int c = 0; c < 2; ++c) psi[c] += h / 6.0 * (k1[c] + 2.0 * k2[c] + 2.0 * k3[c] + k4[c]);
    if ((i + 1) % stride == 0 || i + 1 == n) {
      out.x.push_back(x1);
      out.psi.push_back(psi);
    }
  }
  return out;
}

long step_count(const FieldProfile& profile, double theta, const ThermalParams& p, double step) {
  if (!(step > 0.0)) throw DomainError("Jost integration: step must be positive");
  if (!(profile.x_max > profile.x_min)) throw DomainError("Jost integration: empty domain");
  const double lam = std::exp(std::abs(theta));
  // largest entry of A_x for small phi is ~ m lambda / 4
  if (p.m * lam * step / 4.0 > 0.1 || std::abs(p.m * std::sinh(theta)) * step > 0.1) {
    throw StepSizeError("Jost integration: step too large for theta = " + std::to_string(theta));
  }
  return static_cast<long>(std::ceil((profile.x_max - profile.x_min) / step - 1e-9));
}

}  // namespace

FieldProfile FieldProfile::zero(double x_min, double x_max) {
  FieldProfile f;
  f.phi = [](double) { return 0.0; };
  f.dphi_dt = [](double) { return cplx{}; };
  f.x_min = x_min;
  f.x_max = x_max;
  return f;
}

FieldProfile FieldProfile::form_factor(const ThermalParams& p, double x_min, double x_max,
                                       const TruncationPolicy& policy, double spacing,
                                       double tau_step, const QuadratureConfig& cfg) {
  if (!(spacing > 0.0) || !(tau_step > 0.0)) {
    throw DomainError("FieldProfile: spacing and tau_step must be positive");
  }
  policy.validate();
  const double reach = std::max(std::abs(x_min), std::abs(x_max));
  auto modes = std::make_shared<CircleModeSet>(CircleModeSet::build(p, policy.n_max, cfg));
  TruncationPolicy local = policy;
  local.enforce_tail = false;

  auto phi = std::make_shared<EvenTable<double>>();
  auto dphi = std::make_shared<EvenTable<cplx>>();
  auto fill = [&](UniformTable<double>& tp, UniformTable<cplx>& td, double h, double span) {
    const auto n = static_cast<std::size_t>(std::ceil(span / h)) + 4;
    tp.spacing = td.spacing = h;
    tp.values.resize(n);
    td.values.resize(n);
    parallel_for(n, [&](std::size_t k) {
      const double x = h * static_cast<double>(k);
      tp.values[k] = phi_circle(*modes, x, 0.0, p, local).real();
      const cplx up = phi_circle(*modes, x, tau_step, p, local);
      const cplx dn = phi_circle(*modes, x, -tau_step, p, local);
      td.values[k] = cplx(0.0, 1.0) * (up - dn) / (2.0 * tau_step);
    });
  };
  fill(phi->coarse, dphi->coarse, spacing, reach);
  const double near = std::min(reach, 40.0 * spacing);
  fill(phi->fine, dphi->fine, spacing / 10.0, near);

  FieldProfile f;
  f.phi = [phi](double x) { return (*phi)(x); };
  f.dphi_dt = [dphi](double x) { return (*dphi)(x); };
  f.x_min = x_min;
  f.x_max = x_max;
  return f;
}

void FieldProfile::validate() const {
  if (!phi || !dphi_dt) throw DomainError("FieldProfile: missing phi or dphi_dt");
  if (!(x_max > x_min)) throw DomainError("FieldProfile: need x_min < x_max");
  for (double x : {x_min, x_max}) {
    if (!(std::abs(phi(x)) < decay_tol)) {
      throw NonDecayedProfile("FieldProfile: |phi(" + std::to_string(x) + ")| = " +
                              std::to_string(std::abs(phi(x))) + " exceeds decay_tol");
    }
  }
}

Mat2 connection_Ax(double x, cplx theta, const FieldProfile& profile, const ThermalParams& p) {
  const double ph = profile.phi(x);
  const cplx dt = profile.dphi_dt(x);
  const cplx lam = std::exp(theta);
  const cplx i4(0.0, 0.25);
  const double ep = std::exp(ph), em = std::exp(-ph);
  Mat2 a;
  a[0][0] = i4 * cplx(0.0, 2.0) * dt;
  a[0][1] = i4 * p.m * (lam * em - ep / lam);
  a[1][0] = i4 * p.m * (lam * ep - em / lam);
  a[1][1] = -a[0][0];
  return a;
}

double JostRun::current_defect() const {
  return std::norm(a_num) - std::norm(b_num) - 1.0;
}

JostRun integrate_jost_plus(double theta, const FieldProfile& profile, const ThermalParams& p,
                            const JostOptions& opts) {
  profile.validate();
  if (opts.stride < 1) throw DomainError("integrate_jost_plus: stride must be >= 1");
  const long n = step_count(profile, theta, p, opts.step);
  const double k = p.m * std::sinh(theta) / 2.0;
  const cplx e0 = std::exp(cplx(0.0, k * profile.x_max));
  const Vec2 start{e0, e0};

  Trajectory fine = rk4(theta, profile, p, start, 2 * n, 2 * opts.stride);
  Trajectory coarse = rk4(theta, profile, p, start, n, n);
  const Vec2 end = fine.psi.back();
  Vec2 diff{end[0] - coarse.psi.back()[0], end[1] - coarse.psi.back()[1]};

  JostRun run;
  run.theta = theta;
  run.error_estimate = norm(diff) / 15.0 / std::max(norm(end), 1e-300);
  if (run.error_estimate > opts.tol) {
    throw StepSizeError("integrate_jost_plus: step-halving estimate " +
                        std::to_string(run.error_estimate) + " exceeds tolerance");
  }
  const double xm = profile.x_min;
  run.a_num = (end[0] + end[1]) / (2.0 * std::exp(cplx(0.0, k * xm)));
  run.b_num = -(end[0] - end[1]) / (2.0 * std::exp(cplx(0.0, -k * xm)));
  run.x = std::move(fine.x);
  run.psi = std::move(fine.psi);
  return run;
}

double wronskian_drift(double theta, const FieldProfile& profile, const ThermalParams& p,
                       const JostOptions& opts) {
  profile.validate();
  const long n = step_count(profile, theta, p, opts.step);
  const double k = p.m * std::sinh(theta) / 2.0;
  const cplx e0 = std::exp(cplx(0.0, k * profile.x_max));
  const cplx e1 = 1.0 / e0;
  const Trajectory u = rk4(theta, profile, p, {e0, e0}, n, 1);
  const Trajectory v = rk4(theta, profile, p, {e1, -e1}, n, 1);
  auto det = [&](std::size_t i) { return u.psi[i][0] * v.psi[i][1] - u.psi[i][1] * v.psi[i][0]; };
  const cplx d0 = det(0);
  double drift = 0.0;
  for (std::size_t i = 1; i < u.psi.size(); ++i) drift = std::max(drift, std::abs(det(i) / d0 - 1.0));
  return drift;
}

double lambda_deviation(double theta, const FieldProfile& profile, const ThermalParams& p,
                        const JostOptions& opts) {
  JostOptions local = opts;
  double phi_max = 0.0;
  for (int i = 0; i <= 4000; ++i) {
    const double x = profile.x_min + (profile.x_max - profile.x_min) * i / 4000.0;
    phi_max = std::max(phi_max, std::abs(profile.phi(x)));
  }
  local.step = std::min(opts.step, 0.08 / (p.m * std::exp(std::abs(theta) + phi_max)));
  const JostRun run = integrate_jost_plus(theta, profile, p, local);
  const double k = p.m * std::sinh(theta) / 2.0;
  double dev = 0.0;
  for (std::size_t i = 0; i < run.x.size(); ++i) {
    const cplx ph = std::exp(cplx(0.0, -k * run.x[i]));
    const double f = profile.phi(run.x[i]);
    dev = std::max(dev, std::abs(run.psi[i][0] * ph - std::exp(-f / 2.0)));
    dev = std::max(dev, std::abs(run.psi[i][1] * ph - std::exp(f / 2.0)));
  }
  return dev;
}

LambdaAsymptoticsReport check_lambda_asymptotics(const FieldProfile& profile, double theta_large,
                                                 const ThermalParams& p,
                                                 const JostOptions& opts) {
  if (!(theta_large >= 3.0)) throw DomainError("check_lambda_asymptotics: need theta >= 3");
  LambdaAsymptoticsReport r;
  r.theta = theta_large;
  r.deviation = lambda_deviation(theta_large, profile, p, opts);
  r.deviation_halved = lambda_deviation(theta_large + std::log(2.0), profile, p, opts);
  r.ratio = r.deviation_halved > 0.0 ? r.deviation / r.deviation_halved : 0.0;
  return r;
}

JostComparison compare_jost(double theta, const FieldProfile& profile, const ThermalParams& p,
                            const JostOptions& opts, const QuadratureConfig& cfg) {
  const JostRun run = integrate_jost_plus(theta, profile, p, opts);
  JostComparison c;
  c.theta = theta;
  c.a_num = run.a_num;
  c.b_num = run.b_num;
  c.a_exact = jost_a(cplx(theta, 0.0), p, cfg);
  c.b_exact = jost_b(cplx(theta, 0.0), 0.0, p);
  c.rel_dev_a = std::abs(c.a_num - c.a_exact) / std::abs(c.a_exact);
  c.rel_dev_b = std::abs(c.b_num - c.b_exact) / std::abs(c.b_exact);
  c.current_defect = run.current_defect();
  c.error_estimate = run.error_estimate;
  return c;
}

}  // namespace thermal_ising
