#pragma once

#include <array>
#include <functional>
#include <vector>

#include "thermal_ising/form_factors.hpp"
#include "thermal_ising/specfn.hpp"

namespace thermal_ising {

using Vec2 = std::array<cplx, 2>;
using Mat2 = std::array<std::array<cplx, 2>, 2>;

struct FieldProfile {
  std::function<double(double)> phi;
  // real-time derivative; at tau = 0 this is i d(phi)/d(tau)
  std::function<cplx(double)> dphi_dt;
  double x_min = -10.0;
  double x_max = 10.0;
  // |phi| at both ends must be below this
  double decay_tol = 1e-6;

  static FieldProfile zero(double x_min, double x_max);
  // phi(|x|, 0) from the circle expansion, tabulated with the given spacing
  // (ten times finer within 40 spacings of x = 0) and interpolated with
  // four-point Lagrange.  dphi_dt by a symmetric tau
  // difference with step tau_step.
  static FieldProfile form_factor(const ThermalParams& p, double x_min, double x_max,
                                  const TruncationPolicy& policy, double spacing = 1e-2,
                                  double tau_step = 1e-3, const QuadratureConfig& cfg = {});

  // throws NonDecayedProfile unless |phi| < decay_tol at both ends
  void validate() const;
};

// (i/4) [[2i dt phi, m(lambda e^{-phi} - e^{phi}/lambda)],
//        [m(lambda e^{phi} - e^{-phi}/lambda), -2i dt phi]],  lambda = e^theta
Mat2 connection_Ax(double x, cplx theta, const FieldProfile& profile, const ThermalParams& p);

struct JostRun {
  double theta = 0.0;
  std::vector<double> x;  // descending from x_max to x_min
  std::vector<Vec2> psi;
  cplx a_num{};
  cplx b_num{};
  // |psi_h - psi_{h/2}| / 15 at x_min, relative to |psi(x_min)|
  double error_estimate = 0.0;

  // |a|^2 - |b|^2 - 1; vanishes for real phi and dt phi = 0
  double current_defect() const;
};

struct JostOptions {
  double step = 1e-3;
  double tol = 1e-6;
  // keep every stride-th point in JostRun::x, psi
  int stride = 1;
};

// Integrates (d/dx - A_x) psi = 0 from x_max down to x_min, starting from
// e^{i p x_max/2}(1,1).  a and b are read off at x_min from
//   psi = a e^{i p x/2}(1,1) - b e^{-i p x/2}(1,-1).
JostRun integrate_jost_plus(double theta, const FieldProfile& profile, const ThermalParams& p,
                            const JostOptions& opts = {});

// Max over x of |det(psi_+, psi_2)(x) / det(x_max) - 1| where psi_2 starts as
// e^{-i p x_max/2}(1,-1).
double wronskian_drift(double theta, const FieldProfile& profile, const ThermalParams& p,
                       const JostOptions& opts = {});

struct LambdaAsymptoticsReport {
  double theta = 0.0;
  double deviation = 0.0;          // at theta
  double deviation_halved = 0.0;   // at theta + ln 2
  double ratio = 0.0;              // deviation / deviation_halved, ideally 2
};

// Deviation of psi_+ e^{-i p x/2} from e^{-phi sigma_z/2}(1,1).  The step is
// reduced to keep m lambda e^{max|phi|} step / 4 <= 0.02.
double lambda_deviation(double theta, const FieldProfile& profile, const ThermalParams& p,
                        const JostOptions& opts = {});
LambdaAsymptoticsReport check_lambda_asymptotics(const FieldProfile& profile, double theta_large,
                                                 const ThermalParams& p,
                                                 const JostOptions& opts = {});

struct JostComparison {
  double theta = 0.0;
  cplx a_num{}, a_exact{};
  cplx b_num{}, b_exact{};
  double rel_dev_a = 0.0;
  double rel_dev_b = 0.0;
  double current_defect = 0.0;
  double error_estimate = 0.0;

  double rel_dev() const { return rel_dev_a > rel_dev_b ? rel_dev_a : rel_dev_b; }
};

// Numerical a, b against a = i/(2 pi h_+^2), b = 2 i g_- at t = 0.
JostComparison compare_jost(double theta, const FieldProfile& profile, const ThermalParams& p,
                            const JostOptions& opts = {}, const QuadratureConfig& cfg = {});

}  // namespace thermal_ising
