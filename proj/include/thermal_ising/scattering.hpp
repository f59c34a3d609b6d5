#pragma once

#include <functional>

#include "thermal_ising/specfn.hpp"

namespace thermal_ising {

// Which half of the real lambda axis a rapidity parametrises:
// lambda = e^theta (kPositive) or lambda = -e^theta = e^{theta + i pi} (kNegative).
enum class Branch { kPositive, kNegative };

struct ScatteringData {
  std::function<cplx(double)> a;
  std::function<cplx(double)> b0;
  double t = 0.0;

  cplx b(double theta, const ThermalParams& p) const;
};

// (1 + e^{-E/T}) / (1 - e^{-E/T})
cplx alpha(cplx theta, const ThermalParams& p);
// 2 g_+(theta) = 1 + alpha
cplx beta(cplx theta, const ThermalParams& p);

// a(theta) = i / (2 pi h_+^2), Im theta in [0, pi]
cplx jost_a(cplx theta, const ThermalParams& p, const QuadratureConfig& cfg = {});
// b(theta, t) = 2 i g_-(theta) e^{i E t}
cplx jost_b(cplx theta, double t, const ThermalParams& p);
// c(theta) = 2 i g_+(theta)
cplx jost_c(cplx theta, const ThermalParams& p);
// d(theta) = -2 pi i alpha^2 h_-^2
cplx jost_d(cplx theta, const ThermalParams& p, const QuadratureConfig& cfg = {});

// r(lambda, t) = b(-lambda, t) / a(lambda) in closed form on either branch:
//   kPositive:  4 pi g_+ h_+^2 e^{-i E t}
//   kNegative: -4 pi g_- h_-^2 e^{+i E t}
// theta may be complex (bent integration contours use |Im theta| <= pi/4).
cplx reflection_r(Branch branch, cplx theta, double t, const ThermalParams& p,
                  const QuadratureConfig& cfg = {});

ScatteringData make_scattering_data(const ThermalParams& p, double t = 0.0,
                                    const QuadratureConfig& cfg = {});

}  // namespace thermal_ising
