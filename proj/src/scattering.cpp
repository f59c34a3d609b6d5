#include "thermal_ising/scattering.hpp"

#include <cmath>
#include <numbers>

#include "thermal_ising/errors.hpp"

namespace thermal_ising {
namespace {

constexpr double kPi = std::numbers::pi;
constexpr cplx kI{0.0, 1.0};

cplx boltzmann(cplx theta, const ThermalParams& p) { return std::exp(-p.m * std::cosh(theta) / p.T); }

}  // namespace

cplx ScatteringData::b(double theta, const ThermalParams& p) const {
  return b0(theta) * std::exp(kI * p.m * std::cosh(theta) * t);
}

cplx alpha(cplx theta, const ThermalParams& p) {
  p.validate();
  const cplx z = boltzmann(theta, p);
  if (std::abs(1.0 - z) < 1e-13) throw PoleError("alpha: theta on the lattice theta_n +- i pi/2");
  return (1.0 + z) / (1.0 - z);
}

cplx beta(cplx theta, const ThermalParams& p) { return 2.0 * g_pm(Sign::kPlus, theta, p); }

cplx jost_a(cplx theta, const ThermalParams& p, const QuadratureConfig& cfg) {
  if (theta.imag() < -1e-12 || theta.imag() > kPi + 1e-12) {
    throw DomainError("jost_a: Im theta must lie in [0, pi]");
  }
  const cplx h = h_pm(Sign::kPlus, theta, p, cfg);
  return kI / (2.0 * kPi * h * h);
}

cplx jost_b(cplx theta, double t, const ThermalParams& p) {
  return 2.0 * kI * g_pm(Sign::kMinus, theta, p) * std::exp(kI * p.m * std::cosh(theta) * t);
}

cplx jost_c(cplx theta, const ThermalParams& p) { return 2.0 * kI * g_pm(Sign::kPlus, theta, p); }

cplx jost_d(cplx theta, const ThermalParams& p, const QuadratureConfig& cfg) {
  const cplx al = alpha(theta, p);
  const cplx h = h_pm(Sign::kMinus, theta, p, cfg);
  return -2.0 * kPi * kI * al * al * h * h;
}

cplx reflection_r(Branch branch, cplx theta, double t, const ThermalParams& p,
                  const QuadratureConfig& cfg) {
  const cplx e = p.m * std::cosh(theta);
  if (branch == Branch::kPositive) {
    const cplx h = h_pm(Sign::kPlus, theta, p, cfg);
    return 4.0 * kPi * g_pm(Sign::kPlus, theta, p) * h * h * std::exp(-kI * e * t);
  }
  const cplx h = h_pm(Sign::kMinus, theta, p, cfg);
  return -4.0 * kPi * g_pm(Sign::kMinus, theta, p) * h * h * std::exp(kI * e * t);
}

ScatteringData make_scattering_data(const ThermalParams& p, double t, const QuadratureConfig& cfg) {
  p.validate();
  ScatteringData d;
  d.t = t;
  d.a = [p, cfg](double th) { return jost_a(cplx(th, 0.0), p, cfg); };
  d.b0 = [p](double th) { return jost_b(cplx(th, 0.0), 0.0, p); };
  return d;
}

}  // namespace thermal_ising
