#pragma once

#include <complex>
#include <vector>

#include "thermal_ising/quadrature.hpp"

namespace thermal_ising {

using cplx = std::complex<double>;

inline constexpr double kGlaisher = 1.2824271291006226369;
inline constexpr int kDefaultMuMax = 12;

struct ThermalParams {
  double m = 1.0;
  double T = 1.0;

  double beta() const { return 1.0 / T; }
  double m_beta() const { return m / T; }
  void validate() const;
};

struct SpectralPoint {
  cplx theta;

  cplx lambda() const { return std::exp(theta); }
  cplx energy(double m) const { return m * std::cosh(theta); }
  cplx momentum(double m) const { return m * std::sinh(theta); }
};

enum class Sign { kPlus = 1, kMinus = -1 };
enum class Sector { kR, kNS };

// Modified Bessel function K_n(z) for integer n (K_{-n} = K_n).  Valid on the
// principal sheet |arg z| < pi; accurate on Re z >= 0 including the imaginary
// axis, which is what the kernels and the light-cone series need.
cplx bessel_k(int order, cplx z);
double bessel_k(int order, double x);

// L(theta) = ln[(1 + e^{-E/T}) / (1 - e^{-E/T})]
double thermal_log_kernel(double theta, const ThermalParams& p);
// Analytic continuation, valid for |Im theta| < pi/2.
cplx thermal_log_kernel(cplx theta, const ThermalParams& p);
// dL/dtheta
cplx thermal_log_kernel_derivative(cplx theta, const ThermalParams& p);

// h_+ is evaluated for Im theta in (-pi/2, 3pi/2); h_-(theta) = conj h_+(conj theta).
cplx h_pm(Sign s, cplx theta, const ThermalParams& p, const QuadratureConfig& cfg = {},
          double guard_radius = 1e-3);

// Independent evaluation of h_pm for real theta on the shifted contour
// Im theta' = -+delta (delta = cfg.pv_offset); no principal value needed.
cplx h_pm_shifted_contour(Sign s, double theta, const ThermalParams& p,
                          const QuadratureConfig& cfg = {});

cplx g_pm(Sign s, cplx theta, const ThermalParams& p, Sector sector = Sector::kR);

// theta_n = asinh(2 pi n T / m); n may be half-integer
double quantized_rapidity(double n, const ThermalParams& p);

double delta_vacuum_energy(const ThermalParams& p, const QuadratureConfig& cfg = {});

double s_T(const ThermalParams& p, const QuadratureConfig& cfg = {});

// I_omega = \int d theta e^{(2 omega + 1) theta} L(theta)
double log_kernel_moment(int omega, const ThermalParams& p, const QuadratureConfig& cfg = {});

// c_0 .. c_{mu_max} from exp[-(2i/pi) sum_omega q^{2 omega + 1} I_omega]
std::vector<cplx> c_mu_coefficients(int mu_max, const ThermalParams& p,
                                     const QuadratureConfig& cfg = {});

// exp[-(2i/pi) sum_{omega <= omega_max} q^{2 omega + 1} I_omega] evaluated directly
cplx c_mu_generating_function(double q, int omega_max, const ThermalParams& p,
                              const QuadratureConfig& cfg = {});

}  // namespace thermal_ising
