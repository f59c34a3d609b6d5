#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "thermal_ising/specfn.hpp"

namespace thermal_ising {

// v = t - x, w = t + x.  Space-like points (v < 0) carry v = |v| e^{-i pi}.
struct LightconeCoords {
  double v = 0.0;
  double w = 0.0;

  static LightconeCoords from_xt(double x, double t) { return {t - x, t + x}; }
  double x() const { return (w - v) / 2.0; }
  double t() const { return (w + v) / 2.0; }
  bool time_like() const { return v > 0.0; }
  std::string regime() const { return time_like() ? "time-like" : "space-like"; }

  // throws DomainError for w <= 0 and BranchError for v == 0
  void validate() const;
  // sqrt(v) on the branch above; v may be complex with Im v <= 0
  cplx sqrt_v() const;
  cplx v_complex() const;
};

// Set when w < 5 max(|v|, 1/m, 1/T); empty otherwise.
std::optional<std::string> regime_warning(const LightconeCoords& c, const ThermalParams& p);

// sqrt(v) with arg v in [-pi, pi), negative reals mapped to e^{-i pi}
cplx sqrt_v_branch(cplx v);

// Phi_mu(v, w) = (v/w)^{mu/2} K_mu(i m sqrt(v w)) for complex v in the closed
// lower half plane
cplx lightcone_basis(int mu, cplx v, double w, double m);

// (2/pi) sum_{mu <= mu_max} c_mu Phi_mu
cplx phi_lightcone(const LightconeCoords& c, const ThermalParams& p, int mu_max = 6,
                   const QuadratureConfig& cfg = {});
cplx phi_lightcone(const LightconeCoords& c, const std::vector<cplx>& c_mu, double m);
cplx phi_lightcone(cplx v, double w, const std::vector<cplx>& c_mu, double m);

// Polynomial in (m v), lowest power first.
using MvPolynomial = std::vector<cplx>;
cplx evaluate(const MvPolynomial& poly, cplx mv);

struct SeriesCoefficients {
  std::vector<cplx> c;             // c_0 .. c_3 at least
  std::array<MvPolynomial, 3> g;   // g_1 .. g_3
  std::array<MvPolynomial, 3> f;   // f_1 .. f_3

  static SeriesCoefficients from_c(const std::vector<cplx>& c);
  static SeriesCoefficients zero_temperature();
};

SeriesCoefficients series_coefficients(const ThermalParams& p, const QuadratureConfig& cfg = {});

// g_n from the large-argument expansion of K_mu in (2/pi) sum c_mu Phi_mu:
//   g_n = sum_{mu + k = n} c_mu (mv)^mu a_k(mu) / i^k,
//   a_k(mu) = prod_{j=1..k} (4 mu^2 - (2j-1)^2) / (k! 8^k)
MvPolynomial g_from_bessel_asymptotics(int n, const std::vector<cplx>& c);

// phi and chi~ from the truncated large-w series
cplx phi_series(const LightconeCoords& c, const SeriesCoefficients& s, double m);
cplx chi_series(const LightconeCoords& c, const SeriesCoefficients& s, double m);

// The three printed terms of the bracket multiplying e^{-2 i m sqrt(vw)} in G.
std::array<cplx, 3> g_bracket_terms(const LightconeCoords& c, const SeriesCoefficients& s,
                                    double m);

struct LightconeCorrelators {
  cplx G;
  cplx Gtilde;
  std::optional<std::string> warning;
};

struct ExponentialConstants {
  double A = 0.0, B = 0.0, C = 0.0;
};

// s_T^2 e^{-A-Bx-Ct}[1 + e^{-2im sqrt(vw)} (bracket)] and s_T^2 e^{-A-Bx-Ct} phi/2.
LightconeCorrelators correlators_lightcone(const LightconeCoords& c, const ThermalParams& p,
                                           const ExponentialConstants& abc = {},
                                           int mu_max = 6, const QuadratureConfig& cfg = {});
// Same with explicit coefficients and prefactor s_T^2 (T = 0 uses c = (1, 0, ...)).
LightconeCorrelators correlators_lightcone(const LightconeCoords& c, const SeriesCoefficients& s,
                                           double m, double st2,
                                           const ExponentialConstants& abc = {});

// |dd-bar Phi_mu - (m^2/4) Phi_mu| / |Phi_mu| with dd-bar = (d_x^2 - d_t^2)/4 from
// five-point stencils of step h.
double klein_gordon_residual(int mu, const LightconeCoords& c, double m, double h = 1e-2);

// |dd-bar chi~ + (m^2/4) phi^2| / |(m^2/4) phi^2| with both sides from the series.
double chi_consistency_residual(const LightconeCoords& c, const SeriesCoefficients& s, double m,
                                double h = 1e-2);

// The mu series is asymptotic; it is cut where the nu = 0 Bessel series for
// F_{-1}(2x, t) reaches its smallest term (at most mu_max).
struct LightconeMatch {
  int mu_terms = 0;
  cplx phi;              // (2/pi) sum c_mu Phi_mu over the kept terms
  cplx minus_2i_f_m1;    // -2i F_{-1}(2x, t), nu = 0 Bessel series, same terms
  double difference = 0.0;
  double budget = 0.0;   // |-2i| times the truncation estimate of the Bessel series
  cplx minus_2i_direct;  // -2i F_{-1}(2x, t) by direct quadrature
  double direct_difference = 0.0;
};
LightconeMatch lightcone_match(const LightconeCoords& c, const ThermalParams& p,
                               int mu_max = kDefaultMuMax, const QuadratureConfig& cfg = {});

// The 8x8 system for (alpha, beta, gamma, delta, alpha', beta', gamma', delta')
// with sigma_z replaced by s = +1 or -1.
struct AppendixCSolution {
  std::array<std::array<cplx, 8>, 2> coefficients;  // index 0: s = +1, 1: s = -1
  double residual = 0.0;                             // max |M x - rhs|
  double deviation = 0.0;  // max distance from gamma = gamma' = -m s/2, rest 0
};
std::array<std::array<cplx, 8>, 8> appendix_c_matrix(cplx K, cplx Kt, double s);
std::array<cplx, 8> appendix_c_rhs(double m, double s);
// throws SingularMatrix if the system cannot be solved
AppendixCSolution verify_appendixC_system(cplx K, cplx Kt, double m = 1.0);

// F_0^P(X, t) from the nu = 0 Bessel series, continued to complex X in the
// upper half plane (principal square roots of a and b stay on one sheet there).
cplx f0_principal_complex(cplx X, double t, const std::vector<cplx>& c_mu, double m);

struct XiCheck {
  double t = 0.0;
  // half-residue terms plus the delta-function terms of the first GLM equation
  double delta_cancellation = 0.0;
  // remaining integral over the contour from x into the upper half plane
  std::array<cplx, 2> residual{};
  double residual_norm = 0.0;
  // |F_0^P(x + y, t)|, scale of the retained terms
  double leading_scale = 0.0;
};

// Inserts xi = (m/2) F_0^P(x+y, t)(-1, 1) into the first time-like GLM equation
// (without the F_{-1} W_1 integral).  The principal value integral is the
// contour integral over C_x plus i pi times the residues at z = 2t - y and
// z = 2t - x.
XiCheck xi_solution_check(const ThermalParams& p, double x, double y, double t, int mu_max = 3,
                          const QuadratureConfig& cfg = {});

struct XiScaling {
  XiCheck at_t, at_2t;
  double residual_ratio = 0.0;  // |R(t)| / |R(2t)|
  double leading_ratio = 0.0;   // |F_0^P(x+y, t)| / |F_0^P(x+y, 2t)|
  // residual_ratio > leading_ratio
  bool magnitude_passed = false;
  // -d arg R / dt at t against the frequency of
  //   e^{-im sqrt(t^2 - x^2) - im sqrt(t^2 - (x+y)^2/4)}
  // and against the retained frequency of e^{-im sqrt(t^2 - (x+y)^2/4)}.
  double omega_measured = 0.0;
  double omega_neglected_class = 0.0;
  double omega_retained = 0.0;
  bool frequency_passed = false;  // within 2% of omega_neglected_class
};
XiScaling xi_scaling_check(const ThermalParams& p, double x, double y, double t, int mu_max = 3,
                           const QuadratureConfig& cfg = {});

// Delta-function weight of U_1 at x + y = 2t: (m/2)(-1, 1) times the weight
// r_inf / m of F_0, with r_inf = r(theta_head, 0) the large-rapidity head of r.
std::array<cplx, 2> u1_delta_weight(const ThermalParams& p, double theta_head = 30.0,
                                    const QuadratureConfig& cfg = {});

}  // namespace thermal_ising
