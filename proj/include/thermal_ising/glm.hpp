#pragma once

#include <array>
#include <functional>
#include <string>
#include <vector>

#include "thermal_ising/form_factors.hpp"
#include "thermal_ising/specfn.hpp"

namespace thermal_ising {

enum class KernelRep { kResidueSum, kBesselSeries, kDirect };
std::string to_string(KernelRep rep);

// F_j(x, t), j in {0, -1, -2}, as the sum over the poles theta_n + i pi/2:
//   F_j = sum_n i (i e^{theta_n})^{j+1} g_n^2 e^{-m x cosh theta_n / 2 + m t sinh theta_n}
// Valid for x > 2|t|.  dx_order > 0 returns the x-derivative of that order.
class ResidueKernel {
 public:
  ResidueKernel(const ThermalParams& p, int n_max = 20, const QuadratureConfig& cfg = {});
  ResidueKernel(CircleModeSet modes, const ThermalParams& p);

  cplx operator()(int j, double x, double t, int dx_order = 0) const;
  // bound on the magnitude of the omitted |n| > n_max terms
  double tail_bound(double x, double t) const;
  const CircleModeSet& modes() const { return modes_; }
  const ThermalParams& params() const { return p_; }

 private:
  CircleModeSet modes_;
  ThermalParams p_;
};

cplx kernel_residue_sum(int j, double x, double t, const ThermalParams& p, int n_max = 20,
                        const QuadratureConfig& cfg = {});

// (1/4 pi) \int d lambda lambda^j e^{i p x/2 - i E t} r(lambda, 0) over both half
// lines, on rapidity contours bent by up to `bend` into the complex plane so the
// integrand decays double exponentially; |Re theta| <= window.  Requires
// x/2 + t > 0 and x != 2t.  For j = 0 this is the principal part F_0^P.
struct DirectKernelOptions {
  double window = 40.0;
  double bend = 0.7;  // <= pi/4
  QuadratureConfig quad{1e-13, 1e-12, 10, 0.3};
};
cplx kernel_direct(int j, double x, double t, const ThermalParams& p,
                   const DirectKernelOptions& opts = {});

// Large-rapidity expansion of r in e^{-theta} and e^{-E/T}:
//   r(theta, 0)/2i        = sum c_{mu nu} e^{-mu theta} e^{-nu E/T},  c_{mu 0} = c_mu
//   r(theta + i pi, 0)/2i = sum_{nu >= 1} ct_{mu nu} e^{-mu theta} e^{-nu E/T}
// integrated term by term into modified Bessel functions.  The mu series is
// asymptotic and is cut at its smallest term.
//
// For nu >= 1 the blocks use c_{mu nu} = (-1)^nu c_mu and ct_{mu nu} =
// (-1)^nu conj(c_mu), the expansion of 1/(1 + e^{-E/T}) times the
// e^{-theta} series.  This is exact for ct at nu = 1 but misses the
// e^{-E/T} theta^k pieces of the principal-value integral on the positive
// branch, so nu >= 1 blocks serve as a size estimate rather than a correction.
struct BesselSeriesResult {
  cplx value;
  double tail_estimate = 0.0;  // first omitted mu term + first omitted nu block
  int mu_terms = 0;
  int nu_terms = 0;
};

class BesselSeriesKernel {
 public:
  BesselSeriesKernel(const ThermalParams& p, int mu_max = kDefaultMuMax,
                     const QuadratureConfig& cfg = {});

  static constexpr int kNuMax = 8;

  // nu_max = 0 keeps only the nu = 0 series
  BesselSeriesResult evaluate(int j, double x, double t, int nu_max = 0) const;
  // (i/pi) ((a/b))^{(mu-1-j)/2} K_{1+j-mu}(2 sqrt(a) sqrt(b)) with unit coefficient
  cplx basis_term(int j, double x, double t, int mu, int nu, bool tilde) const;
  // basis term times its coefficient
  cplx term(int j, double x, double t, int mu, int nu, bool tilde) const;
  cplx coefficient(int mu, int nu, bool tilde) const;
  const std::vector<cplx>& c() const { return c_; }
  int mu_max() const { return mu_max_; }

 private:
  ThermalParams p_;
  int mu_max_;
  std::vector<cplx> c_;
};

BesselSeriesResult kernel_bessel_series(int j, double x, double t, const ThermalParams& p,
                                        int mu_max = kDefaultMuMax, bool include_nu = false,
                                        const QuadratureConfig& cfg = {},
                                        double max_rel_tail = 0.1);

struct KernelGrid {
  int j = -1;
  double t = 0.0;
  KernelRep representation = KernelRep::kResidueSum;
  std::vector<double> x_values;
  std::vector<cplx> values;
  std::vector<bool> valid;
};

// kernel table with invalid points flagged rather than thrown
KernelGrid kernel_table(int j, double t, const std::vector<double>& xs, KernelRep rep,
                        const ThermalParams& p);

// F(j, X, dx_order) at fixed t
using KernelFn = std::function<cplx(int, double, int)>;

enum class NystromRule { kGaussLegendre, kTrapezoid };

struct VolterraOptions {
  NystromRule rule = NystromRule::kGaussLegendre;
  double panel = 1.0;     // Gauss-Legendre panel width (1/m)
  int panel_nodes = 8;    // nodes per panel
  double h = 0.01;        // trapezoid step (1/m)
  double L = 0.0;         // truncation length; 0 chooses it from tail_tol
  double tail_tol = 1e-10;
  int n_max = 20;
  double max_condition = 1e12;

  void validate() const;
};

// Index 0 is the sigma_z = +1 (upper, "+") component and 1 the lower ("-").
struct VolterraSolution {
  double x = 0.0;
  double t = 0.0;
  double L = 0.0;
  std::vector<double> y;
  std::vector<double> weights;
  std::array<std::vector<cplx>, 2> U, W, dU_dx, dW_dx;
  std::array<cplx, 2> U_at_x{}, W_at_x{}, dU_dx_at_x{}, dU_dy_at_x{};
  double residual = 0.0;   // relative residual of the discrete system
  double condition = 0.0;  // reciprocal-condition based estimate
};

VolterraSolution volterra_solve(double x, double t, const ThermalParams& p,
                                const VolterraOptions& opts = {});
VolterraSolution volterra_solve(double x, double t, const KernelFn& kernel,
                                const ThermalParams& p, const VolterraOptions& opts);

struct PhiReconstruction {
  cplx e2phi;
  cplx phi;
  cplx dt_minus_dx_phi;  // 2 (U^+ - U^-) at y = x
};

// phi from the U, W data at y = x; the log branch is the one nearest `reference`
PhiReconstruction reconstruct_phi(const VolterraSolution& sol, const ThermalParams& p,
                                  cplx reference = 0.0);

// phi along xs (any order); anchored at the largest x and continued inward
std::vector<PhiReconstruction> glm_phi_profile(const std::vector<double>& xs, double t,
                                               const ThermalParams& p,
                                               const VolterraOptions& opts = {});

// Contributions to e^{2 phi} - 1 by total power of the kernels, from the
// Neumann iterates of the GLM equations at t = 0.
struct NeumannOrders {
  std::vector<cplx> k_glm;  // k_glm[k] for k = 1..order (index 0 unused)
  cplx quadratic_combination;  // 2_GLM/2 - 1_GLM^2/4
  cplx cubic_combination;      // 3_GLM/2 - 1_GLM 2_GLM/2 + 1_GLM^3/6
};

NeumannOrders neumann_orders(double x, const ThermalParams& p, int order = 3,
                             const VolterraOptions& opts = {});

// Neumann series summed through `iterations` iterates, returned in the same
// form as a direct solve (values at y = x and node values).
VolterraSolution neumann_solve(double x, double t, const ThermalParams& p, int iterations,
                               const VolterraOptions& opts = {});

}  // namespace thermal_ising
