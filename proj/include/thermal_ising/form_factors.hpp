#pragma once

#include <vector>

#include "thermal_ising/specfn.hpp"

namespace thermal_ising {

enum class Field { kSigma, kMu };

// R-sector circle modes |n| <= n_max with
//   W_n   = exp[-(1/pi) \int d theta' L(theta') / cosh(theta_n - theta')]
//   g_n^2 = W_n T / (m cosh theta_n)
struct CircleModeSet {
  std::vector<int> n_values;
  std::vector<double> theta_n;
  std::vector<double> weight_w;
  std::vector<double> g2;

  static CircleModeSet build(const ThermalParams& p, int n_max, const QuadratureConfig& cfg = {});
  std::size_t size() const { return n_values.size(); }
};

struct TruncationPolicy {
  int n_max = 20;
  int n_sigma = 4;  // even particle numbers kept in G
  int n_mu = 3;     // odd particle numbers kept in G~
  double tail_tol = 1e-10;
  // when false the tail bound is not enforced (profiles reaching x = 0)
  bool enforce_tail = true;

  void validate() const;
};

// exp[-(1/2pi) \int d theta' L(theta') / cosh(theta - theta')]
double circle_weight(double theta, const ThermalParams& p, const QuadratureConfig& cfg = {});
// g(theta) = circle_weight(theta) / sqrt(m beta cosh theta)
double g_circle(double theta, const ThermalParams& p, const QuadratureConfig& cfg = {});

// prod_{p<q} tanh((theta_p - theta_q)/2)
double ff_tanh_product(const std::vector<double>& thetas);

// k_ff for k = 0..n_particles: sums over ordered tuples n_1 > ... > n_k of
// prod g^2 e^{-m |x| cosh theta} e^{-i tau 2 pi T n} F_k^2.  k_ff is the k-th
// elementary symmetric function of the eigenvalues of
//   A_ij = sqrt(w_i w_j) 2 sqrt(lambda_i lambda_j) / (lambda_i + lambda_j).
std::vector<cplx> particle_sums(const CircleModeSet& modes, double x, double tau,
                                const ThermalParams& p, int n_particles);

// s_T^2 e^{-dE x} times the truncated sum
double correlator_equal_time(double x, const ThermalParams& p, const TruncationPolicy& policy,
                             Field field, const QuadratureConfig& cfg = {});

// phi = 2 artanh(G~/G) from the truncated series (prefactors cancel)
double phi_equal_time(double x, const ThermalParams& p, const TruncationPolicy& policy,
                      const QuadratureConfig& cfg = {});

// Same from precomputed modes; tau enters through e^{-i tau 2 pi T n}.
cplx phi_circle(const CircleModeSet& modes, double x, double tau, const ThermalParams& p,
                const TruncationPolicy& policy);

// symmetric difference in tau
cplx dphi_dtau(double x, const ThermalParams& p, const TruncationPolicy& policy,
                 double step = 1e-3, const QuadratureConfig& cfg = {});

}  // namespace thermal_ising
