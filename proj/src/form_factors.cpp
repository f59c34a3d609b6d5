#include "thermal_ising/form_factors.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <numbers>

#include "thermal_ising/errors.hpp"

namespace thermal_ising {
namespace {

constexpr double kPi = std::numbers::pi;

// Exponent -(1/2pi) \int L(theta') / cosh(theta - theta') d theta'
double circle_exponent(double theta, const ThermalParams& p, const QuadratureConfig& cfg) {
  auto f = [&](double tp) -> double {
    const double d = std::abs(theta - tp);
    if (std::abs(tp) > 40.0 || d > 700.0) return 0.0;
    return thermal_log_kernel(tp, p) / std::cosh(d);
  };
  return -integrate_real_line(f, cfg).value / (2.0 * kPi);
}

void check_tail(const CircleModeSet& modes, double x, const ThermalParams& p,
                const TruncationPolicy& policy) {
  if (!policy.enforce_tail) return;
  const double th = modes.theta_n.back();
  const double tail = std::exp(-p.m * std::abs(x) * std::cosh(th));
  if (tail > policy.tail_tol) {
    throw TailTooLarge("circle expansion: e^{-m x cosh theta_nmax} = " + std::to_string(tail) +
                       " exceeds tail_tol at x = " + std::to_string(x));
  }
}

}  // namespace

CircleModeSet CircleModeSet::build(const ThermalParams& p, int n_max, const QuadratureConfig& cfg) {
  p.validate();
  if (n_max < 0) throw DomainError("CircleModeSet: n_max must be non-negative");
  CircleModeSet s;
  for (int n = -n_max; n <= n_max; ++n) {
    const double th = quantized_rapidity(n, p);
    s.n_values.push_back(n);
    s.theta_n.push_back(th);
  }
  // W is even in n; evaluate the non-negative half once
  std::vector<double> half(n_max + 1);
  for (int n = 0; n <= n_max; ++n) half[n] = std::exp(2.0 * circle_exponent(s.theta_n[n + n_max], p, cfg));
  for (std::size_t i = 0; i < s.n_values.size(); ++i) {
    const double w = half[std::abs(s.n_values[i])];
    s.weight_w.push_back(w);
    s.g2.push_back(w * p.T / (p.m * std::cosh(s.theta_n[i])));
  }
  return s;
}

void TruncationPolicy::validate() const {
  if (n_max < 0 || n_sigma < 0 || n_mu < 1 || n_sigma % 2 != 0 || n_mu % 2 != 1) {
    throw DomainError("TruncationPolicy: need n_max >= 0, even n_sigma >= 0, odd n_mu >= 1");
  }
  if (!(tail_tol > 0.0)) throw DomainError("TruncationPolicy: tail_tol must be positive");
}

double circle_weight(double theta, const ThermalParams& p, const QuadratureConfig& cfg) {
  p.validate();
  return std::exp(circle_exponent(theta, p, cfg));
}

double g_circle(double theta, const ThermalParams& p, const QuadratureConfig& cfg) {
  return circle_weight(theta, p, cfg) / std::sqrt(p.m_beta() * std::cosh(theta));
}

double ff_tanh_product(const std::vector<double>& thetas) {
  double prod = 1.0;
  for (std::size_t a = 0; a < thetas.size(); ++a) {
    for (std::size_t b = a + 1; b < thetas.size(); ++b) prod *= std::tanh(0.5 * (thetas[a] - thetas[b]));
  }
  return prod;
}

std::vector<cplx> particle_sums(const CircleModeSet& modes, double x, double tau,
                                const ThermalParams& p, int n_particles) {
  if (n_particles < 0) throw DomainError("particle_sums: n_particles must be non-negative");
  const Eigen::Index n = static_cast<Eigen::Index>(modes.size());
  Eigen::VectorXcd root(n);
  for (Eigen::Index i = 0; i < n; ++i) {
    const double th = modes.theta_n[i];
    const double mag = std::sqrt(modes.g2[i]) * std::exp(-0.5 * p.m * std::abs(x) * std::cosh(th));
    const double phase = -tau * kPi * p.T * modes.n_values[i];
    root(i) = std::polar(mag, phase);
  }
  Eigen::MatrixXcd a(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < n; ++j) {
      const double li = modes.theta_n[i], lj = modes.theta_n[j];
      a(i, j) = root(i) * root(j) / std::cosh(0.5 * (li - lj));
    }
  }
  // e_k are the coefficients of det(1 + z A) = prod_i (1 + z lambda_i).  At
  // tau = 0, A is real symmetric positive semidefinite and every product term
  // has the same sign, so the small blocks keep full relative accuracy.
  Eigen::VectorXcd lambda;
  if (tau == 0.0) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(a.real(), Eigen::EigenvaluesOnly);
    lambda = es.eigenvalues().cast<cplx>();
  } else {
    Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es(a, false);
    lambda = es.eigenvalues();
  }
  std::vector<cplx> e(n_particles + 1, 0.0);
  e[0] = 1.0;
  for (Eigen::Index i = 0; i < lambda.size(); ++i) {
    for (int k = n_particles; k >= 1; --k) e[k] += lambda(i) * e[k - 1];
  }
  return e;
}

double correlator_equal_time(double x, const ThermalParams& p, const TruncationPolicy& policy,
                             Field field, const QuadratureConfig& cfg) {
  policy.validate();
  const CircleModeSet modes = CircleModeSet::build(p, policy.n_max, cfg);
  check_tail(modes, x, p, policy);
  const int cap = field == Field::kSigma ? policy.n_sigma : policy.n_mu;
  const auto e = particle_sums(modes, x, 0.0, p, cap);
  double sum = 0.0;
  for (int k = field == Field::kSigma ? 0 : 1; k <= cap; k += 2) sum += e[k].real();
  const double st = s_T(p, cfg);
  return st * st * std::exp(-delta_vacuum_energy(p, cfg) * x) * sum;
}

cplx phi_circle(const CircleModeSet& modes, double x, double tau, const ThermalParams& p,
                const TruncationPolicy& policy) {
  policy.validate();
  check_tail(modes, x, p, policy);
  const int cap = std::max(policy.n_sigma, policy.n_mu);
  const auto e = particle_sums(modes, x, tau, p, cap);
  cplx even = 0.0, odd = 0.0;
  for (int k = 0; k <= policy.n_sigma; k += 2) even += e[k];
  for (int k = 1; k <= policy.n_mu; k += 2) odd += e[k];
  const cplx r = odd / even;
  if (std::abs(r) >= 1.0) {
    throw DomainError("phi: |G~/G| >= 1 at x = " + std::to_string(x) + " for this truncation");
  }
  return 2.0 * std::atanh(r);
}

double phi_equal_time(double x, const ThermalParams& p, const TruncationPolicy& policy,
                      const QuadratureConfig& cfg) {
  const CircleModeSet modes = CircleModeSet::build(p, policy.n_max, cfg);
  return phi_circle(modes, x, 0.0, p, policy).real();
}

cplx dphi_dtau(double x, const ThermalParams& p, const TruncationPolicy& policy, double step,
               const QuadratureConfig& cfg) {
  if (!(step > 0.0)) throw DomainError("dphi_dtau: step must be positive");
  const CircleModeSet modes = CircleModeSet::build(p, policy.n_max, cfg);
  return (phi_circle(modes, x, step, p, policy) - phi_circle(modes, x, -step, p, policy)) /
         (2.0 * step);
}

}  // namespace thermal_ising
