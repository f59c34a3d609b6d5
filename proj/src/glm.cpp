#include "thermal_ising/glm.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <limits>
#include <memory>
#include <numbers>

#include "thermal_ising/errors.hpp"
#include "thermal_ising/parallel.hpp"
#include "thermal_ising/scattering.hpp"

namespace thermal_ising {
namespace {

constexpr double kPi = std::numbers::pi;
constexpr cplx kI{0.0, 1.0};
constexpr int kJ[3] = {0, -1, -2};

int j_index(int j) {
  if (j > 0 || j < -2) throw DomainError("kernel index j must be 0, -1 or -2");
  return -j;
}

// prefactor i (i lambda)^{j+1}
cplx residue_prefactor(int j, double theta) {
  const cplx il = kI * std::exp(theta);
  return kI * std::pow(il, j + 1);
}

// Gauss-Legendre nodes and weights on [-1, 1]
void gauss_legendre(int n, std::vector<double>& x, std::vector<double>& w) {
  x.assign(n, 0.0);
  w.assign(n, 0.0);
  for (int i = 0; i < (n + 1) / 2; ++i) {
    double z = std::cos(kPi * (i + 0.75) / (n + 0.5));
    double dp = 0.0;
    for (int it = 0; it < 100; ++it) {
      double p0 = 1.0, p1 = 0.0;
      for (int k = 1; k <= n; ++k) {
        const double p2 = p1;
        p1 = p0;
        p0 = ((2.0 * k - 1.0) * z * p1 - (k - 1.0) * p2) / k;
      }
      dp = n * (z * p0 - p1) / (z * z - 1.0);
      const double dz = p0 / dp;
      z -= dz;
      if (std::abs(dz) < 1e-16) break;
    }
    x[i] = -z;
    x[n - 1 - i] = z;
    w[i] = w[n - 1 - i] = 2.0 / ((1.0 - z * z) * dp * dp);
  }
}

// Kernel values needed by the Nystrom scheme for fixed (x, t).
struct KernelData {
  std::array<Eigen::MatrixXcd, 3> yz;  // F_j(y_k + y_l)
  std::array<Eigen::VectorXcd, 3> xy;  // F_j(x + y_k)
  std::array<Eigen::VectorXcd, 3> xy_d;  // F_j'(x + y_k)
  std::array<cplx, 3> xx{}, xx_d{};      // F_j(2x), F_j'(2x)
};

KernelData kernel_data_generic(const KernelFn& f, double x, const std::vector<double>& y) {
  const Eigen::Index n = static_cast<Eigen::Index>(y.size());
  KernelData d;
  for (int q = 0; q < 3; ++q) {
    const int j = kJ[q];
    d.yz[q].resize(n, n);
    d.xy[q].resize(n);
    d.xy_d[q].resize(n);
    for (Eigen::Index k = 0; k < n; ++k) {
      for (Eigen::Index l = k; l < n; ++l) d.yz[q](k, l) = d.yz[q](l, k) = f(j, y[k] + y[l], 0);
      d.xy[q](k) = f(j, x + y[k], 0);
      d.xy_d[q](k) = f(j, x + y[k], 1);
    }
    d.xx[q] = f(j, 2.0 * x, 0);
    d.xx_d[q] = f(j, 2.0 * x, 1);
  }
  return d;
}

// F_j(X) = sum_n beta_{jn} e^{-kappa_n X} is separable in X = y + z.
KernelData kernel_data_residue(const ResidueKernel& kern, double x, double t,
                               const std::vector<double>& y) {
  const auto& md = kern.modes();
  const ThermalParams& p = kern.params();
  const Eigen::Index n = static_cast<Eigen::Index>(y.size());
  const Eigen::Index r = static_cast<Eigen::Index>(md.size());
  Eigen::MatrixXd e(n, r);
  Eigen::VectorXd kappa(r);
  for (Eigen::Index q = 0; q < r; ++q) kappa(q) = 0.5 * p.m * std::cosh(md.theta_n[q]);
  for (Eigen::Index k = 0; k < n; ++k) {
    for (Eigen::Index q = 0; q < r; ++q) e(k, q) = std::exp(-kappa(q) * y[k]);
  }
  KernelData d;
  for (int qj = 0; qj < 3; ++qj) {
    const int j = kJ[qj];
    Eigen::VectorXcd beta(r);
    for (Eigen::Index q = 0; q < r; ++q) {
      const double th = md.theta_n[q];
      beta(q) = residue_prefactor(j, th) * md.g2[q] * std::exp(p.m * t * std::sinh(th));
    }
    const Eigen::MatrixXcd eb = e.cast<cplx>() * beta.asDiagonal();
    d.yz[qj] = eb * e.transpose().cast<cplx>();
    Eigen::VectorXcd ex(r), exd(r);
    for (Eigen::Index q = 0; q < r; ++q) {
      ex(q) = beta(q) * std::exp(-kappa(q) * x);
      exd(q) = -kappa(q) * ex(q);
    }
    d.xy[qj] = e.cast<cplx>() * ex;
    d.xy_d[qj] = e.cast<cplx>() * exd;
    cplx s0 = 0.0, s1 = 0.0;
    for (Eigen::Index q = 0; q < r; ++q) {
      const cplx v = ex(q) * std::exp(-kappa(q) * x);
      s0 += v;
      s1 += -kappa(q) * v;
    }
    d.xx[qj] = s0;
    d.xx_d[qj] = s1;
  }
  return d;
}

void build_nodes(double x, double L, const VolterraOptions& opts, std::vector<double>& y,
                 std::vector<double>& w) {
  y.clear();
  w.clear();
  if (opts.rule == NystromRule::kTrapezoid) {
    const int n = std::max(1, static_cast<int>(std::ceil(L / opts.h)));
    const double h = L / n;
    for (int k = 0; k <= n; ++k) {
      y.push_back(x + k * h);
      w.push_back((k == 0 || k == n) ? 0.5 * h : h);
    }
    return;
  }
  std::vector<double> gx, gw;
  gauss_legendre(opts.panel_nodes, gx, gw);
  const int panels = std::max(1, static_cast<int>(std::ceil(L / opts.panel)));
  const double pw = L / panels;
  for (int k = 0; k < panels; ++k) {
    const double a = x + k * pw;
    for (int q = 0; q < opts.panel_nodes; ++q) {
      y.push_back(a + 0.5 * (gx[q] + 1.0) * pw);
      w.push_back(0.5 * gw[q] * pw);
    }
  }
}

double choose_length(const KernelFn& f, double x, const VolterraOptions& opts) {
  auto tail = [&](double L) {
    double m = 0.0;
    for (int j : kJ) m = std::max(m, std::abs(f(j, 2.0 * x + L, 0)));
    return m;
  };
  if (opts.L > 0.0) {
    if (tail(opts.L) > opts.tail_tol) {
      throw TruncationError("volterra_solve: kernel at y = x + L exceeds tail_tol");
    }
    return opts.L;
  }
  for (double L = 1.0; L <= 400.0; L += 1.0) {
    if (tail(L) <= opts.tail_tol) return L;
  }
  throw TruncationError("volterra_solve: kernel does not decay below tail_tol within L = 400");
}

// Per-component Neumann iterates and their values at y = x.
struct Iterates {
  std::vector<Eigen::VectorXcd> U, W, dU, dW;
  std::vector<cplx> Ux, Wx, Uy, dUx;
};

Iterates iterate_component(const KernelData& d, const Eigen::VectorXd& wq, double c, int order) {
  Iterates it;
  it.U.resize(order + 1);
  it.W.resize(order + 1);
  it.dU.resize(order + 1);
  it.dW.resize(order + 1);
  it.Ux.assign(order + 1, 0.0);
  it.Wx.assign(order + 1, 0.0);
  it.Uy.assign(order + 1, 0.0);
  it.dUx.assign(order + 1, 0.0);
  std::array<Eigen::MatrixXcd, 3> K;
  std::array<Eigen::RowVectorXcd, 3> row, row_d;
  for (int q = 0; q < 3; ++q) {
    K[q] = d.yz[q] * wq.asDiagonal();
    row[q] = d.xy[q].cwiseProduct(wq.cast<cplx>()).transpose();
    row_d[q] = d.xy_d[q].cwiseProduct(wq.cast<cplx>()).transpose();
  }
  it.U[1] = -c * d.xy[0];
  it.W[1] = c * d.xy[1];
  it.dU[1] = -c * d.xy_d[0];
  it.dW[1] = c * d.xy_d[1];
  it.Ux[1] = -c * d.xx[0];
  it.Wx[1] = c * d.xx[1];
  it.Uy[1] = -c * d.xx_d[0];
  it.dUx[1] = -c * d.xx_d[0];
  for (int k = 2; k <= order; ++k) {
    const auto& U = it.U[k - 1];
    const auto& W = it.W[k - 1];
    it.U[k] = -c * (K[0] * U + K[1] * W);
    it.W[k] = c * (K[1] * U + K[2] * W);
    it.Ux[k] = -c * (row[0] * U + row[1] * W)(0);
    it.Wx[k] = c * (row[1] * U + row[2] * W)(0);
    it.Uy[k] = -c * (row_d[0] * U + row_d[1] * W)(0);
    const Eigen::VectorXcd bu = d.xy[0] * it.Ux[k - 1] + d.xy[1] * it.Wx[k - 1];
    const Eigen::VectorXcd bw = d.xy[1] * it.Ux[k - 1] + d.xy[2] * it.Wx[k - 1];
    it.dU[k] = -c * (-bu + K[0] * it.dU[k - 1] + K[1] * it.dW[k - 1]);
    it.dW[k] = c * (-bw + K[1] * it.dU[k - 1] + K[2] * it.dW[k - 1]);
    const cplx bx = d.xx[0] * it.Ux[k - 1] + d.xx[1] * it.Wx[k - 1];
    it.dUx[k] = -c * (-bx + (row[0] * it.dU[k - 1] + row[1] * it.dW[k - 1])(0));
  }
  return it;
}

std::vector<cplx> to_std(const Eigen::VectorXcd& v) { return {v.data(), v.data() + v.size()}; }

KernelFn residue_fn(const ResidueKernel& kern, double t) {
  return [&kern, t](int j, double X, int dord) { return kern(j, X, t, dord); };
}

VolterraSolution solve_with(double x, double t, const KernelData& d, const std::vector<double>& y,
                            const std::vector<double>& w, double L, const ThermalParams& p,
                            const VolterraOptions& opts) {
  const Eigen::Index n = static_cast<Eigen::Index>(y.size());
  Eigen::VectorXd wq = Eigen::Map<const Eigen::VectorXd>(w.data(), n);
  VolterraSolution sol;
  sol.x = x;
  sol.t = t;
  sol.L = L;
  sol.y = y;
  sol.weights = w;
  std::array<Eigen::MatrixXcd, 3> K;
  std::array<Eigen::RowVectorXcd, 3> row, row_d;
  for (int q = 0; q < 3; ++q) {
    K[q] = d.yz[q] * wq.asDiagonal();
    row[q] = d.xy[q].cwiseProduct(wq.cast<cplx>()).transpose();
    row_d[q] = d.xy_d[q].cwiseProduct(wq.cast<cplx>()).transpose();
  }
  double worst_cond = 0.0, worst_res = 0.0;
  for (int comp = 0; comp < 2; ++comp) {
    const double s = comp == 0 ? 1.0 : -1.0;
    const double c = p.m / (2.0 * s);
    Eigen::MatrixXcd M = Eigen::MatrixXcd::Identity(2 * n, 2 * n);
    M.topLeftCorner(n, n) += c * K[0];
    M.topRightCorner(n, n) += c * K[1];
    M.bottomLeftCorner(n, n) -= c * K[1];
    M.bottomRightCorner(n, n) -= c * K[2];
    Eigen::PartialPivLU<Eigen::MatrixXcd> lu(M);
    const double rcond = lu.rcond();
    const double cond = rcond > 0.0 ? 1.0 / rcond : std::numeric_limits<double>::infinity();
    if (!(cond <= opts.max_condition)) {
      throw SingularMatrix("volterra_solve: condition estimate " + std::to_string(cond));
    }
    worst_cond = std::max(worst_cond, cond);
    Eigen::VectorXcd rhs(2 * n);
    rhs << -c * d.xy[0], c * d.xy[1];
    const Eigen::VectorXcd v = lu.solve(rhs);
    const double rn = rhs.norm();
    if (rn > 0.0) worst_res = std::max(worst_res, (M * v - rhs).norm() / rn);
    const Eigen::VectorXcd U = v.head(n), W = v.tail(n);
    const cplx ux = -c * (d.xx[0] + (row[0] * U + row[1] * W)(0));
    const cplx wx = c * (d.xx[1] + (row[1] * U + row[2] * W)(0));
    const cplx uy = -c * (d.xx_d[0] + (row_d[0] * U + row_d[1] * W)(0));
    Eigen::VectorXcd rhs_x(2 * n);
    rhs_x << -c * (d.xy_d[0] - (d.xy[0] * ux + d.xy[1] * wx)),
        c * (d.xy_d[1] - (d.xy[1] * ux + d.xy[2] * wx));
    const Eigen::VectorXcd vx = lu.solve(rhs_x);
    const Eigen::VectorXcd dU = vx.head(n), dW = vx.tail(n);
    const cplx dux = -c * (d.xx_d[0] - (d.xx[0] * ux + d.xx[1] * wx) + (row[0] * dU + row[1] * dW)(0));
    sol.U[comp] = to_std(U);
    sol.W[comp] = to_std(W);
    sol.dU_dx[comp] = to_std(dU);
    sol.dW_dx[comp] = to_std(dW);
    sol.U_at_x[comp] = ux;
    sol.W_at_x[comp] = wx;
    sol.dU_dy_at_x[comp] = uy;
    sol.dU_dx_at_x[comp] = dux;
  }
  sol.residual = worst_res;
  sol.condition = worst_cond;
  return sol;
}

cplx nearest_branch(cplx e2phi, cplx reference) {
  const cplx base = 0.5 * std::log(e2phi);
  const double k = std::round((reference - base).imag() / kPi);
  return base + kI * (kPi * k);
}

}  // namespace

std::string to_string(KernelRep rep) {
  switch (rep) {
    case KernelRep::kResidueSum:
      return "residue_sum";
    case KernelRep::kBesselSeries:
      return "bessel_series";
    case KernelRep::kDirect:
      return "direct_quadrature";
  }
  return "unknown";
}

ResidueKernel::ResidueKernel(const ThermalParams& p, int n_max, const QuadratureConfig& cfg)
    : modes_(CircleModeSet::build(p, n_max, cfg)), p_(p) {}

ResidueKernel::ResidueKernel(CircleModeSet modes, const ThermalParams& p)
    : modes_(std::move(modes)), p_(p) {}

cplx ResidueKernel::operator()(int j, double x, double t, int dx_order) const {
  j_index(j);
  if (!(x - 2.0 * std::abs(t) > 1e-12)) {
    throw ValidityError("residue sum requires x > 2|t| (x = " + std::to_string(x) +
                        ", t = " + std::to_string(t) + ")");
  }
  cplx sum = 0.0;
  for (std::size_t q = 0; q < modes_.size(); ++q) {
    const double th = modes_.theta_n[q];
    const double kappa = 0.5 * p_.m * std::cosh(th);
    const double ex = -kappa * x + p_.m * t * std::sinh(th);
    if (ex < -745.0) continue;
    sum += residue_prefactor(j, th) * modes_.g2[q] * std::exp(ex) * std::pow(-kappa, dx_order);
  }
  return sum;
}

double ResidueKernel::tail_bound(double x, double t) const {
  const int n_next = modes_.n_values.back() + 1;
  const double th = quantized_rapidity(n_next, p_);
  const double kappa = 0.5 * p_.m * std::cosh(th);
  // geometric bound on sum_{|n| > n_max}, W_n <= 1, lambda^{|j+1|} <= e^theta
  const double term = 2.0 * std::exp(th) * p_.T / (p_.m * std::cosh(th)) *
                      std::exp(-kappa * x + p_.m * std::abs(t) * std::sinh(th));
  const double ratio = std::exp(-(x / 2.0 - std::abs(t)) * p_.m);
  return term / (1.0 - std::min(ratio, 0.999));
}

cplx kernel_residue_sum(int j, double x, double t, const ThermalParams& p, int n_max,
                        const QuadratureConfig& cfg) {
  const ResidueKernel kern(p, n_max, cfg);
  const cplx v = kern(j, x, t);
  if (kern.tail_bound(x, t) > 1e-12 * std::max(1.0, std::abs(v))) {
    throw TruncationError("kernel_residue_sum: n_max too small for this (x, t)");
  }
  return v;
}

cplx kernel_direct(int j, double x, double t, const ThermalParams& p, const DirectKernelOptions& opts) {
  j_index(j);
  p.validate();
  if (!(0.5 * x + t > 0.0)) throw ValidityError("kernel_direct: requires x/2 + t > 0");
  if (std::abs(0.5 * x - t) < 1e-12) throw ValidityError("kernel_direct: on the light cone x = 2t");
  if (!(opts.bend > 0.0) || opts.bend > kPi / 4.0 + 1e-12) {
    throw DomainError("kernel_direct: bend must lie in (0, pi/4]");
  }
  const double m = p.m;
  const double b = opts.bend;
  const double sgn_pos = (0.5 * x - t) > 0.0 ? 1.0 : -1.0;
  // phase of Im theta at s -> -inf and s -> +inf on each branch
  struct Bend {
    double left, right;
  };
  const Bend pos{b, sgn_pos * b};
  const Bend neg{-b, -sgn_pos * b};
  auto integrand = [&](Branch br, double s) -> cplx {
    if (std::abs(s) > opts.window) return 0.0;
    const Bend& bd = br == Branch::kPositive ? pos : neg;
    const double th_ = std::tanh(s);
    const double phi = bd.left + (bd.right - bd.left) * 0.5 * (1.0 + th_);
    const double dphi = (bd.right - bd.left) * 0.5 * (1.0 - th_ * th_);
    const cplx theta(s, phi);
    const cplx jac(1.0, dphi);
    const cplx sh = std::sinh(theta), ch = std::cosh(theta);
    cplx expo;
    if (br == Branch::kPositive) {
      expo = kI * m * sh * (0.5 * x) - kI * m * ch * t + double(j + 1) * theta;
    } else {
      expo = -kI * m * sh * (0.5 * x) + kI * m * ch * t + double(j + 1) * theta;
      if ((m * ch / p.T).real() > 700.0) return 0.0;
    }
    if (expo.real() < -700.0) return 0.0;
    const cplx r = reflection_r(br, theta, 0.0, p, opts.quad);
    const double sign_j = (br == Branch::kNegative && (j % 2 != 0)) ? -1.0 : 1.0;
    return sign_j * std::exp(expo) * r * jac / (4.0 * kPi);
  };
  cplx total = 0.0;
  for (Branch br : {Branch::kPositive, Branch::kNegative}) {
    auto f = [&](double s) { return integrand(br, s); };
    const cplx v = integrate_real_line(f, opts.quad).value;
    const double edge = std::max(std::abs(integrand(br, opts.window * (1.0 - 1e-12))),
                                 std::abs(integrand(br, -opts.window * (1.0 - 1e-12))));
    if (edge > opts.quad.rel_tol * std::max(1.0, std::abs(v))) {
      throw OscillationBudgetExceeded("kernel_direct: integrand not negligible at the window edge");
    }
    total += v;
  }
  return total;
}

BesselSeriesKernel::BesselSeriesKernel(const ThermalParams& p, int mu_max, const QuadratureConfig& cfg)
    : p_(p), mu_max_(mu_max), c_(c_mu_coefficients(mu_max, p, cfg)) {}

cplx BesselSeriesKernel::coefficient(int mu, int nu, bool tilde) const {
  if (mu < 0 || nu < 0 || mu > mu_max_) throw DomainError("BesselSeriesKernel: index out of range");
  if (nu == 0) return tilde ? cplx(0.0) : c_[mu];
  const double sgn = nu % 2 == 0 ? 1.0 : -1.0;
  return sgn * (tilde ? std::conj(c_[mu]) : c_[mu]);
}

cplx BesselSeriesKernel::basis_term(int j, double x, double t, int mu, int nu, bool tilde) const {
  j_index(j);
  const double m = p_.m;
  const double damp = nu / p_.T;
  cplx a, b;
  double sign = 1.0;
  if (!tilde) {
    a = 0.5 * m * cplx(damp, t - 0.5 * x);
    b = 0.5 * m * cplx(damp, t + 0.5 * x);
  } else {
    a = 0.5 * m * cplx(damp, -t + 0.5 * x);
    b = 0.5 * m * cplx(damp, -t - 0.5 * x);
    sign = (j % 2 == 0) ? 1.0 : -1.0;  // lambda^j on the negative half line
  }
  if (nu == 0) {
    if (std::abs(a) == 0.0) throw ValidityError("bessel series: on the light cone x = 2t");
    if (!(std::abs(b.imag()) > 0.0) || (!tilde && b.imag() < 0.0)) {
      throw ValidityError("bessel series: requires x/2 + t > 0");
    }
  }
  const double power = 0.5 * (mu - 1 - j);
  const cplx ratio = std::exp(power * (std::log(a) - std::log(b)));
  const cplx arg = 2.0 * std::sqrt(a) * std::sqrt(b);
  return sign * kI / kPi * ratio * bessel_k(1 + j - mu, arg);
}

cplx BesselSeriesKernel::term(int j, double x, double t, int mu, int nu, bool tilde) const {
  const cplx c = coefficient(mu, nu, tilde);
  if (c == cplx(0.0)) return 0.0;
  return c * basis_term(j, x, t, mu, nu, tilde);
}

BesselSeriesResult BesselSeriesKernel::evaluate(int j, double x, double t, int nu_max) const {
  if (nu_max < 0 || nu_max >= kNuMax) {
    throw DomainError("BesselSeriesKernel: nu_max must lie in [0, " + std::to_string(kNuMax - 1) + "]");
  }
  BesselSeriesResult res;
  std::vector<cplx> terms;
  for (int mu = 0; mu <= mu_max_; ++mu) terms.push_back(term(j, x, t, mu, 0, false));
  // cut the asymptotic mu series at its smallest term beyond mu = 0
  int cut = mu_max_;
  for (int mu = 1; mu <= mu_max_; ++mu) {
    if (std::abs(terms[mu]) < std::abs(terms[cut])) cut = mu;
  }
  for (int mu = 0; mu < cut; ++mu) res.value += terms[mu];
  res.mu_terms = cut;
  double tail = std::abs(terms[cut]);
  // nu >= 1 blocks over the same mu range (both series)
  auto block = [&](int nu, double& mag) {
    cplx s = 0.0;
    for (int mu = 0; mu <= cut; ++mu) {
      for (bool tl : {false, true}) {
        const cplx v = term(j, x, t, mu, nu, tl);
        if (mu < cut) s += v;
        mag += std::abs(v);
      }
    }
    return s;
  };
  double unused = 0.0;
  for (int nu = 1; nu <= nu_max; ++nu) res.value += block(nu, unused);
  res.nu_terms = nu_max + 1;
  block(nu_max + 1, tail);
  res.tail_estimate = tail;
  return res;
}

BesselSeriesResult kernel_bessel_series(int j, double x, double t, const ThermalParams& p, int mu_max,
                                        bool include_nu, const QuadratureConfig& cfg,
                                        double max_rel_tail) {
  const BesselSeriesKernel kern(p, mu_max, cfg);
  const BesselSeriesResult r = kern.evaluate(j, x, t, include_nu ? 4 : 0);
  if (r.tail_estimate > max_rel_tail * std::abs(r.value)) {
    throw ValidityError("kernel_bessel_series: truncation estimate " + std::to_string(r.tail_estimate) +
                        " exceeds the requested fraction of |F|");
  }
  return r;
}

KernelGrid kernel_table(int j, double t, const std::vector<double>& xs, KernelRep rep,
                        const ThermalParams& p) {
  KernelGrid g;
  g.j = j;
  g.t = t;
  g.representation = rep;
  g.x_values = xs;
  g.values.assign(xs.size(), cplx(std::nan(""), std::nan("")));
  std::vector<char> ok(xs.size(), 0);
  std::unique_ptr<ResidueKernel> res;
  std::unique_ptr<BesselSeriesKernel> bes;
  if (rep == KernelRep::kResidueSum) res = std::make_unique<ResidueKernel>(p);
  if (rep == KernelRep::kBesselSeries) bes = std::make_unique<BesselSeriesKernel>(p);
  parallel_for(xs.size(), [&](std::size_t i) {
    try {
      switch (rep) {
        case KernelRep::kResidueSum:
          g.values[i] = (*res)(j, xs[i], t);
          break;
        case KernelRep::kBesselSeries:
          g.values[i] = bes->evaluate(j, xs[i], t).value;
          break;
        case KernelRep::kDirect:
          g.values[i] = kernel_direct(j, xs[i], t, p);
          break;
      }
      ok[i] = 1;
    } catch (const ValidityError&) {
    } catch (const DomainError&) {
    }
  });
  g.valid.assign(ok.begin(), ok.end());
  return g;
}

void VolterraOptions::validate() const {
  if (!(panel > 0.0) || panel_nodes < 2 || !(h > 0.0) || L < 0.0 || !(tail_tol > 0.0) || n_max < 0 ||
      !(max_condition > 1.0)) {
    throw DomainError("VolterraOptions: invalid mesh or tolerance settings");
  }
}

VolterraSolution volterra_solve(double x, double t, const KernelFn& kernel, const ThermalParams& p,
                                const VolterraOptions& opts) {
  opts.validate();
  p.validate();
  const double L = choose_length(kernel, x, opts);
  std::vector<double> y, w;
  build_nodes(x, L, opts, y, w);
  const KernelData d = kernel_data_generic(kernel, x, y);
  return solve_with(x, t, d, y, w, L, p, opts);
}

VolterraSolution volterra_solve(double x, double t, const ThermalParams& p, const VolterraOptions& opts) {
  opts.validate();
  p.validate();
  if (!(x > std::abs(t))) throw ValidityError("volterra_solve: requires x > |t|");
  const ResidueKernel kern(p, opts.n_max);
  const double L = choose_length(residue_fn(kern, t), x, opts);
  std::vector<double> y, w;
  build_nodes(x, L, opts, y, w);
  const KernelData d = kernel_data_residue(kern, x, t, y);
  return solve_with(x, t, d, y, w, L, p, opts);
}

PhiReconstruction reconstruct_phi(const VolterraSolution& sol, const ThermalParams& p, cplx reference) {
  const double m = p.m;
  const cplx up = sol.U_at_x[0], um = sol.U_at_x[1];
  const cplx wp = sol.W_at_x[0], wm = sol.W_at_x[1];
  PhiReconstruction r;
  r.e2phi = 1.0 + (4.0 * kI / m) * (wm - wp) + (16.0 / (m * m)) * (um - up) * up -
            (16.0 / (m * m)) * (sol.dU_dx_at_x[0] + sol.dU_dy_at_x[1]);
  r.phi = nearest_branch(r.e2phi, reference);
  r.dt_minus_dx_phi = 2.0 * (up - um);
  return r;
}

std::vector<PhiReconstruction> glm_phi_profile(const std::vector<double>& xs, double t,
                                               const ThermalParams& p, const VolterraOptions& opts) {
  std::vector<std::size_t> order(xs.size());
  for (std::size_t i = 0; i < xs.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return xs[a] > xs[b]; });
  std::vector<VolterraSolution> sols(xs.size());
  parallel_for(xs.size(), [&](std::size_t i) { sols[i] = volterra_solve(xs[i], t, p, opts); });
  std::vector<PhiReconstruction> out(xs.size());
  cplx prev = 0.0;
  bool first = true;
  for (std::size_t idx : order) {
    PhiReconstruction r = reconstruct_phi(sols[idx], p, prev);
    if (first && std::abs(r.e2phi - 1.0) > 0.5) {
      throw BranchAmbiguity("glm_phi_profile: |e^{2 phi} - 1| > 0.5 at the largest x");
    }
    first = false;
    prev = r.phi;
    out[idx] = r;
  }
  return out;
}

NeumannOrders neumann_orders(double x, const ThermalParams& p, int order, const VolterraOptions& opts) {
  if (order < 1 || order > 3) throw DomainError("neumann_orders: order must be 1, 2 or 3");
  opts.validate();
  const ResidueKernel kern(p, opts.n_max);
  const double L = choose_length(residue_fn(kern, 0.0), x, opts);
  std::vector<double> y, w;
  build_nodes(x, L, opts, y, w);
  const KernelData d = kernel_data_residue(kern, x, 0.0, y);
  const Eigen::VectorXd wq = Eigen::Map<const Eigen::VectorXd>(w.data(), static_cast<Eigen::Index>(w.size()));
  const Iterates P = iterate_component(d, wq, p.m / 2.0, order);
  const Iterates M = iterate_component(d, wq, -p.m / 2.0, order);
  const double m = p.m;
  NeumannOrders out;
  out.k_glm.assign(order + 1, 0.0);
  for (int k = 1; k <= order; ++k) {
    cplx v = (4.0 * kI / m) * (M.Wx[k] - P.Wx[k]) - (16.0 / (m * m)) * (P.dUx[k] + M.Uy[k]);
    for (int a = 1; a < k; ++a) v += (16.0 / (m * m)) * (M.Ux[a] - P.Ux[a]) * P.Ux[k - a];
    out.k_glm[k] = v;
  }
  const cplx g1 = out.k_glm[1];
  const cplx g2 = order >= 2 ? out.k_glm[2] : 0.0;
  const cplx g3 = order >= 3 ? out.k_glm[3] : 0.0;
  out.quadratic_combination = g2 / 2.0 - g1 * g1 / 4.0;
  out.cubic_combination = g3 / 2.0 - g1 * g2 / 2.0 + g1 * g1 * g1 / 6.0;
  return out;
}

VolterraSolution neumann_solve(double x, double t, const ThermalParams& p, int iterations,
                               const VolterraOptions& opts) {
  if (iterations < 1) throw DomainError("neumann_solve: iterations must be positive");
  opts.validate();
  const ResidueKernel kern(p, opts.n_max);
  const double L = choose_length(residue_fn(kern, t), x, opts);
  VolterraSolution sol;
  sol.x = x;
  sol.t = t;
  sol.L = L;
  build_nodes(x, L, opts, sol.y, sol.weights);
  const KernelData d = kernel_data_residue(kern, x, t, sol.y);
  const Eigen::Index n = static_cast<Eigen::Index>(sol.y.size());
  const Eigen::VectorXd wq = Eigen::Map<const Eigen::VectorXd>(sol.weights.data(), n);
  for (int comp = 0; comp < 2; ++comp) {
    const double c = p.m / (2.0 * (comp == 0 ? 1.0 : -1.0));
    const Iterates it = iterate_component(d, wq, c, iterations);
    Eigen::VectorXcd U = Eigen::VectorXcd::Zero(n), W = U, dU = U, dW = U;
    for (int k = 1; k <= iterations; ++k) {
      U += it.U[k];
      W += it.W[k];
      dU += it.dU[k];
      dW += it.dW[k];
      sol.U_at_x[comp] += it.Ux[k];
      sol.W_at_x[comp] += it.Wx[k];
      sol.dU_dy_at_x[comp] += it.Uy[k];
      sol.dU_dx_at_x[comp] += it.dUx[k];
    }
    sol.U[comp] = to_std(U);
    sol.W[comp] = to_std(W);
    sol.dU_dx[comp] = to_std(dU);
    sol.dW_dx[comp] = to_std(dW);
  }
  return sol;
}

}  // namespace thermal_ising
