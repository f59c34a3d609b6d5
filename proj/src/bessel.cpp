#include <cmath>
#include <numbers>

#include "thermal_ising/errors.hpp"
#include "thermal_ising/specfn.hpp"

namespace thermal_ising {
namespace {

constexpr double kEulerGamma = 0.57721566490153286061;
constexpr double kEps = 1e-17;

// Power series about z = 0 (used for |z| <= 2).
void k01_series(cplx z, cplx& k0, cplx& k1) {
  const cplx y = 0.25 * z * z;
  const cplx lg = std::log(0.5 * z);
  cplx term0 = 1.0;  // y^k/(k!)^2
  cplx term1 = 1.0;  // y^k/(k!(k+1)!)
  cplx i0 = 0.0, i1s = 0.0, s0 = 0.0, s1 = 0.0;
  double harmonic = 0.0;  // H_k
  for (int k = 0; k < 60; ++k) {
    if (k > 0) {
      term0 *= y / double(k * k);
      term1 *= y / double(k * (k + 1));
      harmonic += 1.0 / k;
    }
    i0 += term0;
    i1s += term1;
    s0 += harmonic * term0;
    const double psi_sum = -2.0 * kEulerGamma + 2.0 * harmonic + 1.0 / (k + 1);
    s1 += psi_sum * term1;
    if (std::abs(term0) < kEps * std::abs(i0) && k > 2) break;
  }
  k0 = -(lg + kEulerGamma) * i0 + s0;
  const cplx i1 = 0.5 * z * i1s;
  k1 = 1.0 / z + lg * i1 - 0.25 * z * s1;
}

// Steed/Temme continued fraction for K_0, K_1 (|z| > 2).
void k01_cf2(cplx z, cplx& k0, cplx& k1) {
  cplx b = 2.0 * (1.0 + z);
  cplx d = 1.0 / b;
  cplx h = d, delh = d;
  cplx q1 = 0.0, q2 = 1.0;
  const double a1 = 0.25;
  cplx q = a1, c = a1;
  double a = -a1;
  cplx s = 1.0 + q * delh;
  int i = 2;
  for (; i < 100000; ++i) {
    a -= 2.0 * (i - 1);
    c = -a * c / double(i);
    const cplx qnew = (q1 - b * q2) / a;
    q1 = q2;
    q2 = qnew;
    q += c * qnew;
    b += 2.0;
    d = 1.0 / (b + a * d);
    delh = (b * d - 1.0) * delh;
    h += delh;
    const cplx dels = q * delh;
    s += dels;
    if (std::abs(dels) < 1e-16 * std::abs(s)) break;
  }
  if (i >= 100000) throw ConvergenceError("bessel_k: continued fraction did not converge");
  h = a1 * h;
  k0 = std::sqrt(std::numbers::pi / (2.0 * z)) * std::exp(-z) / s;
  k1 = k0 * (z + 0.5 - h) / z;
}

}  // namespace

cplx bessel_k(int order, cplx z) {
  if (z == cplx(0.0)) throw DomainError("bessel_k: z = 0");
  if (std::abs(std::arg(z)) > std::numbers::pi / 2 + 1e-6) {
    throw DomainError("bessel_k: argument outside the closed right half plane");
  }
  const int n = std::abs(order);
  cplx k0, k1;
  if (std::abs(z) <= 2.0) {
    k01_series(z, k0, k1);
  } else {
    k01_cf2(z, k0, k1);
  }
  if (n == 0) return k0;
  cplx km = k0, kn = k1;
  for (int j = 1; j < n; ++j) {
    const cplx kp = km + (2.0 * j / z) * kn;
    km = kn;
    kn = kp;
  }
  return kn;
}

double bessel_k(int order, double x) {
  if (x <= 0.0) throw DomainError("bessel_k: real argument must be positive");
  return bessel_k(order, cplx(x, 0.0)).real();
}

}  // namespace thermal_ising
