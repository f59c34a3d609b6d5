#pragma once

// Double-exponential quadrature (tanh-sinh family) on a finite interval,
// a half line and the whole real line.  Trapezoidal sums in the transformed
// variable are refined by halving the step; the difference between the last
// two levels is the error estimate.

#include <cmath>
#include <complex>
#include <numbers>
#include <type_traits>

#include "thermal_ising/errors.hpp"

namespace thermal_ising {

struct QuadratureConfig {
  double abs_tol = 1e-12;
  double rel_tol = 1e-12;
  int max_levels = 9;
  // imaginary contour offset used only by the shifted-contour oracle for h_pm
  double pv_offset = 0.3;

  void validate() const {
    if (!(abs_tol > 0) || !(rel_tol > 0) || !(pv_offset > 0) || max_levels < 2) {
      throw DomainError("QuadratureConfig: tolerances and pv_offset must be positive");
    }
  }
};

template <class T>
struct QuadResult {
  T value{};
  double error = 0.0;
  int levels = 0;
  int evaluations = 0;
};

namespace detail {

inline double magnitude(double v) { return std::abs(v); }
inline double magnitude(const std::complex<double>& v) { return std::abs(v); }

enum class DEMap { kFinite, kHalfLine, kRealLine };

// Node and weight for transformed abscissa s.  For the finite map the
// abscissa is returned relative to the interval centre.
inline void de_node(DEMap map, double s, double half_width, double& x, double& w) {
  constexpr double kHalfPi = std::numbers::pi / 2.0;
  const double u = kHalfPi * std::sinh(s);
  const double du = kHalfPi * std::cosh(s);
  switch (map) {
    case DEMap::kFinite: {
      const double c = std::cosh(u);
      x = half_width * std::tanh(u);
      w = half_width * du / (c * c);
      break;
    }
    case DEMap::kHalfLine: {
      const double e = std::exp(u);
      x = e;
      w = du * e;
      break;
    }
    case DEMap::kRealLine: {
      x = std::sinh(u);
      w = du * std::cosh(u);
      break;
    }
  }
}

template <class F>
auto de_integrate(F&& f, DEMap map, double origin, double half_width, double s_max,
                  const QuadratureConfig& cfg) {
  using T = std::decay_t<decltype(f(0.0))>;
  QuadResult<T> out;
  double h = 1.0;
  auto term = [&](double s) -> T {
    double x = 0.0, w = 0.0;
    de_node(map, s, half_width, x, w);
    if (w == 0.0 || !std::isfinite(w)) return T{};
    const T v = f(origin + x);
    ++out.evaluations;
    return v * w;
  };
  T sum = term(0.0);
  for (int k = 1; h * k <= s_max; ++k) sum += term(h * k) + term(-h * k);
  T prev = sum * h;
  for (int level = 1; level <= cfg.max_levels; ++level) {
    h *= 0.5;
    for (int k = 1; h * k <= s_max; k += 2) sum += term(h * k) + term(-h * k);
    const T cur = sum * h;
    out.error = magnitude(cur - prev);
    out.value = cur;
    out.levels = level;
    if (level >= 3 && out.error <= std::max(cfg.abs_tol, cfg.rel_tol * magnitude(cur))) return out;
    prev = cur;
  }
  throw ConvergenceError("double-exponential quadrature did not reach tolerance (error " +
                         std::to_string(out.error) + ")");
}

}  // namespace detail

// \int_a^b f(x) dx
template <class F>
auto integrate_interval(F&& f, double a, double b, const QuadratureConfig& cfg = {}) {
  return detail::de_integrate(std::forward<F>(f), detail::DEMap::kFinite, 0.5 * (a + b),
                              0.5 * (b - a), 3.0, cfg);
}

// \int_a^\infty f(x) dx
template <class F>
auto integrate_half_line(F&& f, double a, const QuadratureConfig& cfg = {}) {
  return detail::de_integrate(std::forward<F>(f), detail::DEMap::kHalfLine, a, 1.0, 4.5, cfg);
}

// \int_{-\infty}^\infty f(x) dx, nodes symmetric about `centre`
template <class F>
auto integrate_real_line(F&& f, const QuadratureConfig& cfg = {}, double centre = 0.0) {
  return detail::de_integrate(std::forward<F>(f), detail::DEMap::kRealLine, centre, 1.0, 4.0, cfg);
}

}  // namespace thermal_ising
