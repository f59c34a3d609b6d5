#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "thermal_ising/asymptotics.hpp"
#include "thermal_ising/errors.hpp"
#include "thermal_ising/form_factors.hpp"
#include "thermal_ising/glm.hpp"
#include "thermal_ising/linear_problem.hpp"
#include "thermal_ising/scattering.hpp"
#include "thermal_ising/specfn.hpp"

namespace py = pybind11;
using namespace thermal_ising;

namespace {

ThermalParams params(double m, double T) {
  ThermalParams p{m, T};
  p.validate();
  return p;
}

Sign to_sign(int s) {
  if (s == 1) return Sign::kPlus;
  if (s == -1) return Sign::kMinus;
  throw DomainError("sign must be +1 or -1");
}

Field to_field(const std::string& f) {
  if (f == "sigma") return Field::kSigma;
  if (f == "mu") return Field::kMu;
  throw DomainError("field must be 'sigma' or 'mu'");
}

TruncationPolicy policy(int n_max, int n_sigma, int n_mu, double tail_tol) {
  TruncationPolicy pol;
  pol.n_max = n_max;
  pol.n_sigma = n_sigma;
  pol.n_mu = n_mu;
  pol.tail_tol = tail_tol;
  pol.validate();
  return pol;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() =
      "Thermal two-point functions of the 2D Ising field theory: special functions, "
      "scattering data of the sinh-Gordon linear problem, form-factor sums, GLM kernels "
      "and Volterra solves, and light-cone asymptotics.  Arguments m and T are the "
      "mass and temperature; every function defaults to m = T = 1.";

  auto base = py::register_exception<Error>(m, "Error", PyExc_RuntimeError);
  py::register_exception<DomainError>(m, "DomainError", base.ptr());
  py::register_exception<PoleError>(m, "PoleError", base.ptr());
  py::register_exception<NearSingularity>(m, "NearSingularity", base.ptr());
  py::register_exception<ConvergenceError>(m, "ConvergenceError", base.ptr());
  py::register_exception<ValidityError>(m, "ValidityError", base.ptr());
  py::register_exception<OscillationBudgetExceeded>(m, "OscillationBudgetExceeded", base.ptr());
  py::register_exception<StepSizeError>(m, "StepSizeError", base.ptr());
  py::register_exception<NonDecayedProfile>(m, "NonDecayedProfile", base.ptr());
  py::register_exception<SingularMatrix>(m, "SingularMatrix", base.ptr());
  py::register_exception<TruncationError>(m, "TruncationError", base.ptr());
  py::register_exception<BranchAmbiguity>(m, "BranchAmbiguity", base.ptr());
  py::register_exception<BranchError>(m, "BranchError", base.ptr());
  py::register_exception<TailTooLarge>(m, "TailTooLarge", base.ptr());

  // special functions
  m.def("bessel_k", py::overload_cast<int, cplx>(&bessel_k), py::arg("order"), py::arg("z"),
        "Modified Bessel function K_n(z) for integer n on the principal sheet.");
  m.def(
      "thermal_log_kernel",
      [](double theta, double mm, double T) { return thermal_log_kernel(theta, params(mm, T)); },
      py::arg("theta"), py::arg("m") = 1.0, py::arg("T") = 1.0,
      "L(theta) = ln[(1 + e^{-E/T}) / (1 - e^{-E/T})] with E = m cosh(theta).");
  m.def(
      "g_pm",
      [](int s, cplx theta, double mm, double T) { return g_pm(to_sign(s), theta, params(mm, T)); },
      py::arg("sign"), py::arg("theta"), py::arg("m") = 1.0, py::arg("T") = 1.0,
      "Thermal occupation factors g_+ (sign = +1) and g_- (sign = -1).");
  m.def(
      "h_pm",
      [](int s, cplx theta, double mm, double T) { return h_pm(to_sign(s), theta, params(mm, T)); },
      py::arg("sign"), py::arg("theta"), py::arg("m") = 1.0, py::arg("T") = 1.0,
      "h_+ and h_- on the strip -pi/2 < Im theta < 3 pi/2.");
  m.def(
      "quantized_rapidity",
      [](double n, double mm, double T) { return quantized_rapidity(n, params(mm, T)); },
      py::arg("n"), py::arg("m") = 1.0, py::arg("T") = 1.0,
      "theta_n with m sinh(theta_n) = 2 pi n T.");
  m.def(
      "delta_vacuum_energy",
      [](double mm, double T) { return delta_vacuum_energy(params(mm, T)); }, py::arg("m") = 1.0,
      py::arg("T") = 1.0, "Free-energy shift entering the exponential decay of G.");
  m.def(
      "s_T", [](double mm, double T) { return s_T(params(mm, T)); }, py::arg("m") = 1.0,
      py::arg("T") = 1.0, "Finite-temperature normalisation s_T of the order field.");
  m.def(
      "c_mu_coefficients",
      [](int mu_max, double mm, double T) { return c_mu_coefficients(mu_max, params(mm, T)); },
      py::arg("mu_max"), py::arg("m") = 1.0, py::arg("T") = 1.0,
      "Coefficients c_0..c_mu_max of the large-rapidity expansion of r/2i.");

  // scattering data
  m.def(
      "alpha", [](cplx theta, double mm, double T) { return alpha(theta, params(mm, T)); },
      py::arg("theta"), py::arg("m") = 1.0, py::arg("T") = 1.0);
  m.def(
      "jost_a", [](cplx theta, double mm, double T) { return jost_a(theta, params(mm, T)); },
      py::arg("theta"), py::arg("m") = 1.0, py::arg("T") = 1.0, "a(theta) = i / (2 pi h_+^2).");
  m.def(
      "jost_b",
      [](cplx theta, double t, double mm, double T) { return jost_b(theta, t, params(mm, T)); },
      py::arg("theta"), py::arg("t") = 0.0, py::arg("m") = 1.0, py::arg("T") = 1.0,
      "b(theta, t) = 2 i g_-(theta) e^{i E t}.");

  // form factors
  m.def(
      "correlator_equal_time",
      [](double x, const std::string& field, double mm, double T, int n_max, int n_sigma,
         int n_mu, double tail_tol) {
        return correlator_equal_time(x, params(mm, T), policy(n_max, n_sigma, n_mu, tail_tol),
                                     to_field(field));
      },
      py::arg("x"), py::arg("field") = "sigma", py::arg("m") = 1.0, py::arg("T") = 1.0,
      py::arg("n_max") = 20, py::arg("n_sigma") = 4, py::arg("n_mu") = 3,
      py::arg("tail_tol") = 1e-10, "Equal-time G (field='sigma') or G~ (field='mu').");
  m.def(
      "phi_equal_time",
      [](double x, double mm, double T, int n_max, int n_sigma, int n_mu, double tail_tol) {
        return phi_equal_time(x, params(mm, T), policy(n_max, n_sigma, n_mu, tail_tol));
      },
      py::arg("x"), py::arg("m") = 1.0, py::arg("T") = 1.0, py::arg("n_max") = 20,
      py::arg("n_sigma") = 4, py::arg("n_mu") = 3, py::arg("tail_tol") = 1e-10,
      "phi = 2 artanh(G~/G) at t = 0.");

  // GLM kernels and solves
  m.def(
      "kernel_residue_sum",
      [](int j, double x, double t, double mm, double T, int n_max) {
        return kernel_residue_sum(j, x, t, params(mm, T), n_max);
      },
      py::arg("j"), py::arg("x"), py::arg("t") = 0.0, py::arg("m") = 1.0, py::arg("T") = 1.0,
      py::arg("n_max") = 20, "F_j(x, t) as a sum over the poles of r; requires x > 2|t|.");
  m.def(
      "kernel_direct",
      [](int j, double x, double t, double mm, double T) {
        return kernel_direct(j, x, t, params(mm, T));
      },
      py::arg("j"), py::arg("x"), py::arg("t") = 0.0, py::arg("m") = 1.0, py::arg("T") = 1.0,
      "F_j(x, t) by quadrature on bent rapidity contours.");
  m.def(
      "kernel_bessel_series",
      [](int j, double x, double t, double mm, double T) {
        const auto r = BesselSeriesKernel(params(mm, T)).evaluate(j, x, t);
        return py::make_tuple(r.value, r.tail_estimate);
      },
      py::arg("j"), py::arg("x"), py::arg("t"), py::arg("m") = 1.0, py::arg("T") = 1.0,
      "F_j(x, t) from the Bessel series; returns (value, truncation estimate).");
  m.def(
      "glm_phi",
      [](const std::vector<double>& xs, double t, double mm, double T) {
        const auto prof = glm_phi_profile(xs, t, params(mm, T));
        std::vector<cplx> out;
        for (const auto& r : prof) out.push_back(r.phi);
        return out;
      },
      py::arg("xs"), py::arg("t") = 0.0, py::arg("m") = 1.0, py::arg("T") = 1.0,
      "phi along xs from Nystrom solves of the GLM equations.");

  // Jost data of the linear problem
  m.def(
      "compare_jost",
      [](double theta, double mm, double T, int n_sigma, int n_mu, double x_min, double x_max,
         double decay_tol) {
        const ThermalParams p = params(mm, T);
        TruncationPolicy pol;
        pol.n_sigma = n_sigma;
        pol.n_mu = n_mu;
        pol.validate();
        FieldProfile prof = FieldProfile::form_factor(p, x_min, x_max, pol);
        prof.decay_tol = decay_tol;
        const auto c = compare_jost(theta, prof, p);
        py::dict d;
        d["a_num"] = c.a_num;
        d["a_exact"] = c.a_exact;
        d["b_num"] = c.b_num;
        d["b_exact"] = c.b_exact;
        d["rel_dev_a"] = c.rel_dev_a;
        d["rel_dev_b"] = c.rel_dev_b;
        d["current_defect"] = c.current_defect;
        return d;
      },
      py::arg("theta"), py::arg("m") = 1.0, py::arg("T") = 1.0, py::arg("n_sigma") = 6,
      py::arg("n_mu") = 5, py::arg("x_min") = -10.0, py::arg("x_max") = 10.0,
      py::arg("decay_tol") = 1e-4,
      "Numerical Jost a, b from the form-factor profile against the closed forms.");

  // light-cone asymptotics
  m.def(
      "phi_lightcone",
      [](double x, double t, double mm, double T, int mu_max) {
        return phi_lightcone(LightconeCoords::from_xt(x, t), params(mm, T), mu_max);
      },
      py::arg("x"), py::arg("t"), py::arg("m") = 1.0, py::arg("T") = 1.0, py::arg("mu_max") = 6,
      "(2/pi) sum_mu c_mu Phi_mu at v = t - x, w = t + x.");
  m.def(
      "correlators_lightcone",
      [](double x, double t, double mm, double T, double A, double B, double C) {
        const auto r = correlators_lightcone(LightconeCoords::from_xt(x, t), params(mm, T),
                                             ExponentialConstants{A, B, C});
        py::dict d;
        d["G"] = r.G;
        d["Gtilde"] = r.Gtilde;
        d["warning"] = r.warning ? py::cast(*r.warning) : py::none();
        return d;
      },
      py::arg("x"), py::arg("t"), py::arg("m") = 1.0, py::arg("T") = 1.0, py::arg("A") = 0.0,
      py::arg("B") = 0.0, py::arg("C") = 0.0, "Asymptotic G and G~ near the light cone.");
  m.def(
      "verify_appendixC_system",
      [](cplx K, cplx Kt, double mm) {
        const auto s = verify_appendixC_system(K, Kt, mm);
        return py::make_tuple(s.residual, s.deviation);
      },
      py::arg("K"), py::arg("Kt"), py::arg("m") = 1.0,
      "Solve the 8x8 coefficient system; returns (residual, deviation from the expected "
      "solution).");
}
