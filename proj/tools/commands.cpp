#include "commands.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <numbers>
#include <ostream>
#include <random>
#include <sstream>

#include "thermal_ising/asymptotics.hpp"
#include "thermal_ising/errors.hpp"
#include "thermal_ising/form_factors.hpp"
#include "thermal_ising/glm.hpp"
#include "thermal_ising/linear_problem.hpp"
#include "thermal_ising/parallel.hpp"
#include "thermal_ising/scattering.hpp"

namespace thermal_ising::cli {

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t");
  return s.substr(b, e - b + 1);
}

double parse_number(const std::string& s, const std::string& text) {
  const std::string v = trim(s);
  double out = 0.0;
  const auto [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), out);
  if (ec != std::errc() || ptr != v.data() + v.size() || v.empty()) {
    throw ConfigError("cannot parse number '" + v + "' in '" + text + "'");
  }
  return out;
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, sep)) out.push_back(item);
  return out;
}

ThermalParams params(const RunConfig& cfg) { return {cfg.m, cfg.T}; }

Cell num(double v) { return std::isfinite(v) ? Cell(v) : Cell(std::monostate{}); }

std::string point(double x, double t) {
  return "x = " + format_double(x) + ", t = " + format_double(t);
}

std::string regime_of(double x, double t) {
  if (std::abs(t) == std::abs(x)) return "light-cone";
  return std::abs(t) > std::abs(x) ? "time-like" : "space-like";
}

}  // namespace

std::string format_double(double v) {
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
  (void)ec;
  return std::string(buf, ptr);
}

std::vector<double> parse_range(const std::string& text) {
  if (trim(text).empty()) throw ConfigError("empty range");
  if (text.find(':') != std::string::npos) {
    const auto parts = split(text, ':');
    if (parts.size() != 3) throw ConfigError("range '" + text + "' must be a:b:n");
    const double a = parse_number(parts[0], text);
    const double b = parse_number(parts[1], text);
    const double n = parse_number(parts[2], text);
    if (!(n >= 1.0) || n != std::floor(n)) throw ConfigError("range '" + text + "' needs n >= 1");
    const auto count = static_cast<std::size_t>(n);
    if (count == 1) {
      if (a != b) throw ConfigError("range '" + text + "' with n = 1 needs a == b");
      return {a};
    }
    std::vector<double> out(count);
    for (std::size_t i = 0; i < count; ++i) {
      out[i] = i + 1 == count ? b : a + (b - a) * static_cast<double>(i) / static_cast<double>(count - 1);
    }
    return out;
  }
  std::vector<double> out;
  for (const auto& item : split(text, ',')) out.push_back(parse_number(item, text));
  return out;
}

std::vector<int> parse_int_list(const std::string& text) {
  std::vector<int> out;
  for (double v : parse_range(text)) {
    if (v != std::floor(v)) throw ConfigError("'" + text + "' must contain integers");
    out.push_back(static_cast<int>(v));
  }
  return out;
}

std::vector<std::string> parse_word_list(const std::string& text) {
  std::vector<std::string> out;
  for (const auto& item : split(text, ',')) {
    const std::string w = trim(item);
    if (!w.empty()) out.push_back(w);
  }
  if (out.empty()) throw ConfigError("empty list '" + text + "'");
  return out;
}

void RunConfig::validate() const {
  if (!(m > 0.0) || !(T > 0.0)) throw ConfigError("m and T must be positive");
  if (format != "csv" && format != "json") throw ConfigError("format must be csv or json");
  if (n_max < 0) throw ConfigError("n_max must be non-negative");
  if (mu_max < 0 || mu_max > kDefaultMuMax) throw ConfigError("mu_max must lie in [0, 12]");
}

nlohmann::ordered_json RunConfig::to_json() const {
  nlohmann::ordered_json j;
  j["command"] = command;
  j["m"] = m;
  j["T"] = T;
  if (command == "corr") {
    j["method"] = method;
    j["x"] = x;
    j["t"] = t;
    j["n_max"] = n_max;
    j["n_sigma"] = n_sigma;
    j["n_mu"] = n_mu;
    j["mu_max"] = mu_max;
    j["A"] = A;
    j["B"] = B;
    j["C"] = C;
  } else if (command == "scatter-check") {
    j["theta"] = theta;
    j["p"] = p;
    j["x_min"] = x_min;
    j["x_max"] = x_max;
    j["step"] = step;
    j["decay_tol"] = decay_tol;
    j["tolerance"] = tolerance;
    j["zero_field"] = zero_field;
    j["n_max"] = n_max;
    j["n_sigma"] = n_sigma;
    j["n_mu"] = n_mu;
  } else if (command == "kernels") {
    j["j"] = this->j;
    j["x"] = x;
    j["t"] = t;
    j["representations"] = representations;
    j["n_max"] = n_max;
    j["mu_max"] = mu_max;
  } else if (command == "glm-solve") {
    j["x"] = x;
    j["t"] = t;
    j["rule"] = rule;
    j["n_max"] = n_max;
  } else if (command == "asympt-verify") {
    j["draws"] = draws;
    j["seed"] = seed;
  }
  j["format"] = format;
  return j;
}

Table cmd_corr(const RunConfig& cfg) {
  cfg.validate();
  const ThermalParams p = params(cfg);
  const auto xs = parse_range(cfg.x);
  const auto ts = parse_range(cfg.t);
  if (cfg.method != "formfactor" && cfg.method != "glm" && cfg.method != "asymptotic") {
    throw ConfigError("method must be formfactor, glm or asymptotic");
  }
  Table table;
  table.columns = {"x", "t", "G_re", "G_im", "Gtilde_re", "Gtilde_im",
                   "phi_re", "phi_im", "method", "regime"};
  auto row = [&](double x, double t, cplx g, cplx gt, cplx phi, bool has_g) {
    std::vector<Cell> r{x, t};
    if (has_g) {
      r.insert(r.end(), {num(g.real()), num(g.imag()), num(gt.real()), num(gt.imag())});
    } else {
      r.insert(r.end(), 4, std::monostate{});
    }
    r.insert(r.end(), {num(phi.real()), num(phi.imag()), cfg.method, regime_of(x, t)});
    table.rows.push_back(std::move(r));
  };

  if (cfg.method == "formfactor") {
    for (double t : ts) {
      if (t != 0.0) throw ConfigError("formfactor method is equal-time only (t = 0)");
    }
    TruncationPolicy pol;
    pol.n_max = cfg.n_max;
    pol.n_sigma = cfg.n_sigma;
    pol.n_mu = cfg.n_mu;
    try {
      pol.validate();
    } catch (const Error& e) {
      throw ConfigError(e.what());
    }
    std::vector<std::array<double, 3>> vals(xs.size());
    std::vector<std::string> failures(xs.size());
    parallel_for(xs.size(), [&](std::size_t i) {
      try {
        vals[i] = {correlator_equal_time(xs[i], p, pol, Field::kSigma),
                   correlator_equal_time(xs[i], p, pol, Field::kMu),
                   phi_equal_time(xs[i], p, pol)};
      } catch (const Error& e) {
        failures[i] = e.what();
      }
    });
    for (std::size_t i = 0; i < xs.size(); ++i) {
      if (!failures[i].empty()) throw ComputationFailure(point(xs[i], 0.0) + ": " + failures[i]);
      row(xs[i], 0.0, vals[i][0], vals[i][1], vals[i][2], true);
    }
  } else if (cfg.method == "glm") {
    VolterraOptions opts;
    opts.n_max = cfg.n_max;
    for (double t : ts) {
      std::vector<PhiReconstruction> prof;
      try {
        prof = glm_phi_profile(xs, t, p, opts);
      } catch (const Error& e) {
        throw ComputationFailure("t = " + format_double(t) + ": " + e.what());
      }
      for (std::size_t i = 0; i < xs.size(); ++i) row(xs[i], t, 0.0, 0.0, prof[i].phi, false);
    }
    table.warnings.push_back("glm method: G and Gtilde need chi, which the GLM solve does not give");
  } else {
    std::vector<cplx> c;
    double st = 0.0;
    try {
      c = c_mu_coefficients(std::max(cfg.mu_max, 3), p);
      st = s_T(p);
    } catch (const Error& e) {
      throw ComputationFailure(std::string("coefficients: ") + e.what());
    }
    SeriesCoefficients s = SeriesCoefficients::from_c(c);
    s.c.resize(static_cast<std::size_t>(cfg.mu_max) + 1);
    const ExponentialConstants abc{cfg.A, cfg.B, cfg.C};
    for (double t : ts) {
      for (double x : xs) {
        const auto coords = LightconeCoords::from_xt(x, t);
        try {
          const auto res = correlators_lightcone(coords, s, p.m, st * st, abc);
          if (auto w = regime_warning(coords, p)) table.warnings.push_back(point(x, t) + ": " + *w);
          row(x, t, res.G, res.Gtilde, phi_lightcone(coords, s.c, p.m), true);
        } catch (const Error& e) {
          throw ComputationFailure(point(x, t) + ": " + e.what());
        }
      }
    }
  }
  return table;
}

Table cmd_scatter_check(const RunConfig& cfg) {
  cfg.validate();
  const ThermalParams p = params(cfg);
  std::vector<double> thetas;
  if (!cfg.theta.empty()) {
    thetas = parse_range(cfg.theta);
  } else {
    for (double mom : parse_range(cfg.p)) thetas.push_back(std::asinh(mom / p.m));
  }
  if (!(cfg.x_max > cfg.x_min)) throw ConfigError("need x_min < x_max");
  if (!(cfg.step > 0.0)) throw ConfigError("step must be positive");

  FieldProfile profile;
  try {
    if (cfg.zero_field) {
      profile = FieldProfile::zero(cfg.x_min, cfg.x_max);
    } else {
      TruncationPolicy pol;
      pol.n_max = cfg.n_max;
      pol.n_sigma = cfg.n_sigma;
      pol.n_mu = cfg.n_mu;
      profile = FieldProfile::form_factor(p, cfg.x_min, cfg.x_max, pol);
    }
    profile.decay_tol = cfg.decay_tol;
    profile.validate();
  } catch (const NonDecayedProfile& e) {
    throw ConfigError(e.what());
  } catch (const DomainError& e) {
    throw ConfigError(e.what());
  } catch (const Error& e) {
    throw ComputationFailure(std::string("field profile: ") + e.what());
  }

  JostOptions opts;
  opts.step = cfg.step;
  opts.stride = 1000;
  std::vector<JostComparison> results(thetas.size());
  std::vector<std::string> failures(thetas.size());
  parallel_for(thetas.size(), [&](std::size_t i) {
    try {
      if (cfg.zero_field) {
        const JostRun run = integrate_jost_plus(thetas[i], profile, p, opts);
        JostComparison& c = results[i];
        c.theta = thetas[i];
        c.a_num = run.a_num;
        c.b_num = run.b_num;
        c.a_exact = 1.0;
        c.b_exact = 0.0;
        c.rel_dev_a = std::abs(run.a_num - 1.0);
        c.rel_dev_b = std::abs(run.b_num);
        c.current_defect = run.current_defect();
        c.error_estimate = run.error_estimate;
      } else {
        results[i] = compare_jost(thetas[i], profile, p, opts);
      }
    } catch (const Error& e) {
      failures[i] = e.what();
    }
  });

  Table table;
  table.columns = {"theta", "p_theta", "a_num_re", "a_num_im", "a_exact_re", "a_exact_im",
                   "b_num_re", "b_num_im", "b_exact_re", "b_exact_im", "rel_dev",
                   "current_defect", "error_estimate", "pass"};
  bool all = true;
  for (std::size_t i = 0; i < thetas.size(); ++i) {
    if (!failures[i].empty()) {
      throw ComputationFailure("theta = " + format_double(thetas[i]) + ": " + failures[i]);
    }
    const auto& c = results[i];
    const bool pass = c.rel_dev() < cfg.tolerance;
    all = all && pass;
    table.rows.push_back({c.theta, p.m * std::sinh(c.theta), c.a_num.real(), c.a_num.imag(),
                          c.a_exact.real(), c.a_exact.imag(), c.b_num.real(), c.b_num.imag(),
                          c.b_exact.real(), c.b_exact.imag(), c.rel_dev(), c.current_defect,
                          c.error_estimate, pass});
  }
  table.summary["tolerance"] = cfg.tolerance;
  table.summary["result"] = all ? "PASS" : "FAIL";
  return table;
}

Table cmd_kernels(const RunConfig& cfg) {
  cfg.validate();
  const ThermalParams p = params(cfg);
  const auto js = parse_int_list(cfg.j);
  const auto xs = parse_range(cfg.x);
  const auto ts = parse_range(cfg.t);
  std::vector<KernelRep> reps;
  for (const auto& w : parse_word_list(cfg.representations)) {
    if (w == "residue") {
      reps.push_back(KernelRep::kResidueSum);
    } else if (w == "bessel") {
      reps.push_back(KernelRep::kBesselSeries);
    } else if (w == "direct") {
      reps.push_back(KernelRep::kDirect);
    } else {
      throw ConfigError("unknown representation '" + w + "' (residue, bessel, direct)");
    }
  }
  for (int j : js) {
    if (j < -2 || j > 0) throw ConfigError("j must be 0, -1 or -2");
  }

  struct Eval {
    cplx value;
    double error = NAN;
    std::string note;
    bool valid = false;
  };
  std::unique_ptr<ResidueKernel> residue;
  std::unique_ptr<BesselSeriesKernel> bessel;
  try {
    residue = std::make_unique<ResidueKernel>(p, cfg.n_max);
    bessel = std::make_unique<BesselSeriesKernel>(p, cfg.mu_max == 3 ? kDefaultMuMax : cfg.mu_max);
  } catch (const Error& e) {
    throw ComputationFailure(std::string("kernel setup: ") + e.what());
  }

  struct Job {
    int j;
    double t, x;
    KernelRep rep;
  };
  std::vector<Job> jobs;
  for (int j : js) {
    for (double t : ts) {
      for (double x : xs) {
        for (KernelRep rep : reps) jobs.push_back({j, t, x, rep});
      }
    }
  }
  std::vector<Eval> evals(jobs.size());
  std::vector<std::string> failures(jobs.size());
  parallel_for(jobs.size(), [&](std::size_t i) {
    const Job& jb = jobs[i];
    Eval& ev = evals[i];
    try {
      switch (jb.rep) {
        case KernelRep::kResidueSum: {
          ev.value = (*residue)(jb.j, jb.x, jb.t);
          ev.error = residue->tail_bound(jb.x, jb.t);
          if (ev.error > 1e-12 * std::max(1.0, std::abs(ev.value))) {
            throw TruncationError("n_max too small at this point");
          }
          break;
        }
        case KernelRep::kBesselSeries: {
          const auto r = bessel->evaluate(jb.j, jb.x, jb.t);
          ev.value = r.value;
          ev.error = r.tail_estimate;
          break;
        }
        case KernelRep::kDirect:
          ev.value = kernel_direct(jb.j, jb.x, jb.t, p);
          break;
      }
      ev.valid = true;
    } catch (const ValidityError& e) {
      ev.note = e.what();
    } catch (const TruncationError& e) {
      ev.note = e.what();
    } catch (const Error& e) {
      failures[i] = e.what();
    }
  });

  Table table;
  table.columns = {"j", "x", "t", "representation", "re", "im", "valid",
                   "error_estimate", "deviation", "note"};
  std::size_t k = 0;
  while (k < jobs.size()) {
    std::size_t end = k + reps.size();
    const Eval* ref = nullptr;
    for (std::size_t i = k; i < end; ++i) {
      const Job& jb = jobs[i];
      if (!failures[i].empty()) {
        throw ComputationFailure("j = " + std::to_string(jb.j) + ", " + point(jb.x, jb.t) + ": " +
                                 failures[i]);
      }
      const Eval& ev = evals[i];
      std::vector<Cell> r{static_cast<long>(jb.j), jb.x, jb.t, to_string(jb.rep)};
      if (ev.valid) {
        r.insert(r.end(), {ev.value.real(), ev.value.imag(), true, num(ev.error)});
        r.push_back(ref ? Cell(std::abs(ev.value - ref->value)) : Cell(std::monostate{}));
        if (!ref) ref = &ev;
        r.push_back(std::string());
      } else {
        r.insert(r.end(), {std::monostate{}, std::monostate{}, false, std::monostate{},
                           std::monostate{}, ev.note});
        table.warnings.push_back("j = " + std::to_string(jb.j) + ", " + point(jb.x, jb.t) + ", " +
                                 to_string(jb.rep) + ": invalid (" + ev.note + ")");
      }
      table.rows.push_back(std::move(r));
    }
    k = end;
  }
  return table;
}

Table cmd_glm_solve(const RunConfig& cfg) {
  cfg.validate();
  const ThermalParams p = params(cfg);
  const auto xs = parse_range(cfg.x);
  const auto ts = parse_range(cfg.t);
  if (xs.size() != 1 || ts.size() != 1) throw ConfigError("glm-solve takes a single x and t");
  VolterraOptions opts;
  opts.n_max = cfg.n_max;
  if (cfg.rule == "gauss") {
    opts.rule = NystromRule::kGaussLegendre;
  } else if (cfg.rule == "trapezoid") {
    opts.rule = NystromRule::kTrapezoid;
  } else {
    throw ConfigError("rule must be gauss or trapezoid");
  }
  VolterraSolution sol;
  std::vector<PhiReconstruction> phi;
  try {
    sol = volterra_solve(xs[0], ts[0], p, opts);
    phi = glm_phi_profile({xs[0]}, ts[0], p, opts);
  } catch (const DomainError& e) {
    throw ConfigError(e.what());
  } catch (const Error& e) {
    throw ComputationFailure(point(xs[0], ts[0]) + ": " + e.what());
  }
  Table table;
  table.columns = {"y",          "weight",      "U_plus_re",  "U_plus_im",
                   "U_minus_re", "U_minus_im",  "W_plus_re",  "W_plus_im",
                   "W_minus_re", "W_minus_im"};
  for (std::size_t i = 0; i < sol.y.size(); ++i) {
    table.rows.push_back({sol.y[i], sol.weights[i], sol.U[0][i].real(), sol.U[0][i].imag(),
                          sol.U[1][i].real(), sol.U[1][i].imag(), sol.W[0][i].real(),
                          sol.W[0][i].imag(), sol.W[1][i].real(), sol.W[1][i].imag()});
  }
  table.summary["x"] = sol.x;
  table.summary["t"] = sol.t;
  table.summary["L"] = sol.L;
  table.summary["nodes"] = sol.y.size();
  table.summary["residual"] = sol.residual;
  table.summary["condition"] = sol.condition;
  table.summary["phi_re"] = phi[0].phi.real();
  table.summary["phi_im"] = phi[0].phi.imag();
  return table;
}

Table cmd_asympt_verify(const RunConfig& cfg) {
  cfg.validate();
  if (cfg.draws < 1) throw ConfigError("draws must be >= 1");
  const ThermalParams p = params(cfg);
  Table table;
  table.columns = {"check", "value", "tolerance", "pass"};
  auto add = [&](const std::string& name, double value, double tol, bool pass) {
    table.rows.push_back({name, num(value), tol, pass});
  };
  try {
    std::mt19937_64 rng(cfg.seed);
    std::normal_distribution<double> normal;
    double res = 0.0, dev = 0.0;
    for (int i = 0; i < cfg.draws; ++i) {
      const cplx K(normal(rng), normal(rng)), Kt(normal(rng), normal(rng));
      const auto s = verify_appendixC_system(K, Kt, p.m);
      res = std::max(res, s.residual);
      dev = std::max(dev, s.deviation);
    }
    add("ansatz_residual_random", res, 1e-12, res < 1e-12);
    add("ansatz_deviation_random", dev, 1e-12, dev < 1e-12);
    const auto s0 = verify_appendixC_system(cplx(0, -1), cplx(0, -1), p.m);
    add("ansatz_deviation_K_minus_i", s0.deviation, 1e-12, s0.deviation < 1e-12);

    const auto u1 = u1_delta_weight(p);
    const double udev = std::max(std::abs(u1[0] - cplx(0, -1)), std::abs(u1[1] - cplx(0, 1)));
    add("u1_delta_weight_minus_i_i", udev, 1e-8, udev < 1e-8);

    const auto xi = xi_scaling_check(p, 1.0, 1.5, 10.0);
    add("xi_delta_cancellation_t", xi.at_t.delta_cancellation, 1e-6,
        xi.at_t.delta_cancellation < 1e-6);
    add("xi_delta_cancellation_2t", xi.at_2t.delta_cancellation, 1e-6,
        xi.at_2t.delta_cancellation < 1e-6);
    add("xi_residual_ratio_minus_leading_ratio", xi.residual_ratio - xi.leading_ratio, 0.0,
        xi.magnitude_passed);
    add("xi_residual_frequency_rel_dev",
        std::abs(xi.omega_measured - xi.omega_neglected_class) / xi.omega_neglected_class, 0.02,
        xi.frequency_passed);

    double kg = 0.0;
    for (const auto& c : {LightconeCoords{2.0, 30.0}, LightconeCoords{-2.0, 30.0},
                          LightconeCoords{0.5, 50.0}}) {
      for (int mu = 0; mu <= 3; ++mu) kg = std::max(kg, klein_gordon_residual(mu, c, p.m));
    }
    add("klein_gordon_max_rel_residual", kg, 1e-5, kg < 1e-5);

    double match = 0.0;
    for (const auto& c : {LightconeCoords{2.0, 30.0}, LightconeCoords{-2.0, 30.0}}) {
      const auto mt = lightcone_match(c, p);
      match = std::max(match, mt.difference / std::max(std::abs(mt.phi), 1e-300));
    }
    add("phi_lightcone_vs_minus_2i_F_m1_rel", match, 1e-12, match < 1e-12);
  } catch (const Error& e) {
    throw ComputationFailure(e.what());
  }
  std::size_t failed = 0;
  for (const auto& r : table.rows) failed += std::get<bool>(r[3]) ? 0 : 1;
  table.summary["checks"] = table.rows.size();
  table.summary["failed"] = failed;
  return table;
}

Table run_command(const RunConfig& cfg) {
  if (cfg.command == "corr") return cmd_corr(cfg);
  if (cfg.command == "scatter-check") return cmd_scatter_check(cfg);
  if (cfg.command == "kernels") return cmd_kernels(cfg);
  if (cfg.command == "glm-solve") return cmd_glm_solve(cfg);
  if (cfg.command == "asympt-verify") return cmd_asympt_verify(cfg);
  throw ConfigError("unknown command '" + cfg.command + "'");
}

void write_table(const Table& table, const RunConfig& cfg, std::ostream& out) {
  if (cfg.format == "json") {
    nlohmann::ordered_json doc;
    doc["meta"] = cfg.to_json();
    doc["rows"] = nlohmann::ordered_json::array();
    for (const auto& r : table.rows) {
      nlohmann::ordered_json row;
      for (std::size_t i = 0; i < table.columns.size(); ++i) {
        std::visit(
            [&](const auto& v) {
              using V = std::decay_t<decltype(v)>;
              if constexpr (std::is_same_v<V, std::monostate>) {
                row[table.columns[i]] = nullptr;
              } else {
                row[table.columns[i]] = v;
              }
            },
            r[i]);
      }
      doc["rows"].push_back(std::move(row));
    }
    if (!table.summary.is_null()) doc["summary"] = table.summary;
    out << doc.dump(2) << '\n';
    return;
  }
  for (std::size_t i = 0; i < table.columns.size(); ++i) {
    out << (i ? "," : "") << table.columns[i];
  }
  out << '\n';
  for (const auto& r : table.rows) {
    for (std::size_t i = 0; i < r.size(); ++i) {
      if (i) out << ',';
      std::visit(
          [&](const auto& v) {
            using V = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<V, double>) {
              out << format_double(v);
            } else if constexpr (std::is_same_v<V, long>) {
              out << v;
            } else if constexpr (std::is_same_v<V, bool>) {
              out << (v ? "true" : "false");
            } else if constexpr (std::is_same_v<V, std::string>) {
              if (v.find_first_of(",\"\n") != std::string::npos) {
                out << '"';
                for (char ch : v) out << (ch == '"' ? "\"\"" : std::string(1, ch));
                out << '"';
              } else {
                out << v;
              }
            }
          },
          r[i]);
    }
    out << '\n';
  }
}

}  // namespace thermal_ising::cli
