#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "commands.hpp"

namespace cli = thermal_ising::cli;

namespace {

void add_common(CLI::App* sub, cli::RunConfig& cfg) {
  sub->add_option("--m", cfg.m, "particle mass");
  sub->add_option("--T", cfg.T, "temperature");
  sub->add_option("--format", cfg.format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
  sub->add_option("-o,--output", cfg.output_path, "output file (default stdout)");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Finite-temperature Ising twist-field correlators by inverse scattering"};
  app.require_subcommand(1);
  cli::RunConfig cfg;

  auto* corr = app.add_subcommand("corr", "two-point functions along an (x, t) grid");
  add_common(corr, cfg);
  corr->add_option("--method", cfg.method, "formfactor, glm or asymptotic");
  corr->add_option("--x", cfg.x, "x range a:b:n, value or list");
  corr->add_option("--t", cfg.t, "t range a:b:n, value or list");
  corr->add_option("--n-max", cfg.n_max, "circle modes per side");
  corr->add_option("--n-sigma", cfg.n_sigma, "max particles in the sigma series");
  corr->add_option("--n-mu", cfg.n_mu, "max particles in the mu series");
  corr->add_option("--mu-max", cfg.mu_max, "light-cone series order");
  corr->add_option("--A", cfg.A, "exponential constant A");
  corr->add_option("--B", cfg.B, "exponential constant B");
  corr->add_option("--C", cfg.C, "exponential constant C");

  auto* scatter = app.add_subcommand("scatter-check", "Jost data of the field profile vs closed form");
  add_common(scatter, cfg);
  scatter->add_option("--theta", cfg.theta, "rapidities (overrides --p)");
  scatter->add_option("--p", cfg.p, "momenta p_theta = m sinh theta");
  scatter->add_option("--x-min", cfg.x_min, "left end of the domain");
  scatter->add_option("--x-max", cfg.x_max, "right end of the domain");
  scatter->add_option("--step", cfg.step, "RK4 step");
  scatter->add_option("--decay-tol", cfg.decay_tol, "max |phi| at the domain ends");
  scatter->add_option("--tolerance", cfg.tolerance, "relative PASS bar");
  scatter->add_flag("--zero-field", cfg.zero_field, "use phi = 0");
  scatter->add_option("--n-max", cfg.n_max, "circle modes per side");
  int scatter_n_sigma = 6, scatter_n_mu = 5;
  scatter->add_option("--n-sigma", scatter_n_sigma, "max particles in the sigma series");
  scatter->add_option("--n-mu", scatter_n_mu, "max particles in the mu series");

  auto* kernels = app.add_subcommand("kernels", "GLM kernels F_j in several representations");
  add_common(kernels, cfg);
  kernels->add_option("--j", cfg.j, "kernel indices among 0, -1, -2");
  kernels->add_option("--x", cfg.x, "x range");
  kernels->add_option("--t", cfg.t, "t range");
  kernels->add_option("--representations", cfg.representations, "residue, bessel, direct");
  kernels->add_option("--n-max", cfg.n_max, "residue poles per side");
  kernels->add_option("--mu-max", cfg.mu_max, "Bessel series order cap");

  auto* glm = app.add_subcommand("glm-solve", "Volterra solution grids at one (x, t)");
  add_common(glm, cfg);
  glm->add_option("--x", cfg.x, "x");
  glm->add_option("--t", cfg.t, "t");
  glm->add_option("--rule", cfg.rule, "gauss or trapezoid");
  glm->add_option("--n-max", cfg.n_max, "residue poles per side");

  auto* verify = app.add_subcommand("asympt-verify", "8x8 ansatz system and light-cone checks");
  add_common(verify, cfg);
  verify->add_option("--draws", cfg.draws, "random (K, K~) draws");
  verify->add_option("--seed", cfg.seed, "seed for the draws");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? cli::kExitOk : cli::kExitConfig;
  }
  cfg.command = app.get_subcommands().front()->get_name();
  if (cfg.command == "scatter-check") {
    cfg.n_sigma = scatter_n_sigma;
    cfg.n_mu = scatter_n_mu;
  }
  if (cfg.command == "glm-solve" && glm->count("--x") == 0) cfg.x = "3";

  try {
    const cli::Table table = cli::run_command(cfg);
    for (const auto& w : table.warnings) std::cerr << "warning: " << w << '\n';
    if (cfg.output_path.empty()) {
      cli::write_table(table, cfg, std::cout);
    } else {
      std::ofstream out(cfg.output_path);
      if (!out) {
        std::cerr << "error: cannot open " << cfg.output_path << '\n';
        return cli::kExitConfig;
      }
      cli::write_table(table, cfg, out);
    }
    if (cfg.command == "scatter-check" || cfg.command == "asympt-verify") {
      if (!table.summary.is_null()) std::cerr << table.summary.dump() << '\n';
    }
    return cli::kExitOk;
  } catch (const cli::ConfigError& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return cli::kExitConfig;
  } catch (const cli::ComputationFailure& e) {
    std::cerr << "computation failed: " << e.what() << '\n';
    return cli::kExitComputation;
  }
}
