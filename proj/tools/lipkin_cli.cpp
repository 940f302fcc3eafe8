#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "lipkin/sweep.hpp"
#include "lipkin/verify.hpp"

namespace {

struct SweepFlags {
  int omega = -1;
  double eps = -1.0;
  std::vector<double> chi;
  double vx_min = -1.0, vx_max = -1.0;
  int steps = -1;
  std::vector<std::string> methods;
  std::string out;
  std::string emit;
  int jobs = -1;
};

void add_sweep_flags(CLI::App* cmd, SweepFlags& f) {
  cmd->add_option("--omega", f.omega, "number of sites (= particle number)");
  cmd->add_option("--eps", f.eps, "level splitting (default 1)");
  cmd->add_option("--chi", f.chi, "anisotropy values")->delimiter(',');
  cmd->add_option("--vx-min", f.vx_min, "lowest coupling, in units of eps");
  cmd->add_option("--vx-max", f.vx_max, "highest coupling, in units of eps");
  cmd->add_option("--steps", f.steps, "number of grid points (endpoints included)");
  cmd->add_option("--methods", f.methods, "any of exact,mf,pmf,pmfv,rpa,prpa,kstates")
      ->delimiter(',');
  cmd->add_option("--out", f.out, "output file (default stdout)");
  cmd->add_option("--emit", f.emit, "table or plotscript")
      ->check(CLI::IsMember({"table", "plotscript"}));
  cmd->add_option("--jobs", f.jobs, "worker threads (default: hardware)");
}

void apply_sweep_flags(const SweepFlags& f, lipkin::SweepConfig& cfg) {
  if (f.omega >= 0) cfg.omega = f.omega;
  if (f.eps >= 0.0) cfg.eps = f.eps;
  if (!f.chi.empty()) cfg.chi_list = f.chi;
  if (f.vx_min >= 0.0) cfg.vx_min = f.vx_min;
  if (f.vx_max >= 0.0) cfg.vx_max = f.vx_max;
  if (f.steps >= 0) cfg.steps = f.steps;
  if (!f.methods.empty()) {
    cfg.methods.clear();
    for (const std::string& name : f.methods) {
      const auto m = lipkin::method_from_name(name);
      if (!m) throw CLI::ValidationError("--methods", "unknown method: " + name);
      cfg.methods.push_back(*m);
    }
  }
  if (!f.out.empty()) cfg.output_path = f.out;
  if (!f.emit.empty())
    cfg.emit = f.emit == "plotscript" ? lipkin::EmitMode::plotscript : lipkin::EmitMode::table;
  if (f.jobs >= 0) cfg.jobs = f.jobs;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact and approximate entanglement measures for the Lipkin model"};
  app.require_subcommand(1);

  // solve: one parameter point
  auto* solve = app.add_subcommand("solve", "evaluate a single parameter point");
  int s_omega = 50;
  double s_eps = 1.0, s_vx = 1.0, s_chi = 0.5;
  std::vector<std::string> s_methods = {"exact"};
  solve->add_option("--omega", s_omega, "number of sites");
  solve->add_option("--eps", s_eps, "level splitting");
  solve->add_option("--vx", s_vx, "coupling, in units of eps");
  solve->add_option("--chi", s_chi, "anisotropy");
  solve->add_option("--methods", s_methods, "methods to evaluate")->delimiter(',');

  // sweep: grid evaluation
  auto* sweep = app.add_subcommand("sweep", "run a parameter sweep");
  SweepFlags sweep_flags;
  std::string config_path;
  sweep->add_option("--config", config_path, "key = value config file");
  add_sweep_flags(sweep, sweep_flags);

  // figure: canonical presets
  auto* figure = app.add_subcommand("figure", "run a canonical figure preset");
  std::string figure_name;
  std::string figure_out;
  std::string figure_emit;
  int figure_jobs = -1;
  figure->add_option("name", figure_name, "fig1, fig3, fig4, fig5 or fig6")->required();
  figure->add_option("--out", figure_out, "output file (default stdout)");
  figure->add_option("--emit", figure_emit, "table or plotscript")
      ->check(CLI::IsMember({"table", "plotscript"}));
  figure->add_option("--jobs", figure_jobs, "worker threads");

  // verify: acceptance suite
  auto* verify = app.add_subcommand("verify", "run the verification suite");
  std::string level = "full";
  verify->add_option("--level", level, "quick or full")
      ->check(CLI::IsMember({"quick", "full"}));

  CLI11_PARSE(app, argc, argv);

  try {
    if (solve->parsed()) {
      std::cout << lipkin::result_header() << "\n";
      for (const std::string& name : s_methods) {
        const auto m = lipkin::method_from_name(name);
        if (!m) throw std::runtime_error("unknown method: " + name);
        if (*m == lipkin::Method::kstates) {
          for (int k = 0; k <= s_omega; ++k)
            std::cout << lipkin::format_row(lipkin::evaluate_k_state(s_omega, s_chi, k)) << "\n";
        } else {
          std::cout << lipkin::format_row(
                           lipkin::evaluate_point(s_omega, s_eps, s_chi, s_vx * s_eps, *m))
                    << "\n";
        }
      }
    } else if (sweep->parsed()) {
      lipkin::SweepConfig cfg;
      if (!config_path.empty()) cfg = lipkin::parse_config_file(config_path);
      apply_sweep_flags(sweep_flags, cfg);
      lipkin::write_sweep_outputs(cfg, std::cout);
    } else if (figure->parsed()) {
      lipkin::SweepConfig cfg = lipkin::figure_preset(figure_name);
      cfg.output_path = figure_out;
      if (!figure_emit.empty())
        cfg.emit = figure_emit == "plotscript" ? lipkin::EmitMode::plotscript
                                               : lipkin::EmitMode::table;
      if (figure_jobs >= 0) cfg.jobs = figure_jobs;
      lipkin::write_sweep_outputs(cfg, std::cout);
    } else if (verify->parsed()) {
      const auto lvl = level == "quick" ? lipkin::VerifyLevel::quick : lipkin::VerifyLevel::full;
      return lipkin::print_verification(lvl, std::cout) == 0 ? 0 : 1;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
