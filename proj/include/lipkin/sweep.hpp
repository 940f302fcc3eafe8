#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "lipkin/measures.hpp"

namespace lipkin {

enum class Method { exact, mf, pmf, pmfv, rpa, prpa, kstates };

std::string_view method_name(Method m);
std::optional<Method> method_from_name(std::string_view name);

enum class EmitMode { table, plotscript };

/// One sweep over a coupling grid, for a set of anisotropies and methods.
/// The grid is `steps` evenly spaced points including both endpoints
/// (steps = 1 evaluates vx_min only). The kstates method ignores the grid
/// and emits one row per level K = 0..omega instead.
struct SweepConfig {
  int omega = 50;
  double eps = 1.0;
  std::vector<double> chi_list = {0.5};
  double vx_min = 0.0;  // in units of eps
  double vx_max = 3.0;
  int steps = 300;
  std::vector<Method> methods = {Method::exact};
  std::string output_path;  // empty writes to stdout
  EmitMode emit = EmitMode::table;
  int jobs = 0;  // 0 picks the available hardware parallelism
};

/// One output record. Entropy columns are the intensive combinations
/// E/(2*omega) and E^{+-}/omega; scaled_concurrence is omega*C/2. For the
/// kstates method vx_over_eps carries the level index K. parity 0 means
/// no definite parity (mean field, unprojected states).
struct ResultRow {
  int omega = 0;
  double chi = 0.0;
  double vx_over_eps = 0.0;
  Method method = Method::exact;
  double energy = 0.0;
  int parity = 0;
  double theta = 0.0;
  double one_body_per_2omega = 0.0;
  double updown_per_omega = 0.0;
  double concurrence = 0.0;
  double scaled_concurrence = 0.0;
  ConcurrenceKind kind = ConcurrenceKind::zero;
  double negativity = 0.0;
  bool degenerate = false;
};

std::string result_header();
std::string format_row(const ResultRow& row);

/// Evaluate one parameter point with one method.
ResultRow evaluate_point(int omega, double eps, double chi, double vx, Method method);

/// Row for the basis state |K> (the kstates method).
ResultRow evaluate_k_state(int omega, double chi, int k);

/// Full sweep in deterministic (chi, vx, method) order; grid points are
/// evaluated in parallel and merged back in order, so the result does not
/// depend on the worker count.
std::vector<ResultRow> run_sweep(const SweepConfig& cfg);

/// Render the sweep as CSV; with EmitMode::plotscript also returns the
/// plotting script text through *plotscript (when non-null).
std::string sweep_csv(const SweepConfig& cfg, std::string* plotscript = nullptr);

/// Run a sweep and write its outputs per the config (file or stdout).
void write_sweep_outputs(const SweepConfig& cfg, std::ostream& fallback);

/// Canonical configs named fig1, fig3, fig4, fig5, fig6.
SweepConfig figure_preset(const std::string& name);

/// Key = value configuration file; unknown keys are an error.
SweepConfig parse_config_file(const std::string& path);

}  // namespace lipkin
