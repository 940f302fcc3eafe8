#include "lipkin/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <cctype>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <mutex>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "lipkin/meanfield.hpp"
#include "lipkin/rpa.hpp"

namespace lipkin {

namespace {

constexpr Method kAllMethods[] = {Method::exact, Method::mf,   Method::pmf,    Method::pmfv,
                                  Method::rpa,   Method::prpa, Method::kstates};

std::string format_number(double x) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.12g", x);
  return buf;
}

void fill_measures(ResultRow& row, const MeasureSet& m) {
  row.one_body_per_2omega = m.one_body_E / (2.0 * row.omega);
  row.updown_per_omega = m.updown_E / row.omega;
  row.concurrence = m.concurrence.value;
  row.scaled_concurrence = 0.5 * row.omega * m.concurrence.value;
  row.kind = m.concurrence.kind;
  row.negativity = m.negativity;
}

ResultRow exact_row(const ModelParams& p) {
  ResultRow row{p.omega, p.chi, p.vx / p.eps, Method::exact, 0, 0, 0, 0, 0, 0, 0,
                ConcurrenceKind::zero, 0, false};
  const GroundState gs = ground_state(p);
  row.energy = gs.energy;
  row.parity = gs.parity;
  row.degenerate = gs.degenerate;
  fill_measures(row, measures_from_coeffs(gs.coeffs, p.omega));
  return row;
}

ResultRow mf_row(const ModelParams& p) {
  ResultRow row{p.omega, p.chi, p.vx / p.eps, Method::mf, 0, 0, 0, 0, 0, 0, 0,
                ConcurrenceKind::zero, 0, false};
  const MFSolution sol = mf_solve(p);
  row.energy = sol.energy;
  row.theta = sol.theta;
  fill_measures(row, mf_measures(sol, p.chi, p.omega));
  return row;
}

ResultRow pmf_row(const ModelParams& p) {
  ResultRow row{p.omega, p.chi, p.vx / p.eps, Method::pmf, 0, 0, 0, 0, 0, 0, 0,
                ConcurrenceKind::zero, 0, false};
  const MFSolution sol = mf_solve(p);
  row.theta = sol.theta;
  int parity = 1;
  double energy = rayleigh_quotient(p, pmf_state(sol.theta, p.omega, 1).coeffs);
  const double e_odd = rayleigh_quotient(p, pmf_state(sol.theta, p.omega, -1).coeffs);
  if (e_odd < energy) {
    parity = -1;
    energy = e_odd;
  }
  row.parity = parity;
  row.energy = energy;
  fill_measures(row, pmf_measures(sol.theta, p.omega, parity));
  return row;
}

ResultRow pmfv_row(const ModelParams& p) {
  ResultRow row{p.omega, p.chi, p.vx / p.eps, Method::pmfv, 0, 0, 0, 0, 0, 0, 0,
                ConcurrenceKind::zero, 0, false};
  VariationalTheta best = pmf_variational_theta(p, 1);
  int parity = 1;
  const VariationalTheta odd = pmf_variational_theta(p, -1);
  if (odd.energy < best.energy) {
    best = odd;
    parity = -1;
  }
  row.parity = parity;
  row.theta = best.theta;
  row.energy = best.energy;
  fill_measures(row, pmf_measures(best.theta, p.omega, parity));
  return row;
}

ResultRow rpa_row(const ModelParams& p) {
  ResultRow row{p.omega, p.chi, p.vx / p.eps, Method::rpa, 0, 0, 0, 0, 0, 0, 0,
                ConcurrenceKind::zero, 0, false};
  const double vy = p.chi * p.vx;
  if (std::abs(p.vx - p.eps) < 1e-6 * p.eps) {
    // degenerate bosonization; substitute the exact value and flag the row
    const GroundState gs = ground_state(p);
    row.energy = gs.energy;
    fill_measures(row, measures_from_coeffs(gs.coeffs, p.omega));
    row.one_body_per_2omega = 0.0;
    row.updown_per_omega = 0.0;
    row.negativity = 0.0;
    row.degenerate = true;
    return row;
  }
  const Concurrence c = rpa_concurrence_asymptotic(p);
  row.concurrence = c.value;
  row.scaled_concurrence = 0.5 * p.omega * c.value;
  row.kind = c.kind;
  // vacuum energy of the quadratic boson form on top of the product state
  if (p.vx < p.eps) {
    const double lambda = std::sqrt((p.eps - p.vx) * (p.eps - vy));
    const double w = 0.5 * (p.vx + vy);
    row.energy = -0.5 * p.eps * p.omega + 0.5 * (lambda - (p.eps - w));
    row.theta = 0.0;
  } else {
    const MFSolution sol = mf_solve(p);
    const double c2 = (p.eps / p.vx) * (p.eps / p.vx);
    const double eps_p = p.eps * p.eps / p.vx;
    const double w_p = 0.5 * (p.vx * (3.0 * c2 - 2.0) + vy);
    const double lambda_p = std::sqrt(1.0 - c2) * std::sqrt(p.vx * (p.vx - vy));
    row.energy = sol.energy + 0.5 * (lambda_p - (eps_p - w_p));
    row.theta = sol.theta;
  }
  return row;
}

ResultRow prpa_row(const ModelParams& p) {
  ResultRow row{p.omega, p.chi, p.vx / p.eps, Method::prpa, 0, 0, 0, 0, 0, 0, 0,
                ConcurrenceKind::zero, 0, false};
  const PRPAState st = prpa_solve(p);
  row.energy = st.energy;
  row.parity = st.parity;
  row.theta = st.theta;
  fill_measures(row, measures_from_coeffs(st.coeffs, p.omega));
  return row;
}

struct Task {
  double chi;
  double vx;  // or the level K for kstates
  Method method;
};

std::vector<Task> build_tasks(const SweepConfig& cfg) {
  std::vector<Task> tasks;
  for (double chi : cfg.chi_list) {
    for (Method m : kAllMethods) {
      bool wanted = false;
      for (Method sel : cfg.methods) wanted = wanted || sel == m;
      if (!wanted) continue;
      if (m == Method::kstates) continue;
      for (int i = 0; i < cfg.steps; ++i) {
        const double t = cfg.steps > 1 ? double(i) / (cfg.steps - 1) : 0.0;
        const double vx = cfg.vx_min + t * (cfg.vx_max - cfg.vx_min);
        tasks.push_back({chi, vx, m});
      }
    }
    for (Method sel : cfg.methods)
      if (sel == Method::kstates)
        for (int k = 0; k <= cfg.omega; ++k) tasks.push_back({chi, double(k), Method::kstates});
  }
  // deterministic (chi, vx, method) order
  std::stable_sort(tasks.begin(), tasks.end(), [](const Task& a, const Task& b) {
    if (a.chi != b.chi) return a.chi < b.chi;
    if (a.vx != b.vx) return a.vx < b.vx;
    return int(a.method) < int(b.method);
  });
  return tasks;
}

}  // namespace

std::string_view method_name(Method m) {
  switch (m) {
    case Method::exact:
      return "exact";
    case Method::mf:
      return "mf";
    case Method::pmf:
      return "pmf";
    case Method::pmfv:
      return "pmfv";
    case Method::rpa:
      return "rpa";
    case Method::prpa:
      return "prpa";
    case Method::kstates:
      return "kstates";
  }
  return "unknown";
}

std::optional<Method> method_from_name(std::string_view name) {
  for (Method m : kAllMethods)
    if (method_name(m) == name) return m;
  return std::nullopt;
}

std::string result_header() {
  return "omega,chi,vx_over_eps,method,energy,parity,theta,one_body_E_per_2omega,"
         "updown_E_per_omega,concurrence,scaled_concurrence,concurrence_kind,"
         "negativity,degenerate_flag";
}

std::string format_row(const ResultRow& row) {
  std::string out;
  out += std::to_string(row.omega);
  out += ',';
  out += format_number(row.chi);
  out += ',';
  out += format_number(row.vx_over_eps);
  out += ',';
  out += method_name(row.method);
  out += ',';
  out += format_number(row.energy);
  out += ',';
  out += std::to_string(row.parity);
  out += ',';
  out += format_number(row.theta);
  out += ',';
  out += format_number(row.one_body_per_2omega);
  out += ',';
  out += format_number(row.updown_per_omega);
  out += ',';
  out += format_number(row.concurrence);
  out += ',';
  out += format_number(row.scaled_concurrence);
  out += ',';
  out += to_string(row.kind);
  out += ',';
  out += format_number(row.negativity);
  out += ',';
  out += row.degenerate ? '1' : '0';
  return out;
}

ResultRow evaluate_point(int omega, double eps, double chi, double vx, Method method) {
  ModelParams p{omega, eps, vx, chi};
  p.validate();
  switch (method) {
    case Method::exact:
      return exact_row(p);
    case Method::mf:
      return mf_row(p);
    case Method::pmf:
      return pmf_row(p);
    case Method::pmfv:
      return pmfv_row(p);
    case Method::rpa:
      return rpa_row(p);
    case Method::prpa:
      return prpa_row(p);
    default:
      throw std::invalid_argument("evaluate_point: kstates rows are indexed by K");
  }
}

ResultRow evaluate_k_state(int omega, double chi, int k) {
  ResultRow row{omega, chi, double(k), Method::kstates, 0, 0, 0, 0, 0, 0, 0,
                ConcurrenceKind::zero, 0, false};
  row.parity = (k % 2 == 0) ? 1 : -1;
  fill_measures(row, k_state_measures(omega, k));
  return row;
}

std::vector<ResultRow> run_sweep(const SweepConfig& cfg) {
  if (cfg.steps < 1) throw std::invalid_argument("sweep config: steps must be >= 1");
  if (cfg.vx_min < 0.0 || cfg.vx_max < cfg.vx_min)
    throw std::invalid_argument("sweep config: need 0 <= vx_min <= vx_max");
  if (cfg.methods.empty()) throw std::invalid_argument("sweep config: no methods selected");
  for (double chi : cfg.chi_list)
    if (chi < -1.0 || chi > 1.0)
      throw std::invalid_argument("sweep config: chi values must lie in [-1, 1]");

  const std::vector<Task> tasks = build_tasks(cfg);
  std::vector<ResultRow> rows(tasks.size());

  unsigned jobs = cfg.jobs > 0 ? unsigned(cfg.jobs) : std::thread::hardware_concurrency();
  jobs = std::max(1u, std::min<unsigned>(jobs, tasks.size() ? tasks.size() : 1));

  std::atomic<std::size_t> next{0};
  std::atomic<bool> failed{false};
  std::string error_message;
  std::mutex error_mutex;
  const auto worker = [&] {
    for (;;) {
      const std::size_t i = next.fetch_add(1);
      if (i >= tasks.size() || failed.load()) break;
      const Task& t = tasks[i];
      try {
        rows[i] = t.method == Method::kstates
                      ? evaluate_k_state(cfg.omega, t.chi, int(t.vx))
                      : evaluate_point(cfg.omega, cfg.eps, t.chi, t.vx * cfg.eps, t.method);
      } catch (const std::exception& e) {
        const std::scoped_lock lock(error_mutex);
        failed.store(true);
        if (error_message.empty()) error_message = e.what();
      }
    }
  };

  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned j = 0; j < jobs; ++j) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }
  if (failed.load()) throw std::runtime_error("sweep evaluation failed: " + error_message);
  return rows;
}

std::string sweep_csv(const SweepConfig& cfg, std::string* plotscript) {
  const std::vector<ResultRow> rows = run_sweep(cfg);
  std::string csv = result_header();
  csv += '\n';
  for (const ResultRow& r : rows) {
    csv += format_row(r);
    csv += '\n';
  }

  if (plotscript && cfg.emit == EmitMode::plotscript) {
    const std::string data = cfg.output_path.empty() ? "sweep.csv" : cfg.output_path;
    std::ostringstream gp;
    gp << "# gnuplot script for the sweep written to " << data << "\n";
    gp << "set datafile separator \",\"\n";
    gp << "set key outside\n";
    gp << "set xlabel \"v_x/eps\"\n";
    gp << "set ylabel \"intensive measures\"\n";
    gp << "plot \\\n";
    bool first = true;
    for (double chi : cfg.chi_list)
      for (Method m : cfg.methods) {
        const char* cols[] = {"8", "9", "11", "13"};
        const char* labels[] = {"E/(2*omega)", "Eud/omega", "omega*C/2", "negativity"};
        for (int c = 0; c < 4; ++c) {
          if (!first) gp << ", \\\n";
          first = false;
          gp << "  \"" << data << "\" skip 1 using (column(2)==" << format_number(chi)
             << " && strcol(4) eq \"" << method_name(m) << "\" ? column(3) : NaN):" << cols[c]
             << " with lines title \"" << method_name(m) << " chi=" << format_number(chi) << " "
             << labels[c] << "\"";
        }
      }
    gp << "\n";
    *plotscript = gp.str();
  }
  return csv;
}

void write_sweep_outputs(const SweepConfig& cfg, std::ostream& fallback) {
  std::string script;
  const std::string csv = sweep_csv(cfg, &script);
  if (cfg.output_path.empty()) {
    fallback << csv;
  } else {
    std::ofstream out(cfg.output_path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open output path: " + cfg.output_path);
    out << csv;
  }
  if (cfg.emit == EmitMode::plotscript) {
    const std::string path = (cfg.output_path.empty() ? "sweep.csv" : cfg.output_path) + ".gp";
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open plot script path: " + path);
    out << script;
  }
}

SweepConfig figure_preset(const std::string& name) {
  SweepConfig cfg;
  cfg.omega = 50;
  cfg.eps = 1.0;
  cfg.vx_min = 0.0;
  cfg.vx_max = 3.0;
  cfg.steps = 300;
  if (name == "fig1") {
    cfg.chi_list = {-0.5, 0.5, 1.0};
    cfg.methods = {Method::exact};
  } else if (name == "fig3") {
    cfg.chi_list = {1.0};
    cfg.steps = 1;
    cfg.methods = {Method::kstates};
  } else if (name == "fig4") {
    cfg.chi_list = {0.5, 1.0};
    cfg.methods = {Method::exact, Method::mf, Method::pmf};
  } else if (name == "fig5") {
    cfg.chi_list = {0.0, 0.5};
    cfg.methods = {Method::exact, Method::pmfv};
  } else if (name == "fig6") {
    cfg.chi_list = {0.0, 0.5};
    cfg.methods = {Method::exact, Method::rpa, Method::prpa};
  } else {
    throw std::invalid_argument("unknown figure preset: " + name);
  }
  return cfg;
}

SweepConfig parse_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open config file: " + path);
  SweepConfig cfg;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    const auto notspace = [](unsigned char ch) { return !std::isspace(ch); };
    line.erase(line.begin(), std::find_if(line.begin(), line.end(), notspace));
    line.erase(std::find_if(line.rbegin(), line.rend(), notspace).base(), line.end());
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos)
      throw std::runtime_error(path + ":" + std::to_string(lineno) + ": expected key = value");
    std::string key = line.substr(0, eq);
    std::string value = line.substr(eq + 1);
    key.erase(std::find_if(key.rbegin(), key.rend(), notspace).base(), key.end());
    value.erase(value.begin(), std::find_if(value.begin(), value.end(), notspace));

    const auto parse_list = [&notspace](const std::string& text) {
      std::vector<std::string> items;
      std::stringstream ss(text);
      std::string item;
      while (std::getline(ss, item, ',')) {
        item.erase(item.begin(), std::find_if(item.begin(), item.end(), notspace));
        item.erase(std::find_if(item.rbegin(), item.rend(), notspace).base(), item.end());
        items.push_back(item);
      }
      return items;
    };
    try {
      if (key == "omega") {
        cfg.omega = std::stoi(value);
      } else if (key == "eps") {
        cfg.eps = std::stod(value);
      } else if (key == "chi") {
        cfg.chi_list.clear();
        for (const std::string& item : parse_list(value)) cfg.chi_list.push_back(std::stod(item));
      } else if (key == "vx_min") {
        cfg.vx_min = std::stod(value);
      } else if (key == "vx_max") {
        cfg.vx_max = std::stod(value);
      } else if (key == "steps") {
        cfg.steps = std::stoi(value);
      } else if (key == "methods") {
        cfg.methods.clear();
        for (const std::string& item : parse_list(value)) {
          const auto m = method_from_name(item);
          if (!m) throw std::runtime_error("unknown method: " + item);
          cfg.methods.push_back(*m);
        }
      } else if (key == "out") {
        cfg.output_path = value;
      } else if (key == "emit") {
        if (value == "table")
          cfg.emit = EmitMode::table;
        else if (value == "plotscript")
          cfg.emit = EmitMode::plotscript;
        else
          throw std::runtime_error("emit must be table or plotscript");
      } else if (key == "jobs") {
        cfg.jobs = std::stoi(value);
      } else {
        throw std::runtime_error("unknown key: " + key);
      }
    } catch (const std::invalid_argument&) {
      throw std::runtime_error(path + ":" + std::to_string(lineno) + ": bad value for " + key);
    }
  }
  return cfg;
}

}  // namespace lipkin
