#include "lipkin/verify.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <ostream>
#include <sstream>

#include "lipkin/meanfield.hpp"
#include "lipkin/rpa.hpp"
#include "lipkin/sweep.hpp"

namespace lipkin {

namespace {

std::string fmt(double x) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.6g", x);
  return buf;
}

struct Check {
  bool pass = true;
  double worst = 0.0;
  std::string note;

  void bound(double measured, double tol) {
    worst = std::max(worst, measured);
    if (!(measured <= tol)) pass = false;
  }
  void require(bool ok, const std::string& why) {
    if (!ok) {
      pass = false;
      if (note.empty()) note = why;
    }
  }
};

double isotropic_level_energy(int omega, double eps, double vx, int k) {
  const double s = 0.5 * omega;
  const double m = k - s;
  const double coupling = omega > 1 ? vx / (omega - 1) : 0.0;
  return eps * m - coupling * (s * (s + 1.0) - m * m - s);
}

// ---------------------------------------------------------------- criteria

CriterionResult c1_isotropic_spectrum() {
  CriterionResult r{"1", "isotropic spectrum and level crossings", false, "", 0};
  Check chk;
  for (int omega = 2; omega <= 12; ++omega)
    for (double vx : {0.3, 1.7, 3.2})
      chk.bound(verify_detail::isotropic_spectrum_error(omega, 1.0, vx), 1e-10);
  for (double vx : {0.3, 1.7, 3.2})
    chk.bound(verify_detail::isotropic_spectrum_error(50, 1.0, vx), 1e-10);

  const int omega = 50;
  for (int k = 0; k + 1 <= omega / 2; ++k) {
    const double vx_cross = double(omega - 1) / (omega - 1 - 2 * k);
    const auto below = isotropic_gs_level({omega, 1.0, vx_cross * (1.0 - 1e-9), 1.0});
    const auto above = isotropic_gs_level({omega, 1.0, vx_cross * (1.0 + 1e-9), 1.0});
    chk.require(below.level == k, "level below crossing " + std::to_string(k));
    chk.require(above.level == k + 1, "level above crossing " + std::to_string(k));
  }
  // exact ties (checked where the crossing coupling is exactly representable)
  const auto tie0 = isotropic_gs_level({omega, 1.0, 1.0, 1.0});
  const auto tie24 = isotropic_gs_level({omega, 1.0, 49.0, 1.0});
  chk.require(tie0.level == 0 && tie0.degenerate, "tie at the first crossing");
  chk.require(tie24.level == 24 && tie24.degenerate, "tie at the last crossing");
  r.pass = chk.pass;
  r.detail = "max_rel_err=" + fmt(chk.worst) + " tol=1e-10" +
             (chk.note.empty() ? "" : " [" + chk.note + "]");
  return r;
}

CriterionResult c2_oracle_equivalence(bool small_sizes_only) {
  CriterionResult r{"2", "concurrence closed form vs R-matrix oracle", false, "", 0};
  std::vector<int> omegas = {3, 4, 5, 6, 7, 8, 9, 10, 11, 12};
  if (!small_sizes_only) omegas.push_back(50);
  int count = 0;
  Check chk;
  for (int omega : omegas)
    for (double chi : {-1.0, -0.5, 0.0, 0.5, 1.0})
      for (int i = 0; i < 10; ++i) {
        const double vx = 0.25 + 0.5 * i;
        const GroundState gs = ground_state({omega, 1.0, vx, chi});
        const PairReducedState pair = reduced_pair_state(spin_moments(gs, omega), omega);
        const double closed = concurrence_closed(pair).value;
        const double oracle = concurrence_oracle(pair);
        chk.bound(std::abs(closed - oracle), 1e-9);
        ++count;
      }
  r.pass = chk.pass && count >= (small_sizes_only ? 500 : 550);
  r.detail = "states=" + std::to_string(count) + " max_diff=" + fmt(chk.worst) + " tol=1e-9";
  return r;
}

CriterionResult c3_point_values() {
  CriterionResult r{"3", "closed-form point values at omega=50", false, "", 0};
  const int omega = 50;
  Check chk;
  const MeasureSet k1 = k_state_measures(omega, 1);
  const MeasureSet k2 = k_state_measures(omega, 2);
  const MeasureSet k25 = k_state_measures(omega, 25);
  chk.bound(std::abs(k1.concurrence.value - 0.04), 1e-12);
  chk.bound(std::abs(k25.concurrence.value - 1.0 / 49.0), 1e-12);
  chk.bound(std::abs(k25.negativity - 50.0 / 49.0 / 4.0), 1e-12);
  chk.bound(std::abs(k25.one_body_E / (2.0 * omega) - 1.0), 1e-12);
  const double ratio = k2.concurrence.value / k1.concurrence.value;
  const double target = 2.0 - std::sqrt(2.0);
  chk.require(std::abs(ratio - target) <= 0.02 * target,
              "C2/C1=" + fmt(ratio) + " vs " + fmt(target));
  r.pass = chk.pass;
  r.detail = "max_abs_err=" + fmt(chk.worst) + " tol=1e-12, C2/C1=" + fmt(ratio) +
             (chk.note.empty() ? "" : " [" + chk.note + "]");
  return r;
}

CriterionResult c4_two_site_identities() {
  CriterionResult r{"4", "omega=2 equivalence of all measures", false, "", 0};
  Check chk;
  for (double chi : {-1.0, -0.5, 0.0, 0.5, 1.0})
    for (int i = 0; i < 10; ++i) {
      const double vx = 0.25 + 0.35 * i;
      const GroundState gs = ground_state({2, 1.0, vx, chi});
      const MeasureSet m = measures_from_coeffs(gs.coeffs, 2);
      const double f = spin_moments(gs, 2).kmean / 2.0;
      chk.bound(std::abs(m.concurrence.value - 2.0 * m.negativity), 1e-10);
      chk.bound(std::abs(m.one_body_E - 4.0 * m.updown_E), 1e-10);
      chk.bound(std::abs(m.one_body_E - 4.0 * binary_entropy(f)), 1e-10);
    }
  // closed-form two-level solution at vx = 2, chi = 0
  const GroundState gs = ground_state({2, 1.0, 2.0, 0.0});
  const MeasureSet m = measures_from_coeffs(gs.coeffs, 2);
  const double f_oracle = std::sin(std::numbers::pi / 8) * std::sin(std::numbers::pi / 8);
  chk.bound(std::abs(m.concurrence.value - 1.0 / std::sqrt(2.0)), 1e-10);
  chk.bound(std::abs(m.one_body_E - 4.0 * binary_entropy(f_oracle)), 1e-10);
  chk.bound(std::abs(gs.energy + std::sqrt(2.0)), 1e-10);
  r.pass = chk.pass;
  r.detail = "max_abs_err=" + fmt(chk.worst) + " tol=1e-10, E(vx=2)=" + fmt(m.one_body_E);
  return r;
}

CriterionResult c5_separability_point() {
  CriterionResult r{"5", "separability point chi=0.5", false, "", 0};
  const int omega = 50;
  const double chi = 0.5;
  const double vx_f = std::sqrt(2.0);
  Check chk;

  const ModelParams pf{omega, 1.0, vx_f, chi};
  const double theta_f = std::acos(std::sqrt(chi));
  const double residual = eigenstate_residual(pf, mf_coefficients(theta_f, omega));
  chk.require(residual <= 1e-8 * hamiltonian_norm(pf),
              "product-state residual=" + fmt(residual));

  const double below = 1.414, above = 1.415;  // 1e-3 grid points bracketing sqrt(2)
  const ResultRow rb = evaluate_point(omega, 1.0, chi, below, Method::exact);
  const ResultRow ra = evaluate_point(omega, 1.0, chi, above, Method::exact);
  chk.bound(rb.concurrence, 1e-6);
  chk.bound(ra.concurrence, 1e-6);
  chk.require(rb.kind == ConcurrenceKind::parallel, "kind below should be parallel");
  chk.require(ra.kind == ConcurrenceKind::antiparallel, "kind above should be antiparallel");

  const ResultRow ref = evaluate_point(omega, 1.0, chi, 1.3, Method::exact);
  for (const ResultRow* row : {&rb, &ra}) {
    chk.require(std::abs(row->negativity - ref.negativity) <= 0.05 * std::abs(ref.negativity),
                "negativity drift " + fmt(row->negativity) + " vs " + fmt(ref.negativity));
    chk.require(std::abs(row->one_body_per_2omega - ref.one_body_per_2omega) <=
                    0.05 * std::abs(ref.one_body_per_2omega),
                "one-body drift " + fmt(row->one_body_per_2omega) + " vs " +
                    fmt(ref.one_body_per_2omega));
  }
  r.pass = chk.pass;
  r.detail = "C(" + fmt(below) + ")=" + fmt(rb.concurrence) + " C(" + fmt(above) + ")=" +
             fmt(ra.concurrence) + " residual=" + fmt(residual) +
             (chk.note.empty() ? "" : " [" + chk.note + "]");
  return r;
}

CriterionResult c6_projected_meanfield() {
  CriterionResult r{"6", "mean-field with parity restoration vs exact", false, "", 0};
  const int omega = 50;
  Check chk;
  double worst_rel = 0.0;
  for (double vx : {1.5, 1.75, 2.0, 2.25, 2.5, 2.75, 3.0}) {
    const ResultRow ex = evaluate_point(omega, 1.0, 0.5, vx, Method::exact);
    const ResultRow pm = evaluate_point(omega, 1.0, 0.5, vx, Method::pmf);
    const double rel = std::abs(ex.energy - pm.energy) / std::abs(ex.energy);
    worst_rel = std::max(worst_rel, rel);
    chk.require(rel <= 0.05, "energy mismatch " + fmt(rel) + " at vx=" + fmt(vx));
    const double gap = omega * ex.updown_per_omega - omega * ex.one_body_per_2omega;
    chk.require(gap >= -1.5 && gap <= 0.5, "up-down offset " + fmt(gap) + " at vx=" + fmt(vx));
  }
  for (double vx : {2.0, 3.0}) {
    const ResultRow ex = evaluate_point(omega, 1.0, 0.5, vx, Method::exact);
    const double s2 = 1.0 - 1.0 / (vx * vx);
    chk.require(std::abs(ex.negativity - 0.5 * s2) <= 0.01,
                "negativity chi=0.5 at vx=" + fmt(vx));
  }
  {
    const ResultRow ex = evaluate_point(omega, 1.0, 1.0, 3.0, Method::exact);
    const double s2 = 1.0 - 1.0 / 9.0;
    chk.require(std::abs(ex.negativity - 0.25 * s2) <= 0.01, "negativity chi=1 at vx=3");
  }
  r.pass = chk.pass;
  r.detail = "max_energy_rel=" + fmt(worst_rel) + " tol=0.05" +
             (chk.note.empty() ? "" : " [" + chk.note + "]");
  return r;
}

CriterionResult c7_rpa_concurrence() {
  CriterionResult r{"7", "bosonized concurrence vs exact (asymptotic and finite size)",
                    false, "", 0};
  const int omega = 50;
  Check chk;
  double worst_arpa = 0.0, worst_prpa = 0.0;
  std::vector<double> grid;
  for (int i = 1; i <= 8; ++i) grid.push_back(0.1 * i);
  for (int i = 13; i <= 30; ++i) grid.push_back(0.1 * i);
  for (double chi : {0.0, 0.5}) {
    for (double vx : grid) {
      if (chi == 0.5 && std::abs(vx - std::sqrt(2.0)) <= 0.05) continue;
      const ResultRow ex = evaluate_point(omega, 1.0, chi, vx, Method::exact);
      const ResultRow ar = evaluate_point(omega, 1.0, chi, vx, Method::rpa);
      const ResultRow pr = evaluate_point(omega, 1.0, chi, vx, Method::prpa);
      const double da = std::abs(ex.scaled_concurrence - ar.scaled_concurrence);
      const double dp = std::abs(ex.scaled_concurrence - pr.scaled_concurrence);
      worst_arpa = std::max(worst_arpa, da);
      worst_prpa = std::max(worst_prpa, dp);
      chk.require(da <= 0.08, "asymptotic off by " + fmt(da) + " at chi=" + fmt(chi) +
                                  " vx=" + fmt(vx));
      chk.require(dp <= 0.04, "finite-size off by " + fmt(dp) + " at chi=" + fmt(chi) +
                                  " vx=" + fmt(vx));
    }
    // continuity of the finite-size curve through the critical coupling
    double prev = -1.0;
    for (int i = 0; i <= 20; ++i) {
      const double vx = 0.90 + 0.01 * i;
      const ResultRow pr = evaluate_point(omega, 1.0, chi, vx, Method::prpa);
      chk.require(std::isfinite(pr.scaled_concurrence), "non-finite value at vx=" + fmt(vx));
      if (prev >= 0.0)
        chk.require(std::abs(pr.scaled_concurrence - prev) <= 0.04,
                    "jump at chi=" + fmt(chi) + " vx=" + fmt(vx));
      prev = pr.scaled_concurrence;
    }
  }
  r.pass = chk.pass;
  r.detail = "max|d(omega*C/2)| asymptotic=" + fmt(worst_arpa) + " (tol 0.08), finite=" +
             fmt(worst_prpa) + " (tol 0.04)" + (chk.note.empty() ? "" : " [" + chk.note + "]");
  return r;
}

CriterionResult c8_projected_before_variation() {
  CriterionResult r{"8", "projection before variation in the normal phase", false, "", 0};
  const int omega = 50;
  Check chk;
  double worst = 0.0;
  std::ostringstream collapse;
  for (double chi : {0.0, 0.5}) {
    for (double vx : {0.1, 0.2, 0.3, 0.4}) {
      const ResultRow ex = evaluate_point(omega, 1.0, chi, vx, Method::exact);
      const ResultRow pv = evaluate_point(omega, 1.0, chi, vx, Method::pmfv);
      const double rel = std::abs(pv.concurrence - ex.concurrence) / ex.concurrence;
      worst = std::max(worst, rel);
      chk.require(rel <= 0.15,
                  "relative error " + fmt(rel) + " at chi=" + fmt(chi) + " vx=" + fmt(vx));
    }
    for (double vx : {1.5, 2.5}) {
      const ResultRow pv = evaluate_point(omega, 1.0, chi, vx, Method::pmfv);
      chk.require(std::isfinite(pv.concurrence) && pv.concurrence >= 0.0,
                  "collapsed value not finite at vx=" + fmt(vx));
      collapse << " C(chi=" << fmt(chi) << ",vx=" << fmt(vx) << ")=" << fmt(pv.concurrence);
    }
  }
  r.pass = chk.pass;
  r.detail = "max_rel=" + fmt(worst) + " tol=0.15 (vx<=0.4); strong-coupling collapse:" +
             collapse.str() + (chk.note.empty() ? "" : " [" + chk.note + "]");
  return r;
}

CriterionResult c9_saturation() {
  CriterionResult r{"9", "one-body entropy growth and saturation", false, "", 0};
  const int omega = 50;
  Check chk;
  const ResultRow weak = evaluate_point(omega, 1.0, 0.5, 0.9, Method::exact);
  const ResultRow mid = evaluate_point(omega, 1.0, 0.5, 2.0, Method::exact);
  const ResultRow strong = evaluate_point(omega, 1.0, 0.5, 100.0, Method::exact);
  chk.require(weak.one_body_per_2omega < 0.02,
              "E/(2*omega)=" + fmt(weak.one_body_per_2omega) + " at vx=0.9");
  chk.require(mid.one_body_per_2omega > 0.5,
              "E/(2*omega)=" + fmt(mid.one_body_per_2omega) + " at vx=2");
  chk.require(strong.one_body_per_2omega > 0.99,
              "E/(2*omega)=" + fmt(strong.one_body_per_2omega) + " at vx=100");
  for (double vx : {2.0, 3.0}) {
    const ResultRow row = evaluate_point(omega, 1.0, 0.5, vx, Method::exact);
    chk.require(std::abs(row.updown_per_omega - row.one_body_per_2omega) <= 0.03,
                "intensive entropies differ at vx=" + fmt(vx));
  }
  r.pass = chk.pass;
  r.detail = "E/(2*omega): " + fmt(weak.one_body_per_2omega) + " @0.9, " +
             fmt(mid.one_body_per_2omega) + " @2, " + fmt(strong.one_body_per_2omega) +
             " @100" + (chk.note.empty() ? "" : " [" + chk.note + "]");
  return r;
}

CriterionResult c10_determinism() {
  CriterionResult r{"10", "deterministic output and figure runtime", false, "", 0};
  SweepConfig cfg = figure_preset("fig1");
  const auto t0 = std::chrono::steady_clock::now();
  const std::string first = sweep_csv(cfg);
  const auto t1 = std::chrono::steady_clock::now();
  cfg.jobs = 1;
  const std::string second = sweep_csv(cfg);
  const double seconds = std::chrono::duration<double>(t1 - t0).count();
  Check chk;
  chk.require(first == second, "outputs differ between runs");
  chk.require(seconds < 30.0, "fig1 took " + fmt(seconds) + "s");
  r.pass = chk.pass;
  r.detail = "fig1 " + fmt(seconds) + "s, rows=" +
             std::to_string(std::count(first.begin(), first.end(), '\n') - 1) +
             (chk.note.empty() ? "" : " [" + chk.note + "]");
  return r;
}

}  // namespace

namespace verify_detail {

double isotropic_spectrum_error(int omega, double eps, double vx, double perturbation) {
  const ModelParams p{omega, eps, vx, 1.0};
  double worst = 0.0;
  for (int parity : {1, -1}) {
    SymTriMatrix block = build_hamiltonian(p, parity);
    if (perturbation != 0.0) block.diag[0] += perturbation;
    const EigDecomposition eig = eig_sym_tridiagonal(block);
    std::vector<double> expected;
    for (int k : parity_block_levels(omega, parity))
      expected.push_back(isotropic_level_energy(omega, eps, vx, k));
    std::sort(expected.begin(), expected.end());
    for (std::size_t i = 0; i < expected.size(); ++i) {
      const double scale = std::max(std::abs(expected[i]), eps);
      worst = std::max(worst, std::abs(eig.values[i] - expected[i]) / scale);
    }
  }
  return worst;
}

}  // namespace verify_detail

std::vector<CriterionResult> run_verification(VerifyLevel level) {
  std::vector<std::function<CriterionResult()>> checks;
  if (level == VerifyLevel::quick) {
    checks.push_back([] { return c2_oracle_equivalence(true); });
    checks.push_back(c4_two_site_identities);
  } else {
    checks.push_back(c1_isotropic_spectrum);
    checks.push_back([] { return c2_oracle_equivalence(false); });
    checks.push_back(c3_point_values);
    checks.push_back(c4_two_site_identities);
    checks.push_back(c5_separability_point);
    checks.push_back(c6_projected_meanfield);
    checks.push_back(c7_rpa_concurrence);
    checks.push_back(c8_projected_before_variation);
    checks.push_back(c9_saturation);
    checks.push_back(c10_determinism);
  }

  std::vector<CriterionResult> results;
  for (const auto& check : checks) {
    const auto t0 = std::chrono::steady_clock::now();
    CriterionResult r = check();
    const auto t1 = std::chrono::steady_clock::now();
    r.seconds = std::chrono::duration<double>(t1 - t0).count();
    results.push_back(std::move(r));
  }
  return results;
}

int print_verification(VerifyLevel level, std::ostream& out) {
  const std::vector<CriterionResult> results = run_verification(level);
  int failures = 0;
  for (const CriterionResult& r : results) {
    if (!r.pass) ++failures;
    char timing[32];
    std::snprintf(timing, sizeof(timing), "%.2fs", r.seconds);
    out << (r.pass ? "PASS" : "FAIL") << "  criterion " << r.id << "  " << r.description
        << "  [" << r.detail << "]  (" << timing << ")\n";
  }
  out << (failures == 0 ? "all criteria passed" : std::to_string(failures) + " criteria failed")
      << "\n";
  return failures;
}

}  // namespace lipkin
