#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "doctest.h"
#include "lipkin/meanfield.hpp"
#include "lipkin/model.hpp"

using namespace lipkin;

namespace {

double isotropic_level_energy(int omega, double eps, double vx, int k) {
  const double s = 0.5 * omega;
  const double m = k - s;
  const double coupling = vx / (omega - 1);
  return eps * m - coupling * (s * (s + 1.0) - m * m - s);
}

// brute-force level search, the independent oracle for isotropic_gs_level
int isotropic_level_bruteforce(int omega, double eps, double vx) {
  int best = 0;
  double ebest = isotropic_level_energy(omega, eps, vx, 0);
  for (int k = 1; k <= omega; ++k) {
    const double e = isotropic_level_energy(omega, eps, vx, k);
    if (e < ebest - 1e-14 * std::abs(ebest)) {
      ebest = e;
      best = k;
    }
  }
  return best;
}

}  // namespace

TEST_CASE("params: validation") {
  CHECK_THROWS_AS((ModelParams{0, 1.0, 0.0, 0.0}.validate()), std::invalid_argument);
  CHECK_THROWS_AS((ModelParams{4, -1.0, 0.0, 0.0}.validate()), std::invalid_argument);
  CHECK_THROWS_AS((ModelParams{4, 1.0, -0.5, 0.0}.validate()), std::invalid_argument);
  CHECK_THROWS_AS((ModelParams{4, 1.0, 1.0, 1.5}.validate()), std::invalid_argument);
  CHECK_THROWS_AS((ModelParams{1, 1.0, 1.0, 0.0}.validate()), std::invalid_argument);
  CHECK_NOTHROW((ModelParams{1, 1.0, 0.0, 0.0}.validate()));
  const ModelParams p{5, 1.0, 2.0, 0.5};
  CHECK(p.coupling_vx() == doctest::Approx(0.5));
  CHECK(p.coupling_w() == doctest::Approx(0.375));
  CHECK(p.coupling_v() == doctest::Approx(0.125));
}

TEST_CASE("hamiltonian: two-site block against hand evaluation") {
  const ModelParams p{2, 1.0, 2.0, 0.0};
  const SymTriMatrix even = build_hamiltonian(p, 1);
  REQUIRE(even.diag.size() == 2);
  CHECK(even.diag[0] == doctest::Approx(-1.0).epsilon(1e-14));
  CHECK(even.diag[1] == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(even.offdiag[0] == doctest::Approx(-1.0).epsilon(1e-14));
  const SymTriMatrix odd = build_hamiltonian(p, -1);
  REQUIRE(odd.diag.size() == 1);
  CHECK(odd.diag[0] == doctest::Approx(-1.0).epsilon(1e-14));  // eps*0 - 2W + W
}

TEST_CASE("hamiltonian: isotropic coupling leaves levels uncoupled") {
  const ModelParams p{7, 1.0, 2.3, 1.0};
  for (int parity : {1, -1}) {
    const SymTriMatrix h = build_hamiltonian(p, parity);
    const std::vector<int> levels = parity_block_levels(7, parity);
    for (double off : h.offdiag) CHECK(off == 0.0);
    for (std::size_t i = 0; i < levels.size(); ++i)
      CHECK(h.diag[i] ==
            doctest::Approx(isotropic_level_energy(7, 1.0, 2.3, levels[i])).epsilon(1e-14));
  }
}

TEST_CASE("hamiltonian: free limit") {
  const ModelParams p{6, 1.0, 0.0, 0.0};
  const SymTriMatrix h = build_hamiltonian(p, 1);
  const std::vector<int> levels = parity_block_levels(6, 1);
  for (std::size_t i = 0; i < levels.size(); ++i)
    CHECK(h.diag[i] == doctest::Approx(levels[i] - 3.0).epsilon(1e-14));
  for (double off : h.offdiag) CHECK(off == 0.0);
  CHECK_THROWS_AS(build_hamiltonian({1, 1.0, 2.0, 0.0}, 1), std::invalid_argument);
}

TEST_CASE("ground state: free limit and two-site closed form") {
  const GroundState free = ground_state({10, 1.0, 0.0, 0.3});
  CHECK(free.parity == 1);
  CHECK(free.energy == doctest::Approx(-5.0).epsilon(1e-14));
  CHECK(free.coeffs[0] == doctest::Approx(1.0));
  for (int k = 1; k <= 10; ++k) CHECK(free.coeffs[k] == doctest::Approx(0.0).scale(1.0));

  const GroundState gs = ground_state({2, 1.0, 2.0, 0.0});
  CHECK(gs.parity == 1);
  CHECK(gs.energy == doctest::Approx(-std::sqrt(2.0)).epsilon(1e-13));
  CHECK(gs.coeffs[0] == doctest::Approx(std::cos(std::numbers::pi / 8)).epsilon(1e-12));
  CHECK(gs.coeffs[1] == doctest::Approx(0.0).scale(1.0));
  CHECK(gs.coeffs[2] == doctest::Approx(std::sin(std::numbers::pi / 8)).epsilon(1e-12));
  CHECK_FALSE(gs.degenerate);
}

TEST_CASE("ground state: structure on a coupling grid") {
  // negative anisotropy keeps even parity everywhere
  for (double vx : {0.3, 0.9, 1.5, 2.4, 4.0, 8.0}) {
    const GroundState gs = ground_state({7, 1.0, vx, -0.5});
    CHECK(gs.parity == 1);
    double norm = 0.0;
    for (double c : gs.coeffs) norm += c * c;
    CHECK(norm == doctest::Approx(1.0).epsilon(1e-12));
    for (int k = 1; k <= 7; k += 2) CHECK(gs.coeffs[k] == 0.0);
    for (int k = 0; k <= 7; k += 2) CHECK(gs.coeffs[k] >= 0.0);  // same-sign for V > 0
    CHECK(spin_moments(gs, 7).kmean / 7.0 <= 0.5);
  }
}

TEST_CASE("ground state: energy decreases with coupling") {
  for (double chi : {-1.0, 0.0, 0.7}) {
    double last = ground_state({9, 1.0, 0.0, chi}).energy;
    for (double vx : {0.5, 1.0, 1.5, 2.0, 3.0, 5.0}) {
      const double e = ground_state({9, 1.0, vx, chi}).energy;
      CHECK(e <= last + 1e-12);
      last = e;
    }
  }
}

TEST_CASE("ground state: parity alternates chi in (0,1) at floor(omega/2) crossings") {
  const int omega = 8;
  int flips = 0;
  int last = 1;
  for (int i = 1; i <= 14000; ++i) {
    const GroundState gs = ground_state({omega, 1.0, i * 1e-3, 0.5});
    if (gs.parity != last) {
      ++flips;
      last = gs.parity;
    }
  }
  CHECK(flips == omega / 2);
}

TEST_CASE("block spectra match a dense diagonalization of the assembled matrix") {
  const ModelParams p{9, 1.0, 1.7, 0.3};
  Matrix dense(10, 10);
  for (int parity : {1, -1}) {
    const SymTriMatrix block = build_hamiltonian(p, parity);
    const std::vector<int> levels = parity_block_levels(9, parity);
    for (std::size_t i = 0; i < levels.size(); ++i) {
      dense(levels[i], levels[i]) = block.diag[i];
      if (i + 1 < levels.size()) {
        dense(levels[i], levels[i + 1]) = block.offdiag[i];
        dense(levels[i + 1], levels[i]) = block.offdiag[i];
      }
    }
  }
  const EigDecomposition full = eig_sym_dense(dense);
  std::vector<double> blockwise;
  for (int parity : {1, -1}) {
    const EigDecomposition eig = eig_sym_tridiagonal(build_hamiltonian(p, parity));
    blockwise.insert(blockwise.end(), eig.values.begin(), eig.values.end());
  }
  std::sort(blockwise.begin(), blockwise.end());
  for (std::size_t i = 0; i < blockwise.size(); ++i)
    CHECK(full.values[i] == doctest::Approx(blockwise[i]).epsilon(1e-10));
}

TEST_CASE("isotropic level: anchors and brute-force oracle") {
  CHECK(isotropic_gs_level({50, 1.0, 0.9, 1.0}).level == 0);
  CHECK(isotropic_gs_level({2, 1.0, 1.4, 1.0}).level == 1);
  CHECK(isotropic_gs_level({12, 1.0, 4000.0, 1.0}).level == 6);
  CHECK_THROWS_AS(isotropic_gs_level({12, 1.0, 1.0, 0.5}), std::domain_error);

  for (int omega : {2, 3, 5, 8, 13, 50})
    for (double vx : {0.1, 0.7, 1.05, 1.8, 2.6, 4.4, 9.0, 31.0}) {
      const IsotropicLevel lvl = isotropic_gs_level({omega, 1.0, vx, 1.0});
      CHECK(lvl.level == isotropic_level_bruteforce(omega, 1.0, vx));
    }

  // exact tie resolves to the lower level and is flagged; checked at the
  // crossings whose coupling is exactly representable
  const IsotropicLevel tie0 = isotropic_gs_level({50, 1.0, 1.0, 1.0});
  CHECK(tie0.level == 0);
  CHECK(tie0.degenerate);
  const IsotropicLevel tie24 = isotropic_gs_level({50, 1.0, 49.0, 1.0});
  CHECK(tie24.level == 24);
  CHECK(tie24.degenerate);
}

TEST_CASE("spin moments: basis states and the two-site ground state") {
  std::vector<double> lowest(11, 0.0);
  lowest[0] = 1.0;
  const SpinMoments m0 = spin_moments(lowest, 10);
  CHECK(m0.sz == doctest::Approx(-5.0));
  CHECK(m0.sz2 == doctest::Approx(25.0));
  CHECK(m0.splus2 == doctest::Approx(0.0).scale(1.0));
  CHECK(m0.kmean == doctest::Approx(0.0).scale(1.0));

  std::vector<double> k3(11, 0.0);
  k3[3] = 1.0;
  const SpinMoments m3 = spin_moments(k3, 10);
  CHECK(m3.sz == doctest::Approx(-2.0));
  CHECK(m3.splus2 == doctest::Approx(0.0).scale(1.0));
  CHECK(m3.kmean == doctest::Approx(3.0));

  const GroundState gs = ground_state({2, 1.0, 2.0, 0.0});
  const SpinMoments m = spin_moments(gs, 2);
  CHECK(m.splus2 == doctest::Approx(2.0 * gs.coeffs[0] * gs.coeffs[2]).epsilon(1e-12));
  CHECK(m.splus2 == doctest::Approx(std::sqrt(0.5)).epsilon(1e-10));
  CHECK(m.sz2 == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("eigenstate residual: exact states, the factorized product state, and a non-eigenstate") {
  const ModelParams p{12, 1.0, 1.9, 0.3};
  const GroundState gs = ground_state(p);
  CHECK(eigenstate_residual(p, gs.coeffs) <= 1e-10 * hamiltonian_norm(p));

  // product state with cos(theta)^2 = chi is an exact eigenstate at vx = eps/sqrt(chi)
  const double chi = 0.5;
  const ModelParams pf{20, 1.0, 1.0 / std::sqrt(chi), chi};
  const std::vector<double> mf = mf_coefficients(std::acos(std::sqrt(chi)), 20);
  CHECK(eigenstate_residual(pf, mf) <= 1e-9 * hamiltonian_norm(pf));

  // the same product state away from that coupling is not an eigenstate
  const ModelParams poff{20, 1.0, 2.0, chi};
  const std::vector<double> mf_off = mf_coefficients(std::acos(0.5), 20);
  CHECK(eigenstate_residual(poff, mf_off) > 1e-3);
}

TEST_CASE("rayleigh quotient matches the block eigenvalue on eigenvectors") {
  const ModelParams p{8, 1.0, 2.2, -0.2};
  const GroundState gs = ground_state(p);
  CHECK(rayleigh_quotient(p, gs.coeffs) == doctest::Approx(gs.energy).epsilon(1e-12));
}
