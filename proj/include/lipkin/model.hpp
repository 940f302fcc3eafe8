#pragma once

#include <vector>

#include "lipkin/numerics.hpp"

namespace lipkin {

/// Physical inputs of the model. omega is both the number of sites and the
/// particle number (half filling); eps the level splitting; vx the scaled
/// coupling strength; chi in [-1, 1] the anisotropy between the hopping and
/// pair couplings.
struct ModelParams {
  int omega = 2;
  double eps = 1.0;
  double vx = 0.0;
  double chi = 0.0;

  /// Bare coupling V_x = vx / (omega - 1); zero for the trivial omega = 1.
  double coupling_vx() const { return omega > 1 ? vx / (omega - 1) : 0.0; }
  double coupling_w() const { return coupling_vx() * (1.0 + chi) / 2.0; }
  double coupling_v() const { return coupling_vx() * (1.0 - chi) / 2.0; }

  /// Throws std::invalid_argument if any field is out of range.
  void validate() const;
};

/// Exact ground state in the maximal-spin sector. coeffs is the amplitude
/// vector over K = 0..omega (K = number of fermions in the upper level),
/// zero outside the parity sector, first significant entry positive.
/// energy includes the constant coupling term of the Hamiltonian.
struct GroundState {
  std::vector<double> coeffs;
  int parity = 1;
  double energy = 0.0;
  bool degenerate = false;
};

struct SpinMoments {
  double sz = 0.0;      // <S_z>
  double sz2 = 0.0;     // <S_z^2>
  double splus2 = 0.0;  // <S_+^2> = <S_-^2> (real by the phase convention)
  double kmean = 0.0;   // <K> = <S_z> + omega/2
};

struct IsotropicLevel {
  int level = 0;
  bool degenerate = false;
};

/// K values of the requested parity block, ascending. parity is +1 or -1.
std::vector<int> parity_block_levels(int omega, int parity);

/// Hamiltonian block over the K values of the given parity, as a symmetric
/// tridiagonal matrix (the coupling connects K and K+2 only). The block
/// includes the constant term, so block spectra are absolute energies.
SymTriMatrix build_hamiltonian(const ModelParams& p, int parity);

/// Diagonalize both parity blocks and return the global minimum. A gap
/// below 1e-9*eps marks the state degenerate; ties resolve to even parity.
GroundState ground_state(const ModelParams& p);

/// Ground state level K in the isotropic case chi = 1, where K is conserved.
/// Exactly at a level crossing the lower K wins and the flag is set.
/// Throws std::domain_error when chi != 1.
IsotropicLevel isotropic_gs_level(const ModelParams& p);

/// Collective spin moments of a normalized amplitude vector over K = 0..omega.
SpinMoments spin_moments(const std::vector<double>& coeffs, int omega);
SpinMoments spin_moments(const GroundState& gs, int omega);

/// H * c over the full K = 0..omega basis (both parity chains).
std::vector<double> apply_hamiltonian(const ModelParams& p, const std::vector<double>& coeffs);

/// <c|H|c> for a normalized amplitude vector.
double rayleigh_quotient(const ModelParams& p, const std::vector<double>& coeffs);

/// || H c - <c|H|c> c ||_2, the deviation of c from an eigenstate.
double eigenstate_residual(const ModelParams& p, const std::vector<double>& coeffs);

/// Row-sum (infinity) norm of the full Hamiltonian, for residual scales.
double hamiltonian_norm(const ModelParams& p);

}  // namespace lipkin
