#pragma once

#include <vector>

#include "lipkin/measures.hpp"
#include "lipkin/model.hpp"

namespace lipkin {

enum class MFPhase { normal, broken };

/// Self-consistent product-state solution. theta is the rotation angle of
/// the occupied orbital in the x-z plane; order_param = sin(theta).
struct MFSolution {
  double theta = 0.0;
  double order_param = 0.0;
  double energy = 0.0;
  MFPhase phase = MFPhase::normal;
};

/// cos(theta) = 1 for vx <= eps, eps/vx beyond; energy is the product-state
/// expectation of the full Hamiltonian.
MFSolution mf_solve(const ModelParams& p);

/// Amplitudes of the rotated product state over K = 0..omega,
/// sqrt(C(omega,K)) cos^(omega-K)(theta/2) sin^K(theta/2), normalized.
/// Evaluated in log space so large omega cannot underflow.
std::vector<double> mf_coefficients(double theta, int omega);

/// Mean-field measure estimates: diagonal one-body entropy, half of it for
/// the up-down entropy, sin^2(theta)/2 negativity (halved in the isotropic
/// limit chi = 1), zero concurrence.
MeasureSet mf_measures(const MFSolution& sol, double chi, int omega);

/// Definite-parity combination of the two degenerate product states.
struct ProjectedMFState {
  double theta = 0.0;
  int parity = 1;
  std::vector<double> coeffs;
};

/// Parity-projected product state. At theta = 0 the odd projection
/// degenerates to the single-excitation state |K=1> (its smooth limit).
ProjectedMFState pmf_state(double theta, int omega, int parity);

/// Closed-form measures of the projected state. Agrees with running the
/// generic measures on pmf_state amplitudes to better than 1e-9.
MeasureSet pmf_measures(double theta, int omega, int parity);

struct VariationalTheta {
  double theta = 0.0;
  double energy = 0.0;
};

/// Projection before variation: minimize <H> over the projected states of
/// the given parity, theta in [0, pi/2], to 1e-8 in the angle.
VariationalTheta pmf_variational_theta(const ModelParams& p, int parity);

}  // namespace lipkin
