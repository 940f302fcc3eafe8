#pragma once

#include <optional>
#include <vector>

#include "lipkin/meanfield.hpp"
#include "lipkin/measures.hpp"
#include "lipkin/model.hpp"

namespace lipkin {

/// Quadratic boson parameters around the deformed solution.
struct BrokenPhaseParams {
  double eps_p = 0.0;
  double w_p = 0.0;
  double v_p = 0.0;
  double lambda_p = 0.0;
};

/// Bosonized description around the mean field. lambda is the large-size
/// normal-mode energy sqrt((eps - vx)(eps - vy)) in the normal phase; the
/// broken phase carries its primed analogue. alpha/beta are the Bogoliubov
/// amplitudes of the finite-size quadratic form; close to the critical
/// coupling that form loses a real normal mode and the amplitudes are
/// absent, with gamma pinned to its limiting value 1/(2*omega).
struct RPASolution {
  MFPhase phase = MFPhase::normal;
  double lambda = 0.0;
  std::optional<double> alpha;
  std::optional<double> beta;
  double gamma = 0.0;  // pair-excitation amplitude beta/(2*omega*alpha)
  double theta = 0.0;
  std::optional<BrokenPhaseParams> primed;
};

/// Throws std::domain_error inside the guard band |vx - eps| < 1e-6*eps,
/// where the bosonization degenerates; callers fall back to the exact path.
RPASolution rpa_solve(const ModelParams& p);

/// Large-size concurrence: (1 - lambda/(eps - vy))/(omega - 1) in the normal
/// phase; in the broken phase the parallel branch up to vx = eps/sqrt(chi)
/// (or everywhere for chi <= 0), the antiparallel branch beyond. Guarded
/// like rpa_solve.
Concurrence rpa_concurrence_asymptotic(const ModelParams& p);

/// Pair-coherent state exp(gamma*S+^2) acting on the lowest level, rotated
/// into the deformed frame for vx > eps, optionally projected onto the
/// requested parity sector (parity = 0 leaves the state unprojected).
std::vector<double> rpa_state(const ModelParams& p, double gamma, int parity);

/// gamma minimizing <H> over the states above, seeded at the bosonized
/// estimate, located to 1e-8.
double variational_gamma(const ModelParams& p, int parity);

/// Variationally optimized pair-coherent state with the energetically
/// preferred parity sector in the broken phase.
struct PRPAState {
  std::vector<double> coeffs;
  double gamma = 0.0;
  double energy = 0.0;
  int parity = 0;  // 0 = unprojected (normal phase)
  double theta = 0.0;
};

PRPAState prpa_solve(const ModelParams& p);

/// Full measure record of the optimized pair-coherent state.
MeasureSet prpa_measures(const ModelParams& p);

}  // namespace lipkin
