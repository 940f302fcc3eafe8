#pragma once

#include <string_view>
#include <vector>

#include "lipkin/model.hpp"

namespace lipkin {

enum class ConcurrenceKind { zero, parallel, antiparallel };

std::string_view to_string(ConcurrenceKind kind);

struct Concurrence {
  double value = 0.0;
  ConcurrenceKind kind = ConcurrenceKind::zero;
};

/// Reduced state of two up-down pairs (p, q), in its X form: diagonal
/// occupation correlators plus the two pair coherences.
struct PairReducedState {
  double a_pp = 0.0;    // <n_{p+} n_{q+}>
  double a_pm = 0.0;    // <n_{p+} n_{q-}> = <n_{p-} n_{q+}>
  double a_mm = 0.0;    // <n_{p-} n_{q-}>
  double b_par = 0.0;   // <s_{p+} s_{q+}>  (pair-creation coherence)
  double b_anti = 0.0;  // <s_{p+} s_{q-}>  (exchange coherence)
};

/// One record of entanglement measures for a single state. Entropies are in
/// bits; mixed_one_body_E is the pair-state one-body entanglement recovered
/// from the concurrence.
struct MeasureSet {
  double one_body_E = 0.0;
  double updown_E = 0.0;
  Concurrence concurrence;
  double negativity = 0.0;
  double mixed_one_body_E = 0.0;
};

/// h(f) = -f log2 f - (1-f) log2(1-f), with h(0) = h(1) = 0 by continuity.
/// Inputs within 1e-12 outside [0,1] are clamped; beyond that, domain error.
double binary_entropy(double f);

/// One-body entanglement entropy E = 2*omega*h(kmean/omega).
double one_body_entropy(double kmean, int omega);

/// Entropy of the upper-modes vs lower-modes bipartition for an amplitude
/// vector over K: sum_K C_K^2 [log2 C(omega,K) - log2 C_K^2].
double updown_entropy(const std::vector<double>& coeffs, int omega);

/// Pair reduced state from collective moments; requires omega >= 2.
PairReducedState reduced_pair_state(const SpinMoments& m, int omega);

/// Closed-form concurrence of the X-form pair state:
///   2 * max(|b_par| - a_pm, |b_anti| - sqrt(a_pp*a_mm), 0),
/// tagged with the branch that won.
Concurrence concurrence_closed(const PairReducedState& r);

/// Independent route: embeds the pair state into the even-parity four-mode
/// Fock space and evaluates the concurrence through the R-matrix
/// construction (time-reversal doubling plus matrix square roots).
double concurrence_oracle(const PairReducedState& r);

/// Pair-state one-body entanglement 4*h((1 + sqrt(1-C^2))/2).
double mixed_one_body_entanglement(double concurrence);

/// Up-down negativity of the pair state: |b_par| + |b_anti|.
double negativity_updown(const PairReducedState& r);

/// All measures of the basis state |K> in closed form.
MeasureSet k_state_measures(int omega, int k);

/// All measures of a normalized amplitude vector over K = 0..omega.
/// Pair quantities are zero for omega < 2 (no distinct pair exists).
MeasureSet measures_from_coeffs(const std::vector<double>& coeffs, int omega);

}  // namespace lipkin
