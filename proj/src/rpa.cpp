#include "lipkin/rpa.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "scalar_min.hpp"

namespace lipkin {

namespace {

constexpr double kCriticalBand = 1e-6;

void check_critical_band(const ModelParams& p) {
  if (std::abs(p.vx - p.eps) < kCriticalBand * p.eps)
    throw std::domain_error("bosonized formulas degenerate at the critical coupling");
}

// Bogoliubov amplitudes of h = e*b'b' - (v/2)(b'^2 + b^2) when a real normal
// mode exists, i.e. e^2 > v^2 with e > 0.
struct Amplitudes {
  double alpha, beta, lambda;
};

std::optional<Amplitudes> bogoliubov(double e, double v) {
  const double disc = (e - v) * (e + v);
  if (!(e > 0.0) || !(disc > 0.0)) return std::nullopt;
  const double lambda = std::sqrt(disc);
  const double alpha = std::sqrt((e + lambda) / (2.0 * lambda));
  const double beta = std::sqrt(std::max(e - lambda, 0.0) / (2.0 * lambda));
  return Amplitudes{alpha, beta, lambda};
}

// Seed for the pair amplitude, signed like the pairing term of the
// quadratic form; falls back to the critical limit 1/(2*omega) where the
// finite-size form has no real mode.
double gamma_seed(const ModelParams& p) {
  const double vy = p.chi * p.vx;
  if (p.vx <= p.eps) {
    const double scale = p.omega > 1 ? double(p.omega) / (p.omega - 1) : 1.0;
    const double w = 0.5 * (p.vx + vy) * scale;
    const double v = 0.5 * (p.vx - vy) * scale;
    if (const auto amp = bogoliubov(p.eps - w, v))
      return amp->beta / (2.0 * p.omega * amp->alpha);
    return 0.5 / p.omega;
  }
  const double c = p.eps / p.vx;
  const double c2 = c * c;
  const double eps_p = p.eps * c;
  const double w_p = 0.5 * (p.vx * (3.0 * c2 - 2.0) + vy);
  const double v_p = 0.5 * (p.vx * c2 - vy);
  if (const auto amp = bogoliubov(eps_p - w_p, v_p))
    return std::copysign(amp->beta / (2.0 * p.omega * amp->alpha), v_p);
  return 0.0;
}

// Bracket expansion plus scan/golden refinement over signed gamma; past
// the separability point the optimal pair amplitude is negative.
template <class Energy>
double minimize_gamma(Energy&& energy, double seed, int omega) {
  double hi = std::max(4.0 * std::abs(seed), 2.0 / omega);
  double ebest = std::min(energy(hi), energy(-hi));
  for (int i = 0; i < 60; ++i) {
    const double trial = 2.0 * hi;
    const double etrial = std::min(energy(trial), energy(-trial));
    if (etrial >= ebest) break;
    hi = trial;
    ebest = etrial;
  }
  return detail::grid_then_golden(energy, -hi, hi, 128, 1e-9);
}

// Coefficients of exp(gamma*S+^2)|K=0> over the even ladder, normalized.
// The ladder terminates at K = omega, so the series is finite; logs keep
// the intermediate products in range for any omega.
std::vector<double> pair_coherent_ladder(int omega, double gamma) {
  std::vector<double> coeffs(std::size_t(omega) + 1, 0.0);
  if (gamma == 0.0) {
    coeffs[0] = 1.0;
    return coeffs;
  }
  const int mmax = omega / 2;
  std::vector<double> logs(mmax + 1, 0.0);
  std::vector<double> sign(mmax + 1, 1.0);
  const double lg = std::log(std::abs(gamma));
  double lmax = 0.0;
  for (int m = 0; m < mmax; ++m) {
    logs[m + 1] = logs[m] + lg + std::log(ladder_factor(omega, 2 * m)) +
                  std::log(ladder_factor(omega, 2 * m + 1)) - std::log(double(m + 1));
    sign[m + 1] = gamma < 0.0 ? -sign[m] : sign[m];
    lmax = std::max(lmax, logs[m + 1]);
  }
  double norm2 = 0.0;
  for (int m = 0; m <= mmax; ++m) {
    coeffs[2 * m] = sign[m] * std::exp(logs[m] - lmax);
    norm2 += coeffs[2 * m] * coeffs[2 * m];
  }
  const double inv = 1.0 / std::sqrt(norm2);
  for (double& c : coeffs) c *= inv;
  return coeffs;
}

std::vector<double> project_parity(std::vector<double> coeffs, int parity) {
  double norm2 = 0.0;
  for (std::size_t k = 0; k < coeffs.size(); ++k) {
    if ((k % 2 == 0) != (parity > 0))
      coeffs[k] = 0.0;
    else
      norm2 += coeffs[k] * coeffs[k];
  }
  if (norm2 <= 0.0) throw std::domain_error("parity projection annihilated the state");
  const double inv = 1.0 / std::sqrt(norm2);
  for (double& c : coeffs) c *= inv;
  return coeffs;
}

}  // namespace

RPASolution rpa_solve(const ModelParams& p) {
  p.validate();
  check_critical_band(p);
  const double vy = p.chi * p.vx;

  RPASolution sol;
  if (p.vx < p.eps) {
    sol.phase = MFPhase::normal;
    sol.theta = 0.0;
    sol.lambda = std::sqrt((p.eps - p.vx) * (p.eps - vy));
    const double scale = p.omega > 1 ? double(p.omega) / (p.omega - 1) : 1.0;
    const double w = 0.5 * (p.vx + vy) * scale;
    const double v = 0.5 * (p.vx - vy) * scale;
    if (const auto amp = bogoliubov(p.eps - w, v)) {
      sol.alpha = amp->alpha;
      sol.beta = amp->beta;
      sol.gamma = amp->beta / (2.0 * p.omega * amp->alpha);
    } else {
      sol.gamma = 0.5 / p.omega;
    }
  } else {
    sol.phase = MFPhase::broken;
    const double c = p.eps / p.vx;
    const double c2 = c * c;
    sol.theta = std::acos(c);
    const double s = std::sqrt((1.0 - c) * (1.0 + c));
    BrokenPhaseParams bp;
    bp.eps_p = p.eps * c;
    bp.w_p = 0.5 * (p.vx * (3.0 * c2 - 2.0) + vy);
    bp.v_p = 0.5 * (p.vx * c2 - vy);
    bp.lambda_p = s * std::sqrt(p.vx * (p.vx - vy));
    sol.primed = bp;
    sol.lambda = bp.lambda_p;
    if (const auto amp = bogoliubov(bp.eps_p - bp.w_p, bp.v_p)) {
      sol.alpha = amp->alpha;
      sol.beta = amp->beta;
      sol.gamma = std::copysign(amp->beta / (2.0 * p.omega * amp->alpha), bp.v_p);
    }
  }
  return sol;
}

Concurrence rpa_concurrence_asymptotic(const ModelParams& p) {
  p.validate();
  check_critical_band(p);
  if (p.omega < 2) throw std::domain_error("rpa_concurrence_asymptotic: omega must be >= 2");
  const double vy = p.chi * p.vx;

  Concurrence c;
  if (p.vx < p.eps) {
    const double lambda = std::sqrt((p.eps - p.vx) * (p.eps - vy));
    c.value = (1.0 - lambda / (p.eps - vy)) / (p.omega - 1);
    c.kind = ConcurrenceKind::parallel;
  } else {
    const double cos_t = p.eps / p.vx;
    const double sin_t = std::sqrt((1.0 - cos_t) * (1.0 + cos_t));
    // lambda' / (vx - vy) factored as sin(theta)*sqrt(vx)/sqrt(vx - vy),
    // so the isotropic limit vy -> vx stays finite on both branches
    const bool antiparallel = p.chi > 0.0 && p.chi * p.vx * p.vx > p.eps * p.eps;
    if (antiparallel) {
      const double ratio = std::sqrt(p.vx - vy) / (sin_t * std::sqrt(p.vx));
      c.value = (1.0 - ratio) / (p.omega - 1);
      c.kind = ConcurrenceKind::antiparallel;
    } else {
      const double ratio = sin_t * std::sqrt(p.vx) / std::sqrt(p.vx - vy);
      c.value = (1.0 - ratio) / (p.omega - 1);
      c.kind = ConcurrenceKind::parallel;
    }
  }
  if (c.value <= 0.0) {
    c.value = std::max(c.value, 0.0);
    c.kind = ConcurrenceKind::zero;
  }
  return c;
}

std::vector<double> rpa_state(const ModelParams& p, double gamma, int parity) {
  p.validate();
  if (parity != 0 && parity != 1 && parity != -1)
    throw std::invalid_argument("rpa_state: parity must be -1, 0 or +1");
  std::vector<double> coeffs = pair_coherent_ladder(p.omega, gamma);
  if (p.vx > p.eps) {
    const double theta = std::acos(p.eps / p.vx);
    coeffs = collective_rotation(p.omega, theta) * coeffs;
  }
  if (parity != 0) coeffs = project_parity(std::move(coeffs), parity);
  return coeffs;
}

double variational_gamma(const ModelParams& p, int parity) {
  p.validate();
  const auto energy = [&](double g) { return rayleigh_quotient(p, rpa_state(p, g, parity)); };
  return minimize_gamma(energy, gamma_seed(p), p.omega);
}

PRPAState prpa_solve(const ModelParams& p) {
  p.validate();
  PRPAState best;
  best.energy = std::numeric_limits<double>::infinity();
  const bool broken = p.vx > p.eps;
  best.theta = broken ? std::acos(p.eps / p.vx) : 0.0;

  // precompute the frame rotation once; the gamma search reuses it
  Matrix rot;
  if (broken) rot = collective_rotation(p.omega, best.theta);
  const auto make_state = [&](double g, int parity) {
    std::vector<double> c = pair_coherent_ladder(p.omega, g);
    if (broken) c = rot * c;
    if (parity != 0) c = project_parity(std::move(c), parity);
    return c;
  };

  const double seed = gamma_seed(p);
  for (int parity : broken ? std::vector<int>{1, -1} : std::vector<int>{0}) {
    const auto energy = [&](double g) { return rayleigh_quotient(p, make_state(g, parity)); };
    const double g = minimize_gamma(energy, seed, p.omega);
    const double e = energy(g);
    if (e < best.energy) {
      best.gamma = g;
      best.energy = e;
      best.parity = parity;
      best.coeffs = make_state(g, parity);
    }
  }
  return best;
}

MeasureSet prpa_measures(const ModelParams& p) {
  const PRPAState st = prpa_solve(p);
  return measures_from_coeffs(st.coeffs, p.omega);
}

}  // namespace lipkin
