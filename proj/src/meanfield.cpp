#include "lipkin/meanfield.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "scalar_min.hpp"

namespace lipkin {

namespace {

// Powers of cos(theta) with the cancellation-prone combinations 1 -+ cos^n
// evaluated through expm1, so projected-state formulas stay accurate for
// small angles at any omega.
struct ThetaPowers {
  double c;
  double s2;
  double log_abs_c;
  int sign_c;

  explicit ThetaPowers(double theta) {
    const double sh = std::sin(0.5 * theta);
    const double ch = std::cos(0.5 * theta);
    c = (ch - sh) * (ch + sh);
    s2 = 4.0 * sh * sh * ch * ch;
    sign_c = c < 0.0 ? -1 : 1;
    log_abs_c = c >= 0.0 ? std::log1p(-2.0 * sh * sh) : std::log1p(-2.0 * ch * ch);
  }

  double pow(int n) const {
    if (n == 0) return 1.0;
    if (c == 0.0) return 0.0;
    const double mag = std::exp(n * log_abs_c);
    return (sign_c < 0 && (n & 1)) ? -mag : mag;
  }

  double one_minus_pow(int n) const {
    if (n == 0) return 0.0;
    if (sign_c > 0) return -std::expm1(n * log_abs_c);
    return 1.0 - pow(n);
  }

  double one_plus_pow(int n) const {
    if (sign_c > 0 || (n & 1) == 0) return 1.0 + pow(n);
    return -std::expm1(n * log_abs_c);
  }
};

void check_parity_arg(int parity) {
  if (parity != 1 && parity != -1) throw std::invalid_argument("parity must be +1 or -1");
}

}  // namespace

MFSolution mf_solve(const ModelParams& p) {
  p.validate();
  MFSolution sol;
  if (p.vx <= p.eps) {
    sol.theta = 0.0;
    sol.order_param = 0.0;
    sol.phase = MFPhase::normal;
    sol.energy = -0.5 * p.eps * p.omega;
  } else {
    const double c = p.eps / p.vx;
    sol.theta = std::acos(c);
    sol.order_param = std::sqrt((1.0 - c) * (1.0 + c));
    sol.phase = MFPhase::broken;
    sol.energy = p.omega * (-0.5 * p.eps * c - 0.25 * p.vx * (1.0 - c * c));
  }
  return sol;
}

std::vector<double> mf_coefficients(double theta, int omega) {
  if (omega < 1) throw std::invalid_argument("mf_coefficients: omega must be >= 1");
  const double ch = std::cos(0.5 * theta);
  const double sh = std::sin(0.5 * theta);
  const double lch = std::log(std::abs(ch));
  const double lsh = std::log(std::abs(sh));

  std::vector<double> logs(std::size_t(omega) + 1, -std::numeric_limits<double>::infinity());
  std::vector<double> signs(std::size_t(omega) + 1, 1.0);
  double lmax = -std::numeric_limits<double>::infinity();
  for (int k = 0; k <= omega; ++k) {
    if ((ch == 0.0 && k != omega) || (sh == 0.0 && k != 0)) continue;
    double lg = 0.5 * log_binomial(omega, k);
    if (k < omega) lg += (omega - k) * lch;
    if (k > 0) lg += k * lsh;
    logs[k] = lg;
    double sg = 1.0;
    if (ch < 0.0 && ((omega - k) & 1)) sg = -sg;
    if (sh < 0.0 && (k & 1)) sg = -sg;
    signs[k] = sg;
    lmax = std::max(lmax, lg);
  }

  std::vector<double> coeffs(std::size_t(omega) + 1, 0.0);
  double norm2 = 0.0;
  for (int k = 0; k <= omega; ++k) {
    if (!std::isfinite(logs[k])) continue;
    coeffs[k] = signs[k] * std::exp(logs[k] - lmax);
    norm2 += coeffs[k] * coeffs[k];
  }
  const double inv = 1.0 / std::sqrt(norm2);
  for (double& ck : coeffs) ck *= inv;
  return coeffs;
}

MeasureSet mf_measures(const MFSolution& sol, double chi, int omega) {
  MeasureSet m;
  const double c = std::cos(sol.theta);
  const double s2 = 1.0 - c * c;
  m.one_body_E = 2.0 * omega * binary_entropy(0.5 * (1.0 - c));
  m.updown_E = 0.5 * m.one_body_E;
  m.negativity = (chi == 1.0 ? 0.25 : 0.5) * s2;
  return m;
}

ProjectedMFState pmf_state(double theta, int omega, int parity) {
  check_parity_arg(parity);
  if (omega < 1) throw std::invalid_argument("pmf_state: omega must be >= 1");
  ProjectedMFState st{theta, parity, std::vector<double>(std::size_t(omega) + 1, 0.0)};
  if (theta == 0.0) {
    // odd projection collapses onto the single-excitation state
    st.coeffs[parity > 0 ? 0 : 1] = 1.0;
    return st;
  }
  const std::vector<double> base = mf_coefficients(theta, omega);
  double norm2 = 0.0;
  for (int k = parity > 0 ? 0 : 1; k <= omega; k += 2) {
    st.coeffs[k] = base[k];
    norm2 += base[k] * base[k];
  }
  if (norm2 <= 0.0) throw std::runtime_error("pmf_state: projected component vanished");
  const double inv = 1.0 / std::sqrt(norm2);
  for (double& ck : st.coeffs) ck *= inv;
  return st;
}

MeasureSet pmf_measures(double theta, int omega, int parity) {
  check_parity_arg(parity);
  if (omega < 2) throw std::domain_error("pmf_measures: omega must be >= 2");
  if (theta == 0.0)
    return parity > 0 ? MeasureSet{} : k_state_measures(omega, 1);

  const ThetaPowers tp(theta);
  const bool even = parity > 0;
  const double denom = even ? tp.one_plus_pow(omega) : tp.one_minus_pow(omega);
  const double num_plus_1 = even ? tp.one_minus_pow(omega - 1) : tp.one_plus_pow(omega - 1);
  const double f_up = 0.5 * (1.0 - tp.c) * num_plus_1 / denom;

  MeasureSet m;
  m.one_body_E = 2.0 * omega * binary_entropy(f_up);

  // spread over the projected half of the product basis; the log ratios are
  // written against sin^2, cos^2 of the half angle to stay finite as theta->0
  const double l_up = 2.0 * std::log2(std::abs(std::sin(0.5 * theta)));
  const double l_dn = 2.0 * std::log2(std::abs(std::cos(0.5 * theta)));
  m.updown_E = -omega * (f_up * l_up + (1.0 - f_up) * l_dn) + std::log2(denom) - 1.0;

  const double grow = even ? tp.one_plus_pow(omega - 2) : tp.one_minus_pow(omega - 2);
  const double shrink = even ? tp.one_minus_pow(omega - 2) : tp.one_plus_pow(omega - 2);
  PairReducedState r;
  r.b_par = 0.25 * tp.s2 * grow / denom;
  r.b_anti = 0.25 * tp.s2 * shrink / denom;
  r.a_pm = r.b_anti;
  const double up_amp = 0.5 * (1.0 - tp.c);
  const double dn_amp = 0.5 * (1.0 + tp.c);
  r.a_pp = up_amp * up_amp * grow / denom;
  r.a_mm = dn_amp * dn_amp * grow / denom;

  m.concurrence = concurrence_closed(r);
  m.negativity = negativity_updown(r);
  m.mixed_one_body_E = mixed_one_body_entanglement(m.concurrence.value);
  return m;
}

VariationalTheta pmf_variational_theta(const ModelParams& p, int parity) {
  p.validate();
  check_parity_arg(parity);
  const auto energy = [&](double theta) {
    return rayleigh_quotient(p, pmf_state(theta, p.omega, parity).coeffs);
  };
  const double theta =
      detail::grid_then_golden(energy, 0.0, 0.5 * std::numbers::pi, 96, 1e-9);
  return {theta, energy(theta)};
}

}  // namespace lipkin
