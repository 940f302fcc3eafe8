#include "lipkin/measures.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace lipkin {

namespace {

constexpr double kLog2e = std::numbers::log2e;

}  // namespace

std::string_view to_string(ConcurrenceKind kind) {
  switch (kind) {
    case ConcurrenceKind::parallel:
      return "parallel";
    case ConcurrenceKind::antiparallel:
      return "antiparallel";
    default:
      return "zero";
  }
}

double binary_entropy(double f) {
  if (f < -1e-12 || f > 1.0 + 1e-12)
    throw std::domain_error("binary_entropy: argument outside [0, 1]");
  f = std::min(std::max(f, 0.0), 1.0);
  if (f == 0.0 || f == 1.0) return 0.0;
  return -f * std::log2(f) - (1.0 - f) * std::log2(1.0 - f);
}

double one_body_entropy(double kmean, int omega) {
  if (omega < 1) throw std::domain_error("one_body_entropy: omega must be >= 1");
  return 2.0 * omega * binary_entropy(kmean / omega);
}

double updown_entropy(const std::vector<double>& coeffs, int omega) {
  if (int(coeffs.size()) != omega + 1)
    throw std::invalid_argument("updown_entropy: coefficient vector must have length omega+1");
  double e = 0.0;
  for (int k = 0; k <= omega; ++k) {
    const double w = coeffs[k] * coeffs[k];
    if (w <= 0.0) continue;
    e += w * (log_binomial(omega, k) * kLog2e - std::log2(w));
  }
  return e;
}

PairReducedState reduced_pair_state(const SpinMoments& m, int omega) {
  if (omega < 2) throw std::domain_error("reduced_pair_state: omega must be >= 2");
  const double pairs = double(omega) * (omega - 1);
  PairReducedState r;
  r.b_par = m.splus2 / pairs;
  r.b_anti = (omega * omega / 4.0 - m.sz2) / pairs;
  r.a_pm = r.b_anti;
  const double shared = (m.sz2 - omega / 4.0) / pairs;
  r.a_pp = 0.25 + m.sz / omega + shared;
  r.a_mm = 0.25 - m.sz / omega + shared;
  return r;
}

Concurrence concurrence_closed(const PairReducedState& r) {
  const double parallel = std::abs(r.b_par) - r.a_pm;
  const double antiparallel =
      std::abs(r.b_anti) - std::sqrt(std::max(r.a_pp, 0.0) * std::max(r.a_mm, 0.0));
  Concurrence c;
  if (parallel <= 0.0 && antiparallel <= 0.0) return c;
  if (parallel >= antiparallel) {
    c.value = 2.0 * parallel;
    c.kind = ConcurrenceKind::parallel;
  } else {
    c.value = 2.0 * antiparallel;
    c.kind = ConcurrenceKind::antiparallel;
  }
  return c;
}

double concurrence_oracle(const PairReducedState& r) {
  // Even-parity Fock basis of the four modes 1=p+, 2=p-, 3=q+, 4=q-:
  //   {|0>, 12, 13, 14, -1234, 34, -24, 23}   (numbers = creation operators)
  // The two-fermion support of the pair state sits at indices {2,3,7,6}
  // for (p+q+, p+q-, p-q+, p-q-), with p-q- = -|index 6>.
  constexpr std::array<std::size_t, 4> idx = {2, 3, 7, 6};
  constexpr std::array<double, 4> sgn = {1.0, 1.0, 1.0, -1.0};

  Matrix rho4(4, 4);
  rho4(0, 0) = r.a_pp;
  rho4(1, 1) = r.a_pm;
  rho4(2, 2) = r.a_pm;
  rho4(3, 3) = r.a_mm;
  rho4(0, 3) = rho4(3, 0) = r.b_par;
  rho4(1, 2) = rho4(2, 1) = r.b_anti;

  Matrix rho(8, 8);
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) rho(idx[i], idx[j]) = sgn[i] * sgn[j] * rho4(i, j);

  // The swap T is an involution, so sqrt(rho) * T*rho*T * sqrt(rho) is the
  // square of the symmetric matrix S = sqrt(rho) * T * sqrt(rho); the
  // spectrum of R is |eig(S)|, which avoids taking square roots of
  // roundoff-level eigenvalues of the squared problem.
  const EigDecomposition eig = eig_sym_dense(rho);
  const double mu_max = std::max(eig.values.back(), 0.0);
  if (eig.values.front() < -1e-8 * std::max(mu_max, 1.0))
    throw std::invalid_argument("concurrence_oracle: embedded pair state is not PSD");
  std::vector<double> root_mu(8);
  for (std::size_t i = 0; i < 8; ++i) root_mu[i] = std::sqrt(std::max(eig.values[i], 0.0));
  Matrix root(8, 8);
  for (std::size_t i = 0; i < 8; ++i)
    for (std::size_t j = i; j < 8; ++j) {
      double acc = 0.0;
      for (std::size_t k = 0; k < 8; ++k)
        acc += eig.vectors(i, k) * root_mu[k] * eig.vectors(j, k);
      root(i, j) = root(j, i) = acc;
    }

  Matrix swapped(8, 8);  // T * sqrt(rho)
  for (std::size_t i = 0; i < 8; ++i)
    for (std::size_t j = 0; j < 8; ++j) swapped(i, j) = root((i + 4) % 8, j);
  Matrix s = root * swapped;
  for (std::size_t i = 0; i < 8; ++i)
    for (std::size_t j = i + 1; j < 8; ++j) {
      const double sym = 0.5 * (s(i, j) + s(j, i));
      s(i, j) = s(j, i) = sym;
    }

  const EigDecomposition nu = eig_sym_dense(s);
  double trace_r = 0.0, lam_max = 0.0;
  for (double v : nu.values) {
    trace_r += std::abs(v);
    lam_max = std::max(lam_max, std::abs(v));
  }
  return std::max(2.0 * lam_max - trace_r, 0.0);
}

double mixed_one_body_entanglement(double concurrence) {
  if (concurrence < -1e-12 || concurrence > 1.0 + 1e-12)
    throw std::domain_error("mixed_one_body_entanglement: concurrence outside [0, 1]");
  concurrence = std::min(std::max(concurrence, 0.0), 1.0);
  const double root = std::sqrt(std::max(1.0 - concurrence * concurrence, 0.0));
  return 4.0 * binary_entropy(0.5 * (1.0 + root));
}

double negativity_updown(const PairReducedState& r) {
  return std::abs(r.b_par) + std::abs(r.b_anti);
}

MeasureSet k_state_measures(int omega, int k) {
  if (k < 0 || k > omega) throw std::domain_error("k_state_measures: need 0 <= K <= omega");
  MeasureSet m;
  m.one_body_E = one_body_entropy(double(k), omega);
  m.updown_E = log_binomial(omega, k) * kLog2e;
  if (omega >= 2) {
    // occupation correlators of |K> have exact combinatorial values;
    // using them directly keeps the K = 1 edge (a_pp = 0) exact
    const double pairs = double(omega) * (omega - 1);
    PairReducedState r;
    r.b_par = 0.0;
    r.b_anti = double(k) * (omega - k) / pairs;
    r.a_pm = r.b_anti;
    r.a_pp = double(k) * (k - 1) / pairs;
    r.a_mm = double(omega - k) * (omega - k - 1) / pairs;
    m.concurrence = concurrence_closed(r);
    m.negativity = negativity_updown(r);
    m.mixed_one_body_E = mixed_one_body_entanglement(m.concurrence.value);
  }
  return m;
}

MeasureSet measures_from_coeffs(const std::vector<double>& coeffs, int omega) {
  const SpinMoments moments = spin_moments(coeffs, omega);
  MeasureSet m;
  m.one_body_E = one_body_entropy(moments.kmean, omega);
  m.updown_E = updown_entropy(coeffs, omega);
  if (omega >= 2) {
    const PairReducedState r = reduced_pair_state(moments, omega);
    m.concurrence = concurrence_closed(r);
    m.negativity = negativity_updown(r);
    m.mixed_one_body_E = mixed_one_body_entanglement(m.concurrence.value);
  }
  return m;
}

}  // namespace lipkin
