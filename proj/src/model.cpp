#include "lipkin/model.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace lipkin {

namespace {

// Diagonal Hamiltonian entry at level K, constant term included:
//   eps*M - W*(S(S+1) - M^2) + W*omega/2,  M = K - omega/2, S = omega/2.
double diagonal_entry(const ModelParams& p, int k) {
  const double s = 0.5 * p.omega;
  const double mval = k - s;
  const double w = p.coupling_w();
  return p.eps * mval - w * (s * (s + 1.0) - mval * mval) + w * s;
}

// Coupling between K and K+2: -(V/2) * g(K) * g(K+1).
double offdiagonal_entry(const ModelParams& p, int k) {
  return -0.5 * p.coupling_v() * ladder_factor(p.omega, k) * ladder_factor(p.omega, k + 1);
}

void check_parity_arg(int parity) {
  if (parity != 1 && parity != -1) throw std::invalid_argument("parity must be +1 or -1");
}

}  // namespace

void ModelParams::validate() const {
  if (omega < 1) throw std::invalid_argument("omega must be a positive integer");
  if (!(eps > 0.0) || !std::isfinite(eps)) throw std::invalid_argument("eps must be > 0");
  if (!(vx >= 0.0) || !std::isfinite(vx)) throw std::invalid_argument("vx must be >= 0");
  if (!(chi >= -1.0 && chi <= 1.0)) throw std::invalid_argument("chi must lie in [-1, 1]");
  if (omega == 1 && vx > 0.0)
    throw std::invalid_argument("omega = 1 admits no two-body coupling; vx must be 0");
}

std::vector<int> parity_block_levels(int omega, int parity) {
  check_parity_arg(parity);
  std::vector<int> levels;
  for (int k = parity > 0 ? 0 : 1; k <= omega; k += 2) levels.push_back(k);
  return levels;
}

SymTriMatrix build_hamiltonian(const ModelParams& p, int parity) {
  p.validate();
  check_parity_arg(parity);
  const std::vector<int> levels = parity_block_levels(p.omega, parity);
  SymTriMatrix h;
  h.diag.reserve(levels.size());
  for (int k : levels) h.diag.push_back(diagonal_entry(p, k));
  for (std::size_t i = 0; i + 1 < levels.size(); ++i)
    h.offdiag.push_back(offdiagonal_entry(p, levels[i]));
  return h;
}

GroundState ground_state(const ModelParams& p) {
  p.validate();

  struct Block {
    int parity;
    std::vector<int> levels;
    EigDecomposition eig;
  };
  std::vector<Block> blocks;
  for (int parity : {1, -1}) {
    Block b{parity, parity_block_levels(p.omega, parity), {}};
    if (b.levels.empty()) continue;
    b.eig = eig_sym_tridiagonal(build_hamiltonian(p, parity));
    blocks.push_back(std::move(b));
  }

  // blocks[0] is even parity; ties resolve there
  std::size_t best = 0;
  for (std::size_t i = 1; i < blocks.size(); ++i)
    if (blocks[i].eig.values.front() < blocks[best].eig.values.front()) best = i;

  GroundState gs;
  gs.parity = blocks[best].parity;
  gs.energy = blocks[best].eig.values.front();
  gs.degenerate = false;
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    if (i == best) continue;
    if (std::abs(blocks[i].eig.values.front() - gs.energy) < 1e-9 * p.eps) {
      gs.degenerate = true;
      if (blocks[i].parity > blocks[best].parity) {
        best = i;
        gs.parity = blocks[best].parity;
        gs.energy = blocks[best].eig.values.front();
      }
    }
  }

  gs.coeffs.assign(std::size_t(p.omega) + 1, 0.0);
  const Block& b = blocks[best];
  for (std::size_t i = 0; i < b.levels.size(); ++i)
    gs.coeffs[b.levels[i]] = b.eig.vectors(i, 0);

  double norm = 0.0, amax = 0.0;
  for (double c : gs.coeffs) {
    norm += c * c;
    amax = std::max(amax, std::abs(c));
  }
  norm = std::sqrt(norm);
  double sign = 1.0;
  for (double c : gs.coeffs)
    if (std::abs(c) > 1e-12 * amax) {
      sign = c < 0.0 ? -1.0 : 1.0;
      break;
    }
  for (double& c : gs.coeffs) c *= sign / norm;
  return gs;
}

IsotropicLevel isotropic_gs_level(const ModelParams& p) {
  p.validate();
  if (p.chi != 1.0) throw std::domain_error("isotropic_gs_level requires chi = 1");
  const double cvx = p.coupling_vx();
  IsotropicLevel out;
  const int kcap = p.omega / 2;
  // crossing couplings eps/(omega-1-2K) increase with K; walk up while passed
  for (int k = 0; k < kcap; ++k) {
    const double threshold = p.eps / (p.omega - 1 - 2 * k);
    if (cvx > threshold) {
      out.level = k + 1;
      out.degenerate = false;
    } else {
      if (cvx == threshold) out.degenerate = true;
      break;
    }
  }
  return out;
}

SpinMoments spin_moments(const std::vector<double>& coeffs, int omega) {
  if (int(coeffs.size()) != omega + 1)
    throw std::invalid_argument("spin_moments: coefficient vector must have length omega+1");
  const double s = 0.5 * omega;
  SpinMoments m;
  for (int k = 0; k <= omega; ++k) {
    const double w = coeffs[k] * coeffs[k];
    const double mval = k - s;
    m.sz += w * mval;
    m.sz2 += w * mval * mval;
  }
  for (int k = 0; k + 2 <= omega; ++k)
    m.splus2 += coeffs[k + 2] * coeffs[k] * ladder_factor(omega, k) * ladder_factor(omega, k + 1);
  m.kmean = m.sz + s;
  return m;
}

SpinMoments spin_moments(const GroundState& gs, int omega) {
  return spin_moments(gs.coeffs, omega);
}

std::vector<double> apply_hamiltonian(const ModelParams& p, const std::vector<double>& coeffs) {
  p.validate();
  if (int(coeffs.size()) != p.omega + 1)
    throw std::invalid_argument("apply_hamiltonian: coefficient vector must have length omega+1");
  std::vector<double> out(coeffs.size(), 0.0);
  for (int k = 0; k <= p.omega; ++k) {
    double acc = diagonal_entry(p, k) * coeffs[k];
    if (k >= 2) acc += offdiagonal_entry(p, k - 2) * coeffs[k - 2];
    if (k + 2 <= p.omega) acc += offdiagonal_entry(p, k) * coeffs[k + 2];
    out[k] = acc;
  }
  return out;
}

double rayleigh_quotient(const ModelParams& p, const std::vector<double>& coeffs) {
  const std::vector<double> hc = apply_hamiltonian(p, coeffs);
  double num = 0.0, den = 0.0;
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    num += coeffs[i] * hc[i];
    den += coeffs[i] * coeffs[i];
  }
  return num / den;
}

double eigenstate_residual(const ModelParams& p, const std::vector<double>& coeffs) {
  const std::vector<double> hc = apply_hamiltonian(p, coeffs);
  double num = 0.0, den = 0.0;
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    num += coeffs[i] * hc[i];
    den += coeffs[i] * coeffs[i];
  }
  const double lambda = num / den;
  double r2 = 0.0;
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    const double r = hc[i] - lambda * coeffs[i];
    r2 += r * r;
  }
  return std::sqrt(r2);
}

double hamiltonian_norm(const ModelParams& p) {
  p.validate();
  double norm = 0.0;
  for (int k = 0; k <= p.omega; ++k) {
    double row = std::abs(diagonal_entry(p, k));
    if (k >= 2) row += std::abs(offdiagonal_entry(p, k - 2));
    if (k + 2 <= p.omega) row += std::abs(offdiagonal_entry(p, k));
    norm = std::max(norm, row);
  }
  return norm;
}

}  // namespace lipkin
