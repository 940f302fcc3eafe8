#include "lipkin/numerics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <string>

namespace lipkin {

namespace {

bool all_finite(const std::vector<double>& v) {
  return std::all_of(v.begin(), v.end(), [](double x) { return std::isfinite(x); });
}

double max_abs(const Matrix& m) {
  double r = 0.0;
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) r = std::max(r, std::abs(m(i, j)));
  return r;
}

double inf_norm(const Matrix& m) {
  double r = 0.0;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    double s = 0.0;
    for (std::size_t j = 0; j < m.cols(); ++j) s += std::abs(m(i, j));
    r = std::max(r, s);
  }
  return r;
}

void sort_ascending(std::vector<double>& values, Matrix& vectors) {
  const std::size_t n = values.size();
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return values[a] < values[b]; });
  std::vector<double> sv(n);
  Matrix sm(n, n);
  for (std::size_t j = 0; j < n; ++j) {
    sv[j] = values[order[j]];
    for (std::size_t i = 0; i < n; ++i) sm(i, j) = vectors(i, order[j]);
  }
  values = std::move(sv);
  vectors = std::move(sm);
}

}  // namespace

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("matrix product: shape mismatch");
  Matrix c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const double aik = a(i, k);
      if (aik == 0.0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) c(i, j) += aik * b(k, j);
    }
  return c;
}

std::vector<double> operator*(const Matrix& a, const std::vector<double>& x) {
  if (a.cols() != x.size()) throw std::invalid_argument("matvec: shape mismatch");
  std::vector<double> y(a.rows(), 0.0);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    double s = 0.0;
    for (std::size_t j = 0; j < a.cols(); ++j) s += a(i, j) * x[j];
    y[i] = s;
  }
  return y;
}

EigDecomposition eig_sym_tridiagonal(const SymTriMatrix& m) {
  const std::size_t n = m.diag.size();
  if (n == 0) throw std::invalid_argument("eig_sym_tridiagonal: empty matrix");
  if (m.offdiag.size() + 1 != n)
    throw std::invalid_argument("eig_sym_tridiagonal: offdiag length must be n-1");
  if (!all_finite(m.diag) || !all_finite(m.offdiag))
    throw std::invalid_argument("eig_sym_tridiagonal: non-finite entry");

  std::vector<double> d = m.diag;
  std::vector<double> e(n, 0.0);
  std::copy(m.offdiag.begin(), m.offdiag.end(), e.begin());
  Matrix z = Matrix::identity(n);

  const double eps = std::numeric_limits<double>::epsilon();
  for (std::size_t l = 0; l < n; ++l) {
    int iter = 0;
    std::size_t mm;
    do {
      for (mm = l; mm + 1 < n; ++mm) {
        const double dd = std::abs(d[mm]) + std::abs(d[mm + 1]);
        if (std::abs(e[mm]) <= eps * dd) break;
      }
      if (mm != l) {
        if (iter++ == 64)
          throw std::runtime_error("eig_sym_tridiagonal: QL iteration did not converge");
        double g = (d[l + 1] - d[l]) / (2.0 * e[l]);
        double r = std::hypot(g, 1.0);
        g = d[mm] - d[l] + e[l] / (g + std::copysign(r, g));
        double s = 1.0, c = 1.0, p = 0.0;
        bool underflow = false;
        for (std::size_t i1 = mm; i1-- > l;) {
          double f = s * e[i1];
          const double b = c * e[i1];
          r = std::hypot(f, g);
          e[i1 + 1] = r;
          if (r == 0.0) {
            d[i1 + 1] -= p;
            e[mm] = 0.0;
            underflow = true;
            break;
          }
          s = f / r;
          c = g / r;
          g = d[i1 + 1] - p;
          r = (d[i1] - g) * s + 2.0 * c * b;
          p = s * r;
          d[i1 + 1] = g + p;
          g = c * r - b;
          for (std::size_t k = 0; k < n; ++k) {
            f = z(k, i1 + 1);
            z(k, i1 + 1) = s * z(k, i1) + c * f;
            z(k, i1) = c * z(k, i1) - s * f;
          }
        }
        if (underflow) continue;
        d[l] -= p;
        e[l] = g;
        e[mm] = 0.0;
      }
    } while (mm != l);
  }

  EigDecomposition out{std::move(d), std::move(z)};
  sort_ascending(out.values, out.vectors);
  return out;
}

EigDecomposition eig_sym_dense(const Matrix& m) {
  const std::size_t n = m.rows();
  if (n == 0 || m.cols() != n) throw std::invalid_argument("eig_sym_dense: not square");
  const double scale = max_abs(m);
  if (!std::isfinite(scale)) throw std::invalid_argument("eig_sym_dense: non-finite entry");
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (std::abs(m(i, j) - m(j, i)) > 1e-9 * std::max(scale, 1e-300))
        throw std::invalid_argument("eig_sym_dense: matrix is not symmetric");

  Matrix a = m;
  Matrix v = Matrix::identity(n);
  // symmetrize exactly so the sweeps see one consistent value per pair
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      const double x = 0.5 * (a(i, j) + a(j, i));
      a(i, j) = a(j, i) = x;
    }

  double fro = 0.0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) fro += a(i, j) * a(i, j);
  fro = std::sqrt(fro);
  const double off_target = 1e-14 * std::max(fro, 1e-300);

  for (int sweep = 0; sweep < 64; ++sweep) {
    double off = 0.0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) off += 2.0 * a(i, j) * a(i, j);
    if (std::sqrt(off) <= off_target) break;

    for (std::size_t p = 0; p < n; ++p)
      for (std::size_t q = p + 1; q < n; ++q) {
        const double apq = a(p, q);
        if (apq == 0.0) continue;
        const double h = a(q, q) - a(p, p);
        double t;
        if (std::abs(apq) < 1e-300 * std::abs(h)) {
          t = apq / h;
        } else {
          const double theta = 0.5 * h / apq;
          t = 1.0 / (std::abs(theta) + std::sqrt(1.0 + theta * theta));
          if (theta < 0.0) t = -t;
        }
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const double s = t * c;
        const double tau = s / (1.0 + c);
        const double delta = t * apq;
        a(p, p) -= delta;
        a(q, q) += delta;
        a(p, q) = a(q, p) = 0.0;
        for (std::size_t r = 0; r < n; ++r) {
          if (r != p && r != q) {
            const double arp = a(r, p);
            const double arq = a(r, q);
            a(r, p) = arp - s * (arq + tau * arp);
            a(p, r) = a(r, p);
            a(r, q) = arq + s * (arp - tau * arq);
            a(q, r) = a(r, q);
          }
          const double vrp = v(r, p);
          const double vrq = v(r, q);
          v(r, p) = vrp - s * (vrq + tau * vrp);
          v(r, q) = vrq + s * (vrp - tau * vrq);
        }
      }
  }

  EigDecomposition out;
  out.values.resize(n);
  for (std::size_t i = 0; i < n; ++i) out.values[i] = a(i, i);
  out.vectors = std::move(v);
  sort_ascending(out.values, out.vectors);
  return out;
}

Matrix sqrtm_psd(const Matrix& m) {
  EigDecomposition eig = eig_sym_dense(m);
  const std::size_t n = eig.values.size();
  const double lmax = std::max(eig.values.back(), 0.0);
  if (eig.values.front() < -1e-8 * std::max(lmax, 1.0))
    throw std::domain_error("sqrtm_psd: matrix is not positive semidefinite");
  std::vector<double> root(n);
  for (std::size_t i = 0; i < n; ++i) root[i] = std::sqrt(std::max(eig.values[i], 0.0));

  Matrix s(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) {
      double acc = 0.0;
      for (std::size_t k = 0; k < n; ++k) acc += eig.vectors(i, k) * root[k] * eig.vectors(j, k);
      s(i, j) = s(j, i) = acc;
    }
  return s;
}

double log_binomial(long n, long k) {
  if (n < 0 || k < 0 || k > n) throw std::domain_error("log_binomial: need 0 <= k <= n");
  return std::lgamma(double(n) + 1.0) - (std::lgamma(double(k) + 1.0) + std::lgamma(double(n - k) + 1.0));
}

double ladder_factor(int omega, int k) {
  const double s = 0.5 * omega;
  const double mval = k - s;
  const double r = (s - mval) * (s + mval + 1.0);
  return r > 0.0 ? std::sqrt(r) : 0.0;
}

Matrix collective_rotation(int omega, double theta) {
  if (omega < 1) throw std::invalid_argument("collective_rotation: omega must be >= 1");
  if (!std::isfinite(theta)) throw std::invalid_argument("collective_rotation: non-finite angle");
  const std::size_t n = std::size_t(omega) + 1;

  // antisymmetric generator (S+ - S-)/2 on the ladder basis
  Matrix g(n, n);
  for (int k = 0; k < omega; ++k) {
    const double f = 0.5 * ladder_factor(omega, k);
    g(k + 1, k) = f;
    g(k, k + 1) = -f;
  }

  Matrix b(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) b(i, j) = theta * g(i, j);

  // scaling and squaring with a plain series on the scaled generator
  const double nrm = inf_norm(b);
  int squarings = 0;
  double scale = 1.0;
  while (nrm * scale > 0.5) {
    scale *= 0.5;
    ++squarings;
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) b(i, j) *= scale;

  Matrix result = Matrix::identity(n);
  Matrix term = Matrix::identity(n);
  for (int k = 1; k <= 32; ++k) {
    term = term * b;
    double tn = 0.0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        term(i, j) /= k;
        tn = std::max(tn, std::abs(term(i, j)));
        result(i, j) += term(i, j);
      }
    if (tn < 1e-20) break;
  }
  for (int s = 0; s < squarings; ++s) result = result * result;
  return result;
}

}  // namespace lipkin
