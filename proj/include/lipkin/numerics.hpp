#pragma once

#include <cstddef>
#include <vector>

namespace lipkin {

/// Dense real matrix with value semantics, row-major storage.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, double value = 0.0)
      : rows_(rows), cols_(cols), data_(rows * cols, value) {}

  static Matrix identity(std::size_t n);

  double& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  double operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<double> data_;
};

Matrix operator*(const Matrix& a, const Matrix& b);
std::vector<double> operator*(const Matrix& a, const std::vector<double>& x);

/// Symmetric tridiagonal matrix: diag has length n, offdiag length n-1.
struct SymTriMatrix {
  std::vector<double> diag;
  std::vector<double> offdiag;
};

/// Full spectrum of a real symmetric matrix. Values ascending, vectors[.,i]
/// is the orthonormal eigenvector paired with values[i].
struct EigDecomposition {
  std::vector<double> values;
  Matrix vectors;
};

/// QL algorithm with implicit shifts (tql2 family). Throws
/// std::invalid_argument on non-finite entries or inconsistent lengths.
EigDecomposition eig_sym_tridiagonal(const SymTriMatrix& m);

/// Cyclic Jacobi rotations; converges to off-diagonal norm below 1e-14
/// relative. Throws std::invalid_argument if the input deviates from
/// symmetry by more than 1e-9 relative.
EigDecomposition eig_sym_dense(const Matrix& m);

/// Symmetric PSD square root via eigendecomposition. Eigenvalues in
/// [-1e-8, 0) are clamped to zero; anything below -1e-8 (relative to the
/// largest eigenvalue, floor 1) raises std::domain_error.
Matrix sqrtm_psd(const Matrix& m);

/// ln C(n, k), evaluated through log-gamma. Exact symmetry in k <-> n-k.
double log_binomial(long n, long k);

/// Orthogonal rotation exp(theta*(S+ - S-)/2) on the (omega+1)-dimensional
/// ladder basis K = 0..omega of a spin S = omega/2. Column 0 carries the
/// binomial amplitude profile of the rotated lowest state.
Matrix collective_rotation(int omega, double theta);

/// Ladder factor sqrt((S-M)(S+M+1)) for S = omega/2, M = k - omega/2,
/// i.e. the raising amplitude from level k to k+1.
double ladder_factor(int omega, int k);

}  // namespace lipkin
