#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>
#include <cstdint>
#include <numbers>
#include <random>
#include <stdexcept>

#include "doctest.h"
#include "lipkin/numerics.hpp"

using namespace lipkin;

namespace {

// exact binomial through the multiplicative rule; safe in uint64 for n <= 62
std::uint64_t exact_binomial(int n, int k) {
  if (k > n - k) k = n - k;
  std::uint64_t r = 1;
  for (int i = 1; i <= k; ++i) {
    r = r * std::uint64_t(n - k + i) / std::uint64_t(i);
  }
  return r;
}

Matrix dense_from_tridiagonal(const SymTriMatrix& t) {
  const std::size_t n = t.diag.size();
  Matrix a(n, n);
  for (std::size_t i = 0; i < n; ++i) a(i, i) = t.diag[i];
  for (std::size_t i = 0; i + 1 < n; ++i) a(i, i + 1) = a(i + 1, i) = t.offdiag[i];
  return a;
}

double reconstruction_error(const Matrix& a, const EigDecomposition& eig) {
  const std::size_t n = a.rows();
  double err = 0.0, scale = 0.0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      double acc = 0.0;
      for (std::size_t k = 0; k < n; ++k)
        acc += eig.vectors(i, k) * eig.values[k] * eig.vectors(j, k);
      err = std::max(err, std::abs(acc - a(i, j)));
      scale = std::max(scale, std::abs(a(i, j)));
    }
  return err / std::max(scale, 1e-300);
}

double orthonormality_error(const Matrix& v) {
  const std::size_t n = v.rows();
  double err = 0.0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      double acc = 0.0;
      for (std::size_t k = 0; k < n; ++k) acc += v(k, i) * v(k, j);
      err = std::max(err, std::abs(acc - (i == j ? 1.0 : 0.0)));
    }
  return err;
}

Matrix random_symmetric(std::size_t n, unsigned seed) {
  std::mt19937 rng(seed);
  std::uniform_real_distribution<double> dist(-1.0, 1.0);
  Matrix a(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) a(i, j) = a(j, i) = dist(rng);
  return a;
}

}  // namespace

TEST_CASE("tridiagonal eigensolver: closed-form 2x2") {
  SymTriMatrix t{{-1.0, 1.0}, {-1.0}};
  const EigDecomposition eig = eig_sym_tridiagonal(t);
  const double r2 = std::sqrt(2.0);
  CHECK(eig.values[0] == doctest::Approx(-r2).epsilon(1e-14));
  CHECK(eig.values[1] == doctest::Approx(r2).epsilon(1e-14));
  // ground vector of [[-1,-1],[-1,1]] is (cos pi/8, sin pi/8) up to sign
  const double c = std::abs(eig.vectors(0, 0));
  const double s = std::abs(eig.vectors(1, 0));
  CHECK(c == doctest::Approx(std::cos(std::numbers::pi / 8)).epsilon(1e-12));
  CHECK(s == doctest::Approx(std::sin(std::numbers::pi / 8)).epsilon(1e-12));
}

TEST_CASE("tridiagonal eigensolver: 1x1 and decoupled degenerate") {
  const EigDecomposition one = eig_sym_tridiagonal({{5.0}, {}});
  CHECK(one.values[0] == 5.0);
  CHECK(std::abs(one.vectors(0, 0)) == doctest::Approx(1.0));

  const EigDecomposition two = eig_sym_tridiagonal({{3.0, 3.0}, {0.0}});
  CHECK(two.values[0] == doctest::Approx(3.0));
  CHECK(two.values[1] == doctest::Approx(3.0));
  CHECK(orthonormality_error(two.vectors) < 1e-12);
}

TEST_CASE("tridiagonal eigensolver: reconstruction on random matrices") {
  std::mt19937 rng(7);
  std::uniform_real_distribution<double> dist(-2.0, 2.0);
  for (std::size_t n : {3u, 8u, 33u, 64u}) {
    SymTriMatrix t;
    for (std::size_t i = 0; i < n; ++i) t.diag.push_back(dist(rng));
    for (std::size_t i = 0; i + 1 < n; ++i) t.offdiag.push_back(dist(rng));
    const EigDecomposition eig = eig_sym_tridiagonal(t);
    CHECK(reconstruction_error(dense_from_tridiagonal(t), eig) < 1e-10);
    CHECK(orthonormality_error(eig.vectors) < 1e-12);
    for (std::size_t i = 0; i + 1 < n; ++i) CHECK(eig.values[i] <= eig.values[i + 1]);
  }
}

TEST_CASE("tridiagonal eigensolver: rejects invalid input") {
  CHECK_THROWS_AS(eig_sym_tridiagonal({{1.0, std::nan("")}, {0.5}}), std::invalid_argument);
  CHECK_THROWS_AS(eig_sym_tridiagonal({{1.0, 2.0}, {0.1, 0.2}}), std::invalid_argument);
}

TEST_CASE("dense eigensolver: diagonal and identity") {
  const EigDecomposition id = eig_sym_dense(Matrix::identity(4));
  for (double v : id.values) CHECK(v == doctest::Approx(1.0).epsilon(1e-14));

  Matrix d(3, 3);
  d(0, 0) = 1.0;
  d(1, 1) = 2.0;
  d(2, 2) = 3.0;
  const EigDecomposition eig = eig_sym_dense(d);
  CHECK(eig.values[0] == doctest::Approx(1.0));
  CHECK(eig.values[1] == doctest::Approx(2.0));
  CHECK(eig.values[2] == doctest::Approx(3.0));
}

TEST_CASE("dense eigensolver: reconstruction and orthonormality") {
  for (unsigned seed : {1u, 2u, 3u}) {
    const Matrix a = random_symmetric(8, seed);
    const EigDecomposition eig = eig_sym_dense(a);
    CHECK(reconstruction_error(a, eig) < 1e-10);
    CHECK(orthonormality_error(eig.vectors) < 1e-12);
  }
  const Matrix big = random_symmetric(64, 11);
  const EigDecomposition eig = eig_sym_dense(big);
  CHECK(reconstruction_error(big, eig) < 1e-10);
}

TEST_CASE("dense eigensolver: rejects asymmetric input") {
  Matrix a(2, 2);
  a(0, 0) = 1.0;
  a(0, 1) = 0.5;
  a(1, 0) = 0.5 + 1e-6;
  a(1, 1) = 2.0;
  CHECK_THROWS_AS(eig_sym_dense(a), std::invalid_argument);
}

TEST_CASE("sqrtm_psd: diagonal cases and squaring property") {
  const Matrix id = sqrtm_psd(Matrix::identity(5));
  for (std::size_t i = 0; i < 5; ++i) CHECK(id(i, i) == doctest::Approx(1.0));

  Matrix d(2, 2);
  d(0, 0) = 4.0;
  d(1, 1) = 9.0;
  const Matrix s = sqrtm_psd(d);
  CHECK(s(0, 0) == doctest::Approx(2.0));
  CHECK(s(1, 1) == doctest::Approx(3.0));

  // random PSD: S*S == m within 1e-9*||m||
  const Matrix g = random_symmetric(6, 5);
  Matrix psd(6, 6);
  for (std::size_t i = 0; i < 6; ++i)
    for (std::size_t j = 0; j < 6; ++j) {
      double acc = 0.0;
      for (std::size_t k = 0; k < 6; ++k) acc += g(i, k) * g(j, k);
      psd(i, j) = acc;
    }
  const Matrix r = sqrtm_psd(psd);
  const Matrix rr = r * r;
  double scale = 0.0, err = 0.0;
  for (std::size_t i = 0; i < 6; ++i)
    for (std::size_t j = 0; j < 6; ++j) {
      scale = std::max(scale, std::abs(psd(i, j)));
      err = std::max(err, std::abs(rr(i, j) - psd(i, j)));
    }
  CHECK(err < 1e-9 * scale);
}

TEST_CASE("sqrtm_psd: projector fixed point and clamping policy") {
  // orthogonal projector onto a random 2d subspace of R^4
  const Matrix g = random_symmetric(4, 9);
  const EigDecomposition basis = eig_sym_dense(g);
  Matrix proj(4, 4);
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j)
      proj(i, j) = basis.vectors(i, 0) * basis.vectors(j, 0) +
                   basis.vectors(i, 1) * basis.vectors(j, 1);
  const Matrix s = sqrtm_psd(proj);
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j)
      CHECK(s(i, j) == doctest::Approx(proj(i, j)).epsilon(1e-10).scale(1.0));

  Matrix tiny(2, 2);
  tiny(0, 0) = 1.0;
  tiny(1, 1) = -1e-12;  // roundoff-scale negative eigenvalue is clamped
  const Matrix ok = sqrtm_psd(tiny);
  CHECK(ok(1, 1) == doctest::Approx(0.0).scale(1.0));

  Matrix bad(2, 2);
  bad(0, 0) = 1.0;
  bad(1, 1) = -1e-6;
  CHECK_THROWS_AS(sqrtm_psd(bad), std::domain_error);
}

TEST_CASE("log_binomial: anchors and exact oracle") {
  CHECK(log_binomial(50, 0) == 0.0);
  CHECK(log_binomial(2, 1) == doctest::Approx(std::log(2.0)).epsilon(1e-15));
  // C(50,25) = 126410606437752, exactly representable in double
  const double exact = std::log(126410606437752.0);
  CHECK(log_binomial(50, 25) == doctest::Approx(exact).epsilon(1e-12));
  CHECK(log_binomial(50, 25) / std::log(2.0) == doctest::Approx(46.8447).epsilon(1e-4));

  for (int n : {1, 5, 17, 40, 62})
    for (int k = 0; k <= n; ++k) {
      const double ref = std::log(double(exact_binomial(n, k)));
      CHECK(log_binomial(n, k) == doctest::Approx(ref).epsilon(1e-12).scale(1.0));
    }
  CHECK_THROWS_AS(log_binomial(4, 5), std::domain_error);
}

TEST_CASE("log_binomial: symmetry is exact and large n stays accurate") {
  for (int n : {9, 100, 1000, 10000})
    for (int k : {0, 1, n / 3, n / 2}) CHECK(log_binomial(n, k) == log_binomial(n, n - k));

  // independent route: cumulative sum of log((n-k+i)/i)
  const int n = 10000, k = 5000;
  double ref = 0.0;
  for (int i = 1; i <= k; ++i) ref += std::log(double(n - k + i)) - std::log(double(i));
  CHECK(log_binomial(n, k) == doctest::Approx(ref).epsilon(1e-12));
}

TEST_CASE("collective_rotation: identity, spin-1/2 closed form") {
  const Matrix id = collective_rotation(5, 0.0);
  for (std::size_t i = 0; i < 6; ++i)
    for (std::size_t j = 0; j < 6; ++j)
      CHECK(id(i, j) == doctest::Approx(i == j ? 1.0 : 0.0).scale(1.0));

  for (double theta : {0.3, 1.1, 2.5}) {
    const Matrix r = collective_rotation(1, theta);
    CHECK(r(0, 0) == doctest::Approx(std::cos(theta / 2)).epsilon(1e-12).scale(1.0));
    CHECK(r(0, 1) == doctest::Approx(-std::sin(theta / 2)).epsilon(1e-12).scale(1.0));
    CHECK(r(1, 0) == doctest::Approx(std::sin(theta / 2)).epsilon(1e-12).scale(1.0));
    CHECK(r(1, 1) == doctest::Approx(std::cos(theta / 2)).epsilon(1e-12).scale(1.0));
  }
}

TEST_CASE("collective_rotation: column 0 carries the binomial profile") {
  for (int omega : {2, 5, 12, 20}) {
    for (double theta : {0.2, 0.7, 1.3, 2.0}) {
      const Matrix r = collective_rotation(omega, theta);
      for (int k = 0; k <= omega; ++k) {
        const double ck = std::sqrt(double(exact_binomial(omega, k))) *
                          std::pow(std::cos(theta / 2), omega - k) *
                          std::pow(std::sin(theta / 2), k);
        CHECK(r(k, 0) == doctest::Approx(ck).epsilon(1e-10).scale(1.0));
      }
    }
  }
}

TEST_CASE("collective_rotation: orthogonality and group law") {
  for (int omega : {3, 10, 25}) {
    const Matrix r = collective_rotation(omega, 0.9);
    double err = 0.0;
    const std::size_t n = std::size_t(omega) + 1;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        double acc = 0.0;
        for (std::size_t k = 0; k < n; ++k) acc += r(k, i) * r(k, j);
        err = std::max(err, std::abs(acc - (i == j ? 1.0 : 0.0)));
      }
    CHECK(err < 1e-10);

    const Matrix a = collective_rotation(omega, 0.4);
    const Matrix b = collective_rotation(omega, 0.8);
    const Matrix ab = a * b;
    const Matrix sum = collective_rotation(omega, 1.2);
    double diff = 0.0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) diff = std::max(diff, std::abs(ab(i, j) - sum(i, j)));
    CHECK(diff < 1e-9);
  }
}
