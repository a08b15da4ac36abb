#pragma once

// Exact dense linear algebra over Z, Q and Q(sqrt d).

#include <gmpxx.h>

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "eqlines/exactnum.hpp"
#include "eqlines/polynomial.hpp"

namespace eqlines {

class linalg_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Symmetric matrix stored as the packed upper triangle.
template <class T>
class SymMatrix {
 public:
  SymMatrix() = default;
  explicit SymMatrix(size_t order, const T& fill = T()) : n_(order), e_(order * (order + 1) / 2, fill) {}

  static SymMatrix identity(size_t n) { return aI_bJ(n, T(1), T(0)); }
  static SymMatrix ones(size_t n) { return SymMatrix(n, T(1)); }
  static SymMatrix aI_bJ(size_t n, const T& a, const T& b) {
    SymMatrix m(n, b);
    for (size_t i = 0; i < n; ++i) m.at(i, i) = a + b;
    return m;
  }

  size_t order() const { return n_; }
  const T& operator()(size_t i, size_t j) const { return e_[index(i, j)]; }
  T& at(size_t i, size_t j) { return e_[index(i, j)]; }
  void set(size_t i, size_t j, T v) { e_[index(i, j)] = std::move(v); }

  SymMatrix principal(const std::vector<size_t>& idx) const {
    SymMatrix out(idx.size());
    for (size_t a = 0; a < idx.size(); ++a) {
      for (size_t b = a; b < idx.size(); ++b) out.at(a, b) = (*this)(idx[a], idx[b]);
    }
    return out;
  }

  template <class U, class Fn>
  SymMatrix<U> map(Fn fn) const {
    SymMatrix<U> out(n_);
    for (size_t i = 0; i < n_; ++i) {
      for (size_t j = i; j < n_; ++j) out.at(i, j) = fn((*this)(i, j));
    }
    return out;
  }

  friend bool operator==(const SymMatrix& a, const SymMatrix& b) { return a.n_ == b.n_ && a.e_ == b.e_; }

 private:
  size_t index(size_t i, size_t j) const {
    if (i > j) std::swap(i, j);
    if (j >= n_) throw linalg_error("matrix index out of range");
    return i * n_ - i * (i - 1) / 2 + (j - i);
  }

  size_t n_ = 0;
  std::vector<T> e_;
};

/// Dense row-major matrix, used where symmetry is not available.
template <class T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(size_t rows, size_t cols, const T& fill = T()) : r_(rows), c_(cols), e_(rows * cols, fill) {}
  explicit Matrix(const SymMatrix<T>& s) : Matrix(s.order(), s.order()) {
    for (size_t i = 0; i < r_; ++i) {
      for (size_t j = 0; j < c_; ++j) (*this)(i, j) = s(i, j);
    }
  }

  size_t rows() const { return r_; }
  size_t cols() const { return c_; }
  T& operator()(size_t i, size_t j) { return e_[i * c_ + j]; }
  const T& operator()(size_t i, size_t j) const { return e_[i * c_ + j]; }
  void swap_rows(size_t a, size_t b) {
    if (a == b) return;
    for (size_t j = 0; j < c_; ++j) std::swap((*this)(a, j), (*this)(b, j));
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.r_ == b.r_ && a.c_ == b.c_ && a.e_ == b.e_;
  }

 private:
  size_t r_ = 0;
  size_t c_ = 0;
  std::vector<T> e_;
};

template <class T>
Matrix<T> operator*(const Matrix<T>& a, const Matrix<T>& b) {
  if (a.cols() != b.rows()) throw linalg_error("shape mismatch in product");
  Matrix<T> out(a.rows(), b.cols());
  for (size_t i = 0; i < a.rows(); ++i) {
    for (size_t k = 0; k < a.cols(); ++k) {
      if (a(i, k) == T(0)) continue;
      for (size_t j = 0; j < b.cols(); ++j) out(i, j) += a(i, k) * b(k, j);
    }
  }
  return out;
}

enum class PsdVerdict { positive_definite, positive_semidefinite_singular, indefinite };

std::string to_string(PsdVerdict v);

template <class F>
struct PsdCertificate {
  PsdVerdict verdict = PsdVerdict::positive_definite;
  size_t rank = 0;
  /// Positive pivots in elimination order; their leading principal minors are > 0.
  std::vector<size_t> pivots;
  /// For an indefinite verdict: x with x^T M x < 0, and that value.
  std::vector<F> witness;
  F witness_value{};

  bool psd() const { return verdict != PsdVerdict::indefinite; }
};

PsdCertificate<Rational> psd_check(const SymMatrix<Rational>& m);
PsdCertificate<QuadExt> psd_check(const SymMatrix<QuadExt>& m);
PsdCertificate<Rational> psd_check(const SymMatrix<mpz_class>& m);

/// x^T M x
Rational quad_form(const SymMatrix<Rational>& m, const std::vector<Rational>& x);
QuadExt quad_form(const SymMatrix<QuadExt>& m, const std::vector<QuadExt>& x);

size_t rank(const Matrix<mpz_class>& m);
size_t rank(const Matrix<Rational>& m);
size_t rank(const Matrix<QuadExt>& m);
size_t rank(const SymMatrix<mpz_class>& m);
size_t rank(const SymMatrix<Rational>& m);
size_t rank(const SymMatrix<QuadExt>& m);

/// Basis of {x : M x = 0}.
std::vector<std::vector<Rational>> kernel_basis(const Matrix<Rational>& m);
std::vector<std::vector<QuadExt>> kernel_basis(const Matrix<QuadExt>& m);

mpz_class determinant(const Matrix<mpz_class>& m);

/// Solves A X = B for square nonsingular A.
Matrix<Rational> solve(const Matrix<Rational>& a, const Matrix<Rational>& b);
Matrix<QuadExt> solve(const Matrix<QuadExt>& a, const Matrix<QuadExt>& b);

/// C - B^T A^{-1} B for the split after the first block_size rows. The
/// leading block must be positive definite.
SymMatrix<Rational> schur_complement(const SymMatrix<Rational>& m, size_t block_size);
SymMatrix<QuadExt> schur_complement(const SymMatrix<QuadExt>& m, size_t block_size);

/// (a', b') with (aI + bJ)(a'I + b'J) = I for k x k matrices.
std::pair<QuadExt, QuadExt> aI_bJ_inverse(const QuadExt& a, const QuadExt& b, long k);

/// det(xI - M), by the division-free Berkowitz recurrence.
IntPolynomial char_poly(const Matrix<mpz_class>& m);
IntPolynomial char_poly(const SymMatrix<mpz_class>& m);

/// Integer matrix with every entry multiplied by the lcm of denominators.
SymMatrix<mpz_class> clear_denominators(const SymMatrix<Rational>& m);

/// Converts to Rational entries; throws when an entry is irrational.
SymMatrix<Rational> to_rational(const SymMatrix<QuadExt>& m);
bool all_rational(const SymMatrix<QuadExt>& m);

}  // namespace eqlines
