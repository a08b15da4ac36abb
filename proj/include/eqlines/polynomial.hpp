#pragma once

// Dense integer polynomials, coefficients stored low degree first.

#include <gmpxx.h>

#include <string>
#include <vector>

#include "eqlines/exactnum.hpp"

namespace eqlines {

class IntPolynomial {
 public:
  IntPolynomial() = default;
  explicit IntPolynomial(std::vector<mpz_class> coeffs);
  static IntPolynomial constant(const mpz_class& c);
  /// x - root
  static IntPolynomial linear(const mpz_class& root);
  static IntPolynomial monomial(int degree);

  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const std::vector<mpz_class>& coeffs() const { return c_; }
  mpz_class coeff(int k) const;
  mpz_class leading() const { return c_.empty() ? mpz_class(0) : c_.back(); }

  std::string to_string() const;

  friend bool operator==(const IntPolynomial& p, const IntPolynomial& q) { return p.c_ == q.c_; }

 private:
  void trim();
  std::vector<mpz_class> c_;
};

IntPolynomial poly_add(const IntPolynomial& p, const IntPolynomial& q);
IntPolynomial poly_sub(const IntPolynomial& p, const IntPolynomial& q);
IntPolynomial poly_mul(const IntPolynomial& p, const IntPolynomial& q);
IntPolynomial poly_pow(const IntPolynomial& p, unsigned e);
Rational poly_eval(const IntPolynomial& p, const Rational& x);
QuadExt poly_eval(const IntPolynomial& p, const QuadExt& x);

}  // namespace eqlines
