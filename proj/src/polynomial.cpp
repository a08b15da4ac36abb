#include "eqlines/polynomial.hpp"

#include <algorithm>
#include <utility>

namespace eqlines {

IntPolynomial::IntPolynomial(std::vector<mpz_class> coeffs) : c_(std::move(coeffs)) { trim(); }

IntPolynomial IntPolynomial::constant(const mpz_class& c) { return IntPolynomial({c}); }

IntPolynomial IntPolynomial::linear(const mpz_class& root) { return IntPolynomial({-root, 1}); }

IntPolynomial IntPolynomial::monomial(int degree) {
  std::vector<mpz_class> c(static_cast<size_t>(degree) + 1, 0);
  c.back() = 1;
  return IntPolynomial(std::move(c));
}

void IntPolynomial::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

mpz_class IntPolynomial::coeff(int k) const {
  if (k < 0 || k >= static_cast<int>(c_.size())) return 0;
  return c_[static_cast<size_t>(k)];
}

std::string IntPolynomial::to_string() const {
  if (c_.empty()) return "0";
  std::string out;
  for (int k = degree(); k >= 0; --k) {
    const mpz_class& c = c_[static_cast<size_t>(k)];
    if (c == 0) continue;
    const bool neg = c < 0;
    const mpz_class mag = abs(c);
    if (out.empty()) {
      if (neg) out += "-";
    } else {
      out += neg ? " - " : " + ";
    }
    const bool show = (mag != 1 || k == 0);
    if (show) out += mag.get_str();
    if (k >= 1) {
      if (show) out += "*";
      out += "x";
      if (k > 1) out += "^" + std::to_string(k);
    }
  }
  return out;
}

IntPolynomial poly_add(const IntPolynomial& p, const IntPolynomial& q) {
  std::vector<mpz_class> c(std::max(p.coeffs().size(), q.coeffs().size()), 0);
  for (size_t i = 0; i < p.coeffs().size(); ++i) c[i] += p.coeffs()[i];
  for (size_t i = 0; i < q.coeffs().size(); ++i) c[i] += q.coeffs()[i];
  return IntPolynomial(std::move(c));
}

IntPolynomial poly_sub(const IntPolynomial& p, const IntPolynomial& q) {
  std::vector<mpz_class> c(std::max(p.coeffs().size(), q.coeffs().size()), 0);
  for (size_t i = 0; i < p.coeffs().size(); ++i) c[i] += p.coeffs()[i];
  for (size_t i = 0; i < q.coeffs().size(); ++i) c[i] -= q.coeffs()[i];
  return IntPolynomial(std::move(c));
}

IntPolynomial poly_mul(const IntPolynomial& p, const IntPolynomial& q) {
  if (p.is_zero() || q.is_zero()) return IntPolynomial();
  std::vector<mpz_class> c(p.coeffs().size() + q.coeffs().size() - 1, 0);
  for (size_t i = 0; i < p.coeffs().size(); ++i) {
    for (size_t j = 0; j < q.coeffs().size(); ++j) c[i + j] += p.coeffs()[i] * q.coeffs()[j];
  }
  return IntPolynomial(std::move(c));
}

IntPolynomial poly_pow(const IntPolynomial& p, unsigned e) {
  IntPolynomial result = IntPolynomial::constant(1);
  IntPolynomial base = p;
  while (e > 0) {
    if (e & 1U) result = poly_mul(result, base);
    e >>= 1U;
    if (e > 0) base = poly_mul(base, base);
  }
  return result;
}

Rational poly_eval(const IntPolynomial& p, const Rational& x) {
  Rational acc;
  for (auto it = p.coeffs().rbegin(); it != p.coeffs().rend(); ++it) acc = acc * x + Rational(*it);
  return acc;
}

QuadExt poly_eval(const IntPolynomial& p, const QuadExt& x) {
  QuadExt acc;
  for (auto it = p.coeffs().rbegin(); it != p.coeffs().rend(); ++it) acc = acc * x + QuadExt(Rational(*it));
  return acc;
}

}  // namespace eqlines
