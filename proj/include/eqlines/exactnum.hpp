#pragma once

// Exact scalars: rationals and elements of a real quadratic field Q(sqrt d).

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>

namespace eqlines {

class arithmetic_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class parse_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Arbitrary-precision rational, always stored in lowest terms with a
/// positive denominator.
class Rational {
 public:
  Rational() = default;
  Rational(long value) : v_(value) {}  // NOLINT: integers convert implicitly
  Rational(int value) : v_(value) {}   // NOLINT
  Rational(const mpz_class& value) : v_(value) {}  // NOLINT
  Rational(const mpz_class& num, const mpz_class& den);
  explicit Rational(const mpq_class& value) : v_(value) { v_.canonicalize(); }

  /// Accepts "p", "p/q" and "-p/q" with optional surrounding blanks.
  static Rational parse(std::string_view text);

  const mpz_class& num() const { return v_.get_num(); }
  const mpz_class& den() const { return v_.get_den(); }
  const mpq_class& raw() const { return v_; }

  int sign() const { return sgn(v_); }
  bool is_zero() const { return sgn(v_) == 0; }
  bool is_integer() const { return v_.get_den() == 1; }

  /// "p/q", or "p" when the denominator is one.
  std::string to_string() const;

  Rational operator-() const { return Rational(mpq_class(-v_)); }
  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const int c = cmp(a.v_, b.v_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  Rational inverse() const;
  Rational abs() const { return sign() < 0 ? -*this : *this; }
  /// Largest integer not exceeding the value.
  mpz_class floor() const;

 private:
  mpq_class v_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

/// True when n > 1 has no repeated prime factor.
bool is_squarefree(const mpz_class& n);

/// a + b*sqrt(d). A value with d == 0 is a plain rational that has not been
/// attached to a field yet; it adopts the radicand of whatever it meets.
/// Mixing two different radicands is an error.
class QuadExt {
 public:
  QuadExt() = default;
  QuadExt(const Rational& a) : a_(a) {}  // NOLINT: rationals embed implicitly
  QuadExt(long a) : a_(a) {}             // NOLINT
  QuadExt(int a) : a_(a) {}              // NOLINT
  QuadExt(Rational a, Rational b, long d);

  /// 1/sqrt(n) for a positive integer n, simplified to q*sqrt(d) with d
  /// square-free (or to a rational when n is a perfect square).
  static QuadExt inverse_sqrt(long n);
  /// sqrt(n), simplified the same way.
  static QuadExt sqrt_of(long n);

  /// Accepts a rational, "a + b*sqrt(d)", "a/b + c/e*sqrt(d)", "c*sqrt(d)",
  /// "sqrt(d)" and "p/sqrt(d)".
  static QuadExt parse(std::string_view text);

  const Rational& a() const { return a_; }
  const Rational& b() const { return b_; }
  long d() const { return d_; }
  bool is_rational() const { return b_.is_zero(); }
  bool is_zero() const { return a_.is_zero() && b_.is_zero(); }

  /// Exact sign of the real number a + b*sqrt(d).
  int sign() const;

  QuadExt conjugate() const { return QuadExt(a_, -b_, d_, Unchecked{}); }
  /// (a + b sqrt d)(a - b sqrt d), a rational.
  Rational norm() const;
  QuadExt inverse() const;
  QuadExt square() const { return *this * *this; }

  /// Serialized form: rationals as "p/q", irrationals as "a + b*sqrt(d)".
  std::string to_string() const;

  QuadExt operator-() const { return QuadExt(-a_, -b_, d_, Unchecked{}); }
  QuadExt& operator+=(const QuadExt& o);
  QuadExt& operator-=(const QuadExt& o);
  QuadExt& operator*=(const QuadExt& o);
  QuadExt& operator/=(const QuadExt& o) { return *this *= o.inverse(); }

  friend QuadExt operator+(QuadExt x, const QuadExt& y) { return x += y; }
  friend QuadExt operator-(QuadExt x, const QuadExt& y) { return x -= y; }
  friend QuadExt operator*(QuadExt x, const QuadExt& y) { return x *= y; }
  friend QuadExt operator/(QuadExt x, const QuadExt& y) { return x /= y; }

  /// Values compare by the real number they denote.
  friend bool operator==(const QuadExt& x, const QuadExt& y);
  friend std::strong_ordering operator<=>(const QuadExt& x, const QuadExt& y);

  QuadExt abs() const { return sign() < 0 ? -*this : *this; }
  /// Largest integer not exceeding the value.
  mpz_class floor() const;

 private:
  struct Unchecked {};
  QuadExt(Rational a, Rational b, long d, Unchecked) : a_(std::move(a)), b_(std::move(b)), d_(d) {}
  long join(const QuadExt& o) const;

  Rational a_;
  Rational b_;
  long d_ = 0;
};

std::ostream& operator<<(std::ostream& os, const QuadExt& q);

using ExactScalar = QuadExt;

/// Sign of a + b*sqrt(d) in {-1, 0, +1}.
int quad_sign(const QuadExt& x);

}  // namespace eqlines
