#include "eqlines/exactnum.hpp"

#include <cctype>
#include <ostream>
#include <vector>

namespace eqlines {

namespace {

std::string strip_blanks(std::string_view text) {
  std::string out;
  out.reserve(text.size());
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) out.push_back(c);
  }
  return out;
}

mpz_class parse_integer(const std::string& digits, std::string_view whole) {
  std::string body = digits;
  if (!body.empty() && body[0] == '+') body.erase(0, 1);
  const size_t start = (!body.empty() && body[0] == '-') ? 1 : 0;
  if (body.size() == start) throw parse_error("empty integer in '" + std::string(whole) + "'");
  for (size_t i = start; i < body.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(body[i]))) {
      throw parse_error("bad integer '" + digits + "' in '" + std::string(whole) + "'");
    }
  }
  return mpz_class(body, 10);
}

// Splits n = s^2 * f with f square-free; n > 0.
std::pair<long, long> square_split(long n) {
  long s = 1;
  long f = 1;
  long m = n;
  for (long p = 2; p * p <= m; ++p) {
    int e = 0;
    while (m % p == 0) {
      m /= p;
      ++e;
    }
    for (int i = 0; i < e / 2; ++i) s *= p;
    if (e % 2 == 1) f *= p;
  }
  f *= m;
  return {s, f};
}

}  // namespace

Rational::Rational(const mpz_class& num, const mpz_class& den) {
  if (den == 0) throw arithmetic_error("zero denominator");
  v_ = mpq_class(num, den);
  v_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
  const std::string s = strip_blanks(text);
  if (s.empty()) throw parse_error("empty rational");
  const auto slash = s.find('/');
  if (slash == std::string::npos) return Rational(parse_integer(s, text));
  if (s.find('/', slash + 1) != std::string::npos) throw parse_error("too many '/' in '" + s + "'");
  const mpz_class num = parse_integer(s.substr(0, slash), text);
  const mpz_class den = parse_integer(s.substr(slash + 1), text);
  if (den == 0) throw parse_error("zero denominator in '" + s + "'");
  return Rational(num, den);
}

std::string Rational::to_string() const {
  if (v_.get_den() == 1) return v_.get_num().get_str();
  return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw arithmetic_error("division by zero");
  v_ /= o.v_;
  return *this;
}

Rational Rational::inverse() const {
  if (is_zero()) throw arithmetic_error("inverse of zero");
  return Rational(mpq_class(1) / v_);
}

mpz_class Rational::floor() const {
  mpz_class q;
  mpz_fdiv_q(q.get_mpz_t(), v_.get_num_mpz_t(), v_.get_den_mpz_t());
  return q;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

bool is_squarefree(const mpz_class& n) {
  if (n < 2) return false;
  mpz_class m = n;
  for (unsigned long p = 2; mpz_class(p) * p <= m; ++p) {
    if (mpz_divisible_ui_p(m.get_mpz_t(), p)) {
      m /= p;
      if (mpz_divisible_ui_p(m.get_mpz_t(), p)) return false;
    }
  }
  return true;
}

QuadExt::QuadExt(Rational a, Rational b, long d) : a_(std::move(a)), b_(std::move(b)), d_(d) {
  if (d_ < 0) throw arithmetic_error("negative radicand");
  if (d_ == 0) {
    if (!b_.is_zero()) throw arithmetic_error("sqrt(0) coefficient must be zero");
    return;
  }
  const auto [s, f] = square_split(d_);
  b_ *= Rational(s);
  if (f == 1) {
    a_ += b_;
    b_ = Rational();
    d_ = 0;
  } else {
    d_ = f;
  }
}

QuadExt QuadExt::sqrt_of(long n) {
  if (n < 0) throw arithmetic_error("sqrt of negative");
  if (n == 0) return QuadExt();
  return QuadExt(Rational(), Rational(1), n);
}

QuadExt QuadExt::inverse_sqrt(long n) {
  if (n <= 0) throw arithmetic_error("inverse sqrt needs a positive integer");
  return sqrt_of(n) * QuadExt(Rational(mpz_class(1), mpz_class(n)));
}

QuadExt QuadExt::parse(std::string_view text) {
  const std::string s = strip_blanks(text);
  if (s.empty()) throw parse_error("empty scalar");
  if (s.find("sqrt(") == std::string::npos) return QuadExt(Rational::parse(s));
  // Split into signed terms at top-level '+' and '-'.
  std::vector<std::string> terms;
  int depth = 0;
  size_t begin = 0;
  for (size_t i = 0; i < s.size(); ++i) {
    const char c = s[i];
    if (c == '(') ++depth;
    if (c == ')') --depth;
    if ((c == '+' || c == '-') && depth == 0 && i > begin) {
      terms.push_back(s.substr(begin, i - begin));
      begin = i;
    }
  }
  terms.push_back(s.substr(begin));
  QuadExt total;
  for (std::string term : terms) {
    int sign = 1;
    while (!term.empty() && (term[0] == '+' || term[0] == '-')) {
      if (term[0] == '-') sign = -sign;
      term.erase(0, 1);
    }
    const auto at = term.find("sqrt(");
    QuadExt value;
    if (at == std::string::npos) {
      value = QuadExt(Rational::parse(term));
    } else {
      const auto close = term.find(')', at);
      if (close == std::string::npos || close + 1 != term.size()) {
        throw parse_error("malformed sqrt term '" + term + "' in '" + s + "'");
      }
      const mpz_class radicand = parse_integer(term.substr(at + 5, close - at - 5), text);
      if (radicand < 0 || !radicand.fits_slong_p()) throw parse_error("bad radicand in '" + s + "'");
      const QuadExt root = sqrt_of(radicand.get_si());
      const std::string coeff = term.substr(0, at);
      if (coeff.empty()) {
        value = root;
      } else if (coeff.back() == '*') {
        value = QuadExt(Rational::parse(coeff.substr(0, coeff.size() - 1))) * root;
      } else if (coeff.back() == '/') {
        value = QuadExt(Rational::parse(coeff.substr(0, coeff.size() - 1))) / root;
      } else {
        throw parse_error("expected '*' or '/' before sqrt in '" + s + "'");
      }
    }
    total += sign > 0 ? value : -value;
  }
  return total;
}

long QuadExt::join(const QuadExt& o) const {
  if (d_ == 0) return o.d_;
  if (o.d_ == 0 || o.d_ == d_) return d_;
  if (b_.is_zero()) return o.d_;
  if (o.b_.is_zero()) return d_;
  throw arithmetic_error("mixing sqrt(" + std::to_string(d_) + ") and sqrt(" + std::to_string(o.d_) + ")");
}

int QuadExt::sign() const {
  const int sa = a_.sign();
  const int sb = b_.sign();
  if (sb == 0) return sa;
  if (sa == 0 || sa == sb) return sb;
  const Rational lhs = a_ * a_;
  const Rational rhs = b_ * b_ * Rational(d_);
  if (lhs > rhs) return sa;
  if (lhs < rhs) return sb;
  return 0;
}

int quad_sign(const QuadExt& x) { return x.sign(); }

Rational QuadExt::norm() const { return a_ * a_ - b_ * b_ * Rational(d_); }

QuadExt QuadExt::inverse() const {
  if (is_zero()) throw arithmetic_error("inverse of zero");
  if (b_.is_zero()) return QuadExt(a_.inverse(), Rational(), d_, Unchecked{});
  const Rational n = norm();
  return QuadExt(a_ / n, -b_ / n, d_, Unchecked{});
}

QuadExt& QuadExt::operator+=(const QuadExt& o) {
  d_ = join(o);
  a_ += o.a_;
  b_ += o.b_;
  return *this;
}

QuadExt& QuadExt::operator-=(const QuadExt& o) {
  d_ = join(o);
  a_ -= o.a_;
  b_ -= o.b_;
  return *this;
}

QuadExt& QuadExt::operator*=(const QuadExt& o) {
  const long d = join(o);
  if (b_.is_zero() && o.b_.is_zero()) {
    a_ *= o.a_;
  } else {
    Rational na = a_ * o.a_ + b_ * o.b_ * Rational(d);
    Rational nb = a_ * o.b_ + b_ * o.a_;
    a_ = std::move(na);
    b_ = std::move(nb);
  }
  d_ = d;
  return *this;
}

bool operator==(const QuadExt& x, const QuadExt& y) {
  if (x.a_ != y.a_ || x.b_ != y.b_) return false;
  return x.b_.is_zero() || x.d_ == y.d_;
}

std::strong_ordering operator<=>(const QuadExt& x, const QuadExt& y) {
  const int s = (x - y).sign();
  return s < 0 ? std::strong_ordering::less
               : (s > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
}

mpz_class QuadExt::floor() const {
  if (b_.is_zero()) return a_.floor();
  // Estimate from integer square roots, then correct exactly.
  const Rational sq = b_ * b_ * Rational(d_);
  mpz_class root;
  mpz_class sq_floor = sq.floor();
  mpz_sqrt(root.get_mpz_t(), sq_floor.get_mpz_t());
  mpz_class e = a_.floor() + (b_.sign() > 0 ? root : mpz_class(-root - 1));
  while ((*this - QuadExt(Rational(e))).sign() < 0) --e;
  while ((*this - QuadExt(Rational(mpz_class(e + 1)))).sign() >= 0) ++e;
  return e;
}

std::string QuadExt::to_string() const {
  if (b_.is_zero()) return a_.to_string();
  const std::string root = "sqrt(" + std::to_string(d_) + ")";
  const Rational mag = b_.abs();
  const std::string tail = (mag == Rational(1) ? root : mag.to_string() + "*" + root);
  if (a_.is_zero()) return (b_.sign() < 0 ? "-" : "") + tail;
  return a_.to_string() + (b_.sign() < 0 ? " - " : " + ") + tail;
}

std::ostream& operator<<(std::ostream& os, const QuadExt& q) { return os << q.to_string(); }

}  // namespace eqlines
