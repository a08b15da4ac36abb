#include "eqlines/linalg.hpp"

#include <algorithm>
#include <limits>

namespace eqlines {

namespace {

constexpr size_t npos = std::numeric_limits<size_t>::max();

bool is_zero(const mpz_class& x) { return sgn(x) == 0; }
bool is_zero(const Rational& x) { return x.is_zero(); }
bool is_zero(const QuadExt& x) { return x.is_zero(); }
int sign_of(const mpz_class& x) { return sgn(x); }
int sign_of(const QuadExt& x) { return x.sign(); }

void exact_div(mpz_class& a, const mpz_class& b) {
  mpz_divexact(a.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
}
void exact_div(QuadExt& a, const QuadExt& b) { a /= b; }

mpz_class lcm_of_dens(const std::vector<const Rational*>& xs) {
  mpz_class l = 1;
  for (const Rational* x : xs) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x->den().get_mpz_t());
  return l;
}

Matrix<mpz_class> integer_rows(const Matrix<Rational>& m) {
  Matrix<mpz_class> w(m.rows(), m.cols());
  for (size_t i = 0; i < m.rows(); ++i) {
    std::vector<const Rational*> row;
    for (size_t j = 0; j < m.cols(); ++j) row.push_back(&m(i, j));
    const mpz_class l = lcm_of_dens(row);
    for (size_t j = 0; j < m.cols(); ++j) w(i, j) = m(i, j).num() * (l / m(i, j).den());
  }
  return w;
}

// Clears rational denominators of a and b coefficients so that Bareiss runs
// inside Z[sqrt d].
Matrix<QuadExt> integral_quad(const SymMatrix<QuadExt>& m) {
  std::vector<const Rational*> all;
  for (size_t i = 0; i < m.order(); ++i) {
    for (size_t j = i; j < m.order(); ++j) {
      all.push_back(&m(i, j).a());
      all.push_back(&m(i, j).b());
    }
  }
  const QuadExt scale{Rational(lcm_of_dens(all))};
  Matrix<QuadExt> w(m.order(), m.order());
  for (size_t i = 0; i < m.order(); ++i) {
    for (size_t j = 0; j < m.order(); ++j) w(i, j) = m(i, j) * scale;
  }
  return w;
}

struct CoreResult {
  PsdVerdict verdict = PsdVerdict::positive_definite;
  std::vector<size_t> pivots;
  std::vector<size_t> rest;
  // Indefinite: negative diagonal at i (j == npos) or a zero-diagonal pair.
  size_t i = npos;
  size_t j = npos;
  int pair_sign = 0;
};

// Symmetric fraction-free elimination with diagonal pivots. Each pivot value
// is the principal minor on the pivots chosen so far, so the remaining block
// is a positive multiple of the Schur complement.
template <class R>
CoreResult symmetric_bareiss(Matrix<R> w) {
  const size_t n = w.rows();
  std::vector<char> active(n, 1);
  R prev(1);
  CoreResult out;
  while (true) {
    size_t piv = npos;
    for (size_t i = 0; i < n; ++i) {
      if (!active[i]) continue;
      const int s = sign_of(w(i, i));
      if (s < 0) {
        out.verdict = PsdVerdict::indefinite;
        out.i = i;
        break;
      }
      if (s > 0 && piv == npos) piv = i;
    }
    if (out.verdict == PsdVerdict::indefinite) break;
    if (piv == npos) {
      for (size_t i = 0; i < n && out.i == npos; ++i) {
        if (!active[i]) continue;
        for (size_t j = i + 1; j < n; ++j) {
          if (active[j] && !is_zero(w(i, j))) {
            out.verdict = PsdVerdict::indefinite;
            out.i = i;
            out.j = j;
            out.pair_sign = sign_of(w(i, j));
            break;
          }
        }
      }
      if (out.verdict != PsdVerdict::indefinite) {
        out.verdict = out.pivots.size() == n ? PsdVerdict::positive_definite
                                             : PsdVerdict::positive_semidefinite_singular;
      }
      break;
    }
    const R p = w(piv, piv);
    for (size_t i = 0; i < n; ++i) {
      if (!active[i] || i == piv) continue;
      for (size_t j = i; j < n; ++j) {
        if (!active[j] || j == piv) continue;
        R v = p * w(i, j) - w(i, piv) * w(piv, j);
        exact_div(v, prev);
        w(i, j) = v;
        w(j, i) = v;
      }
    }
    prev = p;
    active[piv] = 0;
    out.pivots.push_back(piv);
  }
  for (size_t i = 0; i < n; ++i) {
    if (active[i]) out.rest.push_back(i);
  }
  return out;
}

template <class F>
Matrix<F> solve_impl(Matrix<F> a, Matrix<F> b) {
  const size_t n = a.rows();
  if (a.cols() != n || b.rows() != n) throw linalg_error("solve: shape mismatch");
  for (size_t c = 0; c < n; ++c) {
    size_t r = c;
    while (r < n && is_zero(a(r, c))) ++r;
    if (r == n) throw linalg_error("solve: singular matrix");
    a.swap_rows(r, c);
    b.swap_rows(r, c);
    const F inv = a(c, c).inverse();
    for (size_t j = c; j < n; ++j) a(c, j) *= inv;
    for (size_t j = 0; j < b.cols(); ++j) b(c, j) *= inv;
    for (size_t i = 0; i < n; ++i) {
      if (i == c || is_zero(a(i, c))) continue;
      const F f = a(i, c);
      for (size_t j = c; j < n; ++j) a(i, j) -= f * a(c, j);
      for (size_t j = 0; j < b.cols(); ++j) b(i, j) -= f * b(c, j);
    }
  }
  return b;
}

template <class F>
PsdCertificate<F> finish_certificate(const SymMatrix<F>& m, const CoreResult& core) {
  PsdCertificate<F> cert;
  cert.verdict = core.verdict;
  cert.pivots = core.pivots;
  if (core.verdict != PsdVerdict::indefinite) {
    cert.rank = core.pivots.size();
    return cert;
  }
  const size_t n = m.order();
  std::vector<F> y(n, F(0));
  y[core.i] = F(1);
  if (core.j != npos) y[core.j] = F(core.pair_sign > 0 ? -1 : 1);
  // Lift to x with x_P = -M_PP^{-1} M_PR y so that x^T M x equals the Schur form.
  const auto& piv = core.pivots;
  if (!piv.empty()) {
    Matrix<F> a(piv.size(), piv.size());
    Matrix<F> rhs(piv.size(), 1);
    for (size_t p = 0; p < piv.size(); ++p) {
      for (size_t q = 0; q < piv.size(); ++q) a(p, q) = m(piv[p], piv[q]);
      F s(0);
      for (size_t r : core.rest) {
        if (!is_zero(y[r])) s += m(piv[p], r) * y[r];
      }
      rhs(p, 0) = s;
    }
    const Matrix<F> z = solve_impl(a, rhs);
    for (size_t p = 0; p < piv.size(); ++p) y[piv[p]] = -z(p, 0);
  }
  cert.witness_value = quad_form(m, y);
  if (!(cert.witness_value < F(0))) throw linalg_error("internal: indefiniteness witness failed");
  cert.witness = std::move(y);
  cert.rank = rank(m);
  return cert;
}

// Fraction-free row echelon form; returns pivot columns.
template <class R>
std::vector<size_t> bareiss_echelon(Matrix<R>& w, int* swap_sign = nullptr) {
  std::vector<size_t> pivcols;
  R prev(1);
  size_t r = 0;
  int sgn_acc = 1;
  for (size_t c = 0; c < w.cols() && r < w.rows(); ++c) {
    size_t i = r;
    while (i < w.rows() && is_zero(w(i, c))) ++i;
    if (i == w.rows()) continue;
    if (i != r) {
      w.swap_rows(i, r);
      sgn_acc = -sgn_acc;
    }
    const R p = w(r, c);
    for (size_t k = r + 1; k < w.rows(); ++k) {
      const R f = w(k, c);
      for (size_t j = c + 1; j < w.cols(); ++j) {
        R v = p * w(k, j) - f * w(r, j);
        exact_div(v, prev);
        w(k, j) = v;
      }
      w(k, c) = R(0);
    }
    prev = p;
    pivcols.push_back(c);
    ++r;
  }
  if (swap_sign) *swap_sign = sgn_acc;
  return pivcols;
}

template <class R, class F, class Conv>
std::vector<std::vector<F>> kernel_impl(Matrix<R> w, Conv conv) {
  const auto pivcols = bareiss_echelon(w);
  std::vector<char> is_piv(w.cols(), 0);
  for (size_t c : pivcols) is_piv[c] = 1;
  std::vector<std::vector<F>> basis;
  for (size_t f = 0; f < w.cols(); ++f) {
    if (is_piv[f]) continue;
    std::vector<F> x(w.cols(), F(0));
    x[f] = F(1);
    for (size_t k = pivcols.size(); k-- > 0;) {
      const size_t pc = pivcols[k];
      F s(0);
      for (size_t j = pc + 1; j < w.cols(); ++j) {
        if (!is_zero(x[j]) && !is_zero(w(k, j))) s += conv(w(k, j)) * x[j];
      }
      x[pc] = -s / conv(w(k, pc));
    }
    basis.push_back(std::move(x));
  }
  return basis;
}

}  // namespace

std::string to_string(PsdVerdict v) {
  switch (v) {
    case PsdVerdict::positive_definite:
      return "positive_definite";
    case PsdVerdict::positive_semidefinite_singular:
      return "positive_semidefinite_singular";
    case PsdVerdict::indefinite:
      return "indefinite";
  }
  return "?";
}

SymMatrix<mpz_class> clear_denominators(const SymMatrix<Rational>& m) {
  std::vector<const Rational*> all;
  for (size_t i = 0; i < m.order(); ++i) {
    for (size_t j = i; j < m.order(); ++j) all.push_back(&m(i, j));
  }
  const mpz_class l = lcm_of_dens(all);
  SymMatrix<mpz_class> out(m.order());
  for (size_t i = 0; i < m.order(); ++i) {
    for (size_t j = i; j < m.order(); ++j) out.at(i, j) = m(i, j).num() * (l / m(i, j).den());
  }
  return out;
}

bool all_rational(const SymMatrix<QuadExt>& m) {
  for (size_t i = 0; i < m.order(); ++i) {
    for (size_t j = i; j < m.order(); ++j) {
      if (!m(i, j).is_rational()) return false;
    }
  }
  return true;
}

SymMatrix<Rational> to_rational(const SymMatrix<QuadExt>& m) {
  if (!all_rational(m)) throw linalg_error("matrix has irrational entries");
  return m.map<Rational>([](const QuadExt& q) { return q.a(); });
}

Rational quad_form(const SymMatrix<Rational>& m, const std::vector<Rational>& x) {
  Rational s;
  for (size_t i = 0; i < m.order(); ++i) {
    if (x[i].is_zero()) continue;
    Rational row;
    for (size_t j = 0; j < m.order(); ++j) {
      if (!x[j].is_zero()) row += m(i, j) * x[j];
    }
    s += x[i] * row;
  }
  return s;
}

QuadExt quad_form(const SymMatrix<QuadExt>& m, const std::vector<QuadExt>& x) {
  QuadExt s;
  for (size_t i = 0; i < m.order(); ++i) {
    if (x[i].is_zero()) continue;
    QuadExt row;
    for (size_t j = 0; j < m.order(); ++j) {
      if (!x[j].is_zero()) row += m(i, j) * x[j];
    }
    s += x[i] * row;
  }
  return s;
}

PsdCertificate<Rational> psd_check(const SymMatrix<Rational>& m) {
  const CoreResult core = symmetric_bareiss(Matrix<mpz_class>(clear_denominators(m)));
  return finish_certificate(m, core);
}

PsdCertificate<Rational> psd_check(const SymMatrix<mpz_class>& m) {
  return psd_check(m.map<Rational>([](const mpz_class& z) { return Rational(z); }));
}

PsdCertificate<QuadExt> psd_check(const SymMatrix<QuadExt>& m) {
  CoreResult core;
  if (all_rational(m)) {
    core = symmetric_bareiss(Matrix<mpz_class>(clear_denominators(to_rational(m))));
  } else {
    core = symmetric_bareiss(integral_quad(m));
  }
  return finish_certificate(m, core);
}

size_t rank(const Matrix<mpz_class>& m) {
  Matrix<mpz_class> w = m;
  return bareiss_echelon(w).size();
}

size_t rank(const Matrix<Rational>& m) { return rank(integer_rows(m)); }

size_t rank(const Matrix<QuadExt>& m) {
  Matrix<QuadExt> w = m;
  return bareiss_echelon(w).size();
}

size_t rank(const SymMatrix<mpz_class>& m) { return rank(Matrix<mpz_class>(m)); }
size_t rank(const SymMatrix<Rational>& m) { return rank(Matrix<mpz_class>(clear_denominators(m))); }
size_t rank(const SymMatrix<QuadExt>& m) {
  if (all_rational(m)) return rank(to_rational(m));
  return rank(integral_quad(m));
}

std::vector<std::vector<Rational>> kernel_basis(const Matrix<Rational>& m) {
  return kernel_impl<mpz_class, Rational>(integer_rows(m), [](const mpz_class& z) { return Rational(z); });
}

std::vector<std::vector<QuadExt>> kernel_basis(const Matrix<QuadExt>& m) {
  return kernel_impl<QuadExt, QuadExt>(m, [](const QuadExt& q) { return q; });
}

mpz_class determinant(const Matrix<mpz_class>& m) {
  if (m.rows() != m.cols()) throw linalg_error("determinant of a non-square matrix");
  if (m.rows() == 0) return 1;
  Matrix<mpz_class> w = m;
  int s = 1;
  const auto piv = bareiss_echelon(w, &s);
  if (piv.size() < m.rows()) return 0;
  return s * w(m.rows() - 1, m.cols() - 1);
}

Matrix<Rational> solve(const Matrix<Rational>& a, const Matrix<Rational>& b) { return solve_impl(a, b); }
Matrix<QuadExt> solve(const Matrix<QuadExt>& a, const Matrix<QuadExt>& b) { return solve_impl(a, b); }

namespace {

template <class F>
SymMatrix<F> schur_impl(const SymMatrix<F>& m, size_t k) {
  const size_t n = m.order();
  if (k == 0 || k >= n) throw linalg_error("schur_complement: block size must be in [1, order)");
  std::vector<size_t> lead(k);
  for (size_t i = 0; i < k; ++i) lead[i] = i;
  if (psd_check(m.principal(lead)).verdict != PsdVerdict::positive_definite) {
    throw linalg_error("schur_complement: leading block is not positive definite; reorder the input");
  }
  Matrix<F> a(k, k);
  Matrix<F> b(k, n - k);
  for (size_t i = 0; i < k; ++i) {
    for (size_t j = 0; j < k; ++j) a(i, j) = m(i, j);
    for (size_t j = k; j < n; ++j) b(i, j - k) = m(i, j);
  }
  const Matrix<F> x = solve_impl(a, b);
  SymMatrix<F> out(n - k);
  for (size_t i = 0; i < n - k; ++i) {
    for (size_t j = i; j < n - k; ++j) {
      F s = m(k + i, k + j);
      for (size_t t = 0; t < k; ++t) s -= b(t, i) * x(t, j);
      out.at(i, j) = s;
    }
  }
  return out;
}

}  // namespace

SymMatrix<Rational> schur_complement(const SymMatrix<Rational>& m, size_t block_size) {
  return schur_impl(m, block_size);
}

SymMatrix<QuadExt> schur_complement(const SymMatrix<QuadExt>& m, size_t block_size) {
  return schur_impl(m, block_size);
}

std::pair<QuadExt, QuadExt> aI_bJ_inverse(const QuadExt& a, const QuadExt& b, long k) {
  if (a.is_zero()) throw linalg_error("aI + bJ is singular: a = 0");
  const QuadExt top = a + QuadExt(k) * b;
  if (top.is_zero()) throw linalg_error("aI + bJ is singular: a + k*b = 0");
  return {a.inverse(), -b / (a * top)};
}

IntPolynomial char_poly(const Matrix<mpz_class>& a) {
  const size_t n = a.rows();
  if (a.cols() != n) throw linalg_error("char_poly of a non-square matrix");
  std::vector<mpz_class> c{1};
  for (size_t k = 0; k < n; ++k) {
    std::vector<mpz_class> t(k + 2);
    t[0] = 1;
    t[1] = -a(k, k);
    std::vector<mpz_class> v(k);
    for (size_t i = 0; i < k; ++i) v[i] = a(i, k);
    for (size_t m = 0; m < k; ++m) {
      mpz_class dot = 0;
      for (size_t i = 0; i < k; ++i) dot += a(k, i) * v[i];
      t[m + 2] = -dot;
      if (m + 1 < k) {
        std::vector<mpz_class> nv(k, 0);
        for (size_t i = 0; i < k; ++i) {
          for (size_t j = 0; j < k; ++j) nv[i] += a(i, j) * v[j];
        }
        v.swap(nv);
      }
    }
    std::vector<mpz_class> nc(k + 2, 0);
    for (size_t i = 0; i < k + 2; ++i) {
      for (size_t j = 0; j <= std::min(i, k); ++j) nc[i] += t[i - j] * c[j];
    }
    c.swap(nc);
  }
  std::reverse(c.begin(), c.end());
  return IntPolynomial(std::move(c));
}

IntPolynomial char_poly(const SymMatrix<mpz_class>& m) { return char_poly(Matrix<mpz_class>(m)); }

}  // namespace eqlines
