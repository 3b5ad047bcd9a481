#include "sst/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <sstream>

#include "sst/errors.hpp"

namespace sst {

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long>> init) {
  rows_ = init.size();
  cols_ = rows_ ? init.begin()->size() : 0;
  a_.reserve(rows_ * cols_);
  for (auto& row : init) {
    if (row.size() != cols_) throw InputError("ragged matrix literal");
    for (long v : row) a_.emplace_back(v);
  }
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

IntMatrix IntMatrix::operator*(const IntMatrix& o) const {
  if (cols_ != o.rows_) throw InputError("matrix size mismatch in product");
  IntMatrix r(rows_, o.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const mpz_class& a = (*this)(i, k);
      if (a == 0) continue;
      for (std::size_t j = 0; j < o.cols_; ++j)
        if (o(k, j) != 0) r(i, j) += a * o(k, j);
    }
  return r;
}

bool IntMatrix::is_zero() const {
  return std::all_of(a_.begin(), a_.end(), [](const mpz_class& x) { return x == 0; });
}

IntMatrix IntMatrix::select_columns(const std::vector<std::size_t>& cols) const {
  IntMatrix r(rows_, cols.size());
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols.size(); ++j) r(i, j) = (*this)(i, cols[j]);
  return r;
}

IntMatrix IntMatrix::principal(const std::vector<std::size_t>& keep) const {
  IntMatrix r(keep.size(), keep.size());
  for (std::size_t i = 0; i < keep.size(); ++i)
    for (std::size_t j = 0; j < keep.size(); ++j) r(i, j) = (*this)(keep[i], keep[j]);
  return r;
}

std::string IntMatrix::to_string() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < rows_; ++i) {
    os << '[';
    for (std::size_t j = 0; j < cols_; ++j) os << (j ? " " : "") << (*this)(i, j).get_str();
    os << "]\n";
  }
  return os.str();
}

namespace {

struct Overflow {};

using i64 = std::int64_t;

inline i64 zabs(i64 a) {
  if (a == INT64_MIN) throw Overflow{};
  return a < 0 ? -a : a;
}
inline mpz_class zabs(const mpz_class& a) { return abs(a); }
inline i64 submul(i64 a, i64 q, i64 b) {
  i64 p, r;
  if (__builtin_mul_overflow(q, b, &p) || __builtin_sub_overflow(a, p, &r)) throw Overflow{};
  return r;
}
inline mpz_class submul(const mpz_class& a, const mpz_class& q, const mpz_class& b) { return a - q * b; }
inline bool zless(i64 a, i64 b) { return a < b; }
inline bool zless(const mpz_class& a, const mpz_class& b) { return cmp(a, b) < 0; }

// Diagonalize by unimodular row and column operations; returns |diagonal|.
template <class Z>
std::vector<Z> diagonalize(std::vector<Z> a, std::size_t r, std::size_t c) {
  auto at = [&](std::size_t i, std::size_t j) -> Z& { return a[i * c + j]; };
  auto swap_rows = [&](std::size_t i, std::size_t k) {
    if (i == k) return;
    for (std::size_t j = 0; j < c; ++j) std::swap(at(i, j), at(k, j));
  };
  auto swap_cols = [&](std::size_t j, std::size_t k) {
    if (j == k) return;
    for (std::size_t i = 0; i < r; ++i) std::swap(at(i, j), at(i, k));
  };
  std::vector<Z> diag;
  for (std::size_t t = 0; t < std::min(r, c); ++t) {
    std::size_t pi = r, pj = c;
    Z best = 0;
    for (std::size_t i = t; i < r; ++i)
      for (std::size_t j = t; j < c; ++j) {
        const Z& v = at(i, j);
        if (v == 0) continue;
        Z av = zabs(v);
        if (pi == r || zless(av, best)) {
          best = av;
          pi = i;
          pj = j;
          if (best == 1) goto found;
        }
      }
  found:
    if (pi == r) break;
    swap_rows(t, pi);
    swap_cols(t, pj);
    for (;;) {
      bool dirty = false;
      for (std::size_t i = t + 1; i < r; ++i) {
        if (at(i, t) == 0) continue;
        Z q = at(i, t) / at(t, t);
        if (q != 0)
          for (std::size_t j = t; j < c; ++j)
            if (at(t, j) != 0) at(i, j) = submul(at(i, j), q, at(t, j));
        if (at(i, t) != 0) dirty = true;
      }
      for (std::size_t j = t + 1; j < c; ++j) {
        if (at(t, j) == 0) continue;
        Z q = at(t, j) / at(t, t);
        if (q != 0)
          for (std::size_t i = t; i < r; ++i)
            if (at(i, t) != 0) at(i, j) = submul(at(i, j), q, at(i, t));
        if (at(t, j) != 0) dirty = true;
      }
      if (!dirty) break;
      std::size_t bi = t, bj = t;
      Z bv = zabs(at(t, t));
      for (std::size_t i = t + 1; i < r; ++i)
        if (at(i, t) != 0 && zless(zabs(at(i, t)), bv)) {
          bv = zabs(at(i, t));
          bi = i;
          bj = t;
        }
      for (std::size_t j = t + 1; j < c; ++j)
        if (at(t, j) != 0 && zless(zabs(at(t, j)), bv)) {
          bv = zabs(at(t, j));
          bi = t;
          bj = j;
        }
      swap_rows(t, bi);
      swap_cols(t, bj);
    }
    diag.push_back(zabs(at(t, t)));
  }
  return diag;
}

std::vector<mpz_class> normalize_invariants(std::vector<mpz_class> d) {
  std::sort(d.begin(), d.end(), [](const mpz_class& x, const mpz_class& y) { return cmp(x, y) < 0; });
  for (std::size_t i = 0; i < d.size(); ++i)
    for (std::size_t j = i + 1; j < d.size(); ++j) {
      if (d[j] % d[i] == 0) continue;
      mpz_class g = gcd(d[i], d[j]);
      mpz_class l = d[i] / g * d[j];
      d[i] = g;
      d[j] = l;
    }
  return d;
}

// log2 of the Hadamard bound on all minors.
double log2_hadamard(const IntMatrix& m) {
  double s = 0;
  for (std::size_t j = 0; j < m.cols(); ++j) {
    double n2 = 0;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      double v = m(i, j).get_d();
      n2 += v * v;
    }
    if (n2 > 1) s += 0.5 * std::log2(n2);
  }
  return s;
}

bool fits_small(const IntMatrix& m) {
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (!m(i, j).fits_slong_p()) return false;
  return log2_hadamard(m) < 60.0;
}

std::size_t rank_i64(const IntMatrix& m) {
  const std::size_t r = m.rows(), c = m.cols();
  std::vector<i64> a(r * c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) a[i * c + j] = m(i, j).get_si();
  std::size_t rk = 0;
  i64 prev = 1;
  for (std::size_t col = 0; col < c && rk < r; ++col) {
    std::size_t p = rk;
    while (p < r && a[p * c + col] == 0) ++p;
    if (p == r) continue;
    if (p != rk)
      for (std::size_t j = 0; j < c; ++j) std::swap(a[p * c + j], a[rk * c + j]);
    const i64 piv = a[rk * c + col];
    for (std::size_t i = rk + 1; i < r; ++i) {
      const i64 f = a[i * c + col];
      for (std::size_t j = col + 1; j < c; ++j) {
        __int128 v = static_cast<__int128>(piv) * a[i * c + j] - static_cast<__int128>(f) * a[rk * c + j];
        a[i * c + j] = static_cast<i64>(v / prev);
      }
      a[i * c + col] = 0;
    }
    prev = piv;
    ++rk;
  }
  return rk;
}

}  // namespace

std::vector<mpz_class> smith_normal_form(const IntMatrix& m) {
  std::vector<mpz_class> a(m.rows() * m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) a[i * m.cols() + j] = m(i, j);
  return normalize_invariants(diagonalize(std::move(a), m.rows(), m.cols()));
}

std::vector<mpz_class> smith_normal_form_small(const IntMatrix& m) {
  bool small = true;
  std::vector<i64> a(m.rows() * m.cols());
  for (std::size_t i = 0; i < m.rows() && small; ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (!m(i, j).fits_slong_p()) {
        small = false;
        break;
      }
      a[i * m.cols() + j] = m(i, j).get_si();
    }
  if (small) {
    try {
      auto d = diagonalize(std::move(a), m.rows(), m.cols());
      std::vector<mpz_class> out;
      out.reserve(d.size());
      for (i64 v : d) out.emplace_back(static_cast<long>(v));
      return normalize_invariants(std::move(out));
    } catch (const Overflow&) {
    }
  }
  return smith_normal_form(m);
}

std::size_t rank(const IntMatrix& m) {
  const std::size_t r = m.rows(), c = m.cols();
  IntMatrix a = m;
  std::size_t rk = 0;
  mpz_class prev = 1;
  for (std::size_t col = 0; col < c && rk < r; ++col) {
    std::size_t p = rk;
    while (p < r && a(p, col) == 0) ++p;
    if (p == r) continue;
    if (p != rk)
      for (std::size_t j = 0; j < c; ++j) std::swap(a(p, j), a(rk, j));
    for (std::size_t i = rk + 1; i < r; ++i) {
      for (std::size_t j = col + 1; j < c; ++j) {
        a(i, j) = a(rk, col) * a(i, j) - a(i, col) * a(rk, j);
        mpz_divexact(a(i, j).get_mpz_t(), a(i, j).get_mpz_t(), prev.get_mpz_t());
      }
      a(i, col) = 0;
    }
    prev = a(rk, col);
    ++rk;
  }
  return rk;
}

std::size_t rank_small(const IntMatrix& m) {
  if (fits_small(m)) return rank_i64(m);
  return rank(m);
}

mpz_class det(const IntMatrix& m) {
  if (!m.square()) throw InputError("determinant of a non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  IntMatrix a = m;
  int sign = 1;
  mpz_class prev = 1;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    while (p < n && a(p, k) == 0) ++p;
    if (p == n) return 0;
    if (p != k) {
      for (std::size_t j = 0; j < n; ++j) std::swap(a(p, j), a(k, j));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        a(i, j) = a(k, k) * a(i, j) - a(i, k) * a(k, j);
        mpz_divexact(a(i, j).get_mpz_t(), a(i, j).get_mpz_t(), prev.get_mpz_t());
      }
      a(i, k) = 0;
    }
    prev = a(k, k);
  }
  return sign * a(n - 1, n - 1);
}

std::vector<mpz_class> char_poly(const IntMatrix& a) {
  if (!a.square()) throw InputError("characteristic polynomial of a non-square matrix");
  const std::size_t n = a.rows();
  std::vector<mpz_class> c(n + 1);
  c[n] = 1;
  IntMatrix m(n, n);
  for (std::size_t k = 1; k <= n; ++k) {
    m = a * m;
    for (std::size_t i = 0; i < n; ++i) m(i, i) += c[n - k + 1];
    IntMatrix am = a * m;
    mpz_class tr = 0;
    for (std::size_t i = 0; i < n; ++i) tr += am(i, i);
    if (tr % k != 0) throw InternalError("characteristic polynomial is not integral");
    c[n - k] = -tr / static_cast<unsigned long>(k);
  }
  return c;
}

std::string HomologySummary::order_string() const { return finite() ? torsion.get_str() : "infinite"; }

mpz_class torsion_of(const IntMatrix& m) {
  mpz_class t = 1;
  for (const auto& d : smith_normal_form_small(m))
    if (d > 1) t *= d;
  return t;
}

HomologySummary homology(const SimplicialComplex& c, int i) {
  HomologySummary h;
  h.dim = i;
  if (i < -1 || i > c.dim()) return h;
  const std::size_t fi = c.f(i);
  const std::size_t r_i = (i >= 0) ? rank_small(boundary_matrix(c, i).m) : 0;
  if (i + 1 <= c.dim()) {
    IntMatrix up = boundary_matrix(c, i + 1).m;
    auto snf = smith_normal_form_small(up);
    h.betti = fi - r_i - snf.size();
    for (const auto& d : snf)
      if (d > 1) h.torsion *= d;
  } else {
    h.betti = fi - r_i;
  }
  return h;
}

bool is_apc(const SimplicialComplex& c) {
  for (int j = -1; j < c.dim(); ++j)
    if (homology(c, j).betti != 0) return false;
  return true;
}

RatMatrix::RatMatrix(const IntMatrix& m) : RatMatrix(m.rows(), m.cols()) {
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) (*this)(i, j) = m(i, j);
}

RatMatrix RatMatrix::operator*(const RatMatrix& o) const {
  if (cols_ != o.rows_) throw InputError("matrix size mismatch in product");
  RatMatrix r(rows_, o.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const mpq_class& a = (*this)(i, k);
      if (a == 0) continue;
      for (std::size_t j = 0; j < o.cols_; ++j)
        if (o(k, j) != 0) r(i, j) += a * o(k, j);
    }
  return r;
}

RatMatrix RatMatrix::transpose() const {
  RatMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

mpq_class det(const RatMatrix& m) {
  if (m.rows() != m.cols()) throw InputError("determinant of a non-square matrix");
  const std::size_t n = m.rows();
  RatMatrix a = m;
  mpq_class d = 1;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    while (p < n && a(p, k) == 0) ++p;
    if (p == n) return 0;
    if (p != k) {
      for (std::size_t j = 0; j < n; ++j) std::swap(a(p, j), a(k, j));
      d = -d;
    }
    d *= a(k, k);
    for (std::size_t i = k + 1; i < n; ++i) {
      if (a(i, k) == 0) continue;
      mpq_class f = a(i, k) / a(k, k);
      for (std::size_t j = k; j < n; ++j) a(i, j) -= f * a(k, j);
    }
  }
  return d;
}

void upoly_trim(UPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

UPoly upoly_mul(const UPoly& a, const UPoly& b) {
  if (a.empty() || b.empty()) return {};
  UPoly r(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  upoly_trim(r);
  return r;
}

UPoly upoly_from_roots(const std::vector<mpq_class>& roots, std::size_t zeros) {
  UPoly p(zeros + 1);
  p[zeros] = 1;
  for (const auto& r : roots) p = upoly_mul(p, UPoly{-r, 1});
  return p;
}

std::string upoly_to_string(const UPoly& p) {
  if (p.empty()) return "0";
  std::string s;
  for (std::size_t k = p.size(); k-- > 0;) {
    if (p[k] == 0) continue;
    if (!s.empty()) s += " + ";
    s += "(" + p[k].get_str() + ")";
    if (k) s += "*y^" + std::to_string(k);
  }
  return s;
}

UPoly char_poly(const RatMatrix& m) {
  if (m.rows() != m.cols()) throw InputError("characteristic polynomial of a non-square matrix");
  const std::size_t n = m.rows();
  RatMatrix h = m;
  for (std::size_t j = 0; j + 2 < n; ++j) {
    const std::size_t piv_row = j + 1;
    std::size_t p = piv_row;
    while (p < n && h(p, j) == 0) ++p;
    if (p == n) continue;
    if (p != piv_row) {
      for (std::size_t c = 0; c < n; ++c) std::swap(h(p, c), h(piv_row, c));
      for (std::size_t r = 0; r < n; ++r) std::swap(h(r, p), h(r, piv_row));
    }
    for (std::size_t k = piv_row + 1; k < n; ++k) {
      if (h(k, j) == 0) continue;
      mpq_class u = h(k, j) / h(piv_row, j);
      for (std::size_t c = 0; c < n; ++c) h(k, c) -= u * h(piv_row, c);
      for (std::size_t r = 0; r < n; ++r) h(r, piv_row) += u * h(r, k);
    }
  }
  // p[k] is the characteristic polynomial of the leading k x k block.
  std::vector<UPoly> p(n + 1);
  p[0] = UPoly{1};
  for (std::size_t k = 1; k <= n; ++k) {
    p[k] = upoly_mul(UPoly{-h(k - 1, k - 1), 1}, p[k - 1]);
    p[k].resize(k + 1);
    mpq_class prod = 1;
    for (std::size_t i = 1; i < k; ++i) {
      prod *= h(k - i, k - i - 1);
      if (prod == 0) break;
      mpq_class f = h(k - i - 1, k - 1) * prod;
      const UPoly& q = p[k - i - 1];
      for (std::size_t t = 0; t < q.size(); ++t) p[k][t] -= f * q[t];
    }
    upoly_trim(p[k]);
  }
  return p[n];
}

}  // namespace sst
