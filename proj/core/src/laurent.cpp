#include "sst/laurent.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "sst/errors.hpp"

namespace sst {

std::string VarId::name() const {
  switch (kind) {
    case VarKind::Fine:
      return "X[" + std::to_string(i) + "," + std::to_string(j) + "]";
    case VarKind::Coarse:
      return "X[" + std::to_string(j) + "]";
    case VarKind::Facet:
      return "T[" + std::to_string(j) + "]";
    case VarKind::Row:
      return "x[" + std::to_string(j) + "]";
    case VarKind::Col:
      return "y[" + std::to_string(j) + "]";
  }
  return "?";
}

namespace {

std::string unsquared_name(const VarId& v) {
  switch (v.kind) {
    case VarKind::Fine:
      return "x[" + std::to_string(v.i) + "," + std::to_string(v.j) + "]";
    case VarKind::Coarse:
      return "x[" + std::to_string(v.j) + "]";
    case VarKind::Facet:
      return "t[" + std::to_string(v.j) + "]";
    default:
      return "sqrt(" + v.name() + ")";
  }
}

int exponent_of(const Monomial& m, const VarId& v) {
  auto it = std::lower_bound(m.begin(), m.end(), v, [](const auto& p, const VarId& x) { return p.first < x; });
  return (it != m.end() && it->first == v) ? it->second : 0;
}

// Lex order: the first variable (smallest VarId) where exponents differ decides; larger exponent wins.
int lex_cmp(const Monomial& a, const Monomial& b) {
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) return a[i].second > 0 ? 1 : -1;
    if (i == a.size() || b[j].first < a[i].first) return b[j].second > 0 ? -1 : 1;
    if (a[i].second != b[j].second) return a[i].second > b[j].second ? 1 : -1;
    ++i;
    ++j;
  }
  return 0;
}

// Descending total degree, then descending lex.
bool display_before(const Monomial& a, const Monomial& b) {
  int da = mono_degree(a), db = mono_degree(b);
  if (da != db) return da > db;
  return lex_cmp(a, b) > 0;
}

}  // namespace

Monomial mono_mul(const Monomial& a, const Monomial& b) {
  Monomial r;
  r.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
      r.push_back(a[i++]);
    } else if (i == a.size() || b[j].first < a[i].first) {
      r.push_back(b[j++]);
    } else {
      int e = a[i].second + b[j].second;
      if (e != 0) r.emplace_back(a[i].first, e);
      ++i;
      ++j;
    }
  }
  return r;
}

Monomial mono_inv(const Monomial& a) {
  Monomial r = a;
  for (auto& p : r) p.second = -p.second;
  return r;
}

int mono_degree(const Monomial& a) {
  int d = 0;
  for (auto& p : a) d += p.second;
  return d;
}

LaurentPoly::LaurentPoly(long c) {
  if (c != 0) terms_[Monomial{}] = c;
}

LaurentPoly::LaurentPoly(const mpq_class& c) {
  if (c != 0) terms_[Monomial{}] = c;
}

LaurentPoly LaurentPoly::monomial(const Monomial& m, const mpq_class& c) {
  LaurentPoly p;
  if (c != 0) p.terms_[m] = c;
  return p;
}

LaurentPoly LaurentPoly::var(VarId v, int power) {
  if (power == 0) return LaurentPoly(1);
  return monomial(Monomial{{v, 2 * power}});
}

LaurentPoly LaurentPoly::xvar(VarId v, int power) {
  if (power == 0) return LaurentPoly(1);
  return monomial(Monomial{{v, power}});
}

bool LaurentPoly::is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.empty()); }

bool LaurentPoly::is_polynomial() const {
  for (auto& [m, c] : terms_)
    for (auto& [v, e] : m)
      if (e < 0) return false;
  return true;
}

bool LaurentPoly::has_integer_coefficients() const {
  for (auto& [m, c] : terms_)
    if (c.get_den() != 1) return false;
  return true;
}

bool LaurentPoly::has_nonnegative_coefficients() const {
  for (auto& [m, c] : terms_)
    if (c < 0) return false;
  return true;
}

bool LaurentPoly::all_exponents_even() const {
  for (auto& [m, c] : terms_)
    for (auto& [v, e] : m)
      if (e % 2 != 0) return false;
  return true;
}

std::vector<VarId> LaurentPoly::variables() const {
  std::set<VarId> s;
  for (auto& [m, c] : terms_)
    for (auto& [v, e] : m) s.insert(v);
  return {s.begin(), s.end()};
}

void LaurentPoly::add_term(const Monomial& m, const mpq_class& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly r = *this;
  for (auto& [m, c] : r.terms_) c = -c;
  return r;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  for (auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
  for (auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  LaurentPoly r;
  for (auto& [ma, ca] : a.terms_)
    for (auto& [mb, cb] : b.terms_) r.add_term(mono_mul(ma, mb), ca * cb);
  return r;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& o) {
  *this = *this * o;
  return *this;
}

LaurentPoly LaurentPoly::pow(unsigned e) const {
  LaurentPoly r(1), base = *this;
  while (e) {
    if (e & 1) r *= base;
    e >>= 1;
    if (e) base *= base;
  }
  return r;
}

LaurentPoly LaurentPoly::map_monomials(const std::function<std::optional<Monomial>(const Monomial&)>& f) const {
  LaurentPoly r;
  for (auto& [m, c] : terms_) {
    auto nm = f(m);
    if (nm) r.add_term(*nm, c);
  }
  return r;
}

namespace {

// Componentwise minimum exponent over all terms.
Monomial min_exponents(const LaurentPoly& p) {
  std::map<VarId, int> mn;
  bool first = true;
  for (auto& [m, c] : p.terms()) {
    std::map<VarId, int> cur(m.begin(), m.end());
    if (first) {
      mn = cur;
      first = false;
      continue;
    }
    for (auto& [v, e] : mn) {
      auto it = cur.find(v);
      e = std::min(e, it == cur.end() ? 0 : it->second);
    }
    for (auto& [v, e] : cur)
      if (!mn.count(v)) mn[v] = std::min(0, e);
  }
  Monomial r;
  for (auto& [v, e] : mn)
    if (e != 0) r.emplace_back(v, e);
  return r;
}

const std::pair<const Monomial, mpq_class>& leading_term(const LaurentPoly& p) {
  auto best = p.terms().begin();
  for (auto it = p.terms().begin(); it != p.terms().end(); ++it)
    if (lex_cmp(it->first, best->first) > 0) best = it;
  return *best;
}

}  // namespace

LaurentPoly div_exact(const LaurentPoly& a, const LaurentPoly& b) {
  if (b.is_zero()) throw ArithmeticError("division by zero polynomial");
  if (a.is_zero()) return LaurentPoly();
  if (b.is_monomial()) {
    const auto& [mb, cb] = *b.terms().begin();
    Monomial inv = mono_inv(mb);
    LaurentPoly r;
    for (auto& [m, c] : a.terms()) r += LaurentPoly::monomial(mono_mul(m, inv), c / cb);
    return r;
  }
  const Monomial ma = min_exponents(a), mb = min_exponents(b);
  LaurentPoly rem = a * LaurentPoly::monomial(mono_inv(ma));
  const LaurentPoly bb = b * LaurentPoly::monomial(mono_inv(mb));
  const auto& [lb, lcb] = leading_term(bb);
  const Monomial lb_inv = mono_inv(lb);
  LaurentPoly q;
  while (!rem.is_zero()) {
    const auto& [lr, lcr] = leading_term(rem);
    Monomial t = mono_mul(lr, lb_inv);
    for (auto& [v, e] : t)
      if (e < 0) throw ArithmeticError("inexact polynomial division");
    LaurentPoly step = LaurentPoly::monomial(t, lcr / lcb);
    q += step;
    rem -= step * bb;
  }
  return q * LaurentPoly::monomial(mono_mul(ma, mono_inv(mb)));
}

Monomial face_monomial(const Face& s, bool squared) {
  std::map<VarId, int> e;
  for (std::size_t k = 0; k < s.size(); ++k) e[VarId::fine(static_cast<int>(k) + 1, s[k])] += squared ? 2 : 1;
  return Monomial(e.begin(), e.end());
}

LaurentPoly monomial_for_face(const Face& s, Weighting w, bool squared) {
  Face sorted = s;
  std::sort(sorted.begin(), sorted.end());
  LaurentPoly p = LaurentPoly::monomial(face_monomial(sorted, squared));
  return w == Weighting::Coarse ? coarse_collapse(p) : p;
}

Monomial raise_monomial(const Monomial& m, int a, int d, bool* vanished) {
  *vanished = false;
  std::map<VarId, int> out;
  for (auto& [v, e] : m) {
    if (v.kind != VarKind::Fine) {
      out[v] += e;
      continue;
    }
    if (v.i + a > d + 1) {
      if (e < 0) throw ArithmeticError("raising sends a denominator variable " + v.name() + " to zero");
      *vanished = true;
    }
    out[VarId::fine(v.i + a, v.j)] += e;
  }
  Monomial r;
  for (auto& [v, e] : out)
    if (e != 0) r.emplace_back(v, e);
  return r;
}

LaurentPoly raise(const LaurentPoly& p, int a, int d) {
  if (a == 0) return p;
  return p.map_monomials([&](const Monomial& m) -> std::optional<Monomial> {
    bool gone = false;
    Monomial r = raise_monomial(m, a, d, &gone);
    if (gone) return std::nullopt;
    return r;
  });
}

LaurentPoly coarse_collapse(const LaurentPoly& p) {
  return p.map_monomials([](const Monomial& m) -> std::optional<Monomial> {
    std::map<VarId, int> out;
    for (auto& [v, e] : m) out[v.kind == VarKind::Fine ? VarId::coarse(v.j) : v] += e;
    Monomial r;
    for (auto& [v, e] : out)
      if (e != 0) r.emplace_back(v, e);
    return r;
  });
}

namespace {

// value^(e/2) where value is the X-value; odd e requires a rational square root.
mpq_class power_of_x(const mpq_class& value, int e, const VarId& v) {
  mpq_class base = value;
  int k = e;
  if (e % 2 != 0) {
    mpz_class n = value.get_num(), dn = value.get_den();
    if (value < 0 || !mpz_perfect_square_p(n.get_mpz_t()) || !mpz_perfect_square_p(dn.get_mpz_t()))
      throw ArithmeticError("odd power of " + unsquared_name(v) + " needs a square value");
    base = mpq_class(sqrt(n), sqrt(dn));
  } else {
    k = e / 2;
  }
  if (k < 0) {
    if (base == 0) throw ArithmeticError("division by zero evaluating " + v.name());
    base = 1 / base;
    k = -k;
  }
  mpq_class r = 1;
  for (int t = 0; t < k; ++t) r *= base;
  return r;
}

}  // namespace

LaurentPoly substitute(const LaurentPoly& p, const Assignment& a) {
  LaurentPoly r;
  for (auto& [m, c] : p.terms()) {
    mpq_class coef = c;
    Monomial rest;
    for (auto& [v, e] : m) {
      auto it = a.find(v);
      if (it == a.end()) {
        rest.emplace_back(v, e);
      } else {
        coef *= power_of_x(it->second, e, v);
      }
    }
    r += LaurentPoly::monomial(rest, coef);
  }
  return r;
}

mpq_class evaluate(const LaurentPoly& p, const Assignment& a) {
  mpq_class total = 0;
  for (auto& [m, c] : p.terms()) {
    mpq_class t = c;
    for (auto& [v, e] : m) {
      auto it = a.find(v);
      if (it == a.end()) throw InputError("no value for " + v.name());
      t *= power_of_x(it->second, e, v);
    }
    total += t;
  }
  return total;
}

mpq_class evaluate_at_ones(const LaurentPoly& p) {
  mpq_class total = 0;
  for (auto& [m, c] : p.terms()) total += c;
  return total;
}

mpq_class RationalSampler::next() {
  std::uniform_int_distribution<long> dist(1, 10000);
  long n = dist(rng_);
  long d = dist(rng_);
  mpq_class q(n, d);
  q.canonicalize();
  return q;
}

Assignment RationalSampler::assign(const std::vector<VarId>& vars) {
  Assignment a;
  for (auto& v : vars) a[v] = next();
  return a;
}

std::string canonical_string(const LaurentPoly& p) {
  if (p.is_zero()) return "0";
  std::vector<const std::pair<const Monomial, mpq_class>*> ts;
  for (auto& t : p.terms()) ts.push_back(&t);
  std::sort(ts.begin(), ts.end(), [](auto* a, auto* b) { return display_before(a->first, b->first); });
  std::string s;
  bool first = true;
  for (auto* t : ts) {
    mpq_class c = t->second;
    bool neg = c < 0;
    if (neg) c = -c;
    if (first) {
      if (neg) s += "-";
    } else {
      s += neg ? " - " : " + ";
    }
    first = false;
    std::vector<std::string> factors;
    if (c != 1 || t->first.empty()) factors.push_back(c.get_str());
    for (auto& [v, e] : t->first) {
      std::string f;
      int shown = e;
      if (e % 2 == 0) {
        f = v.name();
        shown = e / 2;
      } else {
        f = unsquared_name(v);
      }
      if (shown != 1) f += "^" + std::to_string(shown);
      factors.push_back(f);
    }
    for (std::size_t k = 0; k < factors.size(); ++k) s += (k ? " * " : "") + factors[k];
  }
  return s;
}

std::string json_terms(const LaurentPoly& p) {
  const bool even = p.all_exponents_even();
  std::vector<const std::pair<const Monomial, mpq_class>*> ts;
  for (auto& t : p.terms()) ts.push_back(&t);
  std::sort(ts.begin(), ts.end(), [](auto* a, auto* b) { return display_before(a->first, b->first); });
  std::ostringstream os;
  os << "{\"exponent_unit\":\"" << (even ? "X" : "x") << "\",\"terms\":[";
  for (std::size_t k = 0; k < ts.size(); ++k) {
    if (k) os << ',';
    os << "{\"coeff\":\"" << ts[k]->second.get_str() << "\",\"exps\":[";
    const auto& m = ts[k]->first;
    for (std::size_t t = 0; t < m.size(); ++t) {
      if (t) os << ',';
      const auto& [v, e] = m[t];
      os << '[' << v.i << ',' << v.j << ',' << (even ? e / 2 : e) << ']';
    }
    os << "]}";
  }
  os << "]}";
  return os.str();
}

}  // namespace sst
