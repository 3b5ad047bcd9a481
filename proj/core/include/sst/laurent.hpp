#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "sst/complex.hpp"

namespace sst {

// Variable families. Fine X[i,j], coarse X[j], one variable per facet T[j],
// and the bipartite row/column variables x[r], y[c] of Ferrers graphs.
enum class VarKind : std::uint8_t { Fine = 0, Coarse = 1, Facet = 2, Row = 3, Col = 4 };

struct VarId {
  VarKind kind = VarKind::Fine;
  int i = 0;  // position index; unused except for Fine
  int j = 0;  // vertex, facet ordinal, row or column
  auto operator<=>(const VarId&) const = default;

  static VarId fine(int i, int j) { return {VarKind::Fine, i, j}; }
  static VarId coarse(int j) { return {VarKind::Coarse, 0, j}; }
  static VarId facet(int j) { return {VarKind::Facet, 0, j}; }
  static VarId row(int r) { return {VarKind::Row, 0, r}; }
  static VarId col(int c) { return {VarKind::Col, 0, c}; }

  std::string name() const;
};

// Exponents count powers of the unsquared x; X = x^2 contributes 2.
using Monomial = std::vector<std::pair<VarId, int>>;

Monomial mono_mul(const Monomial& a, const Monomial& b);
Monomial mono_inv(const Monomial& a);
int mono_degree(const Monomial& a);

class LaurentPoly {
 public:
  using Terms = std::map<Monomial, mpq_class>;

  LaurentPoly() = default;
  LaurentPoly(long c);
  LaurentPoly(const mpq_class& c);
  static LaurentPoly monomial(const Monomial& m, const mpq_class& c = 1);
  // The squared variable X (exponent 2).
  static LaurentPoly var(VarId v, int power = 1);
  // The unsquared variable x (exponent 1).
  static LaurentPoly xvar(VarId v, int power = 1);

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  std::size_t size() const { return terms_.size(); }
  bool is_monomial() const { return terms_.size() == 1; }
  // No negative exponents.
  bool is_polynomial() const;
  bool has_integer_coefficients() const;
  bool has_nonnegative_coefficients() const;
  bool all_exponents_even() const;
  std::vector<VarId> variables() const;

  LaurentPoly operator-() const;
  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);
  LaurentPoly& operator*=(const LaurentPoly& o);
  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  bool operator==(const LaurentPoly& o) const { return terms_ == o.terms_; }
  bool operator!=(const LaurentPoly& o) const { return !(*this == o); }

  LaurentPoly pow(unsigned e) const;
  // Map each monomial through f; f returns nullopt to drop it.
  LaurentPoly map_monomials(const std::function<std::optional<Monomial>(const Monomial&)>& f) const;

 private:
  void add_term(const Monomial& m, const mpq_class& c);
  Terms terms_;
};

// Exact quotient in the Laurent ring; throws ArithmeticError when b does not divide a.
LaurentPoly div_exact(const LaurentPoly& a, const LaurentPoly& b);

// Position-indexed monomial of a sorted multiset of vertices.
// squared selects X_S rather than x_S. Coarse drops the position index.
enum class Weighting { Fine, Coarse };
LaurentPoly monomial_for_face(const Face& s, Weighting w = Weighting::Fine, bool squared = true);
Monomial face_monomial(const Face& s, bool squared = true);

// X[i,j] -> X[i+a,j]; monomials reaching index > d+1 vanish.
// Throws ArithmeticError when such a variable carries a negative exponent.
LaurentPoly raise(const LaurentPoly& p, int a, int d);
Monomial raise_monomial(const Monomial& m, int a, int d, bool* vanished);

// X[i,j] -> X[j].
LaurentPoly coarse_collapse(const LaurentPoly& p);

using Assignment = std::map<VarId, mpq_class>;
// Substitute values for the listed variables (value of X, not x; odd exponents need a square).
LaurentPoly substitute(const LaurentPoly& p, const Assignment& a);
// Full evaluation; throws InputError when a variable is unassigned.
mpq_class evaluate(const LaurentPoly& p, const Assignment& a);
// Every variable set to one.
mpq_class evaluate_at_ones(const LaurentPoly& p);

// Fixed-seed source of positive rationals num/den with num, den in [1, 10^4].
class RationalSampler {
 public:
  explicit RationalSampler(std::uint64_t seed) : rng_(seed) {}
  mpq_class next();
  // Assign a fresh value to each variable.
  Assignment assign(const std::vector<VarId>& vars);

 private:
  std::mt19937_64 rng_;
};

// Graded-lex, terms separated by " + " or " - ".
std::string canonical_string(const LaurentPoly& p);
// {"terms":[{"coeff":"3/2","exps":[[i,j,e],...]}]}; exponents in X units when even.
std::string json_terms(const LaurentPoly& p);

}  // namespace sst
