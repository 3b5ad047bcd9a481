#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <string>
#include <vector>

#include "sst/complex.hpp"
#include "sst/int_matrix.hpp"

namespace sst {

// Nonzero invariant factors d1 | d2 | ... | dr, all positive.
std::vector<mpz_class> smith_normal_form(const IntMatrix& m);

mpz_class det(const IntMatrix& m);
std::size_t rank(const IntMatrix& m);
// Coefficients of det(yI - M), constant term first; size n + 1.
std::vector<mpz_class> char_poly(const IntMatrix& m);

// Rank of a matrix with small entries. Uses 64-bit Bareiss when the Hadamard
// bound allows it and falls back to GMP otherwise.
std::size_t rank_small(const IntMatrix& m);
// Same contract as smith_normal_form, trying 64-bit arithmetic first.
std::vector<mpz_class> smith_normal_form_small(const IntMatrix& m);

struct HomologySummary {
  int dim = 0;
  std::size_t betti = 0;
  mpz_class torsion = 1;
  bool finite() const { return betti == 0; }
  // |H| as text: the torsion order when finite, "infinite" otherwise.
  std::string order_string() const;
};

HomologySummary homology(const SimplicialComplex& c, int i);
// Torsion of the cokernel of a boundary map: product of invariant factors above 1.
mpz_class torsion_of(const IntMatrix& m);
// All rational Betti numbers below the top dimension vanish.
bool is_apc(const SimplicialComplex& c);

// Dense matrix over the rationals, used for numeric substitutions.
class RatMatrix {
 public:
  RatMatrix() = default;
  RatMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols) {}
  explicit RatMatrix(const IntMatrix& m);
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  mpq_class& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  const mpq_class& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }
  RatMatrix operator*(const RatMatrix& o) const;
  RatMatrix transpose() const;

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<mpq_class> a_;
};

mpq_class det(const RatMatrix& m);

// Univariate polynomial over Q, constant term first, no trailing zeros.
using UPoly = std::vector<mpq_class>;
void upoly_trim(UPoly& p);
UPoly upoly_mul(const UPoly& a, const UPoly& b);
// Product of (y - r) over the roots, times y^zeros.
UPoly upoly_from_roots(const std::vector<mpq_class>& roots, std::size_t zeros = 0);
std::string upoly_to_string(const UPoly& p);

// det(yI - M) by reduction to Hessenberg form.
UPoly char_poly(const RatMatrix& m);

}  // namespace sst
