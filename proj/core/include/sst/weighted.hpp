#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "sst/complex.hpp"
#include "sst/laurent.hpp"
#include "sst/spanning_trees.hpp"

namespace sst {

enum class Scheme { Facet, Coarse, Fine };

Scheme parse_scheme(const std::string& s);
std::string scheme_name(Scheme s);

class SymbolicMatrix {
 public:
  SymbolicMatrix() = default;
  SymbolicMatrix(std::size_t rows, std::size_t cols) : nr_(rows), nc_(cols), a_(rows * cols) {}
  std::size_t rows() const { return nr_; }
  std::size_t cols() const { return nc_; }
  LaurentPoly& operator()(std::size_t i, std::size_t j) { return a_[i * nc_ + j]; }
  const LaurentPoly& operator()(std::size_t i, std::size_t j) const { return a_[i * nc_ + j]; }
  SymbolicMatrix operator*(const SymbolicMatrix& o) const;
  SymbolicMatrix transpose() const;
  SymbolicMatrix principal(const std::vector<std::size_t>& keep) const;
  bool is_zero() const;
  bool is_symmetric() const;

  std::vector<Face> row_faces;
  std::vector<Face> col_faces;

 private:
  std::size_t nr_ = 0, nc_ = 0;
  std::vector<LaurentPoly> a_;
};

constexpr std::size_t kDefaultSymbolicCap = 12;

// Weight X_F (squared) of a k-face. Facet variables are numbered by position
// in the lexicographic list of top faces, starting at 1. Fine weights are raised by d - k.
LaurentPoly face_weight(const SimplicialComplex& c, const Face& f, Scheme s, int d);

// Column F of the boundary scaled by the unsquared weight x_F.
SymbolicMatrix weighted_boundary(const SimplicialComplex& c, int k, Scheme s);
// Weighted up-down Laplacian on C_{d-1}, entries in X.
SymbolicMatrix weighted_laplacian(const SimplicialComplex& c, Scheme s);

LaurentPoly symbolic_det(const SymbolicMatrix& m, std::size_t cap = kDefaultSymbolicCap);

// Weighted tree enumerator of the top dimension by the reduced Laplacian.
LaurentPoly weighted_tau(const SimplicialComplex& c, Scheme s, const std::optional<std::vector<Face>>& u = std::nullopt,
                         std::size_t cap = kDefaultSymbolicCap);

// Direct sum of |H_{d-1}|^2 X_T over the enumerated trees.
LaurentPoly weighted_oracle(const SimplicialComplex& c, Scheme s, std::uint64_t cap = kDefaultSubsetCap);

// Product of X_F over a tree.
LaurentPoly tree_monomial(const SimplicialComplex& c, const std::vector<Face>& tree, Scheme s);

}  // namespace sst
