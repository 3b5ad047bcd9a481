#include "sst/weighted.hpp"

#include <algorithm>
#include <set>

#include "sst/errors.hpp"

namespace sst {

Scheme parse_scheme(const std::string& s) {
  if (s == "facet") return Scheme::Facet;
  if (s == "coarse") return Scheme::Coarse;
  if (s == "fine") return Scheme::Fine;
  throw InputError("unknown weighting scheme '" + s + "' (expected fine, coarse or facet)");
}

std::string scheme_name(Scheme s) {
  switch (s) {
    case Scheme::Facet:
      return "facet";
    case Scheme::Coarse:
      return "coarse";
    case Scheme::Fine:
      return "fine";
  }
  return "?";
}

SymbolicMatrix SymbolicMatrix::operator*(const SymbolicMatrix& o) const {
  if (nc_ != o.nr_) throw InputError("matrix size mismatch in product");
  SymbolicMatrix r(nr_, o.nc_);
  r.row_faces = row_faces;
  r.col_faces = o.col_faces;
  for (std::size_t i = 0; i < nr_; ++i)
    for (std::size_t k = 0; k < nc_; ++k) {
      const LaurentPoly& a = (*this)(i, k);
      if (a.is_zero()) continue;
      for (std::size_t j = 0; j < o.nc_; ++j)
        if (!o(k, j).is_zero()) r(i, j) += a * o(k, j);
    }
  return r;
}

SymbolicMatrix SymbolicMatrix::transpose() const {
  SymbolicMatrix t(nc_, nr_);
  t.row_faces = col_faces;
  t.col_faces = row_faces;
  for (std::size_t i = 0; i < nr_; ++i)
    for (std::size_t j = 0; j < nc_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

SymbolicMatrix SymbolicMatrix::principal(const std::vector<std::size_t>& keep) const {
  SymbolicMatrix r(keep.size(), keep.size());
  for (std::size_t i = 0; i < keep.size(); ++i) {
    if (keep[i] < row_faces.size()) r.row_faces.push_back(row_faces[keep[i]]);
    if (keep[i] < col_faces.size()) r.col_faces.push_back(col_faces[keep[i]]);
    for (std::size_t j = 0; j < keep.size(); ++j) r(i, j) = (*this)(keep[i], keep[j]);
  }
  return r;
}

bool SymbolicMatrix::is_zero() const {
  for (const auto& p : a_)
    if (!p.is_zero()) return false;
  return true;
}

bool SymbolicMatrix::is_symmetric() const {
  if (nr_ != nc_) return false;
  for (std::size_t i = 0; i < nr_; ++i)
    for (std::size_t j = i + 1; j < nc_; ++j)
      if ((*this)(i, j) != (*this)(j, i)) return false;
  return true;
}

namespace {

Monomial unsquared_weight(const SimplicialComplex& c, const Face& f, Scheme s, int d) {
  switch (s) {
    case Scheme::Facet: {
      std::size_t idx = c.index_of(f);
      check(idx != SimplicialComplex::npos, "facet weight of a missing face");
      return Monomial{{VarId::facet(static_cast<int>(idx) + 1), 1}};
    }
    case Scheme::Coarse: {
      Monomial m;
      for (int v : f) m.emplace_back(VarId::coarse(v), 1);
      return m;
    }
    case Scheme::Fine: {
      bool gone = false;
      Monomial m = raise_monomial(face_monomial(f, false), d - face_dim(f), d, &gone);
      check(!gone, "fine weight vanished");
      return m;
    }
  }
  return {};
}

}  // namespace

LaurentPoly face_weight(const SimplicialComplex& c, const Face& f, Scheme s, int d) {
  Monomial m = unsquared_weight(c, f, s, d);
  for (auto& [v, e] : m) e *= 2;
  return LaurentPoly::monomial(m);
}

SymbolicMatrix weighted_boundary(const SimplicialComplex& c, int k, Scheme s) {
  const int d = c.dim();
  if (k < 0 || k > d) throw InputError("dimension out of range");
  if (s == Scheme::Facet && k != d) throw InputError("facet weighting applies to the top dimension only");
  BoundaryMatrix b = boundary_matrix(c, k);
  SymbolicMatrix m(b.rows.size(), b.cols.size());
  m.row_faces = b.rows;
  m.col_faces = b.cols;
  for (std::size_t j = 0; j < b.cols.size(); ++j) {
    LaurentPoly w = LaurentPoly::monomial(unsquared_weight(c, b.cols[j], s, d));
    for (std::size_t i = 0; i < b.rows.size(); ++i)
      if (b.m(i, j) != 0) m(i, j) = w * LaurentPoly(b.m(i, j).get_si());
  }
  return m;
}

SymbolicMatrix weighted_laplacian(const SimplicialComplex& c, Scheme s) {
  const int d = c.dim();
  BoundaryMatrix b = boundary_matrix(c, d);
  SymbolicMatrix l(b.rows.size(), b.rows.size());
  l.row_faces = b.rows;
  l.col_faces = b.rows;
  for (std::size_t f = 0; f < b.cols.size(); ++f) {
    LaurentPoly w = face_weight(c, b.cols[f], s, d);
    std::vector<std::pair<std::size_t, long>> nz;
    for (std::size_t i = 0; i < b.rows.size(); ++i)
      if (b.m(i, f) != 0) nz.emplace_back(i, b.m(i, f).get_si());
    for (auto [i, si] : nz)
      for (auto [j, sj] : nz) l(i, j) += w * LaurentPoly(si * sj);
  }
  return l;
}

LaurentPoly symbolic_det(const SymbolicMatrix& m, std::size_t cap) {
  if (m.rows() != m.cols()) throw InputError("determinant of a non-square matrix");
  const std::size_t n = m.rows();
  if (n > cap)
    throw ResourceError("symbolic determinant of size " + std::to_string(n) + " exceeds the cap of " + std::to_string(cap) +
                        "; use random-evaluation mode");
  if (n == 0) return LaurentPoly(1);
  // f[mask] = minor on the last popcount(mask) rows and the columns in mask.
  std::vector<LaurentPoly> f(std::size_t{1} << n);
  f[0] = LaurentPoly(1);
  for (std::size_t mask = 1; mask < f.size(); ++mask) {
    const std::size_t row = n - static_cast<std::size_t>(__builtin_popcountll(mask));
    LaurentPoly acc;
    int before = 0;
    for (std::size_t j = 0; j < n; ++j) {
      if (!(mask >> j & 1)) continue;
      const LaurentPoly& a = m(row, j);
      const LaurentPoly& rest = f[mask & ~(std::size_t{1} << j)];
      if (!a.is_zero() && !rest.is_zero()) {
        if (before % 2 == 0) {
          acc += a * rest;
        } else {
          acc -= a * rest;
        }
      }
      ++before;
    }
    f[mask] = std::move(acc);
  }
  return f.back();
}

LaurentPoly weighted_tau(const SimplicialComplex& c, Scheme s, const std::optional<std::vector<Face>>& u_in,
                         std::size_t cap) {
  const int d = c.dim();
  if (d < 0) throw InputError("complex has no vertices");
  for (int j = -1; j < d; ++j)
    if (homology(c, j).betti != 0) throw DomainError("complex is not APC");
  std::vector<Face> u = u_in ? *u_in : default_ridge_tree(c, d - 1);
  for (auto& f : u) std::sort(f.begin(), f.end());
  if (d >= 1 && !is_sst(c, d - 1, u).is_tree)
    throw InputError("U is not a " + std::to_string(d - 1) + "-dimensional spanning tree");
  if (d == 0 && !u.empty()) throw InputError("the ridge tree for dimension 0 must be empty");
  SymbolicMatrix l = weighted_laplacian(c, s);
  std::set<Face> drop(u.begin(), u.end());
  std::vector<std::size_t> keep;
  for (std::size_t i = 0; i < l.rows(); ++i)
    if (!drop.count(l.row_faces[i])) keep.push_back(i);
  LaurentPoly det = symbolic_det(l.principal(keep), cap);
  LaurentPoly tau = det * LaurentPoly(torsion_correction(c, d, u));
  check(tau.has_integer_coefficients() && tau.has_nonnegative_coefficients(),
        "weighted tree enumerator has a negative or fractional coefficient");
  return tau;
}

LaurentPoly tree_monomial(const SimplicialComplex& c, const std::vector<Face>& tree, Scheme s) {
  const int d = c.dim();
  LaurentPoly m(1);
  for (const auto& f : tree) m *= face_weight(c, f, s, d);
  return m;
}

LaurentPoly weighted_oracle(const SimplicialComplex& c, Scheme s, std::uint64_t cap) {
  const int d = c.dim();
  TreeCount tc = enumerate_ssts(c, d, cap, true);
  LaurentPoly sum;
  for (auto& [tree, t] : tc.trees) sum += tree_monomial(c, tree, s) * LaurentPoly(mpq_class(t * t));
  return sum;
}

}  // namespace sst
