#include "sst/spanning_trees.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <set>

#include "sst/errors.hpp"

namespace sst {

namespace {

void require_level(const SimplicialComplex& c, int k) {
  if (k < 0 || k > c.dim())
    throw InputError("dimension " + std::to_string(k) + " out of range [0, " + std::to_string(c.dim()) + "]");
}

// The k-skeleton is APC iff every reduced Betti number below k vanishes.
void require_apc_through(const SimplicialComplex& c, int k) {
  for (int j = -1; j < k; ++j)
    if (homology(c, j).betti != 0)
      throw DomainError("complex is not APC (reduced Betti number in dimension " + std::to_string(j) + " is nonzero)");
}

std::vector<std::size_t> indices_of(const SimplicialComplex& c, int k, const std::vector<Face>& t) {
  std::vector<std::size_t> idx;
  std::set<std::size_t> seen;
  for (Face f : t) {
    std::sort(f.begin(), f.end());
    if (face_dim(f) != k) throw InputError("face " + face_to_string(f) + " does not have dimension " + std::to_string(k));
    std::size_t i = c.index_of(f);
    if (i == SimplicialComplex::npos) throw InputError("face " + face_to_string(f) + " is not in the complex");
    if (!seen.insert(i).second) throw InputError("face " + face_to_string(f) + " listed twice");
    idx.push_back(i);
  }
  std::sort(idx.begin(), idx.end());
  return idx;
}

std::uint64_t binomial_capped(std::uint64_t n, std::uint64_t k, std::uint64_t cap) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  unsigned __int128 r = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    r = r * (n - k + i) / i;
    if (r > cap) return cap + 1;
  }
  return static_cast<std::uint64_t>(r);
}

// Rank of selected columns of a 0/+-1 matrix, in 64-bit Bareiss. Caller guarantees no overflow.
class ColumnRank {
 public:
  ColumnRank(const IntMatrix& m) : rows_(m.rows()), cols_(m.cols()), src_(m.rows() * m.cols()) {
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) src_[j * rows_ + i] = m(i, j).get_si();
  }

  std::size_t rank(const std::vector<std::size_t>& sel) {
    // Work on the transpose: selected columns become rows.
    const std::size_t r = sel.size(), c = rows_;
    buf_.resize(r * c);
    for (std::size_t a = 0; a < r; ++a) std::copy_n(&src_[sel[a] * rows_], rows_, &buf_[a * c]);
    std::size_t rk = 0;
    std::int64_t prev = 1;
    for (std::size_t col = 0; col < c && rk < r; ++col) {
      std::size_t p = rk;
      while (p < r && buf_[p * c + col] == 0) ++p;
      if (p == r) continue;
      if (p != rk) std::swap_ranges(&buf_[p * c], &buf_[p * c + c], &buf_[rk * c]);
      const std::int64_t piv = buf_[rk * c + col];
      for (std::size_t i = rk + 1; i < r; ++i) {
        const std::int64_t f = buf_[i * c + col];
        if (f == 0) {
          if (piv != prev)
            for (std::size_t j = col + 1; j < c; ++j)
              buf_[i * c + j] = static_cast<std::int64_t>(static_cast<__int128>(piv) * buf_[i * c + j] / prev);
          continue;
        }
        for (std::size_t j = col + 1; j < c; ++j) {
          __int128 v = static_cast<__int128>(piv) * buf_[i * c + j] - static_cast<__int128>(f) * buf_[rk * c + j];
          buf_[i * c + j] = static_cast<std::int64_t>(v / prev);
        }
        buf_[i * c + col] = 0;
      }
      prev = piv;
      ++rk;
    }
    return rk;
  }

 private:
  std::size_t rows_, cols_;
  std::vector<std::int64_t> src_;
  std::vector<std::int64_t> buf_;
};

}  // namespace

std::size_t sst_size(const SimplicialComplex& c, int k) {
  require_level(c, k);
  const std::size_t fk = c.f(k);
  const std::size_t beta_k = fk - rank_small(boundary_matrix(c, k).m);
  const std::size_t beta_km1 = homology(c, k - 1).betti;
  return fk - beta_k + beta_km1;
}

SstCertificate is_sst(const SimplicialComplex& c, int k, const std::vector<Face>& t) {
  require_level(c, k);
  auto idx = indices_of(c, k, t);
  SstCertificate cert;
  for (auto i : idx) cert.facets.push_back(c.faces(k)[i]);
  IntMatrix sub = boundary_matrix(c, k).m.select_columns(idx);
  const std::size_t r = rank_small(sub);
  const std::size_t r_below = (k >= 1) ? rank_small(boundary_matrix(c, k - 1).m) : 0;
  cert.top_acyclic = (r == idx.size());
  cert.below.dim = k - 1;
  cert.below.betti = c.f(k - 1) - r_below - r;
  cert.finite_below = cert.below.betti == 0;
  cert.count_ok = idx.size() == sst_size(c, k);
  if (cert.finite_below) cert.below.torsion = torsion_of(sub);
  const int held = int(cert.top_acyclic) + int(cert.finite_below) + int(cert.count_ok);
  check(held != 2, "two of the three tree conditions hold without the third");
  cert.is_tree = held == 3;
  return cert;
}

TreeCount enumerate_ssts(const SimplicialComplex& c, int k, std::uint64_t cap, bool keep_trees) {
  require_level(c, k);
  require_apc_through(c, k);
  const std::size_t n = c.f(k);
  const std::size_t need = sst_size(c, k);
  const std::uint64_t subsets = binomial_capped(n, need, cap);
  if (subsets > cap)
    throw ResourceError("C(" + std::to_string(n) + "," + std::to_string(need) + ") candidate subsets exceed the cap of " +
                        std::to_string(cap));
  const IntMatrix bd = boundary_matrix(c, k).m;
  const bool fast = need * 0.5 * std::log2(double(k + 1)) < 60.0;
  ColumnRank fast_rank(bd);
  TreeCount out;
  std::vector<std::size_t> sel(need);
  for (std::size_t i = 0; i < need; ++i) sel[i] = i;
  for (;;) {
    const std::size_t r = fast ? fast_rank.rank(sel) : rank(bd.select_columns(sel));
    if (r == need) {
      IntMatrix sub = bd.select_columns(sel);
      mpz_class t = torsion_of(sub);
      out.tau += t * t;
      ++out.num_trees;
      if (keep_trees) {
        std::vector<Face> fs;
        for (auto i : sel) fs.push_back(c.faces(k)[i]);
        out.trees.emplace_back(std::move(fs), t);
      }
    }
    // Next subset in colex order.
    std::size_t i = 0;
    while (i < need && sel[i] + 1 == (i + 1 < need ? sel[i + 1] : n)) ++i;
    if (i == need) break;
    ++sel[i];
    for (std::size_t j = 0; j < i; ++j) sel[j] = j;
  }
  return out;
}

std::vector<Face> find_sst(const SimplicialComplex& c, int k) {
  require_level(c, k);
  require_apc_through(c, k);
  const IntMatrix bd = boundary_matrix(c, k).m;
  std::vector<std::size_t> keep(c.f(k));
  for (std::size_t i = 0; i < keep.size(); ++i) keep[i] = i;
  std::size_t r = rank_small(bd);
  for (std::size_t pos = keep.size(); pos-- > 0;) {
    if (keep.size() == r) break;
    std::vector<std::size_t> trial = keep;
    trial.erase(trial.begin() + static_cast<long>(pos));
    if (rank_small(bd.select_columns(trial)) == r) keep = std::move(trial);
  }
  std::vector<Face> out;
  for (auto i : keep) out.push_back(c.faces(k)[i]);
  check(is_sst(c, k, out).is_tree, "greedy construction did not produce a tree");
  return out;
}

std::vector<Face> star_of_min_vertex(const SimplicialComplex& c, int k) {
  std::vector<Face> out;
  auto vs = c.vertices();
  if (vs.empty()) return out;
  const int p = vs.front();
  for (const auto& f : c.faces(k))
    if (!f.empty() && f[0] == p) out.push_back(f);
  return out;
}

std::vector<Face> default_ridge_tree(const SimplicialComplex& c, int k) {
  if (k < 0) return {};
  if (is_shifted(c)) return star_of_min_vertex(c, k);
  return find_sst(c, k);
}

mpq_class torsion_correction(const SimplicialComplex& c, int k, const std::vector<Face>& u) {
  if (k < 1) return 1;
  HomologySummary h = homology(c, k - 2);
  check(h.finite(), "homology below a ridge tree is infinite");
  mpz_class tu = 1;
  if (k - 1 >= 0) {
    auto idx = indices_of(c, k - 1, u);
    tu = torsion_of(boundary_matrix(c, k - 1).m.select_columns(idx));
  }
  return mpq_class(h.torsion * h.torsion, tu * tu);
}

namespace {

void validate_ridge_tree(const SimplicialComplex& c, int k, const std::vector<Face>& u) {
  if (k == 0) {
    if (!u.empty()) throw InputError("the ridge tree for dimension 0 must be empty");
    return;
  }
  if (!is_sst(c, k - 1, u).is_tree)
    throw InputError("U is not a " + std::to_string(k - 1) + "-dimensional spanning tree");
}

}  // namespace

mpz_class tau_via_reduced_laplacian(const SimplicialComplex& c, int k, const std::optional<std::vector<Face>>& u_in) {
  require_level(c, k);
  require_apc_through(c, k);
  std::vector<Face> u = u_in ? *u_in : default_ridge_tree(c, k - 1);
  for (auto& f : u) std::sort(f.begin(), f.end());
  validate_ridge_tree(c, k, u);
  const IntMatrix bd = boundary_matrix(c, k).m;
  const IntMatrix lap = bd * bd.transpose();
  std::set<std::size_t> drop;
  for (const auto& f : u) drop.insert(c.index_of(f));
  std::vector<std::size_t> keep;
  for (std::size_t i = 0; i < c.f(k - 1); ++i)
    if (!drop.count(i)) keep.push_back(i);
  check(keep.size() == c.f(k) - (c.f(k) - rank_small(bd)), "reduced Laplacian has the wrong size");
  const mpz_class d = det(lap.principal(keep));
  const mpq_class corr = torsion_correction(c, k, u);
  mpq_class tau = corr * d;
  check(tau.get_den() == 1 && tau > 0, "reduced-Laplacian tree count is not a positive integer");
  return tau.get_num();
}

mpz_class pi_k(const SimplicialComplex& c, int k) {
  if (k < 0 || k > c.dim()) throw InputError("dimension out of range");
  const IntMatrix bd = boundary_matrix(c, k).m;
  const IntMatrix lap = bd * bd.transpose();
  const std::size_t n = lap.rows();
  const std::size_t r = rank_small(bd);
  auto cp = char_poly(lap);
  mpz_class v = abs(cp[n - r]);
  check(v > 0, "pi is zero");
  return v;
}

SmttReport smtt_identity_check(const SimplicialComplex& c, int k) {
  require_level(c, k);
  SmttReport rep;
  rep.k = k;
  rep.pi = pi_k(c, k);
  rep.tau_k = tau_via_reduced_laplacian(c, k);
  rep.tau_km1 = (k >= 1) ? tau_via_reduced_laplacian(c, k - 1) : mpz_class(1);
  HomologySummary h = homology(c, k - 2);
  check(h.finite(), "H_{k-2} is infinite");
  rep.torsion_km2 = h.torsion;
  rep.rhs = mpq_class(rep.tau_k * rep.tau_km1, h.torsion * h.torsion);
  rep.ok = rep.rhs == mpq_class(rep.pi);
  return rep;
}

mpz_class tau_via_alternating_product(const SimplicialComplex& c, std::optional<int> d_in) {
  const int d = d_in.value_or(c.dim());
  require_level(c, d);
  for (int k = 0; k <= d; ++k) {
    HomologySummary h = homology(c, k - 2);
    if (h.betti != 0 || h.torsion != 1)
      throw DomainError("alternating product needs H_" + std::to_string(k - 2) + " = 0 (level " + std::to_string(k) + ")");
  }
  require_apc_through(c, d);
  mpq_class prod = 1;
  for (int k = 0; k <= d; ++k) {
    mpz_class p = pi_k(c, k);
    if ((d - k) % 2 == 0) {
      prod *= p;
    } else {
      prod /= p;
    }
  }
  if (prod.get_den() != 1) throw InternalError("alternating product is not an integer");
  return prod.get_num();
}

}  // namespace sst
