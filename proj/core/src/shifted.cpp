#include "sst/shifted.hpp"

#include <algorithm>
#include <set>

#include "sst/errors.hpp"

namespace sst {

namespace {

void require_shifted(const SimplicialComplex& c) {
  if (!is_shifted(c)) throw DomainError("complex is not shifted");
}

int min_vertex_of(const std::vector<Face>& family) {
  int p = 0;
  bool any = false;
  for (const auto& f : family)
    if (!f.empty() && (!any || f[0] < p)) {
      p = f[0];
      any = true;
    }
  return p;
}

Multiset with(const Multiset& m, int v) {
  Multiset r = m;
  r.insert(std::upper_bound(r.begin(), r.end(), v), v);
  return r;
}

Multiset interval(int lo, int hi) {
  Multiset r;
  for (int v = lo; v <= hi; ++v) r.push_back(v);
  return r;
}

std::string multiset_string(const Multiset& m) { return face_to_string(m); }

}  // namespace

std::vector<CriticalPair> critical_pairs(const std::vector<Face>& family) {
  if (!is_shifted_family(family)) throw DomainError("family is not shifted");
  std::vector<CriticalPair> out;
  std::set<Face> fam(family.begin(), family.end());
  const int p = min_vertex_of(family);
  for (const auto& a : fam) {
    for (std::size_t i = 0; i < a.size(); ++i) {
      const int next = a[i] + 1;
      if (i + 1 < a.size() && a[i + 1] == next) continue;
      Face b = a;
      b[i] = next;
      if (fam.count(b)) continue;
      CriticalPair cp;
      cp.a = a;
      cp.b = b;
      cp.signature.assign(a.begin(), a.begin() + static_cast<long>(i) + 1);
      cp.s.assign(a.begin(), a.begin() + static_cast<long>(i));
      cp.t = interval(p, a[i]);
      out.push_back(std::move(cp));
    }
  }
  return out;
}

std::vector<CriticalPair> critical_pairs(const SimplicialComplex& c, int i) { return critical_pairs(c.faces(i)); }

std::vector<LongSignature> long_signatures(const std::vector<Face>& family) {
  std::vector<LongSignature> out;
  for (auto& cp : critical_pairs(family)) out.emplace_back(cp.s, cp.t);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<LongSignature> long_signatures_recursive(const SimplicialComplex& c, int i, bool use_pure) {
  if (c.vertices().empty() || i < 0 || c.faces(i).empty()) return {};
  SimplicialComplex base = use_pure ? *pure_skeleton(c, i) : c;
  const int p = min_vertex_of(c.faces(i));
  const SimplicialComplex del = deletion(base, p);
  const SimplicialComplex lk = link(base, p);
  std::vector<LongSignature> out;
  for (auto& [s, t] : long_signatures_recursive(del, i, use_pure)) out.emplace_back(s, with(t, p));
  for (auto& [s, t] : long_signatures_recursive(lk, i - 1, use_pure)) out.emplace_back(with(s, p), with(t, p));
  std::size_t extra = 0;
  if (use_pure) {
    extra = homology(del, i - 1).betti;
  } else {
    auto degs = degree_sequence(c.faces(i), {p, p + 1});
    extra = static_cast<std::size_t>(degs[0] - degs[1]);
  }
  for (std::size_t k = 0; k < extra; ++k) out.emplace_back(Multiset{}, Multiset{p});
  std::sort(out.begin(), out.end());
  return out;
}

LaurentPoly z_poly(const Multiset& s, const Multiset& t, int d) {
  LaurentPoly num;
  for (int j : t) num += monomial_for_face(with(s, j));
  if (num.is_zero()) return num;
  LaurentPoly den = raise(monomial_for_face(s), 1, d);
  if (den.is_zero()) throw ArithmeticError("z-polynomial denominator vanishes under raising");
  return div_exact(num, den);
}

LaurentPoly ZPolynomial::expand() const { return sst::raise(z_poly(s, t, d), raise, d); }

LaurentPoly ZPolynomial::coarse() const { return coarse_collapse(expand()); }

std::string ZPolynomial::to_string() const {
  std::string z = "z(" + multiset_string(s) + "," + multiset_string(t) + ")";
  if (raise > 0) z = "up^" + std::to_string(raise) + " " + z;
  return z;
}

Spectrum shifted_spectrum(const SimplicialComplex& c, int i) {
  require_shifted(c);
  const int d = c.dim();
  if (i < 0 || i > d) throw InputError("dimension " + std::to_string(i) + " out of range");
  auto rec = long_signatures_recursive(c, i, true);
  auto dir = long_signatures(c.faces(i));
  check(rec == dir, "critical-pair recurrence disagrees with direct extraction");
  Spectrum sp;
  for (auto& [s, t] : dir) sp.nonzero.push_back(ZPolynomial{s, t, d - i, d});
  std::sort(sp.nonzero.begin(), sp.nonzero.end());
  check(c.f(i - 1) >= sp.nonzero.size(), "more nonzero eigenvalues than faces");
  sp.zeros = c.f(i - 1) - sp.nonzero.size();
  return sp;
}

std::vector<Spectrum> all_spectra(const SimplicialComplex& c) {
  std::vector<Spectrum> out;
  for (int i = 0; i <= c.dim(); ++i) out.push_back(shifted_spectrum(c, i));
  return out;
}

std::vector<long> degree_sequence(const std::vector<Face>& family, const std::vector<int>& vertices) {
  std::vector<long> deg;
  for (int v : vertices) {
    long n = 0;
    for (const auto& f : family)
      if (std::binary_search(f.begin(), f.end(), v)) ++n;
    deg.push_back(n);
  }
  return deg;
}

std::vector<long> conjugate_partition(const std::vector<long>& lambda) {
  std::vector<long> out;
  long mx = lambda.empty() ? 0 : *std::max_element(lambda.begin(), lambda.end());
  for (long t = 1; t <= mx; ++t) out.push_back(std::count_if(lambda.begin(), lambda.end(), [t](long x) { return x >= t; }));
  return out;
}

std::vector<long> unweighted_spectrum_duval_reiner(const SimplicialComplex& c) {
  require_shifted(c);
  const int d = c.dim();
  auto deg = degree_sequence(c.faces(d), c.vertices());
  auto conj = conjugate_partition(deg);
  std::vector<long> out(conj.begin(), conj.end());
  std::sort(out.rbegin(), out.rend());
  check(c.f(d - 1) >= out.size(), "more eigenvalues than ridges");
  out.resize(c.f(d - 1), 0);
  return out;
}

namespace {

bool same_spectrum(const Spectrum& a, const Spectrum& b) { return a.nonzero == b.nonzero && a.zeros == b.zeros; }

}  // namespace

SimplicialComplex hear_shape(const std::vector<Spectrum>& spectra) {
  std::vector<Face> sigs;
  int p = 0;
  bool any = false;
  for (const auto& sp : spectra)
    for (const auto& z : sp.nonzero) {
      if (z.t.empty()) throw DomainError("z-polynomial with empty T in spectrum");
      Face sig = z.s;
      sig.push_back(z.t.back());
      if (std::adjacent_find(sig.begin(), sig.end()) != sig.end() || !std::is_sorted(sig.begin(), sig.end()))
        throw DomainError("spectrum does not come from a shifted complex");
      sigs.push_back(std::move(sig));
      if (!any || z.t.front() < p) p = z.t.front();
      any = true;
    }
  if (!any) return SimplicialComplex();
  SimplicialComplex c = shifted_from_generators(sigs, p);
  auto again = all_spectra(c);
  bool ok = again.size() == spectra.size();
  for (std::size_t i = 0; ok && i < again.size(); ++i) ok = same_spectrum(again[i], spectra[i]);
  if (!ok) throw DomainError("spectra are inconsistent: the reconstructed complex has a different spectrum");
  return c;
}

SimplicialComplex hear_shape_top(const Spectrum& top, int d) {
  std::vector<Face> sigs;
  int p = 0;
  bool any = false;
  for (const auto& z : top.nonzero) {
    if (z.t.empty()) throw DomainError("z-polynomial with empty T in spectrum");
    if (!any || z.t.front() < p) p = z.t.front();
    any = true;
    if (static_cast<int>(z.s.size()) != d) continue;
    Face sig = z.s;
    sig.push_back(z.t.back());
    sigs.push_back(std::move(sig));
  }
  if (!any) return SimplicialComplex();
  SimplicialComplex c = shifted_from_generators(sigs, p);
  if (c.dim() != d || !same_spectrum(shifted_spectrum(c, d), top))
    throw DomainError("top spectrum is inconsistent with a pure shifted complex");
  return c;
}

namespace {

// Numerator factors and denominator of the fine closed form, unexpanded.
struct FineFactors {
  std::vector<LaurentPoly> num;
  LaurentPoly den{1};
};

FineFactors fine_factors(const SimplicialComplex& c) {
  require_shifted(c);
  const int d = c.dim();
  if (d < 0) throw DomainError("complex has no vertices");
  const SimplicialComplex pure = *pure_skeleton(c, d);
  const int p = pure.vertices().front();
  const SimplicialComplex lk = link(pure, p);
  const SimplicialComplex del = deletion(pure, p);
  FineFactors out;
  for (const auto& f : lk.faces(d - 1)) out.num.push_back(monomial_for_face(with(f, p)));
  for (auto& [s, t] : long_signatures(del.faces(d))) {
    LaurentPoly sum;
    for (int j : with(t, p)) sum += monomial_for_face(with(s, j));
    out.num.push_back(std::move(sum));
    out.den *= monomial_for_face(with(s, p));
  }
  return out;
}

}  // namespace

LaurentPoly shifted_tau_fine(const SimplicialComplex& c) {
  auto ff = fine_factors(c);
  LaurentPoly num(1);
  for (const auto& f : ff.num) num *= f;
  LaurentPoly tau = div_exact(num, ff.den);
  check(tau.is_polynomial() && tau.has_integer_coefficients() && tau.has_nonnegative_coefficients(),
        "fine tree enumerator is not a polynomial with nonnegative integer coefficients");
  return tau;
}

LaurentPoly shifted_tau_coarse(const SimplicialComplex& c) {
  require_shifted(c);
  const int d = c.dim();
  if (d < 0) throw DomainError("complex has no vertices");
  const SimplicialComplex pure = *pure_skeleton(c, d);
  const auto verts = pure.vertices();
  const int p = verts.front();
  const SimplicialComplex lk = link(pure, p);
  const SimplicialComplex del = deletion(pure, p);
  std::vector<Face> lk_cone, del_cone;
  for (const auto& f : lk.faces(d - 1)) lk_cone.push_back(with(f, p));
  for (const auto& f : del.faces(d)) del_cone.push_back(with(f, p));
  LaurentPoly tau(1);
  auto deg_l = degree_sequence(lk_cone, verts);
  for (std::size_t v = 0; v < verts.size(); ++v) tau *= LaurentPoly::var(VarId::coarse(verts[v]), static_cast<int>(deg_l[v]));
  auto conj = conjugate_partition(degree_sequence(del_cone, verts));
  LaurentPoly xp_power(1);
  for (long part : conj) {
    LaurentPoly e;
    for (long t = 0; t < part; ++t) e += LaurentPoly::var(VarId::coarse(p + static_cast<int>(t)));
    tau *= e;
    xp_power *= LaurentPoly::var(VarId::coarse(p));
  }
  tau = div_exact(tau, xp_power);
  check(tau.is_polynomial(), "coarse tree enumerator is not a polynomial");
  // Collapsing is a ring map, so the fine factors can be collapsed before multiplying.
  auto ff = fine_factors(c);
  LaurentPoly collapsed(1);
  for (const auto& f : ff.num) collapsed *= coarse_collapse(f);
  check(tau == div_exact(collapsed, coarse_collapse(ff.den)), "coarse formula disagrees with the collapsed fine enumerator");
  return tau;
}

LaurentPoly edge_monomial(int a, int b) {
  return LaurentPoly::var(VarId::fine(1, std::min(a, b))) * LaurentPoly::var(VarId::fine(2, std::max(a, b)));
}

SimplicialComplex threshold_from_degrees(const std::vector<long>& degs) {
  const long n = static_cast<long>(degs.size());
  if (n == 0) throw InputError("empty degree sequence");
  std::vector<std::set<long>> nb(n + 1);
  for (long v = 1; v <= n; ++v) {
    long dv = degs[v - 1];
    if (dv < 0) throw InputError("negative degree");
    long w = dv < v ? dv : dv + 1;
    if (w > n) throw DomainError("degree sequence is not a threshold sequence");
    for (long u = 1; u <= w; ++u)
      if (u != v) nb[v].insert(u);
  }
  std::vector<Face> facets;
  for (long v = 1; v <= n; ++v) {
    if (static_cast<long>(nb[v].size()) != degs[v - 1]) throw DomainError("degree sequence is not a threshold sequence");
    for (long u : nb[v]) {
      if (!nb[u].count(v)) throw DomainError("degree sequence is not a threshold sequence");
      if (u > v) facets.push_back({static_cast<int>(v), static_cast<int>(u)});
    }
    if (nb[v].empty()) facets.push_back({static_cast<int>(v)});
  }
  return SimplicialComplex::from_facets(facets);
}

LaurentPoly threshold_tau(const SimplicialComplex& g) {
  if (g.dim() != 1) throw DomainError("threshold graph must be one-dimensional");
  require_shifted(g);
  if (homology(g, 0).betti != 0) throw DomainError("threshold graph is disconnected");
  const auto verts = g.vertices();
  const int n = static_cast<int>(verts.size());
  if (verts.front() != 1 || verts.back() != n) throw DomainError("threshold graph must have vertex set [1,n]");
  auto conj = conjugate_partition(degree_sequence(g.faces(1), verts));
  LaurentPoly tau = edge_monomial(1, n);
  for (int v = 2; v <= n - 1; ++v) {
    LaurentPoly sum;
    const long upto = v - 1 < static_cast<int>(conj.size()) ? conj[v - 1] : 0;
    for (int j = 1; j <= upto; ++j) sum += edge_monomial(v, j);
    tau *= sum;
  }
  check(tau == shifted_tau_fine(g), "threshold formula disagrees with the shifted enumerator");
  return tau;
}

namespace {

void validate_partition(const std::vector<long>& lambda) {
  if (lambda.empty()) throw InputError("partition must be nonempty");
  for (std::size_t i = 0; i < lambda.size(); ++i) {
    if (lambda[i] <= 0) throw InputError("partition parts must be positive");
    if (i && lambda[i] > lambda[i - 1]) throw InputError("partition parts must be weakly decreasing");
  }
}

}  // namespace

LaurentPoly ferrers_tau(const std::vector<long>& lambda) {
  validate_partition(lambda);
  const auto conj = conjugate_partition(lambda);
  const int rows = static_cast<int>(lambda.size());
  const int cols = static_cast<int>(lambda[0]);
  LaurentPoly tau(1);
  for (int r = 1; r <= rows; ++r) tau *= LaurentPoly::var(VarId::row(r));
  for (int c = 1; c <= cols; ++c) tau *= LaurentPoly::var(VarId::col(c));
  for (int r = 2; r <= rows; ++r) {
    LaurentPoly sum;
    for (int c = 1; c <= lambda[r - 1]; ++c) sum += LaurentPoly::var(VarId::col(c));
    tau *= sum;
  }
  for (int c = 2; c <= cols; ++c) {
    LaurentPoly sum;
    for (int r = 1; r <= conj[c - 1]; ++r) sum += LaurentPoly::var(VarId::row(r));
    tau *= sum;
  }
  return tau;
}

SimplicialComplex ferrers_threshold_graph(const std::vector<long>& lambda) {
  validate_partition(lambda);
  const int rows = static_cast<int>(lambda.size());
  std::vector<Face> edges;
  for (int a = 1; a <= rows; ++a)
    for (int b = a + 1; b <= rows; ++b) edges.push_back({a, b});
  for (int r = 1; r <= rows; ++r)
    for (int c = 1; c <= lambda[r - 1]; ++c) edges.push_back({r, rows + c});
  return SimplicialComplex::from_facets(edges);
}

LaurentPoly ferrers_tau_via_threshold(const std::vector<long>& lambda) {
  const int rows = static_cast<int>(lambda.size());
  LaurentPoly t = threshold_tau(ferrers_threshold_graph(lambda));
  Assignment zero;
  for (int b = 1; b <= rows; ++b) zero[VarId::fine(2, b)] = 0;
  t = substitute(t, zero);
  return t.map_monomials([rows](const Monomial& m) -> std::optional<Monomial> {
    Monomial out;
    for (auto& [v, e] : m) {
      if (v.kind == VarKind::Fine && v.i == 1 && v.j <= rows) {
        out.emplace_back(VarId::row(v.j), e);
      } else if (v.kind == VarKind::Fine && v.i == 2 && v.j > rows) {
        out.emplace_back(VarId::col(v.j - rows), e);
      } else {
        throw InternalError("unexpected variable " + v.name() + " after zeroing clique edges");
      }
    }
    std::sort(out.begin(), out.end());
    return out;
  });
}

SymbolicMatrix algebraic_boundary(const SimplicialComplex& c, int k) {
  const int d = c.dim();
  BoundaryMatrix b = boundary_matrix(c, k);
  SymbolicMatrix m(b.rows.size(), b.cols.size());
  m.row_faces = b.rows;
  m.col_faces = b.cols;
  for (std::size_t j = 0; j < b.cols.size(); ++j) {
    bool gone = false;
    Monomial top = raise_monomial(face_monomial(b.cols[j], false), d - k, d, &gone);
    check(!gone, "boundary weight vanished");
    for (std::size_t i = 0; i < b.rows.size(); ++i) {
      if (b.m(i, j) == 0) continue;
      Monomial bottom = raise_monomial(face_monomial(b.rows[i], false), d - k + 1, d, &gone);
      check(!gone, "boundary weight vanished");
      m(i, j) = LaurentPoly::monomial(mono_mul(top, mono_inv(bottom)), b.m(i, j).get_si());
    }
  }
  return m;
}

SymbolicMatrix algebraic_fine_laplacian(const SimplicialComplex& c, int i) {
  SymbolicMatrix b = algebraic_boundary(c, i + 1);
  return b * b.transpose();
}

RatMatrix balanced_laplacian_at(const SimplicialComplex& c, int i, int d, int a, const Assignment& at) {
  const auto& rows = c.faces(i);
  const auto& tops = c.faces(i + 1);
  RatMatrix m(rows.size(), rows.size());
  const int cutoff = d + a;
  std::vector<mpq_class> den(rows.size());
  for (std::size_t g = 0; g < rows.size(); ++g) {
    bool gone = false;
    Monomial mg = raise_monomial(face_monomial(rows[g]), d - i + a, cutoff, &gone);
    check(!gone, "balanced Laplacian denominator vanished");
    den[g] = evaluate(LaurentPoly::monomial(mg), at);
  }
  for (const auto& h : tops) {
    bool gone = false;
    Monomial mh = raise_monomial(face_monomial(h), d - i - 1 + a, cutoff, &gone);
    if (gone) continue;
    const mpq_class vh = evaluate(LaurentPoly::monomial(mh), at);
    std::vector<std::pair<std::size_t, int>> nz;
    for (std::size_t pos = 0; pos < h.size(); ++pos) {
      Face f = h;
      f.erase(f.begin() + static_cast<long>(pos));
      nz.emplace_back(c.index_of(f), pos % 2 == 0 ? 1 : -1);
    }
    for (auto [fi, sf] : nz)
      for (auto [gi, sg] : nz) m(fi, gi) += (sf * sg) * vh / den[gi];
  }
  return m;
}

std::vector<VarId> fine_variables(const SimplicialComplex& c, int extra) {
  std::vector<VarId> out;
  for (int i = 1; i <= c.dim() + 1 + extra; ++i)
    for (int v : c.vertices()) out.push_back(VarId::fine(i, v));
  return out;
}

}  // namespace sst
