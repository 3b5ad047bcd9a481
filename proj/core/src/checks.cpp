#include "sst/checks.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>

#include "sst/corpus.hpp"
#include "sst/errors.hpp"
#include "sst/shifted.hpp"
#include "sst/spanning_trees.hpp"

namespace sst::checks {

namespace {

bool fail(std::string* why, const std::string& msg) {
  if (why) *why = msg;
  return false;
}

RatMatrix evaluate_matrix(const SymbolicMatrix& m, const Assignment& at) {
  RatMatrix r(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (!m(i, j).is_zero()) r(i, j) = evaluate(m(i, j), at);
  return r;
}

// Drop the factor y^k with k maximal.
UPoly nonzero_part(UPoly p) {
  upoly_trim(p);
  std::size_t k = 0;
  while (k < p.size() && p[k] == 0) ++k;
  return UPoly(p.begin() + static_cast<long>(k), p.end());
}

// b^m chi((y - a) / b) for chi of degree m.
UPoly affine_substitute(const UPoly& chi, const mpq_class& a, const mpq_class& b) {
  UPoly out{0};
  const std::size_t m = chi.empty() ? 0 : chi.size() - 1;
  UPoly lin{-a, 1};
  UPoly power{1};
  mpq_class bpow = 1;
  for (std::size_t i = 0; i < m; ++i) bpow *= b;
  for (std::size_t k = 0; k <= m && !chi.empty(); ++k) {
    mpq_class coeff = chi[k] * bpow;
    if (out.size() < power.size()) out.resize(power.size(), 0);
    for (std::size_t t = 0; t < power.size(); ++t) out[t] += coeff * power[t];
    power = upoly_mul(power, lin);
    if (k < m) bpow /= b;
  }
  upoly_trim(out);
  return out;
}

std::vector<VarId> variables_of(const std::vector<LaurentPoly>& ps, const std::vector<VarId>& extra) {
  std::set<VarId> vs(extra.begin(), extra.end());
  for (const auto& p : ps)
    for (auto v : p.variables()) vs.insert(v);
  return {vs.begin(), vs.end()};
}

SimplicialComplex relabel(const SimplicialComplex& c, const std::map<int, int>& perm) {
  std::vector<Face> fs;
  for (auto f : c.facets()) {
    for (int& v : f) v = perm.at(v);
    std::sort(f.begin(), f.end());
    fs.push_back(std::move(f));
  }
  return SimplicialComplex::from_facets(fs);
}

// Top nonzero eigenvalues, as sorted canonical strings.
std::vector<std::string> top_signature(const SimplicialComplex& c, bool coarse) {
  std::vector<std::string> out;
  for (const auto& z : shifted_spectrum(c, c.dim()).nonzero) out.push_back(canonical_string(coarse ? z.coarse() : z.expand()));
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

bool spectrum_theorem_holds(const SimplicialComplex& c, int samples, RationalSampler& rng, std::string* why) {
  const int d = c.dim();
  for (int i = 0; i <= d; ++i) {
    Spectrum sp = shifted_spectrum(c, i);
    std::vector<LaurentPoly> zs;
    for (const auto& z : sp.nonzero) zs.push_back(z.expand());
    const auto vars = variables_of(zs, fine_variables(c));
    for (int s = 0; s < samples; ++s) {
      Assignment at = rng.assign(vars);
      std::vector<mpq_class> roots;
      for (const auto& z : zs) roots.push_back(evaluate(z, at));
      UPoly lhs = char_poly(balanced_laplacian_at(c, i - 1, d, 0, at));
      UPoly rhs = upoly_from_roots(roots, sp.zeros);
      upoly_trim(lhs);
      if (lhs != rhs)
        return fail(why, c.to_string() + " level " + std::to_string(i) + ": characteristic polynomial " +
                             upoly_to_string(lhs) + " but predicted " + upoly_to_string(rhs));
    }
  }
  return true;
}

bool cone_spectrum_holds(const SimplicialComplex& delta, int samples, RationalSampler& rng, std::string* why) {
  for (int v : delta.vertices())
    if (v < 2) throw InputError("cone base must avoid vertex 1");
  const int d = delta.dim();
  const SimplicialComplex sigma = cone(1, delta);
  const auto vars = fine_variables(sigma, 2);
  for (int s = 0; s < samples; ++s) {
    Assignment at = rng.assign(vars);
    for (int i = -1; i <= d; ++i) {
      UPoly lhs = nonzero_part(char_poly(balanced_laplacian_at(sigma, i, d + 1, 0, at)));
      const mpq_class a = at.at(VarId::fine(d - i + 1, 1));
      const mpq_class b = a / at.at(VarId::fine(d - i + 2, 1));
      UPoly up_lambda = nonzero_part(char_poly(balanced_laplacian_at(delta, i, d, 1, at)));
      UPoly up_mu = i - 1 >= -1 ? nonzero_part(char_poly(balanced_laplacian_at(delta, i - 1, d, 1, at))) : UPoly{1};
      UPoly rhs = upoly_mul(affine_substitute(up_lambda, a, 1), affine_substitute(up_mu, a, b));
      const std::size_t beta = homology(delta, i).betti;
      for (std::size_t t = 0; t < beta; ++t) rhs = upoly_mul(rhs, UPoly{-a, 1});
      if (lhs != rhs)
        return fail(why, "cone over " + delta.to_string() + " level " + std::to_string(i) + ": " + upoly_to_string(lhs) +
                             " vs " + upoly_to_string(rhs));
    }
  }
  return true;
}

bool weighted_pi_identity_holds(const SimplicialComplex& c, Scheme s, int samples, RationalSampler& rng,
                                std::string* why) {
  const int d = c.dim();
  if (d < 1) throw InputError("the weighted identity needs dimension at least one");
  const SymbolicMatrix lap = weighted_laplacian(c, s);
  const LaurentPoly tau_hat = weighted_oracle(c, s);
  const mpz_class tau_below = tau_via_reduced_laplacian(c, d - 1);
  const mpz_class tor = homology(c, d - 2).torsion;
  std::vector<LaurentPoly> entries{tau_hat};
  const auto vars = variables_of(entries, {});
  for (int t = 0; t < samples; ++t) {
    Assignment at = rng.assign(vars);
    UPoly cp = nonzero_part(char_poly(evaluate_matrix(lap, at)));
    mpq_class pi = abs(cp.front());
    mpq_class rhs = evaluate(tau_hat, at) * tau_below / (tor * tor);
    if (pi != rhs)
      return fail(why, c.to_string() + ": weighted eigenvalue product " + pi.get_str() + " but tree side " + rhs.get_str());
  }
  return true;
}

mpq_class weighted_tau_at(const SimplicialComplex& c, Scheme s, const Assignment& at) {
  const int d = c.dim();
  const std::vector<Face> u = default_ridge_tree(c, d - 1);
  const SymbolicMatrix lap = weighted_laplacian(c, s);
  std::set<Face> drop(u.begin(), u.end());
  std::vector<std::size_t> keep;
  for (std::size_t i = 0; i < lap.rows(); ++i)
    if (!drop.count(lap.row_faces[i])) keep.push_back(i);
  return det(evaluate_matrix(lap.principal(keep), at)) * torsion_correction(c, d, u);
}

LaurentPoly verified_shifted_tau(const SimplicialComplex& c, Scheme s, std::size_t cap, int samples, std::uint64_t seed) {
  if (s == Scheme::Facet) throw InputError("shifted enumerators use the fine or coarse weighting");
  LaurentPoly closed = s == Scheme::Fine ? shifted_tau_fine(c) : shifted_tau_coarse(c);
  const std::size_t size = c.f(c.dim() - 1) - default_ridge_tree(c, c.dim() - 1).size();
  if (size <= cap) {
    check(closed == weighted_tau(c, s, std::nullopt, cap), "closed-form enumerator differs from the reduced Laplacian");
    return closed;
  }
  RationalSampler rng(seed);
  std::vector<VarId> extra = fine_variables(c);
  for (int v : c.vertices()) extra.push_back(VarId::coarse(v));
  const auto vars = variables_of({closed}, extra);
  for (int t = 0; t < samples; ++t) {
    Assignment at = rng.assign(vars);
    check(evaluate(closed, at) == weighted_tau_at(c, s, at), "closed-form enumerator differs from the reduced Laplacian at a random point");
  }
  return closed;
}

bool agree_at_random_points(const LaurentPoly& a, const LaurentPoly& b, int samples, RationalSampler& rng) {
  const auto vars = variables_of({a, b}, {});
  for (int t = 0; t < samples; ++t) {
    Assignment at = rng.assign(vars);
    if (evaluate(a, at) != evaluate(b, at)) return false;
  }
  return true;
}

bool two_of_three_holds(const SimplicialComplex& c, int k, int samples, std::mt19937_64& rng, std::string* why) {
  if (k < 0 || k > c.dim()) return true;
  const SimplicialComplex sk = skeleton(c, k);
  const IntMatrix bd = boundary_matrix(sk, k).m;
  const std::size_t below = k >= 1 ? rank(boundary_matrix(sk, k - 1).m) : 0;
  const std::size_t rk = rank(bd);
  const std::size_t beta_k = sk.f(k) - rk;
  const std::size_t beta_km1 = sk.f(k - 1) - below - rk;
  const std::size_t target = sk.f(k) - beta_k + beta_km1;
  const std::size_t n = sk.f(k);
  for (int t = 0; t < samples; ++t) {
    std::vector<std::size_t> idx(n);
    std::iota(idx.begin(), idx.end(), 0);
    std::shuffle(idx.begin(), idx.end(), rng);
    const std::size_t size = t % 2 == 0 ? std::min(target, n) : std::uniform_int_distribution<std::size_t>(0, n)(rng);
    idx.resize(size);
    std::sort(idx.begin(), idx.end());
    const std::size_t r = rank(bd.select_columns(idx));
    const bool acyclic = r == size;
    const bool finite = sk.f(k - 1) - below - r == 0;
    const bool count = size == target;
    const int held = int(acyclic) + int(finite) + int(count);
    if (held == 2) return fail(why, c.to_string() + ": a subset satisfies exactly two tree conditions at level " + std::to_string(k));
  }
  return true;
}

bool boundary_squares_to_zero(const SimplicialComplex& c, std::string* why) {
  for (int k = 0; k <= c.dim(); ++k) {
    if (!(boundary_matrix(c, k - 1).m * boundary_matrix(c, k).m).is_zero())
      return fail(why, c.to_string() + ": integer boundary squares to a nonzero map at level " + std::to_string(k));
    if (k >= 1 && !(algebraic_boundary(c, k - 1) * algebraic_boundary(c, k)).is_zero())
      return fail(why, c.to_string() + ": algebraic boundary squares to a nonzero map at level " + std::to_string(k));
  }
  return true;
}

bool euler_identity_holds(const SimplicialComplex& c, std::string* why) {
  long faces = 0, betti = 0;
  for (int k = -1; k <= c.dim(); ++k) {
    const long sign = (k + 1) % 2 == 0 ? 1 : -1;
    faces += sign * static_cast<long>(c.f(k));
    betti += sign * static_cast<long>(homology(c, k).betti);
  }
  if (faces != betti) return fail(why, c.to_string() + ": Euler characteristic mismatch");
  return true;
}

bool snf_divisibility_holds(const SimplicialComplex& c, std::string* why) {
  for (int k = 0; k <= c.dim(); ++k) {
    const IntMatrix bd = boundary_matrix(c, k).m;
    auto inv = smith_normal_form(bd);
    if (inv.size() != rank(bd)) return fail(why, c.to_string() + ": invariant factor count differs from the rank");
    for (std::size_t i = 0; i < inv.size(); ++i) {
      if (inv[i] <= 0) return fail(why, c.to_string() + ": nonpositive invariant factor");
      if (i + 1 < inv.size() && inv[i + 1] % inv[i] != 0) return fail(why, c.to_string() + ": invariant factors do not divide");
    }
    if (smith_normal_form_small(bd) != inv) return fail(why, c.to_string() + ": 64-bit and GMP normal forms differ");
  }
  return true;
}

bool u_independence_holds(const SimplicialComplex& c, std::size_t max_trees, std::string* why) {
  for (int k = 1; k <= c.dim(); ++k) {
    bool apc = true;
    for (int j = -1; j < k; ++j) apc = apc && homology(c, j).betti == 0;
    if (!apc) break;
    const mpz_class ref = tau_via_reduced_laplacian(c, k);
    TreeCount ridge = enumerate_ssts(c, k - 1, kDefaultSubsetCap, true);
    const std::size_t n = ridge.trees.size();
    const std::size_t step = std::max<std::size_t>(1, n / std::max<std::size_t>(1, max_trees));
    for (std::size_t t = 0; t < n; t += step) {
      mpz_class val = tau_via_reduced_laplacian(c, k, ridge.trees[t].first);
      if (val != ref)
        return fail(why, c.to_string() + ": ridge tree choice changes tau_" + std::to_string(k) + " from " + ref.get_str() +
                             " to " + val.get_str());
    }
  }
  return true;
}

bool degree_signature_count_holds(const SimplicialComplex& c, std::string* why) {
  auto verts = c.vertices();
  if (verts.empty()) return true;
  verts.push_back(verts.back() + 1);
  for (int i = 0; i <= c.dim(); ++i) {
    auto deg = degree_sequence(c.faces(i), verts);
    std::map<int, long> by_max;
    for (const auto& cp : critical_pairs(c, i)) ++by_max[cp.signature.back()];
    for (std::size_t v = 0; v + 1 < verts.size(); ++v)
      if (deg[v] - deg[v + 1] != by_max[verts[v]])
        return fail(why, c.to_string() + ": degree drop at vertex " + std::to_string(verts[v]) + " level " + std::to_string(i));
  }
  return true;
}

bool betti_identity_holds(const SimplicialComplex& c, std::string* why) {
  auto verts = c.vertices();
  if (verts.empty()) return true;
  const int p = verts.front();
  for (int i = 0; i <= c.dim(); ++i) {
    std::size_t n = 0;
    for (const auto& f : c.faces(i)) {
      if (std::binary_search(f.begin(), f.end(), p)) continue;
      Face g = f;
      g.insert(g.begin(), p);
      if (!c.contains(g)) ++n;
    }
    if (n != homology(c, i).betti)
      return fail(why, c.to_string() + ": Betti number at level " + std::to_string(i) + " is not the face count");
  }
  return true;
}

bool recurrence_readings_agree(const SimplicialComplex& c, std::string* why) {
  for (int i = 0; i <= c.dim(); ++i)
    if (long_signatures_recursive(c, i, true) != long_signatures_recursive(c, i, false))
      return fail(why, c.to_string() + ": recurrence readings differ at level " + std::to_string(i));
  return true;
}

bool isomorphic(const SimplicialComplex& a, const SimplicialComplex& b) {
  if (a.f_vector() != b.f_vector()) return false;
  const auto va = a.vertices();
  const auto vb = b.vertices();
  if (va.size() != vb.size()) return false;
  // Vertices are only matched to vertices lying in the same number of faces.
  auto star_size = [](const SimplicialComplex& c, int v) {
    long n = 0;
    for (int k = 0; k <= c.dim(); ++k)
      for (const auto& f : c.faces(k)) n += std::binary_search(f.begin(), f.end(), v);
    return n;
  };
  std::map<long, std::vector<int>> ga, gb;
  for (int v : va) ga[star_size(a, v)].push_back(v);
  for (int v : vb) gb[star_size(b, v)].push_back(v);
  if (ga.size() != gb.size()) return false;
  std::vector<std::vector<int>> from, to;
  for (auto ia = ga.begin(), ib = gb.begin(); ia != ga.end(); ++ia, ++ib) {
    if (ia->first != ib->first || ia->second.size() != ib->second.size()) return false;
    from.push_back(ia->second);
    to.push_back(ib->second);
  }
  std::function<bool(std::size_t)> rec = [&](std::size_t g) {
    if (g == to.size()) {
      std::map<int, int> perm;
      for (std::size_t i = 0; i < from.size(); ++i)
        for (std::size_t j = 0; j < from[i].size(); ++j) perm[from[i][j]] = to[i][j];
      return relabel(a, perm) == b;
    }
    std::sort(to[g].begin(), to[g].end());
    do {
      if (rec(g + 1)) return true;
    } while (std::next_permutation(to[g].begin(), to[g].end()));
    return false;
  };
  return rec(0);
}

NonHearingWitness find_non_hearing_pair(int max_vertices) {
  NonHearingWitness w;
  w.max_vertices = max_vertices;
  // Complexes on [1,n] are also listed for larger n, so only the new ones are examined at each size.
  std::set<std::vector<Face>> seen;
  std::map<std::vector<long>, std::vector<SimplicialComplex>> by_degree;
  for (int n = 3; n <= max_vertices && !w.found; ++n) {
    for (auto& c : corpus::pure_shifted_complexes(n, 2)) {
      if (!seen.insert(c.faces(2)).second) continue;
      ++w.searched;
      by_degree[degree_sequence(c.faces(2), c.vertices())].push_back(c);
    }
    for (auto& [deg, group] : by_degree) {
      for (std::size_t x = 0; x < group.size() && !w.found; ++x)
        for (std::size_t y = x + 1; y < group.size() && !w.found; ++y) {
          const auto& a = group[x];
          const auto& b = group[y];
          if (top_signature(a, true) != top_signature(b, true)) continue;
          if (top_signature(a, false) == top_signature(b, false)) continue;
          if (isomorphic(a, b)) continue;
          w.found = true;
          w.a = a;
          w.b = b;
          w.vertices = n;
        }
      if (w.found) break;
    }
    if (!w.found) w.exhausted_through = n;
  }
  return w;
}

std::vector<SuiteLine> run_invariant_suite(const std::vector<SimplicialComplex>& shifted_corpus, const SuiteOptions& opt) {
  std::vector<SuiteLine> out;
  RationalSampler rng(opt.seed);
  std::mt19937_64 mt(opt.seed);
  std::vector<SimplicialComplex> named{corpus::bipyramid(), corpus::tetrahedron_boundary(), corpus::rp2(),
                                       corpus::complete_graph(5), corpus::complete_bipartite(3, 3),
                                       corpus::simplex_skeleton(6, 2)};
  std::vector<SimplicialComplex> everything = named;
  everything.insert(everything.end(), shifted_corpus.begin(), shifted_corpus.end());

  auto run = [&](const std::string& name, const std::vector<SimplicialComplex>& cs, auto&& pred) {
    SuiteLine line;
    line.name = name;
    for (const auto& c : cs) {
      std::string why;
      bool ok = false;
      try {
        ok = pred(c, &why);
      } catch (const std::exception& e) {
        why = c.to_string() + ": " + e.what();
      }
      ++line.cases;
      if (!ok && line.ok) {
        line.ok = false;
        line.detail = why;
      }
    }
    out.push_back(std::move(line));
  };

  run("spectrum theorem", shifted_corpus, [&](const SimplicialComplex& c, std::string* why) {
    return spectrum_theorem_holds(c, opt.samples, rng, why);
  });
  run("cone spectrum", shifted_corpus, [&](const SimplicialComplex& c, std::string* why) {
    std::vector<Face> fs;
    for (auto f : c.facets()) {
      for (int& v : f) ++v;
      fs.push_back(f);
    }
    return cone_spectrum_holds(SimplicialComplex::from_facets(fs), 2, rng, why);
  });
  run("recurrence readings", shifted_corpus, [](const SimplicialComplex& c, std::string* why) {
    return recurrence_readings_agree(c, why);
  });
  run("two out of three", everything, [&](const SimplicialComplex& c, std::string* why) {
    for (int k = 0; k <= c.dim(); ++k)
      if (!two_of_three_holds(c, k, 8, mt, why)) return false;
    return true;
  });
  run("boundary squares to zero", everything, [](const SimplicialComplex& c, std::string* why) {
    return boundary_squares_to_zero(c, why);
  });
  run("Euler characteristic", everything, [](const SimplicialComplex& c, std::string* why) {
    return euler_identity_holds(c, why);
  });
  run("Smith normal form divisibility", everything, [](const SimplicialComplex& c, std::string* why) {
    return snf_divisibility_holds(c, why);
  });
  run("ridge tree independence", everything, [](const SimplicialComplex& c, std::string* why) {
    return u_independence_holds(c, 6, why);
  });
  run("degree signature count", shifted_corpus, [](const SimplicialComplex& c, std::string* why) {
    return degree_signature_count_holds(c, why);
  });
  run("shifted Betti numbers", shifted_corpus, [](const SimplicialComplex& c, std::string* why) {
    return betti_identity_holds(c, why);
  });
  run("hearing the shape", shifted_corpus, [](const SimplicialComplex& c, std::string* why) {
    if (hear_shape(all_spectra(c)) == c) return true;
    return fail(why, c.to_string() + ": reconstruction differs");
  });
  run("Duval-Reiner spectrum", shifted_corpus, [](const SimplicialComplex& c, std::string* why) {
    const int d = c.dim();
    std::vector<long> numeric;
    for (const auto& z : shifted_spectrum(c, d).nonzero) numeric.push_back(evaluate_at_ones(z.expand()).get_num().get_si());
    numeric.resize(numeric.size() + shifted_spectrum(c, d).zeros, 0);
    std::sort(numeric.rbegin(), numeric.rend());
    if (numeric == unweighted_spectrum_duval_reiner(c)) return true;
    return fail(why, c.to_string() + ": unweighted spectrum is not the conjugate degree partition");
  });
  return out;
}

}  // namespace sst::checks
