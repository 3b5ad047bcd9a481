#include <doctest.h>

#include <algorithm>
#include <set>

#include "oracles.hpp"
#include "sst/corpus.hpp"
#include "sst/errors.hpp"
#include "sst/shifted.hpp"
#include "sst/spanning_trees.hpp"
#include "sst/weighted.hpp"

using namespace sst;

namespace {

LaurentPoly X(int j) { return LaurentPoly::var(VarId::coarse(j)); }
LaurentPoly X(int i, int j) { return LaurentPoly::var(VarId::fine(i, j)); }

LaurentPoly E(int n) {
  LaurentPoly s;
  for (int j = 1; j <= n; ++j) s += X(j);
  return s;
}

struct Row {
  std::string a, b, sig, z;
  auto operator<=>(const Row&) const = default;
};

std::multiset<Row> table_rows(const SimplicialComplex& c) {
  std::multiset<Row> out;
  for (const auto& cp : critical_pairs(c, c.dim())) {
    ZPolynomial z{cp.s, cp.t, 0, c.dim()};
    out.insert({face_to_string(cp.a), face_to_string(cp.b), face_to_string(cp.signature), z.to_string()});
  }
  return out;
}

std::multiset<std::string> top_spectrum(const SimplicialComplex& c) {
  std::multiset<std::string> out;
  for (const auto& z : shifted_spectrum(c, c.dim()).nonzero) out.insert(z.to_string());
  return out;
}

}  // namespace

TEST_CASE("critical pair table of the bipyramid pieces") {
  using R = std::multiset<Row>;
  CHECK(table_rows(corpus::bipyramid_part(7)) == R{{"5", "6", "5", "z({},5)"}});
  CHECK(table_rows(corpus::bipyramid_part(6)) == R{{"5", "6", "5", "z({},45)"}});
  CHECK(table_rows(corpus::bipyramid_part(5)) == R{{"5", "6", "5", "z({},345)"}});
  CHECK(table_rows(corpus::bipyramid_part(4)) == R{{"35", "45", "3", "z({},3)"}, {"35", "36", "35", "z(3,345)"}});
  CHECK(table_rows(corpus::bipyramid_part(3)) ==
        R{{"25", "26", "25", "z(2,2345)"}, {"35", "36", "35", "z(3,2345)"}, {"35", "45", "3", "z({},23)"}});
  CHECK(table_rows(corpus::bipyramid_part(2)) == R{{"235", "236", "235", "z(23,2345)"}, {"235", "245", "23", "z(2,23)"}});
  CHECK(table_rows(corpus::bipyramid()) == R{{"125", "126", "125", "z(12,12345)"},
                                             {"135", "136", "135", "z(13,12345)"},
                                             {"135", "145", "13", "z(1,123)"},
                                             {"235", "236", "235", "z(23,12345)"},
                                             {"235", "245", "23", "z(2,123)"}});
  CHECK_THROWS_AS(critical_pairs(std::vector<Face>{{1, 3}, {2, 4}}), DomainError);
}

TEST_CASE("pairs of a full skeleton") {
  // In the d-skeleton of the n-simplex only the faces A + n have critical partners A + (n+1).
  auto c = corpus::simplex_skeleton(5, 1);
  auto pairs = critical_pairs(c, 1);
  CHECK(pairs.size() == 4);
  for (const auto& cp : pairs) {
    CHECK(cp.a.back() == 5);
    Face b = cp.a;
    b.back() = 6;
    CHECK(cp.b == b);
  }
}

TEST_CASE("z-polynomials") {
  auto z = z_poly({1, 3}, {1, 2, 3, 4, 5}, 2);
  auto num = X(1, 1) * X(2, 1) * X(3, 3) + X(1, 1) * X(2, 2) * X(3, 3) + X(1, 1) * X(2, 3) * X(3, 3) +
             X(1, 1) * X(2, 3) * X(3, 4) + X(1, 1) * X(2, 3) * X(3, 5);
  CHECK(z == div_exact(num, X(2, 1) * X(3, 3)));
  CHECK(z_poly({}, {}, 2).is_zero());
  CHECK(z_poly({}, {4}, 2) == X(1, 4));
}

TEST_CASE("spectra of the bipyramid") {
  auto b = corpus::bipyramid();
  CHECK(top_spectrum(b) == std::multiset<std::string>{"z(12,12345)", "z(13,12345)", "z(1,123)", "z(23,12345)", "z(2,123)"});
  auto s = shifted_spectrum(b, 2);
  CHECK(s.zeros == 4);
  std::multiset<std::string> coarse;
  for (const auto& z : s.nonzero) coarse.insert(canonical_string(z.coarse()));
  CHECK(coarse == std::multiset<std::string>{canonical_string(E(5)), canonical_string(E(5)), canonical_string(E(5)),
                                             canonical_string(E(3)), canonical_string(E(3))});
  CHECK(top_spectrum(corpus::bipyramid_part(4)) == std::multiset<std::string>{"z({},3)", "z(3,345)"});
  CHECK_THROWS_AS(shifted_spectrum(corpus::rp2(), 2), DomainError);
}

TEST_CASE("unweighted spectra") {
  CHECK(unweighted_spectrum_duval_reiner(corpus::bipyramid()) == std::vector<long>{5, 5, 5, 3, 3, 0, 0, 0, 0});
  CHECK(unweighted_spectrum_duval_reiner(corpus::complete_graph(2)) == std::vector<long>{2, 0});
  CHECK(conjugate_partition({5, 5, 5, 3, 3}) == std::vector<long>{5, 5, 5, 3, 3});
  CHECK(conjugate_partition({3, 1}) == std::vector<long>{2, 1, 1});
}

TEST_CASE("hearing the shape") {
  auto b = corpus::bipyramid();
  CHECK(hear_shape(all_spectra(b)).facets() == b.facets());
  CHECK(hear_shape_top(shifted_spectrum(b, 2), 2).facets() == b.facets());
  CHECK(hear_shape({}) == SimplicialComplex());
  CHECK(hear_shape({}).vertices().empty());
  for (int k = 2; k <= 7; ++k) {
    auto c = corpus::bipyramid_part(k);
    CHECK(hear_shape(all_spectra(c)).facets() == c.facets());
  }
}

TEST_CASE("fine enumerator of the bipyramid") {
  auto b = corpus::bipyramid();
  auto F = [](const Face& f) { return monomial_for_face(f); };
  auto expected = F({1, 2, 3}) * F({1, 2, 4}) * F({1, 3, 4}) * F({1, 2, 5}) * F({1, 3, 5}) *
                  div_exact(F({1, 2}) + F({2, 2}) + F({2, 3}), F({1, 2})) *
                  div_exact(F({1, 2, 3}) + F({2, 2, 3}) + F({2, 3, 3}) + F({2, 3, 4}) + F({2, 3, 5}), F({1, 2, 3}));
  CHECK(shifted_tau_fine(b) == expected);
  CHECK(shifted_tau_fine(b) == weighted_tau(b, Scheme::Fine));
  CHECK(coarse_collapse(expected) == shifted_tau_coarse(b));
  CHECK(shifted_tau_coarse(b) == X(1).pow(3) * X(2).pow(3) * X(3).pow(3) * X(4).pow(2) * X(5).pow(2) * E(5) * E(3));
}

TEST_CASE("simplex skeleta") {
  for (int n = 3; n <= 6; ++n)
    for (int d = 1; d < n - 1; ++d) {
      auto c = corpus::simplex_skeleton(n, d);
      LaurentPoly all(1);
      for (int j = 1; j <= n; ++j) all *= X(j);
      auto tau = shifted_tau_coarse(c);
      CHECK(tau == all.pow(static_cast<unsigned>(oracle::binomial(n - 2, d - 1).get_ui())) * E(n).pow(static_cast<unsigned>(oracle::binomial(n - 2, d).get_ui())));
      CHECK(evaluate_at_ones(tau) == oracle::power(n, oracle::binomial(n - 2, d)));
    }
}

TEST_CASE("threshold graphs") {
  auto star = threshold_from_degrees({4, 1, 1, 1, 1});
  LaurentPoly prod(1);
  for (int v = 2; v <= 5; ++v) prod *= edge_monomial(1, v);
  CHECK(threshold_tau(star) == prod);
  auto k3 = threshold_from_degrees({2, 2, 2});
  CHECK(threshold_tau(k3) == edge_monomial(1, 3) * (edge_monomial(1, 2) + edge_monomial(2, 2) + edge_monomial(2, 3)));
  CHECK_THROWS_AS(threshold_from_degrees({1, 1, 1, 1}), DomainError);
}

TEST_CASE("threshold enumerators against the tree sum") {
  auto g = threshold_from_degrees({4, 3, 2, 2, 1});
  std::vector<oracle::Edge> edges;
  for (const auto& e : g.faces(1)) edges.push_back({e[0], e[1]});
  auto direct = oracle::tree_sum(edges, 5, [](const oracle::Edge& e) { return edge_monomial(e.first, e.second); });
  CHECK(threshold_tau(g) == direct);
}

TEST_CASE("Ferrers graphs") {
  auto x = [](int r) { return LaurentPoly::var(VarId::row(r)); };
  auto y = [](int c) { return LaurentPoly::var(VarId::col(c)); };
  auto t = ferrers_tau({2, 2});
  CHECK(t == x(1) * x(2) * y(1) * y(2) * (y(1) + y(2)) * (x(1) + x(2)));
  CHECK(evaluate_at_ones(t) == 4);
  CHECK(t == ferrers_tau_via_threshold({2, 2}));
  for (int n = 1; n <= 4; ++n)
    for (int m = 1; m <= 4; ++m) {
      std::vector<long> lambda(static_cast<std::size_t>(m), n);
      CHECK(evaluate_at_ones(ferrers_tau(lambda)) == oracle::power(n, m - 1) * oracle::power(m, n - 1));
    }
  CHECK_THROWS_AS(ferrers_tau({1, 2}), InputError);
}

TEST_CASE("near-cone deletion") {
  // The reduced fine Laplacian of the bipyramid, rescaled, is the algebraic Laplacian of
  // the deletion shifted by X[1,1].
  auto b = corpus::bipyramid();
  auto del = deletion(b, 1);
  auto lap = algebraic_fine_laplacian(del, 1);
  auto ridges = del.faces(1);
  auto full = b.faces(1);
  auto L = weighted_laplacian(b, Scheme::Fine);
  for (std::size_t r = 0; r < ridges.size(); ++r)
    for (std::size_t s = 0; s < ridges.size(); ++s) {
      auto ir = std::find(full.begin(), full.end(), ridges[r]) - full.begin();
      auto is = std::find(full.begin(), full.end(), ridges[s]) - full.begin();
      auto scale = raise(monomial_for_face(ridges[r], Weighting::Fine, false), 1, 2) *
                   raise(monomial_for_face(ridges[s], Weighting::Fine, false), 1, 2);
      auto n = div_exact(L(ir, is), scale);
      auto expected = lap(r, s);
      if (r == s) expected += X(1, 1);
      CHECK(n == expected);
    }
}
