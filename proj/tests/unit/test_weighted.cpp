#include <doctest.h>

#include "oracles.hpp"
#include "sst/corpus.hpp"
#include "sst/errors.hpp"
#include "sst/weighted.hpp"

using namespace sst;

namespace {

LaurentPoly X(int j) { return LaurentPoly::var(VarId::coarse(j)); }
LaurentPoly T(int j) { return LaurentPoly::var(VarId::facet(j)); }

}  // namespace

TEST_CASE("weighted boundary") {
  auto e = SimplicialComplex::from_facets({{1, 2}});
  auto bd = weighted_boundary(e, 1, Scheme::Coarse);
  auto x12 = LaurentPoly::xvar(VarId::coarse(1)) * LaurentPoly::xvar(VarId::coarse(2));
  CHECK(bd(0, 0) == -x12);
  CHECK(bd(1, 0) == x12);
  CHECK(weighted_laplacian(e, Scheme::Coarse)(0, 0) == X(1) * X(2));
  auto b = corpus::bipyramid();
  auto fine = weighted_boundary(b, 2, Scheme::Fine);
  auto x123 = monomial_for_face({1, 2, 3}, Weighting::Fine, false);
  CHECK(fine(0, 0) == x123);
  CHECK(fine(1, 0) == -x123);
  CHECK(fine(4, 0) == x123);
  CHECK(fine(2, 0).is_zero());
  CHECK(weighted_laplacian(b, Scheme::Fine).is_symmetric());
}

TEST_CASE("symbolic determinant") {
  SymbolicMatrix d(2, 2);
  d(0, 0) = X(1);
  d(1, 1) = X(2);
  CHECK(symbolic_det(d) == X(1) * X(2));
  SymbolicMatrix r(2, 2);
  r(0, 0) = r(1, 0) = X(1);
  r(0, 1) = r(1, 1) = X(2);
  CHECK(symbolic_det(r).is_zero());
  CHECK_THROWS_AS(symbolic_det(SymbolicMatrix(13, 13)), ResourceError);
}

TEST_CASE("bipyramid coarse enumerator") {
  auto b = corpus::bipyramid();
  auto expected = X(1).pow(3) * X(2).pow(3) * X(3).pow(3) * X(4).pow(2) * X(5).pow(2) * (X(1) + X(2) + X(3)) *
                  (X(1) + X(2) + X(3) + X(4) + X(5));
  auto w = weighted_tau(b, Scheme::Coarse);
  CHECK(w == expected);
  CHECK(evaluate_at_ones(w) == 15);
  CHECK(w == weighted_oracle(b, Scheme::Coarse));
  CHECK(weighted_tau(b, Scheme::Fine) == weighted_oracle(b, Scheme::Fine));
  CHECK(coarse_collapse(weighted_tau(b, Scheme::Fine)) == w);
}

TEST_CASE("facet weighting") {
  auto k3 = corpus::complete_graph(3);
  CHECK(weighted_tau(k3, Scheme::Facet) == T(1) * T(2) + T(1) * T(3) + T(2) * T(3));
  auto sphere = corpus::tetrahedron_boundary();
  CHECK(weighted_tau(sphere, Scheme::Facet) ==
        T(1) * T(2) * T(3) + T(1) * T(2) * T(4) + T(1) * T(3) * T(4) + T(2) * T(3) * T(4));
  CHECK(weighted_tau(SimplicialComplex::from_facets({{1, 2, 3}}), Scheme::Fine) == monomial_for_face({1, 2, 3}));
}

TEST_CASE("Cayley-Pruefer") {
  for (int n = 2; n <= 5; ++n) {
    LaurentPoly all(1), sum;
    for (int j = 1; j <= n; ++j) {
      all *= X(j);
      sum += X(j);
    }
    CHECK(weighted_tau(corpus::complete_graph(n), Scheme::Coarse) == all * sum.pow(n - 2));
  }
}

TEST_CASE("ridge tree independence of the weighted enumerator") {
  auto b = corpus::bipyramid();
  auto ref = weighted_tau(b, Scheme::Fine);
  auto ridge = enumerate_ssts(b, 1);
  for (std::size_t t = 0; t < ridge.trees.size(); t += 25) CHECK(weighted_tau(b, Scheme::Fine, ridge.trees[t].first) == ref);
}

TEST_CASE("weighted graph oracle") {
  auto edges = oracle::complete_graph_edges(4);
  auto direct = oracle::tree_sum(edges, 4, [](const oracle::Edge& e) { return X(e.first) * X(e.second); });
  CHECK(weighted_tau(corpus::complete_graph(4), Scheme::Coarse) == direct);
}
