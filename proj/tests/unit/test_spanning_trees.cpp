#include <doctest.h>

#include "oracles.hpp"
#include "sst/corpus.hpp"
#include "sst/errors.hpp"
#include "sst/spanning_trees.hpp"

using namespace sst;

namespace {

std::vector<Face> minus(const SimplicialComplex& c, int k, const std::vector<Face>& drop) {
  std::vector<Face> out;
  for (const auto& f : c.faces(k))
    if (std::find(drop.begin(), drop.end(), f) == drop.end()) out.push_back(f);
  return out;
}

}  // namespace

TEST_CASE("spanning tree recognition") {
  auto b = corpus::bipyramid();
  // Removing two facets leaves a tree exactly when their intersection avoids 4 and 5.
  CHECK(is_sst(b, 2, minus(b, 2, {{1, 2, 3}, {1, 2, 4}})).is_tree);
  CHECK_FALSE(is_sst(b, 2, minus(b, 2, {{1, 3, 4}, {2, 3, 4}})).is_tree);
  CHECK_FALSE(is_sst(b, 2, minus(b, 2, {{1, 2, 4}, {1, 3, 4}})).is_tree);
  auto sphere = corpus::tetrahedron_boundary();
  for (const auto& f : sphere.faces(2)) CHECK(is_sst(sphere, 2, minus(sphere, 2, {f})).is_tree);
  CHECK_FALSE(is_sst(sphere, 2, sphere.faces(2)).is_tree);
}

TEST_CASE("enumeration") {
  auto b = corpus::bipyramid();
  auto tc = enumerate_ssts(b, 2);
  CHECK(tc.num_trees == 15);
  CHECK(tc.tau == 15);
  for (auto& [t, tor] : tc.trees) CHECK(tor == 1);
  CHECK(enumerate_ssts(corpus::tetrahedron_boundary(), 2).num_trees == 4);
  auto rp = enumerate_ssts(corpus::rp2(), 2);
  CHECK(rp.num_trees == 1);
  CHECK(rp.trees.front().second == 2);
  CHECK(rp.tau == 4);
  CHECK_THROWS_AS(enumerate_ssts(corpus::two_edges(), 1), DomainError);
  CHECK_THROWS_AS(enumerate_ssts(corpus::simplex_skeleton(7, 2), 2, 1000), ResourceError);
}

TEST_CASE("greedy tree") {
  auto sphere = corpus::tetrahedron_boundary();
  CHECK(find_sst(sphere, 2).size() == 3);
  auto tri = SimplicialComplex::from_facets({{1, 2, 3}});
  CHECK(find_sst(tri, 2) == tri.faces(2));
  CHECK_THROWS_AS(find_sst(corpus::two_edges(), 1), DomainError);
}

TEST_CASE("reduced Laplacian counts") {
  auto b = corpus::bipyramid();
  CHECK(tau_via_reduced_laplacian(b, 2, star_of_min_vertex(b, 1)) == 15);
  CHECK(tau_via_reduced_laplacian(corpus::complete_graph(5), 1, std::vector<Face>{{1}}) == 125);
  CHECK(tau_via_reduced_laplacian(corpus::complete_bipartite(2, 3), 1) == 12);
  CHECK(tau_via_reduced_laplacian(corpus::simplex_skeleton(5, 2), 2) == 125);
  CHECK_THROWS_AS(tau_via_reduced_laplacian(b, 2, std::vector<Face>{{1, 2}}), InputError);
}

TEST_CASE("a ridge tree with torsion changes the correction factor") {
  // RP2 sits inside the 2-skeleton of the 5-simplex as a 2-tree with torsion 2.
  auto k6 = corpus::simplex_skeleton(6, 3);
  auto u = corpus::rp2().faces(2);
  CHECK(is_sst(k6, 2, u).is_tree);
  CHECK(torsion_correction(k6, 3, u) == mpq_class(1, 4));
  CHECK(tau_via_reduced_laplacian(k6, 3, u) == tau_via_reduced_laplacian(k6, 3));
  CHECK(tau_via_reduced_laplacian(k6, 3) == oracle::power(6, oracle::binomial(4, 3)));
}

TEST_CASE("eigenvalue products") {
  auto b = corpus::bipyramid();
  CHECK(pi_k(b, 0) == 5);
  CHECK(pi_k(b, 1) == 375);
  CHECK(pi_k(b, 2) == 1125);
  CHECK(pi_k(SimplicialComplex::from_facets({{1}}), 0) == 1);
  CHECK(pi_k(corpus::complete_graph(2), 1) == 2);
  for (int k = 0; k <= 2; ++k) CHECK(smtt_identity_check(b, k).ok);
}

TEST_CASE("alternating product") {
  auto b = corpus::bipyramid();
  CHECK(tau_via_alternating_product(b) == 15);
  CHECK(tau_via_alternating_product(b, 1) == 75);
  CHECK(tau_via_alternating_product(corpus::simplex_skeleton(5, 2)) == 125);
  CHECK(tau_via_alternating_product(corpus::rp2()) == 4);
  auto apart = SimplicialComplex::from_facets({{1, 2, 3}, {4, 5, 6}});
  CHECK_THROWS_AS(tau_via_alternating_product(apart), DomainError);
}

TEST_CASE("graph counts against Kirchhoff") {
  for (int n = 3; n <= 6; ++n) {
    auto edges = oracle::complete_graph_edges(n);
    CHECK(enumerate_ssts(corpus::complete_graph(n), 1).tau == oracle::kirchhoff(edges, n));
    CHECK(enumerate_ssts(corpus::complete_graph(n), 1).num_trees == oracle::spanning_trees(edges, n).size());
  }
}
