#include <doctest.h>

#include "sst/corpus.hpp"
#include "sst/linalg.hpp"

using namespace sst;

namespace {

std::vector<mpz_class> zs(std::initializer_list<long> v) {
  std::vector<mpz_class> out;
  for (long x : v) out.emplace_back(x);
  return out;
}

}  // namespace

TEST_CASE("Smith normal form") {
  CHECK(smith_normal_form(IntMatrix(3, 3)).empty());
  CHECK(smith_normal_form(IntMatrix::identity(3)) == zs({1, 1, 1}));
  CHECK(smith_normal_form(IntMatrix{{2, 4}, {6, 8}}) == zs({2, 4}));
  CHECK(smith_normal_form(IntMatrix{{2, 0}, {0, 3}}) == zs({1, 6}));
  auto rp = corpus::rp2();
  auto inv = smith_normal_form(boundary_matrix(rp, 2).m);
  CHECK(inv.back() == 2);
  CHECK(torsion_of(boundary_matrix(rp, 2).m) == 2);
  CHECK(smith_normal_form_small(boundary_matrix(rp, 2).m) == inv);
}

TEST_CASE("determinant, rank and characteristic polynomial") {
  CHECK(det(IntMatrix{{2, -1}, {-1, 2}}) == 3);
  CHECK(det(IntMatrix{{1, 2}, {1, 2}}) == 0);
  CHECK(char_poly(IntMatrix{{1, -1}, {-1, 1}}) == zs({0, -2, 1}));
  auto b = corpus::bipyramid();
  CHECK(rank(boundary_matrix(b, 2).m) == 5);
  CHECK(rank_small(boundary_matrix(b, 2).m) == 5);
  IntMatrix m{{3, 1, 4}, {1, 5, 9}, {2, 6, 5}};
  auto cp = char_poly(m);
  CHECK(cp[0] == -det(m));
  CHECK(cp[3] == 1);
}

TEST_CASE("rational characteristic polynomial agrees with the integer one") {
  IntMatrix m{{2, -1, 0, 3}, {-1, 2, -1, 0}, {0, -1, 2, 5}, {1, 0, -2, 1}};
  auto ci = char_poly(m);
  auto cq = char_poly(RatMatrix(m));
  REQUIRE(cq.size() == ci.size());
  for (std::size_t i = 0; i < ci.size(); ++i) CHECK(cq[i] == mpq_class(ci[i]));
  CHECK(det(RatMatrix(m)) == mpq_class(det(m)));
  CHECK(upoly_from_roots({1, 2}, 1) == UPoly{0, 2, -3, 1});
}

TEST_CASE("reduced homology") {
  auto hollow = corpus::complete_graph(3);
  CHECK(homology(hollow, 1).betti == 1);
  CHECK(homology(hollow, 1).torsion == 1);
  auto rp = corpus::rp2();
  CHECK(homology(rp, 1).betti == 0);
  CHECK(homology(rp, 1).torsion == 2);
  CHECK(homology(rp, 2).betti == 0);
  auto b = corpus::bipyramid();
  CHECK(homology(b, 1).betti == 0);
  CHECK(homology(b, 1).torsion == 1);
  CHECK(homology(b, 2).betti == 2);
  CHECK(homology(SimplicialComplex(), -1).betti == 1);
  CHECK(homology(b, -1).betti == 0);
}

TEST_CASE("APC") {
  CHECK(is_apc(corpus::bipyramid()));
  CHECK_FALSE(is_apc(corpus::two_edges()));
  CHECK(is_apc(corpus::rp2()));
}
