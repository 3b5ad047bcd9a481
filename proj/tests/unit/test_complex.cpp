#include <doctest.h>

#include "sst/complex.hpp"
#include "sst/corpus.hpp"
#include "sst/errors.hpp"

using namespace sst;

namespace {

SimplicialComplex cx(std::vector<Face> f) { return SimplicialComplex::from_facets(f); }

}  // namespace

TEST_CASE("closure of facets") {
  auto c = cx({{1, 2}, {2, 3}});
  CHECK(c.f_vector() == std::vector<std::size_t>{1, 3, 2});
  CHECK(c.contains({}));
  CHECK(c.contains({1}));
  CHECK(c.contains({2, 3}));
  CHECK_FALSE(c.contains({1, 3}));
  CHECK(cx({{1, 2, 3}}).num_faces() == 8);
  CHECK(corpus::bipyramid().f_vector() == std::vector<std::size_t>{1, 5, 9, 7});
}

TEST_CASE("facets are validated") {
  CHECK_THROWS_AS(cx({{1, 1}}), InputError);
  CHECK_THROWS_AS(cx({{0, 1}}), InputError);
  CHECK(SimplicialComplex().dim() == -1);
  CHECK(SimplicialComplex().num_faces() == 1);
}

TEST_CASE("face strings") {
  CHECK(face_to_string({1, 3, 5}) == "135");
  CHECK(face_to_string({}) == "{}");
  CHECK(face_to_string({2, 10}) == "2,10");
  CHECK(face_from_string("2,3,5") == Face{2, 3, 5});
  CHECK(face_from_string("532") == Face{2, 3, 5});
  CHECK_THROWS_AS(face_from_string("1a"), InputError);
}

TEST_CASE("skeleta") {
  auto tri = cx({{1, 2, 3}});
  CHECK(skeleton(tri, 1) == cx({{1, 2}, {1, 3}, {2, 3}}));
  auto b = corpus::bipyramid();
  CHECK(skeleton(b, 2) == b);
  // Every pair except 45 lies in a facet, so the 1-skeleton is K5 minus an edge.
  auto sk = skeleton(b, 1);
  CHECK(sk.f(1) == 9);
  CHECK_FALSE(sk.contains({4, 5}));
  CHECK(*pure_skeleton(cx({{1, 2, 3}, {4, 5}}), 2) == cx({{1, 2, 3}}));
  CHECK(*pure_skeleton(b, 2) == b);
  CHECK_FALSE(pure_skeleton(cx({{1, 2}}), 2).has_value());
}

TEST_CASE("link, deletion and cone") {
  auto b = corpus::bipyramid();
  CHECK(link(b, 1) == corpus::bipyramid_part(3));
  CHECK(link(b, 1).facets() == std::vector<Face>{{2, 3}, {2, 4}, {2, 5}, {3, 4}, {3, 5}});
  CHECK(deletion(b, 1) == corpus::bipyramid_part(2));
  CHECK(cone(2, corpus::bipyramid_part(4)) == corpus::bipyramid_part(2));
  CHECK(link(cx({{1, 2, 3}}), 1) == cx({{2, 3}}));
  CHECK(cone(1, cx({{2, 3}})) == cx({{1, 2, 3}}));
  CHECK(cone(5, SimplicialComplex()) == corpus::bipyramid_part(7));
  CHECK_THROWS_AS(cone(2, cx({{2, 3}})), InputError);
}

TEST_CASE("boundary matrices") {
  auto e = boundary_matrix(cx({{1, 2}}), 1);
  CHECK(e.m == IntMatrix{{-1}, {1}});
  auto t = boundary_matrix(cx({{1, 2, 3}}), 2);
  CHECK(t.rows == std::vector<Face>{{1, 2}, {1, 3}, {2, 3}});
  CHECK(t.m == IntMatrix{{1}, {-1}, {1}});
  auto b = corpus::bipyramid();
  CHECK((boundary_matrix(b, 1).m * boundary_matrix(b, 2).m).is_zero());
  CHECK(epsilon(3, {1, 3, 5}) == -1);
  CHECK(epsilon(1, {1, 3, 5}) == 1);
}

TEST_CASE("shifted complexes") {
  auto b = shifted_from_generators({{2, 3, 5}}, 1);
  CHECK(b.facets().size() == 7);
  CHECK(is_shifted(b));
  CHECK_FALSE(is_shifted(cx({{1, 3}, {2, 4}})));
  CHECK(is_shifted(corpus::simplex_skeleton(5, 2)));
  CHECK_FALSE(is_shifted(corpus::rp2()));
  CHECK(componentwise_leq({1, 3, 4}, {2, 3, 5}));
  CHECK_FALSE(componentwise_leq({1, 4, 5}, {2, 3, 5}));
}
