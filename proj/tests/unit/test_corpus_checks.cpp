#include <doctest.h>

#include <random>

#include "sst/checks.hpp"
#include "sst/corpus.hpp"
#include "sst/errors.hpp"

using namespace sst;

namespace {

std::string data(const std::string& name) { return std::string(SST_DATA_DIR) + "/" + name; }

}  // namespace

TEST_CASE("fixtures match the generators") {
  CHECK(corpus::load_complex(data("bipyramid.json")) == corpus::bipyramid());
  CHECK(corpus::load_complex(data("bipyramid_generators.json")) == corpus::bipyramid());
  for (int k = 2; k <= 7; ++k)
    CHECK(corpus::load_complex(data("B" + std::to_string(k) + ".json")) == corpus::bipyramid_part(k));
  CHECK(corpus::load_complex(data("rp2.json")) == corpus::rp2());
  CHECK(corpus::load_complex(data("K2_3.json")) == corpus::complete_bipartite(2, 3));
  CHECK(corpus::load_complex(data("simplex6_skel2.json")) == corpus::simplex_skeleton(6, 2));
  auto cached = corpus::load_corpus(data("shifted_corpus.json"));
  auto fresh = corpus::shifted_complexes(6, 2);
  CHECK(cached.size() == 442);
  CHECK(cached == fresh);
}

TEST_CASE("enumerated complexes are shifted and distinct") {
  auto all = corpus::shifted_complexes(5, 2);
  for (std::size_t i = 0; i < all.size(); ++i) {
    CHECK(is_shifted(all[i]));
    if (i) CHECK_FALSE(all[i] == all[i - 1]);
  }
  // Pure shifted graphs on four vertices: order ideals in the poset of 2-subsets of [4].
  CHECK(corpus::pure_shifted_complexes(4, 1).size() == 7);
}

TEST_CASE("JSON parsing") {
  auto c = corpus::parse_complex_json(R"({"facets": [[1,2,3],[3,4]]})");
  CHECK(corpus::parse_complex_json(corpus::complex_to_json(c)) == c);
  CHECK(corpus::parse_complex_json(R"({"shifted_generators": [[2,3,5]]})") == corpus::bipyramid());
  CHECK_THROWS_AS(corpus::parse_complex_json("{"), InputError);
  CHECK_THROWS_AS(corpus::parse_complex_json(R"({"faces": []})"), InputError);
  CHECK_THROWS_AS(corpus::parse_complex_json(R"({"facets": [[1,"a"]]})"), InputError);
  CHECK_THROWS_AS(corpus::load_complex(data("missing.json")), InputError);
  CHECK(corpus::parse_generators("2,3,5;14") == std::vector<Face>{{2, 3, 5}, {1, 4}});
  CHECK(corpus::parse_int_list("3,2,2") == std::vector<long>{3, 2, 2});
  CHECK_THROWS_AS(corpus::parse_int_list("3,x"), InputError);
}

TEST_CASE("random APC sample is seeded") {
  auto a = corpus::random_apc_complexes(5, 7);
  auto b = corpus::random_apc_complexes(5, 7);
  CHECK(a == b);
  for (const auto& c : a) CHECK(is_apc(c));
}

TEST_CASE("property checks on named complexes") {
  std::mt19937_64 rng(checks::kDefaultSeed);
  for (const auto& c : {corpus::bipyramid(), corpus::rp2(), corpus::tetrahedron_boundary()}) {
    std::string why;
    CHECK_MESSAGE(checks::two_of_three_holds(c, c.dim(), 10, rng, &why), why);
    CHECK_MESSAGE(checks::boundary_squares_to_zero(c, &why), why);
    CHECK_MESSAGE(checks::euler_identity_holds(c, &why), why);
    CHECK_MESSAGE(checks::snf_divisibility_holds(c, &why), why);
    CHECK_MESSAGE(checks::u_independence_holds(c, 10, &why), why);
  }
  auto b = corpus::bipyramid();
  std::string why;
  RationalSampler sampler(checks::kDefaultSeed);
  CHECK_MESSAGE(checks::spectrum_theorem_holds(b, 3, sampler, &why), why);
  CHECK_MESSAGE(checks::degree_signature_count_holds(b, &why), why);
  CHECK_MESSAGE(checks::betti_identity_holds(b, &why), why);
  CHECK_MESSAGE(checks::recurrence_readings_agree(b, &why), why);
  CHECK_MESSAGE(checks::weighted_pi_identity_holds(b, Scheme::Fine, 3, sampler, &why), why);
  CHECK_MESSAGE(checks::weighted_pi_identity_holds(corpus::rp2(), Scheme::Coarse, 3, sampler, &why), why);
  CHECK_MESSAGE(checks::cone_spectrum_holds(corpus::bipyramid_part(2), 3, sampler, &why), why);
}

TEST_CASE("isomorphism") {
  auto a = SimplicialComplex::from_facets({{1, 2}, {2, 3}});
  auto b = SimplicialComplex::from_facets({{1, 3}, {2, 3}});
  auto c = SimplicialComplex::from_facets({{1, 2}, {3, 4}});
  CHECK(checks::isomorphic(a, b));
  CHECK_FALSE(checks::isomorphic(a, c));
}

TEST_CASE("verified closed form above the symbolic cap") {
  auto c = corpus::simplex_skeleton(6, 2);
  auto tau = checks::verified_shifted_tau(c, Scheme::Coarse, 4, 3, checks::kDefaultSeed);
  CHECK(evaluate_at_ones(tau) == 46656);
}
