#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <vector>

#include "sst/complex.hpp"
#include "sst/linalg.hpp"

namespace sst {

struct SstCertificate {
  bool is_tree = false;
  // H_k of the candidate vanishes.
  bool top_acyclic = false;
  // H_{k-1} of the candidate is finite.
  bool finite_below = false;
  // Facet count equals f_k - beta_k + beta_{k-1} of the k-skeleton.
  bool count_ok = false;
  std::vector<Face> facets;
  HomologySummary below;
};

// Candidate is T together with the full (k-1)-skeleton.
SstCertificate is_sst(const SimplicialComplex& c, int k, const std::vector<Face>& t);

struct TreeCount {
  mpz_class tau = 0;
  std::size_t num_trees = 0;
  // Facet set and torsion order of each tree, in colex order of facet index sets.
  std::vector<std::pair<std::vector<Face>, mpz_class>> trees;
};

constexpr std::uint64_t kDefaultSubsetCap = 2000000;

// Number of facets of every k-SST of the k-skeleton.
std::size_t sst_size(const SimplicialComplex& c, int k);

// Brute force over all facet subsets of the right size.
TreeCount enumerate_ssts(const SimplicialComplex& c, int k, std::uint64_t cap = kDefaultSubsetCap, bool keep_trees = true);

// Greedy deletion from the lexicographically largest facet down.
std::vector<Face> find_sst(const SimplicialComplex& c, int k);

// k-faces containing the minimal vertex; a ridge tree when k is the ridge dimension.
std::vector<Face> star_of_min_vertex(const SimplicialComplex& c, int k);
// Default tree on the k-faces, used as the ridge tree one level up: the star of the minimal vertex when c is shifted, otherwise greedy.
std::vector<Face> default_ridge_tree(const SimplicialComplex& c, int k);

mpz_class tau_via_reduced_laplacian(const SimplicialComplex& c, int k, const std::optional<std::vector<Face>>& u = std::nullopt);

// Product of the nonzero eigenvalues of the up-down Laplacian on C_{k-1}.
mpz_class pi_k(const SimplicialComplex& c, int k);

struct SmttReport {
  int k = 0;
  mpz_class pi;
  mpz_class tau_k;
  mpz_class tau_km1;
  mpz_class torsion_km2;
  // tau_k * tau_{k-1} / |H_{k-2}|^2
  mpq_class rhs;
  bool ok = false;
};
SmttReport smtt_identity_check(const SimplicialComplex& c, int k);

// Alternating product of the pi_k up to level d (default: dim).
mpz_class tau_via_alternating_product(const SimplicialComplex& c, std::optional<int> d = std::nullopt);

// Squared torsion correction |H_{k-2}(c)|^2 / |H_{k-2}(c_U)|^2 for a ridge tree U.
mpq_class torsion_correction(const SimplicialComplex& c, int k, const std::vector<Face>& u);

}  // namespace sst
