#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "sst/complex.hpp"
#include "sst/laurent.hpp"
#include "sst/linalg.hpp"
#include "sst/weighted.hpp"

namespace sst::checks {

constexpr std::uint64_t kDefaultSeed = 20080814;

// Each check returns true on success and otherwise writes a reason into *why when given.

// det(yI - L) of the up-down Laplacian equals y^zeros times the product of (y - z) over the
// predicted z-polynomials, at random points, for every level of a shifted complex.
bool spectrum_theorem_holds(const SimplicialComplex& c, int samples, RationalSampler& rng, std::string* why = nullptr);

// Cone over delta (vertices >= 2) with apex 1: the three-part spectrum, up to zeros, at random points.
bool cone_spectrum_holds(const SimplicialComplex& delta, int samples, RationalSampler& rng, std::string* why = nullptr);

// Product of nonzero eigenvalues of the weighted top Laplacian equals
// weighted_tau * tau_{d-1} / |H_{d-2}|^2, at random points.
bool weighted_pi_identity_holds(const SimplicialComplex& c, Scheme s, int samples, RationalSampler& rng,
                                std::string* why = nullptr);

// Reduced weighted Laplacian determinant times the torsion correction, at a point.
mpq_class weighted_tau_at(const SimplicialComplex& c, Scheme s, const Assignment& at);
// Closed-form shifted enumerator (fine or coarse; the coarse one is checked against the
// collapsed fine factors). Compared with weighted_tau symbolically when the
// reduced Laplacian fits under cap, otherwise with weighted_tau_at at random points. Throws InternalError on mismatch.
LaurentPoly verified_shifted_tau(const SimplicialComplex& c, Scheme s, std::size_t cap, int samples, std::uint64_t seed);

// Numeric equality of two Laurent polynomials at random points.
bool agree_at_random_points(const LaurentPoly& a, const LaurentPoly& b, int samples, RationalSampler& rng);

// Random facet subsets of every size: no subset satisfies exactly two of the three tree conditions.
bool two_of_three_holds(const SimplicialComplex& c, int k, int samples, std::mt19937_64& rng, std::string* why = nullptr);
// Integer boundaries compose to zero, and so do the algebraic fine boundaries.
bool boundary_squares_to_zero(const SimplicialComplex& c, std::string* why = nullptr);
// Alternating sum of face numbers equals the alternating sum of reduced Betti numbers.
bool euler_identity_holds(const SimplicialComplex& c, std::string* why = nullptr);
// Invariant factors divide each other and their number is the rank.
bool snf_divisibility_holds(const SimplicialComplex& c, std::string* why = nullptr);
// The reduced-Laplacian count does not depend on the ridge tree, over up to max_trees trees per level.
bool u_independence_holds(const SimplicialComplex& c, std::size_t max_trees, std::string* why = nullptr);
// deg(v) - deg(v+1) counts the signatures with largest vertex v, at every level.
bool degree_signature_count_holds(const SimplicialComplex& c, std::string* why = nullptr);
// beta_i equals the number of i-faces F avoiding p with F + p not a face.
bool betti_identity_holds(const SimplicialComplex& c, std::string* why = nullptr);
// The two readings of the signature recurrence (pure skeleton or the complex itself) agree.
bool recurrence_readings_agree(const SimplicialComplex& c, std::string* why = nullptr);

// Relabelling of vertices carrying one complex onto the other, by brute force.
bool isomorphic(const SimplicialComplex& a, const SimplicialComplex& b);

struct NonHearingWitness {
  bool found = false;
  std::optional<SimplicialComplex> a;
  std::optional<SimplicialComplex> b;
  // Distinct complexes examined.
  std::size_t searched = 0;
  int max_vertices = 0;
  // Vertex count of the witness pair.
  int vertices = 0;
  // Largest vertex count searched completely without a witness.
  int exhausted_through = 0;
};
// Non-isomorphic pure shifted 2-complexes with equal facet-degree sequences, equal coarse
// top spectra and different fine top spectra, searching vertex counts upward.
NonHearingWitness find_non_hearing_pair(int max_vertices = 9);

struct SuiteLine {
  std::string name;
  bool ok = true;
  std::size_t cases = 0;
  std::string detail;
};

struct SuiteOptions {
  int samples = 20;
  std::uint64_t seed = kDefaultSeed;
  int max_vertices = 6;
  int max_dim = 2;
};

// Every invariant over the shifted corpus plus the named complexes.
std::vector<SuiteLine> run_invariant_suite(const std::vector<SimplicialComplex>& shifted_corpus,
                                           const SuiteOptions& opt);

}  // namespace sst::checks
