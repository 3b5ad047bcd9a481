#pragma once

#include <compare>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "sst/complex.hpp"
#include "sst/laurent.hpp"
#include "sst/linalg.hpp"
#include "sst/weighted.hpp"

namespace sst {

// A multiset of vertices kept sorted.
using Multiset = std::vector<int>;

struct CriticalPair {
  Face a;
  Face b;
  Face signature;
  // Long signature (S, T) with T the interval from the family's minimal vertex to a_i.
  Face s;
  Face t;
};

// Family of equal-size faces; must be shifted.
std::vector<CriticalPair> critical_pairs(const std::vector<Face>& family);
// Family of i-faces of c.
std::vector<CriticalPair> critical_pairs(const SimplicialComplex& c, int i);

using LongSignature = std::pair<Multiset, Multiset>;

// Direct extraction, sorted.
std::vector<LongSignature> long_signatures(const std::vector<Face>& family);
// The deletion/link recurrence, sorted. With use_pure_skeleton the deletion and
// link are taken in the pure i-skeleton, otherwise in c itself.
std::vector<LongSignature> long_signatures_recursive(const SimplicialComplex& c, int i, bool use_pure_skeleton = true);

// z(S,T) = (1 / up X_S) * sum_{j in T} X_{S u j}, with raising cutoff d.
LaurentPoly z_poly(const Multiset& s, const Multiset& t, int d);

struct ZPolynomial {
  Multiset s;
  Multiset t;
  int raise = 0;
  int d = 0;
  LaurentPoly expand() const;
  // Same value with every X[i,j] collapsed to X[j].
  LaurentPoly coarse() const;
  // "z(13,12345)", prefixed with "up^a " when raised.
  std::string to_string() const;
  auto operator<=>(const ZPolynomial&) const = default;
};

// Nonzero eigenvalues and the multiplicity of zero.
struct Spectrum {
  std::vector<ZPolynomial> nonzero;
  std::size_t zeros = 0;
};

// Spectrum of the algebraic up-down Laplacian on C_{i-1}, from the i-faces.
// Computed by the recurrence and by critical pairs; the two must agree.
Spectrum shifted_spectrum(const SimplicialComplex& c, int i);
std::vector<Spectrum> all_spectra(const SimplicialComplex& c);

// Duval-Reiner: conjugate of the top facet-degree sequence, padded with zeros to f_{d-1}. Descending.
std::vector<long> unweighted_spectrum_duval_reiner(const SimplicialComplex& c);

// Facet-degree sequence of the top faces, listed by vertex from the smallest.
std::vector<long> degree_sequence(const std::vector<Face>& family, const std::vector<int>& vertices);
std::vector<long> conjugate_partition(const std::vector<long>& lambda);

// Reconstruct a shifted complex from its z-polynomial spectra.
SimplicialComplex hear_shape(const std::vector<Spectrum>& spectra);
// Pure case: only the top spectrum (of dimension d) is used.
SimplicialComplex hear_shape_top(const Spectrum& top, int d);

LaurentPoly shifted_tau_fine(const SimplicialComplex& c);
LaurentPoly shifted_tau_coarse(const SimplicialComplex& c);

// Edge monomial X[1,min] X[2,max].
LaurentPoly edge_monomial(int a, int b);
// Threshold graph with the given degree sequence (vertex v has degree degs[v-1]).
SimplicialComplex threshold_from_degrees(const std::vector<long>& degs);
LaurentPoly threshold_tau(const SimplicialComplex& g);

// Bipartite graph of a partition: row i joined to column j when j <= lambda_i.
LaurentPoly ferrers_tau(const std::vector<long>& lambda);
// Threshold graph whose cross edges form the Ferrers diagram.
SimplicialComplex ferrers_threshold_graph(const std::vector<long>& lambda);
// Ferrers enumerator obtained from the threshold formula by zeroing the clique edges.
LaurentPoly ferrers_tau_via_threshold(const std::vector<long>& lambda);

// Algebraic finely weighted boundary on C_k, entries in x units.
SymbolicMatrix algebraic_boundary(const SimplicialComplex& c, int k);
// Up-down Laplacian on C_i, as the product of boundary and coboundary.
SymbolicMatrix algebraic_fine_laplacian(const SimplicialComplex& c, int i);
// Diagonally similar X-only form of the up-down Laplacian on C_i evaluated at a point.
// a is an extra raise applied to every entry; d is the dimension used for raising.
RatMatrix balanced_laplacian_at(const SimplicialComplex& c, int i, int d, int a, const Assignment& at);

// Variables X[i,j] appearing in the fine spectra of c (positions 1..dim+2).
std::vector<VarId> fine_variables(const SimplicialComplex& c, int extra_positions = 1);

}  // namespace sst
