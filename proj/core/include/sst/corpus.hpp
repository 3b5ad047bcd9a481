#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "sst/complex.hpp"

namespace sst::corpus {

// Equatorial bipyramid, the shifted complex generated by 235 with initial vertex 1.
SimplicialComplex bipyramid();
// The subcomplexes B_1..B_7 met when peeling the bipyramid by deletion and link.
SimplicialComplex bipyramid_part(int k);

SimplicialComplex tetrahedron_boundary();
// Six-vertex triangulation of the real projective plane.
SimplicialComplex rp2();
// d-skeleton of the simplex on [n].
SimplicialComplex simplex_skeleton(int n, int d);
SimplicialComplex complete_graph(int n);
// Parts [1,n] and [n+1,n+m].
SimplicialComplex complete_bipartite(int n, int m);
// Two disjoint edges; not APC.
SimplicialComplex two_edges();

// Every shifted complex with vertex set [1,n], n <= max_vertices, and dimension at most max_dim.
std::vector<SimplicialComplex> shifted_complexes(int max_vertices = 6, int max_dim = 2);
// Shifted complexes generated by their d-faces, vertex set [1,m] for some m <= n.
std::vector<SimplicialComplex> pure_shifted_complexes(int n, int d);

// Seeded random APC 2-complexes on at most max_vertices vertices.
std::vector<SimplicialComplex> random_apc_complexes(std::size_t count, std::uint64_t seed, int max_vertices = 6);

// {"facets": [[1,2,3], ...]} or {"shifted_generators": ["235"] or [[2,3,5]], "min_vertex": 1}.
SimplicialComplex parse_complex_json(const std::string& text);
SimplicialComplex load_complex(const std::string& path);
std::string complex_to_json(const SimplicialComplex& c);

// {"complexes": [{"facets": ...}, ...]}
std::vector<SimplicialComplex> load_corpus(const std::string& path);
void save_corpus(const std::string& path, const std::vector<SimplicialComplex>& cs);

// Generators separated by ';' or whitespace, each "2,3,5" or "235".
std::vector<Face> parse_generators(const std::string& s);
// Comma-separated nonnegative integers.
std::vector<long> parse_int_list(const std::string& s);

}  // namespace sst::corpus
