#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "sst/int_matrix.hpp"

namespace sst {

// Strictly increasing vertex list. The empty face has dimension -1.
using Face = std::vector<int>;

inline int face_dim(const Face& f) { return static_cast<int>(f.size()) - 1; }

// Digit string when every vertex is at most 9, otherwise comma separated; "{}" for the empty face.
std::string face_to_string(const Face& f);
Face face_from_string(const std::string& s);

// Immutable downward-closed set of faces. Faces of each dimension are kept in
// lexicographic order, which fixes the row and column order of every matrix.
class SimplicialComplex {
 public:
  // The complex whose only face is the empty face.
  SimplicialComplex();

  static SimplicialComplex from_facets(const std::vector<Face>& facets);

  int dim() const { return static_cast<int>(by_dim_.size()) - 2; }
  // Faces of dimension k; empty for k outside [-1, dim].
  const std::vector<Face>& faces(int k) const;
  std::size_t f(int k) const { return faces(k).size(); }
  // f_{-1}, f_0, ..., f_dim.
  std::vector<std::size_t> f_vector() const;
  std::size_t num_faces() const;

  bool contains(const Face& f) const;
  // Position of f among faces(dim f), or npos.
  std::size_t index_of(const Face& f) const;
  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

  std::vector<int> vertices() const;
  std::vector<Face> facets() const;
  bool is_pure() const;
  bool has_vertex(int v) const;

  bool operator==(const SimplicialComplex& o) const { return by_dim_ == o.by_dim_; }

  std::string to_string() const;

 private:
  explicit SimplicialComplex(std::vector<std::vector<Face>> by_dim);
  // by_dim_[k+1] holds the k-faces.
  std::vector<std::vector<Face>> by_dim_;
};

SimplicialComplex skeleton(const SimplicialComplex& c, int i);
// Subcomplex generated by the i-faces; nullopt when there are none.
std::optional<SimplicialComplex> pure_skeleton(const SimplicialComplex& c, int i);
SimplicialComplex link(const SimplicialComplex& c, int v);
SimplicialComplex deletion(const SimplicialComplex& c, int v);
SimplicialComplex cone(int p, const SimplicialComplex& c);
// Complex generated by the given k-faces together with the full (k-1)-skeleton of c.
SimplicialComplex with_full_skeleton(const SimplicialComplex& c, int k, const std::vector<Face>& top);

struct BoundaryMatrix {
  std::vector<Face> rows;
  std::vector<Face> cols;
  IntMatrix m;
};

// Signed boundary from k-faces to (k-1)-faces. k = -1 gives the 0 x f_{-1} map.
BoundaryMatrix boundary_matrix(const SimplicialComplex& c, int k);

// Sign of vertex v in face f: (-1)^(j+1) when v is the j-th smallest vertex.
int epsilon(int v, const Face& f);

bool is_shifted(const SimplicialComplex& c);
// Shiftedness of a single family of equal-size faces.
bool is_shifted_family(const std::vector<Face>& family);
// Order ideal below the generators in componentwise order, vertices at least p.
SimplicialComplex shifted_from_generators(const std::vector<Face>& gens, int p);
std::vector<Face> componentwise_ideal(const Face& gen, int p);
// a <= b componentwise (same size).
bool componentwise_leq(const Face& a, const Face& b);

}  // namespace sst
