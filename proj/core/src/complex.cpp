#include "sst/complex.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <sstream>

#include "sst/errors.hpp"

namespace sst {

std::string face_to_string(const Face& f) {
  if (f.empty()) return "{}";
  bool digits = std::all_of(f.begin(), f.end(), [](int v) { return v >= 0 && v <= 9; });
  std::string s;
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (!digits && i) s += ',';
    s += std::to_string(f[i]);
  }
  return s;
}

Face face_from_string(const std::string& s) {
  Face f;
  if (s == "{}" || s.empty()) return f;
  if (s.find(',') != std::string::npos) {
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
      try {
        f.push_back(std::stoi(tok));
      } catch (const std::exception&) {
        throw InputError("bad vertex '" + tok + "' in face '" + s + "'");
      }
    }
  } else {
    for (char ch : s) {
      if (ch < '0' || ch > '9') throw InputError("bad face '" + s + "'");
      f.push_back(ch - '0');
    }
  }
  std::sort(f.begin(), f.end());
  if (std::adjacent_find(f.begin(), f.end()) != f.end()) throw InputError("repeated vertex in face '" + s + "'");
  return f;
}

SimplicialComplex::SimplicialComplex() : by_dim_{{Face{}}} {}

SimplicialComplex::SimplicialComplex(std::vector<std::vector<Face>> by_dim) : by_dim_(std::move(by_dim)) {
  while (by_dim_.size() > 1 && by_dim_.back().empty()) by_dim_.pop_back();
  if (by_dim_.empty()) by_dim_.push_back({Face{}});
  for (auto& layer : by_dim_) std::sort(layer.begin(), layer.end());
}

SimplicialComplex SimplicialComplex::from_facets(const std::vector<Face>& facets) {
  std::vector<std::set<Face>> layers(1);
  layers[0].insert(Face{});
  for (Face f : facets) {
    std::sort(f.begin(), f.end());
    if (std::adjacent_find(f.begin(), f.end()) != f.end())
      throw InputError("facet " + face_to_string(f) + " has a repeated vertex");
    for (int v : f)
      if (v <= 0) throw InputError("vertices must be positive integers");
    if (f.size() > 24) throw InputError("facet too large");
    if (layers.size() < f.size() + 1) layers.resize(f.size() + 1);
    if (layers[f.size()].count(f)) continue;
    const std::size_t n = f.size();
    for (unsigned long mask = 1; mask < (1ul << n); ++mask) {
      Face sub;
      for (std::size_t b = 0; b < n; ++b)
        if (mask >> b & 1) sub.push_back(f[b]);
      layers[sub.size()].insert(std::move(sub));
    }
  }
  std::vector<std::vector<Face>> by_dim;
  for (auto& s : layers) by_dim.emplace_back(s.begin(), s.end());
  return SimplicialComplex(std::move(by_dim));
}

const std::vector<Face>& SimplicialComplex::faces(int k) const {
  static const std::vector<Face> none;
  if (k < -1 || k + 1 >= static_cast<int>(by_dim_.size())) return none;
  return by_dim_[k + 1];
}

std::vector<std::size_t> SimplicialComplex::f_vector() const {
  std::vector<std::size_t> out;
  for (auto& l : by_dim_) out.push_back(l.size());
  return out;
}

std::size_t SimplicialComplex::num_faces() const {
  std::size_t n = 0;
  for (auto& l : by_dim_) n += l.size();
  return n;
}

std::size_t SimplicialComplex::index_of(const Face& f) const {
  const auto& layer = faces(face_dim(f));
  auto it = std::lower_bound(layer.begin(), layer.end(), f);
  if (it == layer.end() || *it != f) return npos;
  return static_cast<std::size_t>(it - layer.begin());
}

bool SimplicialComplex::contains(const Face& f) const { return index_of(f) != npos; }

std::vector<int> SimplicialComplex::vertices() const {
  std::vector<int> v;
  for (auto& f : faces(0)) v.push_back(f[0]);
  return v;
}

bool SimplicialComplex::has_vertex(int v) const { return contains(Face{v}); }

std::vector<Face> SimplicialComplex::facets() const {
  std::vector<Face> out;
  const auto vs = vertices();
  for (int k = dim(); k >= -1; --k) {
    for (const auto& f : faces(k)) {
      bool maximal = true;
      for (int u : vs) {
        if (std::binary_search(f.begin(), f.end(), u)) continue;
        Face g = f;
        g.insert(std::lower_bound(g.begin(), g.end(), u), u);
        if (contains(g)) {
          maximal = false;
          break;
        }
      }
      if (maximal) out.push_back(f);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool SimplicialComplex::is_pure() const {
  for (const auto& f : facets())
    if (face_dim(f) != dim()) return false;
  return true;
}

std::string SimplicialComplex::to_string() const {
  std::string s = "<";
  auto fs = facets();
  for (std::size_t i = 0; i < fs.size(); ++i) {
    if (i) s += ' ';
    s += face_to_string(fs[i]);
  }
  return s + ">";
}

SimplicialComplex skeleton(const SimplicialComplex& c, int i) {
  if (i < -1 || i > c.dim()) throw InputError("skeleton dimension out of range");
  std::vector<Face> top;
  for (int k = -1; k <= i; ++k)
    for (const auto& f : c.faces(k)) top.push_back(f);
  return SimplicialComplex::from_facets(top);
}

std::optional<SimplicialComplex> pure_skeleton(const SimplicialComplex& c, int i) {
  if (c.faces(i).empty()) return std::nullopt;
  return SimplicialComplex::from_facets(c.faces(i));
}

SimplicialComplex link(const SimplicialComplex& c, int v) {
  if (!c.has_vertex(v)) throw InputError("vertex " + std::to_string(v) + " is not in the complex");
  std::vector<Face> out;
  for (int k = 0; k <= c.dim(); ++k) {
    for (const auto& f : c.faces(k)) {
      if (!std::binary_search(f.begin(), f.end(), v)) continue;
      Face g;
      for (int u : f)
        if (u != v) g.push_back(u);
      out.push_back(std::move(g));
    }
  }
  return SimplicialComplex::from_facets(out);
}

SimplicialComplex deletion(const SimplicialComplex& c, int v) {
  if (!c.has_vertex(v)) throw InputError("vertex " + std::to_string(v) + " is not in the complex");
  std::vector<Face> out;
  for (const auto& f : c.facets()) {
    Face g;
    for (int u : f)
      if (u != v) g.push_back(u);
    out.push_back(std::move(g));
  }
  return SimplicialComplex::from_facets(out);
}

SimplicialComplex cone(int p, const SimplicialComplex& c) {
  if (c.has_vertex(p)) throw InputError("cone point " + std::to_string(p) + " is already a vertex");
  if (p <= 0) throw InputError("vertices must be positive integers");
  std::vector<Face> out;
  for (Face f : c.facets()) {
    f.insert(std::lower_bound(f.begin(), f.end(), p), p);
    out.push_back(std::move(f));
  }
  return SimplicialComplex::from_facets(out);
}

SimplicialComplex with_full_skeleton(const SimplicialComplex& c, int k, const std::vector<Face>& top) {
  std::vector<Face> gens(top);
  for (int j = -1; j < k; ++j)
    for (const auto& f : c.faces(j)) gens.push_back(f);
  for (const auto& f : top)
    if (!c.contains(f)) throw InputError("face " + face_to_string(f) + " is not in the complex");
  return SimplicialComplex::from_facets(gens);
}

int epsilon(int v, const Face& f) {
  auto it = std::lower_bound(f.begin(), f.end(), v);
  if (it == f.end() || *it != v) return 0;
  return ((it - f.begin()) % 2 == 0) ? 1 : -1;
}

BoundaryMatrix boundary_matrix(const SimplicialComplex& c, int k) {
  BoundaryMatrix b;
  b.rows = c.faces(k - 1);
  b.cols = c.faces(k);
  b.m = IntMatrix(b.rows.size(), b.cols.size());
  for (std::size_t j = 0; j < b.cols.size(); ++j) {
    const Face& f = b.cols[j];
    for (std::size_t pos = 0; pos < f.size(); ++pos) {
      Face g = f;
      g.erase(g.begin() + static_cast<long>(pos));
      std::size_t i = c.index_of(g);
      check(i != SimplicialComplex::npos, "boundary face missing");
      b.m(i, j) = (pos % 2 == 0) ? 1 : -1;
    }
  }
  return b;
}

bool componentwise_leq(const Face& a, const Face& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

bool is_shifted_family(const std::vector<Face>& family) {
  if (family.empty()) return true;
  int p = family.front().empty() ? 0 : family.front()[0];
  for (const auto& f : family)
    if (!f.empty()) p = std::min(p, f[0]);
  std::set<Face> fam(family.begin(), family.end());
  for (const auto& f : family) {
    for (std::size_t i = 0; i < f.size(); ++i) {
      int lo = (i == 0) ? p : f[i - 1] + 1;
      if (f[i] - 1 >= lo) {
        Face g = f;
        g[i] -= 1;
        if (!fam.count(g)) return false;
      }
    }
  }
  return true;
}

bool is_shifted(const SimplicialComplex& c) {
  auto vs = c.vertices();
  if (vs.empty()) return true;
  int p = vs.front();
  for (int k = 0; k <= c.dim(); ++k) {
    for (const auto& f : c.faces(k)) {
      for (std::size_t i = 0; i < f.size(); ++i) {
        int lo = (i == 0) ? p : f[i - 1] + 1;
        if (f[i] - 1 >= lo) {
          Face g = f;
          g[i] -= 1;
          if (!c.contains(g)) return false;
        }
      }
    }
  }
  return true;
}

std::vector<Face> componentwise_ideal(const Face& gen, int p) {
  std::vector<Face> out;
  Face cur;
  std::function<void(std::size_t, int)> rec = [&](std::size_t i, int lo) {
    if (i == gen.size()) {
      out.push_back(cur);
      return;
    }
    for (int v = lo; v <= gen[i]; ++v) {
      cur.push_back(v);
      rec(i + 1, v + 1);
      cur.pop_back();
    }
  };
  rec(0, p);
  return out;
}

SimplicialComplex shifted_from_generators(const std::vector<Face>& gens, int p) {
  if (p <= 0) throw InputError("minimal vertex must be positive");
  std::vector<Face> all;
  for (Face g : gens) {
    std::sort(g.begin(), g.end());
    if (std::adjacent_find(g.begin(), g.end()) != g.end())
      throw InputError("generator " + face_to_string(g) + " has a repeated vertex");
    for (int v : g)
      if (v < p) throw InputError("generator vertex below the minimal vertex");
    auto ideal = componentwise_ideal(g, p);
    all.insert(all.end(), ideal.begin(), ideal.end());
  }
  return SimplicialComplex::from_facets(all);
}

}  // namespace sst
