#include "sst/corpus.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <sstream>

#include <json.hpp>

#include "sst/errors.hpp"
#include "sst/linalg.hpp"

namespace sst::corpus {

using nlohmann::json;

namespace {

void subsets(int n, int k, int start, Face& cur, std::vector<Face>& out) {
  if (static_cast<int>(cur.size()) == k) {
    out.push_back(cur);
    return;
  }
  for (int v = start; v <= n; ++v) {
    cur.push_back(v);
    subsets(n, k, v + 1, cur, out);
    cur.pop_back();
  }
}

std::vector<Face> all_subsets(int n, int k) {
  std::vector<Face> out;
  Face cur;
  subsets(n, k, 1, cur, out);
  return out;
}

// Lower covers in the order generated by removal and componentwise decrease.
std::vector<Face> lower_covers(const Face& f) {
  std::vector<Face> out;
  if (f.size() > 1)
    for (std::size_t i = 0; i < f.size(); ++i) {
      Face g = f;
      g.erase(g.begin() + static_cast<long>(i));
      out.push_back(std::move(g));
    }
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (f[i] == 1 || (i > 0 && f[i - 1] == f[i] - 1)) continue;
    Face g = f;
    --g[i];
    out.push_back(std::move(g));
  }
  return out;
}

// All order ideals of the given elements, listed in a linear extension.
std::vector<std::vector<Face>> order_ideals(const std::vector<Face>& elems) {
  std::map<Face, std::size_t> pos;
  for (std::size_t i = 0; i < elems.size(); ++i) pos[elems[i]] = i;
  std::vector<std::vector<std::size_t>> covers(elems.size());
  for (std::size_t i = 0; i < elems.size(); ++i)
    for (auto& g : lower_covers(elems[i])) {
      auto it = pos.find(g);
      if (it != pos.end()) covers[i].push_back(it->second);
    }
  std::vector<std::vector<Face>> out;
  std::vector<char> in(elems.size(), 0);
  std::function<void(std::size_t)> rec = [&](std::size_t i) {
    if (i == elems.size()) {
      std::vector<Face> ideal;
      for (std::size_t j = 0; j < elems.size(); ++j)
        if (in[j]) ideal.push_back(elems[j]);
      out.push_back(std::move(ideal));
      return;
    }
    rec(i + 1);
    bool ok = std::all_of(covers[i].begin(), covers[i].end(), [&](std::size_t j) { return in[j] != 0; });
    if (ok) {
      in[i] = 1;
      rec(i + 1);
      in[i] = 0;
    }
  };
  rec(0);
  return out;
}

Face face_from_json(const json& j) {
  Face f;
  if (j.is_string()) return face_from_string(j.get<std::string>());
  if (!j.is_array()) throw InputError("face must be an array of vertices or a string");
  for (const auto& v : j) {
    if (!v.is_number_integer()) throw InputError("vertex must be an integer");
    f.push_back(v.get<int>());
  }
  return f;
}

std::vector<Face> faces_from_json(const json& j, const char* key) {
  if (!j.is_array()) throw InputError(std::string("\"") + key + "\" must be an array");
  std::vector<Face> out;
  for (const auto& f : j) out.push_back(face_from_json(f));
  return out;
}

SimplicialComplex complex_from_json(const json& j) {
  if (!j.is_object()) throw InputError("complex must be a JSON object");
  if (j.contains("facets")) return SimplicialComplex::from_facets(faces_from_json(j["facets"], "facets"));
  if (j.contains("shifted_generators")) {
    int p = 1;
    if (j.contains("min_vertex")) {
      if (!j["min_vertex"].is_number_integer()) throw InputError("\"min_vertex\" must be an integer");
      p = j["min_vertex"].get<int>();
    }
    return shifted_from_generators(faces_from_json(j["shifted_generators"], "shifted_generators"), p);
  }
  throw InputError("complex needs \"facets\" or \"shifted_generators\"");
}

json complex_json(const SimplicialComplex& c) {
  json facets = json::array();
  for (const auto& f : c.facets()) facets.push_back(f);
  return json{{"facets", facets}};
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

SimplicialComplex bipyramid() { return shifted_from_generators({{2, 3, 5}}, 1); }

SimplicialComplex bipyramid_part(int k) {
  switch (k) {
    case 1:
      return bipyramid();
    case 2:
      return shifted_from_generators({{2, 3, 5}}, 2);
    case 3:
      return shifted_from_generators({{3, 5}}, 2);
    case 4:
      return shifted_from_generators({{3, 5}}, 3);
    case 5:
      return shifted_from_generators({{5}}, 3);
    case 6:
      return shifted_from_generators({{5}}, 4);
    case 7:
      return shifted_from_generators({{5}}, 5);
    default:
      throw InputError("bipyramid parts are numbered 1 to 7");
  }
}

SimplicialComplex tetrahedron_boundary() { return simplex_skeleton(4, 2); }

SimplicialComplex rp2() {
  return SimplicialComplex::from_facets({{1, 2, 3}, {1, 3, 4}, {1, 4, 5}, {1, 5, 6}, {1, 2, 6},
                                         {2, 3, 5}, {2, 4, 5}, {2, 4, 6}, {3, 4, 6}, {3, 5, 6}});
}

SimplicialComplex simplex_skeleton(int n, int d) {
  if (n < 1 || d < 0 || d >= n) throw InputError("skeleton dimension must lie in [0, n-1]");
  return SimplicialComplex::from_facets(all_subsets(n, d + 1));
}

SimplicialComplex complete_graph(int n) {
  if (n == 1) return simplex_skeleton(1, 0);
  return simplex_skeleton(n, 1);
}

SimplicialComplex complete_bipartite(int n, int m) {
  if (n < 1 || m < 1) throw InputError("parts of a complete bipartite graph must be nonempty");
  std::vector<Face> edges;
  for (int a = 1; a <= n; ++a)
    for (int b = 1; b <= m; ++b) edges.push_back({a, n + b});
  return SimplicialComplex::from_facets(edges);
}

SimplicialComplex two_edges() { return SimplicialComplex::from_facets({{1, 2}, {3, 4}}); }

std::vector<SimplicialComplex> shifted_complexes(int max_vertices, int max_dim) {
  std::vector<Face> elems;
  for (int k = 1; k <= max_dim + 1; ++k) {
    auto layer = all_subsets(max_vertices, k);
    elems.insert(elems.end(), layer.begin(), layer.end());
  }
  std::vector<SimplicialComplex> out;
  for (auto& ideal : order_ideals(elems)) {
    if (ideal.empty()) continue;
    out.push_back(SimplicialComplex::from_facets(ideal));
  }
  return out;
}

std::vector<SimplicialComplex> pure_shifted_complexes(int n, int d) {
  std::vector<SimplicialComplex> out;
  auto elems = all_subsets(n, d + 1);
  for (auto& ideal : order_ideals(elems)) {
    if (ideal.empty()) continue;
    out.push_back(SimplicialComplex::from_facets(ideal));
  }
  return out;
}

std::vector<SimplicialComplex> random_apc_complexes(std::size_t count, std::uint64_t seed, int max_vertices) {
  if (max_vertices < 3) throw InputError("random 2-complexes need at least three vertices");
  std::mt19937_64 rng(seed);
  std::vector<SimplicialComplex> out;
  std::size_t attempts = 0;
  while (out.size() < count) {
    if (++attempts > 1000 * (count + 1)) throw ResourceError("could not sample enough APC complexes");
    const int n = std::uniform_int_distribution<int>(std::min(4, max_vertices), max_vertices)(rng);
    const double q = std::uniform_real_distribution<double>(0.3, 0.8)(rng);
    std::vector<Face> tris;
    for (auto& t : all_subsets(n, 3))
      if (std::bernoulli_distribution(q)(rng)) tris.push_back(t);
    if (tris.empty()) continue;
    SimplicialComplex c = SimplicialComplex::from_facets(tris);
    if (!is_apc(c)) continue;
    out.push_back(std::move(c));
  }
  return out;
}

SimplicialComplex parse_complex_json(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw InputError(std::string("malformed JSON: ") + e.what());
  }
  return complex_from_json(j);
}

SimplicialComplex load_complex(const std::string& path) { return parse_complex_json(read_file(path)); }

std::string complex_to_json(const SimplicialComplex& c) { return complex_json(c).dump(); }

std::vector<SimplicialComplex> load_corpus(const std::string& path) {
  json j;
  try {
    j = json::parse(read_file(path));
  } catch (const json::parse_error& e) {
    throw InputError("malformed corpus '" + path + "': " + e.what());
  }
  if (!j.contains("complexes") || !j["complexes"].is_array()) throw InputError("corpus needs a \"complexes\" array");
  std::vector<SimplicialComplex> out;
  for (const auto& c : j["complexes"]) out.push_back(complex_from_json(c));
  return out;
}

void save_corpus(const std::string& path, const std::vector<SimplicialComplex>& cs) {
  json arr = json::array();
  for (const auto& c : cs) arr.push_back(complex_json(c));
  std::ofstream out(path);
  if (!out) throw InputError("cannot write '" + path + "'");
  out << json{{"complexes", arr}}.dump(1) << "\n";
}

std::vector<Face> parse_generators(const std::string& s) {
  std::vector<Face> out;
  std::string cur;
  auto flush = [&] {
    if (!cur.empty()) out.push_back(face_from_string(cur));
    cur.clear();
  };
  for (char ch : s) {
    if (ch == ';' || ch == ' ' || ch == '\t') {
      flush();
    } else {
      cur.push_back(ch);
    }
  }
  flush();
  if (out.empty()) throw InputError("no generators given");
  return out;
}

std::vector<long> parse_int_list(const std::string& s) {
  std::vector<long> out;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    std::size_t used = 0;
    long v = 0;
    try {
      v = std::stol(tok, &used);
    } catch (const std::exception&) {
      throw InputError("bad integer '" + tok + "'");
    }
    if (used != tok.size() || v < 0) throw InputError("bad integer '" + tok + "'");
    out.push_back(v);
  }
  if (out.empty()) throw InputError("empty integer list");
  return out;
}

}  // namespace sst::corpus
