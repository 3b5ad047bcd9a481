// Writes the bundled corpus into a data directory.
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>

#include "sst/corpus.hpp"

namespace fs = std::filesystem;
using namespace sst;

namespace {

void write(const fs::path& dir, const std::string& name, const SimplicialComplex& c) {
  std::ofstream(dir / (name + ".json")) << corpus::complex_to_json(c) << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  if (argc != 2) {
    std::cerr << "usage: sst_make_fixtures <data-dir>\n";
    return 1;
  }
  const fs::path dir = argv[1];
  fs::create_directories(dir);
  write(dir, "bipyramid", corpus::bipyramid());
  for (int k = 2; k <= 7; ++k) write(dir, "B" + std::to_string(k), corpus::bipyramid_part(k));
  write(dir, "tetrahedron_boundary", corpus::tetrahedron_boundary());
  write(dir, "rp2", corpus::rp2());
  write(dir, "two_edges", corpus::two_edges());
  for (int n = 3; n <= 7; ++n) write(dir, "K" + std::to_string(n), corpus::complete_graph(n));
  for (int n = 1; n <= 4; ++n)
    for (int m = n; m <= 4; ++m) write(dir, "K" + std::to_string(n) + "_" + std::to_string(m), corpus::complete_bipartite(n, m));
  for (int n = 2; n <= 7; ++n)
    for (int d = 1; d <= std::min(3, n - 1); ++d)
      write(dir, "simplex" + std::to_string(n) + "_skel" + std::to_string(d), corpus::simplex_skeleton(n, d));
  std::ofstream(dir / "bipyramid_generators.json") << R"({"shifted_generators": ["235"], "min_vertex": 1})" << "\n";
  corpus::save_corpus((dir / "shifted_corpus.json").string(), corpus::shifted_complexes(6, 2));
  return 0;
}
