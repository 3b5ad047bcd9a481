#include <doctest.h>

#include <cstdlib>
#include <fstream>
#include <sstream>

#include "sst_cli/cli.hpp"

namespace {

struct Case {
  const char* name;
  std::vector<std::string> args;
  int exit_code;
};

std::string data(const std::string& f) { return std::string(SST_DATA_DIR) + "/" + f; }

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// Set SST_UPDATE_GOLDEN=1 to rewrite the expected outputs.
void check_golden(const Case& c) {
  std::ostringstream out, err;
  int code = sst::cli::run(c.args, out, err);
  CHECK_MESSAGE(code == c.exit_code, c.name << ": " << err.str());
  const std::string got = code == 0 ? out.str() : err.str();
  const std::string path = std::string(SST_GOLDEN_DIR) + "/" + c.name + ".txt";
  if (std::getenv("SST_UPDATE_GOLDEN")) std::ofstream(path) << got;
  CHECK_MESSAGE(got == slurp(path), c.name);
}

}  // namespace

TEST_CASE("golden outputs") {
  const std::vector<Case> cases = {
      {"count_bipyramid", {"count", "--complex", data("bipyramid.json"), "--dim", "2"}, 0},
      {"count_bipyramid_oracle", {"count", "--complex", data("bipyramid.json"), "--dim", "1", "--method", "oracle"}, 0},
      {"count_bipyramid_altproduct", {"count", "--complex", data("bipyramid.json"), "--method", "altproduct"}, 0},
      {"count_rp2_trees", {"count", "--complex", data("rp2.json"), "--dim", "2", "--method", "oracle", "--trees"}, 0},
      {"homology_rp2", {"homology", "--complex", data("rp2.json")}, 0},
      {"homology_rp2_dim1", {"homology", "--complex", data("rp2.json"), "--dim", "1"}, 0},
      {"weighted_bipyramid_coarse", {"weighted", "--complex", data("bipyramid.json"), "--scheme", "coarse"}, 0},
      {"weighted_k3_facet", {"weighted", "--complex", data("K3.json"), "--scheme", "facet"}, 0},
      {"shifted_pairs_235", {"shifted", "critical-pairs", "--generators", "2,3,5"}, 0},
      {"shifted_pairs_B4", {"shifted", "critical-pairs", "--generators", "35", "--min-vertex", "3"}, 0},
      {"shifted_spectrum_235", {"shifted", "spectrum", "--generators", "2,3,5"}, 0},
      {"shifted_spectrum_235_coarse", {"shifted", "spectrum", "--generators", "2,3,5", "--dim", "2", "--coarse"}, 0},
      {"shifted_hear_235", {"shifted", "hear", "--generators", "2,3,5"}, 0},
      {"shifted_tau_235", {"shifted", "tau", "--generators", "2,3,5"}, 0},
      {"shifted_tau_235_coarse", {"shifted", "tau", "--generators", "2,3,5", "--coarse"}, 0},
      {"threshold_k3", {"threshold", "--degrees", "2,2,2"}, 0},
      {"ferrers_22", {"ferrers", "--partition", "2,2"}, 0},
      {"error_not_apc", {"count", "--complex", data("two_edges.json"), "--dim", "1"}, 2},
      {"error_not_shifted", {"shifted", "tau", "--complex", data("rp2.json")}, 2},
      {"error_bad_method", {"count", "--complex", data("bipyramid.json"), "--method", "bogus"}, 1},
      {"error_bad_partition", {"ferrers", "--partition", "1,2"}, 1},
      {"error_cap", {"count", "--complex", data("simplex7_skel2.json"), "--method", "oracle", "--cap", "100"}, 3},
  };
  for (const auto& c : cases) check_golden(c);
}

TEST_CASE("missing input is a parse error") {
  std::ostringstream out, err;
  CHECK(sst::cli::run({"count", "--complex", data("does_not_exist.json")}, out, err) == 1);
  CHECK(sst::cli::run({"nonsense"}, out, err) == 1);
  CHECK(sst::cli::run({"shifted", "tau"}, out, err) == 1);
}
