#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace sst::cli {

enum ExitCode : int {
  kOk = 0,
  kParseError = 1,
  kDomainError = 2,
  kResourceError = 3,
  // An internal consistency check failed, or verify found a failing invariant.
  kCheckFailed = 4,
};

struct RunConfig {
  std::string subcommand;
  std::string action;
  std::string complex_path;
  std::string generators;
  int min_vertex = 1;
  int dim = -2;
  std::string scheme = "fine";
  std::string method = "laplacian";
  std::uint64_t cap = 2000000;
  std::size_t symbolic_cap = 12;
  std::uint64_t seed = 20080814;
  int samples = 20;
  bool json = false;
  bool coarse = false;
  bool trees = false;
  std::string degrees;
  std::string partition;
  std::string corpus_path;
};

// args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace sst::cli
