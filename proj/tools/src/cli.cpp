#include "sst_cli/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <filesystem>
#include <ostream>

#include "sst/checks.hpp"
#include "sst/corpus.hpp"
#include "sst/errors.hpp"
#include "sst/linalg.hpp"
#include "sst/shifted.hpp"
#include "sst/spanning_trees.hpp"
#include "sst/weighted.hpp"

#ifndef SST_DATA_DIR
#define SST_DATA_DIR ""
#endif

namespace sst::cli {

using nlohmann::json;

namespace {

json integer_json(const mpz_class& z) {
  if (z.fits_slong_p()) return json(z.get_si());
  return json(z.get_str());
}

json face_json(const Face& f) { return json(face_to_string(f)); }

void emit_poly(const LaurentPoly& p, const RunConfig& cfg, std::ostream& out) {
  if (cfg.json) {
    out << json_terms(p) << "\n";
  } else {
    out << canonical_string(p) << "\n";
  }
}

SimplicialComplex input_complex(const RunConfig& cfg) {
  if (!cfg.complex_path.empty() && !cfg.generators.empty())
    throw InputError("give either --complex or --generators, not both");
  if (!cfg.complex_path.empty()) return corpus::load_complex(cfg.complex_path);
  if (!cfg.generators.empty()) return shifted_from_generators(corpus::parse_generators(cfg.generators), cfg.min_vertex);
  throw InputError("an input complex is required (--complex or --generators)");
}

int cmd_homology(const RunConfig& cfg, std::ostream& out) {
  SimplicialComplex c = input_complex(cfg);
  auto one = [](const HomologySummary& h) {
    json j{{"betti", h.betti}};
    j["torsion_order"] = integer_json(h.torsion);
    return j;
  };
  if (cfg.dim != -2) {
    out << one(homology(c, cfg.dim)).dump() << "\n";
    return kOk;
  }
  json all = json::array();
  for (int i = -1; i <= c.dim(); ++i) {
    json j = one(homology(c, i));
    j["dim"] = i;
    all.push_back(j);
  }
  out << json{{"homology", all}}.dump() << "\n";
  return kOk;
}

int cmd_count(const RunConfig& cfg, std::ostream& out) {
  SimplicialComplex c = input_complex(cfg);
  const int k = cfg.dim == -2 ? c.dim() : cfg.dim;
  json j;
  if (cfg.method == "oracle") {
    TreeCount tc = enumerate_ssts(c, k, cfg.cap, cfg.trees);
    j["tau"] = integer_json(tc.tau);
    if (cfg.trees) {
      json trees = json::array();
      for (auto& [facets, tor] : tc.trees) {
        json fs = json::array();
        for (auto& f : facets) fs.push_back(face_json(f));
        trees.push_back(json{{"facets", fs}, {"torsion_order", integer_json(tor)}});
      }
      j["trees"] = trees;
    }
  } else if (cfg.method == "laplacian") {
    j["tau"] = integer_json(tau_via_reduced_laplacian(c, k));
  } else if (cfg.method == "altproduct") {
    j["tau"] = integer_json(tau_via_alternating_product(c, k));
  } else {
    throw InputError("unknown method '" + cfg.method + "' (expected oracle, laplacian or altproduct)");
  }
  if (cfg.trees && cfg.method != "oracle") throw InputError("--trees needs --method oracle");
  out << j.dump() << "\n";
  return kOk;
}

int cmd_weighted(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  SimplicialComplex c = input_complex(cfg);
  const Scheme s = parse_scheme(cfg.scheme);
  try {
    emit_poly(weighted_tau(c, s, std::nullopt, cfg.symbolic_cap), cfg, out);
  } catch (const ResourceError& e) {
    if (s == Scheme::Facet || !is_shifted(c)) throw;
    err << "note: " << e.what() << "; using the shifted closed form checked at " << cfg.samples << " random points\n";
    emit_poly(checks::verified_shifted_tau(c, s, cfg.symbolic_cap, cfg.samples, cfg.seed), cfg, out);
  }
  return kOk;
}

std::string z_text(const ZPolynomial& z, bool coarse) {
  if (!coarse) return z.to_string();
  return canonical_string(z.coarse());
}

int shifted_spectrum_cmd(const RunConfig& cfg, const SimplicialComplex& c, std::ostream& out) {
  std::vector<int> levels;
  if (cfg.dim != -2) {
    levels.push_back(cfg.dim);
  } else {
    for (int i = 0; i <= c.dim(); ++i) levels.push_back(i);
  }
  json all = json::array();
  for (int i : levels) {
    Spectrum sp = shifted_spectrum(c, i);
    if (cfg.json) {
      json nz = json::array();
      for (const auto& z : sp.nonzero) {
        json e{{"S", z.s}, {"T", z.t}, {"raise", z.raise}, {"label", z.to_string()}};
        e["value"] = json::parse(json_terms(cfg.coarse ? z.coarse() : z.expand()));
        nz.push_back(e);
      }
      all.push_back(json{{"chain_dim", i - 1}, {"face_dim", i}, {"nonzero", nz}, {"zeros", sp.zeros}});
    } else {
      out << "C_" << i - 1 << ":";
      const char* sep = cfg.coarse ? "; " : " ";
      for (std::size_t t = 0; t < sp.nonzero.size(); ++t) out << (t ? sep : " ") << z_text(sp.nonzero[t], cfg.coarse);
      out << " | zeros " << sp.zeros << "\n";
    }
  }
  if (cfg.json) out << json{{"spectra", all}}.dump() << "\n";
  return kOk;
}

int shifted_pairs_cmd(const RunConfig& cfg, const SimplicialComplex& c, std::ostream& out) {
  const int i = cfg.dim == -2 ? c.dim() : cfg.dim;
  const int d = c.dim();
  json all = json::array();
  for (const auto& cp : critical_pairs(c, i)) {
    ZPolynomial z{cp.s, cp.t, d - i, d};
    if (cfg.json) {
      all.push_back(json{{"A", face_to_string(cp.a)},
                         {"B", face_to_string(cp.b)},
                         {"signature", face_to_string(cp.signature)},
                         {"eigenvalue", z.to_string()}});
    } else {
      out << face_to_string(cp.a) << " " << face_to_string(cp.b) << " " << face_to_string(cp.signature) << " "
          << z.to_string() << "\n";
    }
  }
  if (cfg.json) out << json{{"critical_pairs", all}}.dump() << "\n";
  return kOk;
}

int cmd_shifted(const RunConfig& cfg, std::ostream& out) {
  SimplicialComplex c = input_complex(cfg);
  if (!is_shifted(c)) throw DomainError("complex is not shifted");
  if (cfg.action == "spectrum") return shifted_spectrum_cmd(cfg, c, out);
  if (cfg.action == "critical-pairs") return shifted_pairs_cmd(cfg, c, out);
  if (cfg.action == "tau") {
    emit_poly(checks::verified_shifted_tau(c, cfg.coarse ? Scheme::Coarse : Scheme::Fine, cfg.symbolic_cap, cfg.samples,
                                           cfg.seed),
              cfg, out);
    return kOk;
  }
  if (cfg.action == "hear") {
    SimplicialComplex heard = hear_shape(all_spectra(c));
    if (cfg.json) {
      json j = json::parse(corpus::complex_to_json(heard));
      j["matches_input"] = heard == c;
      out << j.dump() << "\n";
    } else {
      out << heard.to_string() << "\n";
    }
    return heard == c ? kOk : kCheckFailed;
  }
  throw InputError("unknown shifted action '" + cfg.action + "'");
}

int cmd_threshold(const RunConfig& cfg, std::ostream& out) {
  SimplicialComplex g = threshold_from_degrees(corpus::parse_int_list(cfg.degrees));
  emit_poly(threshold_tau(g), cfg, out);
  return kOk;
}

int cmd_ferrers(const RunConfig& cfg, std::ostream& out) {
  auto lambda = corpus::parse_int_list(cfg.partition);
  LaurentPoly t = ferrers_tau(lambda);
  check(t == ferrers_tau_via_threshold(lambda), "Ferrers formula disagrees with the threshold construction");
  emit_poly(t, cfg, out);
  return kOk;
}

std::vector<SimplicialComplex> verify_corpus(const RunConfig& cfg) {
  std::string path = cfg.corpus_path;
  if (path.empty()) {
    std::string fixture = std::string(SST_DATA_DIR) + "/shifted_corpus.json";
    if (!std::string(SST_DATA_DIR).empty() && std::filesystem::exists(fixture)) path = fixture;
  }
  if (!path.empty()) return corpus::load_corpus(path);
  return corpus::shifted_complexes(6, 2);
}

int cmd_verify(const RunConfig& cfg, std::ostream& out) {
  checks::SuiteOptions opt;
  opt.samples = cfg.samples;
  opt.seed = cfg.seed;
  auto corpus = verify_corpus(cfg);
  bool all_ok = true;
  for (const auto& line : checks::run_invariant_suite(corpus, opt)) {
    out << (line.ok ? "PASS " : "FAIL ") << line.name << " (" << line.cases << " complexes)";
    if (!line.ok) out << ": " << line.detail;
    out << "\n";
    all_ok = all_ok && line.ok;
  }
  return all_ok ? kOk : kCheckFailed;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  CLI::App app{"Simplicial spanning trees: counts, weighted enumerators and shifted spectra", "sst"};
  app.require_subcommand(1);

  auto add_input = [&cfg](CLI::App* sub) {
    sub->add_option("--complex", cfg.complex_path, "JSON file with facets or shifted generators");
    sub->add_option("--generators", cfg.generators, "shifted generators, e.g. 2,3,5 or \"235;146\"");
    sub->add_option("--min-vertex", cfg.min_vertex, "initial vertex for --generators");
  };

  auto* homology_cmd = app.add_subcommand("homology", "reduced homology: Betti number and torsion order");
  add_input(homology_cmd);
  homology_cmd->add_option("--dim", cfg.dim, "dimension (default: all)");

  auto* count_cmd = app.add_subcommand("count", "torsion-weighted spanning tree count");
  add_input(count_cmd);
  count_cmd->add_option("--dim", cfg.dim, "tree dimension (default: top)");
  count_cmd->add_option("--method", cfg.method, "oracle, laplacian or altproduct")->check(
      CLI::IsMember({"oracle", "laplacian", "altproduct"}));
  count_cmd->add_option("--cap", cfg.cap, "subset cap for the oracle");
  count_cmd->add_flag("--trees", cfg.trees, "list the trees (oracle only)");

  auto* weighted_cmd = app.add_subcommand("weighted", "weighted spanning tree enumerator of the top dimension");
  add_input(weighted_cmd);
  weighted_cmd->add_option("--scheme", cfg.scheme, "fine, coarse or facet")->check(
      CLI::IsMember({"fine", "coarse", "facet"}));
  weighted_cmd->add_option("--symbolic-cap", cfg.symbolic_cap, "largest reduced Laplacian expanded symbolically");
  weighted_cmd->add_option("--samples", cfg.samples, "random points used above the symbolic cap");
  weighted_cmd->add_option("--seed", cfg.seed, "random seed");
  weighted_cmd->add_flag("--json", cfg.json, "JSON term list");

  auto* shifted_cmd = app.add_subcommand("shifted", "shifted complexes");
  shifted_cmd->add_option("action", cfg.action, "spectrum, tau, critical-pairs or hear")
      ->required()
      ->check(CLI::IsMember({"spectrum", "tau", "critical-pairs", "hear"}));
  add_input(shifted_cmd);
  shifted_cmd->add_option("--dim", cfg.dim, "face dimension (default: all for spectrum, top for critical-pairs)");
  shifted_cmd->add_flag("--coarse", cfg.coarse, "coarse weighting");
  shifted_cmd->add_flag("--json", cfg.json, "JSON output");
  shifted_cmd->add_option("--symbolic-cap", cfg.symbolic_cap, "largest reduced Laplacian expanded symbolically");
  shifted_cmd->add_option("--samples", cfg.samples, "random points used above the symbolic cap");
  shifted_cmd->add_option("--seed", cfg.seed, "random seed");

  auto* threshold_cmd = app.add_subcommand("threshold", "fine tree enumerator of a threshold graph");
  threshold_cmd->add_option("--degrees", cfg.degrees, "degree sequence d1,...,dn of vertices 1..n")->required();
  threshold_cmd->add_flag("--json", cfg.json, "JSON term list");

  auto* ferrers_cmd = app.add_subcommand("ferrers", "tree enumerator of a Ferrers graph");
  ferrers_cmd->add_option("--partition", cfg.partition, "weakly decreasing parts, e.g. 3,2,2")->required();
  ferrers_cmd->add_flag("--json", cfg.json, "JSON term list");

  auto* verify_cmd = app.add_subcommand("verify", "run the invariant suite over the bundled corpus");
  verify_cmd->add_option("--samples", cfg.samples, "random points per complex and level");
  verify_cmd->add_option("--seed", cfg.seed, "random seed");
  verify_cmd->add_option("--corpus", cfg.corpus_path, "corpus JSON file");

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kParseError;
  }
  cfg.subcommand = app.get_subcommands().front()->get_name();

  try {
    if (cfg.subcommand == "homology") return cmd_homology(cfg, out);
    if (cfg.subcommand == "count") return cmd_count(cfg, out);
    if (cfg.subcommand == "weighted") return cmd_weighted(cfg, out, err);
    if (cfg.subcommand == "shifted") return cmd_shifted(cfg, out);
    if (cfg.subcommand == "threshold") return cmd_threshold(cfg, out);
    if (cfg.subcommand == "ferrers") return cmd_ferrers(cfg, out);
    if (cfg.subcommand == "verify") return cmd_verify(cfg, out);
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
    return kParseError;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << "\n";
    return kDomainError;
  } catch (const ArithmeticError& e) {
    err << "error: " << e.what() << "\n";
    return kDomainError;
  } catch (const ResourceError& e) {
    err << "error: " << e.what() << "\n";
    return kResourceError;
  } catch (const InternalError& e) {
    err << "internal check failed: " << e.what() << "\n";
    return kCheckFailed;
  }
  err << "error: unknown subcommand\n";
  return kParseError;
}

}  // namespace sst::cli
