#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "ncg/chain.hpp"
#include "ncg/constructions.hpp"
#include "ncg/extension.hpp"
#include "ncg/json_io.hpp"
#include "ncg/verify.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFail = 1;
constexpr int kExitInput = 2;
constexpr int kExitTruncation = 3;

nlohmann::json load_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open " + path);
  nlohmann::json j;
  in >> j;
  return j;
}

int cmd_rank(const std::string& input) {
  ncg::WfTree tree = ncg::tree_from_json(load_json(input));
  for (int id : tree.node_ids())
    std::cout << "node " << id << " rank " << tree.rank_node(id) << "\n";
  std::cout << "rho(T)=" << tree.rank_tree() << "\n";
  return kExitOk;
}

int cmd_orbit_tree(const std::string& chain_path, const std::string& set_kind,
                   const std::string& format, const std::string& out_path) {
  ncg::PermGroupChain chain = ncg::chain_from_json(load_json(chain_path));
  ncg::OrbitTree tree;
  if (set_kind == "points") {
    ncg::NaturalAction pts(chain.group());
    tree = ncg::build_orbit_tree(chain.orbit_chain(pts));
  } else if (set_kind == "coset") {
    auto x = chain.coset_space();
    tree = ncg::build_orbit_tree(chain.orbit_chain(*x));
  } else {
    throw std::invalid_argument("--set must be coset or points");
  }

  std::string payload = format == "dot" ? ncg::tree_to_dot(tree.tree, "orbit_tree")
                                        : ncg::tree_to_json(tree.tree).dump(2) + "\n";
  if (out_path.empty() || out_path == "-") {
    std::cout << payload;
  } else {
    std::ofstream out(out_path);
    if (!out) throw std::invalid_argument("cannot write " + out_path);
    out << payload;
  }
  return kExitOk;
}

int cmd_verify(const std::string& suite, std::uint64_t seed, int cases, bool timing,
               const std::string& config_path) {
  ncg::VerifyOptions opts;
  opts.seed = seed;
  opts.cases = cases;
  opts.cap = ncg::default_enumeration_cap();
  if (!config_path.empty()) {
    ncg::SweepConfig cfg = ncg::sweep_config_from_json(load_json(config_path));
    opts.u_k = cfg.k;
    opts.u_n_max = cfg.n;
    opts.u_samples = cfg.samples;
    opts.u_entry_cap = cfg.entry_cap;
    opts.seed = cfg.seed;
  }
  ncg::Report report = ncg::verify_suite(suite, opts);
  std::cout << report.to_json(timing).dump(2) << "\n";
  return report.all_ok() ? kExitOk : kExitFail;
}

int cmd_construct(const std::string& spec_path) {
  std::cout << ncg::run_construction_spec(load_json(spec_path)).dump(2) << "\n";
  return kExitOk;
}

int cmd_extension(const std::string& instance_path) {
  ncg::ExtensionInstance inst = ncg::extension_instance_from_json(load_json(instance_path));
  ncg::ExtensionReport report = ncg::extension_bound_check(inst);
  std::cout << ncg::extension_report_to_json(report).dump(2) << "\n";
  bool ok = report.g_equals_n ? false
                              : report.psi.all_ok() && report.phi_well_defined &&
                                    report.chain_holds && report.rhs_bound_holds;
  if (report.g_equals_n) return kExitInput;
  if (!report.complete) return kExitTruncation;
  return ok ? kExitOk : kExitFail;
}

int cmd_bound(const std::string& kind, const std::string& alpha, const std::string& beta) {
  ncg::BoundKind k;
  if (kind == "extension")
    k = ncg::BoundKind::Extension;
  else if (kind == "semidirect")
    k = ncg::BoundKind::SemidirectPositive;
  else if (kind == "wreath")
    k = ncg::BoundKind::Wreath;
  else
    throw std::invalid_argument("--kind must be extension, semidirect or wreath");
  ncg::RankBound b = ncg::rank_bound(k, ncg::Ordinal::parse(alpha), ncg::Ordinal::parse(beta));
  std::cout << b.bound.to_string() << "\n";
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"rank computations on truncated non-archimedean group chains"};
  app.require_subcommand(1);

  std::string rank_input;
  CLI::App* rank = app.add_subcommand("rank", "node and tree ranks of a well-founded tree");
  rank->add_option("input", rank_input, "tree JSON file")->required();

  std::string ot_chain, ot_set = "points", ot_format = "json", ot_out;
  CLI::App* orbit = app.add_subcommand("orbit-tree", "orbit tree of a subgroup chain");
  orbit->add_option("chain", ot_chain, "chain spec JSON file")->required();
  orbit->add_option("--set", ot_set, "coset|points (default points)");
  orbit->add_option("--out", ot_format, "json|dot (default json)");
  orbit->add_option("--output", ot_out, "output file (default stdout)");

  std::string v_suite = "all";
  std::uint64_t v_seed = 1;
  int v_cases = 100;
  bool v_timing = false;
  std::string v_config;
  CLI::App* verify = app.add_subcommand("verify", "run a verification suite");
  verify->add_option("--suite", v_suite, "trees|groups|constructions|extension|ugroup|all");
  verify->add_option("--seed", v_seed, "RNG seed (default 1)");
  verify->add_option("--cases", v_cases, "sample budget (default 100)");
  verify->add_flag("--timing", v_timing, "include elapsed times in the report");
  verify->add_option("--config", v_config, "ugroup sweep config JSON file");

  std::string c_spec;
  CLI::App* construct = app.add_subcommand("construct", "build a product group from a spec");
  construct->add_option("spec", c_spec, "construction spec JSON file")->required();

  std::string e_instance;
  CLI::App* extension = app.add_subcommand("extension", "run the extension pipeline report");
  extension->add_option("instance", e_instance, "extension instance JSON file")->required();

  std::string b_kind, b_alpha = "0", b_beta = "0";
  CLI::App* bound = app.add_subcommand("bound", "symbolic rank bound in Cantor normal form");
  bound->add_option("--kind", b_kind, "extension|semidirect|wreath")->required();
  bound->add_option("--alpha", b_alpha, "ordinal, e.g. w*2+1");
  bound->add_option("--beta", b_beta, "ordinal");

  CLI11_PARSE(app, argc, argv);

  try {
    if (rank->parsed()) return cmd_rank(rank_input);
    if (orbit->parsed()) return cmd_orbit_tree(ot_chain, ot_set, ot_format, ot_out);
    if (verify->parsed()) return cmd_verify(v_suite, v_seed, v_cases, v_timing, v_config);
    if (construct->parsed()) return cmd_construct(c_spec);
    if (extension->parsed()) return cmd_extension(e_instance);
    if (bound->parsed()) return cmd_bound(b_kind, b_alpha, b_beta);
  } catch (const ncg::CapExceeded& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitTruncation;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  }
  return kExitInput;
}
