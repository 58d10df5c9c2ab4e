#include "ncg/json_io.hpp"

#include <limits>
#include <sstream>
#include <stdexcept>

namespace ncg {

nlohmann::json tree_to_json(const WfTree& t) {
  nlohmann::json nodes = nlohmann::json::array();
  for (int id : t.node_ids()) {
    const TreeNode& n = t.node(id);
    nlohmann::json jn;
    jn["id"] = n.id;
    if (n.parent)
      jn["parent"] = *n.parent;
    else
      jn["parent"] = nullptr;
    jn["level"] = n.level;
    jn["label"] = n.label;
    nodes.push_back(std::move(jn));
  }
  return nlohmann::json{{"nodes", std::move(nodes)}};
}

WfTree tree_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("nodes") || !j["nodes"].is_array())
    throw std::invalid_argument("tree JSON must be an object with a \"nodes\" array");
  std::vector<TreeNode> nodes;
  for (const auto& jn : j["nodes"]) {
    TreeNode n;
    n.id = jn.at("id").get<int>();
    if (jn.contains("parent") && !jn["parent"].is_null()) n.parent = jn["parent"].get<int>();
    n.level = jn.at("level").get<int>();
    n.label = jn.value("label", std::string{});
    nodes.push_back(std::move(n));
  }
  return WfTree::from_nodes(std::move(nodes));
}

std::string tree_to_dot(const WfTree& t, const std::string& name) {
  std::ostringstream out;
  out << "digraph " << name << " {\n";
  for (int id : t.node_ids()) {
    const TreeNode& n = t.node(id);
    out << "  n" << id << " [label=\"" << n.label << (n.label.empty() ? "" : " ")
        << "rank=" << t.rank_node(id) << "\"];\n";
  }
  for (int id : t.node_ids()) {
    const TreeNode& n = t.node(id);
    if (n.parent) out << "  n" << *n.parent << " -> n" << id << ";\n";
  }
  out << "}\n";
  return out.str();
}

nlohmann::json chain_to_json(const PermGroupChain& c) {
  nlohmann::json levels = nlohmann::json::array();
  for (const auto& gens : c.level_generators()) {
    nlohmann::json jl;
    jl["generators"] = nlohmann::json::array();
    for (const Perm& p : gens) jl["generators"].push_back(p);
    levels.push_back(std::move(jl));
  }
  return nlohmann::json{{"degree", c.degree()}, {"levels", std::move(levels)}};
}

PermGroupChain chain_from_json(const nlohmann::json& j, std::size_t cap) {
  if (!j.is_object() || !j.contains("degree") || !j.contains("levels"))
    throw std::invalid_argument("chain JSON needs \"degree\" and \"levels\"");
  int degree = j.at("degree").get<int>();
  if (degree < 0) throw std::invalid_argument("chain degree must be nonnegative");
  std::vector<std::vector<Perm>> levels;
  for (const auto& jl : j.at("levels")) {
    std::vector<Perm> gens;
    for (const auto& jp : jl.at("generators")) gens.push_back(jp.get<Perm>());
    levels.push_back(std::move(gens));
  }
  return PermGroupChain::create(degree, std::move(levels), cap);
}

CayleyTable cayley_from_json(const nlohmann::json& j) {
  return CayleyTable::create(j.at("order").get<int>(),
                             j.at("table").get<std::vector<std::vector<int>>>());
}

namespace {

IntMatrix matrix_from_json(const nlohmann::json& j, int k) {
  auto rows = j.get<std::vector<std::vector<long long>>>();
  if (static_cast<int>(rows.size()) != k) throw std::invalid_argument("matrix size mismatch");
  return IntMatrix::from_rows(rows);
}

long long to_ll(const BigInt& v) {
  if (v > std::numeric_limits<long long>::max() || v < std::numeric_limits<long long>::min())
    throw std::invalid_argument("entry too large for the JSON schema");
  return v.convert_to<long long>();
}

nlohmann::json matrix_to_json(const IntMatrix& m) {
  nlohmann::json rows = nlohmann::json::array();
  for (int i = 0; i < m.k(); ++i) {
    nlohmann::json row = nlohmann::json::array();
    for (int j = 0; j < m.k(); ++j) row.push_back(to_ll(m.at(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

nlohmann::json vector_to_json(const IntVector& v) {
  nlohmann::json out = nlohmann::json::array();
  for (int i = 0; i < v.k(); ++i) out.push_back(to_ll(v.at(i)));
  return out;
}

}  // namespace

nlohmann::json u_element_to_json(const UElement& x) {
  nlohmann::json j;
  j["k"] = x.k;
  j["a"] = matrix_to_json(x.a);
  j["b"] = matrix_to_json(x.b);
  j["d"] = matrix_to_json(x.d);
  j["c"] = vector_to_json(x.c);
  j["e"] = vector_to_json(x.e);
  j["f"] = vector_to_json(x.f);
  return j;
}

UElement u_element_from_json(const nlohmann::json& j) {
  UElement x;
  x.k = j.at("k").get<int>();
  if (x.k <= 0) throw std::invalid_argument("u element needs k >= 1");
  x.a = matrix_from_json(j.at("a"), x.k);
  x.b = matrix_from_json(j.at("b"), x.k);
  x.d = matrix_from_json(j.at("d"), x.k);
  auto vec = [&](const char* key) {
    auto v = j.at(key).get<std::vector<long long>>();
    if (static_cast<int>(v.size()) != x.k) throw std::invalid_argument("vector size mismatch");
    return IntVector::from(v);
  };
  x.c = vec("c");
  x.e = vec("e");
  x.f = vec("f");
  return x;
}

nlohmann::json run_construction_spec(const nlohmann::json& j, std::size_t cap) {
  std::string op = j.at("op").get<std::string>();
  nlohmann::json out;
  out["op"] = op;
  if (op == "semidirect" || op == "wreath") {
    PermGroupChain g = chain_from_json(j.at("g"), cap);
    PermGroupChain h = chain_from_json(j.at("h"), cap);
    SemidirectProduct a;
    if (op == "wreath") {
      a = wreath(g, h, cap);
    } else {
      ActionTable rho = j.contains("rho")
                            ? ActionTable::create(g.group(), h.group(),
                                                  j.at("rho").get<std::vector<std::vector<int>>>())
                            : ActionTable::trivial(g.group(), h.group());
      a = semidirect(g, h, rho, cap);
    }
    out["order"] = a.chain.group().order();
    out["chain"] = chain_to_json(a.chain);
    return out;
  }
  if (op == "countable_semidirect") {
    CayleyTable gamma = cayley_from_json(j.at("gamma"));
    PermGroupChain g = chain_from_json(j.at("g"), cap);
    CountableSemidirectResult r = countable_semidirect(gamma, g, cap);
    out["order"] = r.a_chain.group().order();
    out["chain"] = chain_to_json(r.a_chain);
    out["phi_homomorphism"] = r.phi_homomorphism;
    out["phi_injective"] = r.phi_injective;
    out["rho_ta"] = r.rho_ta;
    out["rho_tg"] = r.rho_tg;
    out["shift_asserted"] = r.shift_asserted;
    out["shift_holds"] = r.shift_holds;
    return out;
  }
  throw std::invalid_argument("op must be semidirect, wreath or countable_semidirect");
}

nlohmann::json extension_report_to_json(const ExtensionReport& report) {
  nlohmann::json out;
  out["g_equals_n"] = report.g_equals_n;
  out["complete"] = report.complete;
  if (report.g_equals_n) return out;
  out["t_b"] = tree_to_json(report.tb.tree);
  nlohmann::json phis = nlohmann::json::array();
  for (const auto& [node, tree] : report.phi) {
    nlohmann::json entry;
    entry["t_b_node"] = node;
    entry["tree"] = tree_to_json(tree);
    entry["rank"] = tree.rank_tree();
    phis.push_back(std::move(entry));
  }
  out["phi"] = std::move(phis);
  out["r_size"] = report.r_size;
  out["ranks"] = {{"rho_tgx", report.rho_tgx},  {"rho_r", report.rho_r},
                  {"rho_tb", report.tb.rho_tb}, {"rho_tnx", report.tb.rho_tnx},
                  {"sup_phi", report.sup_phi},  {"rho_pi_g", report.rho_pi_g}};
  out["checks"] = {{"psi_total", report.psi.total},
                   {"psi_image", report.psi.image_ok},
                   {"psi_order", report.psi.order_ok},
                   {"psi_compatible", report.psi.compatible_ok},
                   {"phi_well_defined", report.phi_well_defined},
                   {"tb_rank_bound", report.tb.rank_bound_holds},
                   {"chain_holds", report.chain_holds},
                   {"rhs_bound_holds", report.rhs_bound_holds},
                   {"degenerate", report.degenerate}};
  if (!report.psi.witness.empty()) out["witness"] = report.psi.witness;
  return out;
}

SweepConfig sweep_config_from_json(const nlohmann::json& j) {
  SweepConfig c;
  c.n = j.value("n", c.n);
  c.k = j.value("k", c.k);
  c.samples = j.value("samples", c.samples);
  c.seed = j.value("seed", c.seed);
  c.entry_cap = j.value("entry_cap", c.entry_cap);
  if (c.k < 1 || c.n < 1 || c.n > c.k) throw std::invalid_argument("sweep config needs 1 <= n <= k");
  return c;
}

ExtensionInstance extension_instance_from_json(const nlohmann::json& j, std::size_t cap) {
  PermGroupChain g = chain_from_json(j.at("g"), cap);
  std::vector<Perm> n_gens;
  for (const auto& jp : j.at("n_generators")) n_gens.push_back(jp.get<Perm>());

  XSetSpec spec;
  const auto& xs = j.at("x_set");
  if (xs.is_string()) {
    if (xs.get<std::string>() != "coset_space")
      throw std::invalid_argument("x_set must be \"coset_space\" or an explicit action");
  } else {
    int points = xs.at("points").get<int>();
    auto gen_actions = xs.at("generators").get<std::vector<std::vector<int>>>();
    const auto& g0 = g.level_generators()[0];
    if (gen_actions.size() != g0.size())
      throw std::invalid_argument("x_set needs one permutation per level-0 generator");

    // Enumerate the combined action on natural points + X to resolve the
    // action of every element; well-definedness shows up as a size match.
    int deg = g.degree();
    std::vector<Perm> combined;
    for (std::size_t i = 0; i < g0.size(); ++i) {
      Perm p(deg + points);
      for (int q = 0; q < deg; ++q) p[q] = g0[i][q];
      if (static_cast<int>(gen_actions[i].size()) != points || !perm_valid(gen_actions[i]))
        throw std::invalid_argument("x_set generator action is not a permutation");
      for (int q = 0; q < points; ++q) p[deg + q] = deg + gen_actions[i][q];
      combined.push_back(std::move(p));
    }
    FiniteGroup big = FiniteGroup::enumerate(deg + points, combined, cap);
    if (big.order() != g.group().order())
      throw std::invalid_argument("x_set action is not well defined on the group");
    std::vector<std::vector<int>> table(g.group().order(), std::vector<int>(points));
    for (int e = 0; e < big.order(); ++e) {
      Perm natural(deg);
      for (int q = 0; q < deg; ++q) natural[q] = big.perm(e)[q];
      int gid = g.group().id_of(natural);
      if (gid < 0) throw std::invalid_argument("x_set action escapes the group");
      for (int q = 0; q < points; ++q) table[gid][q] = big.perm(e)[deg + q] - deg;
    }
    spec = XSetSpec::explicit_table(std::make_shared<TableAction>(points, std::move(table)));
  }
  return ExtensionInstance::create(std::move(g), n_gens, std::move(spec), cap);
}

}  // namespace ncg
