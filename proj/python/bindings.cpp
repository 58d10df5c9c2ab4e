#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <json.hpp>

#include "ncg/chain.hpp"
#include "ncg/constructions.hpp"
#include "ncg/extension.hpp"
#include "ncg/json_io.hpp"
#include "ncg/ordinal.hpp"
#include "ncg/ugroup.hpp"
#include "ncg/verify.hpp"

namespace py = pybind11;
using nlohmann::json;

namespace {

ncg::BoundKind bound_kind(const std::string& kind) {
  if (kind == "extension") return ncg::BoundKind::Extension;
  if (kind == "semidirect") return ncg::BoundKind::SemidirectPositive;
  if (kind == "wreath") return ncg::BoundKind::Wreath;
  throw std::invalid_argument("kind must be extension, semidirect or wreath");
}

std::string classify_str(const ncg::Ordinal& o) {
  switch (o.classify()) {
    case ncg::Ordinal::Kind::Zero: return "zero";
    case ncg::Ordinal::Kind::Successor: return "successor";
    case ncg::Ordinal::Kind::Limit: return "limit";
  }
  return "zero";
}

py::dict tree_ranks(const std::string& tree_json) {
  ncg::WfTree t = ncg::tree_from_json(json::parse(tree_json));
  py::dict ranks;
  for (int id : t.node_ids()) ranks[py::int_(id)] = t.rank_node(id);
  py::dict out;
  out["ranks"] = ranks;
  out["rank"] = t.rank_tree();
  return out;
}

std::string orbit_tree_json(const std::string& chain_json, const std::string& set_kind) {
  ncg::PermGroupChain chain = ncg::chain_from_json(json::parse(chain_json));
  ncg::OrbitTree tree;
  if (set_kind == "points") {
    ncg::NaturalAction pts(chain.group());
    tree = ncg::build_orbit_tree(chain.orbit_chain(pts));
  } else if (set_kind == "coset") {
    auto x = chain.coset_space();
    tree = ncg::build_orbit_tree(chain.orbit_chain(*x));
  } else {
    throw std::invalid_argument("set must be points or coset");
  }
  return ncg::tree_to_json(tree.tree).dump();
}

py::dict run_verify(const std::string& suite, std::uint64_t seed, int cases) {
  ncg::VerifyOptions opts;
  opts.seed = seed;
  opts.cases = cases;
  ncg::Report r = ncg::verify_suite(suite, opts);
  py::dict out;
  out["ok"] = r.all_ok();
  out["report"] = r.to_json().dump();
  return out;
}

py::dict balanced_rank(const std::string& chain_json, int a, int n) {
  ncg::PermGroupChain chain = ncg::chain_from_json(json::parse(chain_json));
  ncg::RankValue r = ncg::balanced_rank_open(chain, a, n);
  py::dict out;
  out["exceeds_truncation"] = r.exceeds_truncation;
  out["value"] = r.value;
  return out;
}

py::dict extension_report(const std::string& instance_json) {
  ncg::ExtensionInstance inst = ncg::extension_instance_from_json(json::parse(instance_json));
  ncg::ExtensionReport r = ncg::extension_bound_check(inst);
  py::dict out;
  out["g_equals_n"] = r.g_equals_n;
  out["complete"] = r.complete;
  out["psi_ok"] = r.psi.all_ok();
  out["phi_well_defined"] = r.phi_well_defined;
  out["chain_holds"] = r.chain_holds;
  out["rhs_bound_holds"] = r.rhs_bound_holds;
  out["rho_tgx"] = r.rho_tgx;
  out["rho_r"] = r.rho_r;
  out["rho_tb"] = r.tb.rho_tb;
  out["sup_phi"] = r.sup_phi;
  return out;
}

std::string u_mul_json(const std::string& a, const std::string& x) {
  return ncg::u_element_to_json(
             ncg::u_mul(ncg::u_element_from_json(json::parse(a)),
                        ncg::u_element_from_json(json::parse(x))))
      .dump();
}

std::string u_inv_json(const std::string& x) {
  return ncg::u_element_to_json(ncg::u_inv(ncg::u_element_from_json(json::parse(x)))).dump();
}

py::tuple window_profile(const std::string& x, int n) {
  ncg::WindowProfile w = ncg::window(ncg::u_element_from_json(json::parse(x)), n);
  return py::make_tuple(w.n1, w.n2, w.n3);
}

bool coset_eq_json(const std::string& x1, const std::string& x2, int n) {
  return ncg::coset_eq(ncg::u_element_from_json(json::parse(x1)),
                       ncg::u_element_from_json(json::parse(x2)), n);
}

}  // namespace

PYBIND11_MODULE(_ncgrank, m) {
  m.doc() = "rank computations on truncated non-archimedean group chains";

  py::class_<ncg::Ordinal>(m, "Ordinal")
      .def(py::init([](const std::string& text) { return ncg::Ordinal::parse(text); }))
      .def_static("natural", [](std::uint64_t n) { return ncg::Ordinal::natural(n); })
      .def_static("omega", &ncg::Ordinal::omega)
      .def("__str__", &ncg::Ordinal::to_string)
      .def("__repr__",
           [](const ncg::Ordinal& o) { return "Ordinal('" + o.to_string() + "')"; })
      .def("__add__", [](const ncg::Ordinal& a, const ncg::Ordinal& b) { return a + b; })
      .def("__mul__", [](const ncg::Ordinal& a, const ncg::Ordinal& b) { return a * b; })
      .def("__eq__", [](const ncg::Ordinal& a, const ncg::Ordinal& b) { return a == b; })
      .def("__lt__", [](const ncg::Ordinal& a, const ncg::Ordinal& b) { return a < b; })
      .def("__le__", [](const ncg::Ordinal& a, const ncg::Ordinal& b) { return a <= b; })
      .def("omega_part", &ncg::Ordinal::omega_part)
      .def("finite_part", &ncg::Ordinal::finite_part)
      .def("classify", &classify_str);

  m.def("rank_bound",
        [](const std::string& kind, const std::string& alpha, const std::string& beta) {
          return ncg::rank_bound(bound_kind(kind), ncg::Ordinal::parse(alpha),
                                 ncg::Ordinal::parse(beta))
              .bound.to_string();
        },
        py::arg("kind"), py::arg("alpha"), py::arg("beta"));

  m.def("tree_ranks", &tree_ranks, py::arg("tree_json"));
  m.def("orbit_tree", &orbit_tree_json, py::arg("chain_json"), py::arg("set") = "points");
  m.def("verify", &run_verify, py::arg("suite") = "all", py::arg("seed") = 1,
        py::arg("cases") = 100);
  m.def("balanced_rank", &balanced_rank, py::arg("chain_json"), py::arg("a"), py::arg("n"));
  m.def("extension_report", &extension_report, py::arg("instance_json"));
  m.def("u_mul", &u_mul_json, py::arg("a"), py::arg("x"));
  m.def("u_inv", &u_inv_json, py::arg("x"));
  m.def("window", &window_profile, py::arg("x"), py::arg("n"));
  m.def("coset_eq", &coset_eq_json, py::arg("x1"), py::arg("x2"), py::arg("n"));
}
