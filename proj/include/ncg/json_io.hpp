#pragma once

#include <memory>
#include <string>

#include <json.hpp>

#include "ncg/chain.hpp"
#include "ncg/constructions.hpp"
#include "ncg/extension.hpp"
#include "ncg/tree.hpp"
#include "ncg/ugroup.hpp"

namespace ncg {

/// Tree JSON: {"nodes":[{"id":int,"parent":int|null,"level":int,"label":string}]}.
nlohmann::json tree_to_json(const WfTree& t);
WfTree tree_from_json(const nlohmann::json& j);
/// DOT export; node labels show the stored label and the computed rank.
std::string tree_to_dot(const WfTree& t, const std::string& name = "tree");

/// Chain spec JSON: {"degree":N,"levels":[{"generators":[[...],...]},...]};
/// permutations are full image arrays of length N.
nlohmann::json chain_to_json(const PermGroupChain& c);
PermGroupChain chain_from_json(const nlohmann::json& j,
                               std::size_t cap = default_enumeration_cap());

/// Cayley table JSON: {"order":n,"table":[[...]]}.
CayleyTable cayley_from_json(const nlohmann::json& j);

/// U-element JSON: {"k":int,"a":[[..]],"b":[[..]],"d":[[..]],"c":[..],"e":[..],"f":[..]}.
nlohmann::json u_element_to_json(const UElement& x);
UElement u_element_from_json(const nlohmann::json& j);

/// Construction spec JSON:
/// {"op":"semidirect|wreath|countable_semidirect","g":<chain>,"h":<chain>,
///  "rho":[[...]],"gamma":{"order":n,"table":[[...]]}}.
/// Runs the construction and returns a JSON summary holding the resulting
/// chain spec plus the per-op report fields.
nlohmann::json run_construction_spec(const nlohmann::json& j,
                                     std::size_t cap = default_enumeration_cap());

/// Full instance report: T_B, every Phi(s), the relation size and every
/// computed rank alongside the check outcomes.
nlohmann::json extension_report_to_json(const ExtensionReport& report);

/// Sweep config JSON for the ugroup suite:
/// {"n":int,"k":int,"samples":int,"seed":int,"entry_cap":int}.
struct SweepConfig {
  int n = 3;        // largest base level exercised
  int k = 8;        // truncation
  int samples = 10;
  std::uint64_t seed = 1;
  int entry_cap = 3;
};
SweepConfig sweep_config_from_json(const nlohmann::json& j);

/// Extension instance JSON:
/// {"g":<chain>,"n_generators":[[...]],"x_set":"coset_space"|{"points":M,"generators":[[...]]}}.
/// An explicit x_set lists one permutation of the point set per level-0
/// generator of g, in order; the induced action must be well defined.
ExtensionInstance extension_instance_from_json(const nlohmann::json& j,
                                               std::size_t cap = default_enumeration_cap());

}  // namespace ncg
