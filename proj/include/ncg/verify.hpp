#pragma once

#include <cstdint>

#include "ncg/report.hpp"

namespace ncg {

struct VerifyOptions {
  std::uint64_t seed = 1;
  int cases = 100;
  std::size_t cap = 10000;
  // ugroup sweep parameters (the sweep-config file maps onto these).
  int u_k = 8;
  int u_n_max = 3;
  int u_samples = 0;  // 0: derive from `cases`
  int u_entry_cap = 3;
};

Report verify_trees(const VerifyOptions& opts);
Report verify_groups(const VerifyOptions& opts);
Report verify_constructions(const VerifyOptions& opts);
Report verify_extension(const VerifyOptions& opts);
Report verify_ugroup(const VerifyOptions& opts);

/// Runs the named suite ("trees", ..., "all"); throws std::invalid_argument
/// for unknown names.
Report verify_suite(const std::string& name, const VerifyOptions& opts);

}  // namespace ncg
