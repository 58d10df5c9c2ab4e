#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ncg/chain.hpp"
#include "ncg/perm.hpp"
#include "ncg/tree.hpp"

namespace ncg {

/// Selects the G-set of an extension instance. The default is the truncated
/// coset space X(G); Table carries a self-contained explicit action.
struct XSetSpec {
  enum class Kind { CosetSpace, Points, CosetLevel, Table };
  Kind kind = Kind::CosetSpace;
  int level = 0;                         // CosetLevel
  std::shared_ptr<const GAction> table;  // Table

  static XSetSpec coset_space() { return {}; }
  static XSetSpec points() { return {Kind::Points, 0, nullptr}; }
  static XSetSpec coset_level(int n) { return {Kind::CosetLevel, n, nullptr}; }
  static XSetSpec explicit_table(std::shared_ptr<const GAction> t) {
    return {Kind::Table, 0, std::move(t)};
  }
};

/// A chain group G together with a normal subgroup N and a finite G-set X.
/// Derived data: N_n = G_n intersect N per level (always recomputed) and
/// quotient structure by explicit coset enumeration with least-id
/// representatives.
class ExtensionInstance {
 public:
  static ExtensionInstance create(PermGroupChain g, const std::vector<Perm>& n_generators,
                                  XSetSpec x_set = {},
                                  std::size_t cap = default_enumeration_cap());

  const PermGroupChain& g() const { return g_; }
  const GAction& x() const { return *x_; }
  int depth() const { return g_.depth(); }
  /// Sorted element ids of N (inside G_0's enumeration).
  const std::vector<int>& n_elements() const { return n_elems_; }
  const std::vector<int>& n_level_elements(int n) const { return n_levels_[n]; }
  const std::vector<int>& n_level_generators(int n) const { return n_level_gens_[n]; }
  bool g_equals_n() const { return n_elems_.size() == static_cast<std::size_t>(g_.group().order()); }

  /// s(x, G_k, N_k): least p with G_{k+p} N_k . x = N_k . x, witnesses
  /// restricted to k+p <= depth.
  RankValue s_value(int point, int k) const;

  /// q_{x,0}, q_{x,1}, ... while the values stay <= depth and every needed
  /// s-value closes. `complete` is false when truncation cut the sequence
  /// before it passed depth.
  struct QSequence {
    std::vector<int> q;
    bool complete = true;
  };
  const QSequence& q_sequence(int point) const;

  /// Orbit partition representative of `point` under the subgroup
  /// G_m N_k (m, k <= depth); cached.
  int product_orbit_rep(int m, int k, int point) const;
  /// Representative of point under N_k.
  int n_orbit_rep(int k, int point) const;
  std::vector<int> n_orbit(int k, int point) const;
  int n_orbit_size(int k, int point) const;

 private:
  PermGroupChain g_;
  std::shared_ptr<const GAction> x_;
  std::vector<int> n_elems_;
  std::vector<std::vector<int>> n_levels_;
  std::vector<std::vector<int>> n_level_gens_;
  mutable std::map<std::pair<int, int>, std::vector<int>> product_orbit_cache_;
  mutable std::map<int, QSequence> q_cache_;

  const std::vector<int>& product_orbit_reps(int m, int k) const;
};

/// T_B: the q-indexed subtree of the N-orbit tree plus an artificial root.
/// The root is node 0 at level 0; genuine nodes carry their (q, class rep)
/// pair and sit one tree level above their T_B predecessor count.
struct TbResult {
  WfTree tree;
  std::map<std::pair<int, int>, int> node_of;  // (q, N_q-orbit rep) -> node id
  std::vector<std::pair<int, int>> key_of;     // node id -> (q, rep); root is (-1,-1)
  int rho_tb = 0;
  int rho_tnx = 0;  // rank of the N-chain orbit tree on X
  bool rank_bound_holds = false;  // rho(T_B) <= rho(T_N^X) + 1
  bool complete = true;           // false when some q-sequence was truncated
};

TbResult build_tb(const ExtensionInstance& inst);

/// Phi(s): quotient orbit tree attached to a T_B node (or the root), with
/// singleton level-0 classes added. Ground points are N_{k'}-class
/// representatives inside the node's N_q-orbit (all of X for the root).
struct PhiResult {
  WfTree tree;
  std::map<std::pair<int, int>, int> node_of;  // (tree level, N_{k'}-class rep) -> node
  int k_prime = 0;                             // quotient level N_{k'}
  bool well_defined = true;  // recomputation from a second representative agrees
};

PhiResult build_phi(const ExtensionInstance& inst, const TbResult& tb, int tb_node);

/// The psi family and its three checks: image containment, order
/// reversal into the lexicographic relation, and compatibility across
/// points sharing a node.
struct PsiResult {
  bool total = true;          // every orbit-tree node received an image
  bool image_ok = true;       // images land inside A = U_s {s} x Phi(s)
  bool order_ok = true;       // node order maps into R, orientation reversed
  bool compatible_ok = true;  // psi_x and psi_y agree on shared nodes
  std::string witness;        // first failure, if any

  bool all_ok() const { return total && image_ok && order_ok && compatible_ok; }
};

struct ExtensionReport {
  bool g_equals_n = false;  // rejected: the bound needs G != N
  bool complete = true;     // truncation closed every stage
  bool phi_well_defined = true;
  TbResult tb;
  std::map<int, WfTree> phi;  // Phi(s) per T_B node id
  PsiResult psi;
  int rho_tgx = 0;      // rank of the G-chain orbit tree on X
  int rho_r = 0;        // rank of the lexicographic relation
  int r_size = 0;       // number of elements of the relation R
  int sup_phi = 0;      // sup of Phi ranks
  int rho_pi_g = 0;     // rank of the quotient chain on its own coset space
  bool chain_holds = false;      // rho(T_G^X) <= rho(R) <= sup_phi * rho(T_B)
  bool rhs_bound_holds = false;  // rho(T_G^X) <= rho_pi_g * (rho(T_N^X) + 1)
  bool degenerate = false;       // rho(T_B) == 1 and every Phi beyond the root empty
};

ExtensionReport extension_bound_check(const ExtensionInstance& inst);

/// HN/N isomorphic to H/(H cap N), verified two ways: the canonical map
/// h(H cap N) -> hN checked to be a bijective homomorphism, and an
/// independent backtracking isomorphism search on the two quotient Cayley
/// tables.
struct QuotientIsoResult {
  int hn_mod_n_order = 0;
  int h_mod_hn_order = 0;
  bool canonical_iso = false;
  bool search_found_iso = false;
};

QuotientIsoResult quotient_iso_check(const PermGroupChain& g, const std::vector<Perm>& n_generators,
                                     int h_level);

/// Quotient group of `elems` (a subgroup of g's group) by normal subgroup
/// `norm` (subset of elems), as a Cayley table over least-id coset reps.
struct QuotientGroup {
  std::vector<int> reps;                 // coset id -> least element id
  std::vector<int> coset_of;             // element id -> coset id (or -1)
  std::vector<std::vector<int>> table;   // Cayley table on coset ids
};
QuotientGroup quotient_group(const FiniteGroup& g, const std::vector<int>& elems,
                             const std::vector<int>& norm);

/// Exhaustive backtracking isomorphism search between two small Cayley
/// tables; independent of the canonical-map route.
bool cayley_isomorphic(const std::vector<std::vector<int>>& a,
                       const std::vector<std::vector<int>>& b);

}  // namespace ncg
