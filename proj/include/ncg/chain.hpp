#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ncg/perm.hpp"
#include "ncg/tree.hpp"

namespace ncg {

/// A decreasing sequence E_0 >= E_1 >= ... of equivalence relations on
/// {0,...,points-1}. Classes are identified by their least member.
struct EqChain {
  int points = 0;
  std::vector<std::vector<int>> class_rep;  // class_rep[level][p] = least point of [p]

  int depth() const { return static_cast<int>(class_rep.size()) - 1; }

  /// Validates the shape and the refinement invariant.
  static EqChain from_partitions(int points, std::vector<std::vector<int>> class_rep);
};

/// Finite permutation group with a decreasing subgroup chain
/// G_0 >= G_1 >= ... >= G_d. Level n generators generate G_n; each level's
/// generators are checked for membership in the previous level's group.
class PermGroupChain {
 public:
  static PermGroupChain create(int degree, std::vector<std::vector<Perm>> level_generators,
                               std::size_t cap = default_enumeration_cap());

  int degree() const { return group_.degree(); }
  int depth() const { return static_cast<int>(levels_.size()) - 1; }
  const FiniteGroup& group() const { return group_; }
  const std::vector<std::vector<Perm>>& level_generators() const { return level_gen_perms_; }
  /// Sorted element ids of G_n.
  const std::vector<int>& level_elements(int n) const;
  /// Generator ids of G_n (small derived set when the supplied one is large).
  const std::vector<int>& level_generator_ids(int n) const;
  bool level_contains(int n, int elem) const;

  /// Pointwise stabilizer G_<n> = {g : g(i)=i for all i<n}; cached.
  const std::vector<int>& stabilizer_elements(int n) const;
  std::vector<int> stabilizer_generator_ids(int n) const;

  /// Orbits of G_level on the natural points, classes sorted by least point.
  std::vector<std::vector<int>> orbit_partition(int level) const;

  /// Orbit equivalence chain of (G_n) on a G-set.
  EqChain orbit_chain(const GAction& x) const;
  /// Orbit equivalence chain of the stabilizer sequence (G_<n>), n <= depth.
  EqChain stabilizer_orbit_chain(const GAction& x) const;

  /// Truncated coset space X(G) = U_{n<=depth} G/G_n with left translation.
  std::shared_ptr<const GAction> coset_space() const;
  /// Single-level coset action G/G_n.
  std::shared_ptr<const GAction> coset_action(int n) const;

 private:
  FiniteGroup group_;
  std::vector<std::vector<int>> levels_;      // sorted element ids per level
  std::vector<std::vector<int>> level_gens_;  // generator ids per level
  std::vector<std::vector<Perm>> level_gen_perms_;
  mutable std::map<int, std::vector<int>> stabilizer_cache_;
};

/// Orbit tree of an equivalence chain: a node (n, C) per nonsingleton
/// E_n-class, ordered by (n,C) < (m,D) iff n < m and C contains D. With
/// `plus` set, singleton level-0 classes are added as isolated roots.
struct OrbitTree {
  WfTree tree;
  /// (level, class representative) -> node id.
  std::map<std::pair<int, int>, int> node_of;

  std::optional<int> find(int level, int rep) const {
    auto it = node_of.find({level, rep});
    return it == node_of.end() ? std::nullopt : std::optional<int>(it->second);
  }
};

OrbitTree build_orbit_tree(const EqChain& e, bool plus = false);

/// rk(G_a, G_<n>) restricted to witnesses m <= depth. A cell that the
/// truncated recursion cannot close is reported as ExceedsTruncation.
/// Truncation caveat: the recursion quantifies the inner neighborhood only
/// over chain members G_<m>; by monotonicity of rk in its second argument
/// this is exact whenever some chain member sits inside the optimal
/// neighborhood, which the finite depth cannot always guarantee.
struct BalancedRankTable {
  static constexpr int kExceedsTruncation = -1;
  int depth = 0;
  std::vector<std::vector<int>> rk;  // rk[a][n], n <= depth

  bool closed(int a, int n) const { return rk[a][n] >= 0; }
};

BalancedRankTable balanced_rank_table(const PermGroupChain& g);

struct RankValue {
  bool exceeds_truncation = false;
  int value = 0;
};

/// rk(G_a, G_<n>) by the open-set rank recursion.
RankValue balanced_rank_open(const PermGroupChain& g, int a, int n);
/// rk(G) = sup{rk(G_a, G)+1 : a}; empty sup (degree 0) is 0.
RankValue balanced_rank_group(const PermGroupChain& g);

/// Finite-case correspondence between rk and orbit-tree node ranks for the
/// stabilizer chain: verifies the l = 1 equivalence and the node-rank bound
/// max{0, m-n-1} at the least witness m.
struct FiniteCaseResult {
  bool exceeds_truncation = false;
  bool rk_le_1 = false;
  bool stabilizes = false;         // orbits of G_<n>.a all fixed by some G_<m>, m <= depth
  bool equivalence_holds = false;  // rk_le_1 == stabilizes
  bool node_bound_holds = true;    // rank <= max{0, m-n-1} when rk <= 1
  int witness_m = -1;
  int node_rank = -1;              // -1 when the node is absent (singleton orbit)
};

/// Precomputed data shared by finite_case_check sweeps over (a, n).
struct FiniteCaseContext {
  BalancedRankTable table;
  EqChain stab_chain;
  OrbitTree stab_tree;
};

FiniteCaseContext make_finite_case_context(const PermGroupChain& g);
FiniteCaseResult finite_case_check(const PermGroupChain& g, const FiniteCaseContext& ctx,
                                   int a, int n);
FiniteCaseResult finite_case_check(const PermGroupChain& g, int a, int n);

/// Level-by-level classification of an injection between the ground sets of
/// two equivalence chains, with the induced orbit-tree map verified.
enum class TransferClass { None, Homomorphism, Reduction, BijectiveReduction };

std::string to_string(TransferClass c);

struct TransferResult {
  TransferClass classification = TransferClass::None;
  bool tree_map_built = false;
  MapCheckResult tree_map;  // valid when tree_map_built
};

TransferResult reduction_transfer(const EqChain& e1, const EqChain& e2,
                                  const std::vector<int>& theta);

}  // namespace ncg
