#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace ncg {

struct TreeNode {
  int id = 0;
  std::optional<int> parent;
  int level = 0;
  std::string label;
};

/// Finite well-founded forest. Node levels are the number of strict
/// ancestors, so roots sit at level 0 and a child is one level below its
/// parent. Construction validates these invariants and throws
/// std::invalid_argument on violation.
class WfTree {
 public:
  WfTree() = default;
  static WfTree from_nodes(std::vector<TreeNode> nodes);

  /// Incremental building; node ids are assigned consecutively from 0.
  int add_root(std::string label = {});
  int add_child(int parent, std::string label = {});

  bool empty() const { return nodes_.empty(); }
  std::size_t size() const { return nodes_.size(); }
  bool contains(int id) const { return index_.count(id) > 0; }
  const TreeNode& node(int id) const;
  /// Node ids in ascending order.
  std::vector<int> node_ids() const;
  std::vector<int> children(int id) const;
  std::vector<int> roots() const;
  int height() const;  // number of nonempty levels
  /// True iff a is a strict ancestor of b (a <_T b).
  bool is_strict_ancestor(int a, int b) const;

  /// rho_T(s): children-only recursion of the rank function.
  int rank_node(int id) const;
  /// rho(T) = sup{rho_T(s)+1 : s root}; 0 iff empty.
  int rank_tree() const;

  /// T_s = {t : s = t or s < t}, relabelled with the same ids but levels
  /// shifted so s becomes the single root. Empty when s is absent.
  WfTree subtree(int id) const;

 private:
  std::vector<TreeNode> nodes_;
  std::map<int, int> index_;                // id -> position in nodes_
  std::map<int, std::vector<int>> kids_;    // id -> child ids (ascending)
  mutable std::map<int, int> rank_cache_;

  void link(const TreeNode& n);
};

/// Classification of a node map between trees, strongest first.
enum class MapClass { Embedding, Lipschitz, OrderPreserving, None };

std::string to_string(MapClass c);

struct MapCheckResult {
  MapClass strongest = MapClass::None;
  bool order_preserving = false;
  bool lipschitz = false;
  bool embedding = false;
  /// When the map is order preserving, rho(S) <= rho(T) must hold.
  bool rank_bound_checked = false;
  bool rank_bound_holds = false;
};

/// Classifies f : s -> t (must be total on s). Throws if f maps to an
/// absent node.
MapCheckResult check_map(const WfTree& s, const WfTree& t, const std::map<int, int>& f);

struct LevelBoundResult {
  int k = 0, m = 0;
  bool holds = false;
  int level_sup = 0;  // sup{rho_T(t)+1 : t in L_m(T)}
  std::vector<int> violations;
};

/// Checks rho_T(s) <= sup{rho_T(t)+1 : t in L_m(T)} + (m-k-1) for every s
/// in L_k(T). Requires m > k.
LevelBoundResult check_level_bound(const WfTree& t, int k, int m);

struct ConcatBoundResult {
  bool precondition_ok = false;
  std::string precondition_error;
  bool holds = false;
  std::vector<int> violations;       // node ids in t1 violating the bound
  int rho_t = 0, rho_t1 = 0, alpha = 0;
};

/// Concatenated-tree bound: with t1 downward closed and every node
/// outside t1 of rank < alpha, asserts rho_T(x) <= alpha + rho_T1(x) on t1
/// and rho(T) <= alpha + rho(T1).
ConcatBoundResult concat_bound(const WfTree& t, const std::set<int>& t1, int alpha);

/// Ranks of nodes of t computed within the induced downward-closed subset
/// t1 (the tree T1). Keys are exactly the ids in t1.
std::map<int, int> ranks_within(const WfTree& t, const std::set<int>& t1);

/// Finite well-founded binary relation. Edges (x, y) mean x R y; the rank
/// recursion is rho_R(x) = sup{rho_R(y)+1 : y R x}. Construction rejects
/// relations with a cycle (the finite failure mode of well-foundedness).
class WfRelation {
 public:
  static WfRelation create(std::vector<int> elements, std::vector<std::pair<int, int>> edges);

  std::size_t size() const { return elements_.size(); }
  const std::vector<int>& elements() const { return elements_; }
  bool related(int x, int y) const;  // x R y
  /// Elements below x, i.e. {y : y R x}.
  const std::vector<int>& below(int x) const;

  int rank_element(int x) const;
  int rank() const;

 private:
  std::vector<int> elements_;
  std::map<int, std::vector<int>> below_;  // x -> {y : y R x}
  std::set<std::pair<int, int>> edges_;
  mutable std::map<int, int> rank_cache_;
};

/// The tree (T, <) viewed as a well-founded relation (T, >): y R x iff
/// x <_T y. rank_element then agrees with rank_node.
WfRelation tree_as_relation(const WfTree& t);

struct LexRelationResult {
  WfRelation relation;
  /// Element ids are sequential; labels identify (tb node, phi node).
  std::vector<std::pair<int, int>> element_pairs;
  int rho_r = 0;
  int sup_phi_rank = 0;
  int rho_tb = 0;
  bool bound_holds = false;  // rho(R) <= sup_phi_rank * rho_tb
};

/// Builds the lexicographic relation on A = U_s {s} x Phi(s):
/// (t,D) R (s,C) iff s <_tb t, or s = t and C <_Phi(t) D.
/// phi must contain one tree per tb node id. The reported bound is checked
/// in natural-number arithmetic.
LexRelationResult build_lex_relation(const WfTree& tb, const std::map<int, WfTree>& phi);

}  // namespace ncg
