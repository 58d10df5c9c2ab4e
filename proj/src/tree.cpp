#include "ncg/tree.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace ncg {

void WfTree::link(const TreeNode& n) {
  if (index_.count(n.id)) throw std::invalid_argument("duplicate node id " + std::to_string(n.id));
  index_[n.id] = static_cast<int>(nodes_.size());
  nodes_.push_back(n);
  if (n.parent) kids_[*n.parent].push_back(n.id);
  rank_cache_.clear();
}

WfTree WfTree::from_nodes(std::vector<TreeNode> nodes) {
  // Parents must be inserted before children; sort by level to make any
  // topological input order acceptable.
  std::stable_sort(nodes.begin(), nodes.end(),
                   [](const TreeNode& a, const TreeNode& b) { return a.level < b.level; });
  WfTree t;
  for (const auto& n : nodes) {
    if (n.parent) {
      if (!t.contains(*n.parent))
        throw std::invalid_argument("node " + std::to_string(n.id) + ": unknown or cyclic parent");
      const TreeNode& p = t.node(*n.parent);
      if (n.level != p.level + 1)
        throw std::invalid_argument("node " + std::to_string(n.id) + ": level must be parent level + 1");
    } else if (n.level != 0) {
      throw std::invalid_argument("root node " + std::to_string(n.id) + " must have level 0");
    }
    t.link(n);
  }
  for (auto& [id, ch] : t.kids_) std::sort(ch.begin(), ch.end());
  return t;
}

int WfTree::add_root(std::string label) {
  int id = static_cast<int>(nodes_.size());
  link(TreeNode{id, std::nullopt, 0, std::move(label)});
  return id;
}

int WfTree::add_child(int parent, std::string label) {
  if (!contains(parent)) throw std::invalid_argument("unknown parent id");
  int id = static_cast<int>(nodes_.size());
  link(TreeNode{id, parent, node(parent).level + 1, std::move(label)});
  return id;
}

const TreeNode& WfTree::node(int id) const {
  auto it = index_.find(id);
  if (it == index_.end()) throw std::out_of_range("unknown node id " + std::to_string(id));
  return nodes_[it->second];
}

std::vector<int> WfTree::node_ids() const {
  std::vector<int> ids;
  ids.reserve(nodes_.size());
  for (const auto& [id, pos] : index_) ids.push_back(id);
  return ids;
}

std::vector<int> WfTree::children(int id) const {
  auto it = kids_.find(id);
  return it == kids_.end() ? std::vector<int>{} : it->second;
}

std::vector<int> WfTree::roots() const {
  std::vector<int> r;
  for (const auto& n : nodes_)
    if (!n.parent) r.push_back(n.id);
  std::sort(r.begin(), r.end());
  return r;
}

int WfTree::height() const {
  int h = 0;
  for (const auto& n : nodes_) h = std::max(h, n.level + 1);
  return h;
}

bool WfTree::is_strict_ancestor(int a, int b) const {
  const TreeNode* cur = &node(b);
  while (cur->parent) {
    if (*cur->parent == a) return true;
    cur = &node(*cur->parent);
  }
  return false;
}

int WfTree::rank_node(int id) const {
  auto it = rank_cache_.find(id);
  if (it != rank_cache_.end()) return it->second;
  if (!contains(id)) throw std::out_of_range("unknown node id " + std::to_string(id));
  int r = 0;
  for (int c : children(id)) r = std::max(r, rank_node(c) + 1);
  rank_cache_[id] = r;
  return r;
}

int WfTree::rank_tree() const {
  int r = 0;
  for (int root : roots()) r = std::max(r, rank_node(root) + 1);
  return r;
}

WfTree WfTree::subtree(int id) const {
  WfTree out;
  if (!contains(id)) return out;
  int base = node(id).level;
  std::function<void(int, std::optional<int>)> copy = [&](int cur, std::optional<int> parent) {
    const TreeNode& n = node(cur);
    out.link(TreeNode{n.id, parent, n.level - base, n.label});
    for (int c : children(cur)) copy(c, cur);
  };
  copy(id, std::nullopt);
  return out;
}

std::string to_string(MapClass c) {
  switch (c) {
    case MapClass::Embedding: return "Embedding";
    case MapClass::Lipschitz: return "Lipschitz";
    case MapClass::OrderPreserving: return "OrderPreserving";
    case MapClass::None: return "None";
  }
  return "None";
}

MapCheckResult check_map(const WfTree& s, const WfTree& t, const std::map<int, int>& f) {
  MapCheckResult res;
  auto image = [&](int id) {
    auto it = f.find(id);
    if (it == f.end()) throw std::invalid_argument("map not total on source tree");
    if (!t.contains(it->second)) throw std::invalid_argument("map image outside target tree");
    return it->second;
  };

  std::vector<int> ids = s.node_ids();
  bool order = true, iff_order = true, injective = true, levels = true;
  for (std::size_t i = 0; i < ids.size(); ++i) {
    if (t.node(image(ids[i])).level != s.node(ids[i]).level) levels = false;
    for (std::size_t j = 0; j < ids.size(); ++j) {
      if (i == j) continue;
      bool src = s.is_strict_ancestor(ids[i], ids[j]);
      bool dst = t.is_strict_ancestor(image(ids[i]), image(ids[j]));
      if (src && !dst) order = false;
      if (src != dst) iff_order = false;
      if (j > i && image(ids[i]) == image(ids[j])) injective = false;
    }
  }

  res.order_preserving = order;
  res.lipschitz = order && levels;
  res.embedding = injective && iff_order;
  if (res.embedding)
    res.strongest = MapClass::Embedding;
  else if (res.lipschitz)
    res.strongest = MapClass::Lipschitz;
  else if (res.order_preserving)
    res.strongest = MapClass::OrderPreserving;
  else
    res.strongest = MapClass::None;

  if (res.order_preserving) {
    res.rank_bound_checked = true;
    res.rank_bound_holds = s.rank_tree() <= t.rank_tree();
  }
  return res;
}

LevelBoundResult check_level_bound(const WfTree& t, int k, int m) {
  if (m <= k) throw std::invalid_argument("check_level_bound requires m > k");
  LevelBoundResult res;
  res.k = k;
  res.m = m;
  for (int id : t.node_ids())
    if (t.node(id).level == m) res.level_sup = std::max(res.level_sup, t.rank_node(id) + 1);
  int bound = res.level_sup + (m - k - 1);
  for (int id : t.node_ids())
    if (t.node(id).level == k && t.rank_node(id) > bound) res.violations.push_back(id);
  res.holds = res.violations.empty();
  return res;
}

std::map<int, int> ranks_within(const WfTree& t, const std::set<int>& t1) {
  std::map<int, int> rank;
  std::function<int(int)> rec = [&](int id) -> int {
    auto it = rank.find(id);
    if (it != rank.end()) return it->second;
    int r = 0;
    for (int c : t.children(id))
      if (t1.count(c)) r = std::max(r, rec(c) + 1);
    rank[id] = r;
    return r;
  };
  for (int id : t1) rec(id);
  return rank;
}

ConcatBoundResult concat_bound(const WfTree& t, const std::set<int>& t1, int alpha) {
  ConcatBoundResult res;
  res.alpha = alpha;
  for (int id : t1) {
    if (!t.contains(id)) {
      res.precondition_error = "t1 contains unknown node " + std::to_string(id);
      return res;
    }
    const TreeNode& n = t.node(id);
    if (n.parent && !t1.count(*n.parent)) {
      res.precondition_error = "t1 not downward closed at node " + std::to_string(id);
      return res;
    }
  }
  for (int id : t.node_ids()) {
    if (!t1.count(id) && t.rank_node(id) >= alpha) {
      res.precondition_error =
          "node " + std::to_string(id) + " outside t1 has rank >= alpha";
      return res;
    }
  }
  res.precondition_ok = true;

  std::map<int, int> inner = ranks_within(t, t1);
  res.rho_t = t.rank_tree();
  for (const auto& [id, r1] : inner) {
    res.rho_t1 = std::max(res.rho_t1, r1 + 1);
    if (t.rank_node(id) > alpha + r1) res.violations.push_back(id);
  }
  res.holds = res.violations.empty() && res.rho_t <= alpha + res.rho_t1;
  return res;
}

WfRelation WfRelation::create(std::vector<int> elements, std::vector<std::pair<int, int>> edges) {
  WfRelation r;
  std::sort(elements.begin(), elements.end());
  elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
  r.elements_ = std::move(elements);
  std::set<int> elem_set(r.elements_.begin(), r.elements_.end());
  for (auto [x, y] : edges) {
    if (!elem_set.count(x) || !elem_set.count(y))
      throw std::invalid_argument("relation edge mentions unknown element");
    if (r.edges_.insert({x, y}).second) r.below_[y].push_back(x);
  }
  for (auto& [y, xs] : r.below_) std::sort(xs.begin(), xs.end());

  // Cycle detection: a cycle yields an infinite descending R-sequence.
  std::map<int, int> state;  // 0 unseen, 1 on stack, 2 done
  std::function<void(int)> dfs = [&](int x) {
    state[x] = 1;
    for (int y : r.below(x)) {
      int st = state.count(y) ? state[y] : 0;
      if (st == 1) throw std::invalid_argument("relation is not well-founded (cycle found)");
      if (st == 0) dfs(y);
    }
    state[x] = 2;
  };
  for (int x : r.elements_)
    if (!state.count(x)) dfs(x);
  return r;
}

bool WfRelation::related(int x, int y) const { return edges_.count({x, y}) > 0; }

const std::vector<int>& WfRelation::below(int x) const {
  static const std::vector<int> kEmpty;
  auto it = below_.find(x);
  return it == below_.end() ? kEmpty : it->second;
}

int WfRelation::rank_element(int x) const {
  if (!std::binary_search(elements_.begin(), elements_.end(), x))
    throw std::out_of_range("unknown relation element " + std::to_string(x));
  auto it = rank_cache_.find(x);
  if (it != rank_cache_.end()) return it->second;
  int r = 0;
  for (int y : below(x)) r = std::max(r, rank_element(y) + 1);
  rank_cache_[x] = r;
  return r;
}

int WfRelation::rank() const {
  int r = 0;
  for (int x : elements_) r = std::max(r, rank_element(x) + 1);
  return r;
}

WfRelation tree_as_relation(const WfTree& t) {
  std::vector<int> ids = t.node_ids();
  std::vector<std::pair<int, int>> edges;
  for (int b : ids) {
    const TreeNode* cur = &t.node(b);
    while (cur->parent) {
      edges.push_back({b, *cur->parent});  // b R a iff a <_T b
      cur = &t.node(*cur->parent);
    }
  }
  return WfRelation::create(ids, std::move(edges));
}

LexRelationResult build_lex_relation(const WfTree& tb, const std::map<int, WfTree>& phi) {
  for (int s : tb.node_ids())
    if (!phi.count(s)) throw std::invalid_argument("phi missing for tb node " + std::to_string(s));

  std::vector<std::pair<int, int>> pairs;  // (tb node, phi node)
  std::map<std::pair<int, int>, int> id_of;
  for (int s : tb.node_ids()) {
    for (int c : phi.at(s).node_ids()) {
      id_of[{s, c}] = static_cast<int>(pairs.size());
      pairs.push_back({s, c});
    }
  }

  std::vector<int> elements(pairs.size());
  for (std::size_t i = 0; i < pairs.size(); ++i) elements[i] = static_cast<int>(i);
  std::vector<std::pair<int, int>> edges;
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    for (std::size_t j = 0; j < pairs.size(); ++j) {
      auto [t_node, d_node] = pairs[i];
      auto [s_node, c_node] = pairs[j];
      bool rel = tb.is_strict_ancestor(s_node, t_node) ||
                 (s_node == t_node && phi.at(t_node).is_strict_ancestor(c_node, d_node));
      if (rel) edges.push_back({static_cast<int>(i), static_cast<int>(j)});  // (t,D) R (s,C)
    }
  }

  LexRelationResult res{WfRelation::create(std::move(elements), std::move(edges)),
                        std::move(pairs)};
  res.rho_r = res.relation.rank();
  res.rho_tb = tb.rank_tree();
  for (const auto& [s, tree] : phi)
    if (tb.contains(s)) res.sup_phi_rank = std::max(res.sup_phi_rank, tree.rank_tree());
  res.bound_holds = res.rho_r <= res.sup_phi_rank * res.rho_tb;
  return res;
}

}  // namespace ncg
