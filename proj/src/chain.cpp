#include "ncg/chain.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace ncg {

EqChain EqChain::from_partitions(int points, std::vector<std::vector<int>> class_rep) {
  EqChain e;
  e.points = points;
  e.class_rep = std::move(class_rep);
  for (const auto& level : e.class_rep) {
    if (static_cast<int>(level.size()) != points)
      throw std::invalid_argument("partition size mismatch");
    for (int p = 0; p < points; ++p) {
      int r = level[p];
      if (r < 0 || r >= points || level[r] != r || r > p)
        throw std::invalid_argument("partition representative must be the least class member");
    }
  }
  for (std::size_t n = 1; n < e.class_rep.size(); ++n) {
    for (int p = 0; p < points; ++p) {
      for (int q = 0; q < points; ++q) {
        if (e.class_rep[n][p] == e.class_rep[n][q] && e.class_rep[n - 1][p] != e.class_rep[n - 1][q])
          throw std::invalid_argument("partitions do not refine along the chain");
      }
    }
  }
  return e;
}

namespace {

std::vector<int> classes_to_rep_vector(int points, const std::vector<std::vector<int>>& classes) {
  std::vector<int> rep(points, -1);
  for (const auto& cls : classes) {
    int least = *std::min_element(cls.begin(), cls.end());
    for (int p : cls) rep[p] = least;
  }
  return rep;
}

}  // namespace

PermGroupChain PermGroupChain::create(int degree, std::vector<std::vector<Perm>> level_generators,
                                      std::size_t cap) {
  if (level_generators.empty()) throw std::invalid_argument("chain needs at least level 0");
  PermGroupChain c;
  c.group_ = FiniteGroup::enumerate(degree, level_generators[0], cap);
  c.level_gen_perms_ = std::move(level_generators);
  for (std::size_t n = 0; n < c.level_gen_perms_.size(); ++n) {
    std::vector<int> gen_ids;
    for (const auto& p : c.level_gen_perms_[n]) {
      int id = c.group_.id_of(p);
      if (id < 0)
        throw std::invalid_argument("level " + std::to_string(n) +
                                    " generator is not an element of G_0");
      gen_ids.push_back(id);
    }
    std::vector<int> elems = subgroup_closure(c.group_, gen_ids);
    if (n > 0) {
      const std::vector<int>& prev = c.levels_[n - 1];
      for (int e : elems)
        if (!std::binary_search(prev.begin(), prev.end(), e))
          throw std::invalid_argument("level " + std::to_string(n) +
                                      " is not contained in level " + std::to_string(n - 1));
    }
    if (gen_ids.size() > 8) gen_ids = small_generating_set(c.group_, elems);
    c.level_gens_.push_back(std::move(gen_ids));
    c.levels_.push_back(std::move(elems));
  }
  return c;
}

const std::vector<int>& PermGroupChain::level_elements(int n) const {
  if (n < 0 || n > depth()) throw std::out_of_range("chain level out of range");
  return levels_[n];
}

const std::vector<int>& PermGroupChain::level_generator_ids(int n) const {
  if (n < 0 || n > depth()) throw std::out_of_range("chain level out of range");
  return level_gens_[n];
}

bool PermGroupChain::level_contains(int n, int elem) const {
  const auto& lv = level_elements(n);
  return std::binary_search(lv.begin(), lv.end(), elem);
}

const std::vector<int>& PermGroupChain::stabilizer_elements(int n) const {
  auto it = stabilizer_cache_.find(n);
  if (it != stabilizer_cache_.end()) return it->second;
  std::vector<int> elems;
  for (int e = 0; e < group_.order(); ++e) {
    const Perm& p = group_.perm(e);
    bool fixes = true;
    for (int i = 0; i < n && i < degree(); ++i)
      if (p[i] != i) {
        fixes = false;
        break;
      }
    if (fixes) elems.push_back(e);
  }
  return stabilizer_cache_.emplace(n, std::move(elems)).first->second;
}

std::vector<int> PermGroupChain::stabilizer_generator_ids(int n) const {
  return small_generating_set(group_, stabilizer_elements(n));
}

std::vector<std::vector<int>> PermGroupChain::orbit_partition(int level) const {
  NaturalAction x(group_);
  return orbit_partition_of(level_generator_ids(level), x);
}

EqChain PermGroupChain::orbit_chain(const GAction& x) const {
  std::vector<std::vector<int>> reps;
  for (int n = 0; n <= depth(); ++n)
    reps.push_back(classes_to_rep_vector(x.size(), orbit_partition_of(level_generator_ids(n), x)));
  return EqChain::from_partitions(x.size(), std::move(reps));
}

EqChain PermGroupChain::stabilizer_orbit_chain(const GAction& x) const {
  std::vector<std::vector<int>> reps;
  for (int n = 0; n <= depth(); ++n) {
    std::vector<int> gens = small_generating_set(group_, stabilizer_elements(n));
    reps.push_back(classes_to_rep_vector(x.size(), orbit_partition_of(gens, x)));
  }
  return EqChain::from_partitions(x.size(), std::move(reps));
}

std::shared_ptr<const GAction> PermGroupChain::coset_action(int n) const {
  return std::make_shared<CosetAction>(group_, level_elements(n));
}

std::shared_ptr<const GAction> PermGroupChain::coset_space() const {
  std::vector<std::shared_ptr<const GAction>> parts;
  for (int n = 0; n <= depth(); ++n) parts.push_back(coset_action(n));
  return std::make_shared<UnionAction>(std::move(parts));
}

OrbitTree build_orbit_tree(const EqChain& e, bool plus) {
  OrbitTree result;
  std::vector<TreeNode> nodes;
  int next_id = 0;
  // Deterministic ids: levels ascending, class representatives ascending.
  std::map<std::pair<int, int>, int> parent_key;  // (level, rep) of parent
  for (int n = 0; n <= e.depth(); ++n) {
    std::set<int> reps_done;
    for (int p = 0; p < e.points; ++p) {
      int rep = e.class_rep[n][p];
      if (!reps_done.insert(rep).second) continue;
      int size = 0;
      for (int q = 0; q < e.points; ++q)
        if (e.class_rep[n][q] == rep) ++size;
      if (size < 2 && !(plus && n == 0)) continue;
      std::optional<int> parent;
      if (n > 0 && size >= 2) {
        auto it = result.node_of.find({n - 1, e.class_rep[n - 1][rep]});
        if (it == result.node_of.end())
          throw std::logic_error("orbit tree parent missing");
        parent = it->second;
      }
      int id = next_id++;
      TreeNode node;
      node.id = id;
      node.parent = parent;
      node.level = n;
      node.label = "(" + std::to_string(n) + "," + std::to_string(rep) + ")";
      nodes.push_back(node);
      result.node_of[{n, rep}] = id;
    }
  }
  result.tree = WfTree::from_nodes(std::move(nodes));
  return result;
}

namespace {

/// Least-fixed-point computation of the predicate rk(G_a, G_<n>) <= l over
/// the finite cell lattice, following the open-set rank recursion with
/// witnesses restricted to m in [n, depth].
BalancedRankTable compute_rk_table(const PermGroupChain& g) {
  BalancedRankTable t;
  t.depth = g.depth();
  int deg = g.degree();
  int d = g.depth();
  t.rk.assign(deg, std::vector<int>(d + 1, BalancedRankTable::kExceedsTruncation));

  // Orbits of G_<n> on points, as partitions.
  std::vector<std::vector<int>> stab_orbit_rep(d + 1);
  NaturalAction pts(g.group());
  for (int n = 0; n <= d; ++n) {
    std::vector<int> gens = small_generating_set(g.group(), g.stabilizer_elements(n));
    stab_orbit_rep[n] = classes_to_rep_vector(deg, orbit_partition_of(gens, pts));
  }

  // Base case: rk = 0 iff G_<n> fixes a.
  for (int a = 0; a < deg; ++a)
    for (int n = 0; n <= d; ++n) {
      bool fixed = true;
      for (int e : g.stabilizer_elements(n))
        if (g.group().perm(e)[a] != a) {
          fixed = false;
          break;
        }
      if (fixed) t.rk[a][n] = 0;
    }

  // rk <= l iff exists m in [n, d] with rk(G_b, G_<m>) <= l-1 for every b in
  // the G_<n>-orbit of a. Iterate until the closed set stops growing.
  for (int l = 1;; ++l) {
    bool changed = false;
    for (int a = 0; a < deg; ++a) {
      for (int n = 0; n <= d; ++n) {
        if (t.rk[a][n] >= 0) continue;
        for (int m = n; m <= d; ++m) {
          bool all = true;
          for (int b = 0; b < deg; ++b) {
            if (stab_orbit_rep[n][b] != stab_orbit_rep[n][a]) continue;
            if (t.rk[b][m] < 0 || t.rk[b][m] > l - 1) {
              all = false;
              break;
            }
          }
          if (all) {
            t.rk[a][n] = l;
            changed = true;
            break;
          }
        }
      }
    }
    if (!changed) break;
  }
  return t;
}

}  // namespace

BalancedRankTable balanced_rank_table(const PermGroupChain& g) { return compute_rk_table(g); }

RankValue balanced_rank_open(const PermGroupChain& g, int a, int n) {
  if (a < 0 || a >= g.degree()) throw std::out_of_range("point out of range");
  if (n < 0 || n > g.depth()) throw std::out_of_range("chain level out of range");
  BalancedRankTable t = balanced_rank_table(g);
  if (!t.closed(a, n)) return {true, 0};
  return {false, t.rk[a][n]};
}

RankValue balanced_rank_group(const PermGroupChain& g) {
  BalancedRankTable t = balanced_rank_table(g);
  RankValue r;
  for (int a = 0; a < g.degree(); ++a) {
    if (!t.closed(a, 0)) return {true, 0};
    r.value = std::max(r.value, t.rk[a][0] + 1);
  }
  return r;
}

FiniteCaseContext make_finite_case_context(const PermGroupChain& g) {
  FiniteCaseContext ctx;
  ctx.table = balanced_rank_table(g);
  NaturalAction pts(g.group());
  ctx.stab_chain = g.stabilizer_orbit_chain(pts);
  ctx.stab_tree = build_orbit_tree(ctx.stab_chain);
  return ctx;
}

FiniteCaseResult finite_case_check(const PermGroupChain& g, const FiniteCaseContext& ctx,
                                   int a, int n) {
  FiniteCaseResult res;
  if (!ctx.table.closed(a, n)) {
    res.exceeds_truncation = true;
    return res;
  }
  res.rk_le_1 = ctx.table.rk[a][n] <= 1;

  // Direct stabilization: least m <= depth such that G_<m> fixes every b in
  // the G_<n>-orbit of a.
  const EqChain& e = ctx.stab_chain;
  for (int m = n; m <= g.depth(); ++m) {
    bool all_fixed = true;
    for (int b = 0; b < e.points && all_fixed; ++b) {
      if (e.class_rep[n][b] != e.class_rep[n][a]) continue;
      // b is fixed by G_<m> iff its level-m orbit is a singleton.
      for (int q = 0; q < e.points; ++q)
        if (q != b && e.class_rep[m][q] == e.class_rep[m][b]) {
          all_fixed = false;
          break;
        }
    }
    if (all_fixed) {
      res.stabilizes = true;
      res.witness_m = m;
      break;
    }
  }
  res.equivalence_holds = (res.rk_le_1 == res.stabilizes);

  if (res.rk_le_1 && res.stabilizes) {
    auto node = ctx.stab_tree.find(n, e.class_rep[n][a]);
    if (node) {
      res.node_rank = ctx.stab_tree.tree.rank_node(*node);
      res.node_bound_holds = res.node_rank <= std::max(0, res.witness_m - n - 1);
    } else {
      res.node_rank = -1;  // singleton orbit: node absent, bound vacuous
      res.node_bound_holds = true;
    }
  }
  return res;
}

FiniteCaseResult finite_case_check(const PermGroupChain& g, int a, int n) {
  return finite_case_check(g, make_finite_case_context(g), a, n);
}

std::string to_string(TransferClass c) {
  switch (c) {
    case TransferClass::None: return "None";
    case TransferClass::Homomorphism: return "Homomorphism";
    case TransferClass::Reduction: return "Reduction";
    case TransferClass::BijectiveReduction: return "BijectiveReduction";
  }
  return "None";
}

TransferResult reduction_transfer(const EqChain& e1, const EqChain& e2,
                                  const std::vector<int>& theta) {
  if (static_cast<int>(theta.size()) != e1.points)
    throw std::invalid_argument("theta must be total on the first ground set");
  std::set<int> image;
  for (int v : theta) {
    if (v < 0 || v >= e2.points) throw std::invalid_argument("theta image out of range");
    if (!image.insert(v).second) throw std::invalid_argument("theta must be injective");
  }
  if (e1.depth() != e2.depth()) throw std::invalid_argument("chains must have equal depth");

  bool homomorphism = true, reduction = true;
  for (int n = 0; n <= e1.depth(); ++n) {
    for (int p = 0; p < e1.points; ++p) {
      for (int q = 0; q < e1.points; ++q) {
        bool src = e1.class_rep[n][p] == e1.class_rep[n][q];
        bool dst = e2.class_rep[n][theta[p]] == e2.class_rep[n][theta[q]];
        if (src && !dst) homomorphism = false;
        if (src != dst) reduction = false;
      }
    }
  }
  reduction = reduction && homomorphism;
  bool bijective = reduction && static_cast<int>(theta.size()) == e2.points;

  TransferResult res;
  if (bijective)
    res.classification = TransferClass::BijectiveReduction;
  else if (reduction)
    res.classification = TransferClass::Reduction;
  else if (homomorphism)
    res.classification = TransferClass::Homomorphism;
  else
    return res;

  // Induced orbit-tree map: (n, C) -> (n, F_n-class of theta(C)).
  OrbitTree t1 = build_orbit_tree(e1);
  OrbitTree t2 = build_orbit_tree(e2);
  std::map<int, int> f;
  for (const auto& [key, id] : t1.node_of) {
    auto [level, rep] = key;
    auto target = t2.find(level, e2.class_rep[level][theta[rep]]);
    if (!target) {
      // theta injective on a nonsingleton class always lands in a
      // nonsingleton class; reaching here would be a logic error.
      return res;
    }
    f[id] = *target;
  }
  res.tree_map_built = true;
  res.tree_map = check_map(t1.tree, t2.tree, f);
  return res;
}

}  // namespace ncg
