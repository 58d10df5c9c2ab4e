#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ncg/sampling.hpp"
#include "ncg/tree.hpp"
#include "oracles.hpp"

using namespace ncg;

namespace {

WfTree chain_tree(int length) {
  WfTree t;
  int cur = t.add_root();
  for (int i = 1; i < length; ++i) cur = t.add_child(cur);
  return t;
}

}  // namespace

TEST_CASE("node ranks") {
  WfTree t = chain_tree(3);
  CHECK(t.rank_node(0) == 2);
  CHECK(t.rank_node(2) == 0);

  WfTree single;
  single.add_root();
  CHECK(single.rank_node(0) == 0);

  // A node whose children have ranks {0, 1} has rank 2.
  WfTree mixed;
  int r = mixed.add_root();
  mixed.add_child(r);
  int c2 = mixed.add_child(r);
  mixed.add_child(c2);
  CHECK(mixed.rank_node(r) == 2);
}

TEST_CASE("tree rank") {
  CHECK(WfTree().rank_tree() == 0);  // rho(T) = 0 iff T empty
  WfTree single;
  single.add_root();
  CHECK(single.rank_tree() == 1);
  WfTree two;
  two.add_root();
  int b = two.add_root();
  two.add_child(b);
  CHECK(two.rank_tree() == 2);
}

TEST_CASE("subtree") {
  WfTree t = chain_tree(4);
  CHECK(t.subtree(99).empty());
  WfTree whole = t.subtree(0);
  CHECK(whole.size() == 4);
  CHECK(whole.rank_tree() == t.rank_node(0) + 1);
  WfTree leaf = t.subtree(3);
  CHECK(leaf.size() == 1);
  CHECK(leaf.rank_tree() == 1);
  CHECK(leaf.node(3).level == 0);
}

TEST_CASE("construction validates levels and parents") {
  CHECK_THROWS(WfTree::from_nodes({{0, std::nullopt, 1, ""}}));
  CHECK_THROWS(WfTree::from_nodes({{0, std::nullopt, 0, ""}, {1, 0, 2, ""}}));
  CHECK_THROWS(WfTree::from_nodes({{0, 1, 1, ""}, {1, 0, 1, ""}}));
  WfTree ok = WfTree::from_nodes({{5, std::nullopt, 0, "r"}, {9, 5, 1, "c"}});
  CHECK(ok.size() == 2);
  CHECK(ok.node(9).parent == 5);
}

TEST_CASE("level bound of the rank function") {
  WfTree t = chain_tree(5);
  CHECK(check_level_bound(t, 0, 2).holds);
  // Empty L_m: the bound degenerates to m-k-1 and still holds.
  CHECK(check_level_bound(t, 0, 7).holds);
  CHECK(check_level_bound(t, 2, 8).holds);
  CHECK_THROWS(check_level_bound(t, 2, 2));

  Rng rng(5);
  for (int i = 0; i < 200; ++i) {
    WfTree tr = random_tree(rng, 100);
    int k = rng.uniform(0, tr.height() - 1);
    int m = k + 1 + rng.uniform(0, 4);
    CHECK(check_level_bound(tr, k, m).holds);
  }
}

TEST_CASE("concatenation bound") {
  WfTree t = chain_tree(4);
  std::vector<int> ids = t.node_ids();
  std::set<int> all(ids.begin(), ids.end());
  ConcatBoundResult r = concat_bound(t, all, 0);
  CHECK(r.precondition_ok);
  CHECK(r.holds);
  CHECK(r.rho_t1 == r.rho_t);  // alpha = 0 and T1 = T force equality

  // Roots only, alpha = max outside rank + 1.
  std::vector<int> root_ids = t.roots();
  std::set<int> roots(root_ids.begin(), root_ids.end());
  int alpha = 0;
  for (int id : t.node_ids())
    if (!roots.count(id)) alpha = std::max(alpha, t.rank_node(id) + 1);
  CHECK(concat_bound(t, roots, alpha).holds);

  // Violated preconditions are reported, not asserted through.
  ConcatBoundResult bad = concat_bound(t, {1}, 100);
  CHECK_FALSE(bad.precondition_ok);
  CHECK_FALSE(bad.precondition_error.empty());

  Rng rng(6);
  for (int i = 0; i < 200; ++i) {
    WfTree tr = random_tree(rng, 100);
    std::set<int> t1 = random_downward_closed(rng, tr);
    int a = 0;
    for (int id : tr.node_ids())
      if (!t1.count(id)) a = std::max(a, tr.rank_node(id) + 1);
    ConcatBoundResult rr = concat_bound(tr, t1, a);
    CHECK(rr.precondition_ok);
    CHECK(rr.holds);
  }
}

TEST_CASE("map classification") {
  WfTree t = chain_tree(3);
  std::map<int, int> identity{{0, 0}, {1, 1}, {2, 2}};
  MapCheckResult id_check = check_map(t, t, identity);
  CHECK(id_check.strongest == MapClass::Embedding);
  CHECK(id_check.lipschitz);
  CHECK(id_check.rank_bound_holds);

  // Constant map on a 2-chain is not order preserving.
  WfTree two = chain_tree(2);
  std::map<int, int> constant{{0, 0}, {1, 0}};
  CHECK(check_map(two, two, constant).strongest == MapClass::None);

  // A level-preserving injection of a subchain is Lipschitz.
  WfTree big;
  int r0 = big.add_root();
  int c1 = big.add_child(r0);
  big.add_child(c1);
  int r1 = big.add_root();
  big.add_child(r1);
  WfTree sub = chain_tree(2);
  std::map<int, int> inject{{0, r0}, {1, c1}};
  MapCheckResult sub_check = check_map(sub, big, inject);
  CHECK(sub_check.lipschitz);
  CHECK(sub_check.rank_bound_holds);
}

TEST_CASE("well-founded relations") {
  WfRelation empty_edges = WfRelation::create({1, 2, 3}, {});
  CHECK(empty_edges.rank_element(1) == 0);
  CHECK(empty_edges.rank() == 1);

  // Linear order on 4 elements: the top has rank 3.
  WfRelation line = WfRelation::create({0, 1, 2, 3}, {{0, 1}, {1, 2}, {2, 3}, {0, 2}, {0, 3}, {1, 3}});
  CHECK(line.rank_element(3) == 3);
  CHECK(line.rank() == 4);

  CHECK_THROWS(WfRelation::create({0, 1}, {{0, 1}, {1, 0}}));
  CHECK_THROWS(line.rank_element(99));

  Rng rng(7);
  for (int i = 0; i < 100; ++i) {
    WfTree t = random_tree(rng, 60);
    WfRelation rel = tree_as_relation(t);
    for (int id : t.node_ids()) CHECK(rel.rank_element(id) == t.rank_node(id));
  }
}

TEST_CASE("ranks against the full-descendant oracle") {
  Rng rng(8);
  for (int i = 0; i < 200; ++i) {
    WfTree t = random_tree(rng, 120);
    auto oracle = ncg::testing::full_descendant_ranks(t);
    for (int id : t.node_ids()) CHECK(t.rank_node(id) == oracle.at(id));
  }
}

TEST_CASE("lexicographic relation and its rank bound") {
  // Single node with a single-node attachment.
  WfTree tb1;
  tb1.add_root();
  std::map<int, WfTree> phi1;
  WfTree p1;
  p1.add_root();
  phi1.emplace(0, p1);
  LexRelationResult r1 = build_lex_relation(tb1, phi1);
  CHECK(r1.rho_r == 1);
  CHECK(r1.bound_holds);

  // Chain of 2 with constant chain-of-2 attachments: rho(R) <= 2*2.
  WfTree tb2 = chain_tree(2);
  std::map<int, WfTree> phi2;
  phi2.emplace(0, chain_tree(2));
  phi2.emplace(1, chain_tree(2));
  LexRelationResult r2 = build_lex_relation(tb2, phi2);
  CHECK(r2.rho_r <= 4);
  CHECK(r2.bound_holds);

  Rng rng(9);
  for (int i = 0; i < 150; ++i) {
    WfTree tb = random_tree(rng, 9);
    std::map<int, WfTree> phi;
    for (int s : tb.node_ids()) phi.emplace(s, random_tree(rng, 7));
    CHECK(build_lex_relation(tb, phi).bound_holds);
  }
}
