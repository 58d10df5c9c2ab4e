#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ncg/chain.hpp"
#include "ncg/sampling.hpp"

using namespace ncg;

namespace {

PermGroupChain s3_chain() {
  std::vector<std::vector<Perm>> levels(3);
  levels[0] = {Perm{1, 0, 2}, Perm{1, 2, 0}};
  levels[1] = {Perm{0, 2, 1}};
  return PermGroupChain::create(3, std::move(levels));
}

PermGroupChain z2_chain() {
  std::vector<std::vector<Perm>> levels(2);
  levels[0] = {Perm{1, 0}};
  return PermGroupChain::create(2, std::move(levels));
}

}  // namespace

TEST_CASE("chain validation") {
  // A level generator outside the previous level is rejected.
  std::vector<std::vector<Perm>> bad(2);
  bad[0] = {Perm{0, 2, 1}};          // <(12)>, order 2
  bad[1] = {Perm{1, 2, 0}};          // 3-cycle not inside
  CHECK_THROWS(PermGroupChain::create(3, std::move(bad)));

  // Enumeration cap.
  std::vector<std::vector<Perm>> big(1);
  big[0] = {Perm{1, 0, 2, 3, 4, 5, 6}, Perm{1, 2, 3, 4, 5, 6, 0}};
  CHECK_THROWS_AS(PermGroupChain::create(7, std::move(big), 100), CapExceeded);
}

TEST_CASE("orbit partitions of the S3 chain") {
  PermGroupChain c = s3_chain();
  auto level0 = c.orbit_partition(0);
  REQUIRE(level0.size() == 1);
  CHECK(level0[0] == std::vector<int>{0, 1, 2});
  auto level1 = c.orbit_partition(1);
  REQUIRE(level1.size() == 2);
  CHECK(level1[0] == std::vector<int>{0});
  CHECK(level1[1] == std::vector<int>{1, 2});
  auto level2 = c.orbit_partition(2);
  CHECK(level2.size() == 3);
}

TEST_CASE("orbit trees") {
  PermGroupChain c = s3_chain();
  NaturalAction pts(c.group());
  OrbitTree t = build_orbit_tree(c.orbit_chain(pts));
  CHECK(t.tree.size() == 2);
  CHECK(t.tree.rank_tree() == 2);
  CHECK(t.find(0, 0).has_value());
  CHECK(t.find(1, 1).has_value());

  // Discrete partitions give the empty tree.
  EqChain discrete = EqChain::from_partitions(3, {{0, 1, 2}, {0, 1, 2}});
  CHECK(build_orbit_tree(discrete).tree.empty());

  // One class that never splits gives a chain of length depth+1.
  EqChain constant = EqChain::from_partitions(3, {{0, 0, 0}, {0, 0, 0}, {0, 0, 0}});
  OrbitTree ct = build_orbit_tree(constant);
  CHECK(ct.tree.size() == 3);
  CHECK(ct.tree.rank_tree() == 3);

  // The plus variant adds singleton level-0 classes as isolated roots.
  EqChain mixed = EqChain::from_partitions(3, {{0, 1, 1}, {0, 1, 2}});
  OrbitTree plus = build_orbit_tree(mixed, true);
  CHECK(plus.tree.size() == 2);  // singleton {0} plus the {1,2} node
  CHECK(plus.find(0, 0).has_value());
}

TEST_CASE("coset spaces") {
  // Constant chain: one fixed point per level.
  std::vector<std::vector<Perm>> constant(3);
  constant[0] = {Perm{1, 0}};
  constant[1] = {Perm{1, 0}};
  constant[2] = {Perm{1, 0}};
  PermGroupChain cc = PermGroupChain::create(2, std::move(constant));
  CHECK(cc.coset_space()->size() == 3);

  CHECK(s3_chain().coset_space()->size() == 1 + 3 + 6);
  CHECK(z2_chain().coset_space()->size() == 1 + 2);
}

TEST_CASE("balanced rank") {
  PermGroupChain c = s3_chain();
  RankValue r = balanced_rank_open(c, 0, 0);
  CHECK_FALSE(r.exceeds_truncation);
  CHECK(r.value == 1);
  RankValue g = balanced_rank_group(c);
  CHECK(g.value == 2);

  // A point fixed by the whole group has rank 0.
  std::vector<std::vector<Perm>> fix(2);
  fix[0] = {Perm{0, 2, 1}};
  PermGroupChain fc = PermGroupChain::create(3, std::move(fix));
  CHECK(balanced_rank_open(fc, 0, 0).value == 0);

  // Depth-0 chain with a nontrivial orbit cannot close.
  std::vector<std::vector<Perm>> flat(1);
  flat[0] = {Perm{1, 0}};
  PermGroupChain fl = PermGroupChain::create(2, std::move(flat));
  CHECK(balanced_rank_open(fl, 0, 0).exceeds_truncation);
  CHECK(balanced_rank_group(fl).exceeds_truncation);

  // Trivial group on points: every stabilizer already contains the group.
  std::vector<std::vector<Perm>> trivial(2);
  trivial[0] = {};
  PermGroupChain tv = PermGroupChain::create(2, std::move(trivial));
  CHECK(balanced_rank_group(tv).value == 1);

  // Degree 0: empty sup.
  std::vector<std::vector<Perm>> empty_pts(1);
  empty_pts[0] = {};
  PermGroupChain ep = PermGroupChain::create(0, std::move(empty_pts));
  CHECK(balanced_rank_group(ep).value == 0);
}

TEST_CASE("finite case correspondence on the S3 chain") {
  PermGroupChain c = s3_chain();
  FiniteCaseContext ctx = make_finite_case_context(c);

  FiniteCaseResult r = finite_case_check(c, ctx, 0, 0);
  CHECK_FALSE(r.exceeds_truncation);
  CHECK(r.rk_le_1);
  CHECK(r.stabilizes);
  CHECK(r.equivalence_holds);
  CHECK(r.witness_m == 2);  // G_<2> is trivial, G_<1> still moves 1 and 2
  CHECK(r.node_rank == 1);
  CHECK(r.node_bound_holds);  // 1 <= max{0, 2-0-1}

  // A fixed point: rank 0 and no tree node.
  std::vector<std::vector<Perm>> fix(2);
  fix[0] = {Perm{0, 2, 1}};
  PermGroupChain fc = PermGroupChain::create(3, std::move(fix));
  FiniteCaseContext fctx = make_finite_case_context(fc);
  FiniteCaseResult fr = finite_case_check(fc, fctx, 0, 0);
  CHECK(fr.rk_le_1);
  CHECK(fr.node_rank == -1);
  CHECK(fr.node_bound_holds);
  CHECK(fr.equivalence_holds);
}

TEST_CASE("finite case correspondence on random chains") {
  Rng rng(11);
  for (int i = 0; i < 40; ++i) {
    PermGroupChain c = random_chain(rng, 8, 5, 2000);
    FiniteCaseContext ctx = make_finite_case_context(c);
    for (int a = 0; a < c.degree(); ++a)
      for (int n = 0; n <= c.depth(); ++n) {
        FiniteCaseResult r = finite_case_check(c, ctx, a, n);
        if (r.exceeds_truncation) continue;
        CHECK(r.equivalence_holds);
        CHECK(r.node_bound_holds);
      }
  }
}

TEST_CASE("reduction transfer") {
  PermGroupChain c = s3_chain();
  NaturalAction pts(c.group());
  EqChain e = c.orbit_chain(pts);

  // Identity map: isomorphism.
  TransferResult id = reduction_transfer(e, e, {0, 1, 2});
  CHECK(id.classification == TransferClass::BijectiveReduction);
  CHECK(id.tree_map_built);
  CHECK(id.tree_map.strongest == MapClass::Embedding);
  CHECK(id.tree_map.lipschitz);

  // Inclusion of a saturated subset: a (Lipschitz) reduction.
  EqChain sub = EqChain::from_partitions(2, {{0, 0}, {0, 1}});
  EqChain whole = EqChain::from_partitions(4, {{0, 0, 2, 2}, {0, 1, 2, 3}});
  TransferResult incl = reduction_transfer(sub, whole, {0, 1});
  CHECK(incl.classification == TransferClass::Reduction);
  CHECK(incl.tree_map_built);
  CHECK(incl.tree_map.lipschitz);

  // Coarsening merges classes: homomorphism only; an order-preserving map
  // still exists.
  EqChain fine = EqChain::from_partitions(4, {{0, 0, 2, 2}, {0, 1, 2, 3}});
  EqChain coarse = EqChain::from_partitions(4, {{0, 0, 0, 0}, {0, 0, 2, 2}});
  TransferResult hom = reduction_transfer(fine, coarse, {0, 1, 2, 3});
  CHECK(hom.classification == TransferClass::Homomorphism);
  CHECK(hom.tree_map_built);
  CHECK(hom.tree_map.order_preserving);

  // Non-injective maps are rejected.
  CHECK_THROWS(reduction_transfer(e, e, std::vector<int>{0, 0, 1}));
}
