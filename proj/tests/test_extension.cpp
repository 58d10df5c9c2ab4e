#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ncg/extension.hpp"
#include "ncg/json_io.hpp"
#include "ncg/sampling.hpp"

using namespace ncg;

namespace {

PermGroupChain s3_chain() {
  std::vector<std::vector<Perm>> levels(3);
  levels[0] = {Perm{1, 0, 2}, Perm{1, 2, 0}};
  levels[1] = {Perm{0, 2, 1}};
  return PermGroupChain::create(3, std::move(levels));
}

const std::vector<Perm> kA3 = {Perm{1, 2, 0}};

}  // namespace

TEST_CASE("instance validation") {
  // Non-normal subgroups are rejected: <(01)> in S3.
  CHECK_THROWS(ExtensionInstance::create(s3_chain(), {Perm{1, 0, 2}}));
  // N_n is recomputed as G_n intersect N.
  ExtensionInstance inst = ExtensionInstance::create(s3_chain(), kA3, XSetSpec::points());
  CHECK(inst.n_elements().size() == 3);
  CHECK(inst.n_level_elements(0).size() == 3);
  CHECK(inst.n_level_elements(1).size() == 1);  // A3 meets <(12)> trivially
  CHECK(inst.n_level_elements(2).size() == 1);
}

TEST_CASE("s values") {
  ExtensionInstance inst = ExtensionInstance::create(s3_chain(), kA3, XSetSpec::points());
  // A3 is already transitive on the points: s = 0.
  RankValue s = inst.s_value(0, 0);
  CHECK_FALSE(s.exceeds_truncation);
  CHECK(s.value == 0);

  // A global fixed point has s = 0 at every level.
  std::vector<std::vector<Perm>> fix(2);
  fix[0] = {Perm{0, 2, 1}};
  ExtensionInstance fixed = ExtensionInstance::create(
      PermGroupChain::create(3, std::move(fix)), {}, XSetSpec::points());
  CHECK(fixed.s_value(0, 0).value == 0);
  CHECK(fixed.s_value(0, 1).value == 0);

  // Trivial N with a chain that stops moving x only at level 2: s = 2.
  std::vector<std::vector<Perm>> crafted(4);
  crafted[0] = {Perm{1, 0, 2}, Perm{1, 2, 0}};
  crafted[1] = {Perm{1, 0, 2}, Perm{1, 2, 0}};
  crafted[2] = {Perm{0, 2, 1}};
  ExtensionInstance deep = ExtensionInstance::create(
      PermGroupChain::create(3, std::move(crafted)), {}, XSetSpec::points());
  RankValue s0 = deep.s_value(0, 0);
  CHECK_FALSE(s0.exceeds_truncation);
  CHECK(s0.value == 2);
  CHECK(deep.q_sequence(0).q[1] == 2);
}

TEST_CASE("q sequences") {
  // x fixed by the whole group: every s value is 0 and q ticks by one.
  std::vector<std::vector<Perm>> fix(3);
  fix[0] = {Perm{0, 2, 1}};
  fix[1] = {Perm{0, 2, 1}};
  ExtensionInstance fixed = ExtensionInstance::create(
      PermGroupChain::create(3, std::move(fix)), {}, XSetSpec::points());
  const auto& seq = fixed.q_sequence(0);
  REQUIRE(seq.q.size() >= 3);
  CHECK(seq.q[0] == 0);
  CHECK(seq.q[1] == 1);
  CHECK(seq.q[2] == 2);

  ExtensionInstance inst = ExtensionInstance::create(s3_chain(), kA3, XSetSpec::points());
  const auto& sq = inst.q_sequence(0);
  CHECK(sq.q[0] == 0);
  CHECK(sq.q[1] == 1);  // s = 0, so the step is max{0,1} = 1
}

TEST_CASE("T_B construction") {
  // Trivial N: only the artificial root.
  ExtensionInstance trivial_n =
      ExtensionInstance::create(s3_chain(), {}, XSetSpec::points());
  TbResult tb0 = build_tb(trivial_n);
  CHECK(tb0.tree.size() == 1);
  CHECK(tb0.rho_tb == 1);
  CHECK(tb0.rank_bound_holds);

  // N = G = Z2 on two points: the root plus one genuine node.
  std::vector<std::vector<Perm>> z2(2);
  z2[0] = {Perm{1, 0}};
  ExtensionInstance full = ExtensionInstance::create(
      PermGroupChain::create(2, std::move(z2)), {Perm{1, 0}}, XSetSpec::points());
  TbResult tb1 = build_tb(full);
  CHECK(tb1.tree.size() == 2);
  CHECK(tb1.node_of.count({0, 0}) == 1);
  CHECK(tb1.rho_tb == 2);

  // S3 / A3 on the cosets of G_2: two A3-orbits of size 3 under the root.
  ExtensionInstance cosets =
      ExtensionInstance::create(s3_chain(), kA3, XSetSpec::coset_level(2));
  TbResult tb2 = build_tb(cosets);
  CHECK(tb2.tree.size() == 3);
  CHECK(tb2.rho_tb == 2);
  CHECK(tb2.rank_bound_holds);
}

TEST_CASE("Phi trees") {
  // N = G: the quotient is a point, Phi(root) is one singleton root.
  std::vector<std::vector<Perm>> z2(2);
  z2[0] = {Perm{1, 0}};
  ExtensionInstance full = ExtensionInstance::create(
      PermGroupChain::create(2, std::move(z2)), {Perm{1, 0}}, XSetSpec::points());
  TbResult tb = build_tb(full);
  PhiResult root_phi = build_phi(full, tb, 0);
  CHECK(root_phi.tree.size() == 1);
  CHECK(root_phi.tree.rank_tree() == 1);
  CHECK(root_phi.well_defined);

  // Trivial N: Phi(root) is the plus-variant of the G orbit tree on X.
  ExtensionInstance trivial_n =
      ExtensionInstance::create(s3_chain(), {}, XSetSpec::points());
  TbResult tb2 = build_tb(trivial_n);
  PhiResult phi2 = build_phi(trivial_n, tb2, 0);
  NaturalAction pts(trivial_n.g().group());
  OrbitTree plus = build_orbit_tree(trivial_n.g().orbit_chain(pts), true);
  CHECK(phi2.tree.size() == plus.tree.size());
  CHECK(phi2.tree.rank_tree() == plus.tree.rank_tree());

  // S3 / A3: genuine node Phi computes and is well defined.
  ExtensionInstance inst = ExtensionInstance::create(s3_chain(), kA3, XSetSpec::points());
  TbResult tb3 = build_tb(inst);
  REQUIRE(tb3.tree.size() >= 2);
  for (int id : tb3.tree.node_ids()) {
    PhiResult phi = build_phi(inst, tb3, id);
    CHECK(phi.well_defined);
  }
}

TEST_CASE("psi and the rank bounds") {
  // Single-point X: no nonsingleton orbits, empty psi, bounds trivial.
  std::vector<std::vector<Perm>> z2(2);
  z2[0] = {Perm{1, 0}};
  ExtensionInstance single = ExtensionInstance::create(
      PermGroupChain::create(2, std::move(z2)), {}, XSetSpec::coset_level(0));
  ExtensionReport r0 = extension_bound_check(single);
  CHECK(r0.complete);
  CHECK(r0.psi.all_ok());
  CHECK(r0.rho_tgx == 0);
  CHECK(r0.chain_holds);

  // S3 / A3 with the default coset space.
  ExtensionInstance inst = ExtensionInstance::create(s3_chain(), kA3);
  ExtensionReport r = extension_bound_check(inst);
  CHECK(r.complete);
  CHECK(r.phi_well_defined);
  CHECK(r.psi.all_ok());
  CHECK(r.chain_holds);
  CHECK(r.rhs_bound_holds);
  CHECK(r.tb.rank_bound_holds);

  // G = N rejected.
  std::vector<std::vector<Perm>> z2b(2);
  z2b[0] = {Perm{1, 0}};
  ExtensionInstance gn = ExtensionInstance::create(
      PermGroupChain::create(2, std::move(z2b)), {Perm{1, 0}}, XSetSpec::points());
  CHECK(extension_bound_check(gn).g_equals_n);
}

TEST_CASE("random instances pass the pipeline") {
  Rng rng(31);
  int complete = 0;
  for (int i = 0; i < 25; ++i) {
    PermGroupChain g = random_chain(rng, 6, 3, 200);
    std::vector<Perm> n_gens = random_normal_subgroup(rng, g);
    ExtensionInstance inst = ExtensionInstance::create(std::move(g), n_gens);
    if (inst.g_equals_n()) continue;
    ExtensionReport r = extension_bound_check(inst);
    if (!r.complete) continue;
    ++complete;
    CHECK(r.psi.all_ok());
    CHECK(r.phi_well_defined);
    CHECK(r.chain_holds);
    CHECK(r.rhs_bound_holds);
  }
  CHECK(complete > 0);
}

TEST_CASE("quotient isomorphism") {
  // N trivial: both quotients are H itself.
  QuotientIsoResult t = quotient_iso_check(s3_chain(), {}, 1);
  CHECK(t.canonical_iso);
  CHECK(t.search_found_iso);
  CHECK(t.hn_mod_n_order == 2);

  // H = G: both sides are G/N.
  QuotientIsoResult gq = quotient_iso_check(s3_chain(), kA3, 0);
  CHECK(gq.canonical_iso);
  CHECK(gq.hn_mod_n_order == 2);

  // H = <(12)>, N = A3: both quotients are Z2.
  QuotientIsoResult hq = quotient_iso_check(s3_chain(), kA3, 1);
  CHECK(hq.canonical_iso);
  CHECK(hq.search_found_iso);
  CHECK(hq.hn_mod_n_order == 2);
  CHECK(hq.h_mod_hn_order == 2);
}

TEST_CASE("cayley isomorphism search is sound") {
  CayleyTable z4 = cyclic_table(4);
  CayleyTable klein = product_table(cyclic_table(2), cyclic_table(2));
  CHECK(cayley_isomorphic(z4.table, z4.table));
  CHECK_FALSE(cayley_isomorphic(z4.table, klein.table));
  CHECK(cayley_isomorphic(product_table(cyclic_table(2), cyclic_table(3)).table,
                          cyclic_table(6).table));
}

TEST_CASE("extension instance JSON round trip") {
  nlohmann::json j = {
      {"g", {{"degree", 3},
             {"levels",
              {{{"generators", {{1, 0, 2}, {1, 2, 0}}}},
               {{"generators", {{0, 2, 1}}}},
               {{"generators", nlohmann::json::array()}}}}}},
      {"n_generators", {{1, 2, 0}}},
      {"x_set", "coset_space"},
  };
  ExtensionInstance inst = extension_instance_from_json(j);
  CHECK(inst.x().size() == 10);
  CHECK(inst.n_elements().size() == 3);

  // Explicit action table: one permutation of the points per generator;
  // the full pipeline runs on it.
  nlohmann::json j2 = j;
  j2["x_set"] = {{"points", 3}, {"generators", {{1, 0, 2}, {1, 2, 0}}}};
  ExtensionInstance inst2 = extension_instance_from_json(j2);
  CHECK(inst2.x().size() == 3);
  ExtensionReport r2 = extension_bound_check(inst2);
  CHECK(r2.complete);
  CHECK(r2.psi.all_ok());
  CHECK(r2.chain_holds);
  CHECK(r2.rhs_bound_holds);

  // An ill-defined action is rejected: map both generators to the same
  // transposition so relations of the group are not respected.
  nlohmann::json j3 = j;
  j3["x_set"] = {{"points", 2}, {"generators", {{1, 0}, {1, 0}}}};
  CHECK_THROWS(extension_instance_from_json(j3));
}
