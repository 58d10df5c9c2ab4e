#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>

#include "ncg/constructions.hpp"
#include "ncg/extension.hpp"
#include "ncg/sampling.hpp"

using namespace ncg;

namespace {

PermGroupChain z2_chain(int depth = 1) {
  std::vector<std::vector<Perm>> levels(depth + 1);
  levels[0] = {Perm{1, 0}};
  return PermGroupChain::create(2, std::move(levels));
}

PermGroupChain z3_chain(int depth = 1) {
  std::vector<std::vector<Perm>> levels(depth + 1);
  levels[0] = {Perm{1, 2, 0}};
  return PermGroupChain::create(3, std::move(levels));
}

ActionTable inversion_action(const PermGroupChain& g, const PermGroupChain& h) {
  std::vector<std::vector<int>> table(g.group().order(), std::vector<int>(h.group().order()));
  for (int x = 0; x < g.group().order(); ++x)
    for (int y = 0; y < h.group().order(); ++y)
      table[x][y] = x == 0 ? y : h.group().inv(y);
  return ActionTable::create(g.group(), h.group(), std::move(table));
}

std::vector<int> element_order_multiset(const FiniteGroup& g) {
  std::vector<int> orders;
  for (int e = 0; e < g.order(); ++e) {
    int cur = e, ord = 1;
    while (cur != 0) {
      cur = g.mul(cur, e);
      ++ord;
    }
    orders.push_back(ord);
  }
  std::sort(orders.begin(), orders.end());
  return orders;
}

}  // namespace

TEST_CASE("action table validation") {
  PermGroupChain g = z2_chain(), h = z3_chain();
  // rho(1) must be the identity.
  std::vector<std::vector<int>> bad1(2, std::vector<int>{1, 2, 0});
  CHECK_THROWS(ActionTable::create(g.group(), h.group(), bad1));
  // Each rho(x) must be an automorphism: a transposition of Z3's nonzero
  // elements is one (inversion), but swapping 0 and 1 is not.
  std::vector<std::vector<int>> bad2{{0, 1, 2}, {1, 0, 2}};
  CHECK_THROWS(ActionTable::create(g.group(), h.group(), bad2));
  CHECK_NOTHROW(inversion_action(g, h));
}

TEST_CASE("semidirect with trivial action is the direct product") {
  PermGroupChain g = z2_chain(), h = z3_chain();
  SemidirectProduct a = semidirect(g, h, ActionTable::trivial(g.group(), h.group()));
  CHECK(a.chain.group().order() == 6);
  CHECK(element_order_multiset(a.chain.group()) == std::vector<int>{1, 2, 3, 3, 6, 6});
}

TEST_CASE("Z2 acting on Z3 by inversion is S3") {
  PermGroupChain g = z2_chain(), h = z3_chain();
  SemidirectProduct a = semidirect(g, h, inversion_action(g, h));
  CHECK(a.chain.group().order() == 6);
  CHECK(element_order_multiset(a.chain.group()) == std::vector<int>{1, 2, 2, 2, 3, 3});
}

TEST_CASE("closure failure carries a witness pair") {
  // H = Z2 x Z2 on four points, H_1 the first factor; G = Z2 swaps the two
  // factors, so rho(G_1)(H_1) leaves H_1.
  std::vector<std::vector<Perm>> glv(2);
  glv[0] = {Perm{1, 0}};
  glv[1] = {Perm{1, 0}};
  PermGroupChain g = PermGroupChain::create(2, std::move(glv));
  std::vector<std::vector<Perm>> hlv(2);
  hlv[0] = {Perm{1, 0, 2, 3}, Perm{0, 1, 3, 2}};
  hlv[1] = {Perm{1, 0, 2, 3}};
  PermGroupChain h = PermGroupChain::create(4, std::move(hlv));

  // The swap automorphism exchanges the two generators.
  std::vector<std::vector<int>> table(2, std::vector<int>(4));
  for (int y = 0; y < 4; ++y) table[0][y] = y;
  int first = h.group().id_of(Perm{1, 0, 2, 3});
  int second = h.group().id_of(Perm{0, 1, 3, 2});
  int both = h.group().mul(first, second);
  table[1][0] = 0;
  table[1][first] = second;
  table[1][second] = first;
  table[1][both] = both;
  ActionTable rho = ActionTable::create(g.group(), h.group(), std::move(table));

  try {
    semidirect(g, h, rho);
    FAIL("closure failure expected");
  } catch (const ClosureError& e) {
    CHECK(e.level == 1);
    CHECK(h.level_contains(1, e.h_elem));
    CHECK_FALSE(h.level_contains(1, rho.apply(e.g_elem, e.h_elem)));
  }
}

TEST_CASE("coset-fixing condition") {
  PermGroupChain g = z2_chain(), h = z3_chain();
  CHECK(check_condition_41(g, h, ActionTable::trivial(g.group(), h.group()), 0).holds);
  CHECK(check_condition_41(g, h, ActionTable::trivial(g.group(), h.group()), 1).holds);

  // Inversion on Z3 with H_1 trivial: y H_1 = {y} moves, so the condition
  // fails at level 1 when G_1 is still the full Z2.
  std::vector<std::vector<Perm>> glv(2);
  glv[0] = {Perm{1, 0}};
  glv[1] = {Perm{1, 0}};
  PermGroupChain g2 = PermGroupChain::create(2, std::move(glv));
  Condition41Result r = check_condition_41(g2, z3_chain(), inversion_action(g2, z3_chain()), 1);
  CHECK_FALSE(r.holds);
  CHECK_FALSE(r.violations.empty());

  // Wreath products satisfy it at every level.
  WreathParts parts = wreath_parts(z2_chain(), z2_chain());
  for (int lvl = 0; lvl <= std::min(parts.top.depth(), parts.bottom.depth()); ++lvl)
    CHECK(check_condition_41(parts.top, parts.bottom, parts.rho, lvl).holds);
}

TEST_CASE("T1 node ranks match the base orbit tree") {
  PermGroupChain g = z2_chain(), h = z3_chain();
  ActionTable rho = inversion_action(g, h);
  SemidirectProduct a = semidirect(g, h, rho);
  for (int n = 0; n <= 1; ++n) {
    T1RankResult r = check_t1_rank_equality(a, g, h, rho, n);
    CHECK(r.precondition_ok);
    CHECK(r.node_ranks_equal);
    CHECK(r.concat_shadow_holds);
    CHECK(r.rho_t1 == r.rho_s);
  }

  WreathParts parts = wreath_parts(z2_chain(), z2_chain());
  SemidirectProduct w = semidirect(parts.top, parts.bottom, parts.rho);
  T1RankResult wr = check_t1_rank_equality(w, parts.top, parts.bottom, parts.rho, 1);
  CHECK(wr.precondition_ok);
  CHECK(wr.node_ranks_equal);
  CHECK(wr.concat_shadow_holds);
}

TEST_CASE("wreath product structure") {
  SemidirectProduct w = wreath(z2_chain(), z2_chain());
  CHECK(w.chain.group().order() == 8);
  CHECK(w.chain.depth() == 1);

  // A deeper bottom chain deepens the product chain up to the coordinate
  // count.
  SemidirectProduct w2 = wreath(z2_chain(2), z2_chain(2));
  CHECK(w2.chain.group().order() == 8);
  CHECK(w2.chain.depth() == 2);
  CHECK(w2.chain.level_elements(2).size() == 1);
  // Dihedral of order 8: exactly two elements of order 4.
  CHECK(element_order_multiset(w.chain.group()) == std::vector<int>{1, 2, 2, 2, 2, 2, 4, 4});

  // Trivial top group: just H^k with the product chain.
  std::vector<std::vector<Perm>> tlv(2);
  tlv[0] = {perm_identity(2)};
  PermGroupChain trivial = PermGroupChain::create(2, std::move(tlv));
  SemidirectProduct hk = wreath(trivial, z2_chain());
  CHECK(hk.chain.group().order() == 4);
  CHECK(element_order_multiset(hk.chain.group()) == std::vector<int>{1, 2, 2, 2});
}

TEST_CASE("Cayley table validation") {
  CHECK_THROWS(CayleyTable::create(2, {{0, 1}, {1, 1}}));
  std::vector<std::vector<int>> assoc_broken{{0, 1, 2}, {1, 2, 0}, {2, 1, 0}};
  CHECK_THROWS(CayleyTable::create(3, assoc_broken));
  CayleyTable z4 = cyclic_table(4);
  CHECK(z4.identity == 0);
  CHECK(z4.inv(1) == 3);
}

TEST_CASE("countable semidirect rank shift") {
  // G = Aut(Z5), a 4-element cyclic group; the A-tree gains exactly one
  // level over the G-tree.
  CayleyTable z5 = cyclic_table(5);
  std::vector<Perm> autos = automorphisms_of(z5);
  CHECK(autos.size() == 4);
  PermGroupChain g = stabilizer_chain_of(autos, 5, 2);
  CountableSemidirectResult r = countable_semidirect(z5, g);
  CHECK(r.phi_homomorphism);
  CHECK(r.phi_injective);
  CHECK(r.a_chain.group().order() == 4 * 5);
  CHECK(r.shift_asserted);
  CHECK(r.shift_holds);
  CHECK(r.rho_ta == r.rho_tg + 1);

  // G = Aut(Z2 x Z2), isomorphic to S3.
  CayleyTable klein = product_table(cyclic_table(2), cyclic_table(2));
  std::vector<Perm> kautos = automorphisms_of(klein);
  CHECK(kautos.size() == 6);
  PermGroupChain kg = stabilizer_chain_of(kautos, 4, 3);
  CountableSemidirectResult kr = countable_semidirect(klein, kg);
  CHECK(kr.phi_homomorphism);
  CHECK(kr.phi_injective);
  CHECK(kr.shift_asserted);
  CHECK(kr.shift_holds);

  // Trivial G on Z2: the G-tree is empty, the identity is vacuous.
  std::vector<std::vector<Perm>> tlv(2);
  tlv[0] = {perm_identity(2)};
  PermGroupChain trivial = PermGroupChain::create(2, std::move(tlv));
  CountableSemidirectResult tr = countable_semidirect(cyclic_table(2), trivial);
  CHECK(tr.g_tree_empty);
  CHECK_FALSE(tr.shift_asserted);
  CHECK(tr.rho_ta == 1);

  // A non-automorphism generator is rejected.
  std::vector<std::vector<Perm>> blv(2);
  blv[0] = {Perm{0, 2, 3, 4, 1}};  // cycles nonzero elements of Z5: not additive
  PermGroupChain bad = PermGroupChain::create(5, std::move(blv));
  CHECK_THROWS(countable_semidirect(z5, bad));
}

TEST_CASE("symbolic rank bounds") {
  CHECK(rank_bound(BoundKind::Extension, Ordinal::natural(1), Ordinal::natural(1))
            .bound.to_string() == "w+1");
  CHECK(rank_bound(BoundKind::SemidirectPositive, Ordinal(), Ordinal::parse("w^2+3"))
            .bound.to_string() == "w^2+3");
  CHECK(rank_bound(BoundKind::Wreath, Ordinal::omega(), Ordinal::natural(2)).bound.to_string() ==
        "w");
  CHECK(rank_bound(BoundKind::Extension, Ordinal::parse("2"), Ordinal::parse("1"))
            .bound.to_string() == "w*2+1");
}
