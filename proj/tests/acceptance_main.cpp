// Acceptance suite: one timed pass/fail line per criterion, nonzero exit
// when any criterion fails or overruns its budget.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "ncg/chain.hpp"
#include "ncg/constructions.hpp"
#include "ncg/extension.hpp"
#include "ncg/sampling.hpp"
#include "ncg/tree.hpp"
#include "ncg/ugroup_checks.hpp"
#include "ncg/verify.hpp"
#include "oracles.hpp"

using namespace ncg;

namespace {

struct Criterion {
  int number;
  std::string name;
  double budget_seconds;
  std::function<bool(std::string&)> run;
};

bool tree_rank_oracles(std::string& detail) {
  Rng rng(101);
  for (int i = 0; i < 1000; ++i) {
    WfTree t = random_tree(rng, 300);
    auto oracle = ncg::testing::full_descendant_ranks(t);
    WfRelation rel = tree_as_relation(t);
    for (int id : t.node_ids()) {
      if (t.rank_node(id) != oracle.at(id)) {
        detail = "children-only rank disagrees with the full-descendant definition";
        return false;
      }
      if (rel.rank_element(id) != t.rank_node(id)) {
        detail = "relation rank disagrees with the node rank";
        return false;
      }
    }
  }
  return true;
}

bool level_and_concat_bounds(std::string& detail) {
  Rng rng(102);
  for (int i = 0; i < 1000; ++i) {
    WfTree t = random_tree(rng, 200);
    int k = rng.uniform(0, t.height() - 1);
    int m = k + 1 + rng.uniform(0, 4);
    if (!check_level_bound(t, k, m).holds) {
      detail = "level bound violated at instance " + std::to_string(i);
      return false;
    }
  }
  for (int i = 0; i < 1000; ++i) {
    WfTree t = random_tree(rng, 200);
    std::set<int> t1 = random_downward_closed(rng, t);
    int alpha = 0;
    for (int id : t.node_ids())
      if (!t1.count(id)) alpha = std::max(alpha, t.rank_node(id) + 1);
    alpha += rng.uniform(0, 2);
    ConcatBoundResult r = concat_bound(t, t1, alpha);
    if (!r.precondition_ok || !r.holds) {
      detail = "concatenation bound violated at instance " + std::to_string(i);
      return false;
    }
  }
  return true;
}

bool lex_relation_bound(std::string& detail) {
  Rng rng(103);
  for (int i = 0; i < 500; ++i) {
    WfTree tb = random_tree(rng, 10);
    std::map<int, WfTree> phi;
    for (int s : tb.node_ids()) phi.emplace(s, random_tree(rng, 8));
    LexRelationResult r = build_lex_relation(tb, phi);
    if (!r.bound_holds) {
      detail = "rho(R) exceeded sup rho(Phi) * rho(T_B) at instance " + std::to_string(i);
      return false;
    }
  }
  return true;
}

bool balanced_rank_correspondence(std::string& detail) {
  Rng rng(104);
  int checked = 0;
  for (int i = 0; i < 200; ++i) {
    PermGroupChain c = random_chain(rng, 8, 5, 3000);
    FiniteCaseContext ctx = make_finite_case_context(c);
    for (int a = 0; a < c.degree(); ++a)
      for (int n = 0; n <= c.depth(); ++n) {
        FiniteCaseResult r = finite_case_check(c, ctx, a, n);
        if (r.exceeds_truncation) continue;
        ++checked;
        if (!r.equivalence_holds) {
          detail = "l=1 equivalence failed at chain " + std::to_string(i);
          return false;
        }
        if (!r.node_bound_holds) {
          detail = "node rank exceeded max{0, m-n-1} at chain " + std::to_string(i);
          return false;
        }
      }
  }
  if (checked < 200) {
    detail = "too few closed cells: " + std::to_string(checked);
    return false;
  }
  return true;
}

bool countable_semidirect_shift(std::string& detail) {
  struct Inst {
    const char* name;
    CayleyTable gamma;
  };
  std::vector<Inst> instances;
  instances.push_back({"aut_z5", cyclic_table(5)});
  instances.push_back({"aut_z2z2", product_table(cyclic_table(2), cyclic_table(2))});
  instances.push_back({"aut_z7", cyclic_table(7)});
  instances.push_back({"aut_z8", cyclic_table(8)});
  instances.push_back({"aut_z9", cyclic_table(9)});
  instances.push_back({"aut_z2z4", product_table(cyclic_table(2), cyclic_table(4))});
  for (const auto& inst : instances) {
    std::vector<Perm> autos = automorphisms_of(inst.gamma);
    PermGroupChain g =
        stabilizer_chain_of(autos, inst.gamma.order, std::min(inst.gamma.order, 4));
    CountableSemidirectResult r = countable_semidirect(inst.gamma, g);
    if (!r.phi_homomorphism || !r.phi_injective) {
      detail = std::string(inst.name) + ": phi is not an injective homomorphism";
      return false;
    }
    if (!r.shift_asserted || !r.shift_holds) {
      detail = std::string(inst.name) + ": rank shift failed (rho_ta=" +
               std::to_string(r.rho_ta) + ", rho_tg=" + std::to_string(r.rho_tg) + ")";
      return false;
    }
  }
  return true;
}

bool run_extension_instance(ExtensionInstance inst, std::string& detail) {
  ExtensionReport r = extension_bound_check(inst);
  if (!r.complete) return true;  // truncated instances are skipped, not failed
  if (!r.psi.all_ok() || !r.phi_well_defined) {
    detail = "psi checks failed: " + r.psi.witness;
    return false;
  }
  if (!r.chain_holds || !r.tb.rank_bound_holds) {
    detail = "numeric bound chain failed";
    return false;
  }
  return true;
}

bool extension_pipeline(std::string& detail) {
  // Structured instances with genuinely layered normal subgroups.
  {
    // S4 > A4 > V4 > 1 with N = V4 on the truncated coset space.
    std::vector<std::vector<Perm>> s4(4);
    s4[0] = {Perm{1, 0, 2, 3}, Perm{1, 2, 3, 0}};
    s4[1] = {Perm{1, 2, 0, 3}, Perm{1, 0, 3, 2}};
    s4[2] = {Perm{1, 0, 3, 2}, Perm{2, 3, 0, 1}};
    PermGroupChain g = PermGroupChain::create(4, std::move(s4));
    std::vector<Perm> v4 = {Perm{1, 0, 3, 2}, Perm{2, 3, 0, 1}};
    if (!run_extension_instance(ExtensionInstance::create(g, v4), detail)) return false;

    // D4 > <r> > <r^2> > 1 with N the center.
    std::vector<std::vector<Perm>> d4(4);
    d4[0] = {Perm{1, 2, 3, 0}, Perm{0, 3, 2, 1}};
    d4[1] = {Perm{1, 2, 3, 0}};
    d4[2] = {Perm{2, 3, 0, 1}};
    PermGroupChain gd = PermGroupChain::create(4, std::move(d4));
    std::vector<Perm> center = {Perm{2, 3, 0, 1}};
    if (!run_extension_instance(ExtensionInstance::create(gd, center), detail)) return false;
    std::vector<std::vector<Perm>> d4b(4);
    d4b[0] = {Perm{1, 2, 3, 0}, Perm{0, 3, 2, 1}};
    d4b[1] = {Perm{1, 2, 3, 0}};
    d4b[2] = {Perm{2, 3, 0, 1}};
    PermGroupChain gd2 = PermGroupChain::create(4, std::move(d4b));
    std::vector<Perm> rotations = {Perm{1, 2, 3, 0}};
    if (!run_extension_instance(ExtensionInstance::create(gd2, rotations), detail)) return false;
  }

  Rng rng(106);
  int complete = 0, attempts = 0;
  while (complete < 50 && attempts < 400) {
    ++attempts;
    PermGroupChain g = random_chain(rng, 8, 4, 120);
    std::vector<Perm> n_gens = random_normal_subgroup(rng, g);
    XSetSpec spec;
    int which = rng.uniform(0, 2);
    if (which == 1) spec = XSetSpec::points();
    if (which == 2) spec = XSetSpec::coset_level(rng.uniform(0, g.depth()));
    ExtensionInstance inst = ExtensionInstance::create(std::move(g), n_gens, std::move(spec));
    if (inst.g_equals_n() || inst.x().size() < 2) continue;
    ExtensionReport r = extension_bound_check(inst);
    if (!r.complete) continue;
    ++complete;
    if (!r.psi.all_ok() || !r.phi_well_defined) {
      detail = "psi checks failed: " + r.psi.witness;
      return false;
    }
    if (!r.chain_holds || !r.tb.rank_bound_holds) {
      detail = "numeric bound chain failed at instance " + std::to_string(attempts);
      return false;
    }
  }
  if (complete < 50) {
    detail = "only " + std::to_string(complete) + " complete instances";
    return false;
  }
  int iso_checked = 0;
  for (int i = 0; i < 40 && iso_checked < 20; ++i) {
    PermGroupChain g = random_chain(rng, 6, 3, 200);
    std::vector<Perm> n_gens = random_normal_subgroup(rng, g);
    QuotientIsoResult qi = quotient_iso_check(g, n_gens, rng.uniform(0, g.depth()));
    ++iso_checked;
    if (!qi.canonical_iso || !qi.search_found_iso) {
      detail = "HN/N vs H/(H cap N) isomorphism failed";
      return false;
    }
  }
  if (iso_checked < 20) {
    detail = "too few isomorphism triples";
    return false;
  }
  return true;
}

bool u_exact_formulas(std::string& detail) {
  Rng rng(107);
  const int k = 12;
  int inconclusive = 0, total = 0;
  for (int i = 0; i < 200; ++i) {
    int n = 1 + (i % 4);
    UElement x = random_u_element(rng, k, 0, 2);
    WindowProfile w = window(x, n);
    if (w.n3 > k) continue;  // outside the validity domain (cannot happen at truncation)
    ++total;

    // Window profiles are invariants of the U_n coset.
    UElement same_coset = u_mul(x, random_u_element(rng, k, n, 2));
    if (!coset_eq(x, same_coset, n) || !(window(same_coset, n) == w)) {
      detail = "window profile not a coset invariant at sample " + std::to_string(i);
      return false;
    }

    // Least fixing level with a moving witness, the orbit invariances of
    // N_2 and N_3, and the node rank formula.
    Rng sub = rng.fork();
    NodeRankResult nr = node_rank_check(x, n, 3, sub, 2);
    if (nr.status == CheckStatus::Fail) {
      detail = "node rank check failed: " + nr.witness;
      return false;
    }
    if (nr.status == CheckStatus::Inconclusive) {
      ++inconclusive;
      continue;
    }
    if (nr.expected_rank != std::max(0, w.n3 - w.n2 - 1)) {
      detail = "node rank formula mismatch";
      return false;
    }

    // Normal-form equivalences around one threshold per sample.
    std::vector<int> ps{n, w.n2, w.n3};
    if (w.n3 > n) ps.push_back(w.n3 - 1);
    if (w.n2 > n) ps.push_back(w.n2 - 1);
    int p = ps[static_cast<std::size_t>(rng.uniform(0, static_cast<int>(ps.size()) - 1))];
    Rng sub2 = rng.fork();
    CosetEquivalencesResult ce = check_coset_equivalences(x, n, p, 3, sub2, 2);
    if (ce.status == CheckStatus::Fail) {
      detail = "coset equivalence failed at p=" + std::to_string(p) + ": " + ce.witness;
      return false;
    }
    if (ce.status == CheckStatus::Inconclusive) ++inconclusive;
  }
  if (total < 200) {
    detail = "only " + std::to_string(total) + " valid samples";
    return false;
  }
  if (inconclusive * 20 >= total) {
    detail = "inconclusive rate too high: " + std::to_string(inconclusive) + "/" +
             std::to_string(total);
    return false;
  }
  return true;
}

bool u_algebra(std::string& detail) {
  Rng rng(108);
  AlgebraResult a = algebra_checks(6, 1000, rng, 3);
  if (a.status != CheckStatus::Pass) {
    detail = "algebra check failed: " + a.witness;
    return false;
  }
  NormalSubgroupResult n = normal_subgroup_checks(6, 1000, rng, 3);
  if (n.status != CheckStatus::Pass) {
    detail = "normal subgroup check failed: " + n.witness;
    return false;
  }
  return true;
}

bool symbolic_bounds(std::string& detail) {
  using ncg::testing::OrdVec;
  // The headline example: beta * (omega * alpha + 1) at alpha = beta = 1.
  if (rank_bound(BoundKind::Extension, Ordinal::natural(1), Ordinal::natural(1))
          .bound.to_string() != "w+1") {
    detail = "extension bound at alpha=beta=1 is not w+1";
    return false;
  }

  struct Row {
    std::uint64_t a_lin, a_const, b_lin, b_const;  // alpha = w*a_lin + a_const etc.
  };
  const Row rows[] = {
      {0, 1, 0, 1}, {0, 2, 0, 1}, {0, 1, 0, 2}, {0, 3, 0, 5}, {1, 0, 0, 1},
      {1, 1, 0, 1}, {0, 1, 1, 0}, {0, 2, 1, 1}, {1, 0, 1, 0}, {1, 2, 1, 3},
      {2, 1, 0, 4}, {0, 4, 2, 1}, {2, 0, 2, 0}, {1, 5, 2, 2}, {3, 1, 1, 1},
      {0, 7, 0, 9}, {2, 3, 3, 0}, {1, 0, 0, 6}, {0, 5, 3, 2}, {4, 2, 2, 5},
  };
  auto make_pair_of = [](std::uint64_t lin, std::uint64_t cst) {
    Ordinal o;
    OrdVec v;
    if (lin) {
      o = o + Ordinal::omega_pow(Ordinal::natural(1), lin);
      v = add(v, OrdVec::omega_times(lin, 1));
    }
    if (cst) {
      o = o + Ordinal::natural(cst);
      v = add(v, OrdVec::nat(cst));
    }
    return std::make_pair(o, v);
  };
  int table_index = 0;
  for (const Row& row : rows) {
    auto [alpha, va] = make_pair_of(row.a_lin, row.a_const);
    auto [beta, vb] = make_pair_of(row.b_lin, row.b_const);

    // Extension: beta * (w * alpha + 1).
    OrdVec expected_ext = mul(vb, add(mul(OrdVec::omega_times(1, 1), va), OrdVec::nat(1)));
    std::string got_ext = rank_bound(BoundKind::Extension, alpha, beta).bound.to_string();
    if (got_ext != expected_ext.str()) {
      detail = "extension bound row " + std::to_string(table_index) + ": got " + got_ext +
               ", oracle " + expected_ext.str();
      return false;
    }
    // Semidirect and wreath: beta + alpha.
    OrdVec expected_sum = add(vb, va);
    for (BoundKind kind : {BoundKind::SemidirectPositive, BoundKind::Wreath}) {
      std::string got = rank_bound(kind, alpha, beta).bound.to_string();
      if (got != expected_sum.str()) {
        detail = "sum bound row " + std::to_string(table_index) + ": got " + got + ", oracle " +
                 expected_sum.str();
        return false;
      }
    }
    ++table_index;
  }
  return true;
}

}  // namespace

int main() {
  std::vector<Criterion> criteria = {
      {1, "tree rank oracle equivalence (1000 trees)", 10.0, tree_rank_oracles},
      {2, "level bound and concatenation bound (1000 + 1000)", 20.0, level_and_concat_bounds},
      {3, "lexicographic relation bound (500)", 30.0, lex_relation_bound},
      {4, "finite balanced-rank correspondence (200 chains)", 60.0,
       balanced_rank_correspondence},
      {5, "countable semidirect rank shift (6 instances)", 10.0, countable_semidirect_shift},
      {6, "extension pipeline and quotient isomorphisms (50 + 20)", 120.0, extension_pipeline},
      {7, "U window formulas at k=12 (200 samples)", 120.0, u_exact_formulas},
      {8, "U algebra and normal subgroup at k=6 (1000 triples)", 30.0, u_algebra},
      {9, "symbolic bounds against the CNF oracle (20 rows)", 10.0, symbolic_bounds},
  };

  int failures = 0;
  for (auto& c : criteria) {
    auto start = std::chrono::steady_clock::now();
    std::string detail;
    bool ok = false;
    try {
      ok = c.run(detail);
    } catch (const std::exception& e) {
      detail = std::string("exception: ") + e.what();
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    bool in_budget = secs < c.budget_seconds;
    bool pass = ok && in_budget;
    if (!pass) ++failures;
    std::printf("[%s] criterion %d: %s (%.2fs, budget %.0fs)%s%s\n", pass ? "PASS" : "FAIL",
                c.number, c.name.c_str(), secs, c.budget_seconds,
                detail.empty() ? "" : " - ", detail.c_str());
  }
  return failures == 0 ? 0 : 1;
}
