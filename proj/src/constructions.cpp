#include "ncg/constructions.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace ncg {

ActionTable ActionTable::create(const FiniteGroup& g, const FiniteGroup& h,
                                std::vector<std::vector<int>> table) {
  if (static_cast<int>(table.size()) != g.order())
    throw std::invalid_argument("action table: one row per G element required");
  for (const auto& row : table) {
    if (static_cast<int>(row.size()) != h.order() || !perm_valid(row))
      throw std::invalid_argument("action table row is not a bijection of H");
  }
  ActionTable rho;
  rho.table_ = std::move(table);
  // rho(1) = id.
  for (int y = 0; y < h.order(); ++y)
    if (rho.table_[0][y] != y) throw std::invalid_argument("action table: rho(1) must be the identity");
  // Each rho(x) is an automorphism of H.
  for (int x = 0; x < g.order(); ++x)
    for (int y1 = 0; y1 < h.order(); ++y1)
      for (int y2 = 0; y2 < h.order(); ++y2)
        if (rho.table_[x][h.mul(y1, y2)] != h.mul(rho.table_[x][y1], rho.table_[x][y2]))
          throw std::invalid_argument("action table: rho(x) is not an automorphism");
  // rho is a homomorphism.
  for (int x1 = 0; x1 < g.order(); ++x1)
    for (int x2 = 0; x2 < g.order(); ++x2) {
      int x12 = g.mul(x1, x2);
      for (int y = 0; y < h.order(); ++y)
        if (rho.table_[x12][y] != rho.table_[x1][rho.table_[x2][y]])
          throw std::invalid_argument("action table: rho is not a homomorphism");
    }
  return rho;
}

ActionTable ActionTable::trivial(const FiniteGroup& g, const FiniteGroup& h) {
  std::vector<std::vector<int>> table(g.order());
  for (auto& row : table) {
    row.resize(h.order());
    for (int y = 0; y < h.order(); ++y) row[y] = y;
  }
  ActionTable rho;
  rho.table_ = std::move(table);
  return rho;
}

SemidirectProduct semidirect(const PermGroupChain& g, const PermGroupChain& h,
                             const ActionTable& rho, std::size_t cap) {
  int d = std::min(g.depth(), h.depth());
  // Per-level closure: rho(G_n)(H_n) inside H_n, so that G_n x H_n is a
  // subgroup of the twisted product.
  for (int n = 0; n <= d; ++n) {
    for (int x : g.level_elements(n))
      for (int y : h.level_elements(n))
        if (!h.level_contains(n, rho.apply(x, y))) throw ClosureError(n, x, y);
  }

  int go = g.group().order(), ho = h.group().order();
  if (static_cast<std::size_t>(go) * static_cast<std::size_t>(ho) > cap)
    throw CapExceeded("semidirect product order exceeds cap");
  auto pair_point = [&](int gi, int hi) { return gi * ho + hi; };

  // Left multiplication by (x, 1): (g', h') -> (x g', rho(x)(h')).
  auto left_by_g = [&](int x) {
    Perm p(go * ho);
    for (int gi = 0; gi < go; ++gi)
      for (int hi = 0; hi < ho; ++hi)
        p[pair_point(gi, hi)] = pair_point(g.group().mul(x, gi), rho.apply(x, hi));
    return p;
  };
  // Left multiplication by (1, y): (g', h') -> (g', y h').
  auto left_by_h = [&](int y) {
    Perm p(go * ho);
    for (int gi = 0; gi < go; ++gi)
      for (int hi = 0; hi < ho; ++hi) p[pair_point(gi, hi)] = pair_point(gi, h.group().mul(y, hi));
    return p;
  };

  std::vector<std::vector<Perm>> level_gens(d + 1);
  for (int n = 0; n <= d; ++n) {
    for (int x : g.level_generator_ids(n)) level_gens[n].push_back(left_by_g(x));
    for (int y : h.level_generator_ids(n)) level_gens[n].push_back(left_by_h(y));
  }

  SemidirectProduct a;
  a.g_order = go;
  a.h_order = ho;
  a.chain = PermGroupChain::create(go * ho, std::move(level_gens), cap);
  if (a.chain.group().order() != go * ho)
    throw std::logic_error("semidirect enumeration does not match |G|*|H|");
  return a;
}

Condition41Result check_condition_41(const PermGroupChain& g, const PermGroupChain& h,
                                     const ActionTable& rho, int n) {
  Condition41Result res;
  const std::vector<int>& hn = h.level_elements(n);
  // Distinct coset representatives of H/H_n.
  std::vector<int> reps;
  std::vector<char> seen(h.group().order(), 0);
  for (int y = 0; y < h.group().order(); ++y) {
    if (seen[y]) continue;
    reps.push_back(y);
    for (int k : hn) seen[h.group().mul(y, k)] = 1;
  }
  auto coset_set = [&](int y) {
    std::vector<int> s;
    s.reserve(hn.size());
    for (int k : hn) s.push_back(h.group().mul(y, k));
    std::sort(s.begin(), s.end());
    return s;
  };
  for (int x : g.level_elements(n)) {
    for (int y : reps) {
      std::vector<int> lhs;
      lhs.reserve(hn.size());
      for (int k : hn) lhs.push_back(rho.apply(x, h.group().mul(y, k)));
      std::sort(lhs.begin(), lhs.end());
      if (lhs != coset_set(y)) res.violations.push_back({x, y});
    }
  }
  res.holds = res.violations.empty();
  return res;
}

std::vector<int> twisted_level_closure(const PermGroupChain& g, const PermGroupChain& h,
                                       const ActionTable& rho, int n) {
  std::vector<int> image;
  for (int x : g.level_elements(n))
    for (int y : h.level_elements(n)) image.push_back(rho.apply(x, y));
  std::sort(image.begin(), image.end());
  image.erase(std::unique(image.begin(), image.end()), image.end());
  return subgroup_closure(h.group(), image);
}

T1RankResult check_t1_rank_equality(const SemidirectProduct& a, const PermGroupChain& g,
                                    const PermGroupChain& h, const ActionTable& rho, int n) {
  T1RankResult res;
  int d = std::min(g.depth(), h.depth());
  if (n < 0 || n > d) throw std::out_of_range("level out of range");
  for (int lvl = 0; lvl <= d; ++lvl)
    if (!check_condition_41(g, h, rho, lvl).holds) return res;
  res.precondition_ok = true;

  // Orbit tree T of (A_p) on A/A_n.
  auto a_cosets = a.chain.coset_action(n);
  EqChain ea = a.chain.orbit_chain(*a_cosets);
  OrbitTree t = build_orbit_tree(ea);

  // Orbit tree S of (G_p) on G/G_n.
  auto g_cosets = g.coset_action(n);
  EqChain eg = g.orbit_chain(*g_cosets);
  OrbitTree s = build_orbit_tree(eg);

  // x-part of an A/A_n coset: the G/G_n coset of the representative's G
  // component.
  const auto* ac = static_cast<const CosetAction*>(a_cosets.get());
  const auto* gc = static_cast<const CosetAction*>(g_cosets.get());
  std::vector<int> xpart(ac->size());
  for (int p = 0; p < ac->size(); ++p) {
    int elem = ac->representative(p);
    int gi = a.point_pair(a.chain.group().perm(elem)[0]).first;
    xpart[p] = gc->coset_of_element(gi);
  }

  // T1 membership per T node, with well-definedness across the class.
  std::set<int> t1;
  std::map<int, int> s_node_of;  // T node id -> S node id
  bool well_defined = true;
  for (const auto& [key, id] : t.node_of) {
    auto [p, rep] = key;
    int g_class = eg.class_rep[p][xpart[rep]];
    int class_size = 0;
    for (int q = 0; q < ea.points; ++q) {
      if (ea.class_rep[p][q] != rep) continue;
      if (eg.class_rep[p][xpart[q]] != g_class) well_defined = false;
    }
    for (int q = 0; q < eg.points; ++q)
      if (eg.class_rep[p][q] == g_class) ++class_size;
    if (class_size >= 2) {
      t1.insert(id);
      auto sn = s.find(p, g_class);
      if (!sn) {
        well_defined = false;
        continue;
      }
      s_node_of[id] = *sn;
    }
  }
  if (!well_defined) {
    res.precondition_ok = false;
    return res;
  }

  std::map<int, int> t1_rank = ranks_within(t.tree, t1);
  res.node_ranks_equal = true;
  for (const auto& [tid, sid] : s_node_of) {
    if (t1_rank.at(tid) != s.tree.rank_node(sid)) {
      res.node_ranks_equal = false;
      if (!res.mismatch) res.mismatch = {tid, sid};
    }
  }

  // Concatenation shadow with alpha = max rank outside T1, plus one.
  res.alpha = 0;
  for (int id : t.tree.node_ids())
    if (!t1.count(id)) res.alpha = std::max(res.alpha, t.tree.rank_node(id) + 1);
  ConcatBoundResult cb = concat_bound(t.tree, t1, res.alpha);
  res.concat_shadow_holds = cb.precondition_ok && cb.holds;
  res.rho_t = t.tree.rank_tree();
  res.rho_t1 = cb.rho_t1;
  res.rho_s = s.tree.rank_tree();
  return res;
}

WreathParts wreath_parts(const PermGroupChain& g, const PermGroupChain& h, std::size_t cap) {
  int k = g.degree();
  int dh = h.degree();
  int depth = std::min(h.depth(), k);

  // Top: G with its pointwise-stabilizer chain, depth matching the product.
  std::vector<std::vector<Perm>> top_gens(depth + 1);
  for (int n = 0; n <= depth; ++n) {
    std::vector<int> ids = (n == 0) ? g.level_generator_ids(0)
                                    : small_generating_set(g.group(), g.stabilizer_elements(n));
    for (int e : ids) top_gens[n].push_back(g.group().perm(e));
    if (top_gens[n].empty()) top_gens[n].push_back(perm_identity(k));
  }
  PermGroupChain top = PermGroupChain::create(k, std::move(top_gens), cap);

  // Bottom: H^k on k disjoint copies of H's points, with the product chain
  // K_n = prod_{i<n} H_n x prod_{i>=n} H.
  std::vector<std::vector<Perm>> bot_gens(depth + 1);
  auto coord_gen = [&](int coord, const Perm& hp) {
    Perm p = perm_identity(k * dh);
    for (int q = 0; q < dh; ++q) p[coord * dh + q] = coord * dh + hp[q];
    return p;
  };
  for (int n = 0; n <= depth; ++n) {
    for (int i = 0; i < k; ++i) {
      int level = i < n ? n : 0;
      for (int e : h.level_generator_ids(level)) bot_gens[n].push_back(coord_gen(i, h.group().perm(e)));
    }
    if (bot_gens[n].empty()) bot_gens[n].push_back(perm_identity(k * dh));
  }
  PermGroupChain bottom = PermGroupChain::create(k * dh, std::move(bot_gens), cap);

  // rho(sigma)(F) = F o sigma^{-1}: coordinate permutation of tuples.
  const FiniteGroup& bg = bottom.group();
  std::vector<std::vector<int>> table(top.group().order(), std::vector<int>(bg.order()));
  for (int x = 0; x < top.group().order(); ++x) {
    Perm sigma = top.group().perm(x);
    Perm sigma_inv = perm_inverse(sigma);
    for (int e = 0; e < bg.order(); ++e) {
      const Perm& f = bg.perm(e);
      Perm image = perm_identity(k * dh);
      for (int j = 0; j < k; ++j) {
        int i = sigma_inv[j];  // component j of the image is F_i
        for (int q = 0; q < dh; ++q) image[j * dh + q] = j * dh + (f[i * dh + q] - i * dh);
      }
      int id = bg.id_of(image);
      if (id < 0) throw std::logic_error("wreath action leaves the base group");
      table[x][e] = id;
    }
  }
  ActionTable rho = ActionTable::create(top.group(), bg, std::move(table));
  return WreathParts{std::move(top), std::move(bottom), std::move(rho)};
}

SemidirectProduct wreath(const PermGroupChain& g, const PermGroupChain& h, std::size_t cap) {
  WreathParts parts = wreath_parts(g, h, cap);
  return semidirect(parts.top, parts.bottom, parts.rho, cap);
}

CayleyTable CayleyTable::create(int order, std::vector<std::vector<int>> table) {
  if (order <= 0 || static_cast<int>(table.size()) != order)
    throw std::invalid_argument("Cayley table has wrong shape");
  for (const auto& row : table) {
    if (static_cast<int>(row.size()) != order)
      throw std::invalid_argument("Cayley table has wrong shape");
    for (int v : row)
      if (v < 0 || v >= order) throw std::invalid_argument("Cayley table entry out of range");
  }
  CayleyTable t;
  t.order = order;
  t.table = std::move(table);
  int e = -1;
  for (int cand = 0; cand < order; ++cand) {
    bool ok = true;
    for (int a = 0; a < order && ok; ++a)
      ok = t.table[cand][a] == a && t.table[a][cand] == a;
    if (ok) {
      e = cand;
      break;
    }
  }
  if (e < 0) throw std::invalid_argument("Cayley table has no identity");
  t.identity = e;
  for (int a = 0; a < order; ++a)
    for (int b = 0; b < order; ++b)
      for (int c = 0; c < order; ++c)
        if (t.table[t.table[a][b]][c] != t.table[a][t.table[b][c]])
          throw std::invalid_argument("Cayley table is not associative");
  for (int a = 0; a < order; ++a) {
    bool has_inv = false;
    for (int b = 0; b < order; ++b)
      if (t.table[a][b] == e && t.table[b][a] == e) has_inv = true;
    if (!has_inv) throw std::invalid_argument("Cayley table element lacks an inverse");
  }
  return t;
}

int CayleyTable::inv(int a) const {
  for (int b = 0; b < order; ++b)
    if (table[a][b] == identity) return b;
  throw std::logic_error("element lacks an inverse");
}

CountableSemidirectResult countable_semidirect(const CayleyTable& gamma, const PermGroupChain& g,
                                               std::size_t cap) {
  if (g.degree() != gamma.order)
    throw std::invalid_argument("automorphism chain degree must match |Gamma|");
  // Every member of G must be an automorphism of Gamma; generators suffice.
  for (const auto& gen : g.level_generators()[0]) {
    for (int a = 0; a < gamma.order; ++a)
      for (int b = 0; b < gamma.order; ++b)
        if (gen[gamma.mul(a, b)] != gamma.mul(gen[a], gen[b]))
          throw std::invalid_argument("chain generator is not an automorphism of Gamma");
  }

  CountableSemidirectResult res;

  // phi(g, c)(x) = c * g(x); translations plus automorphisms generate the
  // image of A = G x Gamma inside Sym(Gamma).
  auto phi = [&](const Perm& auto_part, int c) {
    Perm p(gamma.order);
    for (int x = 0; x < gamma.order; ++x) p[x] = gamma.mul(c, auto_part[x]);
    return p;
  };

  std::vector<std::vector<Perm>> levels(g.depth() + 2);
  for (const auto& gen : g.level_generators()[0]) levels[0].push_back(gen);
  for (int c = 0; c < gamma.order; ++c)
    if (c != gamma.identity) levels[0].push_back(phi(perm_identity(gamma.order), c));
  if (levels[0].empty()) levels[0].push_back(perm_identity(gamma.order));
  for (int n = 0; n <= g.depth(); ++n) {
    for (int e : g.level_generator_ids(n)) levels[n + 1].push_back(g.group().perm(e));
    if (levels[n + 1].empty()) levels[n + 1].push_back(perm_identity(gamma.order));
  }
  res.a_chain = PermGroupChain::create(gamma.order, std::move(levels), cap);

  // phi is injective iff the |G|*|Gamma| permutations are pairwise distinct,
  // which the enumerated order certifies.
  long long expected = static_cast<long long>(g.group().order()) * gamma.order;
  res.phi_injective = res.a_chain.group().order() == expected;

  // Homomorphism: phi((g,c)(h,d)) = phi(g,c) o phi(h,d) with
  // (g,c)(h,d) = (gh, c*g(d)).
  res.phi_homomorphism = true;
  for (int gi = 0; gi < g.group().order() && res.phi_homomorphism; ++gi) {
    for (int hi = 0; hi < g.group().order() && res.phi_homomorphism; ++hi) {
      const Perm& pg = g.group().perm(gi);
      const Perm& ph = g.group().perm(hi);
      for (int c = 0; c < gamma.order && res.phi_homomorphism; ++c) {
        for (int dd = 0; dd < gamma.order; ++dd) {
          Perm lhs = phi(perm_compose(pg, ph), gamma.mul(c, pg[dd]));
          Perm rhs = perm_compose(phi(pg, c), phi(ph, dd));
          if (lhs != rhs) {
            res.phi_homomorphism = false;
            break;
          }
        }
      }
    }
  }

  NaturalAction on_gamma_a(res.a_chain.group());
  res.rho_ta = build_orbit_tree(res.a_chain.orbit_chain(on_gamma_a)).tree.rank_tree();
  NaturalAction on_gamma_g(g.group());
  OrbitTree tg = build_orbit_tree(g.orbit_chain(on_gamma_g));
  res.rho_tg = tg.tree.rank_tree();
  res.g_tree_empty = tg.tree.empty();
  if (!res.g_tree_empty && gamma.order >= 2) {
    res.shift_asserted = true;
    res.shift_holds = res.rho_ta == res.rho_tg + 1;
  }
  return res;
}

RankBound rank_bound(BoundKind kind, const Ordinal& alpha, const Ordinal& beta) {
  RankBound b{kind, alpha, beta, Ordinal()};
  switch (kind) {
    case BoundKind::SemidirectPositive:
    case BoundKind::Wreath:
      b.bound = beta + alpha;
      break;
    case BoundKind::Extension:
      b.bound = beta * (Ordinal::omega() * alpha + Ordinal::natural(1));
      break;
  }
  return b;
}

}  // namespace ncg
