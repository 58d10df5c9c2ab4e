#include "ncg/sampling.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

namespace ncg {

WfTree random_tree(Rng& rng, int max_nodes) {
  int count = rng.uniform(1, max_nodes);
  WfTree t;
  std::vector<int> ids;
  for (int i = 0; i < count; ++i) {
    if (i == 0 || rng.one_in(6)) {
      ids.push_back(t.add_root());
    } else {
      ids.push_back(t.add_child(ids[rng.uniform(0, i - 1)]));
    }
  }
  return t;
}

std::set<int> random_downward_closed(Rng& rng, const WfTree& t) {
  std::set<int> keep;
  // Walk nodes by ascending level; a node may enter only under a kept parent.
  std::vector<int> ids = t.node_ids();
  std::sort(ids.begin(), ids.end(),
            [&](int a, int b) { return t.node(a).level < t.node(b).level; });
  for (int id : ids) {
    const TreeNode& n = t.node(id);
    bool parent_ok = !n.parent || keep.count(*n.parent);
    if (parent_ok && !rng.one_in(3)) keep.insert(id);
  }
  return keep;
}

Perm random_perm(Rng& rng, int degree) {
  Perm p = perm_identity(degree);
  for (int i = degree - 1; i > 0; --i) std::swap(p[i], p[rng.uniform(0, i)]);
  return p;
}

PermGroupChain random_chain(Rng& rng, int max_degree, int max_depth, std::size_t order_cap,
                            bool trivial_tail) {
  for (int attempt = 0; attempt < 64; ++attempt) {
    int degree = rng.uniform(2, max_degree);
    int n_gens = rng.uniform(1, 2);
    std::vector<Perm> gens;
    for (int i = 0; i < n_gens; ++i) {
      if (rng.one_in(2)) {
        // A random transposition keeps many sampled groups small.
        Perm p = perm_identity(degree);
        int a = rng.uniform(0, degree - 1), b = rng.uniform(0, degree - 1);
        std::swap(p[a], p[b]);
        gens.push_back(std::move(p));
      } else {
        gens.push_back(random_perm(rng, degree));
      }
    }
    FiniteGroup g0;
    try {
      g0 = FiniteGroup::enumerate(degree, gens, order_cap);
    } catch (const CapExceeded&) {
      continue;
    }
    int depth = rng.uniform(1, max_depth);
    std::vector<std::vector<Perm>> levels(depth + 1);
    levels[0] = gens;
    std::vector<int> prev(g0.order());
    std::iota(prev.begin(), prev.end(), 0);
    for (int n = 1; n <= depth; ++n) {
      if (trivial_tail && n == depth) break;  // leave the last level empty
      std::vector<int> gen_ids;
      int want = rng.uniform(0, 2);
      for (int i = 0; i < want; ++i) gen_ids.push_back(prev[rng.uniform(0, static_cast<int>(prev.size()) - 1)]);
      std::vector<int> elems = subgroup_closure(g0, gen_ids);
      for (int id : gen_ids) levels[n].push_back(g0.perm(id));
      prev = std::move(elems);
    }
    try {
      return PermGroupChain::create(degree, std::move(levels), order_cap);
    } catch (const CapExceeded&) {
      continue;
    }
  }
  // Deterministic fallback: the S3 chain.
  std::vector<std::vector<Perm>> levels(3);
  levels[0] = {Perm{1, 0, 2}, Perm{1, 2, 0}};
  levels[1] = {Perm{0, 2, 1}};
  return PermGroupChain::create(3, std::move(levels), order_cap);
}

std::vector<Perm> random_normal_subgroup(Rng& rng, const PermGroupChain& g) {
  const FiniteGroup& grp = g.group();
  if (grp.order() == 1) return {};
  std::vector<Perm> fallback;  // first proper subgroup seen, even if trivial
  bool have_fallback = false;
  for (int attempt = 0; attempt < 24; ++attempt) {
    int seed_elem = rng.uniform(1, grp.order() - 1);
    // Normal closure of one element.
    std::vector<int> closure_gens{seed_elem};
    std::vector<int> elems = subgroup_closure(grp, closure_gens);
    bool grew = true;
    while (grew) {
      grew = false;
      const std::vector<int> snapshot = elems;
      for (int gen : g.level_generator_ids(0)) {
        int ginv = grp.inv(gen);
        for (int e : snapshot) {
          int conj = grp.mul(grp.mul(gen, e), ginv);
          if (!std::binary_search(elems.begin(), elems.end(), conj)) {
            closure_gens.push_back(conj);
            elems = subgroup_closure(grp, closure_gens);
            grew = true;
          }
        }
      }
    }
    if (static_cast<int>(elems.size()) < grp.order()) {
      std::vector<Perm> out;
      for (int e : small_generating_set(grp, elems)) out.push_back(grp.perm(e));
      if (elems.size() > 1) return out;  // proper and nontrivial: best case
      if (!have_fallback) {
        fallback = out;
        have_fallback = true;
      }
    }
  }
  return fallback;  // possibly trivial when no proper normal subgroup showed up
}

CayleyTable cyclic_table(int n) {
  std::vector<std::vector<int>> t(n, std::vector<int>(n));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) t[a][b] = (a + b) % n;
  return CayleyTable::create(n, std::move(t));
}

CayleyTable product_table(const CayleyTable& a, const CayleyTable& b) {
  int n = a.order * b.order;
  std::vector<std::vector<int>> t(n, std::vector<int>(n));
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      int ax = x / b.order, bx = x % b.order;
      int ay = y / b.order, by = y % b.order;
      t[x][y] = a.mul(ax, ay) * b.order + b.mul(bx, by);
    }
  return CayleyTable::create(n, std::move(t));
}

std::vector<Perm> automorphisms_of(const CayleyTable& gamma) {
  int n = gamma.order;
  std::vector<Perm> autos;
  Perm p(n, -1);
  p[gamma.identity] = gamma.identity;
  std::vector<char> used(n, 0);
  used[gamma.identity] = 1;
  std::vector<int> rest;
  for (int i = 0; i < n; ++i)
    if (i != gamma.identity) rest.push_back(i);

  std::function<void(std::size_t)> dfs = [&](std::size_t pos) {
    if (pos == rest.size()) {
      for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
          if (p[gamma.mul(x, y)] != gamma.mul(p[x], p[y])) return;
      autos.push_back(p);
      return;
    }
    int e = rest[pos];
    for (int f = 0; f < n; ++f) {
      if (used[f]) continue;
      p[e] = f;
      used[f] = 1;
      bool consistent = true;
      for (int x = 0; x < n && consistent; ++x) {
        if (p[x] < 0) continue;
        int xe = gamma.mul(x, e), ex = gamma.mul(e, x);
        if (p[xe] >= 0 && p[xe] != gamma.mul(p[x], f)) consistent = false;
        if (p[ex] >= 0 && p[ex] != gamma.mul(f, p[x])) consistent = false;
      }
      if (consistent) dfs(pos + 1);
      used[f] = 0;
      p[e] = -1;
    }
  };
  dfs(0);
  return autos;
}

PermGroupChain stabilizer_chain_of(const std::vector<Perm>& group_gens, int degree, int depth,
                                   std::size_t cap) {
  FiniteGroup g = FiniteGroup::enumerate(degree, group_gens, cap);
  std::vector<std::vector<Perm>> levels(depth + 1);
  levels[0] = group_gens;
  if (levels[0].empty()) levels[0].push_back(perm_identity(degree));
  for (int n = 1; n <= depth; ++n) {
    std::vector<int> elems;
    for (int e = 0; e < g.order(); ++e) {
      bool fixes = true;
      for (int i = 0; i < std::min(n, degree); ++i)
        if (g.perm(e)[i] != i) {
          fixes = false;
          break;
        }
      if (fixes) elems.push_back(e);
    }
    for (int e : small_generating_set(g, elems)) levels[n].push_back(g.perm(e));
  }
  return PermGroupChain::create(degree, std::move(levels), cap);
}

UElement random_u_element(Rng& rng, int k, int p, int entry_cap) {
  UElement x = UElement::identity(k);
  auto rand_entry = [&]() { return rng.uniform(-entry_cap, entry_cap); };
  for (int i = p; i < k; ++i)
    for (int j = 0; j < k; ++j) {
      x.a.at(i, j) = rand_entry();
      x.b.at(i, j) = rand_entry();
      x.d.at(i, j) = rand_entry();
    }
  for (int i = p; i < k; ++i) {
    x.c.at(i) = rand_entry();
    x.e.at(i) = rand_entry();
    x.f.at(i) = rand_entry();
  }
  return x;
}

UElement random_n_element(Rng& rng, int k, int entry_cap) {
  UElement x = UElement::identity(k);
  for (int i = 0; i < k; ++i) {
    for (int j = 0; j < k; ++j) x.d.at(i, j) = rng.uniform(-entry_cap, entry_cap);
    x.e.at(i) = rng.uniform(-entry_cap, entry_cap);
    x.f.at(i) = rng.uniform(-entry_cap, entry_cap);
  }
  return x;
}

std::vector<UElement> elementary_u_elements(int k, int p, int mag) {
  std::vector<UElement> out;
  for (int m = 1; m <= mag; ++m) {
    for (int sign : {1, -1}) {
      long long v = static_cast<long long>(sign) * m;
      for (int i = p; i < k; ++i) {
        for (int j = 0; j < k; ++j) {
          for (int block = 0; block < 3; ++block) {
            UElement x = UElement::identity(k);
            (block == 0 ? x.a : block == 1 ? x.b : x.d).at(i, j) = v;
            out.push_back(std::move(x));
          }
        }
        for (int block = 0; block < 3; ++block) {
          UElement x = UElement::identity(k);
          (block == 0 ? x.c : block == 1 ? x.e : x.f).at(i) = v;
          out.push_back(std::move(x));
        }
      }
    }
  }
  return out;
}

bool scan_elementary(int k, int p, int max_mag,
                     const std::function<bool(const UElement&)>& probe) {
  for (int m = 1; m <= max_mag; ++m) {
    for (int sign : {1, -1}) {
      long long v = static_cast<long long>(sign) * m;
      for (int i = p; i < k; ++i) {
        for (int block = 0; block < 3; ++block) {
          UElement x = UElement::identity(k);
          (block == 0 ? x.c : block == 1 ? x.e : x.f).at(i) = v;
          if (probe(x)) return true;
        }
        for (int j = 0; j < k; ++j) {
          for (int block = 0; block < 3; ++block) {
            UElement x = UElement::identity(k);
            (block == 0 ? x.a : block == 1 ? x.b : x.d).at(i, j) = v;
            if (probe(x)) return true;
          }
        }
      }
    }
  }
  return false;
}

std::vector<UElement> sample_up(Rng& rng, int k, int p, int extra, int entry_cap) {
  std::vector<UElement> out;
  // Elementary e_{ij}-supported elements for each block: rows of the window
  // (strided when the window is tall), three column positions per row.
  int stride = (k - p) > 8 ? 2 : 1;
  for (int i = p; i < k; i += ((i + stride > k - 1 && i < k - 1) ? (k - 1 - i) : stride)) {
    std::set<int> cols{0, i % k, k - 1};
    for (int j : cols) {
      for (int block = 0; block < 3; ++block) {
        UElement x = UElement::identity(k);
        (block == 0 ? x.a : block == 1 ? x.b : x.d).at(i, j) = 1;
        out.push_back(std::move(x));
      }
    }
    for (int block = 0; block < 3; ++block) {
      UElement x = UElement::identity(k);
      (block == 0 ? x.c : block == 1 ? x.e : x.f).at(i) = 1;
      out.push_back(std::move(x));
    }
  }
  // Short products of elementary elements, up to length three.
  std::size_t base = out.size();
  if (base > 0) {
    for (int i = 0; i < 12; ++i) {
      const UElement& a = out[rng.uniform(0, static_cast<int>(base) - 1)];
      const UElement& b = out[rng.uniform(0, static_cast<int>(base) - 1)];
      UElement ab = u_mul(a, b);
      if (i % 3 == 0) {
        const UElement& c = out[rng.uniform(0, static_cast<int>(base) - 1)];
        ab = u_mul(ab, c);
      }
      out.push_back(std::move(ab));
    }
  }
  for (int i = 0; i < extra; ++i) out.push_back(random_u_element(rng, k, p, entry_cap));
  return out;
}

}  // namespace ncg
