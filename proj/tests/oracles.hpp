#pragma once

// Test-only oracles, kept independent of the implementation paths they
// check.

#include <algorithm>
#include <cstdint>
#include <deque>
#include <map>
#include <string>
#include <vector>

#include "ncg/tree.hpp"
#include "ncg/ugroup.hpp"

namespace ncg::testing {

/// Rank by the raw definition: rho(s) = sup{rho(t)+1 : s < t} over all
/// strict descendants, not just children. Computed from explicit descendant
/// sets in reverse level order.
inline std::map<int, int> full_descendant_ranks(const WfTree& t) {
  std::vector<int> ids = t.node_ids();
  std::sort(ids.begin(), ids.end(),
            [&](int a, int b) { return t.node(a).level > t.node(b).level; });
  std::map<int, int> rank;
  for (int id : ids) {
    int r = 0;
    std::vector<int> kids = t.children(id);
    std::deque<int> stack(kids.begin(), kids.end());
    while (!stack.empty()) {
      int d = stack.front();
      stack.pop_front();
      r = std::max(r, rank.at(d) + 1);
      for (int c : t.children(d)) stack.push_back(c);
    }
    rank[id] = r;
  }
  return rank;
}

/// Ordinals below omega^omega as coefficient vectors: index i holds the
/// coefficient of w^i. An independent route to CNF addition, multiplication
/// and rendering for the symbolic-bound table.
struct OrdVec {
  std::vector<std::uint64_t> c;

  static OrdVec nat(std::uint64_t n) {
    OrdVec v;
    if (n) v.c = {n};
    return v;
  }
  static OrdVec omega_times(std::uint64_t coeff, std::size_t power = 1) {
    OrdVec v;
    v.c.assign(power + 1, 0);
    v.c[power] = coeff;
    return v;
  }

  bool is_zero() const {
    return std::all_of(c.begin(), c.end(), [](std::uint64_t x) { return x == 0; });
  }
  int degree() const {
    for (int i = static_cast<int>(c.size()) - 1; i >= 0; --i)
      if (c[i]) return i;
    return -1;
  }

  friend OrdVec add(const OrdVec& a, const OrdVec& b) {
    int hb = b.degree();
    if (hb < 0) return a;
    OrdVec r = b;
    int da = a.degree();
    if (da > hb) {
      r.c.resize(da + 1, 0);
      for (int i = hb + 1; i <= da; ++i) r.c[i] = a.c[i];
    }
    if (da >= hb) r.c[hb] += a.c[hb];
    return r;
  }

  friend OrdVec mul(const OrdVec& a, const OrdVec& b) {
    if (a.is_zero() || b.is_zero()) return OrdVec{};
    OrdVec acc;
    int da = a.degree();
    for (int j = b.degree(); j >= 0; --j) {
      if (!b.c[j]) continue;
      OrdVec part;
      if (j > 0) {
        part = omega_times(b.c[j], static_cast<std::size_t>(da + j));
      } else {
        part = a;
        part.c[da] *= b.c[0];
      }
      acc = add(acc, part);
    }
    return acc;
  }

  std::string str() const {
    if (is_zero()) return "0";
    std::string out;
    for (int i = degree(); i >= 0; --i) {
      if (!c[i]) continue;
      if (!out.empty()) out += "+";
      if (i == 0) {
        out += std::to_string(c[i]);
        continue;
      }
      out += "w";
      if (i > 1) out += "^" + std::to_string(i);
      if (c[i] != 1) out += "*" + std::to_string(c[i]);
    }
    return out;
  }
};

/// Flattens a U element into the (3k+1) x (3k+1) integer matrix it
/// abbreviates, for generic-multiplication cross-checks.
inline std::vector<std::vector<BigInt>> u_flatten(const UElement& x) {
  int k = x.k;
  int n = 3 * k + 1;
  std::vector<std::vector<BigInt>> m(n, std::vector<BigInt>(n));
  for (int i = 0; i < n; ++i) m[i][i] = 1;
  for (int i = 0; i < k; ++i) {
    for (int j = 0; j < k; ++j) {
      m[i][k + j] = x.a.at(i, j);
      m[i][2 * k + j] = x.d.at(i, j);
      m[k + i][2 * k + j] = x.b.at(i, j);
    }
    m[i][3 * k] = x.f.at(i);
    m[k + i][3 * k] = x.e.at(i);
    m[2 * k + i][3 * k] = x.c.at(i);
  }
  return m;
}

inline std::vector<std::vector<BigInt>> generic_mat_mul(
    const std::vector<std::vector<BigInt>>& a, const std::vector<std::vector<BigInt>>& b) {
  std::size_t n = a.size();
  std::vector<std::vector<BigInt>> r(n, std::vector<BigInt>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t l = 0; l < n; ++l) {
      if (a[i][l] == 0) continue;
      for (std::size_t j = 0; j < n; ++j) r[i][j] += a[i][l] * b[l][j];
    }
  return r;
}

}  // namespace ncg::testing
