#include "ncg/ugroup_checks.hpp"

#include <algorithm>

namespace ncg {

std::string to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::Pass: return "Pass";
    case CheckStatus::Fail: return "Fail";
    case CheckStatus::Inconclusive: return "Inconclusive";
  }
  return "Fail";
}

namespace {

/// Structure-guided candidate movers for a coset X U_n at level p. Each one
/// follows the converse constructions of the normal-form lemma: a touches a
/// row below n, b meets a supported column of u, c meets a supported column
/// of v or of uv-x.
std::vector<UElement> targeted_movers(const UElement& X, int n, int p) {
  std::vector<UElement> out;
  int k = X.k;
  if (p < n && p < k) {
    UElement A = UElement::identity(k);
    A.a.at(p, 0) = 1;
    out.push_back(std::move(A));
  }
  for (int r = 0; r < std::min(n, k); ++r)
    for (int j = p; j < k; ++j)
      if (X.a.at(r, j) != 0) {
        UElement A = UElement::identity(k);
        A.b.at(j, 0) = 1;
        out.push_back(std::move(A));
        r = n;  // one hit suffices
        break;
      }
  for (int r = 0; r < std::min(n, k); ++r)
    for (int i = p; i < k; ++i)
      if (X.b.at(r, i) != 0) {
        UElement A = UElement::identity(k);
        A.c.at(i) = 1;
        out.push_back(std::move(A));
        r = n;
        break;
      }
  for (int r = 0; r < std::min(n, k); ++r) {
    for (int i = p; i < k; ++i) {
      BigInt acc = -X.d.at(r, i);
      for (int l = 0; l < k; ++l) acc += X.a.at(r, l) * X.b.at(l, i);
      if (acc != 0) {
        UElement A = UElement::identity(k);
        A.c.at(i) = 1;
        out.push_back(std::move(A));
        r = n;
        break;
      }
    }
  }
  return out;
}

/// True when some elementary element of U_p moves X U_n.
bool find_moving_witness(const UElement& X, int n, int p) {
  for (const UElement& A : targeted_movers(X, n, p))
    if (!coset_eq(u_mul(A, X), X, n)) return true;
  return scan_elementary(X.k, p, 3, [&](const UElement& A) {
    return !coset_eq(u_mul(A, X), X, n);
  });
}

}  // namespace

CosetEquivalencesResult check_coset_equivalences(const UElement& X, int n, int p, int samples,
                                                 Rng& rng, int entry_cap) {
  CosetEquivalencesResult res;
  WindowProfile w = window(X, n);
  if (w.n3 > X.k) {
    res.validity_ok = false;
    res.status = CheckStatus::Inconclusive;
    return res;
  }
  std::vector<UElement> sample = sample_up(rng, X.k, p, samples, entry_cap);

  // Each sampled A contributes one product and one normal-form triple,
  // shared by every forward check below.
  const int t1 = n, t2 = w.n2, t3 = std::max(w.n2, X.b.rn(n)), t4 = w.n3;
  if (p >= t1) {
    for (const UElement& A : sample) {
      UElement ax = u_mul(A, X);
      UNormalForms nf = normal_forms(A, X);
      if (p >= t1 && res.f1 == CheckStatus::Pass && !coset_eq(ax, nf.f1, n)) {
        res.f1 = CheckStatus::Fail;
        if (res.witness.empty()) res.witness = "F1 forward violated";
      }
      if (p >= t2 && res.f2 == CheckStatus::Pass && !coset_eq(ax, nf.f2, n)) {
        res.f2 = CheckStatus::Fail;
        if (res.witness.empty()) res.witness = "F2 forward violated";
      }
      if (p >= t3 && res.f3 == CheckStatus::Pass && !coset_eq(ax, nf.f3, n)) {
        res.f3 = CheckStatus::Fail;
        if (res.witness.empty()) res.witness = "F3 forward violated";
      }
      if (p >= t4 && res.fix == CheckStatus::Pass && !coset_eq(ax, X, n)) {
        res.fix = CheckStatus::Fail;
        if (res.witness.empty()) res.witness = "fixpoint forward violated";
      }
    }
  }

  auto converse = [&](auto form, const char* label) {
    for (const UElement& A : targeted_movers(X, n, p))
      if (!coset_eq(u_mul(A, X), form(A), n)) return CheckStatus::Pass;
    bool found = scan_elementary(X.k, p, 3, [&](const UElement& A) {
      return !coset_eq(u_mul(A, X), form(A), n);
    });
    if (found) return CheckStatus::Pass;
    if (res.witness.empty()) res.witness = std::string(label) + " converse witness not found";
    return CheckStatus::Inconclusive;
  };
  if (p < t1) res.f1 = converse([&](const UElement& A) { return normal_forms(A, X).f1; }, "F1");
  if (p < t2) res.f2 = converse([&](const UElement& A) { return normal_forms(A, X).f2; }, "F2");
  if (p < t3) res.f3 = converse([&](const UElement& A) { return normal_forms(A, X).f3; }, "F3");
  if (p < t4) res.fix = converse([&](const UElement&) { return X; }, "fixpoint");

  res.status = worst(worst(res.f1, res.f2), worst(res.f3, res.fix));
  return res;
}

NodeRankResult node_rank_check(const UElement& X, int n, int samples, Rng& rng, int entry_cap) {
  NodeRankResult res;
  WindowProfile w = window(X, n);
  if (w.n3 > X.k) {
    res.validity_ok = false;
    res.status = CheckStatus::Inconclusive;
    return res;
  }
  res.node_absent = w.n2 >= w.n3;
  res.expected_rank = std::max(0, w.n3 - w.n2 - 1);

  // (i) U_{N3} fixes the coset on all samples; one level below moves it.
  for (const UElement& A : sample_up(rng, X.k, w.n3, samples, entry_cap)) {
    if (!coset_eq(u_mul(A, X), X, n)) {
      res.status = CheckStatus::Fail;
      res.witness = "sampled element of U_{N3} moves the coset";
      return res;
    }
  }
  if (w.n3 > n && !find_moving_witness(X, n, w.n3 - 1)) {
    res.status = CheckStatus::Inconclusive;
    res.witness = "no moving witness at N3-1";
    return res;
  }

  // (ii) N_3 invariant on the sampled U_{N2}-orbit.
  std::vector<UElement> orbit_moves = sample_up(rng, X.k, w.n2, samples, entry_cap);
  for (const UElement& A : orbit_moves) {
    if (window(u_mul(A, X), n).n3 != w.n3) {
      res.status = CheckStatus::Fail;
      res.witness = "N3 not invariant on the U_{N2}-orbit";
      return res;
    }
  }
  // (iii) N_2 invariant on the sampled U_n-orbit.
  for (const UElement& A : sample_up(rng, X.k, n, samples, entry_cap)) {
    if (window(u_mul(A, X), n).n2 != w.n2) {
      res.status = CheckStatus::Fail;
      res.witness = "N2 not invariant on the U_n-orbit";
      return res;
    }
  }

  // (iv) Stabilization depth along sampled branches: every level strictly
  // between N_2 and N_3 moves some branch; N_3 itself was checked in (i).
  std::vector<UElement> branches{X};
  for (int i = 0; i < std::min<int>(4, static_cast<int>(orbit_moves.size())); ++i)
    branches.push_back(u_mul(orbit_moves[i], X));
  int stabilization = w.n2;
  for (int p = w.n2 + 1; p < w.n3; ++p) {
    bool moved = false;
    for (const UElement& Xp : branches)
      if (find_moving_witness(Xp, n, p)) {
        moved = true;
        break;
      }
    if (!moved) {
      res.status = CheckStatus::Inconclusive;
      res.witness = "no mover found at level " + std::to_string(p);
      return res;
    }
    stabilization = p + 1;
  }
  res.measured_rank =
      res.node_absent ? 0 : std::max(0, std::max(stabilization, w.n2 + 1) - w.n2 - 1);
  if (res.measured_rank != res.expected_rank) {
    res.status = CheckStatus::Fail;
    res.witness = "measured stabilization depth disagrees with max{0, N3-N2-1}";
  }
  return res;
}

NormalSubgroupResult normal_subgroup_checks(int k, int samples, Rng& rng, int entry_cap) {
  NormalSubgroupResult res;
  for (int i = 0; i < samples; ++i) {
    UElement n1 = random_n_element(rng, k, entry_cap);
    UElement n2 = random_n_element(rng, k, entry_cap);
    UElement g = random_u_element(rng, k, 0, entry_cap);
    UElement x = random_u_element(rng, k, 0, entry_cap);

    if (!in_normal_subgroup(u_mul(n1, n2))) res.closed_under_mul = false;
    if (!in_normal_subgroup(u_inv(n1))) res.closed_under_inv = false;
    if (!(u_mul(n1, n2) == u_mul(n2, n1))) res.abelian = false;
    if (!in_normal_subgroup(u_mul(u_mul(g, n1), u_inv(g)))) res.conjugation_stable = false;
    UElement comm = u_mul(u_mul(g, x), u_mul(u_inv(g), u_inv(x)));
    if (!in_normal_subgroup(comm)) res.commutators_in_n = false;
  }
  if (!(res.closed_under_mul && res.closed_under_inv && res.abelian && res.conjugation_stable &&
        res.commutators_in_n)) {
    res.status = CheckStatus::Fail;
    res.witness = "normal subgroup property violated";
  }
  return res;
}

AlgebraResult algebra_checks(int k, int samples, Rng& rng, int entry_cap) {
  AlgebraResult res;
  UElement id = UElement::identity(k);
  for (int i = 0; i < samples; ++i) {
    UElement a = random_u_element(rng, k, 0, entry_cap);
    UElement b = random_u_element(rng, k, 0, entry_cap);
    UElement c = random_u_element(rng, k, 0, entry_cap);
    if (!(u_mul(u_mul(a, b), c) == u_mul(a, u_mul(b, c)))) res.associative = false;
    if (!(u_mul(a, u_inv(a)) == id) || !(u_mul(u_inv(a), a) == id)) res.inverse_law = false;

    int n = 1 + static_cast<int>(static_cast<unsigned>(i) % static_cast<unsigned>(k));
    UElement un1 = random_u_element(rng, k, n, entry_cap);
    UElement un2 = random_u_element(rng, k, n, entry_cap);
    if (!u_in_un(u_mul(un1, un2), n) || !u_in_un(u_inv(un1), n)) res.un_closed = false;
  }
  if (!(res.associative && res.inverse_law && res.un_closed)) {
    res.status = CheckStatus::Fail;
    res.witness = "algebra law violated";
  }
  return res;
}

GrowthWitnessResult growth_witness_n3(const UElement& X, int n) {
  GrowthWitnessResult res;
  WindowProfile w = window(X, n);
  if (n >= X.a.rn(n)) {
    res.status = CheckStatus::Inconclusive;
    res.witness = "growth sequence needs n < R^n(u)";
    return res;
  }
  int p = w.n2 - 1;  // n <= p < R^n(u)
  // Column jb with a nonzero u entry in the first n rows at jb >= p.
  int jb = -1;
  for (int r = 0; r < n && jb < 0; ++r)
    for (int j = X.k - 1; j >= p; --j)
      if (X.a.at(r, j) != 0) {
        jb = j;
        break;
      }
  if (jb < 0) {
    res.status = CheckStatus::Inconclusive;
    res.witness = "no usable column for the b_m sequence";
    return res;
  }
  int start = std::max(w.n3, p + 1);
  if (start >= X.k) {
    res.status = CheckStatus::Inconclusive;
    res.witness = "truncation too small for a growth tail";
    return res;
  }
  int prev = -1;
  for (int m = start; m < X.k; ++m) {
    UElement A = UElement::identity(X.k);
    A.b.at(jb, m) = 1;  // elementary b_m in L_p
    int n3 = window(u_mul(A, X), n).n3;
    res.observed.push_back(n3);
    if (prev >= 0 && n3 <= prev) {
      res.status = CheckStatus::Fail;
      res.witness = "N3(A_m X) failed to grow strictly";
      return res;
    }
    prev = n3;
  }
  return res;
}

GrowthWitnessResult growth_witness_n2(const UElement& X, int n) {
  GrowthWitnessResult res;
  if (n < 1) {
    res.status = CheckStatus::Inconclusive;
    res.witness = "growth sequence needs n >= 1";
    return res;
  }
  WindowProfile w = window(X, n);
  int start = std::max(w.n2, n);
  if (start >= X.k) {
    res.status = CheckStatus::Inconclusive;
    res.witness = "truncation too small for a growth tail";
    return res;
  }
  int prev = -1;
  for (int m = start; m < X.k; ++m) {
    UElement A = UElement::identity(X.k);
    A.a.at(n - 1, m) = 1;  // a_m in L_{n-1} touching a counted row
    int n2 = window(u_mul(A, X), n).n2;
    res.observed.push_back(n2);
    if (prev >= 0 && n2 <= prev) {
      res.status = CheckStatus::Fail;
      res.witness = "N2(A_m X) failed to grow strictly";
      return res;
    }
    prev = n2;
  }
  return res;
}

}  // namespace ncg
