#pragma once

#include <string>
#include <vector>

#include "ncg/sampling.hpp"
#include "ncg/ugroup.hpp"

namespace ncg {

enum class CheckStatus { Pass, Fail, Inconclusive };

std::string to_string(CheckStatus s);

inline CheckStatus worst(CheckStatus a, CheckStatus b) {
  if (a == CheckStatus::Fail || b == CheckStatus::Fail) return CheckStatus::Fail;
  if (a == CheckStatus::Inconclusive || b == CheckStatus::Inconclusive)
    return CheckStatus::Inconclusive;
  return CheckStatus::Pass;
}

/// The four coset-normal-form equivalences at a given p: each threshold T
/// in {n, N_2, max(N_2, R^n(v)), N_3} yields a forward check (p >= T: the
/// normal-form coset equality holds on every sample) or a converse witness
/// search (p < T: some elementary element of U_p violates the equality).
struct CosetEquivalencesResult {
  CheckStatus status = CheckStatus::Pass;
  CheckStatus f1 = CheckStatus::Pass;
  CheckStatus f2 = CheckStatus::Pass;
  CheckStatus f3 = CheckStatus::Pass;
  CheckStatus fix = CheckStatus::Pass;
  bool validity_ok = true;  // requires N_3(X) <= k
  std::string witness;
};

CosetEquivalencesResult check_coset_equivalences(const UElement& X, int n, int p, int samples,
                                                 Rng& rng, int entry_cap = 3);

/// Node-rank verification for the orbit-tree node at level N_2(X):
/// (i) N_3 is the least level whose window fixes the coset, with a moving
/// witness one level below; (ii) N_3 constant on the sampled U_{N_2}-orbit;
/// (iii) N_2 constant on the sampled U_n-orbit; (iv) the measured
/// stabilization depth reproduces max{0, N_3 - N_2 - 1}.
struct NodeRankResult {
  CheckStatus status = CheckStatus::Pass;
  bool validity_ok = true;
  bool node_absent = false;  // the orbit is a singleton (N_2 >= N_3)
  int expected_rank = 0;
  int measured_rank = 0;
  std::string witness;
};

NodeRankResult node_rank_check(const UElement& X, int n, int samples, Rng& rng,
                               int entry_cap = 3);

/// Closure, commutativity, conjugation and commutator checks around the
/// normal subgroup N (zero a, b, c blocks).
struct NormalSubgroupResult {
  CheckStatus status = CheckStatus::Pass;
  bool closed_under_mul = true;
  bool closed_under_inv = true;
  bool abelian = true;
  bool conjugation_stable = true;
  bool commutators_in_n = true;
  std::string witness;
};

NormalSubgroupResult normal_subgroup_checks(int k, int samples, Rng& rng, int entry_cap = 3);

/// Group axioms at truncation k plus U_n subgroup closure for n <= k.
struct AlgebraResult {
  CheckStatus status = CheckStatus::Pass;
  bool associative = true;
  bool inverse_law = true;
  bool un_closed = true;
  std::string witness;
};

AlgebraResult algebra_checks(int k, int samples, Rng& rng, int entry_cap = 3);

/// Finite witnesses for the unbounded node-rank regimes: along the
/// constructed sequences, N_3(A_m X) (when n < R^n(u)) respectively
/// N_2(A_m X) grow strictly until the truncation edge.
struct GrowthWitnessResult {
  CheckStatus status = CheckStatus::Pass;
  std::vector<int> observed;  // the window values along the sequence
  std::string witness;
};

GrowthWitnessResult growth_witness_n3(const UElement& X, int n);
GrowthWitnessResult growth_witness_n2(const UElement& X, int n);

}  // namespace ncg
