#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "ncg/chain.hpp"
#include "ncg/ordinal.hpp"
#include "ncg/perm.hpp"
#include "ncg/tree.hpp"

namespace ncg {

/// Explicit action rho : G -> Aut(H) as a full table over element ids.
/// Construction verifies that every rho(g) is an automorphism of H and that
/// rho is a homomorphism with rho(1) = id.
class ActionTable {
 public:
  static ActionTable create(const FiniteGroup& g, const FiniteGroup& h,
                            std::vector<std::vector<int>> table);
  static ActionTable trivial(const FiniteGroup& g, const FiniteGroup& h);

  int apply(int g_elem, int h_elem) const { return table_[g_elem][h_elem]; }
  const std::vector<std::vector<int>>& table() const { return table_; }

 private:
  std::vector<std::vector<int>> table_;
};

/// Thrown by semidirect when some G_n x H_n is not closed under the twisted
/// product; carries a violating pair (x in G_n, y in H_n with rho(x)(y)
/// outside H_n).
struct ClosureError : std::runtime_error {
  int level;
  int g_elem, h_elem;
  ClosureError(int level_, int g_elem_, int h_elem_)
      : std::runtime_error("semidirect: level " + std::to_string(level_) +
                           " is not closed under the action"),
        level(level_),
        g_elem(g_elem_),
        h_elem(h_elem_) {}
};

/// G x_rho H realized as a permutation chain on its own element set, with
/// A_n = G_n x H_n. Pair (gi, hi) is the point gi*|H|+hi.
struct SemidirectProduct {
  PermGroupChain chain;
  int g_order = 0, h_order = 0;

  int pair_point(int gi, int hi) const { return gi * h_order + hi; }
  std::pair<int, int> point_pair(int p) const { return {p / h_order, p % h_order}; }
};

SemidirectProduct semidirect(const PermGroupChain& g, const PermGroupChain& h,
                             const ActionTable& rho,
                             std::size_t cap = default_enumeration_cap());

struct Condition41Result {
  bool holds = false;
  /// Violating (g element id, h element id) pairs with rho(x)(y H_n) != y H_n.
  std::vector<std::pair<int, int>> violations;
};

/// Checks rho(x)(y H_n) = y H_n for all x in G_n and y in H.
Condition41Result check_condition_41(const PermGroupChain& g, const PermGroupChain& h,
                                     const ActionTable& rho, int n);

/// H_n' = the subgroup generated by rho(G_n)(H_n). At finite truncation this
/// closure may be all of H; callers get the computed set, never an
/// assumption of properness.
std::vector<int> twisted_level_closure(const PermGroupChain& g, const PermGroupChain& h,
                                       const ActionTable& rho, int n);

/// Node-for-node rank equality between T_1 (the x-part nonsingleton nodes of
/// the orbit tree of A on A/A_n) and S (the orbit tree of G on G/G_n),
/// together with the concatenation shadow rho(T) <= alpha + rho(T_1).
struct T1RankResult {
  bool precondition_ok = false;  // coset-fixing condition at every level
  bool node_ranks_equal = false;
  bool concat_shadow_holds = false;
  int rho_t = 0, rho_t1 = 0, rho_s = 0, alpha = 0;
  std::optional<std::pair<int, int>> mismatch;  // (T node id, S node id)
};

T1RankResult check_t1_rank_equality(const SemidirectProduct& a, const PermGroupChain& g,
                                    const PermGroupChain& h, const ActionTable& rho, int n);

/// Wreath product G wr H of H by G on k points (k = degree of g), with the
/// product-form chain A_n = G_<n> x prod_{i<n} H_n x prod_{i>=n} H truncated
/// to k coordinates.
SemidirectProduct wreath(const PermGroupChain& g, const PermGroupChain& h,
                         std::size_t cap = default_enumeration_cap());
/// The base, action and chain used by wreath, for condition checks.
struct WreathParts {
  PermGroupChain top;      // G with its stabilizer chain
  PermGroupChain bottom;   // H^k with the product chain
  ActionTable rho;         // coordinate permutation action
};
WreathParts wreath_parts(const PermGroupChain& g, const PermGroupChain& h,
                         std::size_t cap = default_enumeration_cap());

/// Finite group given by a Cayley table; table[i][j] is the product. The
/// identity may sit at any index and is located during validation.
struct CayleyTable {
  int order = 0;
  std::vector<std::vector<int>> table;
  int identity = 0;

  static CayleyTable create(int order, std::vector<std::vector<int>> table);
  int mul(int a, int b) const { return table[a][b]; }
  int inv(int a) const;
};

/// Outcome of the countable-group semidirect construction on a finite
/// stand-in Gamma: A = G x Gamma acting on Gamma through
/// phi(g, gamma)(lambda) = gamma * g(lambda), with the shifted chain
/// A_0 = A, A_{n+1} = G_n x {1}.
struct CountableSemidirectResult {
  PermGroupChain a_chain;
  bool phi_homomorphism = false;
  bool phi_injective = false;
  int rho_ta = 0;  // rank of the orbit tree of (A_n) on Gamma
  int rho_tg = 0;  // rank of the orbit tree of (G_n) on Gamma
  bool g_tree_empty = false;
  bool shift_asserted = false;  // skipped (vacuous) when the G-tree is empty
  bool shift_holds = false;     // rho_ta == rho_tg + 1
};

CountableSemidirectResult countable_semidirect(const CayleyTable& gamma, const PermGroupChain& g,
                                               std::size_t cap = default_enumeration_cap());

enum class BoundKind { SemidirectPositive, Wreath, Extension };

struct RankBound {
  BoundKind kind;
  Ordinal alpha, beta, bound;
};

/// Symbolic headline bounds: beta + alpha for the semidirect/wreath
/// theorems, beta * (omega * alpha + 1) for the extension theorem.
RankBound rank_bound(BoundKind kind, const Ordinal& alpha, const Ordinal& beta);

}  // namespace ncg
