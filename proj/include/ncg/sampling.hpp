#pragma once

#include <cstdint>
#include <functional>
#include <random>
#include <set>
#include <vector>

#include "ncg/chain.hpp"
#include "ncg/constructions.hpp"
#include "ncg/tree.hpp"
#include "ncg/ugroup.hpp"

namespace ncg {

/// Deterministic RNG for verification sweeps; a fixed seed reproduces every
/// sampled object bit for bit.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}
  std::uint64_t next() { return eng_(); }
  /// Uniformish integer in [lo, hi] (inclusive); deterministic across
  /// platforms, slight modulo bias is irrelevant here.
  int uniform(int lo, int hi) {
    return lo + static_cast<int>(next() % static_cast<std::uint64_t>(hi - lo + 1));
  }
  bool one_in(int n) { return uniform(1, n) == 1; }
  /// Derives an independent child generator (for per-case reseeding).
  Rng fork() { return Rng(next() ^ 0x9e3779b97f4a7c15ull); }

 private:
  std::mt19937_64 eng_;
};

/// Random forest with up to max_nodes nodes.
WfTree random_tree(Rng& rng, int max_nodes);

/// Random downward-closed subset of the tree's nodes.
std::set<int> random_downward_closed(Rng& rng, const WfTree& t);

/// Random permutation of {0,...,degree-1}.
Perm random_perm(Rng& rng, int degree);

/// Random decreasing chain. The base group is resampled until its order
/// fits order_cap. With trivial_tail, the last level is the trivial group,
/// which makes every truncated recursion close.
PermGroupChain random_chain(Rng& rng, int max_degree, int max_depth, std::size_t order_cap,
                            bool trivial_tail = true);

/// Generators of a proper normal subgroup of the chain's base group when
/// one exists (by normal closure of random elements); possibly trivial.
std::vector<Perm> random_normal_subgroup(Rng& rng, const PermGroupChain& g);

/// Cyclic group Z_n as a Cayley table.
CayleyTable cyclic_table(int n);
/// Direct product of two Cayley tables.
CayleyTable product_table(const CayleyTable& a, const CayleyTable& b);

/// All automorphisms of a small Cayley-table group, by exhaustive search.
std::vector<Perm> automorphisms_of(const CayleyTable& gamma);

/// Chain of pointwise stabilizers of the enumeration order inside a
/// permutation group on the table's elements, depth levels beyond level 0.
PermGroupChain stabilizer_chain_of(const std::vector<Perm>& group_gens, int degree, int depth,
                                   std::size_t cap = default_enumeration_cap());

/// Random U element lying in U_p (entries of magnitude <= entry_cap).
UElement random_u_element(Rng& rng, int k, int p, int entry_cap);
/// Random element of the normal subgroup N (d, e, f blocks only).
UElement random_n_element(Rng& rng, int k, int entry_cap);

/// Elementary elements of U_p: one nonzero entry in a single block, with
/// magnitudes up to mag. Witness searches enumerate this set and short
/// products of it.
std::vector<UElement> elementary_u_elements(int k, int p, int mag = 3);

/// Lazily enumerates the elementary elements of U_p with magnitudes up to
/// max_mag, calling probe on each; stops and returns true as soon as probe
/// does. Spares the allocation of the full set during witness searches.
bool scan_elementary(int k, int p, int max_mag, const std::function<bool(const UElement&)>& probe);

/// Deterministic sample of U_p: magnitude-1 elementary elements on a column
/// subgrid (every block and row, three columns per row), a few short
/// products, and `extra` random elements.
std::vector<UElement> sample_up(Rng& rng, int k, int p, int extra, int entry_cap);

}  // namespace ncg
