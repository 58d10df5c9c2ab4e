#pragma once

#include <cstddef>
#include <memory>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

namespace ncg {

/// Permutation of {0,...,deg-1} as an image array.
using Perm = std::vector<int>;

Perm perm_identity(int degree);
bool perm_valid(const Perm& p);
/// (f o g)(x) = f(g(x)).
Perm perm_compose(const Perm& f, const Perm& g);
Perm perm_inverse(const Perm& f);
std::string perm_to_string(const Perm& p);

/// Thrown when element enumeration would exceed the configured cap.
struct CapExceeded : std::runtime_error {
  explicit CapExceeded(const std::string& what) : std::runtime_error(what) {}
};

/// Default enumeration cap; overridable per call and via NCG_CAP.
std::size_t default_enumeration_cap();

/// A finite permutation group with its elements enumerated explicitly.
/// Element 0 is the identity; ids are stable and ordered by discovery in a
/// deterministic breadth-first closure, so equal generator lists give equal
/// enumerations. Membership and products are exact.
class FiniteGroup {
 public:
  static FiniteGroup enumerate(int degree, const std::vector<Perm>& generators, std::size_t cap);

  int degree() const { return degree_; }
  int order() const { return static_cast<int>(elements_.size()); }
  const Perm& perm(int id) const { return elements_[id]; }
  const std::vector<Perm>& elements() const { return elements_; }
  /// Id of a permutation, or -1 when it is not an element.
  int id_of(const Perm& p) const;
  int mul(int a, int b) const;  // id of perm(a) o perm(b)
  int inv(int a) const;

 private:
  int degree_ = 0;
  std::vector<Perm> elements_;
  std::unordered_map<std::string, int> index_;  // packed image array -> id

  static std::string key(const Perm& p);
};

/// Closure of a set of element ids under multiplication; result is sorted.
std::vector<int> subgroup_closure(const FiniteGroup& g, const std::vector<int>& generator_ids);

/// Extracts a small generating subset of an enumerated subgroup, useful to
/// keep orbit sweeps cheap. The result generates exactly the given set.
std::vector<int> small_generating_set(const FiniteGroup& g, const std::vector<int>& subgroup);

bool is_subgroup(const FiniteGroup& g, const std::vector<int>& sorted_elems);

/// Finite G-set for an enumerated group: apply(e, p) is the action of
/// element id e on point p. Implementations are immutable after build.
class GAction {
 public:
  virtual ~GAction() = default;
  virtual int size() const = 0;
  virtual int apply(int elem, int point) const = 0;
  virtual std::string point_label(int point) const { return std::to_string(point); }
};

/// The natural action on {0,...,deg-1}.
class NaturalAction final : public GAction {
 public:
  explicit NaturalAction(const FiniteGroup& g) : g_(&g) {}
  int size() const override { return g_->degree(); }
  int apply(int elem, int point) const override { return g_->perm(elem)[point]; }

 private:
  const FiniteGroup* g_;
};

/// Left-translation action on the left cosets of a subgroup. Coset ids are
/// assigned by the least element id they contain, in increasing order.
class CosetAction final : public GAction {
 public:
  CosetAction(const FiniteGroup& g, const std::vector<int>& subgroup_elems);
  int size() const override { return n_cosets_; }
  int apply(int elem, int point) const override {
    return coset_of_[g_->mul(elem, rep_[point])];
  }
  int coset_of_element(int elem) const { return coset_of_[elem]; }
  int representative(int coset) const { return rep_[coset]; }
  std::string point_label(int point) const override;

 private:
  const FiniteGroup* g_;
  int n_cosets_ = 0;
  std::vector<int> coset_of_;  // element id -> coset id
  std::vector<int> rep_;       // coset id -> least element id
};

/// Disjoint union of actions; points are tagged blocks laid out in order.
class UnionAction final : public GAction {
 public:
  explicit UnionAction(std::vector<std::shared_ptr<const GAction>> parts);
  int size() const override { return total_; }
  int apply(int elem, int point) const override;
  std::string point_label(int point) const override;
  int block_of(int point) const;
  int block_offset(int block) const { return offsets_[block]; }

 private:
  std::vector<std::shared_ptr<const GAction>> parts_;
  std::vector<int> offsets_;
  int total_ = 0;
};

/// Explicit action table, one permutation of the point set per element.
class TableAction final : public GAction {
 public:
  TableAction(int points, std::vector<std::vector<int>> table);
  int size() const override { return points_; }
  int apply(int elem, int point) const override { return table_[elem][point]; }

 private:
  int points_;
  std::vector<std::vector<int>> table_;
};

/// Orbit of a point under the subgroup generated by gen_ids; sorted.
std::vector<int> orbit_of(const std::vector<int>& gen_ids, const GAction& x, int point);

/// Orbit partition of the whole point set; classes sorted by least element.
std::vector<std::vector<int>> orbit_partition_of(const std::vector<int>& gen_ids, const GAction& x);

}  // namespace ncg
