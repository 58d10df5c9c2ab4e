#include "ncg/perm.hpp"

#include <algorithm>
#include <cstdlib>
#include <cstring>
#include <deque>
#include <numeric>
#include <set>

namespace ncg {

Perm perm_identity(int degree) {
  Perm p(degree);
  std::iota(p.begin(), p.end(), 0);
  return p;
}

bool perm_valid(const Perm& p) {
  std::vector<char> seen(p.size(), 0);
  for (int v : p) {
    if (v < 0 || v >= static_cast<int>(p.size()) || seen[v]) return false;
    seen[v] = 1;
  }
  return true;
}

Perm perm_compose(const Perm& f, const Perm& g) {
  Perm r(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) r[i] = f[g[i]];
  return r;
}

Perm perm_inverse(const Perm& f) {
  Perm r(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) r[f[i]] = static_cast<int>(i);
  return r;
}

std::string perm_to_string(const Perm& p) {
  std::string s = "[";
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(p[i]);
  }
  return s + "]";
}

std::size_t default_enumeration_cap() {
  if (const char* env = std::getenv("NCG_CAP")) {
    char* end = nullptr;
    unsigned long long v = std::strtoull(env, &end, 10);
    if (end && *end == '\0' && v > 0) return static_cast<std::size_t>(v);
  }
  return 10000;
}

std::string FiniteGroup::key(const Perm& p) {
  std::string s(p.size() * sizeof(int), '\0');
  std::memcpy(s.data(), p.data(), s.size());
  return s;
}

FiniteGroup FiniteGroup::enumerate(int degree, const std::vector<Perm>& generators, std::size_t cap) {
  FiniteGroup g;
  g.degree_ = degree;
  for (const auto& p : generators) {
    if (static_cast<int>(p.size()) != degree || !perm_valid(p))
      throw std::invalid_argument("invalid permutation generator");
  }
  Perm id = perm_identity(degree);
  g.elements_.push_back(id);
  g.index_[key(id)] = 0;
  std::deque<int> frontier{0};
  while (!frontier.empty()) {
    int cur = frontier.front();
    frontier.pop_front();
    for (const auto& gen : generators) {
      Perm next = perm_compose(gen, g.elements_[cur]);
      std::string k = key(next);
      if (g.index_.count(k)) continue;
      if (g.elements_.size() >= cap)
        throw CapExceeded("group enumeration exceeds cap of " + std::to_string(cap));
      int nid = static_cast<int>(g.elements_.size());
      g.index_[k] = nid;
      g.elements_.push_back(std::move(next));
      frontier.push_back(nid);
    }
  }
  return g;
}

int FiniteGroup::id_of(const Perm& p) const {
  auto it = index_.find(key(p));
  return it == index_.end() ? -1 : it->second;
}

int FiniteGroup::mul(int a, int b) const {
  int id = id_of(perm_compose(elements_[a], elements_[b]));
  if (id < 0) throw std::logic_error("group not closed under multiplication");
  return id;
}

int FiniteGroup::inv(int a) const {
  int id = id_of(perm_inverse(elements_[a]));
  if (id < 0) throw std::logic_error("group not closed under inverse");
  return id;
}

std::vector<int> subgroup_closure(const FiniteGroup& g, const std::vector<int>& generator_ids) {
  std::vector<char> in(g.order(), 0);
  std::vector<int> elems{0};
  in[0] = 1;
  std::deque<int> frontier{0};
  while (!frontier.empty()) {
    int cur = frontier.front();
    frontier.pop_front();
    for (int gen : generator_ids) {
      int next = g.mul(gen, cur);
      if (!in[next]) {
        in[next] = 1;
        elems.push_back(next);
        frontier.push_back(next);
      }
    }
  }
  std::sort(elems.begin(), elems.end());
  return elems;
}

std::vector<int> small_generating_set(const FiniteGroup& g, const std::vector<int>& subgroup) {
  std::vector<int> gens;
  std::vector<char> generated(g.order(), 0);
  generated[0] = 1;
  for (int e : subgroup) {
    if (generated[e]) continue;
    gens.push_back(e);
    std::vector<int> closure = subgroup_closure(g, gens);
    std::fill(generated.begin(), generated.end(), 0);
    for (int c : closure) generated[c] = 1;
    if (closure.size() == subgroup.size()) break;
  }
  return gens;
}

bool is_subgroup(const FiniteGroup& g, const std::vector<int>& sorted_elems) {
  if (!std::binary_search(sorted_elems.begin(), sorted_elems.end(), 0)) return false;
  for (int a : sorted_elems)
    for (int b : sorted_elems)
      if (!std::binary_search(sorted_elems.begin(), sorted_elems.end(), g.mul(a, b))) return false;
  return true;
}

CosetAction::CosetAction(const FiniteGroup& g, const std::vector<int>& subgroup_elems) : g_(&g) {
  coset_of_.assign(g.order(), -1);
  for (int e = 0; e < g.order(); ++e) {
    if (coset_of_[e] >= 0) continue;
    int cid = n_cosets_++;
    rep_.push_back(e);
    for (int h : subgroup_elems) coset_of_[g.mul(e, h)] = cid;
    if (coset_of_[e] != cid) throw std::invalid_argument("coset action: elements do not form a subgroup");
  }
}

std::string CosetAction::point_label(int point) const {
  return perm_to_string(g_->perm(rep_[point]));
}

UnionAction::UnionAction(std::vector<std::shared_ptr<const GAction>> parts) : parts_(std::move(parts)) {
  for (const auto& p : parts_) {
    offsets_.push_back(total_);
    total_ += p->size();
  }
}

int UnionAction::block_of(int point) const {
  int b = 0;
  while (b + 1 < static_cast<int>(offsets_.size()) && offsets_[b + 1] <= point) ++b;
  return b;
}

int UnionAction::apply(int elem, int point) const {
  int b = block_of(point);
  return offsets_[b] + parts_[b]->apply(elem, point - offsets_[b]);
}

std::string UnionAction::point_label(int point) const {
  int b = block_of(point);
  return std::to_string(b) + ":" + parts_[b]->point_label(point - offsets_[b]);
}

TableAction::TableAction(int points, std::vector<std::vector<int>> table)
    : points_(points), table_(std::move(table)) {
  for (const auto& row : table_) {
    if (static_cast<int>(row.size()) != points_ || !perm_valid(row))
      throw std::invalid_argument("action table row is not a permutation of the point set");
  }
}

std::vector<int> orbit_of(const std::vector<int>& gen_ids, const GAction& x, int point) {
  std::set<int> seen{point};
  std::deque<int> frontier{point};
  while (!frontier.empty()) {
    int cur = frontier.front();
    frontier.pop_front();
    for (int gen : gen_ids) {
      int next = x.apply(gen, cur);
      if (seen.insert(next).second) frontier.push_back(next);
    }
  }
  return {seen.begin(), seen.end()};
}

std::vector<std::vector<int>> orbit_partition_of(const std::vector<int>& gen_ids,
                                                 const GAction& x) {
  std::vector<char> done(x.size(), 0);
  std::vector<std::vector<int>> classes;
  for (int p = 0; p < x.size(); ++p) {
    if (done[p]) continue;
    std::vector<int> orb = orbit_of(gen_ids, x, p);
    for (int q : orb) done[q] = 1;
    classes.push_back(std::move(orb));
  }
  return classes;
}

}  // namespace ncg
