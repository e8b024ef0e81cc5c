#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <unordered_map>
#include <vector>

#include "niltrans/bitset.hpp"
#include "niltrans/finite_group.hpp"

namespace niltrans {

inline constexpr std::size_t kDefaultSubgroupCap = 100000;

// Membership bit-vector over a parent group, closed under product and
// inverse. Equality is bit-vector equality.
struct Subgroup {
  const FiniteGroup* parent = nullptr;
  Bitset members;

  int order() const { return static_cast<int>(members.count()); }
  bool contains(int x) const { return members.test(static_cast<std::size_t>(x)); }
  std::vector<int> elements() const { return members.elements(); }
  bool is_trivial() const { return order() == 1; }

  friend bool operator==(const Subgroup& a, const Subgroup& b) {
    return a.parent == b.parent && a.members == b.members;
  }
};

// Closure of `gens` under the group product (orbit of the identity under
// right multiplication; finiteness makes inverses automatic).
Bitset close_under_product(const FiniteGroup& g, std::span<const int> gens);

Subgroup subgroup_generate(const FiniteGroup& g, std::span<const int> gens);
Subgroup trivial_subgroup(const FiniteGroup& g);
Subgroup whole_group(const FiniteGroup& g);

// Smallest subgroup of <ambient> containing S and normal in it: closes S
// under conjugation by ambient members first, then generates.
Bitset normal_closure_in(const FiniteGroup& g, const Bitset& ambient, std::span<const int> s);
Subgroup normal_closure(const FiniteGroup& g, std::span<const int> s);

// Greedy small generating set (ascending index scan).
std::vector<int> small_generating_set(const FiniteGroup& g, const Bitset& members);

Subgroup center(const FiniteGroup& g);
Bitset centralizer(const FiniteGroup& g, int x);
bool is_abelian_set(const FiniteGroup& g, const Bitset& members);
bool is_normal_in(const FiniteGroup& g, const Bitset& sub, const Bitset& ambient);

// x^{-1} H x
Bitset conjugate_set(const FiniteGroup& g, const Bitset& members, int x);

enum class SeriesDirection { Lower, Upper };

struct CentralSeries {
  const FiniteGroup* parent = nullptr;
  Bitset domain;  // the subgroup the series lives in
  SeriesDirection direction = SeriesDirection::Lower;
  // Terms until stabilization (first repeated term omitted). Lower:
  // terms[i] = gamma_{i+1}; Upper: terms[i] = Z_i.
  std::vector<Bitset> terms;
  bool stabilized() const { return !terms.empty(); }
};

// Lower series via generator commutators + normal closure; upper series via
// the ([h,x] in Z_i for all x) characterization.
CentralSeries central_series(const FiniteGroup& g, const Bitset& members, SeriesDirection dir);
CentralSeries central_series(const Subgroup& h, SeriesDirection dir);

// Least c with gamma_{c+1} trivial; nullopt when the lower series stabilizes
// above the trivial subgroup (not nilpotent).
std::optional<int> nilpotency_class(const FiniteGroup& g, const Bitset& members);
std::optional<int> nilpotency_class(const Subgroup& h);

inline bool class_at_most(const std::optional<int>& cls, int k) {
  return cls.has_value() && *cls <= k;
}

// Complete subgroup lattice by breadth-first growth (extend each known
// subgroup by one element). Sorted by (order, bit-vector). Throws
// BudgetError past `cap` distinct subgroups.
std::vector<Bitset> subgroup_lattice(const FiniteGroup& g, std::size_t cap = kDefaultSubgroupCap);

// Memoizes per-group facts that the deciders and the harness reuse heavily.
class GroupCache {
public:
  explicit GroupCache(const FiniteGroup& g) : g_(&g) {}

  const FiniteGroup& group() const { return *g_; }

  std::optional<int> nilpotency_class_of(const Bitset& members);
  const std::vector<Bitset>& lattice(std::size_t cap = kDefaultSubgroupCap);
  // Closure of members(H) together with one extra element.
  Bitset extend(const Bitset& h, int extra) const;

private:
  const FiniteGroup* g_;
  std::unordered_map<Bitset, std::optional<int>, BitsetHash> class_cache_;
  std::optional<std::vector<Bitset>> lattice_;
};

// The subgroup as a standalone FiniteGroup (elements reindexed in ascending
// parent order). `back_map` receives the parent indices when non-null.
FiniteGroup subgroup_as_group(const FiniteGroup& g, const Bitset& members, std::string name,
                              std::vector<int>* back_map = nullptr);

}  // namespace niltrans
