#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "niltrans/errors.hpp"

namespace niltrans {

inline constexpr std::size_t kDefaultOrderCap = 5000;

// Orders above this are validated on seeded random triples instead of all
// order^3 products. The seed is fixed so every run checks the same triples.
inline constexpr std::size_t kExhaustiveAssociativityLimit = 256;
inline constexpr std::uint64_t kAssociativitySampleSeed = 1729;
inline constexpr std::size_t kAssociativitySampleCount = 10000;

// A finite group given by its full multiplication table. Immutable after
// construction; construction verifies the group axioms (identity, inverses,
// Latin square, associativity).
class FiniteGroup {
public:
  // `table[a][b]` is the index of the product a*b. Throws NotAGroupError when
  // the table is not a group, OrderLimitError when order > order_cap.
  static FiniteGroup from_cayley_table(const std::vector<std::vector<int>>& table,
                                       std::string name,
                                       std::size_t order_cap = kDefaultOrderCap);

  // Closure of permutation generators given in cycle notation with 1-based
  // points <= degree, e.g. "(1 2 3)(4 5)". Elements are indexed in
  // breadth-first discovery order starting from the identity; products use
  // the left-to-right action convention: (x*y) means "apply x, then y".
  static FiniteGroup from_permutation_generators(int degree,
                                                 const std::vector<std::string>& generators,
                                                 std::string name = "",
                                                 std::size_t order_cap = kDefaultOrderCap);

  int order() const { return order_; }
  const std::string& name() const { return name_; }
  int identity() const { return identity_; }

  int mul(int a, int b) const { return table_[static_cast<std::size_t>(a) * order_ + b]; }
  int inv(int a) const { return inverses_[static_cast<std::size_t>(a)]; }
  // a^x = x^{-1} a x
  int conj(int a, int x) const { return mul(mul(inv(x), a), x); }
  // [a, b] = a^{-1} b^{-1} a b
  int comm(int a, int b) const { return mul(mul(inv(a), inv(b)), mul(a, b)); }

  bool is_identity(int a) const { return a == identity_; }

  // Element order (smallest n >= 1 with a^n = 1).
  int element_order(int a) const;
  int power(int a, long long n) const;

  // Display label for one element; element indices when no labels were given.
  std::string label(int a) const;
  bool has_labels() const { return !labels_.empty(); }

  const std::vector<int>& table_flat() const { return table_; }

private:
  FiniteGroup() = default;
  static FiniteGroup build_checked(int order, std::vector<int> flat, std::string name,
                                   std::vector<std::string> labels, std::size_t order_cap);

  friend FiniteGroup make_group_from_flat_table(int order, std::vector<int> flat,
                                                std::string name,
                                                std::vector<std::string> labels,
                                                std::size_t order_cap);

  int order_ = 0;
  std::vector<int> table_;  // row-major order x order
  int identity_ = 0;
  std::vector<int> inverses_;
  std::string name_;
  std::vector<std::string> labels_;
};

// Internal constructor used by the family builders; validates like
// from_cayley_table but takes a flat table and optional labels.
FiniteGroup make_group_from_flat_table(int order, std::vector<int> flat, std::string name,
                                       std::vector<std::string> labels = {},
                                       std::size_t order_cap = kDefaultOrderCap);

// [x_1, x_2, ..., x_n] left-normed: [[...[x_1,x_2],...],x_n]; [a] = a.
int left_normed_commutator(const FiniteGroup& g, const std::vector<int>& xs);

}  // namespace niltrans
