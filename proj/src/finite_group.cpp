#include "niltrans/finite_group.hpp"

#include <map>
#include <queue>
#include <random>

#include "niltrans/permutation.hpp"

namespace niltrans {

namespace {

void verify_group_axioms(int order, const std::vector<int>& t, int& identity_out,
                         std::vector<int>& inverses_out) {
  const auto at = [&](int a, int b) { return t[static_cast<std::size_t>(a) * order + b]; };

  for (std::size_t i = 0; i < t.size(); ++i)
    if (t[i] < 0 || t[i] >= order) throw NotAGroupError("table entry out of range");

  // Latin square: every row and column is a permutation of 0..order-1.
  std::vector<char> seen(static_cast<std::size_t>(order));
  for (int r = 0; r < order; ++r) {
    std::fill(seen.begin(), seen.end(), 0);
    for (int c = 0; c < order; ++c) {
      if (seen[static_cast<std::size_t>(at(r, c))]++)
        throw NotAGroupError("row " + std::to_string(r) + " is not a permutation");
    }
  }
  for (int c = 0; c < order; ++c) {
    std::fill(seen.begin(), seen.end(), 0);
    for (int r = 0; r < order; ++r) {
      if (seen[static_cast<std::size_t>(at(r, c))]++)
        throw NotAGroupError("column " + std::to_string(c) + " is not a permutation");
    }
  }

  int identity = -1;
  for (int e = 0; e < order; ++e) {
    bool ok = true;
    for (int x = 0; x < order && ok; ++x) ok = at(e, x) == x && at(x, e) == x;
    if (ok) {
      identity = e;
      break;
    }
  }
  if (identity < 0) throw NotAGroupError("no two-sided identity");

  std::vector<int> inverses(static_cast<std::size_t>(order), -1);
  for (int x = 0; x < order; ++x) {
    for (int y = 0; y < order; ++y) {
      if (at(x, y) == identity && at(y, x) == identity) {
        inverses[static_cast<std::size_t>(x)] = y;
        break;
      }
    }
    if (inverses[static_cast<std::size_t>(x)] < 0)
      throw NotAGroupError("element " + std::to_string(x) + " has no two-sided inverse");
  }

  const auto check_triple = [&](int a, int b, int c) {
    if (at(at(a, b), c) != at(a, at(b, c)))
      throw NotAGroupError("associativity fails at (" + std::to_string(a) + "," +
                           std::to_string(b) + "," + std::to_string(c) + ")");
  };
  if (static_cast<std::size_t>(order) <= kExhaustiveAssociativityLimit) {
    for (int a = 0; a < order; ++a)
      for (int b = 0; b < order; ++b)
        for (int c = 0; c < order; ++c) check_triple(a, b, c);
  } else {
    std::mt19937_64 rng(kAssociativitySampleSeed);
    for (std::size_t i = 0; i < kAssociativitySampleCount; ++i) {
      int a = static_cast<int>(rng() % static_cast<std::uint64_t>(order));
      int b = static_cast<int>(rng() % static_cast<std::uint64_t>(order));
      int c = static_cast<int>(rng() % static_cast<std::uint64_t>(order));
      check_triple(a, b, c);
    }
  }

  identity_out = identity;
  inverses_out = std::move(inverses);
}

}  // namespace

FiniteGroup FiniteGroup::build_checked(int order, std::vector<int> flat, std::string name,
                                       std::vector<std::string> labels,
                                       std::size_t order_cap) {
  if (order <= 0) throw NotAGroupError("empty table");
  if (static_cast<std::size_t>(order) > order_cap)
    throw OrderLimitError(static_cast<std::size_t>(order), order_cap);
  if (flat.size() != static_cast<std::size_t>(order) * static_cast<std::size_t>(order))
    throw NotAGroupError("table is not square");
  if (!labels.empty() && labels.size() != static_cast<std::size_t>(order))
    throw NotAGroupError("label count does not match order");

  FiniteGroup g;
  g.order_ = order;
  g.table_ = std::move(flat);
  g.name_ = std::move(name);
  g.labels_ = std::move(labels);
  verify_group_axioms(order, g.table_, g.identity_, g.inverses_);
  return g;
}

FiniteGroup make_group_from_flat_table(int order, std::vector<int> flat, std::string name,
                                       std::vector<std::string> labels,
                                       std::size_t order_cap) {
  return FiniteGroup::build_checked(order, std::move(flat), std::move(name),
                                    std::move(labels), order_cap);
}

FiniteGroup FiniteGroup::from_cayley_table(const std::vector<std::vector<int>>& table,
                                           std::string name, std::size_t order_cap) {
  const int order = static_cast<int>(table.size());
  if (order == 0) throw NotAGroupError("empty table");
  std::vector<int> flat;
  flat.reserve(static_cast<std::size_t>(order) * order);
  for (const auto& row : table) {
    if (static_cast<int>(row.size()) != order) throw NotAGroupError("table is not square");
    flat.insert(flat.end(), row.begin(), row.end());
  }
  return build_checked(order, std::move(flat), std::move(name), {}, order_cap);
}

FiniteGroup FiniteGroup::from_permutation_generators(int degree,
                                                     const std::vector<std::string>& generators,
                                                     std::string name,
                                                     std::size_t order_cap) {
  if (degree < 1) throw BadParamsError("degree must be positive");
  std::vector<std::vector<int>> gens;
  gens.reserve(generators.size());
  for (const auto& text : generators) gens.push_back(parse_cycles(degree, text));

  // Breadth-first closure from the identity, extending by right
  // multiplication with the generators in the given order.
  std::vector<std::vector<int>> elems{identity_permutation(degree)};
  std::map<std::vector<int>, int> index{{elems[0], 0}};
  for (std::size_t front = 0; front < elems.size(); ++front) {
    for (const auto& gen : gens) {
      auto next = compose_permutations(elems[front], gen);
      if (index.emplace(next, static_cast<int>(elems.size())).second) {
        elems.push_back(std::move(next));
        if (elems.size() > order_cap)
          throw OrderLimitError(elems.size(), order_cap);
      }
    }
  }

  const int order = static_cast<int>(elems.size());
  std::vector<int> flat(static_cast<std::size_t>(order) * order);
  for (int a = 0; a < order; ++a)
    for (int b = 0; b < order; ++b)
      flat[static_cast<std::size_t>(a) * order + b] =
          index.at(compose_permutations(elems[a], elems[b]));

  std::vector<std::string> labels;
  labels.reserve(elems.size());
  for (const auto& p : elems) labels.push_back(cycle_string(p));

  if (name.empty()) name = "perm<" + std::to_string(degree) + ">";
  return build_checked(order, std::move(flat), std::move(name), std::move(labels), order_cap);
}

int FiniteGroup::element_order(int a) const {
  int n = 1;
  int cur = a;
  while (cur != identity_) {
    cur = mul(cur, a);
    ++n;
  }
  return n;
}

int FiniteGroup::power(int a, long long n) const {
  int base = n < 0 ? inv(a) : a;
  unsigned long long e = n < 0 ? static_cast<unsigned long long>(-(n + 1)) + 1
                               : static_cast<unsigned long long>(n);
  int acc = identity_;
  while (e) {
    if (e & 1) acc = mul(acc, base);
    base = mul(base, base);
    e >>= 1;
  }
  return acc;
}

std::string FiniteGroup::label(int a) const {
  if (!labels_.empty()) return labels_[static_cast<std::size_t>(a)];
  return std::to_string(a);
}

int left_normed_commutator(const FiniteGroup& g, const std::vector<int>& xs) {
  if (xs.empty()) throw BadParamsError("left_normed_commutator needs at least one element");
  int acc = xs[0];
  for (std::size_t i = 1; i < xs.size(); ++i) acc = g.comm(acc, xs[i]);
  return acc;
}

}  // namespace niltrans
