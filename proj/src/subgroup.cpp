#include "niltrans/subgroup.hpp"

#include <algorithm>
#include <deque>
#include <set>

namespace niltrans {

Bitset close_under_product(const FiniteGroup& g, std::span<const int> gens) {
  const std::size_t n = static_cast<std::size_t>(g.order());
  Bitset members(n);
  members.set(static_cast<std::size_t>(g.identity()));
  std::vector<int> worklist{g.identity()};
  for (std::size_t front = 0; front < worklist.size(); ++front) {
    const int u = worklist[front];
    for (int s : gens) {
      const int v = g.mul(u, s);
      if (!members.test(static_cast<std::size_t>(v))) {
        members.set(static_cast<std::size_t>(v));
        worklist.push_back(v);
      }
    }
  }
  return members;
}

Subgroup subgroup_generate(const FiniteGroup& g, std::span<const int> gens) {
  return Subgroup{&g, close_under_product(g, gens)};
}

Subgroup trivial_subgroup(const FiniteGroup& g) {
  Bitset b(static_cast<std::size_t>(g.order()));
  b.set(static_cast<std::size_t>(g.identity()));
  return Subgroup{&g, b};
}

Subgroup whole_group(const FiniteGroup& g) {
  Bitset b(static_cast<std::size_t>(g.order()));
  for (int x = 0; x < g.order(); ++x) b.set(static_cast<std::size_t>(x));
  return Subgroup{&g, b};
}

Bitset normal_closure_in(const FiniteGroup& g, const Bitset& ambient, std::span<const int> s) {
  // Conjugation-closed generating sets generate normal subgroups.
  const auto conjugators = ambient.elements();
  Bitset closed(static_cast<std::size_t>(g.order()));
  std::vector<int> worklist;
  for (int x : s) {
    if (!closed.test(static_cast<std::size_t>(x))) {
      closed.set(static_cast<std::size_t>(x));
      worklist.push_back(x);
    }
  }
  for (std::size_t front = 0; front < worklist.size(); ++front) {
    const int a = worklist[front];
    for (int c : conjugators) {
      const int b = g.conj(a, c);
      if (!closed.test(static_cast<std::size_t>(b))) {
        closed.set(static_cast<std::size_t>(b));
        worklist.push_back(b);
      }
    }
  }
  return close_under_product(g, worklist);
}

Subgroup normal_closure(const FiniteGroup& g, std::span<const int> s) {
  return Subgroup{&g, normal_closure_in(g, whole_group(g).members, s)};
}

std::vector<int> small_generating_set(const FiniteGroup& g, const Bitset& members) {
  std::vector<int> gens;
  Bitset have(static_cast<std::size_t>(g.order()));
  have.set(static_cast<std::size_t>(g.identity()));
  for (int x : members.elements()) {
    if (!have.test(static_cast<std::size_t>(x))) {
      gens.push_back(x);
      have = close_under_product(g, gens);
      if (have == members) break;
    }
  }
  return gens;
}

Subgroup center(const FiniteGroup& g) {
  Bitset b(static_cast<std::size_t>(g.order()));
  for (int z = 0; z < g.order(); ++z) {
    bool central = true;
    for (int x = 0; x < g.order() && central; ++x) central = g.mul(z, x) == g.mul(x, z);
    if (central) b.set(static_cast<std::size_t>(z));
  }
  return Subgroup{&g, b};
}

Bitset centralizer(const FiniteGroup& g, int x) {
  Bitset b(static_cast<std::size_t>(g.order()));
  for (int y = 0; y < g.order(); ++y)
    if (g.mul(x, y) == g.mul(y, x)) b.set(static_cast<std::size_t>(y));
  return b;
}

bool is_abelian_set(const FiniteGroup& g, const Bitset& members) {
  const auto elems = members.elements();
  for (std::size_t i = 0; i < elems.size(); ++i)
    for (std::size_t j = i + 1; j < elems.size(); ++j)
      if (g.mul(elems[i], elems[j]) != g.mul(elems[j], elems[i])) return false;
  return true;
}

bool is_normal_in(const FiniteGroup& g, const Bitset& sub, const Bitset& ambient) {
  for (int h : sub.elements())
    for (int c : ambient.elements())
      if (!sub.test(static_cast<std::size_t>(g.conj(h, c)))) return false;
  return true;
}

Bitset conjugate_set(const FiniteGroup& g, const Bitset& members, int x) {
  Bitset out(members.size());
  for (int h : members.elements()) out.set(static_cast<std::size_t>(g.conj(h, x)));
  return out;
}

CentralSeries central_series(const FiniteGroup& g, const Bitset& members, SeriesDirection dir) {
  CentralSeries s;
  s.parent = &g;
  s.domain = members;
  s.direction = dir;

  if (dir == SeriesDirection::Lower) {
    // gamma_{i+1} = < [A_i, X] ^ H > where X generates H and A_i is the set
    // of left-normed generator commutators of weight i.
    const auto gens = small_generating_set(g, members);
    s.terms.push_back(members);
    std::vector<int> layer = gens;
    while (true) {
      std::set<int> next_layer;
      for (int a : layer)
        for (int x : gens) {
          const int c = g.comm(a, x);
          if (!g.is_identity(c)) next_layer.insert(c);
        }
      layer.assign(next_layer.begin(), next_layer.end());
      Bitset term = normal_closure_in(g, members, layer);
      if (term == s.terms.back()) break;
      s.terms.push_back(std::move(term));
      if (s.terms.back().count() == 1) break;
    }
  } else {
    // Z_0 = 1; Z_{i+1} = { h in H : [h, x] in Z_i for all x in H }.
    const auto elems = members.elements();
    Bitset z(static_cast<std::size_t>(g.order()));
    z.set(static_cast<std::size_t>(g.identity()));
    s.terms.push_back(z);
    while (true) {
      Bitset next(static_cast<std::size_t>(g.order()));
      const Bitset& prev = s.terms.back();
      for (int h : elems) {
        bool ok = true;
        for (int x : elems) {
          if (!prev.test(static_cast<std::size_t>(g.comm(h, x)))) {
            ok = false;
            break;
          }
        }
        if (ok) next.set(static_cast<std::size_t>(h));
      }
      if (next == s.terms.back()) break;
      s.terms.push_back(std::move(next));
      if (s.terms.back() == members) break;
    }
  }
  return s;
}

CentralSeries central_series(const Subgroup& h, SeriesDirection dir) {
  return central_series(*h.parent, h.members, dir);
}

std::optional<int> nilpotency_class(const FiniteGroup& g, const Bitset& members) {
  const auto s = central_series(g, members, SeriesDirection::Lower);
  if (s.terms.back().count() != 1) return std::nullopt;
  return static_cast<int>(s.terms.size()) - 1;
}

std::optional<int> nilpotency_class(const Subgroup& h) {
  return nilpotency_class(*h.parent, h.members);
}

std::vector<Bitset> subgroup_lattice(const FiniteGroup& g, std::size_t cap) {
  GroupCache cache(g);
  std::set<Bitset> seen;
  std::deque<Bitset> frontier;
  const auto push = [&](Bitset b) {
    if (seen.insert(b).second) {
      if (seen.size() > cap)
        throw BudgetError("subgroup lattice exceeds cap " + std::to_string(cap));
      frontier.push_back(std::move(b));
    }
  };
  push(trivial_subgroup(g).members);
  while (!frontier.empty()) {
    Bitset h = std::move(frontier.front());
    frontier.pop_front();
    for (int x = 0; x < g.order(); ++x) {
      if (h.test(static_cast<std::size_t>(x))) continue;
      push(cache.extend(h, x));
    }
  }
  std::vector<Bitset> out(seen.begin(), seen.end());
  std::sort(out.begin(), out.end(), [](const Bitset& a, const Bitset& b) {
    const auto ca = a.count(), cb = b.count();
    if (ca != cb) return ca < cb;
    return a < b;
  });
  return out;
}

std::optional<int> GroupCache::nilpotency_class_of(const Bitset& members) {
  auto it = class_cache_.find(members);
  if (it != class_cache_.end()) return it->second;
  auto cls = nilpotency_class(*g_, members);
  class_cache_.emplace(members, cls);
  return cls;
}

const std::vector<Bitset>& GroupCache::lattice(std::size_t cap) {
  if (!lattice_) lattice_ = subgroup_lattice(*g_, cap);
  return *lattice_;
}

Bitset GroupCache::extend(const Bitset& h, int extra) const {
  auto gens = h.elements();
  gens.push_back(extra);
  return close_under_product(*g_, gens);
}

FiniteGroup subgroup_as_group(const FiniteGroup& g, const Bitset& members, std::string name,
                              std::vector<int>* back_map) {
  const auto elems = members.elements();
  const int n = static_cast<int>(elems.size());
  std::vector<int> to_sub(static_cast<std::size_t>(g.order()), -1);
  for (int i = 0; i < n; ++i) to_sub[static_cast<std::size_t>(elems[i])] = i;
  std::vector<int> flat(static_cast<std::size_t>(n) * n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      flat[static_cast<std::size_t>(a) * n + b] =
          to_sub[static_cast<std::size_t>(g.mul(elems[a], elems[b]))];
  std::vector<std::string> labels;
  labels.reserve(elems.size());
  for (int e : elems) labels.push_back(g.label(e));
  if (back_map) *back_map = elems;
  return make_group_from_flat_table(n, std::move(flat), std::move(name), std::move(labels));
}

}  // namespace niltrans
