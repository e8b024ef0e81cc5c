#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "niltrans/subgroup.hpp"

namespace niltrans {

enum class WitnessKind {
  SubgpFail,
  NilFail,
  MalFail,
  IntersectionFail,
  MalnormalFail,
  DichotomyWitness,
};

std::string witness_kind_name(WitnessKind k);

// A machine-checkable counterexample. Replaying it against the violated
// definition (replay_witness) must reproduce the failure.
struct Witness {
  WitnessKind kind;
  std::vector<std::pair<std::string, int>> elements;    // named element indices
  std::vector<std::pair<std::string, Bitset>> subgroups;  // named member sets
  std::string note;

  int element(const std::string& name) const;
  const Bitset* subgroup(const std::string& name) const;
};

struct Verdict {
  bool holds = true;
  std::optional<Witness> witness;
  std::string method;
  std::map<std::string, std::uint64_t> stats;
};

// Q(x,y): all 2^{k+1} left-normed commutators of length k+1 with entries in
// {x,y} are trivial; equivalently <x,y> is nilpotent of class <= k.
bool q_predicate(const FiniteGroup& g, int k, int x, int y);

// { y : Q(x,y) }. Contains the centralizer of x; a subgroup exactly when the
// group is NT_k.
Bitset ck_set(const FiniteGroup& g, int k, int x);

// Sentence (Subgp): forall x != 1, y1, y2: Q(x,y1) & Q(x,y2) -> Q(x,y1^{-1}y2).
Verdict eval_subgp(const FiniteGroup& g, int k);

// Sentence (Nil): forall x != 1, y_1..y_{k+1} with Q(x,y_i): [y_1,...,y_{k+1}] = 1.
// Implemented per x as a class test on <C^k(x)> with the literal tuple scan
// used to locate the first failing tuple; equivalent to the literal sentence.
Verdict eval_nil(const FiniteGroup& g, int k);

// The literal (k+1)-tuple scan with no class shortcut; the small-instance
// oracle for eval_nil.
Verdict eval_nil_literal(const FiniteGroup& g, int k);

// Sentence (Mal): forall x,y != 1, z: Q(x,y) & Q(x,y^z) -> Q(x,z).
Verdict eval_mal(const FiniteGroup& g, int k);

// All subgroups of nilpotency class <= k, found by breadth-first growth from
// the trivial and cyclic subgroups; sorted by (order, bit-vector). Throws
// BudgetError past `cap`.
std::vector<Subgroup> enumerate_nilk_subgroups(const FiniteGroup& g, int k,
                                               std::size_t cap = kDefaultSubgroupCap);
std::vector<Subgroup> enumerate_nilk_subgroups(GroupCache& cache, int k,
                                               std::size_t cap = kDefaultSubgroupCap);

std::vector<Subgroup> maximal_nilk_subgroups(const FiniteGroup& g, int k,
                                             std::size_t cap = kDefaultSubgroupCap);
std::vector<Subgroup> maximal_nilk_subgroups(GroupCache& cache, int k,
                                             std::size_t cap = kDefaultSubgroupCap);

// H is malnormal in G when H cap H^x = 1 for every x outside H.
Verdict is_malnormal(const FiniteGroup& g, const Subgroup& h);

enum class NtMethod { Sentences, CkCharacterization, PairwiseIntersections };

NtMethod nt_method_from_string(const std::string& s);
std::string nt_method_name(NtMethod m);

Verdict is_ntk(const FiniteGroup& g, int k, NtMethod method,
               std::size_t cap = kDefaultSubgroupCap);
Verdict is_ntk(GroupCache& cache, int k, NtMethod method,
               std::size_t cap = kDefaultSubgroupCap);

// Structural CSN_k: every maximal nil_k subgroup is malnormal.
Verdict is_csnk(const FiniteGroup& g, int k, std::size_t cap = kDefaultSubgroupCap);
Verdict is_csnk(GroupCache& cache, int k, std::size_t cap = kDefaultSubgroupCap);

// Sentence form Subgp + Nil + Mal; agrees with the structural decider.
Verdict is_csnk_sentences(const FiniteGroup& g, int k);

// Re-evaluates the violated formula on the witness data; true when the
// witness still exhibits the failure it claims.
bool replay_witness(const FiniteGroup& g, int k, const Witness& w);

}  // namespace niltrans
