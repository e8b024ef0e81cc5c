#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "niltrans/finite_group.hpp"
#include "niltrans/magnus.hpp"
#include "niltrans/nilk.hpp"

namespace niltrans {

inline constexpr std::size_t kDefaultNodeCap = 1000000;

// One free factor: a free nilpotent group N(rank, cls) or a finite group.
struct NilFactor {
  int rank = 2;
  int cls = 2;
  friend bool operator==(const NilFactor&, const NilFactor&) = default;
};

using Factor = std::variant<NilFactor, std::shared_ptr<const FiniteGroup>>;

// A free product, one entry per copy. A-free groups use identical entries;
// heterogeneous factors (e.g. C_4 * C_2) are allowed.
struct FreeProductSpec {
  std::vector<Factor> factors;

  int copies() const { return static_cast<int>(factors.size()); }
  static FreeProductSpec copies_of(Factor f, int r);
  static FreeProductSpec pair(Factor a, Factor b);

  bool all_nil() const;
  bool same_spec(const FreeProductSpec& o) const;
};

// Element of one factor: an index for finite factors, a word for free
// nilpotent factors. Words in class <= 2 factors are kept in collected
// canonical form, so equality is structural.
struct FactorElement {
  std::variant<int, FreeWord> value;
  friend bool operator==(const FactorElement&, const FactorElement&) = default;
};

struct Syllable {
  int copy = 0;
  FactorElement elem;
  friend bool operator==(const Syllable&, const Syllable&) = default;
};

// Reduced free-product word: no identity syllables, adjacent syllables from
// distinct copies.
struct FPWord {
  std::shared_ptr<const FreeProductSpec> spec;
  std::vector<Syllable> syllables;

  int syllable_length() const { return static_cast<int>(syllables.size()); }
  bool is_identity() const { return syllables.empty(); }
};

bool fp_equal(const FPWord& a, const FPWord& b);

// Merges adjacent same-copy syllables via factor multiplication and drops
// identity syllables, to a fixpoint.
FPWord fp_normalize(std::shared_ptr<const FreeProductSpec> spec,
                    std::vector<Syllable> raw);

FPWord fp_identity(std::shared_ptr<const FreeProductSpec> spec);
FPWord fp_mul(const FPWord& a, const FPWord& b);
FPWord fp_inverse(const FPWord& a);
FPWord fp_power(const FPWord& a, long long n);

// w = conjugator * core * conjugator^{-1} with core cyclically reduced
// (first and last syllables from distinct copies, or length <= 1).
struct CyclicReduction {
  FPWord core;
  FPWord conjugator;
};
CyclicReduction cyclic_reduce(const FPWord& w);

// Embedding of *^m A into A * A (A free nilpotent): copy 0 maps verbatim,
// copy i >= 1 maps to a_i^{-1} (copy 1 elem) a_i with a_i = x1^i in copy 0.
FPWord embed_remark(const FPWord& w);

// Text form `0:x1x2 | 1:[x1,x2] | 0:x1^-1`; finite factors use `copy:#index`.
FPWord parse_fp_word(std::shared_ptr<const FreeProductSpec> spec, std::string_view text);
std::string fp_to_string(const FPWord& w);

struct MalnormalityParams {
  int radius = 3;          // ball radius over the sample alphabet
  int exponent_bound = 3;  // |n|, |m| <= bound
  std::uint64_t seed = 0;
  int extra_samples = 0;   // seeded extra alphabet elements per copy
  std::size_t node_cap = kDefaultNodeCap;
};

// Enumerates the ball of radius R over a documented alphabet (factor
// generators and the syllables of z, plus optional seeded samples) and
// searches for x outside { z^j : |j| <= N*R } with x^{-1} z^n x = z^m,
// 1 <= |n|,|m| <= N. The verdict is a claim about that ball only.
// Precondition: z nonidentity, cyclically reduced, syllable length >= 2.
Verdict bounded_malnormality(std::shared_ptr<const FreeProductSpec> spec, const FPWord& z,
                             const MalnormalityParams& params,
                             std::vector<std::string>* alphabet_out = nullptr);

// Recomputes x^{-1} z^n x = z^m for a reported witness.
bool replay_malnormality_witness(std::shared_ptr<const FreeProductSpec> spec, const FPWord& z,
                                 const std::string& x_text, long long n, long long m);

// Verifies x^{-1}(xy)x = yx = (xy)^{-1} in A * B for involutions x in A and
// y in B, so H = <xy> meets H^x nontrivially.
Verdict example2_check(std::shared_ptr<const FiniteGroup> a, int x,
                       std::shared_ptr<const FiniteGroup> b, int y);

// First involution of the group, ascending index; BadParamsError if none.
int first_involution(const FiniteGroup& g);

}  // namespace niltrans
