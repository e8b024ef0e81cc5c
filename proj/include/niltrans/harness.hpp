#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "niltrans/nilk.hpp"

namespace niltrans {

struct CorpusEntry {
  std::shared_ptr<const FiniteGroup> group;
  std::string provenance;  // family spec string that reconstructs the group
  // Factor names when the entry was built as a direct product A x B.
  std::optional<std::pair<std::string, std::string>> product_of;
};

struct Corpus {
  std::vector<CorpusEntry> entries;
  int max_order = 0;
};

// Deterministic family corpus: cyclic, dihedral, symmetric/alternating
// (n <= 5), Q8, Heisenberg, semidirect C_q : C_p, then direct products of
// base pairs within the bound.
Corpus build_default_corpus(int max_order, std::size_t order_cap = kDefaultOrderCap);

extern const std::vector<std::string> kPropositionIds;
bool is_known_proposition(const std::string& id);

struct Counterexample {
  std::string group_name;
  Witness witness;
};

struct PropositionReport {
  std::string id;
  int k = 1;
  int groups_checked = 0;
  std::vector<Counterexample> counterexamples;
  // Corroborating data (e.g. the dichotomy pair found on the not-CSN side).
  std::vector<Counterexample> recorded;
  std::vector<std::pair<std::string, std::string>> skipped;  // group, reason
  std::int64_t elapsed_ms = 0;  // reported only when timing is requested

  bool pass() const { return counterexamples.empty(); }
};

struct HarnessOptions {
  std::size_t subgroup_cap = kDefaultSubgroupCap;
  int jobs = 1;
  // Full-lattice checks (subgroup closure, dichotomy fallback guard) run only
  // up to this order; above it a documented sample of subgroups is used.
  int full_lattice_limit = 48;
  int literal_nil_oracle_limit = 24;
};

// Per-(group,k) facts computed once and shared by every proposition.
struct GroupFacts {
  Verdict subgp, nil, mal;
  Verdict nt_sentences, nt_ck, nt_pairwise;
  Verdict csn_structural, csn_sentences;
  std::optional<int> cls;
  int center_order = 0;
  std::vector<Subgroup> maximal_nilk;
  std::optional<Witness> dichotomy;  // the (G_0, A) pair when one exists
  std::optional<std::string> budget_error;  // raised by lattice-bound steps
};

class HarnessEngine {
public:
  HarnessEngine(const Corpus& corpus, HarnessOptions options);
  ~HarnessEngine();

  PropositionReport verify_proposition(const std::string& id, int k);
  // Every proposition id x k, in fixed order. Also re-asserts the nilk
  // method-agreement invariants corpus-wide (throws std::logic_error on
  // violation; that is an implementation bug, never a paper counterexample).
  std::vector<PropositionReport> run_all(const std::vector<int>& k_list);

  const Corpus& corpus() const { return corpus_; }
  const GroupFacts& facts(std::size_t entry, int k);

private:
  struct Impl;
  Corpus corpus_;
  HarnessOptions options_;
  std::unique_ptr<Impl> impl_;
};

PropositionReport verify_proposition(const std::string& id, const Corpus& corpus, int k,
                                     const HarnessOptions& options = {});
std::vector<PropositionReport> run_all(const Corpus& corpus, const std::vector<int>& k_list,
                                       const HarnessOptions& options = {});

}  // namespace niltrans
