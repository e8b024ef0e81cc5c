#pragma once

#include <iosfwd>
#include <nlohmann/json.hpp>
#include <string>

#include "niltrans/harness.hpp"
#include "niltrans/nilk.hpp"

namespace niltrans {

using Json = nlohmann::ordered_json;

inline constexpr int kReportSchemaVersion = 1;

enum class ReportFormat { Text, Json };
ReportFormat report_format_from_string(const std::string& s);

struct AnalysisOptions {
  std::size_t subgroup_cap = kDefaultSubgroupCap;
  bool with_dichotomy = true;
};

// Everything the `analyze` subcommand reports for one group and one k.
struct AnalysisReport {
  std::string group_name;
  int order = 0;
  int k = 1;
  std::optional<int> cls;
  Verdict nt_sentences, nt_ck, nt_pairwise;
  Verdict csn_structural, csn_sentences;
  Verdict subgp, nil, mal;
  std::vector<Subgroup> maximal_nilk;
  std::optional<Witness> dichotomy;
  std::optional<std::string> budget_error;
  std::size_t subgroup_cap = kDefaultSubgroupCap;

  bool all_hold() const;
};

AnalysisReport analyze_group(const FiniteGroup& g, int k, const AnalysisOptions& options = {});

Json witness_to_json(const FiniteGroup& g, const Witness& w);
Json verdict_to_json(const FiniteGroup& g, const Verdict& v);
Json analysis_to_json(const FiniteGroup& g, const AnalysisReport& r);
std::string analysis_to_text(const FiniteGroup& g, const AnalysisReport& r);

struct HarnessRunInfo {
  int max_order = 0;
  std::vector<int> k_list;
  std::vector<std::string> prop_ids;
  std::size_t subgroup_cap = kDefaultSubgroupCap;
  int jobs = 1;
  bool timing = false;
};

Json harness_to_json(const Corpus& corpus, const std::vector<PropositionReport>& reports,
                     const HarnessRunInfo& info);
std::string harness_to_text(const Corpus& corpus, const std::vector<PropositionReport>& reports,
                            const HarnessRunInfo& info);

// Canonical emission: 2-space indent, trailing newline. Parsing an emitted
// report and re-emitting it is byte-identical.
std::string emit_json(const Json& j);

}  // namespace niltrans
