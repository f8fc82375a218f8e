#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "apxmine/oracle.hpp"
#include "apxmine/search.hpp"

namespace apxmine {

using ordered_json = nlohmann::ordered_json;

struct PatternEntry {
  std::vector<ItemId> items;         // external ids, ascending
  std::vector<std::string> labels;   // parallel to items; empty when unlabeled
  Pattern positions;                 // internal positions; emitted only when verbose
  double objective = 0.0;
  std::optional<CoverageReport> coverage;
};

/// Everything one mining run produces, in a shape that serializes losslessly.
/// Two runs with identical inputs and flags serialize byte-identically except
/// for the "timing" object.
struct RunReport {
  std::string command = "mine";
  std::string input;
  std::string format = "fimi";
  SearchConfig config;
  std::size_t n = 0;
  std::size_t m = 0;
  std::size_t q_max = 0;
  std::vector<PatternEntry> patterns;
  double ar_final = 1.0;
  std::uint64_t nodes_visited = 0;
  std::uint64_t nodes_pruned = 0;
  double elapsed_seconds = 0.0;
  bool verbose = false;
};

ordered_json to_json(const CoverageReport& report);
ordered_json to_json(const RunReport& report);
RunReport run_report_from_json(const ordered_json& j);

/// Assembles the report for a finished search. Coverage is computed per
/// returned pattern when `with_coverage` is set (subject to the coverage
/// length guard).
RunReport build_run_report(const TransactionDatabase& db, const SearchConfig& cfg,
                           const SearchResult& result, const std::string& input,
                           const std::string& format, bool with_coverage,
                           bool verbose);

}  // namespace apxmine
