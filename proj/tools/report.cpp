#include "report.hpp"

#include <algorithm>

#include "apxmine/errors.hpp"

namespace apxmine {

ordered_json to_json(const CoverageReport& report) {
  return ordered_json{{"powerset_size", report.powerset_size},
                      {"tkp_size", report.tkp_size},
                      {"hits", report.hits},
                      {"coverage", report.coverage}};
}

ordered_json to_json(const RunReport& report) {
  ordered_json patterns = ordered_json::array();
  for (const auto& entry : report.patterns) {
    ordered_json p{{"items", entry.items}, {"objective", entry.objective}};
    if (!entry.labels.empty()) p["labels"] = entry.labels;
    if (report.verbose) p["positions"] = entry.positions;
    if (entry.coverage) p["coverage"] = to_json(*entry.coverage);
    patterns.push_back(std::move(p));
  }
  return ordered_json{
      {"command", report.command},
      {"dataset",
       {{"input", report.input},
        {"format", report.format},
        {"n", report.n},
        {"m", report.m},
        {"q_max", report.q_max}}},
      {"config",
       {{"k", report.config.k},
        {"ar0", report.config.ar0},
        {"epoch", report.config.epoch},
        {"delta", report.config.delta},
        {"max_len", report.config.max_len}}},
      {"result",
       {{"patterns", std::move(patterns)},
        {"ar_final", report.ar_final},
        {"nodes_visited", report.nodes_visited},
        {"nodes_pruned", report.nodes_pruned}}},
      {"timing", {{"elapsed_seconds", report.elapsed_seconds}}}};
}

RunReport run_report_from_json(const ordered_json& j) {
  try {
    RunReport report;
    report.command = j.at("command").get<std::string>();
    const auto& dataset = j.at("dataset");
    report.input = dataset.at("input").get<std::string>();
    report.format = dataset.at("format").get<std::string>();
    report.n = dataset.at("n").get<std::size_t>();
    report.m = dataset.at("m").get<std::size_t>();
    report.q_max = dataset.at("q_max").get<std::size_t>();
    const auto& config = j.at("config");
    report.config.k = config.at("k").get<std::size_t>();
    report.config.ar0 = config.at("ar0").get<double>();
    report.config.epoch = config.at("epoch").get<std::uint64_t>();
    report.config.delta = config.at("delta").get<double>();
    report.config.max_len = config.at("max_len").get<std::size_t>();
    const auto& result = j.at("result");
    for (const auto& p : result.at("patterns")) {
      PatternEntry entry;
      entry.items = p.at("items").get<std::vector<ItemId>>();
      entry.objective = p.at("objective").get<double>();
      if (p.contains("labels")) {
        entry.labels = p.at("labels").get<std::vector<std::string>>();
      }
      if (p.contains("positions")) {
        entry.positions = p.at("positions").get<Pattern>();
        report.verbose = true;
      }
      if (p.contains("coverage")) {
        const auto& c = p.at("coverage");
        CoverageReport cov;
        cov.powerset_size = c.at("powerset_size").get<std::uint64_t>();
        cov.tkp_size = c.at("tkp_size").get<std::uint64_t>();
        cov.hits = c.at("hits").get<std::uint64_t>();
        cov.coverage = c.at("coverage").get<double>();
        entry.coverage = cov;
      }
      report.patterns.push_back(std::move(entry));
    }
    report.ar_final = result.at("ar_final").get<double>();
    report.nodes_visited = result.at("nodes_visited").get<std::uint64_t>();
    report.nodes_pruned = result.at("nodes_pruned").get<std::uint64_t>();
    report.elapsed_seconds = j.at("timing").at("elapsed_seconds").get<double>();
    return report;
  } catch (const ordered_json::exception& e) {
    throw DataError(std::string("malformed run report: ") + e.what());
  }
}

RunReport build_run_report(const TransactionDatabase& db, const SearchConfig& cfg,
                           const SearchResult& result, const std::string& input,
                           const std::string& format, bool with_coverage,
                           bool verbose) {
  RunReport report;
  report.input = input;
  report.format = format;
  report.config = cfg;
  report.n = db.transaction_count();
  report.m = db.item_count();
  report.q_max = db.max_transaction_length();
  report.ar_final = result.ar_final;
  report.nodes_visited = result.nodes_visited;
  report.nodes_pruned = result.nodes_pruned;
  report.elapsed_seconds = result.elapsed.count();
  report.verbose = verbose;

  for (const auto& scored : result.patterns) {
    PatternEntry entry;
    entry.positions = scored.pattern;
    entry.objective = scored.objective;
    entry.items.reserve(scored.pattern.size());
    for (ItemPos pos : scored.pattern) entry.items.push_back(db.external_id(pos));
    std::sort(entry.items.begin(), entry.items.end());
    if (db.has_labels()) {
      // Label order follows the sorted external ids.
      for (ItemId id : entry.items) {
        entry.labels.push_back(db.label(*db.position_of(id)));
      }
    }
    if (with_coverage) entry.coverage = coverage(db, scored.pattern);
    report.patterns.push_back(std::move(entry));
  }
  return report;
}

}  // namespace apxmine
