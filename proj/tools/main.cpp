#include <algorithm>
#include <charconv>
#include <fstream>
#include <iostream>
#include <limits>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "apxmine/errors.hpp"
#include "apxmine/oracle.hpp"
#include "apxmine/search.hpp"
#include "report.hpp"

namespace {

using namespace apxmine;

// Exit codes: 0 success, 1 usage, 2 data/parse/io, 3 enumeration guard refusal.
constexpr int kOk = 0;
constexpr int kUsage = 1;
constexpr int kData = 2;
constexpr int kGuard = 3;

struct DataFlags {
  std::string input;
  std::string format = "fimi";
  bool csv_header = false;
  std::string missing = "?";
};

struct MineFlags {
  DataFlags data;
  SearchConfig cfg;
  bool with_coverage = false;
  bool verbose = false;
  std::string output;
};

TransactionDatabase load_database(const DataFlags& flags) {
  std::ifstream in(flags.input);
  if (!in) throw DataError("cannot open input file: " + flags.input);
  if (flags.format == "csv") return load_csv(in, flags.csv_header, flags.missing);
  return load_fimi(in);
}

// Comma- or space-separated external ids -> sorted internal positions.
Pattern parse_pattern(const TransactionDatabase& db, const std::string& text) {
  std::string normalized = text;
  std::replace(normalized.begin(), normalized.end(), ',', ' ');
  std::istringstream tokens(normalized);
  std::string tok;
  Pattern pattern;
  while (tokens >> tok) {
    ItemId id = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), id);
    if (ec != std::errc() || ptr != tok.data() + tok.size()) {
      throw ParseError("bad item id '" + tok + "' in pattern");
    }
    const auto pos = db.position_of(id);
    if (!pos) throw DataError("pattern references unknown item id " + tok);
    pattern.push_back(*pos);
  }
  std::sort(pattern.begin(), pattern.end());
  pattern.erase(std::unique(pattern.begin(), pattern.end()), pattern.end());
  return pattern;
}

void emit(const ordered_json& j, const std::string& output) {
  const std::string text = j.dump(2);
  std::cout << text << "\n";
  if (!output.empty()) {
    std::ofstream out(output);
    if (!out) throw DataError("cannot write output file: " + output);
    out << text << "\n";
  }
}

int run_mine(const MineFlags& flags) {
  const TransactionDatabase db = load_database(flags.data);
  const VerticalIndex index = build_vertical(db);
  const SearchResult result = mine_top_k(db, index, flags.cfg);
  const RunReport report =
      build_run_report(db, flags.cfg, result, flags.data.input, flags.data.format,
                       flags.with_coverage, flags.verbose);
  emit(to_json(report), flags.output);
  return kOk;
}

int run_eval(const DataFlags& data, const std::vector<std::string>& pattern_args,
             const std::string& report_path, const std::string& output) {
  const TransactionDatabase db = load_database(data);

  std::vector<Pattern> patterns;
  for (const auto& text : pattern_args) patterns.push_back(parse_pattern(db, text));
  if (!report_path.empty()) {
    std::ifstream in(report_path);
    if (!in) throw DataError("cannot open report file: " + report_path);
    ordered_json j;
    try {
      in >> j;
    } catch (const ordered_json::exception& e) {
      throw ParseError(std::string("report file: ") + e.what());
    }
    const RunReport prior = run_report_from_json(j);
    for (const auto& entry : prior.patterns) {
      Pattern pattern;
      for (ItemId id : entry.items) {
        const auto pos = db.position_of(id);
        if (!pos) {
          throw DataError("report pattern references unknown item id " +
                          std::to_string(id));
        }
        pattern.push_back(*pos);
      }
      std::sort(pattern.begin(), pattern.end());
      patterns.push_back(std::move(pattern));
    }
  }
  if (patterns.empty()) {
    throw DataError("eval: give --pattern or --report");
  }

  ordered_json out = ordered_json::array();
  for (const auto& pattern : patterns) {
    const CoverageReport cov = coverage(db, pattern);
    std::vector<ItemId> items;
    for (ItemPos pos : pattern) items.push_back(db.external_id(pos));
    std::sort(items.begin(), items.end());
    ordered_json entry{{"items", items}};
    entry.update(to_json(cov));
    out.push_back(std::move(entry));
  }
  emit(ordered_json{{"command", "eval"}, {"patterns", out}}, output);
  return kOk;
}

int run_gen(std::size_t n, std::size_t m, double density, std::uint64_t seed,
            const std::string& output) {
  const TransactionDatabase db = generate_synthetic(n, m, density, seed);
  std::ofstream out(output);
  if (!out) throw DataError("cannot write output file: " + output);
  write_fimi(db, out);
  if (!out) throw DataError("failed while writing: " + output);
  emit(ordered_json{{"command", "gen"},
                    {"output", output},
                    {"n", db.transaction_count()},
                    {"m", db.item_count()},
                    {"q_max", db.max_transaction_length()}},
       "");
  return kOk;
}

int run_sweep(const MineFlags& flags, const std::string& param, double from,
              double to, double step, const std::string& output) {
  if (step <= 0.0 || from > to) {
    throw std::invalid_argument("sweep: need step > 0 and from <= to");
  }
  const TransactionDatabase db = load_database(flags.data);
  const VerticalIndex index = build_vertical(db);

  std::ostringstream csv;
  csv << param << ",objective,ar_final,elapsed_seconds\n";
  csv.precision(12);
  for (double value = from; value <= to + step * 1e-9; value += step) {
    SearchConfig cfg = flags.cfg;
    if (param == "epoch") {
      cfg.epoch = static_cast<std::uint64_t>(value + 0.5);
    } else {
      cfg.delta = value;
    }
    const SearchResult result = mine_top_k(db, index, cfg);
    const double objective = result.patterns.empty() ? 0.0 : result.patterns.front().objective;
    if (param == "epoch") {
      csv << cfg.epoch;
    } else {
      csv << cfg.delta;
    }
    csv << ',' << objective << ',' << result.ar_final << ',' << result.elapsed.count()
        << '\n';
  }
  std::cout << csv.str();
  if (!output.empty()) {
    std::ofstream out(output);
    if (!out) throw DataError("cannot write output file: " + output);
    out << csv.str();
  }
  return kOk;
}

void add_data_flags(CLI::App* cmd, DataFlags& flags) {
  cmd->add_option("--input", flags.input, "input dataset path")->required();
  cmd->add_option("--format", flags.format, "input format")
      ->check(CLI::IsMember({"fimi", "csv"}))
      ->capture_default_str();
  cmd->add_flag("--csv-header", flags.csv_header, "first CSV row names the columns");
  cmd->add_option("--missing", flags.missing, "CSV missing-value marker")
      ->capture_default_str();
}

void add_search_flags(CLI::App* cmd, SearchConfig& cfg) {
  cmd->add_option("--k", cfg.k, "number of patterns to mine")
      ->check(CLI::Range(std::size_t(1), std::numeric_limits<std::size_t>::max()))
      ->capture_default_str();
  cmd->add_option("--ar", cfg.ar0, "initial approximation ratio (>= 1)")
      ->check(CLI::Range(1.0, std::numeric_limits<double>::max()))
      ->capture_default_str();
  cmd->add_option("--epoch", cfg.epoch, "visited branches per ratio raise")
      ->check(CLI::Range(std::uint64_t(1), std::numeric_limits<std::uint64_t>::max()))
      ->capture_default_str();
  cmd->add_option("--delta", cfg.delta, "ratio increment per epoch (>= 0)")
      ->check(CLI::Range(0.0, std::numeric_limits<double>::max()))
      ->capture_default_str();
  cmd->add_option("--max-len", cfg.max_len, "pattern length cap (0 = none)")
      ->capture_default_str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Mines the k patterns maximizing length times average subset support"};
  app.require_subcommand(1);

  MineFlags mine_flags;
  auto* mine = app.add_subcommand("mine", "mine top-k patterns and print a run report");
  add_data_flags(mine, mine_flags.data);
  add_search_flags(mine, mine_flags.cfg);
  mine->add_flag("--coverage", mine_flags.with_coverage,
                 "attach a coverage report to each returned pattern");
  mine->add_flag("--verbose", mine_flags.verbose, "include internal item positions");
  mine->add_option("--output", mine_flags.output, "also write the report to this path");

  DataFlags eval_data;
  std::vector<std::string> eval_patterns;
  std::string eval_report, eval_output;
  auto* eval = app.add_subcommand("eval", "coverage of given patterns against a dataset");
  add_data_flags(eval, eval_data);
  eval->add_option("--pattern", eval_patterns,
                   "pattern as external item ids, e.g. \"3,7,12\" (repeatable)");
  eval->add_option("--report", eval_report, "take patterns from a prior mine report");
  eval->add_option("--output", eval_output, "also write the result to this path");

  auto* oracle = app.add_subcommand("oracle", "exact brute-force references");
  oracle->require_subcommand(1);

  DataFlags best_data;
  std::size_t best_max_len = 0;
  auto* best = oracle->add_subcommand("best", "exhaustive objective maximizer");
  add_data_flags(best, best_data);
  best->add_option("--max-len", best_max_len, "candidate length cap (0 = none)");

  DataFlags topn_data;
  std::size_t topn_n = 10;
  auto* topn = oracle->add_subcommand("topn", "top-N itemsets by support");
  add_data_flags(topn, topn_data);
  topn->add_option("--top-n", topn_n, "number of itemsets")
      ->check(CLI::Range(std::size_t(1), std::numeric_limits<std::size_t>::max()))
      ->capture_default_str();

  DataFlags powersum_data;
  std::string powersum_pattern;
  auto* powersum = oracle->add_subcommand("powersum", "sum of subset supports of a pattern");
  add_data_flags(powersum, powersum_data);
  powersum->add_option("--pattern", powersum_pattern, "pattern as external item ids")
      ->required();

  std::size_t gen_n = 0, gen_m = 0;
  double gen_density = 0.5;
  std::uint64_t gen_seed = 0;
  std::string gen_output;
  auto* gen = app.add_subcommand("gen", "write a deterministic synthetic dataset");
  gen->add_option("--n", gen_n, "transactions")->required();
  gen->add_option("--m", gen_m, "items")->required();
  gen->add_option("--density", gen_density, "item inclusion probability in (0, 1]")
      ->capture_default_str();
  gen->add_option("--seed", gen_seed, "generator seed")->capture_default_str();
  gen->add_option("--output", gen_output, "output path")->required();

  MineFlags sweep_flags;
  std::string sweep_param = "epoch";
  double sweep_from = 200, sweep_to = 1000, sweep_step = 200;
  std::string sweep_output;
  auto* sweep = app.add_subcommand("sweep", "rerun mining over a parameter grid, emit CSV");
  add_data_flags(sweep, sweep_flags.data);
  add_search_flags(sweep, sweep_flags.cfg);
  sweep->add_option("--param", sweep_param, "swept parameter")
      ->check(CLI::IsMember({"epoch", "delta"}))
      ->capture_default_str();
  sweep->add_option("--from", sweep_from, "first value")->capture_default_str();
  sweep->add_option("--to", sweep_to, "last value")->capture_default_str();
  sweep->add_option("--step", sweep_step, "grid step")->capture_default_str();
  sweep->add_option("--output", sweep_output, "also write the CSV to this path");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (app.got_subcommand(mine)) return run_mine(mine_flags);
    if (app.got_subcommand(eval)) {
      return run_eval(eval_data, eval_patterns, eval_report, eval_output);
    }
    if (app.got_subcommand(gen)) {
      return run_gen(gen_n, gen_m, gen_density, gen_seed, gen_output);
    }
    if (app.got_subcommand(sweep)) {
      return run_sweep(sweep_flags, sweep_param, sweep_from, sweep_to, sweep_step,
                       sweep_output);
    }
    if (oracle->got_subcommand(best)) {
      const TransactionDatabase db = load_database(best_data);
      const BestPattern result = exhaustive_best(db, best_max_len);
      std::vector<ItemId> items;
      for (ItemPos pos : result.pattern) items.push_back(db.external_id(pos));
      std::sort(items.begin(), items.end());
      emit(ordered_json{{"command", "oracle best"},
                        {"items", items},
                        {"objective", result.objective}},
           "");
      return kOk;
    }
    if (oracle->got_subcommand(topn)) {
      const TransactionDatabase db = load_database(topn_data);
      ordered_json out = ordered_json::array();
      for (const auto& itemset : top_n_frequent(db, topn_n)) {
        std::vector<ItemId> items;
        for (ItemPos pos : itemset.items) items.push_back(db.external_id(pos));
        std::sort(items.begin(), items.end());
        out.push_back(ordered_json{{"items", items}, {"support", itemset.support}});
      }
      emit(ordered_json{{"command", "oracle topn"}, {"itemsets", out}}, "");
      return kOk;
    }
    if (oracle->got_subcommand(powersum)) {
      const TransactionDatabase db = load_database(powersum_data);
      const Pattern pattern = parse_pattern(db, powersum_pattern);
      emit(ordered_json{{"command", "oracle powersum"},
                        {"sum", powerset_support_sum(db, pattern)}},
           "");
      return kOk;
    }
  } catch (const GuardError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kGuard;
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kData;
  } catch (const DataError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kData;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kData;
  }
  return kUsage;
}
