#pragma once

// Shared helpers for the test suites: deterministic random database corpora
// and small brute-force reference computations. Everything here is
// test-side and independent of the incremental evaluation used by the search.

#include <algorithm>
#include <array>
#include <cstdint>
#include <cstdio>
#include <random>
#include <string>
#include <sys/wait.h>
#include <vector>

#include "apxmine/dataset.hpp"
#include "apxmine/objective.hpp"

namespace testsupport {

using apxmine::ItemId;
using apxmine::ItemPos;
using apxmine::Pattern;
using apxmine::TransactionDatabase;

inline TransactionDatabase db_from(std::vector<std::vector<ItemId>> itemsets) {
  return TransactionDatabase::from_itemsets(std::move(itemsets));
}

// The running example: supports 3 and 2, best pattern {1,2} at 14/3.
inline TransactionDatabase tiny_db() {
  return db_from({{1, 2}, {1, 2}, {1}});
}

// Deterministic small random instance: n <= 12, m <= 8,
// density in {0.2, 0.4, 0.6}.
inline TransactionDatabase random_db(std::uint64_t index) {
  std::mt19937_64 meta(0x5eed0000ULL + index);
  const std::size_t n = 1 + meta() % 12;
  const std::size_t m = 1 + meta() % 8;
  constexpr std::array<double, 3> densities{0.2, 0.4, 0.6};
  const double density = densities[index % 3];
  return apxmine::generate_synthetic(n, m, density, meta());
}

inline std::vector<TransactionDatabase> corpus(std::size_t count) {
  std::vector<TransactionDatabase> dbs;
  dbs.reserve(count);
  for (std::uint64_t i = 0; i < count; ++i) dbs.push_back(random_db(i));
  return dbs;
}

// Same stream, restricted to q_max >= 3 (the regime where pruning applies).
inline std::vector<TransactionDatabase> corpus_q3(std::size_t count) {
  std::vector<TransactionDatabase> dbs;
  dbs.reserve(count);
  for (std::uint64_t i = 1000000; dbs.size() < count && i < 1000000 + 100 * count; ++i) {
    TransactionDatabase db = random_db(i);
    if (db.max_transaction_length() >= 3) dbs.push_back(std::move(db));
  }
  return dbs;
}

// sum_T 2^{|T cap P|} recounted from scratch per transaction.
inline unsigned __int128 direct_power_sum(const TransactionDatabase& db,
                                          const Pattern& pattern) {
  unsigned __int128 sum = 0;
  for (const auto& t : db.transactions()) {
    std::size_t shared = 0;
    for (ItemPos pos : t.items) {
      shared += std::binary_search(pattern.begin(), pattern.end(), pos) ? 1 : 0;
    }
    sum += (unsigned __int128)(1) << shared;
  }
  return sum;
}

// Plain-formula objective for desk-scale patterns (|P| <= 30): uses the
// unscaled denominator 2^{|P|} - 1 directly, a different floating route than
// the library's scaled form.
inline double plain_objective(const TransactionDatabase& db, const Pattern& pattern) {
  const auto sum = direct_power_sum(db, pattern);
  const auto numerator = static_cast<std::uint64_t>(sum - db.transaction_count());
  const auto denominator = (std::uint64_t(1) << pattern.size()) - 1;
  return static_cast<double>(pattern.size()) * static_cast<double>(numerator) /
         static_cast<double>(denominator);
}

// Every nonempty position subset in lexicographic order, capped at max_len.
inline std::vector<Pattern> all_patterns(std::size_t m, std::size_t max_len = 0) {
  const std::size_t cap = max_len == 0 ? m : std::min(max_len, m);
  std::vector<Pattern> out;
  Pattern current;
  auto descend = [&](auto&& self, ItemPos first) -> void {
    for (ItemPos pos = first; pos < m; ++pos) {
      current.push_back(pos);
      out.push_back(current);
      if (current.size() < cap) self(self, pos + 1);
      current.pop_back();
    }
  };
  descend(descend, 0);
  return out;
}

// Largest objective over every pattern that extends `prefix` using only
// higher positions (the prefix itself included).
inline double best_extension_objective(const TransactionDatabase& db,
                                       const Pattern& prefix) {
  const std::size_t m = db.item_count();
  double best = plain_objective(db, prefix);
  Pattern current = prefix;
  auto descend = [&](auto&& self, ItemPos first) -> void {
    for (ItemPos pos = first; pos < m; ++pos) {
      current.push_back(pos);
      best = std::max(best, plain_objective(db, current));
      self(self, pos + 1);
      current.pop_back();
    }
  };
  descend(descend, prefix.back() + 1);
  return best;
}

// Objectives of all nonempty itemsets, descending.
inline std::vector<double> all_objectives_sorted(const TransactionDatabase& db) {
  std::vector<double> values;
  for (const auto& pattern : all_patterns(db.item_count())) {
    values.push_back(plain_objective(db, pattern));
  }
  std::sort(values.begin(), values.end(), std::greater<>());
  return values;
}

// Supports of all nonempty itemsets, descending.
inline std::vector<std::uint32_t> all_supports_sorted(const TransactionDatabase& db) {
  std::vector<std::uint32_t> supports;
  for (const auto& pattern : all_patterns(db.item_count())) {
    std::uint32_t s = 0;
    for (const auto& t : db.transactions()) {
      if (std::includes(t.items.begin(), t.items.end(), pattern.begin(), pattern.end())) {
        ++s;
      }
    }
    supports.push_back(s);
  }
  std::sort(supports.begin(), supports.end(), std::greater<>());
  return supports;
}

inline bool close_rel(double a, double b, double tol = 1e-9) {
  return std::abs(a - b) <= tol * std::max({1.0, std::abs(a), std::abs(b)});
}

struct CommandResult {
  int status = -1;
  std::string output;
};

// Runs a shell command, capturing stdout; stderr is dropped.
inline CommandResult run_command(const std::string& command) {
  CommandResult result;
  FILE* pipe = popen((command + " 2>/dev/null").c_str(), "r");
  if (!pipe) return result;
  std::array<char, 4096> buffer{};
  std::size_t got = 0;
  while ((got = fread(buffer.data(), 1, buffer.size(), pipe)) > 0) {
    result.output.append(buffer.data(), got);
  }
  const int rc = pclose(pipe);
  result.status = WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
  return result;
}

}  // namespace testsupport
