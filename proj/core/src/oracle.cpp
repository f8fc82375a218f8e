#include "apxmine/oracle.hpp"

#include <algorithm>
#include <queue>
#include <stdexcept>
#include <string>

#include "apxmine/errors.hpp"

namespace apxmine {

namespace {

constexpr std::size_t kMaxPatternLen = 20;
constexpr std::uint64_t kMaxCandidates = std::uint64_t(1) << 20;

void check_pattern(const TransactionDatabase& db, const Pattern& pattern) {
  if (pattern.empty()) throw std::domain_error("pattern must be nonempty");
  for (std::size_t i = 0; i < pattern.size(); ++i) {
    if (pattern[i] >= db.item_count()) {
      throw std::domain_error("pattern position " + std::to_string(pattern[i]) +
                              " out of range");
    }
    if (i > 0 && pattern[i] <= pattern[i - 1]) {
      throw std::domain_error("pattern positions must be strictly increasing");
    }
  }
}

// sum_T 2^{|T cap P|} by a fresh two-pointer count per transaction. This is
// the direct, non-incremental route; |T cap P| <= |P| keeps the shifts small.
u128 direct_power_sum(const TransactionDatabase& db, const Pattern& pattern) {
  u128 sum = 0;
  for (const auto& t : db.transactions()) {
    sum += u128(1) << intersection_size(t.items, pattern);
  }
  return sum;
}

// Number of nonempty itemsets of at most max_len items out of m, saturating
// at the guard so the caller can refuse oversized enumerations.
std::uint64_t candidate_count(std::size_t m, std::size_t max_len) {
  std::uint64_t total = 0;
  std::uint64_t binom = 1;  // C(m, 0)
  for (std::size_t l = 1; l <= max_len; ++l) {
    binom = binom * (m - l + 1) / l;
    total += binom;
    if (total > kMaxCandidates) return total;
  }
  return total;
}

}  // namespace

std::uint64_t powerset_support_sum(const TransactionDatabase& db,
                                   const Pattern& pattern) {
  check_pattern(db, pattern);
  if (pattern.size() > kMaxPatternLen) {
    throw GuardError("powerset_support_sum: pattern longer than " +
                     std::to_string(kMaxPatternLen) + " items");
  }
  const std::uint32_t len = static_cast<std::uint32_t>(pattern.size());
  std::uint64_t total = 0;
  Pattern subset;
  for (std::uint32_t mask = 1; mask < (std::uint32_t(1) << len); ++mask) {
    subset.clear();
    for (std::uint32_t bit = 0; bit < len; ++bit) {
      if (mask & (std::uint32_t(1) << bit)) subset.push_back(pattern[bit]);
    }
    for (const auto& t : db.transactions()) {
      if (std::includes(t.items.begin(), t.items.end(), subset.begin(), subset.end())) {
        ++total;
      }
    }
  }
  return total;
}

BestPattern exhaustive_best(const TransactionDatabase& db, std::size_t max_len) {
  const std::size_t m = db.item_count();
  const std::size_t cap = max_len == 0 ? m : std::min(max_len, m);
  if (candidate_count(m, cap) > kMaxCandidates) {
    throw GuardError("exhaustive_best: more than 2^20 candidate itemsets; "
                     "lower max_len or shrink the database");
  }

  BestPattern best;
  Pattern current;
  const std::size_t n = db.transaction_count();
  // Depth-first in lexicographic order; updating only on a strictly greater
  // value keeps the lexicographically smallest maximizer.
  auto descend = [&](auto&& self, ItemPos first) -> void {
    for (ItemPos pos = first; pos < m; ++pos) {
      current.push_back(pos);
      const double value = objective_ratio(current.size(), direct_power_sum(db, current), n);
      if (value > best.objective) best = {current, value};
      if (current.size() < cap) self(self, pos + 1);
      current.pop_back();
    }
  };
  descend(descend, 0);
  return best;
}

std::vector<FrequentItemset> top_n_frequent(const TransactionDatabase& db,
                                            std::size_t n) {
  struct Node {
    Pattern items;
    std::vector<Tid> tids;
  };
  // Max-heap by (support, then lexicographically smaller pattern first).
  auto worse = [](const Node& a, const Node& b) {
    if (a.tids.size() != b.tids.size()) return a.tids.size() < b.tids.size();
    return std::lexicographical_compare(b.items.begin(), b.items.end(),
                                        a.items.begin(), a.items.end());
  };
  std::priority_queue<Node, std::vector<Node>, decltype(worse)> frontier(worse);

  const VerticalIndex index = build_vertical(db);
  const std::size_t m = db.item_count();
  for (ItemPos pos = 0; pos < m; ++pos) {
    frontier.push(Node{{pos}, index.tidlist(pos)});
  }

  // Anti-monotonicity makes this admissible: every itemset reaches the
  // frontier through its prefix chain, and supports never grow along it, so
  // pops come out in (support desc, lex asc) order.
  std::vector<FrequentItemset> out;
  out.reserve(std::min<std::size_t>(n, 1024));
  std::vector<Tid> shared;
  while (out.size() < n && !frontier.empty()) {
    Node node = frontier.top();
    frontier.pop();
    out.push_back({node.items, static_cast<std::uint32_t>(node.tids.size())});
    for (ItemPos next = node.items.back() + 1; next < m; ++next) {
      const auto& list = index.tidlist(next);
      shared.clear();
      std::set_intersection(node.tids.begin(), node.tids.end(), list.begin(),
                            list.end(), std::back_inserter(shared));
      if (shared.empty()) continue;  // zero support never qualifies
      Node child;
      child.items = node.items;
      child.items.push_back(next);
      child.tids = shared;
      frontier.push(std::move(child));
    }
  }
  return out;
}

CoverageReport coverage(const TransactionDatabase& db, const Pattern& pattern) {
  check_pattern(db, pattern);
  if (pattern.size() > kMaxPatternLen) {
    throw GuardError("coverage: pattern longer than " +
                     std::to_string(kMaxPatternLen) + " items");
  }
  CoverageReport report;
  report.pattern = pattern;
  report.powerset_size = (std::uint64_t(1) << pattern.size()) - 1;
  report.tkp_size = report.powerset_size;

  const auto top = top_n_frequent(db, report.powerset_size);
  for (const auto& itemset : top) {
    if (std::includes(pattern.begin(), pattern.end(), itemset.items.begin(),
                      itemset.items.end())) {
      ++report.hits;
    }
  }
  report.coverage = static_cast<double>(report.hits) /
                    static_cast<double>(report.powerset_size);
  return report;
}

}  // namespace apxmine
