#pragma once

#include <cstdint>
#include <vector>

#include "apxmine/objective.hpp"

namespace apxmine {

struct FrequentItemset {
  Pattern items;
  std::uint32_t support = 0;
};

/// How much of a pattern's power set shows up among the equally many most
/// frequent itemsets of the database.
struct CoverageReport {
  Pattern pattern;
  std::uint64_t powerset_size = 0;  // 2^{|P|} - 1
  std::uint64_t tkp_size = 0;       // size of the top-frequent reference set (same value)
  std::uint64_t hits = 0;           // members of Pow(P) that are top-frequent
  double coverage = 0.0;            // hits / powerset_size
};

/// Sum of the supports of all 2^{|P|} - 1 nonempty subsets of the pattern,
/// each recounted by direct containment tests. Exact. Guarded to |P| <= 20.
std::uint64_t powerset_support_sum(const TransactionDatabase& db,
                                   const Pattern& pattern);

struct BestPattern {
  Pattern pattern;  // empty when the database has no items
  double objective = 0.0;
};

/// Evaluates the objective of every nonempty itemset (up to max_len items;
/// 0 = no cap) by direct summation and returns the maximizer. Ties keep the
/// lexicographically smallest pattern in internal order. Refuses with
/// GuardError when the candidate count would exceed 2^20.
BestPattern exhaustive_best(const TransactionDatabase& db, std::size_t max_len = 0);

/// The n itemsets of highest support, found best-first with anti-monotone
/// pruning (a superset never out-supports its subsets). Only itemsets with
/// support >= 1 qualify, so fewer than n may come back. Supports are
/// nonincreasing; at the boundary support, lexicographically smaller patterns
/// win the remaining slots.
std::vector<FrequentItemset> top_n_frequent(const TransactionDatabase& db,
                                            std::size_t n);

/// Computes the top (2^{|P|} - 1) frequent itemsets and reports how many of
/// them are subsets of the pattern. Guarded to |P| <= 20.
CoverageReport coverage(const TransactionDatabase& db, const Pattern& pattern);

}  // namespace apxmine
