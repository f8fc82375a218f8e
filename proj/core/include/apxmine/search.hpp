#pragma once

#include <chrono>
#include <cstdint>
#include <vector>

#include "apxmine/bounds.hpp"

namespace apxmine {

struct SearchConfig {
  double ar0 = 1.0;            // initial approximation ratio, >= 1
  std::uint64_t epoch = 1000;  // visited branches per ratio raise, >= 1
  double delta = 0.1;          // ratio increment per epoch, >= 0
  std::size_t k = 1;           // number of patterns to keep, >= 1
  std::size_t max_len = 0;     // optional pattern length cap, 0 = none

  bool operator==(const SearchConfig&) const = default;
};

/// The anytime knob of the search: a branch counter that raises the
/// approximation ratio by delta every time `epoch` more branches have been
/// visited. The ratio is recomputed as ar0 + delta * raises instead of
/// repeated addition, so delta = 0 keeps it bit-stable and the raise count
/// alone determines the value.
struct RatioSchedule {
  explicit RatioSchedule(double ar0) : initial(ar0), ratio(ar0) {}

  double initial;
  double ratio;                // current ratio, nondecreasing
  std::uint64_t pending = 0;   // branches counted since the last raise
  std::uint64_t raises = 0;

  void count(std::uint64_t epoch, double delta) {
    ++pending;
    if (pending > epoch) {
      pending -= epoch;
      ++raises;
      ratio = initial + delta * static_cast<double>(raises);
    }
  }
};

struct ScoredPattern {
  Pattern pattern;
  double objective = 0.0;
};

struct SearchResult {
  // Objective descending; equal objectives keep discovery order.
  std::vector<ScoredPattern> patterns;
  double ar_final = 1.0;           // ratio when the search terminated
  std::uint64_t nodes_visited = 0; // branches entered (counted by the schedule)
  std::uint64_t nodes_pruned = 0;  // subtrees cut by the bound test
  std::chrono::duration<double> elapsed{0.0};
};

/// Depth-first branch-and-bound over the support-descending prefix tree.
///
/// At each node P the subtree bound is compared against the pruning
/// reference times the current ratio; a branch is entered only when the bound
/// strictly exceeds that product. Entered nodes are evaluated, recursed into,
/// and then counted against the epoch schedule. The reference is the best
/// objective so far (k = 1), or the k-th best once k patterns are held.
/// The returned best satisfies best >= optimum / ar_final.
///
/// mine_best runs with k forced to 1; mine_top_k keeps the cfg.k best
/// distinct patterns. Both are deterministic for identical inputs.
SearchResult mine_best(const TransactionDatabase& db, const VerticalIndex& index,
                       SearchConfig cfg);

SearchResult mine_top_k(const TransactionDatabase& db, const VerticalIndex& index,
                        const SearchConfig& cfg);

}  // namespace apxmine
