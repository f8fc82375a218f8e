#pragma once

#include <cmath>
#include <cstdint>
#include <vector>

#include "apxmine/dataset.hpp"

namespace apxmine {

/// An itemset, stored as strictly increasing internal positions.
using Pattern = std::vector<ItemPos>;

using u128 = unsigned __int128;

/// The score of a pattern P is its length times the average support of its
/// nonempty subsets:
///
///   |P| * (sum_T 2^{|T cap P|} - n) / (2^{|P|} - 1)
///
/// The final ratio is always formed in the 2^{-|P|} scaled form
/// |P| * (sum - n) * 2^{-|P|} / (1 - 2^{-|P|}), which keeps every factor
/// finite for patterns of any length.
inline double objective_ratio(std::size_t len, u128 power_sum, std::size_t n) {
  const double inv = std::ldexp(1.0, -static_cast<int>(len));  // 2^{-|P|}
  const double numerator = static_cast<double>(power_sum - static_cast<u128>(n));
  return static_cast<double>(len) * numerator * inv / (1.0 - inv);
}

/// Number of items shared by a transaction and a pattern (both strictly
/// increasing position lists).
inline std::size_t intersection_size(const std::vector<ItemPos>& transaction,
                                     const Pattern& pattern) {
  std::size_t count = 0, a = 0, b = 0;
  while (a < transaction.size() && b < pattern.size()) {
    if (transaction[a] < pattern[b]) {
      ++a;
    } else if (pattern[b] < transaction[a]) {
      ++b;
    } else {
      ++count;
      ++a;
      ++b;
    }
  }
  return count;
}

/// Scaled floating evaluation: sums 2^{|T cap P| - |P|} per transaction, so it
/// never overflows regardless of |P| or transaction lengths.
/// Throws std::domain_error on an empty or invalid pattern.
double objective_value(const TransactionDatabase& db, const Pattern& pattern);

/// Exact-integer evaluation: sum_T 2^{|T cap P|} is accumulated in 128-bit
/// integer arithmetic and converted once at the end. Only valid while
/// q_max + ceil(log2 n) <= 120 (see exact_regime); throws GuardError outside.
double objective_value_exact(const TransactionDatabase& db, const Pattern& pattern);

/// Whether sum_T 2^{|T cap P|} fits 128-bit integers for every pattern:
/// q_max + ceil(log2 n) <= 120.
bool exact_regime(const TransactionDatabase& db);

/// Incremental evaluation state for depth-first prefix extension. Holds the
/// per-transaction intersection counts |T cap P|, the power sum
/// sum_T 2^{|T cap P|} and the linear sum sum_T |T cap P| = sum_{i in P}
/// support(i), all maintained exactly under push/pop.
///
/// In the exact regime the power sum is a 128-bit integer and objective() is
/// O(1); outside it only the counts are maintained and objective() recomputes
/// the scaled floating sum in O(n). Single-owner, never shared.
class EvalState {
 public:
  EvalState(const TransactionDatabase& db, const VerticalIndex& index);

  /// Extends the pattern by `item`, which must exceed the current last
  /// position (throws std::logic_error otherwise). Cost O(support(item)).
  void push(ItemPos item);

  /// Exact inverse of the matching push. Throws std::logic_error when empty.
  void pop();

  const Pattern& pattern() const { return pattern_; }
  std::size_t depth() const { return pattern_.size(); }

  /// sum_T |T cap P|, equal to the sum of the member items' supports.
  std::uint64_t linear_sum() const { return linear_sum_; }

  /// sum_T 2^{|T cap P|}; exact mode only (std::logic_error otherwise).
  u128 power_sum() const;

  bool exact_mode() const { return exact_; }

  /// Objective of the current pattern; std::domain_error when empty.
  double objective() const;

  std::uint32_t count(Tid tid) const { return counts_[tid]; }

 private:
  const TransactionDatabase* db_;
  const VerticalIndex* index_;
  std::vector<std::uint32_t> counts_;  // |T cap P| per tid
  Pattern pattern_;
  u128 power_sum_ = 0;
  std::uint64_t linear_sum_ = 0;
  bool exact_ = true;
};

}  // namespace apxmine
