#pragma once

#include <cstdint>

#include "apxmine/objective.hpp"

namespace apxmine {

/// Support metadata needed by the bound computations: the maximum transaction
/// length q_max and per-position supports of the database. Cheap to copy,
/// pure reads, safe for concurrent use.
class BoundContext {
 public:
  explicit BoundContext(const TransactionDatabase& db)
      : db_(&db), q_max_(db.max_transaction_length()) {}

  std::size_t q_max() const { return q_max_; }
  std::size_t item_count() const { return db_->item_count(); }
  std::uint32_t support(ItemPos pos) const { return db_->support(pos); }

 private:
  const TransactionDatabase* db_;
  std::size_t q_max_;
};

/// 2^i / i <= 2^j / j for integers 1 <= i <= j. This monotonicity is what
/// lets the power sum be bounded through the linear sum.
bool pow2_ratio_nondecreasing(int i, int j);

/// (1 + x/t)^2 <= 2^x for integer x >= 1 and t >= 3. This is what makes the
/// subtree bound for long prefixes admissible.
bool square_bound_holds(int x, int t);

/// Upper bound on the objective of the pattern P itself, computed from the
/// supports of its single items only:
///
///   |P| * 2^q / (q * (2^{|P|} - 1)) * s_lin,   q = min(|P|, q_max)
///
/// where s_lin = sum_{i in P} support(i) = sum_T |T cap P|. Returns 0 when
/// q_max = 0. Evaluated in the same 2^{-|P|} scaled form as the objective.
double ub_pattern(const BoundContext& ctx, const Pattern& pattern,
                  std::uint64_t s_lin);

/// Upper bound on the objective of every pattern extending P with
/// higher-position items. Admissible only when |P| >= q_max >= 3; callers
/// must dispatch through ub_subtree (std::logic_error otherwise). Same
/// formula as ub_pattern with q = q_max.
double ub_long_prefix(const BoundContext& ctx, const Pattern& pattern,
                      std::uint64_t s_lin);

/// Extension bound for short prefixes (1 <= |P| <= q_max, std::logic_error
/// otherwise): the maximum of ub_pattern over P extended by runs of the
/// next-position items, capped so the extended length never exceeds q_max.
/// P itself is always among the candidates. Because positions are ordered by
/// support, the run of next positions maximizes s_lin among all extensions of
/// the same length.
double ub_short_prefix(const BoundContext& ctx, const Pattern& pattern,
                       std::uint64_t s_lin);

/// Convenience overload that recomputes s_lin from the context.
double ub_short_prefix(const BoundContext& ctx, const Pattern& pattern);

/// General subtree bound, valid for every pattern that has P as a prefix in
/// the position order. Dispatch:
///   - q_max < 3: +infinity (no admissible bound; nothing is ever pruned),
///   - |P| >= q_max: ub_long_prefix,
///   - otherwise: ub_short_prefix.
double ub_subtree(const BoundContext& ctx, const Pattern& pattern,
                  std::uint64_t s_lin);

}  // namespace apxmine
