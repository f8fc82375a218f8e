#include "apxmine/objective.hpp"

#include <bit>
#include <stdexcept>
#include <string>

#include "apxmine/errors.hpp"

namespace apxmine {

namespace {

void validate_pattern(const TransactionDatabase& db, const Pattern& pattern) {
  if (pattern.empty()) throw std::domain_error("objective of the empty pattern");
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

std::size_t ceil_log2(std::size_t n) {
  return n <= 1 ? 0 : std::bit_width(n - 1);
}

}  // namespace

bool exact_regime(const TransactionDatabase& db) {
  // Every power sum is at most n * 2^{q_max} <= 2^{q_max + ceil(log2 n)},
  // which leaves ample 128-bit headroom at 120.
  return db.max_transaction_length() + ceil_log2(db.transaction_count()) <= 120;
}

double objective_value(const TransactionDatabase& db, const Pattern& pattern) {
  validate_pattern(db, pattern);
  const int len = static_cast<int>(pattern.size());
  const double inv = std::ldexp(1.0, -len);
  double sum = 0.0;  // sum_T 2^{|T cap P| - |P|}
  for (const auto& t : db.transactions()) {
    sum += std::ldexp(1.0, static_cast<int>(intersection_size(t.items, pattern)) - len);
  }
  const double n_scaled = static_cast<double>(db.transaction_count()) * inv;
  return static_cast<double>(len) * (sum - n_scaled) / (1.0 - inv);
}

double objective_value_exact(const TransactionDatabase& db, const Pattern& pattern) {
  validate_pattern(db, pattern);
  if (!exact_regime(db)) {
    throw GuardError("exact objective needs q_max + ceil(log2 n) <= 120");
  }
  u128 power_sum = 0;
  for (const auto& t : db.transactions()) {
    power_sum += u128(1) << intersection_size(t.items, pattern);
  }
  return objective_ratio(pattern.size(), power_sum, db.transaction_count());
}

EvalState::EvalState(const TransactionDatabase& db, const VerticalIndex& index)
    : db_(&db),
      index_(&index),
      counts_(db.transaction_count(), 0),
      power_sum_(db.transaction_count()),  // every |T cap {}| term is 2^0
      exact_(exact_regime(db)) {}

void EvalState::push(ItemPos item) {
  if (!pattern_.empty() && item <= pattern_.back()) {
    throw std::logic_error("EvalState::push: items must be pushed in increasing position order");
  }
  if (item >= db_->item_count()) {
    throw std::logic_error("EvalState::push: item position out of range");
  }
  const auto& tids = index_->tidlist(item);
  if (exact_) {
    for (Tid t : tids) {
      power_sum_ += u128(1) << counts_[t];  // the tid's term doubles
      ++counts_[t];
    }
  } else {
    for (Tid t : tids) ++counts_[t];
  }
  linear_sum_ += db_->support(item);
  pattern_.push_back(item);
}

void EvalState::pop() {
  if (pattern_.empty()) throw std::logic_error("EvalState::pop: state is empty");
  const ItemPos item = pattern_.back();
  pattern_.pop_back();
  const auto& tids = index_->tidlist(item);
  if (exact_) {
    for (Tid t : tids) {
      --counts_[t];
      power_sum_ -= u128(1) << counts_[t];
    }
  } else {
    for (Tid t : tids) --counts_[t];
  }
  linear_sum_ -= db_->support(item);
}

u128 EvalState::power_sum() const {
  if (!exact_) throw std::logic_error("EvalState::power_sum: not in exact mode");
  return power_sum_;
}

double EvalState::objective() const {
  if (pattern_.empty()) throw std::domain_error("objective of the empty pattern");
  if (exact_) return objective_ratio(pattern_.size(), power_sum_, counts_.size());
  // Fallback: rebuild the scaled floating sum from the counts.
  const int len = static_cast<int>(pattern_.size());
  const double inv = std::ldexp(1.0, -len);
  double sum = 0.0;
  for (std::uint32_t c : counts_) sum += std::ldexp(1.0, static_cast<int>(c) - len);
  const double n_scaled = static_cast<double>(counts_.size()) * inv;
  return static_cast<double>(len) * (sum - n_scaled) / (1.0 - inv);
}

}  // namespace apxmine
