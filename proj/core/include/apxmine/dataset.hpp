#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace apxmine {

using ItemId = std::uint64_t;   // external item id, as read from input
using ItemPos = std::uint32_t;  // internal position in the support-descending order
using Tid = std::uint32_t;      // 0-based transaction id

struct Transaction {
  Tid tid = 0;
  std::vector<ItemPos> items;  // strictly increasing internal positions
};

/// Immutable transaction set over an integer item universe.
///
/// Internal item positions are assigned by support descending (ties broken by
/// ascending external id), so a depth-first prefix search that extends only to
/// higher positions visits items in nonincreasing support order. Items that
/// occur in no transaction are dropped at construction. Safe to share across
/// threads once built.
class TransactionDatabase {
 public:
  TransactionDatabase() = default;

  // `itemsets` use external ids; duplicates within a transaction are merged.
  // `labels`, when given, attach a display string to an external id.
  static TransactionDatabase from_itemsets(
      std::vector<std::vector<ItemId>> itemsets,
      std::vector<std::pair<ItemId, std::string>> labels = {});

  std::size_t transaction_count() const { return transactions_.size(); }  // n
  std::size_t item_count() const { return external_ids_.size(); }         // m
  std::size_t max_transaction_length() const { return q_max_; }

  std::uint32_t support(ItemPos pos) const { return supports_[pos]; }
  const std::vector<std::uint32_t>& supports() const { return supports_; }

  ItemId external_id(ItemPos pos) const { return external_ids_[pos]; }
  std::optional<ItemPos> position_of(ItemId id) const;

  bool has_labels() const { return !labels_.empty(); }
  const std::string& label(ItemPos pos) const;  // empty string when unlabeled

  const std::vector<Transaction>& transactions() const { return transactions_; }

 private:
  std::vector<Transaction> transactions_;
  std::vector<std::uint32_t> supports_;      // by internal position, nonincreasing
  std::vector<ItemId> external_ids_;         // by internal position
  std::vector<std::string> labels_;          // by internal position; may be empty
  std::unordered_map<ItemId, ItemPos> position_;
  std::size_t q_max_ = 0;
};

/// Parses the flat transaction format: one transaction per line, items as
/// whitespace-separated non-negative integers. Blank lines are empty
/// transactions. CRLF input is accepted. Throws ParseError on a bad token.
TransactionDatabase load_fimi(std::istream& in);

/// Writes the flat format back out, one line per transaction, external ids
/// ascending. Reloading the output reproduces the database.
void write_fimi(const TransactionDatabase& db, std::ostream& out);

/// Turns attribute-value records into transactions: every distinct
/// (column, value) pair becomes one item; cells equal to `missing_marker`
/// produce no item. All rows must have the same number of cells.
/// `column_names`, when nonempty, are used for item labels ("name=value").
TransactionDatabase convert_categorical(
    const std::vector<std::vector<std::string>>& rows,
    const std::string& missing_marker = "?",
    const std::vector<std::string>& column_names = {});

/// Reads comma-separated records (no quoting) and applies convert_categorical.
/// When `header` is true the first line names the columns.
TransactionDatabase load_csv(std::istream& in, bool header,
                             const std::string& missing_marker = "?");

/// Each of the m items is put into each of the n transactions independently
/// with probability `density`. Identical (n, m, density, seed) produce an
/// identical database on every platform.
TransactionDatabase generate_synthetic(std::size_t n, std::size_t m,
                                       double density, std::uint64_t seed);

/// Per-item sorted transaction-id lists (the vertical layout). Immutable and
/// shareable once built.
class VerticalIndex {
 public:
  const std::vector<Tid>& tidlist(ItemPos pos) const { return tidlists_[pos]; }
  std::size_t item_count() const { return tidlists_.size(); }

 private:
  friend VerticalIndex build_vertical(const TransactionDatabase& db);
  std::vector<std::vector<Tid>> tidlists_;
};

VerticalIndex build_vertical(const TransactionDatabase& db);

}  // namespace apxmine
