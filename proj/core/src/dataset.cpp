#include "apxmine/dataset.hpp"

#include <algorithm>
#include <charconv>
#include <istream>
#include <ostream>
#include <random>
#include <sstream>
#include <stdexcept>

#include "apxmine/errors.hpp"

namespace apxmine {

namespace {

const std::string kNoLabel;

// 53-bit uniform in [0, 1). Built from raw engine output because the standard
// distributions are not bit-stable across library implementations.
double uniform01(std::mt19937_64& rng) {
  return std::ldexp(static_cast<double>(rng() >> 11), -53);
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

}  // namespace

TransactionDatabase TransactionDatabase::from_itemsets(
    std::vector<std::vector<ItemId>> itemsets,
    std::vector<std::pair<ItemId, std::string>> labels) {
  // Set semantics within a transaction.
  for (auto& items : itemsets) {
    std::sort(items.begin(), items.end());
    items.erase(std::unique(items.begin(), items.end()), items.end());
  }

  std::unordered_map<ItemId, std::uint32_t> counts;
  for (const auto& items : itemsets) {
    for (ItemId id : items) ++counts[id];
  }

  // Positions by support descending, ties by ascending external id. Items
  // absent from every transaction never enter `counts`.
  std::vector<std::pair<ItemId, std::uint32_t>> order(counts.begin(), counts.end());
  std::sort(order.begin(), order.end(), [](const auto& a, const auto& b) {
    if (a.second != b.second) return a.second > b.second;
    return a.first < b.first;
  });

  TransactionDatabase db;
  db.external_ids_.reserve(order.size());
  db.supports_.reserve(order.size());
  for (ItemPos pos = 0; pos < order.size(); ++pos) {
    db.external_ids_.push_back(order[pos].first);
    db.supports_.push_back(order[pos].second);
    db.position_.emplace(order[pos].first, pos);
  }

  db.transactions_.reserve(itemsets.size());
  for (Tid tid = 0; tid < itemsets.size(); ++tid) {
    Transaction t;
    t.tid = tid;
    t.items.reserve(itemsets[tid].size());
    for (ItemId id : itemsets[tid]) t.items.push_back(db.position_.at(id));
    std::sort(t.items.begin(), t.items.end());
    db.q_max_ = std::max(db.q_max_, t.items.size());
    db.transactions_.push_back(std::move(t));
  }

  if (!labels.empty()) {
    db.labels_.assign(db.item_count(), std::string());
    for (auto& [id, text] : labels) {
      auto pos = db.position_of(id);
      if (pos) db.labels_[*pos] = std::move(text);
    }
  }
  return db;
}

std::optional<ItemPos> TransactionDatabase::position_of(ItemId id) const {
  auto it = position_.find(id);
  if (it == position_.end()) return std::nullopt;
  return it->second;
}

const std::string& TransactionDatabase::label(ItemPos pos) const {
  if (labels_.empty()) return kNoLabel;
  return labels_[pos];
}

TransactionDatabase load_fimi(std::istream& in) {
  std::vector<std::vector<ItemId>> rows;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    std::vector<ItemId> row;
    std::istringstream tokens(line);
    std::string tok;
    while (tokens >> tok) {
      ItemId value = 0;
      auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
      if (ec != std::errc() || ptr != tok.data() + tok.size()) {
        throw ParseError("line " + std::to_string(lineno) + ": bad item token '" + tok + "'",
                         lineno);
      }
      row.push_back(value);
    }
    rows.push_back(std::move(row));
  }
  return TransactionDatabase::from_itemsets(std::move(rows));
}

void write_fimi(const TransactionDatabase& db, std::ostream& out) {
  std::vector<ItemId> ids;
  for (const auto& t : db.transactions()) {
    ids.clear();
    ids.reserve(t.items.size());
    for (ItemPos pos : t.items) ids.push_back(db.external_id(pos));
    std::sort(ids.begin(), ids.end());
    for (std::size_t i = 0; i < ids.size(); ++i) {
      if (i) out << ' ';
      out << ids[i];
    }
    out << '\n';
  }
}

TransactionDatabase convert_categorical(
    const std::vector<std::vector<std::string>>& rows,
    const std::string& missing_marker,
    const std::vector<std::string>& column_names) {
  if (rows.empty()) return TransactionDatabase();

  const std::size_t arity = rows[0].size();
  for (std::size_t r = 1; r < rows.size(); ++r) {
    if (rows[r].size() != arity) {
      throw ParseError("row " + std::to_string(r + 1) + " has " +
                           std::to_string(rows[r].size()) + " fields, expected " +
                           std::to_string(arity),
                       r + 1);
    }
  }

  // Deterministic external ids: distinct (column, value) pairs sorted by
  // column then value.
  std::vector<std::pair<std::size_t, std::string>> pairs;
  for (const auto& row : rows) {
    for (std::size_t col = 0; col < arity; ++col) {
      if (row[col] != missing_marker) pairs.emplace_back(col, row[col]);
    }
  }
  std::sort(pairs.begin(), pairs.end());
  pairs.erase(std::unique(pairs.begin(), pairs.end()), pairs.end());

  std::unordered_map<std::string, ItemId> ids;  // "col\x1fvalue" -> id
  std::vector<std::pair<ItemId, std::string>> labels;
  labels.reserve(pairs.size());
  for (ItemId id = 0; id < pairs.size(); ++id) {
    const auto& [col, value] = pairs[id];
    ids.emplace(std::to_string(col) + '\x1f' + value, id);
    const std::string col_name =
        col < column_names.size() ? column_names[col] : "attr" + std::to_string(col);
    labels.emplace_back(id, col_name + "=" + value);
  }

  std::vector<std::vector<ItemId>> itemsets;
  itemsets.reserve(rows.size());
  for (const auto& row : rows) {
    std::vector<ItemId> items;
    for (std::size_t col = 0; col < arity; ++col) {
      if (row[col] != missing_marker) {
        items.push_back(ids.at(std::to_string(col) + '\x1f' + row[col]));
      }
    }
    itemsets.push_back(std::move(items));
  }
  return TransactionDatabase::from_itemsets(std::move(itemsets), std::move(labels));
}

TransactionDatabase load_csv(std::istream& in, bool header,
                             const std::string& missing_marker) {
  std::vector<std::vector<std::string>> rows;
  std::vector<std::string> column_names;
  std::string line;
  bool first = true;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    std::vector<std::string> cells;
    std::size_t start = 0;
    while (true) {
      const std::size_t comma = line.find(',', start);
      const std::string_view cell =
          trim(std::string_view(line).substr(start, comma - start));
      cells.emplace_back(cell);
      if (comma == std::string::npos) break;
      start = comma + 1;
    }
    if (first && header) {
      column_names = std::move(cells);
    } else {
      rows.push_back(std::move(cells));
    }
    first = false;
  }
  return convert_categorical(rows, missing_marker, column_names);
}

TransactionDatabase generate_synthetic(std::size_t n, std::size_t m,
                                       double density, std::uint64_t seed) {
  if (n < 1 || m < 1) throw std::invalid_argument("generate_synthetic: n and m must be >= 1");
  if (!(density > 0.0) || density > 1.0) {
    throw std::invalid_argument("generate_synthetic: density must be in (0, 1]");
  }
  std::mt19937_64 rng(seed);
  std::vector<std::vector<ItemId>> rows(n);
  for (std::size_t t = 0; t < n; ++t) {
    for (ItemId item = 0; item < m; ++item) {
      if (uniform01(rng) < density) rows[t].push_back(item);
    }
  }
  return TransactionDatabase::from_itemsets(std::move(rows));
}

VerticalIndex build_vertical(const TransactionDatabase& db) {
  VerticalIndex index;
  index.tidlists_.resize(db.item_count());
  // Tids ascend, so every list comes out sorted.
  for (const auto& t : db.transactions()) {
    for (ItemPos pos : t.items) index.tidlists_[pos].push_back(t.tid);
  }
  return index;
}

}  // namespace apxmine
