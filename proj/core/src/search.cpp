#include "apxmine/search.hpp"

#include <algorithm>
#include <stdexcept>

namespace apxmine {

namespace {

// Up to k scored patterns kept sorted by objective descending, discovery
// order ascending among equal objectives. The pruning reference is 0 until k
// patterns are held, then the k-th best objective; replacement happens only
// on a strictly greater objective, so among ties the earliest discovery wins.
class TopPool {
 public:
  explicit TopPool(std::size_t k) : k_(k) {}

  double reference() const {
    return entries_.size() < k_ ? 0.0 : entries_.back().objective;
  }

  void offer(const Pattern& pattern, double objective) {
    if (entries_.size() == k_) {
      if (!(objective > entries_.back().objective)) return;
      entries_.pop_back();
    }
    Entry entry{pattern, objective, next_seq_++};
    auto at = std::upper_bound(entries_.begin(), entries_.end(), entry,
                               [](const Entry& a, const Entry& b) {
                                 if (a.objective != b.objective) {
                                   return a.objective > b.objective;
                                 }
                                 return a.seq < b.seq;
                               });
    entries_.insert(at, std::move(entry));
  }

  std::vector<ScoredPattern> take() && {
    std::vector<ScoredPattern> out;
    out.reserve(entries_.size());
    for (auto& e : entries_) out.push_back({std::move(e.pattern), e.objective});
    return out;
  }

 private:
  struct Entry {
    Pattern pattern;
    double objective;
    std::uint64_t seq;
  };

  std::size_t k_;
  std::uint64_t next_seq_ = 0;
  std::vector<Entry> entries_;
};

class Engine {
 public:
  Engine(const TransactionDatabase& db, const VerticalIndex& index,
         const SearchConfig& cfg)
      : cfg_(cfg),
        m_(static_cast<ItemPos>(db.item_count())),
        ctx_(db),
        state_(db, index),
        schedule_(cfg.ar0),
        pool_(cfg.k) {}

  SearchResult run() {
    const auto start = std::chrono::steady_clock::now();
    // The empty prefix is not a pattern: the root is never bounded, never
    // evaluated and never counted. Its children are the single items in
    // support-descending order.
    for (ItemPos root = 0; root < m_; ++root) {
      state_.push(root);
      visit();
      state_.pop();
    }
    SearchResult result;
    result.patterns = std::move(pool_).take();
    result.ar_final = schedule_.ratio;
    result.nodes_visited = visited_;
    result.nodes_pruned = pruned_;
    result.elapsed = std::chrono::steady_clock::now() - start;
    return result;
  }

 private:
  void visit() {
    const Pattern& pattern = state_.pattern();
    const double bound = ub_subtree(ctx_, pattern, state_.linear_sum());
    // Enter only on a strictly greater bound; ties are pruned.
    if (!(bound > pool_.reference() * schedule_.ratio)) {
      ++pruned_;
      return;
    }
    pool_.offer(pattern, state_.objective());
    if (cfg_.max_len == 0 || pattern.size() < cfg_.max_len) {
      for (ItemPos next = pattern.back() + 1; next < m_; ++next) {
        state_.push(next);
        visit();
        state_.pop();
      }
    }
    // A branch counts after its subtree has been explored.
    ++visited_;
    schedule_.count(cfg_.epoch, cfg_.delta);
  }

  const SearchConfig cfg_;
  const ItemPos m_;
  BoundContext ctx_;
  EvalState state_;
  RatioSchedule schedule_;
  TopPool pool_;
  std::uint64_t visited_ = 0;
  std::uint64_t pruned_ = 0;
};

void validate(const SearchConfig& cfg) {
  if (!(cfg.ar0 >= 1.0)) throw std::invalid_argument("SearchConfig: ar0 must be >= 1");
  if (cfg.epoch < 1) throw std::invalid_argument("SearchConfig: epoch must be >= 1");
  if (!(cfg.delta >= 0.0)) throw std::invalid_argument("SearchConfig: delta must be >= 0");
  if (cfg.k < 1) throw std::invalid_argument("SearchConfig: k must be >= 1");
}

}  // namespace

SearchResult mine_top_k(const TransactionDatabase& db, const VerticalIndex& index,
                        const SearchConfig& cfg) {
  validate(cfg);
  if (db.item_count() == 0) {
    SearchResult empty;
    empty.ar_final = cfg.ar0;
    return empty;
  }
  return Engine(db, index, cfg).run();
}

SearchResult mine_best(const TransactionDatabase& db, const VerticalIndex& index,
                       SearchConfig cfg) {
  cfg.k = 1;
  return mine_top_k(db, index, cfg);
}

}  // namespace apxmine
