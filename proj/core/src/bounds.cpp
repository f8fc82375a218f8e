#include "apxmine/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace apxmine {

namespace {

// |P| * 2^q / (q * (2^{|P|} - 1)) * s_lin in the 2^{-|P|} scaled form.
// q <= len always holds here, so the 2^{q - len} factor stays in (0, 1].
double pattern_bound(std::size_t len, std::size_t q, std::uint64_t s_lin) {
  if (q == 0) return 0.0;
  const double inv = std::ldexp(1.0, -static_cast<int>(len));
  const double scale = std::ldexp(1.0, static_cast<int>(q) - static_cast<int>(len));
  return static_cast<double>(len) * scale * static_cast<double>(s_lin) /
         (static_cast<double>(q) * (1.0 - inv));
}

}  // namespace

bool pow2_ratio_nondecreasing(int i, int j) {
  return std::exp2(static_cast<double>(i)) / static_cast<double>(i) <=
         std::exp2(static_cast<double>(j)) / static_cast<double>(j);
}

bool square_bound_holds(int x, int t) {
  const double base = 1.0 + static_cast<double>(x) / static_cast<double>(t);
  return base * base <= std::exp2(static_cast<double>(x));
}

double ub_pattern(const BoundContext& ctx, const Pattern& pattern,
                  std::uint64_t s_lin) {
  if (pattern.empty()) throw std::domain_error("ub_pattern: empty pattern");
  const std::size_t q = std::min(pattern.size(), ctx.q_max());
  return pattern_bound(pattern.size(), q, s_lin);
}

double ub_long_prefix(const BoundContext& ctx, const Pattern& pattern,
                      std::uint64_t s_lin) {
  if (ctx.q_max() < 3 || pattern.size() < ctx.q_max()) {
    throw std::logic_error("ub_long_prefix: needs |P| >= q_max >= 3");
  }
  return pattern_bound(pattern.size(), ctx.q_max(), s_lin);
}

double ub_short_prefix(const BoundContext& ctx, const Pattern& pattern,
                       std::uint64_t s_lin) {
  if (pattern.empty() || pattern.size() > ctx.q_max()) {
    throw std::logic_error("ub_short_prefix: needs 1 <= |P| <= q_max");
  }
  const std::size_t len = pattern.size();
  const ItemPos last = pattern.back();
  // Candidate extensions append the run of positions last+1 .. last+steps;
  // the run length is capped by the items that remain and by q_max.
  const std::size_t steps =
      std::min<std::size_t>(ctx.item_count() - 1 - last, ctx.q_max() - len);
  double best = pattern_bound(len, std::min(len, ctx.q_max()), s_lin);
  std::uint64_t extended = s_lin;
  for (std::size_t t = 1; t <= steps; ++t) {
    extended += ctx.support(last + static_cast<ItemPos>(t));
    best = std::max(best,
                    pattern_bound(len + t, std::min(len + t, ctx.q_max()), extended));
  }
  return best;
}

double ub_short_prefix(const BoundContext& ctx, const Pattern& pattern) {
  std::uint64_t s_lin = 0;
  for (ItemPos pos : pattern) s_lin += ctx.support(pos);
  return ub_short_prefix(ctx, pattern, s_lin);
}

double ub_subtree(const BoundContext& ctx, const Pattern& pattern,
                  std::uint64_t s_lin) {
  if (pattern.empty()) throw std::domain_error("ub_subtree: empty pattern");
  if (ctx.q_max() < 3) return std::numeric_limits<double>::infinity();
  if (pattern.size() >= ctx.q_max()) return ub_long_prefix(ctx, pattern, s_lin);
  return ub_short_prefix(ctx, pattern, s_lin);
}

}  // namespace apxmine
