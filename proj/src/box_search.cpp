#include "lensurf/detail/box_search.hpp"

#include <algorithm>

#include "lensurf/errors.hpp"

namespace lensurf::detail {

namespace {

class Search {
 public:
  Search(std::span<const LinearRow> rows, std::span<const std::int64_t> upper,
         std::span<const std::size_t> order, std::uint64_t budget)
      : upper_(upper), budget_(budget), value_(upper.size(), 0) {
    for (std::size_t v : order) {
      if (v >= upper.size()) throw Error(ErrorKind::IndexOutOfRange, "search order variable");
      if (upper[v] < 0) throw Error(ErrorKind::NegativeCoordinate, "negative upper bound");
      if (upper[v] > 0) order_.push_back(v);
    }
    touching_.resize(upper.size());
    sum_.assign(rows.size(), 0);
    pos_cap_.assign(rows.size(), 0);
    neg_cap_.assign(rows.size(), 0);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      for (auto [v, c] : rows[r].terms) {
        if (v >= upper.size()) throw Error(ErrorKind::IndexOutOfRange, "row variable");
        if (c == 0 || upper[v] == 0) continue;
        touching_[v].emplace_back(r, c);
        if (c > 0) pos_cap_[r] += c * upper[v];
        else neg_cap_[r] -= c * upper[v];
      }
    }
    free_vars_ = order_.size();
    std::size_t positive = static_cast<std::size_t>(
        std::count_if(upper.begin(), upper.end(), [](std::int64_t u) { return u > 0; }));
    std::vector<std::size_t> sorted = order_;
    std::sort(sorted.begin(), sorted.end());
    if (positive != free_vars_ || std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
      throw Error(ErrorKind::Consistency, "search order must list every bounded variable once");
    }
  }

  BoxSearchResult run() {
    BoxSearchResult result;
    bool found = false;
    try {
      found = descend(0);
    } catch (const BudgetExhausted&) {
      result.outcome = BoxSearchResult::Outcome::BudgetExceeded;
      result.nodes = budget_;
      return result;
    }
    result.nodes = nodes_;
    if (found) {
      result.outcome = BoxSearchResult::Outcome::Found;
      result.solution = value_;
    }
    return result;
  }

 private:
  struct BudgetExhausted {};

  bool feasible(std::size_t r) const { return sum_[r] - neg_cap_[r] <= 0 && 0 <= sum_[r] + pos_cap_[r]; }

  bool descend(std::size_t depth) {
    if (depth == order_.size()) {
      return nonzero_ > 0 && at_upper_ < free_vars_;
    }
    const std::size_t v = order_[depth];
    const std::int64_t ub = upper_[v];
    auto& touch = touching_[v];
    for (auto [r, c] : touch) {
      if (c > 0) pos_cap_[r] -= c * ub;
      else neg_cap_[r] += c * ub;
    }
    bool found = false;
    for (std::int64_t x = ub; x >= 0 && !found; --x) {
      if (++nodes_ > budget_) throw BudgetExhausted{};
      bool ok = true;
      for (auto [r, c] : touch) {
        sum_[r] += c * x;
        ok = ok && feasible(r);
      }
      if (ok) {
        value_[v] = x;
        nonzero_ += x != 0;
        at_upper_ += x == ub;
        found = descend(depth + 1);
        if (!found) {
          nonzero_ -= x != 0;
          at_upper_ -= x == ub;
          value_[v] = 0;
        }
      }
      for (auto [r, c] : touch) sum_[r] -= c * x;
    }
    for (auto [r, c] : touch) {
      if (c > 0) pos_cap_[r] += c * ub;
      else neg_cap_[r] -= c * ub;
    }
    return found;
  }

  std::span<const std::int64_t> upper_;
  std::uint64_t budget_;
  std::vector<std::size_t> order_;
  std::vector<std::vector<std::pair<std::size_t, std::int64_t>>> touching_;
  std::vector<std::int64_t> sum_;
  std::vector<std::int64_t> pos_cap_;
  std::vector<std::int64_t> neg_cap_;
  std::vector<std::int64_t> value_;
  std::uint64_t nodes_ = 0;
  std::size_t nonzero_ = 0;
  std::size_t at_upper_ = 0;
  std::size_t free_vars_ = 0;
};

}  // namespace

BoxSearchResult find_proper_solution(std::span<const LinearRow> rows,
                                     std::span<const std::int64_t> upper,
                                     std::span<const std::size_t> order, std::uint64_t budget) {
  return Search(rows, upper, order, budget).run();
}

}  // namespace lensurf::detail
