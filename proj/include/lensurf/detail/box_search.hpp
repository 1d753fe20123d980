#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace lensurf::detail {

struct LinearRow {
  std::vector<std::pair<std::size_t, std::int64_t>> terms;  // (variable, coefficient)
};

struct BoxSearchResult {
  enum class Outcome { Found, Exhausted, BudgetExceeded };
  Outcome outcome = Outcome::Exhausted;
  std::vector<std::int64_t> solution;
  std::uint64_t nodes = 0;
};

// Depth-first search for an integral x with rows . x = 0 and
// 0 <= x <= upper, x != 0, x != upper. Variables are fixed in `order`
// (variables with upper bound 0 are pinned to 0), values are tried from the
// upper bound downwards, and a row is pruned as soon as the range still
// reachable by its unfixed variables excludes 0. Every value assignment
// counts as one node.
BoxSearchResult find_proper_solution(std::span<const LinearRow> rows,
                                     std::span<const std::int64_t> upper,
                                     std::span<const std::size_t> order, std::uint64_t budget);

}  // namespace lensurf::detail
