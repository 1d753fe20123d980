#include "lensurf/exact_linalg.hpp"

#include "lensurf/errors.hpp"

namespace lensurf {

RowEchelon reduced_row_echelon(RationalMatrix m) {
  RowEchelon out;
  if (m.empty()) return out;
  const std::size_t cols = m.front().size();
  std::size_t row = 0;
  for (std::size_t col = 0; col < cols && row < m.size(); ++col) {
    std::size_t pivot = row;
    while (pivot < m.size() && m[pivot][col] == 0) ++pivot;
    if (pivot == m.size()) continue;
    std::swap(m[row], m[pivot]);
    Rational inv = 1 / m[row][col];
    for (auto& x : m[row]) x *= inv;
    for (std::size_t r = 0; r < m.size(); ++r) {
      if (r == row || m[r][col] == 0) continue;
      Rational f = m[r][col];
      for (std::size_t c = col; c < cols; ++c) {
        if (m[row][c] != 0) m[r][c] -= f * m[row][c];
      }
    }
    out.pivots.push_back(col);
    ++row;
  }
  m.resize(row);
  out.rows = std::move(m);
  return out;
}

std::size_t rank(const RationalMatrix& m) { return reduced_row_echelon(m).pivots.size(); }

std::optional<std::vector<Rational>> solve(const RationalMatrix& a, const std::vector<Rational>& b) {
  if (a.size() != b.size()) {
    throw Error(ErrorKind::DimensionMismatch, "right-hand side length differs from row count");
  }
  const std::size_t cols = a.empty() ? 0 : a.front().size();
  RationalMatrix aug = a;
  for (std::size_t r = 0; r < aug.size(); ++r) aug[r].push_back(b[r]);
  RowEchelon ech = reduced_row_echelon(std::move(aug));
  std::vector<Rational> x(cols, Rational(0));
  for (std::size_t r = 0; r < ech.pivots.size(); ++r) {
    if (ech.pivots[r] == cols) return std::nullopt;
    x[ech.pivots[r]] = ech.rows[r][cols];
  }
  return x;
}

RationalMatrix null_space(const RationalMatrix& a, std::size_t cols) {
  RowEchelon ech = reduced_row_echelon(a);
  std::vector<bool> is_pivot(cols, false);
  for (auto c : ech.pivots) is_pivot[c] = true;
  RationalMatrix basis;
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    std::vector<Rational> v(cols, Rational(0));
    v[free] = 1;
    for (std::size_t r = 0; r < ech.pivots.size(); ++r) v[ech.pivots[r]] = -ech.rows[r][free];
    basis.push_back(std::move(v));
  }
  return basis;
}

std::vector<BigInt> primitive_integer_row(const std::vector<Rational>& row) {
  BigInt lcm = 1;
  for (const auto& x : row) {
    BigInt d = boost::multiprecision::denominator(x);
    lcm = lcm / boost::multiprecision::gcd(lcm, d) * d;
  }
  std::vector<BigInt> out;
  out.reserve(row.size());
  BigInt g = 0;
  for (const auto& x : row) {
    BigInt v = boost::multiprecision::numerator(x) * (lcm / boost::multiprecision::denominator(x));
    g = boost::multiprecision::gcd(g, v);
    out.push_back(v);
  }
  if (g > 1) {
    for (auto& v : out) v /= g;
  }
  return out;
}

}  // namespace lensurf
