#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstddef>
#include <optional>
#include <vector>

namespace lensurf {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;
using RationalMatrix = std::vector<std::vector<Rational>>;

struct RowEchelon {
  RationalMatrix rows;               // reduced rows, zero rows dropped
  std::vector<std::size_t> pivots;  // pivot column of each row
};

/// Gauss-Jordan elimination over the rationals.
RowEchelon reduced_row_echelon(RationalMatrix m);

std::size_t rank(const RationalMatrix& m);

/// Some solution x of a x = b, or nullopt when the system is inconsistent.
/// Free variables are set to zero, so the answer is unique when a has full
/// column rank.
std::optional<std::vector<Rational>> solve(const RationalMatrix& a, const std::vector<Rational>& b);

/// Basis (as rows) of { x : a x = 0 }.
RationalMatrix null_space(const RationalMatrix& a, std::size_t cols);

/// Scales a rational row to a primitive integer row with the same kernel.
std::vector<BigInt> primitive_integer_row(const std::vector<Rational>& row);

}  // namespace lensurf
