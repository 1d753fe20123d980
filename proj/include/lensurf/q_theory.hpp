#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "lensurf/exact_linalg.hpp"
#include "lensurf/lens_triangulation.hpp"
#include "lensurf/normal_coords.hpp"

namespace lensurf {

/// Tollefson quad coordinates: p blocks (x_i1, x_i2, x_i3). Entries may be
/// negative while combining basis vectors; surfaces need them non-negative.
class QVector {
 public:
  QVector() = default;
  explicit QVector(int blocks) : blocks_(blocks), entries_(static_cast<std::size_t>(blocks) * 3, 0) {}
  QVector(int blocks, std::vector<std::int64_t> entries);

  int blocks() const noexcept { return blocks_; }
  std::size_t size() const noexcept { return entries_.size(); }
  std::span<const std::int64_t> entries() const noexcept { return entries_; }

  /// Block is 1-based and wraps modulo the block count; j is 1..3.
  std::int64_t at(std::int64_t block, int j) const { return entries_[index(block, j)]; }
  std::int64_t& at(std::int64_t block, int j) { return entries_[index(block, j)]; }
  std::int64_t operator[](std::size_t i) const { return entries_[i]; }
  std::int64_t& operator[](std::size_t i) { return entries_[i]; }

  bool is_zero() const;
  bool is_non_negative() const;
  /// At most one nonzero entry in every block.
  bool square_condition() const;

  QVector& operator+=(const QVector& other);
  QVector& operator-=(const QVector& other);
  friend QVector operator+(QVector a, const QVector& b) { return a += b; }
  friend QVector operator-(QVector a, const QVector& b) { return a -= b; }
  friend QVector operator*(std::int64_t k, QVector v);
  friend bool operator==(const QVector&, const QVector&) = default;

 private:
  std::size_t index(std::int64_t block, int j) const;

  int blocks_ = 0;
  std::vector<std::int64_t> entries_;
};

/// s_i: block i is (1,1,1).
QVector basis_s(int p, std::int64_t i);
/// t_i: (0,1,0) in blocks i and i+q+1, (0,0,1) in blocks i+1 and i+q.
QVector basis_t(int p, int q, std::int64_t i);

struct QBasis {
  std::vector<QVector> s;  // s_1..s_p
  std::vector<QVector> t;  // t_1..t_p
};

/// Throws HypothesisViolated unless p >= 5 and 2 <= q < p/2.
void require_basis_hypotheses(const LensParams& params);
QBasis q_basis(const LensParams& params);

QVector quad_part(const HakenVector& v);

/// Triangle completion without sign or square checks: propagates the
/// matching equations around each vertex class and shifts each class so its
/// smallest triangle count is 0. Throws InadmissibleError at the first face
/// corner whose equation cannot hold.
HakenVector complete_triangles(const Triangulation& tri, const QVector& qv);

/// The normal surface with quad part qv and no vertex-linking component.
/// Requires qv non-negative and square; throws InadmissibleError otherwise.
HakenVector reconstruct_tdisks(const Triangulation& tri, const QVector& qv);

/// True when a triangle completion exists (the quad matching conditions).
bool satisfies_q_matching(const Triangulation& tri, const QVector& qv);
bool is_admissible(const Triangulation& tri, const QVector& qv);

struct BasisCoefficients {
  std::vector<Rational> a;  // coefficients of s_1..s_p
  std::vector<Rational> b;  // coefficients of t_1..t_p
};

/// Exact coordinates of qv in the basis {s_i, t_i}, or nullopt when qv is
/// outside their span. Throws HypothesisViolated.
std::optional<BasisCoefficients> in_solution_space(const LensParams& params, const QVector& qv);

/// Evaluates the closed-form block pattern
/// (a_i, a_i + b_i + b_{i-q-1}, a_i + b_{i-1} + b_{i-q}) for given coefficients.
std::vector<Rational> combine_basis(const LensParams& params, const BasisCoefficients& c);

/// Primitive integer rows C with span{s_i, t_i} = ker C (p rows, 3p columns).
std::vector<std::vector<BigInt>> solution_space_constraints(const LensParams& params);

/// "x11, x12, x13 | x21, ..." rendering.
std::string format_blocks(const QVector& qv);

}  // namespace lensurf
