#pragma once

#include <cstdint>
#include <optional>

#include "lensurf/lens_triangulation.hpp"
#include "lensurf/normal_coords.hpp"
#include "lensurf/q_theory.hpp"

namespace lensurf {

inline constexpr std::uint64_t kDefaultSearchBudget = 100'000'000;

enum class MinimalityStatus { Fundamental, Decomposable, Inconclusive };

std::string_view to_string(MinimalityStatus status);

template <class Vector>
struct MinimalityVerdict {
  MinimalityStatus status = MinimalityStatus::Inconclusive;
  std::optional<Vector> witness;  // set for Decomposable
  std::uint64_t nodes_explored = 0;
};

/// Sufficient condition for fundamentality: weight 1 on both E_v and E_h and
/// at least one Q2 or Q3 disk. False means the criterion does not apply.
/// Throws NotNormal.
bool haken_fund_criterion(const Triangulation& tri, const HakenVector& v);

/// Exhaustive search for an integral v' with A v' = 0 and 0 < v' < v under
/// the Haken matching equations (square condition not imposed on v').
/// Variables go tetrahedron by tetrahedron, quads first. A decomposable
/// verdict carries a witness that is itself minimal among solutions below
/// it. Intended for p <= 8.
MinimalityVerdict<HakenVector> minimality_oracle(const Triangulation& tri, const HakenVector& v,
                                                 std::uint64_t budget = kDefaultSearchBudget);

/// The same search over quad coordinates, with span{s_i, t_i} as the
/// solution space. Throws HypothesisViolated outside the basis hypotheses
/// and Inadmissible for inadmissible input.
MinimalityVerdict<QVector> q_minimality_oracle(const LensParams& params, const QVector& qv,
                                               std::uint64_t budget = kDefaultSearchBudget);

/// Independent rechecks of a witness against its bound.
bool verify_haken_witness(const Triangulation& tri, const HakenVector& v, const HakenVector& witness);
bool verify_q_witness(const LensParams& params, const QVector& qv, const QVector& witness);

}  // namespace lensurf
