#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "lensurf/lens_triangulation.hpp"
#include "lensurf/normal_coords.hpp"
#include "lensurf/q_theory.hpp"

namespace lensurf {

/// The kappa = 2 sequence up to index n, in machine integers:
/// (p_0, q_0) = (0, 1), p_k = 3 p_{k-1} + 2 q_{k-1}, q_k = p_{k-1} + q_{k-1}.
struct LensInstance {
  int n = 0;
  std::vector<std::int64_t> p;
  std::vector<std::int64_t> q;

  std::int64_t pn() const { return p.at(static_cast<std::size_t>(n)); }
  std::int64_t qn() const { return q.at(static_cast<std::size_t>(n)); }
  LensParams params() const { return LensParams::make(pn(), qn()); }
  /// q_1 + ... + q_l.
  std::int64_t q_sum(int l) const;
  /// Number of compressing disks in step k: (q_{n-k+1} - 1) / 2.
  std::int64_t disk_count(int k) const;
  /// Number of patch pairs per disk in step k: q_k + 1.
  std::int64_t pair_count(int k) const;
};

/// Throws OutOfRange for n < 1 or when p_n no longer fits a tetrahedron index.
LensInstance lens_instance(int n);

/// (sum of t_{2m-1}) / 2: alternating blocks (0,1,0), (0,0,1). Throws OddP
/// for odd p and HypothesisViolated when q < 3 or the basis hypotheses fail.
QVector h0(const LensParams& params);

enum class PatchRole { Leading, Following };
enum class PatchKind { Trigonal, Quadrilateral };
enum class Region { First, Second, Last };

std::string_view to_string(PatchRole role);
std::string_view to_string(PatchKind kind);
std::string_view to_string(Region region);

/// first = tau_1..tau_{q_n}, second = tau_{q_n+1}..tau_{2q_n}, last = rest.
Region region_of(const LensInstance& inst, std::int64_t tet);

struct PatchPlacement {
  int step = 0;
  std::int64_t disk = 0;
  std::int64_t pair = 0;
  PatchRole role = PatchRole::Leading;
  std::int64_t tet = 0;
  PatchKind kind = PatchKind::Trigonal;
  Region region = Region::First;

  friend bool operator==(const PatchPlacement&, const PatchPlacement&) = default;
};

struct CompressionSchedule {
  int n = 0;
  std::int64_t p = 0;
  std::int64_t q = 0;
  std::vector<PatchPlacement> placements;  // ordered by (step, disk, pair, role)
};

/// Every disk patch of steps 1..n-1. Pair j of disk i in step k has its
/// leading patch at 2(q_n + ... + q_{n-k+2}) + 2i - 1 + (j - 1) q_n, reduced
/// into 1..p_n; the following patch is the next tetrahedron.
CompressionSchedule compression_schedule(int n);

/// Basis terms removed by one compressing disk: subtract every t, add back
/// every s. Indices are as written in the formula, before reduction mod p_n.
struct CompressionTerms {
  std::int64_t disk = 0;
  std::vector<std::int64_t> t_indices;
  std::vector<std::int64_t> s_indices;
};

/// Terms of step k, from (j+1) q_n + 2 q_{n-1} + ... + 2 q_{n-k+2} + 2i - 1
/// (k >= 2) and t_{2i-1} (k = 1).
std::vector<CompressionTerms> step_terms(int n, int k);

/// h_k from h_{k-1}. Throws NegativeCoordinate, Inadmissible (including a
/// square-condition failure) or OutOfRange for k outside 1..n-1.
QVector apply_step(const Triangulation& tri, const QVector& prev, int n, int k);
QVector apply_step(const QVector& prev, int n, int k);

/// x_{m1}: the number of Q1 sheets in tau_m. Throws IndexOutOfRange.
std::int64_t sheet_count(const QVector& h, std::int64_t m);

struct Check {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct AnalysisOptions {
  /// Connectivity and orientation propagation materialize every disk; above
  /// this many disks they are skipped and reported as such.
  std::int64_t max_disks_for_components = 5'000'000;
};

struct SurfaceReport {
  int n = 0;  // 0 when the report comes from analyze_surface
  int p = 0;
  int q = 0;
  QVector qvector;
  HakenVector haken;
  bool matching = false;
  bool square = false;
  std::int64_t euler = 0;
  std::map<EdgeName, std::int64_t> weights;
  bool connectivity_skipped = false;
  std::optional<std::int64_t> components;
  std::optional<bool> connected;
  std::optional<bool> orientable;              // E_h parity; needs one component
  std::optional<bool> orientable_propagation;  // all components two-sided
  bool fundamental_criterion = false;
  std::vector<std::int64_t> euler_history;              // chi(h_0), ..., chi(h_{n-1})
  std::vector<std::pair<std::int64_t, std::int64_t>> sheets;  // (m, x_{m1})
  std::vector<std::int64_t> q1_sheets;                  // x_{m1} for m = 1..p
  std::vector<Check> checks;

  bool passed() const;
};

/// Fills every analysis field for a normal surface. Throws NotNormal.
SurfaceReport analyze_surface(const Triangulation& tri, const HakenVector& v,
                              const AnalysisOptions& options = {});

/// h_0 then steps 1..n-1 in L(p_n, q_n), analyzed and checked against the
/// expected invariants (chi = 2 - n, weights, non-orientability,
/// connectedness, the fundamentality criterion, sheet counts, the Euler
/// characteristic after every step and the crosscap bound).
SurfaceReport construct_surface(int n, const AnalysisOptions& options = {});

/// h_0, ..., h_{n-1}.
std::vector<QVector> construction_history(int n);

struct PlacementViolation {
  char check = 'a';
  std::string message;
};

struct PlacementReport {
  int n = 0;
  std::map<char, std::int64_t> assertions;  // per check, how many were tested
  std::vector<PlacementViolation> violations;

  bool passed() const { return violations.empty(); }
};

/// Checks (a)-(f) on the computed schedule:
///  (a) tau_{q_n}, tau_{2q_n}, tau_{p_n} carry no patch;
///  (b) first and last pairs of steps k >= 2 lie in the last region;
///  (c) within a step no tetrahedron carries two patches;
///  (d) for k >= 2, pairs 2..q_k sit in tetrahedra used by earlier steps
///      and first/last pairs in unused ones;
///  (e) step-k patches in the last region, shifted down by 2 q_n, are the
///      step-(k-1) patches for n-1, pair order preserved;
///  (f) for each (k, j) all disks put pair j in one region.
PlacementReport verify_placements(int n);

}  // namespace lensurf
