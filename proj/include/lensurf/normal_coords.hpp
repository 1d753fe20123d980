#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "lensurf/lens_triangulation.hpp"

namespace lensurf {

/// Normal disk types inside one tetrahedron, in Haken storage order.
enum class DiskKind : int {
  TriVPlus = 0,
  TriVMinus = 1,
  TriVLow = 2,
  TriVHigh = 3,
  Quad1 = 4,  // separates E_v from E_h
  Quad2 = 5,  // separates e_{i+1} from e_{i-q}
  Quad3 = 6,  // separates e_i from e_{i-q+1}
};

inline constexpr int kDiskTypesPerTet = 7;

inline constexpr bool is_quad(DiskKind k) { return static_cast<int>(k) >= 4; }

/// Quad number 0..2 (Q1..Q3) whose vertex partition pairs slot a with slot b.
int quad_pairing(int a, int b);
/// The slot pair {0, x} that quad number `quad` (0..2) keeps on one side.
std::array<int, 2> quad_side(int quad);

struct DiskTypeIndex {
  int tet = 0;
  DiskKind kind = DiskKind::TriVPlus;

  std::size_t flat() const {
    return static_cast<std::size_t>(tet - 1) * kDiskTypesPerTet + static_cast<std::size_t>(kind);
  }
  /// Slots of the tetrahedron edges this disk type meets (3 or 4 of them).
  std::vector<std::array<int, 2>> edges_met() const;
};

/// Length-7p vector of normal disk counts, per tetrahedron
/// (T_v+, T_v-, T_vlow, T_vhigh, Q1, Q2, Q3).
class HakenVector {
 public:
  HakenVector() = default;
  explicit HakenVector(int tets) : tets_(tets), counts_(static_cast<std::size_t>(tets) * kDiskTypesPerTet, 0) {}
  HakenVector(int tets, std::vector<std::int64_t> counts);

  int tets() const noexcept { return tets_; }
  std::size_t size() const noexcept { return counts_.size(); }
  std::span<const std::int64_t> counts() const noexcept { return counts_; }

  std::int64_t at(int tet, DiskKind kind) const { return counts_[index(tet, kind)]; }
  std::int64_t& at(int tet, DiskKind kind) { return counts_[index(tet, kind)]; }
  std::int64_t operator[](std::size_t i) const { return counts_[i]; }
  std::int64_t& operator[](std::size_t i) { return counts_[i]; }

  bool is_zero() const;
  std::int64_t total_triangles() const;
  std::int64_t total_quads() const;

  HakenVector& operator+=(const HakenVector& other);
  friend HakenVector operator+(HakenVector a, const HakenVector& b) { return a += b; }
  friend HakenVector operator*(std::int64_t k, HakenVector v);
  friend bool operator==(const HakenVector&, const HakenVector&) = default;

 private:
  std::size_t index(int tet, DiskKind kind) const;

  int tets_ = 0;
  std::vector<std::int64_t> counts_;
};

/// One matching equation: sparse integer row over the 7p Haken columns,
/// labelled by the face (on the emitting side) and the corner whose arc it
/// matches.
struct MatchingRow {
  FaceRef face;
  int corner = 0;
  std::vector<std::pair<std::size_t, int>> entries;  // (column, coefficient), merged
};

struct MatchingEquations {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<MatchingRow> equations;

  /// Row-by-row product with a column vector.
  std::vector<std::int64_t> apply(std::span<const std::int64_t> v) const;
};

/// One row per (glued face, normal arc type): 6p rows, 7p columns.
MatchingEquations matching_equations(const Triangulation& tri);

/// Throws Error(DimensionMismatch) unless v has length 7p.
bool satisfies_matching(const Triangulation& tri, const HakenVector& v);
bool square_condition(const HakenVector& v);
/// Matching equations, square condition and non-negativity.
bool is_normal(const Triangulation& tri, const HakenVector& v);

/// Vertex-linking sphere of vertex class `vertex_class`.
HakenVector vertex_link(const Triangulation& tri, std::size_t vertex_class);
/// The Heegaard torus: one Q1 in every tetrahedron.
HakenVector heegaard_torus(const Triangulation& tri);

/// Number of points where the surface meets the edge class. Throws
/// NonIntegralWeight when the incidence sum does not divide evenly.
std::int64_t edge_weight(const Triangulation& tri, const HakenVector& v, const EdgeName& name);
std::map<EdgeName, std::int64_t> edge_weights(const Triangulation& tri, const HakenVector& v);

/// V - E + F of the cell decomposition by normal disks. Throws NotNormal.
std::int64_t euler_characteristic(const Triangulation& tri, const HakenVector& v);

/// Individual normal disks and the arc gluings between them.
struct DiskGraph {
  struct Disk {
    int tet = 0;
    DiskKind kind = DiskKind::TriVPlus;
    std::int64_t copy = 0;
  };
  struct Link {
    std::size_t a = 0;
    std::size_t b = 0;
    // True when the disks' reference sides disagree across the arc, so a
    // consistent transverse orientation must flip between them.
    bool flips = false;
  };
  std::vector<Disk> disks;
  std::vector<Link> links;
};

/// Materializes every disk, stacks parallel arcs from their corner outwards
/// and glues the i-th arc on each side of a face to the i-th on the other.
DiskGraph build_disk_graph(const Triangulation& tri, const HakenVector& v);

/// Connected components (0 for the empty surface). Throws NotNormal.
std::int64_t component_count(const Triangulation& tri, const HakenVector& v);

/// Parity test against the core circle E_h: orientable iff the weight on E_h
/// is even. Throws NotConnected for multi-component input.
bool is_orientable(const Triangulation& tri, const HakenVector& v);

/// Independent check: propagates a transverse orientation across disk
/// gluings. One entry per component, true when that component is two-sided
/// (hence orientable in the orientable lens space).
std::vector<bool> orientability_by_propagation(const Triangulation& tri, const HakenVector& v);

}  // namespace lensurf
