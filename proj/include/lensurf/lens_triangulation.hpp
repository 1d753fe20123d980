#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace lensurf {

/// Coprime pair (p, q) with 2 <= p and 1 <= q < p. Construct through make(),
/// which reduces q modulo p before validating.
class LensParams {
 public:
  static LensParams make(std::int64_t p, std::int64_t q);

  int p() const noexcept { return p_; }
  int q() const noexcept { return q_; }

  friend bool operator==(const LensParams&, const LensParams&) = default;

 private:
  LensParams(int p, int q) : p_(p), q_(q) {}

  int p_;
  int q_;
};

/// Vertex slots of every tetrahedron, in storage order (v_+, v_-, v_i, v_{i+1}).
enum Slot : int { kVPlus = 0, kVMinus = 1, kVLow = 2, kVHigh = 3 };

/// Maps any integer onto the 1-based residue range {1, ..., p}.
int wrap_index(std::int64_t i, int p);

/// Index 0..5 of the tetrahedron edge joining slots a and b.
int edge_slot_index(int a, int b);
/// Inverse of edge_slot_index: the (a, b) slot pair with a < b.
std::array<int, 2> edge_slots(int index);

/// The face of tetrahedron `tet` (1-based) opposite vertex slot `opposite`.
struct FaceRef {
  int tet = 0;
  int opposite = 0;

  friend auto operator<=>(const FaceRef&, const FaceRef&) = default;
};

/// One directed face identification. `slot_map[s]` is the slot of the
/// partner tetrahedron that slot s of `face.tet` is sent to.
struct Gluing {
  FaceRef face;
  FaceRef partner;
  std::array<int, 4> slot_map{};
};

class EdgeName {
 public:
  enum class Kind { Vertical, Horizontal, Spoke };

  static EdgeName vertical() { return EdgeName(Kind::Vertical, 0); }
  static EdgeName horizontal() { return EdgeName(Kind::Horizontal, 0); }
  static EdgeName spoke(int i) { return EdgeName(Kind::Spoke, i); }
  /// Accepts "E_v", "E_h" and "e_<i>". Throws Error(UnknownEdge) otherwise.
  static EdgeName parse(std::string_view text);

  Kind kind() const noexcept { return kind_; }
  int index() const noexcept { return index_; }
  std::string to_string() const;

  friend auto operator<=>(const EdgeName&, const EdgeName&) = default;

 private:
  EdgeName(Kind kind, int index) : kind_(kind), index_(index) {}

  Kind kind_;
  int index_;
};

struct EdgeSlot {
  int tet = 0;
  int a = 0;
  int b = 0;

  friend auto operator<=>(const EdgeSlot&, const EdgeSlot&) = default;
};

struct EdgeClass {
  EdgeName name = EdgeName::vertical();
  std::vector<EdgeSlot> incidences;

  int degree() const noexcept { return static_cast<int>(incidences.size()); }
};

struct VertexSlot {
  int tet = 0;
  int slot = 0;

  friend auto operator<=>(const VertexSlot&, const VertexSlot&) = default;
};

struct VertexClass {
  std::vector<VertexSlot> members;
};

/// Tetrahedron tau_i of the suspension: vertices v_+, v_-, v_low, v_high,
/// where low = i and high = i + 1 are equatorial labels in 1..p.
struct Tetrahedron {
  int index = 0;
  int low = 0;
  int high = 0;
};

/// The p-tetrahedron triangulation T(p, q). Immutable once built.
class Triangulation {
 public:
  const LensParams& params() const noexcept { return params_; }
  int size() const noexcept { return params_.p(); }

  const Tetrahedron& tetrahedron(int tet) const;
  const Gluing& gluing(FaceRef face) const;
  /// All 4p directed gluings, ordered by (tet, opposite).
  std::span<const Gluing> gluings() const noexcept { return gluings_; }

  std::span<const EdgeClass> edge_classes() const noexcept { return edges_; }
  std::span<const VertexClass> vertex_classes() const noexcept { return vertices_; }

  /// Throws Error(UnknownEdge) for names not present in this triangulation.
  const EdgeClass& edge_class(const EdgeName& name) const;
  std::size_t edge_class_index(int tet, int a, int b) const;
  std::size_t vertex_class_index(int tet, int slot) const;

  /// Number of faces after identification (always 2p).
  int glued_face_count() const noexcept { return 2 * size(); }
  /// V - E + F - T of the cell complex.
  std::int64_t euler_characteristic() const;

 private:
  explicit Triangulation(LensParams params) : params_(params) {}

  friend Triangulation build_triangulation(const LensParams& params);

  LensParams params_;
  std::vector<Tetrahedron> tets_;
  std::vector<Gluing> gluings_;
  std::vector<EdgeClass> edges_;
  std::vector<VertexClass> vertices_;
  std::vector<std::size_t> edge_of_slot_;    // 6 per tetrahedron
  std::vector<std::size_t> vertex_of_slot_;  // 4 per tetrahedron
};

/// Builds T(p, q): tau_i and tau_{i+1} share (v_+, v_-, v_{i+1}); the upper
/// trigon of tau_i is glued to the lower trigon of tau_{i+q}. Edge and vertex
/// classes come from union-find over the gluings and are then named; a
/// partition that disagrees with the expected naming throws
/// Error(Consistency).
Triangulation build_triangulation(const LensParams& params);

int edge_degree(const Triangulation& tri, const EdgeName& name);
int edge_degree(const Triangulation& tri, std::string_view name);

}  // namespace lensurf
