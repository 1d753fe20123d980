#include "lensurf/normal_coords.hpp"

#include <algorithm>
#include <unordered_map>

#include "lensurf/detail/union_find.hpp"
#include "lensurf/errors.hpp"

namespace lensurf {

namespace {

// Quad k keeps slot 0 together with kQuadPartner[k]; the other two slots
// form the opposite side.
constexpr std::array<int, 3> kQuadPartner{kVMinus, kVHigh, kVLow};

DiskKind triangle_at(int slot) { return static_cast<DiskKind>(slot); }
DiskKind quad_kind(int quad) { return static_cast<DiskKind>(4 + quad); }

void require_size(const Triangulation& tri, const HakenVector& v) {
  if (v.tets() != tri.size() || v.size() != static_cast<std::size_t>(tri.size()) * kDiskTypesPerTet) {
    throw Error(ErrorKind::DimensionMismatch,
                "Haken vector of length " + std::to_string(v.size()) + " for " +
                    std::to_string(tri.size()) + " tetrahedra");
  }
}

void require_normal(const Triangulation& tri, const HakenVector& v) {
  require_size(tri, v);
  if (!is_normal(tri, v)) {
    throw Error(ErrorKind::NotNormal, "vector is not a normal surface");
  }
}

// Number of disks of tetrahedron `tet` meeting its edge (a, b).
std::int64_t disks_on_edge(const HakenVector& v, int tet, int a, int b) {
  std::int64_t n = v.at(tet, triangle_at(a)) + v.at(tet, triangle_at(b));
  int parallel = quad_pairing(a, b);
  for (int k = 0; k < 3; ++k) {
    if (k != parallel) n += v.at(tet, quad_kind(k));
  }
  return n;
}

}  // namespace

int quad_pairing(int a, int b) {
  if (a == b || a < 0 || b < 0 || a > 3 || b > 3) {
    throw Error(ErrorKind::IndexOutOfRange, "quad pairing of equal or invalid slots");
  }
  if (a > b) std::swap(a, b);
  // The pair containing slot 0 determines the partition; 0+1+2+3 = 6.
  int partner = a == 0 ? b : 6 - a - b;
  auto it = std::find(kQuadPartner.begin(), kQuadPartner.end(), partner);
  return static_cast<int>(it - kQuadPartner.begin());
}

std::array<int, 2> quad_side(int quad) { return {0, kQuadPartner.at(static_cast<std::size_t>(quad))}; }

std::vector<std::array<int, 2>> DiskTypeIndex::edges_met() const {
  std::vector<std::array<int, 2>> out;
  int k = static_cast<int>(kind);
  for (int e = 0; e < 6; ++e) {
    auto [a, b] = edge_slots(e);
    bool meets = k < 4 ? (a == k || b == k) : quad_pairing(a, b) != k - 4;
    if (meets) out.push_back({a, b});
  }
  return out;
}

HakenVector::HakenVector(int tets, std::vector<std::int64_t> counts)
    : tets_(tets), counts_(std::move(counts)) {
  if (counts_.size() != static_cast<std::size_t>(tets) * kDiskTypesPerTet) {
    throw Error(ErrorKind::DimensionMismatch, "Haken vector needs 7 entries per tetrahedron");
  }
}

std::size_t HakenVector::index(int tet, DiskKind kind) const {
  if (tet < 1 || tet > tets_) {
    throw Error(ErrorKind::IndexOutOfRange, "tetrahedron " + std::to_string(tet));
  }
  return static_cast<std::size_t>(tet - 1) * kDiskTypesPerTet + static_cast<std::size_t>(kind);
}

bool HakenVector::is_zero() const {
  return std::all_of(counts_.begin(), counts_.end(), [](std::int64_t x) { return x == 0; });
}

std::int64_t HakenVector::total_triangles() const {
  std::int64_t n = 0;
  for (std::size_t i = 0; i < counts_.size(); ++i) {
    if (i % kDiskTypesPerTet < 4) n += counts_[i];
  }
  return n;
}

std::int64_t HakenVector::total_quads() const {
  std::int64_t n = 0;
  for (std::size_t i = 0; i < counts_.size(); ++i) {
    if (i % kDiskTypesPerTet >= 4) n += counts_[i];
  }
  return n;
}

HakenVector& HakenVector::operator+=(const HakenVector& other) {
  if (other.counts_.size() != counts_.size()) {
    throw Error(ErrorKind::DimensionMismatch, "adding Haken vectors of different length");
  }
  for (std::size_t i = 0; i < counts_.size(); ++i) counts_[i] += other.counts_[i];
  return *this;
}

HakenVector operator*(std::int64_t k, HakenVector v) {
  for (auto& x : v.counts_) x *= k;
  return v;
}

std::vector<std::int64_t> MatchingEquations::apply(std::span<const std::int64_t> v) const {
  if (v.size() != cols) {
    throw Error(ErrorKind::DimensionMismatch, "vector length does not match column count");
  }
  std::vector<std::int64_t> out;
  out.reserve(equations.size());
  for (const auto& row : equations) {
    std::int64_t s = 0;
    for (auto [col, coef] : row.entries) s += coef * v[col];
    out.push_back(s);
  }
  return out;
}

MatchingEquations matching_equations(const Triangulation& tri) {
  MatchingEquations eq;
  eq.cols = static_cast<std::size_t>(tri.size()) * kDiskTypesPerTet;
  for (const Gluing& g : tri.gluings()) {
    if (g.partner < g.face) continue;
    for (int c = 0; c < 4; ++c) {
      if (c == g.face.opposite) continue;
      int c2 = g.slot_map[c];
      std::map<std::size_t, int> acc;
      acc[DiskTypeIndex{g.face.tet, triangle_at(c)}.flat()] += 1;
      acc[DiskTypeIndex{g.face.tet, quad_kind(quad_pairing(c, g.face.opposite))}.flat()] += 1;
      acc[DiskTypeIndex{g.partner.tet, triangle_at(c2)}.flat()] -= 1;
      acc[DiskTypeIndex{g.partner.tet, quad_kind(quad_pairing(c2, g.partner.opposite))}.flat()] -= 1;
      MatchingRow row{g.face, c, {}};
      for (auto [col, coef] : acc) {
        if (coef != 0) row.entries.emplace_back(col, coef);
      }
      eq.equations.push_back(std::move(row));
    }
  }
  eq.rows = eq.equations.size();
  return eq;
}

bool satisfies_matching(const Triangulation& tri, const HakenVector& v) {
  require_size(tri, v);
  auto residual = matching_equations(tri).apply(v.counts());
  return std::all_of(residual.begin(), residual.end(), [](std::int64_t x) { return x == 0; });
}

bool square_condition(const HakenVector& v) {
  for (int t = 1; t <= v.tets(); ++t) {
    int nonzero = 0;
    for (int k = 0; k < 3; ++k) nonzero += v.at(t, quad_kind(k)) != 0 ? 1 : 0;
    if (nonzero > 1) return false;
  }
  return true;
}

bool is_normal(const Triangulation& tri, const HakenVector& v) {
  require_size(tri, v);
  auto c = v.counts();
  if (std::any_of(c.begin(), c.end(), [](std::int64_t x) { return x < 0; })) return false;
  return square_condition(v) && satisfies_matching(tri, v);
}

HakenVector vertex_link(const Triangulation& tri, std::size_t vertex_class) {
  auto classes = tri.vertex_classes();
  if (vertex_class >= classes.size()) {
    throw Error(ErrorKind::IndexOutOfRange, "vertex class " + std::to_string(vertex_class));
  }
  HakenVector v(tri.size());
  for (const VertexSlot& s : classes[vertex_class].members) v.at(s.tet, triangle_at(s.slot)) += 1;
  return v;
}

HakenVector heegaard_torus(const Triangulation& tri) {
  HakenVector v(tri.size());
  for (int t = 1; t <= tri.size(); ++t) v.at(t, DiskKind::Quad1) = 1;
  return v;
}

std::int64_t edge_weight(const Triangulation& tri, const HakenVector& v, const EdgeName& name) {
  require_size(tri, v);
  const EdgeClass& edge = tri.edge_class(name);
  std::int64_t total = 0;
  for (const EdgeSlot& s : edge.incidences) total += disks_on_edge(v, s.tet, s.a, s.b);
  if (total % edge.degree() != 0) {
    throw Error(ErrorKind::NonIntegralWeight,
                "incidence sum " + std::to_string(total) + " on " + name.to_string() +
                    " is not divisible by its degree " + std::to_string(edge.degree()));
  }
  return total / edge.degree();
}

std::map<EdgeName, std::int64_t> edge_weights(const Triangulation& tri, const HakenVector& v) {
  std::map<EdgeName, std::int64_t> out;
  for (const EdgeClass& e : tri.edge_classes()) out.emplace(e.name, edge_weight(tri, v, e.name));
  return out;
}

std::int64_t euler_characteristic(const Triangulation& tri, const HakenVector& v) {
  require_normal(tri, v);
  std::int64_t vertices = 0;
  for (const auto& [name, w] : edge_weights(tri, v)) vertices += w;
  std::int64_t tris = v.total_triangles();
  std::int64_t quads = v.total_quads();
  std::int64_t arc_ends = 3 * tris + 4 * quads;
  if (arc_ends % 2 != 0) {
    throw Error(ErrorKind::Consistency, "odd number of disk sides");
  }
  return vertices - arc_ends / 2 + tris + quads;
}

DiskGraph build_disk_graph(const Triangulation& tri, const HakenVector& v) {
  require_normal(tri, v);
  DiskGraph graph;
  std::vector<std::size_t> offset(v.size() + 1, 0);
  for (std::size_t i = 0; i < v.size(); ++i) {
    offset[i + 1] = offset[i] + static_cast<std::size_t>(v[i]);
  }
  graph.disks.reserve(offset.back());
  for (int t = 1; t <= tri.size(); ++t) {
    for (int k = 0; k < kDiskTypesPerTet; ++k) {
      for (std::int64_t c = 0; c < v.at(t, static_cast<DiskKind>(k)); ++c) {
        graph.disks.push_back({t, static_cast<DiskKind>(k), c});
      }
    }
  }

  struct ArcEnd {
    std::size_t disk;
    bool corner_on_reference_side;
  };
  // The pos-th arc (counted from corner c) in the face of `tet` opposite `opp`.
  auto arc = [&](int tet, int c, int opp, std::int64_t pos) -> ArcEnd {
    std::int64_t tris = v.at(tet, triangle_at(c));
    if (pos < tris) {
      return {offset[DiskTypeIndex{tet, triangle_at(c)}.flat()] + static_cast<std::size_t>(pos), true};
    }
    int quad = quad_pairing(c, opp);
    std::int64_t r = pos - tris;
    std::int64_t n = v.at(tet, quad_kind(quad));
    auto side = quad_side(quad);
    bool near_reference = (c == side[0] || c == side[1]);
    std::int64_t copy = near_reference ? r : n - 1 - r;
    return {offset[DiskTypeIndex{tet, quad_kind(quad)}.flat()] + static_cast<std::size_t>(copy),
            near_reference};
  };

  for (const Gluing& g : tri.gluings()) {
    if (g.partner < g.face) continue;
    for (int c = 0; c < 4; ++c) {
      if (c == g.face.opposite) continue;
      int c2 = g.slot_map[c];
      std::int64_t n = v.at(g.face.tet, triangle_at(c)) +
                       v.at(g.face.tet, quad_kind(quad_pairing(c, g.face.opposite)));
      for (std::int64_t pos = 0; pos < n; ++pos) {
        ArcEnd a = arc(g.face.tet, c, g.face.opposite, pos);
        ArcEnd b = arc(g.partner.tet, c2, g.partner.opposite, pos);
        graph.links.push_back({a.disk, b.disk, a.corner_on_reference_side != b.corner_on_reference_side});
      }
    }
  }
  return graph;
}

namespace {

struct ComponentScan {
  std::int64_t components = 0;
  std::vector<bool> two_sided;
};

ComponentScan scan_components(const Triangulation& tri, const HakenVector& v) {
  DiskGraph graph = build_disk_graph(tri, v);
  detail::UnionFind sets(graph.disks.size());
  for (const auto& link : graph.links) sets.unite(link.a, link.b, link.flips ? 1u : 0u);
  ComponentScan scan;
  std::unordered_map<std::size_t, std::size_t> seen;
  for (std::size_t d = 0; d < graph.disks.size(); ++d) {
    std::size_t root = sets.find(d);
    if (seen.emplace(root, scan.two_sided.size()).second) {
      scan.two_sided.push_back(!sets.inconsistent(root));
    }
  }
  scan.components = static_cast<std::int64_t>(scan.two_sided.size());
  return scan;
}

}  // namespace

std::int64_t component_count(const Triangulation& tri, const HakenVector& v) {
  return scan_components(tri, v).components;
}

bool is_orientable(const Triangulation& tri, const HakenVector& v) {
  require_normal(tri, v);
  std::int64_t components = component_count(tri, v);
  if (components != 1) {
    throw Error(ErrorKind::NotConnected,
                "parity criterion needs a connected surface, got " + std::to_string(components) +
                    " components");
  }
  return edge_weight(tri, v, EdgeName::horizontal()) % 2 == 0;
}

std::vector<bool> orientability_by_propagation(const Triangulation& tri, const HakenVector& v) {
  return scan_components(tri, v).two_sided;
}

}  // namespace lensurf
