#include "lensurf/lens_triangulation.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <numeric>
#include <optional>
#include <set>

#include "lensurf/detail/union_find.hpp"
#include "lensurf/errors.hpp"

namespace lensurf {

namespace {

constexpr std::array<std::array<int, 2>, 6> kEdgeSlots{
    {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}};

std::size_t face_offset(FaceRef f) {
  return static_cast<std::size_t>(f.tet - 1) * 4 + static_cast<std::size_t>(f.opposite);
}

}  // namespace

LensParams LensParams::make(std::int64_t p, std::int64_t q) {
  if (p < 2) {
    throw Error(ErrorKind::OutOfRange, "p must be at least 2, got " + std::to_string(p));
  }
  if (p > 100'000'000) {
    throw Error(ErrorKind::OutOfRange, "p too large: " + std::to_string(p));
  }
  std::int64_t reduced = ((q % p) + p) % p;
  if (reduced == 0) {
    throw Error(ErrorKind::OutOfRange,
                "q must be nonzero modulo p, got q = " + std::to_string(q));
  }
  if (std::gcd(p, reduced) != 1) {
    throw Error(ErrorKind::NonCoprime, "gcd(" + std::to_string(p) + ", " +
                                           std::to_string(reduced) + ") != 1");
  }
  return LensParams(static_cast<int>(p), static_cast<int>(reduced));
}

int wrap_index(std::int64_t i, int p) {
  std::int64_t r = (i - 1) % p;
  if (r < 0) r += p;
  return static_cast<int>(r + 1);
}

int edge_slot_index(int a, int b) {
  if (a > b) std::swap(a, b);
  for (int e = 0; e < 6; ++e) {
    if (kEdgeSlots[e][0] == a && kEdgeSlots[e][1] == b) return e;
  }
  throw Error(ErrorKind::IndexOutOfRange,
              "no tetrahedron edge joins slots " + std::to_string(a) + " and " + std::to_string(b));
}

std::array<int, 2> edge_slots(int index) {
  if (index < 0 || index >= 6) {
    throw Error(ErrorKind::IndexOutOfRange, "edge slot index " + std::to_string(index));
  }
  return kEdgeSlots[index];
}

EdgeName EdgeName::parse(std::string_view text) {
  if (text == "E_v") return vertical();
  if (text == "E_h") return horizontal();
  if (text.size() > 2 && text.substr(0, 2) == "e_") {
    int value = 0;
    auto digits = text.substr(2);
    auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), value);
    if (ec == std::errc() && ptr == digits.data() + digits.size() && value > 0) {
      return spoke(value);
    }
  }
  throw Error(ErrorKind::UnknownEdge, "cannot parse edge name '" + std::string(text) + "'");
}

std::string EdgeName::to_string() const {
  switch (kind_) {
    case Kind::Vertical: return "E_v";
    case Kind::Horizontal: return "E_h";
    case Kind::Spoke: return "e_" + std::to_string(index_);
  }
  return "?";
}

const Tetrahedron& Triangulation::tetrahedron(int tet) const {
  if (tet < 1 || tet > size()) {
    throw Error(ErrorKind::IndexOutOfRange, "tetrahedron " + std::to_string(tet));
  }
  return tets_[static_cast<std::size_t>(tet - 1)];
}

const Gluing& Triangulation::gluing(FaceRef face) const {
  if (face.tet < 1 || face.tet > size() || face.opposite < 0 || face.opposite > 3) {
    throw Error(ErrorKind::IndexOutOfRange, "face (" + std::to_string(face.tet) + ", " +
                                                std::to_string(face.opposite) + ")");
  }
  return gluings_[face_offset(face)];
}

const EdgeClass& Triangulation::edge_class(const EdgeName& name) const {
  // Classes are stored sorted: E_v, E_h, e_1, ..., e_p.
  std::size_t slot = 0;
  switch (name.kind()) {
    case EdgeName::Kind::Vertical: slot = 0; break;
    case EdgeName::Kind::Horizontal: slot = 1; break;
    case EdgeName::Kind::Spoke: slot = static_cast<std::size_t>(name.index()) + 1; break;
  }
  if (slot >= edges_.size() || edges_[slot].name != name) {
    throw Error(ErrorKind::UnknownEdge, "no edge class named " + name.to_string());
  }
  return edges_[slot];
}

std::size_t Triangulation::edge_class_index(int tet, int a, int b) const {
  tetrahedron(tet);
  return edge_of_slot_[static_cast<std::size_t>(tet - 1) * 6 +
                       static_cast<std::size_t>(edge_slot_index(a, b))];
}

std::size_t Triangulation::vertex_class_index(int tet, int slot) const {
  tetrahedron(tet);
  if (slot < 0 || slot > 3) throw Error(ErrorKind::IndexOutOfRange, "vertex slot");
  return vertex_of_slot_[static_cast<std::size_t>(tet - 1) * 4 + static_cast<std::size_t>(slot)];
}

std::int64_t Triangulation::euler_characteristic() const {
  return static_cast<std::int64_t>(vertices_.size()) - static_cast<std::int64_t>(edges_.size()) +
         glued_face_count() - size();
}

namespace {

// The incidences each named edge must have, read off the suspension picture:
// e_j = (v_+, v_j) = (v_-, v_{j+q}).
std::vector<EdgeSlot> expected_incidences(const EdgeName& name, int p, int q) {
  std::vector<EdgeSlot> out;
  switch (name.kind()) {
    case EdgeName::Kind::Vertical:
      for (int t = 1; t <= p; ++t) out.push_back({t, kVPlus, kVMinus});
      break;
    case EdgeName::Kind::Horizontal:
      for (int t = 1; t <= p; ++t) out.push_back({t, kVLow, kVHigh});
      break;
    case EdgeName::Kind::Spoke: {
      int j = name.index();
      out.push_back({j, kVPlus, kVLow});
      out.push_back({wrap_index(j - 1, p), kVPlus, kVHigh});
      out.push_back({wrap_index(j + q, p), kVMinus, kVLow});
      out.push_back({wrap_index(j + q - 1, p), kVMinus, kVHigh});
      break;
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

Triangulation build_triangulation(const LensParams& params) {
  const int p = params.p();
  const int q = params.q();
  Triangulation tri(params);

  tri.tets_.reserve(static_cast<std::size_t>(p));
  for (int i = 1; i <= p; ++i) tri.tets_.push_back({i, i, wrap_index(i + 1, p)});

  tri.gluings_.assign(static_cast<std::size_t>(4 * p), Gluing{});
  auto glue = [&](FaceRef a, FaceRef b, std::array<int, 4> map) {
    tri.gluings_[face_offset(a)] = {a, b, map};
    std::array<int, 4> inverse{};
    for (int s = 0; s < 4; ++s) inverse[map[s]] = s;
    tri.gluings_[face_offset(b)] = {b, a, inverse};
  };
  for (int i = 1; i <= p; ++i) {
    // Internal face (v_+, v_-, v_{i+1}): opposite v_i in tau_i, opposite
    // v_{i+2} in tau_{i+1}.
    glue({i, kVLow}, {wrap_index(i + 1, p), kVHigh}, {kVPlus, kVMinus, kVHigh, kVLow});
    // Upper trigon (v_+, v_i, v_{i+1}) of tau_i onto the lower trigon
    // (v_-, v_{i+q}, v_{i+q+1}) of tau_{i+q}.
    glue({i, kVMinus}, {wrap_index(i + q, p), kVPlus}, {kVMinus, kVPlus, kVLow, kVHigh});
  }

  for (const Gluing& g : tri.gluings_) {
    if (g.partner.tet == 0 || tri.gluings_[face_offset(g.partner)].partner != g.face ||
        g.partner == g.face) {
      throw Error(ErrorKind::Consistency, "face gluing is not a fixed-point-free involution");
    }
  }

  detail::UnionFind edge_sets(static_cast<std::size_t>(6 * p));
  detail::UnionFind vertex_sets(static_cast<std::size_t>(4 * p));
  for (const Gluing& g : tri.gluings_) {
    auto src = static_cast<std::size_t>(g.face.tet - 1);
    auto dst = static_cast<std::size_t>(g.partner.tet - 1);
    for (int s = 0; s < 4; ++s) {
      if (s == g.face.opposite) continue;
      vertex_sets.unite(src * 4 + static_cast<std::size_t>(s),
                        dst * 4 + static_cast<std::size_t>(g.slot_map[s]));
      for (int t = s + 1; t < 4; ++t) {
        if (t == g.face.opposite) continue;
        edge_sets.unite(src * 6 + static_cast<std::size_t>(edge_slot_index(s, t)),
                        dst * 6 + static_cast<std::size_t>(
                                      edge_slot_index(g.slot_map[s], g.slot_map[t])));
      }
    }
  }

  // Name each computed class by the generating edges it contains.
  std::map<std::size_t, EdgeName> name_of_root;
  auto assign = [&](int tet, int a, int b, EdgeName name) {
    std::size_t root = edge_sets.find(static_cast<std::size_t>(tet - 1) * 6 +
                                      static_cast<std::size_t>(edge_slot_index(a, b)));
    auto [it, inserted] = name_of_root.emplace(root, name);
    if (!inserted && it->second != name) {
      throw Error(ErrorKind::Consistency, "edges " + it->second.to_string() + " and " +
                                              name.to_string() + " were identified");
    }
  };
  for (int t = 1; t <= p; ++t) {
    assign(t, kVPlus, kVMinus, EdgeName::vertical());
    assign(t, kVLow, kVHigh, EdgeName::horizontal());
    assign(t, kVPlus, kVLow, EdgeName::spoke(t));
  }

  std::map<EdgeName, std::vector<EdgeSlot>> members;
  for (int t = 1; t <= p; ++t) {
    for (int e = 0; e < 6; ++e) {
      std::size_t root = edge_sets.find(static_cast<std::size_t>(t - 1) * 6 + static_cast<std::size_t>(e));
      auto it = name_of_root.find(root);
      if (it == name_of_root.end()) {
        throw Error(ErrorKind::Consistency, "unnamed edge class");
      }
      members.try_emplace(it->second).first->second.push_back({t, kEdgeSlots[e][0], kEdgeSlots[e][1]});
    }
  }

  std::map<std::size_t, std::size_t> class_of_root;
  for (auto& [name, slots] : members) {
    std::sort(slots.begin(), slots.end());
    if (slots != expected_incidences(name, p, q)) {
      throw Error(ErrorKind::Consistency,
                  "computed edge class " + name.to_string() + " disagrees with its expected incidences");
    }
    class_of_root[edge_sets.find(static_cast<std::size_t>(slots.front().tet - 1) * 6 +
                                 static_cast<std::size_t>(edge_slot_index(slots.front().a, slots.front().b)))] =
        tri.edges_.size();
    tri.edges_.push_back({name, slots});
  }
  tri.edge_of_slot_.resize(static_cast<std::size_t>(6 * p));
  for (std::size_t i = 0; i < tri.edge_of_slot_.size(); ++i) {
    tri.edge_of_slot_[i] = class_of_root.at(edge_sets.find(i));
  }

  std::map<std::size_t, std::size_t> vclass_of_root;
  tri.vertex_of_slot_.resize(static_cast<std::size_t>(4 * p));
  for (std::size_t i = 0; i < tri.vertex_of_slot_.size(); ++i) {
    std::size_t root = vertex_sets.find(i);
    auto [it, inserted] = vclass_of_root.emplace(root, tri.vertices_.size());
    if (inserted) tri.vertices_.emplace_back();
    tri.vertices_[it->second].members.push_back(
        {static_cast<int>(i / 4) + 1, static_cast<int>(i % 4)});
    tri.vertex_of_slot_[i] = it->second;
  }

  return tri;
}

int edge_degree(const Triangulation& tri, const EdgeName& name) {
  return tri.edge_class(name).degree();
}

int edge_degree(const Triangulation& tri, std::string_view name) {
  return edge_degree(tri, EdgeName::parse(name));
}

}  // namespace lensurf
