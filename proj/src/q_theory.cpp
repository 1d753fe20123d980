#include "lensurf/q_theory.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <sstream>

#include "lensurf/errors.hpp"

namespace lensurf {

namespace {

DiskKind triangle_at(int slot) { return static_cast<DiskKind>(slot); }

}  // namespace

QVector::QVector(int blocks, std::vector<std::int64_t> entries)
    : blocks_(blocks), entries_(std::move(entries)) {
  if (entries_.size() != static_cast<std::size_t>(blocks) * 3) {
    throw Error(ErrorKind::DimensionMismatch, "Q-vector needs 3 entries per block");
  }
}

std::size_t QVector::index(std::int64_t block, int j) const {
  if (blocks_ <= 0 || j < 1 || j > 3) {
    throw Error(ErrorKind::IndexOutOfRange, "Q-vector entry (" + std::to_string(block) + ", " +
                                                std::to_string(j) + ")");
  }
  return static_cast<std::size_t>(wrap_index(block, blocks_) - 1) * 3 + static_cast<std::size_t>(j - 1);
}

bool QVector::is_zero() const {
  return std::all_of(entries_.begin(), entries_.end(), [](std::int64_t x) { return x == 0; });
}

bool QVector::is_non_negative() const {
  return std::all_of(entries_.begin(), entries_.end(), [](std::int64_t x) { return x >= 0; });
}

bool QVector::square_condition() const {
  for (std::size_t b = 0; b < entries_.size(); b += 3) {
    int nonzero = (entries_[b] != 0) + (entries_[b + 1] != 0) + (entries_[b + 2] != 0);
    if (nonzero > 1) return false;
  }
  return true;
}

QVector& QVector::operator+=(const QVector& other) {
  if (other.size() != size()) throw Error(ErrorKind::DimensionMismatch, "Q-vector lengths differ");
  for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] += other.entries_[i];
  return *this;
}

QVector& QVector::operator-=(const QVector& other) {
  if (other.size() != size()) throw Error(ErrorKind::DimensionMismatch, "Q-vector lengths differ");
  for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] -= other.entries_[i];
  return *this;
}

QVector operator*(std::int64_t k, QVector v) {
  for (auto& x : v.entries_) x *= k;
  return v;
}

QVector basis_s(int p, std::int64_t i) {
  QVector v(p);
  for (int j = 1; j <= 3; ++j) v.at(i, j) = 1;
  return v;
}

QVector basis_t(int p, int q, std::int64_t i) {
  QVector v(p);
  v.at(i, 2) += 1;
  v.at(i + q + 1, 2) += 1;
  v.at(i + 1, 3) += 1;
  v.at(i + q, 3) += 1;
  return v;
}

void require_basis_hypotheses(const LensParams& params) {
  const int p = params.p();
  const int q = params.q();
  if (p < 5 || q < 2 || 2 * q >= p) {
    throw Error(ErrorKind::HypothesisViolated,
                "basis {s_i, t_i} needs p >= 5 and 2 <= q < p/2, got (" + std::to_string(p) + ", " +
                    std::to_string(q) + ")");
  }
}

QBasis q_basis(const LensParams& params) {
  require_basis_hypotheses(params);
  QBasis basis;
  for (int i = 1; i <= params.p(); ++i) {
    basis.s.push_back(basis_s(params.p(), i));
    basis.t.push_back(basis_t(params.p(), params.q(), i));
  }
  return basis;
}

QVector quad_part(const HakenVector& v) {
  QVector qv(v.tets());
  for (int t = 1; t <= v.tets(); ++t) {
    for (int j = 1; j <= 3; ++j) qv.at(t, j) = v.at(t, static_cast<DiskKind>(3 + j));
  }
  return qv;
}

HakenVector complete_triangles(const Triangulation& tri, const QVector& qv) {
  const int p = tri.size();
  if (qv.blocks() != p) {
    throw Error(ErrorKind::DimensionMismatch, "Q-vector has " + std::to_string(qv.blocks()) +
                                                  " blocks for " + std::to_string(p) + " tetrahedra");
  }
  // Across a glued face the arcs cutting corner c match:
  //   T(t, c) + Q(t, c|opp) = T(t', c') + Q(t', c'|opp').
  auto quad_count = [&](int tet, int corner, int opp) {
    return qv.at(tet, quad_pairing(corner, opp) + 1);
  };
  auto node = [](int tet, int slot) { return static_cast<std::size_t>(tet - 1) * 4 + static_cast<std::size_t>(slot); };

  constexpr std::int64_t kUnset = std::numeric_limits<std::int64_t>::min();
  std::vector<std::int64_t> offset(static_cast<std::size_t>(4 * p), kUnset);
  std::vector<std::size_t> component(static_cast<std::size_t>(4 * p), 0);
  std::vector<std::int64_t> minimum;

  for (int tet = 1; tet <= p; ++tet) {
    for (int slot = 0; slot < 4; ++slot) {
      if (offset[node(tet, slot)] != kUnset) continue;
      std::size_t comp = minimum.size();
      minimum.push_back(0);
      offset[node(tet, slot)] = 0;
      component[node(tet, slot)] = comp;
      std::deque<std::pair<int, int>> queue{{tet, slot}};
      while (!queue.empty()) {
        auto [t, c] = queue.front();
        queue.pop_front();
        std::int64_t here = offset[node(t, c)];
        for (int opp = 0; opp < 4; ++opp) {
          if (opp == c) continue;
          const Gluing& g = tri.gluing({t, opp});
          int t2 = g.partner.tet;
          int c2 = g.slot_map[c];
          std::size_t there = node(t2, c2);
          if (offset[there] != kUnset) continue;
          offset[there] = here + quad_count(t, c, opp) - quad_count(t2, c2, g.partner.opposite);
          component[there] = comp;
          minimum[comp] = std::min(minimum[comp], offset[there]);
          queue.emplace_back(t2, c2);
        }
      }
    }
  }

  for (const Gluing& g : tri.gluings()) {
    for (int c = 0; c < 4; ++c) {
      if (c == g.face.opposite) continue;
      int c2 = g.slot_map[c];
      std::int64_t lhs = offset[node(g.face.tet, c)] + quad_count(g.face.tet, c, g.face.opposite);
      std::int64_t rhs = offset[node(g.partner.tet, c2)] + quad_count(g.partner.tet, c2, g.partner.opposite);
      if (lhs != rhs) {
        throw InadmissibleError("no triangle completion: arc at corner " + std::to_string(c) +
                                    " of face opposite slot " + std::to_string(g.face.opposite) +
                                    " in tetrahedron " + std::to_string(g.face.tet) +
                                    " cannot be matched",
                                g.face.tet, g.face.opposite, c);
      }
    }
  }

  HakenVector v(p);
  for (int t = 1; t <= p; ++t) {
    for (int c = 0; c < 4; ++c) {
      v.at(t, triangle_at(c)) = offset[node(t, c)] - minimum[component[node(t, c)]];
    }
    for (int j = 1; j <= 3; ++j) v.at(t, static_cast<DiskKind>(3 + j)) = qv.at(t, j);
  }
  return v;
}

HakenVector reconstruct_tdisks(const Triangulation& tri, const QVector& qv) {
  if (qv.blocks() != tri.size()) {
    throw Error(ErrorKind::DimensionMismatch, "Q-vector block count differs from tetrahedron count");
  }
  for (int b = 1; b <= qv.blocks(); ++b) {
    for (int j = 1; j <= 3; ++j) {
      if (qv.at(b, j) < 0) {
        throw InadmissibleError("negative quad count in block " + std::to_string(b), b, -1, -1);
      }
    }
    int nonzero = (qv.at(b, 1) != 0) + (qv.at(b, 2) != 0) + (qv.at(b, 3) != 0);
    if (nonzero > 1) {
      throw InadmissibleError("block " + std::to_string(b) + " mixes quad types", b, -1, -1);
    }
  }
  return complete_triangles(tri, qv);
}

bool satisfies_q_matching(const Triangulation& tri, const QVector& qv) {
  try {
    complete_triangles(tri, qv);
    return true;
  } catch (const InadmissibleError&) {
    return false;
  }
}

bool is_admissible(const Triangulation& tri, const QVector& qv) {
  try {
    reconstruct_tdisks(tri, qv);
    return true;
  } catch (const InadmissibleError&) {
    return false;
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::DimensionMismatch) return false;
    throw;
  }
}

namespace {

// Columns s_1..s_p, t_1..t_p.
RationalMatrix basis_columns(const LensParams& params) {
  const int p = params.p();
  RationalMatrix m(static_cast<std::size_t>(3 * p), std::vector<Rational>(static_cast<std::size_t>(2 * p), Rational(0)));
  for (int i = 1; i <= p; ++i) {
    QVector s = basis_s(p, i);
    QVector t = basis_t(p, params.q(), i);
    for (std::size_t r = 0; r < s.size(); ++r) {
      m[r][static_cast<std::size_t>(i - 1)] = s[r];
      m[r][static_cast<std::size_t>(p + i - 1)] = t[r];
    }
  }
  return m;
}

}  // namespace

std::optional<BasisCoefficients> in_solution_space(const LensParams& params, const QVector& qv) {
  require_basis_hypotheses(params);
  const int p = params.p();
  if (qv.blocks() != p) throw Error(ErrorKind::DimensionMismatch, "Q-vector block count");
  std::vector<Rational> rhs(qv.entries().begin(), qv.entries().end());
  auto x = solve(basis_columns(params), rhs);
  if (!x) return std::nullopt;
  BasisCoefficients c;
  c.a.assign(x->begin(), x->begin() + p);
  c.b.assign(x->begin() + p, x->end());
  return c;
}

std::vector<Rational> combine_basis(const LensParams& params, const BasisCoefficients& c) {
  const int p = params.p();
  const int q = params.q();
  auto a = [&](std::int64_t i) { return c.a[static_cast<std::size_t>(wrap_index(i, p) - 1)]; };
  auto b = [&](std::int64_t i) { return c.b[static_cast<std::size_t>(wrap_index(i, p) - 1)]; };
  std::vector<Rational> out;
  out.reserve(static_cast<std::size_t>(3 * p));
  for (int i = 1; i <= p; ++i) {
    out.push_back(a(i));
    out.push_back(a(i) + b(i) + b(p - q + i - 1));
    out.push_back(a(i) + b(i - 1) + b(p - q + i));
  }
  return out;
}

std::vector<std::vector<BigInt>> solution_space_constraints(const LensParams& params) {
  require_basis_hypotheses(params);
  RationalMatrix columns = basis_columns(params);
  // Rows of the transpose are the basis vectors; their orthogonal
  // complement cuts out the span.
  RationalMatrix generators(columns.front().size(), std::vector<Rational>(columns.size()));
  for (std::size_t r = 0; r < columns.size(); ++r) {
    for (std::size_t c = 0; c < columns[r].size(); ++c) generators[c][r] = columns[r][c];
  }
  std::vector<std::vector<BigInt>> rows;
  for (const auto& y : null_space(generators, columns.size())) rows.push_back(primitive_integer_row(y));
  return rows;
}

std::string format_blocks(const QVector& qv) {
  std::ostringstream os;
  for (int b = 1; b <= qv.blocks(); ++b) {
    if (b > 1) os << " | ";
    os << qv.at(b, 1) << ' ' << qv.at(b, 2) << ' ' << qv.at(b, 3);
  }
  return os.str();
}

}  // namespace lensurf
