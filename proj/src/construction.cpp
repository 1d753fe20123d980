#include "lensurf/construction.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <tuple>

#include "lensurf/errors.hpp"
#include "lensurf/fundamentality.hpp"
#include "lensurf/lens_arithmetic.hpp"

namespace lensurf {

namespace {

constexpr std::int64_t kMaxP = 100'000'000;

std::string join(const std::vector<std::int64_t>& xs) {
  std::ostringstream os;
  for (std::size_t i = 0; i < xs.size(); ++i) os << (i ? ", " : "") << xs[i];
  return os.str();
}

void require_step(const LensInstance& inst, int k) {
  if (k < 1 || k > inst.n - 1) {
    throw Error(ErrorKind::OutOfRange, "step " + std::to_string(k) + " outside 1.." + std::to_string(inst.n - 1));
  }
}

}  // namespace

std::int64_t LensInstance::q_sum(int l) const {
  std::int64_t s = 0;
  for (int u = 1; u <= l; ++u) s += q.at(static_cast<std::size_t>(u));
  return s;
}

std::int64_t LensInstance::disk_count(int k) const { return (q.at(static_cast<std::size_t>(n - k + 1)) - 1) / 2; }

std::int64_t LensInstance::pair_count(int k) const { return q.at(static_cast<std::size_t>(k)) + 1; }

LensInstance lens_instance(int n) {
  if (n < 1) throw Error(ErrorKind::OutOfRange, "n must be at least 1, got " + std::to_string(n));
  LensInstance inst;
  inst.n = n;
  inst.p = {0};
  inst.q = {1};
  for (int k = 1; k <= n; ++k) {
    std::int64_t pk = 3 * inst.p.back() + 2 * inst.q.back();
    std::int64_t qk = inst.p.back() + inst.q.back();
    if (pk > kMaxP) {
      throw Error(ErrorKind::OutOfRange, "p_" + std::to_string(k) + " exceeds " + std::to_string(kMaxP));
    }
    inst.p.push_back(pk);
    inst.q.push_back(qk);
  }
  return inst;
}

QVector h0(const LensParams& params) {
  const int p = params.p();
  if (p % 2 != 0) throw Error(ErrorKind::OddP, "h_0 needs even p, got " + std::to_string(p));
  if (params.q() < 3) throw Error(ErrorKind::HypothesisViolated, "h_0 needs q >= 3, got " + std::to_string(params.q()));
  require_basis_hypotheses(params);
  QVector sum(p);
  for (int m = 1; m <= p / 2; ++m) sum += basis_t(p, params.q(), 2 * m - 1);
  QVector half(p);
  for (std::size_t i = 0; i < sum.size(); ++i) {
    if (sum[i] % 2 != 0) throw Error(ErrorKind::Consistency, "sum of odd t_i is not divisible by 2");
    half[i] = sum[i] / 2;
  }
  return half;
}

std::string_view to_string(PatchRole role) { return role == PatchRole::Leading ? "leading" : "following"; }

std::string_view to_string(PatchKind kind) { return kind == PatchKind::Trigonal ? "trigonal" : "quadrilateral"; }

std::string_view to_string(Region region) {
  switch (region) {
    case Region::First:
      return "first";
    case Region::Second:
      return "second";
    case Region::Last:
      return "last";
  }
  return "?";
}

Region region_of(const LensInstance& inst, std::int64_t tet) {
  if (tet <= inst.qn()) return Region::First;
  if (tet <= 2 * inst.qn()) return Region::Second;
  return Region::Last;
}

CompressionSchedule compression_schedule(int n) {
  if (n < 2) throw Error(ErrorKind::OutOfRange, "schedules start at n = 2, got " + std::to_string(n));
  const LensInstance inst = lens_instance(n);
  const int p = static_cast<int>(inst.pn());
  const std::int64_t qn = inst.qn();
  CompressionSchedule sched{n, inst.pn(), qn, {}};
  for (int k = 1; k <= n - 1; ++k) {
    // 2(q_n + q_{n-1} + ... + q_{n-k+2}); zero for k = 1.
    std::int64_t base = 0;
    for (int r = 0; r <= k - 2; ++r) base += 2 * inst.q[static_cast<std::size_t>(n - r)];
    const std::int64_t pairs = inst.pair_count(k);
    for (std::int64_t i = 1; i <= inst.disk_count(k); ++i) {
      const std::int64_t first = base + 2 * i - 1;
      for (std::int64_t j = 1; j <= pairs; ++j) {
        const PatchKind kind = (j == 1 || j == pairs) ? PatchKind::Trigonal : PatchKind::Quadrilateral;
        const std::int64_t lead = wrap_index(first + (j - 1) * qn, p);
        const std::int64_t follow = wrap_index(lead + 1, p);
        sched.placements.push_back({k, i, j, PatchRole::Leading, lead, kind, region_of(inst, lead)});
        sched.placements.push_back({k, i, j, PatchRole::Following, follow, kind, region_of(inst, follow)});
      }
    }
  }
  return sched;
}

std::vector<CompressionTerms> step_terms(int n, int k) {
  const LensInstance inst = lens_instance(n);
  require_step(inst, k);
  const std::int64_t qn = inst.qn();
  std::vector<CompressionTerms> out;
  for (std::int64_t i = 1; i <= inst.disk_count(k); ++i) {
    CompressionTerms terms;
    terms.disk = i;
    if (k == 1) {
      terms.t_indices.push_back(2 * i - 1);
    } else {
      // 2q_{n-1} + ... + 2q_{n-k+2}; empty for k = 2.
      std::int64_t tail = 0;
      for (int r = 1; r <= k - 2; ++r) tail += 2 * inst.q[static_cast<std::size_t>(n - r)];
      const std::int64_t qk = inst.q[static_cast<std::size_t>(k)];
      auto idx = [&](std::int64_t j) { return (j + 1) * qn + tail + 2 * i - 1; };
      for (std::int64_t j = 1; j <= qk; ++j) terms.t_indices.push_back(idx(j));
      for (std::int64_t j = 2; j <= qk; ++j) {
        terms.s_indices.push_back(idx(j));
        terms.s_indices.push_back(idx(j) + 1);
      }
    }
    out.push_back(std::move(terms));
  }
  return out;
}

QVector apply_step(const Triangulation& tri, const QVector& prev, int n, int k) {
  const LensInstance inst = lens_instance(n);
  require_step(inst, k);
  const int p = static_cast<int>(inst.pn());
  const int q = static_cast<int>(inst.qn());
  if (prev.blocks() != p || tri.size() != p || tri.params().q() != q) {
    throw Error(ErrorKind::DimensionMismatch, "apply_step input is not for L(" + std::to_string(p) + ", " +
                                                  std::to_string(q) + ")");
  }
  QVector h = prev;
  for (const CompressionTerms& terms : step_terms(n, k)) {
    for (std::int64_t i : terms.t_indices) h -= basis_t(p, q, i);
    for (std::int64_t i : terms.s_indices) h += basis_s(p, i);
  }
  for (int b = 1; b <= p; ++b) {
    for (int j = 1; j <= 3; ++j) {
      if (h.at(b, j) < 0) {
        throw Error(ErrorKind::NegativeCoordinate, "step " + std::to_string(k) + " of n = " + std::to_string(n) +
                                                       " leaves x_" + std::to_string(b) + std::to_string(j) +
                                                       " = " + std::to_string(h.at(b, j)));
      }
    }
  }
  reconstruct_tdisks(tri, h);
  return h;
}

QVector apply_step(const QVector& prev, int n, int k) {
  const LensInstance inst = lens_instance(n);
  return apply_step(build_triangulation(inst.params()), prev, n, k);
}

std::int64_t sheet_count(const QVector& h, std::int64_t m) {
  if (m < 1 || m > h.blocks()) {
    throw Error(ErrorKind::IndexOutOfRange, "m = " + std::to_string(m) + " outside 1.." + std::to_string(h.blocks()));
  }
  return h.at(m, 1);
}

bool SurfaceReport::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.passed; });
}

SurfaceReport analyze_surface(const Triangulation& tri, const HakenVector& v, const AnalysisOptions& options) {
  if (!is_normal(tri, v)) throw Error(ErrorKind::NotNormal, "vector is not a normal surface on T(p, q)");
  SurfaceReport r;
  r.p = tri.params().p();
  r.q = tri.params().q();
  r.haken = v;
  r.qvector = quad_part(v);
  r.matching = true;
  r.square = true;
  r.euler = euler_characteristic(tri, v);
  r.weights = edge_weights(tri, v);
  r.fundamental_criterion = haken_fund_criterion(tri, v);
  for (int m = 1; m <= r.qvector.blocks(); ++m) r.q1_sheets.push_back(r.qvector.at(m, 1));

  const std::int64_t disks = v.total_triangles() + v.total_quads();
  if (disks > options.max_disks_for_components) {
    r.connectivity_skipped = true;
    return r;
  }
  r.components = component_count(tri, v);
  r.connected = *r.components == 1;
  if (*r.connected) r.orientable = is_orientable(tri, v);
  auto sides = orientability_by_propagation(tri, v);
  r.orientable_propagation = std::all_of(sides.begin(), sides.end(), [](bool b) { return b; });
  return r;
}

std::vector<QVector> construction_history(int n) {
  if (n < 2) throw Error(ErrorKind::OutOfRange, "the construction starts at n = 2, got " + std::to_string(n));
  const LensInstance inst = lens_instance(n);
  const Triangulation tri = build_triangulation(inst.params());
  std::vector<QVector> hs{h0(inst.params())};
  for (int k = 1; k <= n - 1; ++k) hs.push_back(apply_step(tri, hs.back(), n, k));
  return hs;
}

SurfaceReport construct_surface(int n, const AnalysisOptions& options) {
  if (n < 2) throw Error(ErrorKind::OutOfRange, "the construction starts at n = 2, got " + std::to_string(n));
  const LensInstance inst = lens_instance(n);
  const Triangulation tri = build_triangulation(inst.params());

  std::vector<QVector> hs{h0(inst.params())};
  std::vector<std::int64_t> history{euler_characteristic(tri, reconstruct_tdisks(tri, hs.back()))};
  for (int k = 1; k <= n - 1; ++k) {
    hs.push_back(apply_step(tri, hs.back(), n, k));
    history.push_back(euler_characteristic(tri, reconstruct_tdisks(tri, hs.back())));
  }

  SurfaceReport r = analyze_surface(tri, reconstruct_tdisks(tri, hs.back()), options);
  r.n = n;
  r.euler_history = history;
  auto add = [&](std::string name, bool ok, std::string detail) {
    r.checks.push_back({std::move(name), ok, std::move(detail)});
  };

  add("euler", r.euler == 2 - n, "chi = " + std::to_string(r.euler) + ", expected " + std::to_string(2 - n));
  const std::int64_t wv = r.weights.at(EdgeName::vertical());
  const std::int64_t wh = r.weights.at(EdgeName::horizontal());
  add("core_weights", wv == 1 && wh == 1, "E_v = " + std::to_string(wv) + ", E_h = " + std::to_string(wh));
  add("square", r.square, "at most one quad type per block");
  add("matching", r.matching, "Haken matching equations hold");
  if (r.connectivity_skipped) {
    add("connected", true, "skipped: surface exceeds " + std::to_string(options.max_disks_for_components) + " disks");
    add("non_orientable", wh % 2 == 1, "E_h parity only (propagation skipped)");
  } else {
    add("connected", r.connected.value_or(false), std::to_string(r.components.value_or(0)) + " component(s)");
    const bool parity = r.orientable.value_or(true);
    const bool prop = r.orientable_propagation.value_or(true);
    add("non_orientable", !parity && !prop,
        std::string("E_h parity says ") + (parity ? "orientable" : "non-orientable") + ", propagation says " +
            (prop ? "orientable" : "non-orientable"));
  }
  add("fundamental_criterion", r.fundamental_criterion, "weight 1 on both cores and a Q2/Q3 disk present");

  const std::int64_t lo = inst.q_sum(n - 1);
  const std::int64_t hi = inst.q_sum(n);
  bool sheets_ok = true;
  std::vector<std::int64_t> seen;
  for (std::int64_t m : {lo, lo + 1, hi, hi + 1}) {
    const std::int64_t x = sheet_count(r.qvector, wrap_index(m, r.p));
    r.sheets.emplace_back(m, x);
    seen.push_back(x);
    sheets_ok = sheets_ok && x == n - 2;
  }
  add("sheets", sheets_ok, "x_m1 at m = " + std::to_string(lo) + ", " + std::to_string(lo + 1) + ", " +
                               std::to_string(hi) + ", " + std::to_string(hi + 1) + ": " + join(seen) +
                               "; expected " + std::to_string(n - 2));

  std::vector<std::int64_t> expected{2 - inst.pn() / 2};
  for (int k = 1; k <= n - 1; ++k) expected.push_back(expected.back() + inst.q[static_cast<std::size_t>(n - k + 1)] - 1);
  add("euler_history", history == expected, "got " + join(history) + "; expected " + join(expected));

  const BigInt crosscap = bredon_wood_crosscap(BigInt(inst.pn()), BigInt(inst.qn()));
  add("crosscap_bound", BigInt(2 - r.euler) == crosscap,
      "2 - chi = " + std::to_string(2 - r.euler) + ", crosscap number = " + crosscap.str());

  bool non_negative = std::all_of(hs.begin(), hs.end(), [](const QVector& h) { return h.is_non_negative(); });
  add("intermediate_non_negative", non_negative, "h_0.." + std::string("h_") + std::to_string(n - 1));
  return r;
}

PlacementReport verify_placements(int n) {
  const LensInstance inst = lens_instance(n);
  const CompressionSchedule sched = compression_schedule(n);
  const std::int64_t qn = inst.qn();
  PlacementReport rep;
  rep.n = n;
  auto fail = [&](char check, std::string msg) { rep.violations.push_back({check, std::move(msg)}); };
  auto where = [](const PatchPlacement& pl) {
    return "step " + std::to_string(pl.step) + " disk " + std::to_string(pl.disk) + " pair " +
           std::to_string(pl.pair) + " " + std::string(to_string(pl.role)) + " in tau_" + std::to_string(pl.tet);
  };
  auto is_end_pair = [&](const PatchPlacement& pl) { return pl.pair == 1 || pl.pair == inst.pair_count(pl.step); };

  // (a)
  for (std::int64_t forbidden : {qn, 2 * qn, inst.pn()}) {
    for (const auto& pl : sched.placements) {
      ++rep.assertions['a'];
      if (pl.tet == forbidden) fail('a', where(pl) + " is a forbidden tetrahedron");
    }
  }
  // (b)
  for (const auto& pl : sched.placements) {
    if (pl.step < 2 || !is_end_pair(pl)) continue;
    ++rep.assertions['b'];
    if (pl.region != Region::Last) fail('b', where(pl) + " lies in the " + std::string(to_string(pl.region)) + " region");
  }
  // (c)
  for (int k = 1; k <= n - 1; ++k) {
    std::set<std::int64_t> used;
    for (const auto& pl : sched.placements) {
      if (pl.step != k) continue;
      ++rep.assertions['c'];
      if (!used.insert(pl.tet).second) fail('c', where(pl) + " reuses a tetrahedron of the same step");
    }
  }
  // (d)
  std::set<std::int64_t> earlier;
  for (int k = 1; k <= n - 1; ++k) {
    if (k >= 2) {
      for (const auto& pl : sched.placements) {
        if (pl.step != k) continue;
        ++rep.assertions['d'];
        const bool touched = earlier.count(pl.tet) > 0;
        if (is_end_pair(pl) && touched) fail('d', where(pl) + " was already used by an earlier step");
        if (!is_end_pair(pl) && !touched) fail('d', where(pl) + " was not used by an earlier step");
      }
    }
    for (const auto& pl : sched.placements) {
      if (pl.step == k) earlier.insert(pl.tet);
    }
  }
  // (e)
  if (n >= 3) {
    const CompressionSchedule prev = compression_schedule(n - 1);
    using Key = std::tuple<PatchRole, std::int64_t, PatchKind>;
    for (int k = 2; k <= n - 1; ++k) {
      for (std::int64_t i = 1; i <= inst.disk_count(k); ++i) {
        std::vector<Key> mine;
        std::vector<Key> theirs;
        for (const auto& pl : sched.placements) {
          if (pl.step == k && pl.disk == i && pl.region == Region::Last) mine.emplace_back(pl.role, pl.tet - 2 * qn, pl.kind);
        }
        for (const auto& pl : prev.placements) {
          if (pl.step == k - 1 && pl.disk == i) theirs.emplace_back(pl.role, pl.tet, pl.kind);
        }
        ++rep.assertions['e'];
        if (mine != theirs) {
          fail('e', "step " + std::to_string(k) + " disk " + std::to_string(i) + ": " + std::to_string(mine.size()) +
                        " shifted last-region patches vs " + std::to_string(theirs.size()) +
                        " patches of step " + std::to_string(k - 1) + " for n = " + std::to_string(n - 1) +
                        " do not agree");
        }
      }
    }
  }
  // (f)
  for (int k = 1; k <= n - 1; ++k) {
    for (std::int64_t j = 1; j <= inst.pair_count(k); ++j) {
      std::set<Region> regions;
      for (const auto& pl : sched.placements) {
        if (pl.step == k && pl.pair == j) regions.insert(pl.region);
      }
      ++rep.assertions['f'];
      if (regions.size() > 1) {
        fail('f', "step " + std::to_string(k) + " pair " + std::to_string(j) + " spreads over " +
                      std::to_string(regions.size()) + " regions");
      }
    }
  }
  return rep;
}

}  // namespace lensurf
