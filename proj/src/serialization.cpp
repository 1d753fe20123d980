#include "lensurf/serialization.hpp"

#include <limits>
#include <sstream>

#include "lensurf/errors.hpp"

namespace lensurf {

namespace {

Json slot_list(const std::array<int, 4>& a) { return Json::array({a[0], a[1], a[2], a[3]}); }

Json block_list(const QVector& qv) {
  Json blocks = Json::array();
  for (int b = 1; b <= qv.blocks(); ++b) blocks.push_back({qv.at(b, 1), qv.at(b, 2), qv.at(b, 3)});
  return blocks;
}

Json rational_json(const Rational& r) {
  if (denominator(r) == 1) return bigint_json(numerator(r));
  return r.str();
}

std::int64_t require_int(const Json& doc, const char* key) {
  if (!doc.contains(key)) throw Error(ErrorKind::Parse, std::string("missing field \"") + key + "\"");
  const Json& v = doc.at(key);
  if (!v.is_number_integer()) throw Error(ErrorKind::Parse, std::string("field \"") + key + "\" must be an integer");
  return v.get<std::int64_t>();
}

std::vector<std::int64_t> int_array(const Json& v, const std::string& what) {
  if (!v.is_array()) throw Error(ErrorKind::Parse, what + " must be an array");
  std::vector<std::int64_t> out;
  out.reserve(v.size());
  for (const Json& x : v) {
    if (!x.is_number_integer()) throw Error(ErrorKind::Parse, what + " must contain integers only");
    out.push_back(x.get<std::int64_t>());
  }
  return out;
}

Json optional_json(const std::optional<bool>& b) { return b ? Json(*b) : Json(nullptr); }

}  // namespace

Json bigint_json(const BigInt& x) {
  if (x >= std::numeric_limits<std::int64_t>::min() && x <= std::numeric_limits<std::int64_t>::max()) {
    return static_cast<std::int64_t>(x);
  }
  return x.str();
}

Json to_json(const Triangulation& tri) {
  Json doc;
  doc["p"] = tri.params().p();
  doc["q"] = tri.params().q();
  Json tets = Json::array();
  for (int i = 1; i <= tri.size(); ++i) {
    const Tetrahedron& t = tri.tetrahedron(i);
    tets.push_back({{"index", t.index},
                    {"vertices", {"v+", "v-", "v_" + std::to_string(t.low), "v_" + std::to_string(t.high)}}});
  }
  doc["tetrahedra"] = std::move(tets);
  Json gluings = Json::array();
  for (const Gluing& g : tri.gluings()) {
    if (!(g.face < g.partner)) continue;
    gluings.push_back({{"tet", g.face.tet},
                       {"face_opposite", g.face.opposite},
                       {"partner_tet", g.partner.tet},
                       {"partner_face_opposite", g.partner.opposite},
                       {"slot_map", slot_list(g.slot_map)}});
  }
  doc["gluings"] = std::move(gluings);
  Json edges = Json::array();
  for (const EdgeClass& e : tri.edge_classes()) {
    Json inc = Json::array();
    for (const EdgeSlot& s : e.incidences) inc.push_back({s.tet, s.a, s.b});
    edges.push_back({{"name", e.name.to_string()}, {"degree", e.degree()}, {"incidences", std::move(inc)}});
  }
  doc["edges"] = std::move(edges);
  Json vertices = Json::array();
  for (std::size_t c = 0; c < tri.vertex_classes().size(); ++c) {
    Json members = Json::array();
    for (const VertexSlot& s : tri.vertex_classes()[c].members) members.push_back({s.tet, s.slot});
    vertices.push_back({{"index", c}, {"members", std::move(members)}});
  }
  doc["vertices"] = std::move(vertices);
  doc["euler_characteristic"] = tri.euler_characteristic();
  return doc;
}

Json to_json(const LensParams& params, const HakenVector& v) {
  return {{"p", params.p()},
          {"q", params.q()},
          {"layout", kHakenLayout},
          {"counts", std::vector<std::int64_t>(v.counts().begin(), v.counts().end())}};
}

Json to_json(const LensParams& params, const QVector& qv) {
  return {{"p", params.p()}, {"q", params.q()}, {"blocks", block_list(qv)}};
}

Json to_json(const LensParams& params, const QBasis& basis) {
  Json s = Json::array();
  Json t = Json::array();
  for (const QVector& v : basis.s) s.push_back(block_list(v));
  for (const QVector& v : basis.t) t.push_back(block_list(v));
  return {{"p", params.p()}, {"q", params.q()}, {"s", std::move(s)}, {"t", std::move(t)}};
}

Json to_json(const KappaSequence& seq) {
  Json terms = Json::array();
  for (const auto& [p, q] : seq.terms) terms.push_back({bigint_json(p), bigint_json(q)});
  return {{"kappa", bigint_json(seq.kappa)}, {"terms", std::move(terms)}};
}

Json to_json(const FormulaReport& report) {
  Json checks = Json::array();
  for (const FormulaCheck& c : report.checks) {
    Json witnesses = Json::array();
    for (const FormulaWitness& w : c.witnesses) {
      witnesses.push_back(
          {{"instance", w.instance}, {"lhs", bigint_json(w.lhs)}, {"rhs", bigint_json(w.rhs)}, {"holds", w.holds}});
    }
    checks.push_back(
        {{"id", c.id}, {"statement", c.statement}, {"passed", c.passed()}, {"witnesses", std::move(witnesses)}});
  }
  return {{"kappa", bigint_json(report.kappa)}, {"n", report.n}, {"passed", report.passed()}, {"checks", std::move(checks)}};
}

Json to_json(const ContinuedFraction& cf) {
  Json terms = Json::array();
  for (const BigInt& a : cf.terms) terms.push_back(bigint_json(a));
  return terms;
}

Json to_json(const CrosscapResult& result) {
  Json b = Json::array();
  for (const BigInt& x : result.b) b.push_back(bigint_json(x));
  return {{"cf", to_json(result.cf)}, {"b", std::move(b)}, {"crosscap", bigint_json(result.crosscap)}};
}

Json to_json(const CompressionSchedule& schedule) {
  Json placements = Json::array();
  for (const PatchPlacement& pl : schedule.placements) {
    placements.push_back({{"step", pl.step},
                          {"disk", pl.disk},
                          {"pair", pl.pair},
                          {"role", to_string(pl.role)},
                          {"tet", pl.tet},
                          {"kind", to_string(pl.kind)},
                          {"region", to_string(pl.region)}});
  }
  return {{"n", schedule.n}, {"p", schedule.p}, {"q", schedule.q}, {"placements", std::move(placements)}};
}

Json to_json(const SurfaceReport& report) {
  const LensParams params = LensParams::make(report.p, report.q);
  Json doc;
  if (report.n > 0) doc["n"] = report.n;
  doc["p"] = report.p;
  doc["q"] = report.q;
  doc["qvector"] = block_list(report.qvector);
  doc["haken"] = to_json(params, report.haken);
  doc["euler"] = report.euler;
  Json weights = Json::object();
  for (const auto& [name, w] : report.weights) weights[name.to_string()] = w;
  doc["weights"] = std::move(weights);
  doc["matching"] = report.matching;
  doc["square"] = report.square;
  doc["connectivity_skipped"] = report.connectivity_skipped;
  doc["components"] = report.components ? Json(*report.components) : Json(nullptr);
  doc["connected"] = report.connectivity_skipped ? Json("skipped") : optional_json(report.connected);
  doc["orientable"] = optional_json(report.orientable);
  doc["orientable_propagation"] = optional_json(report.orientable_propagation);
  doc["fundamental_criterion"] = report.fundamental_criterion;
  doc["q1_sheets"] = report.q1_sheets;
  if (report.n > 0) {
    doc["euler_history"] = report.euler_history;
    Json sheets = Json::array();
    for (const auto& [m, x] : report.sheets) sheets.push_back({{"m", m}, {"x_m1", x}});
    doc["sheets"] = std::move(sheets);
  }
  Json checks = Json::array();
  for (const Check& c : report.checks) checks.push_back({{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
  doc["checks"] = std::move(checks);
  doc["passed"] = report.passed();
  return doc;
}

Json to_json(const PlacementReport& report) {
  Json assertions = Json::object();
  for (const auto& [check, count] : report.assertions) assertions[std::string(1, check)] = count;
  Json violations = Json::array();
  for (const PlacementViolation& v : report.violations) {
    violations.push_back({{"check", std::string(1, v.check)}, {"message", v.message}});
  }
  return {{"n", report.n},
          {"assertions", std::move(assertions)},
          {"violations", std::move(violations)},
          {"passed", report.passed()}};
}

Json to_json(const LensParams& params, const MinimalityVerdict<HakenVector>& verdict) {
  Json doc = {{"coords", "haken"},
              {"status", to_string(verdict.status)},
              {"nodes_explored", verdict.nodes_explored},
              {"witness", nullptr}};
  if (verdict.witness) doc["witness"] = to_json(params, *verdict.witness);
  return doc;
}

Json to_json(const LensParams& params, const MinimalityVerdict<QVector>& verdict) {
  Json doc = {{"coords", "q"},
              {"status", to_string(verdict.status)},
              {"nodes_explored", verdict.nodes_explored},
              {"witness", nullptr}};
  if (verdict.witness) {
    doc["witness"] = to_json(params, *verdict.witness);
    if (auto c = in_solution_space(params, *verdict.witness)) {
      Json a = Json::array();
      Json b = Json::array();
      for (const Rational& x : c->a) a.push_back(rational_json(x));
      for (const Rational& x : c->b) b.push_back(rational_json(x));
      doc["witness_coefficients"] = {{"s", std::move(a)}, {"t", std::move(b)}};
    }
  }
  return doc;
}

std::string to_csv(const HakenVector& v) {
  std::ostringstream os;
  os << "tet,Tv+,Tv-,Tvlow,Tvhigh,Q1,Q2,Q3\n";
  for (int t = 1; t <= v.tets(); ++t) {
    os << t;
    for (int k = 0; k < kDiskTypesPerTet; ++k) os << ',' << v.at(t, static_cast<DiskKind>(k));
    os << '\n';
  }
  return os.str();
}

std::string to_csv(const QVector& qv) {
  std::ostringstream os;
  os << "block,x1,x2,x3\n";
  for (int b = 1; b <= qv.blocks(); ++b) os << b << ',' << qv.at(b, 1) << ',' << qv.at(b, 2) << ',' << qv.at(b, 3) << '\n';
  return os.str();
}

std::string to_csv(const KappaSequence& seq) {
  std::ostringstream os;
  os << "k,p,q\n";
  for (std::size_t k = 0; k < seq.terms.size(); ++k) os << k << ',' << seq.p(k) << ',' << seq.q(k) << '\n';
  return os.str();
}

std::string to_csv(const CompressionSchedule& schedule) {
  std::ostringstream os;
  os << "step,disk,pair,role,tet,kind,region\n";
  for (const PatchPlacement& pl : schedule.placements) {
    os << pl.step << ',' << pl.disk << ',' << pl.pair << ',' << to_string(pl.role) << ',' << pl.tet << ','
       << to_string(pl.kind) << ',' << to_string(pl.region) << '\n';
  }
  return os.str();
}

HakenInput parse_haken(const Json& doc) {
  if (!doc.is_object()) throw Error(ErrorKind::Parse, "Haken vector document must be a JSON object");
  const LensParams params = LensParams::make(require_int(doc, "p"), require_int(doc, "q"));
  if (doc.contains("layout") && doc.at("layout") != kHakenLayout) {
    throw Error(ErrorKind::Parse, std::string("unsupported layout, expected \"") + kHakenLayout + "\"");
  }
  if (!doc.contains("counts")) throw Error(ErrorKind::Parse, "missing field \"counts\"");
  std::vector<std::int64_t> counts = int_array(doc.at("counts"), "\"counts\"");
  if (counts.size() != static_cast<std::size_t>(params.p()) * kDiskTypesPerTet) {
    throw Error(ErrorKind::DimensionMismatch, "\"counts\" has " + std::to_string(counts.size()) + " entries, expected " +
                                                  std::to_string(params.p() * kDiskTypesPerTet));
  }
  return {params, HakenVector(params.p(), std::move(counts))};
}

QInput parse_qvector(const Json& doc) {
  if (!doc.is_object()) throw Error(ErrorKind::Parse, "Q-vector document must be a JSON object");
  const LensParams params = LensParams::make(require_int(doc, "p"), require_int(doc, "q"));
  if (!doc.contains("blocks") || !doc.at("blocks").is_array()) {
    throw Error(ErrorKind::Parse, "missing array field \"blocks\"");
  }
  const Json& blocks = doc.at("blocks");
  if (blocks.size() != static_cast<std::size_t>(params.p())) {
    throw Error(ErrorKind::DimensionMismatch, "\"blocks\" has " + std::to_string(blocks.size()) + " entries, expected " +
                                                  std::to_string(params.p()));
  }
  std::vector<std::int64_t> entries;
  for (const Json& block : blocks) {
    std::vector<std::int64_t> b = int_array(block, "each block");
    if (b.size() != 3) throw Error(ErrorKind::Parse, "each block must have exactly 3 entries");
    entries.insert(entries.end(), b.begin(), b.end());
  }
  return {params, QVector(params.p(), std::move(entries))};
}

}  // namespace lensurf
