#include "lensurf/cli.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

#include <CLI11.hpp>

#include "lensurf/construction.hpp"
#include "lensurf/errors.hpp"
#include "lensurf/fundamentality.hpp"
#include "lensurf/lens_arithmetic.hpp"
#include "lensurf/serialization.hpp"

namespace lensurf::cli {

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Outcome {
  std::string text;
  bool passed = true;
  std::vector<std::string> failures;
};

std::string dump(const Json& doc) { return doc.dump(2) + "\n"; }

LensParams require_pq(const RunConfig& c) {
  if (!c.p) throw UsageError("--p is required for " + c.command);
  if (!c.q) throw UsageError("--q is required for " + c.command);
  return LensParams::make(*c.p, *c.q);
}

int require_n(const RunConfig& c, int minimum) {
  if (!c.n) throw UsageError("--n is required for " + c.command);
  if (*c.n < minimum) throw UsageError("--n must be at least " + std::to_string(minimum) + " for " + c.command);
  lens_instance(*c.n);
  return *c.n;
}

void reject_format(const RunConfig& c, Format f) {
  if (c.format == f) {
    throw UsageError("--format " + std::string(f == Format::Csv ? "csv" : "pretty") + " is not supported by " + c.command);
  }
}

Json read_input(const RunConfig& c) {
  if (!c.input) throw UsageError("--input is required for " + c.command);
  try {
    if (*c.input == "-") return Json::parse(std::cin);
    std::ifstream in(*c.input);
    if (!in) throw UsageError("--input: cannot open " + *c.input);
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw Error(ErrorKind::Parse, std::string("input is not valid JSON: ") + e.what());
  }
}

void validate_paths(const RunConfig& c) {
  namespace fs = std::filesystem;
  if (c.input && *c.input != "-") {
    if (!fs::exists(*c.input)) throw UsageError("--input: no such file " + *c.input);
    if (fs::is_directory(*c.input)) throw UsageError("--input: " + *c.input + " is a directory");
  }
  if (c.output) {
    fs::path out(*c.output);
    if (fs::is_directory(out)) throw UsageError("--output: " + *c.output + " is a directory");
    fs::path parent = out.parent_path();
    if (!parent.empty() && !fs::is_directory(parent)) {
      throw UsageError("--output: directory " + parent.string() + " does not exist");
    }
  }
}

std::string yes_no(const std::optional<bool>& b) { return b ? (*b ? "yes" : "no") : "n/a"; }

void collect_failures(const SurfaceReport& r, Outcome& o, const std::string& prefix) {
  for (const Check& ch : r.checks) {
    if (!ch.passed) o.failures.push_back(prefix + ch.name + ": " + ch.detail);
  }
  o.passed = o.passed && r.passed();
}

std::string pretty_report(const SurfaceReport& r) {
  std::ostringstream os;
  if (r.n > 0) os << "h_" << r.n - 1 << " in ";
  os << "L(" << r.p << ", " << r.q << ")\n";
  os << "  euler characteristic  " << r.euler << "\n";
  os << "  weight E_v / E_h      " << r.weights.at(EdgeName::vertical()) << " / " << r.weights.at(EdgeName::horizontal())
     << "\n";
  os << "  connected             " << (r.connectivity_skipped ? "skipped" : yes_no(r.connected)) << "\n";
  os << "  orientable            " << yes_no(r.orientable) << " (parity), " << yes_no(r.orientable_propagation)
     << " (propagation)\n";
  os << "  fundamental criterion " << (r.fundamental_criterion ? "yes" : "no") << "\n";
  for (const auto& [m, x] : r.sheets) os << "  x_" << m << ",1 = " << x << "\n";
  for (const Check& ch : r.checks) os << "  [" << (ch.passed ? "ok" : "FAIL") << "] " << ch.name << ": " << ch.detail << "\n";
  return os.str();
}

Json theorem_summary(const SurfaceReport& r) {
  Json doc = to_json(r);
  for (const char* key : {"qvector", "haken", "weights", "q1_sheets"}) doc.erase(key);
  doc["weight_E_v"] = r.weights.at(EdgeName::vertical());
  doc["weight_E_h"] = r.weights.at(EdgeName::horizontal());
  doc["expected_euler"] = 2 - r.n;
  return doc;
}

Outcome cmd_triangulate(const RunConfig& c) {
  const Triangulation tri = build_triangulation(require_pq(c));
  Outcome o;
  if (c.format == Format::Json) {
    o.text = dump(to_json(tri));
  } else if (c.format == Format::Csv) {
    std::ostringstream os;
    os << "edge,degree\n";
    for (const EdgeClass& e : tri.edge_classes()) os << e.name.to_string() << ',' << e.degree() << '\n';
    o.text = os.str();
  } else {
    std::ostringstream os;
    os << "T(" << tri.params().p() << ", " << tri.params().q() << "): " << tri.size() << " tetrahedra, "
       << tri.vertex_classes().size() << " vertex classes, " << tri.edge_classes().size() << " edge classes, "
       << tri.glued_face_count() << " faces, V - E + F - T = " << tri.euler_characteristic() << "\n";
    for (const EdgeClass& e : tri.edge_classes()) os << "  " << e.name.to_string() << "  degree " << e.degree() << "\n";
    o.text = os.str();
  }
  return o;
}

Outcome cmd_sequence(const RunConfig& c) {
  if (!c.n) throw UsageError("--n is required for sequence");
  const KappaSequence seq = lens_sequence(BigInt(c.kappa), *c.n);
  Outcome o;
  if (c.format == Format::Json) {
    o.text = dump(to_json(seq));
  } else if (c.format == Format::Csv) {
    o.text = to_csv(seq);
  } else {
    std::ostringstream os;
    for (std::size_t k = 0; k < seq.terms.size(); ++k) os << "k=" << k << "  (" << seq.p(k) << ", " << seq.q(k) << ")\n";
    o.text = os.str();
  }
  return o;
}

Outcome cmd_formulae(const RunConfig& c) {
  reject_format(c, Format::Csv);
  if (!c.n) throw UsageError("--n is required for formulae");
  const FormulaReport rep = check_formulae(BigInt(c.kappa), *c.n);
  Outcome o;
  o.passed = rep.passed();
  for (const FormulaCheck& fc : rep.checks) {
    for (const FormulaWitness& w : fc.witnesses) {
      if (!w.holds) {
        o.failures.push_back("(" + std::to_string(fc.id) + ") " + w.instance + ": " + w.lhs.str() + " != " + w.rhs.str());
      }
    }
  }
  if (c.format == Format::Json) {
    o.text = dump(to_json(rep));
  } else {
    std::ostringstream os;
    for (const FormulaCheck& fc : rep.checks) {
      os << "(" << fc.id << ") " << fc.statement << "  " << (fc.passed() ? "ok" : "FAIL") << " (" << fc.witnesses.size()
         << " instances)\n";
    }
    o.text = os.str();
  }
  return o;
}

Outcome cmd_crosscap(const RunConfig& c) {
  reject_format(c, Format::Csv);
  const LensParams params = require_pq(c);
  const CrosscapResult res = bredon_wood(BigInt(params.p()), BigInt(params.q()));
  Outcome o;
  if (c.format == Format::Json) {
    o.text = dump(to_json(res));
  } else {
    std::ostringstream os;
    os << "L(" << params.p() << ", " << params.q() << "): continued fraction " << to_json(res.cf).dump() << ", b "
       << to_json(res).at("b").dump() << ", crosscap number " << res.crosscap << "\n";
    o.text = os.str();
  }
  return o;
}

Outcome cmd_basis(const RunConfig& c) {
  reject_format(c, Format::Csv);
  const LensParams params = require_pq(c);
  const QBasis basis = q_basis(params);
  Outcome o;
  if (c.format == Format::Json) {
    o.text = dump(to_json(params, basis));
  } else {
    std::ostringstream os;
    for (std::size_t i = 0; i < basis.s.size(); ++i) os << "s_" << i + 1 << " = " << format_blocks(basis.s[i]) << "\n";
    for (std::size_t i = 0; i < basis.t.size(); ++i) os << "t_" << i + 1 << " = " << format_blocks(basis.t[i]) << "\n";
    o.text = os.str();
  }
  return o;
}

Outcome cmd_h0(const RunConfig& c) {
  LensParams params = c.n ? lens_instance(require_n(c, 2)).params() : require_pq(c);
  const QVector h = h0(params);
  Outcome o;
  if (c.format == Format::Json) {
    o.text = dump(to_json(params, h));
  } else if (c.format == Format::Csv) {
    o.text = to_csv(h);
  } else {
    o.text = format_blocks(h) + "\n";
  }
  return o;
}

Outcome cmd_construct(const RunConfig& c, int n) {
  reject_format(c, Format::Csv);
  const SurfaceReport r = construct_surface(n);
  Outcome o;
  collect_failures(r, o, "");
  o.text = c.format == Format::Json ? dump(to_json(r)) : pretty_report(r);
  return o;
}

Outcome cmd_schedule(const RunConfig& c) {
  const CompressionSchedule s = compression_schedule(require_n(c, 2));
  Outcome o;
  if (c.format == Format::Json) {
    o.text = dump(to_json(s));
  } else if (c.format == Format::Csv) {
    o.text = to_csv(s);
  } else {
    std::ostringstream os;
    for (const PatchPlacement& pl : s.placements) {
      os << "step " << pl.step << " disk " << pl.disk << " pair " << pl.pair << " " << to_string(pl.role) << ": tau_"
         << pl.tet << " (" << to_string(pl.kind) << ", " << to_string(pl.region) << " region)\n";
    }
    o.text = os.str();
  }
  return o;
}

Outcome cmd_verify_placements(const RunConfig& c, int n) {
  reject_format(c, Format::Csv);
  const PlacementReport rep = verify_placements(n);
  Outcome o;
  o.passed = rep.passed();
  for (const PlacementViolation& v : rep.violations) o.failures.push_back(std::string("(") + v.check + ") " + v.message);
  if (c.format == Format::Json) {
    o.text = dump(to_json(rep));
  } else {
    std::ostringstream os;
    for (const auto& [check, count] : rep.assertions) os << "(" << check << ") " << count << " assertions\n";
    os << rep.violations.size() << " violations\n";
    o.text = os.str();
  }
  return o;
}

Outcome cmd_analyze(const RunConfig& c) {
  reject_format(c, Format::Csv);
  const Json doc = read_input(c);
  std::optional<LensParams> params;
  HakenVector v;
  if (doc.is_object() && doc.contains("blocks")) {
    QInput in = parse_qvector(doc);
    params = in.params;
    v = reconstruct_tdisks(build_triangulation(*params), in.vector);
  } else {
    HakenInput in = parse_haken(doc);
    params = in.params;
    v = in.vector;
  }
  const SurfaceReport r = analyze_surface(build_triangulation(*params), v);
  Outcome o;
  o.text = c.format == Format::Json ? dump(to_json(r)) : pretty_report(r);
  return o;
}

Outcome cmd_fundamental_check(const RunConfig& c) {
  reject_format(c, Format::Csv);
  const Json doc = read_input(c);
  Outcome o;
  Json out;
  MinimalityStatus status;
  if (c.coords == "haken") {
    HakenInput in = parse_haken(doc);
    const Triangulation tri = build_triangulation(in.params);
    if (!is_normal(tri, in.vector)) throw Error(ErrorKind::NotNormal, "input is not a normal surface");
    auto verdict = minimality_oracle(tri, in.vector, c.budget);
    status = verdict.status;
    out = to_json(in.params, verdict);
    out["criterion"] = haken_fund_criterion(tri, in.vector);
    if (verdict.witness) out["witness_verified"] = verify_haken_witness(tri, in.vector, *verdict.witness);
  } else if (c.coords == "q") {
    QInput in = parse_qvector(doc);
    auto verdict = q_minimality_oracle(in.params, in.vector, c.budget);
    status = verdict.status;
    out = to_json(in.params, verdict);
    if (verdict.witness) out["witness_verified"] = verify_q_witness(in.params, in.vector, *verdict.witness);
  } else {
    throw UsageError("--coords must be haken or q");
  }
  out["budget"] = c.budget;
  o.passed = status == MinimalityStatus::Fundamental;
  if (!o.passed) o.failures.push_back(std::string("verdict: ") + std::string(to_string(status)));
  if (c.format == Format::Json) {
    o.text = dump(out);
  } else {
    o.text = std::string(to_string(status)) + " after " + std::to_string(out.at("nodes_explored").get<std::uint64_t>()) +
             " nodes\n";
  }
  return o;
}

Outcome cmd_verify_theorem(const RunConfig& c) {
  reject_format(c, Format::Csv);
  std::pair<int, int> range{2, c.max_n};
  if (c.n && c.n_range) throw UsageError("give either --n or --n-range, not both");
  if (c.n) range = {*c.n, *c.n};
  if (c.n_range) range = *c.n_range;
  if (range.first < 2) throw UsageError("verify-theorem needs n >= 2");
  if (range.second > c.max_n) {
    throw UsageError("verify-theorem is capped at n = " + std::to_string(c.max_n) + "; raise it with --max-n");
  }
  lens_instance(range.second);

  const int count = range.second - range.first + 1;
  std::vector<std::optional<SurfaceReport>> reports(static_cast<std::size_t>(count));
  std::vector<std::string> errors(static_cast<std::size_t>(count));
  std::atomic<int> next{0};
  auto worker = [&] {
    for (int idx = next++; idx < count; idx = next++) {
      try {
        reports[static_cast<std::size_t>(idx)] = construct_surface(range.first + idx);
      } catch (const std::exception& e) {
        errors[static_cast<std::size_t>(idx)] = e.what();
      }
    }
  };
  const unsigned workers = std::min<unsigned>(worker_limit(), static_cast<unsigned>(count));
  std::vector<std::thread> pool;
  for (unsigned w = 1; w < workers; ++w) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();

  Outcome o;
  Json instances = Json::array();
  std::ostringstream pretty;
  for (int idx = 0; idx < count; ++idx) {
    const int n = range.first + idx;
    const auto& r = reports[static_cast<std::size_t>(idx)];
    if (!r) {
      o.passed = false;
      o.failures.push_back("n=" + std::to_string(n) + ": " + errors[static_cast<std::size_t>(idx)]);
      instances.push_back({{"n", n}, {"error", errors[static_cast<std::size_t>(idx)]}, {"passed", false}});
      pretty << "n=" << n << ": error " << errors[static_cast<std::size_t>(idx)] << "\n";
      continue;
    }
    collect_failures(*r, o, "n=" + std::to_string(n) + " ");
    instances.push_back(theorem_summary(*r));
    pretty << "n=" << n << " " << pretty_report(*r);
  }
  o.text = c.format == Format::Json
               ? dump({{"range", {range.first, range.second}}, {"instances", std::move(instances)}, {"passed", o.passed}})
               : pretty.str();
  return o;
}

Outcome dispatch(const RunConfig& c) {
  const std::string& cmd = c.command;
  if (cmd == "triangulate") return cmd_triangulate(c);
  if (cmd == "sequence") return cmd_sequence(c);
  if (cmd == "formulae") return cmd_formulae(c);
  if (cmd == "crosscap") return cmd_crosscap(c);
  if (cmd == "basis") return cmd_basis(c);
  if (cmd == "h0") return cmd_h0(c);
  if (cmd == "schedule") return cmd_schedule(c);
  if (cmd == "analyze") return cmd_analyze(c);
  if (cmd == "fundamental-check") return cmd_fundamental_check(c);
  if (cmd == "verify-theorem") return cmd_verify_theorem(c);
  if (cmd == "construct" || cmd == "verify-placements") {
    const int n = require_n(c, 2);
    // Parameters are valid from here on; library errors now mean the
    // construction itself went wrong.
    try {
      return cmd == "construct" ? cmd_construct(c, n) : cmd_verify_placements(c, n);
    } catch (const Error& e) {
      Outcome o;
      o.passed = false;
      o.failures.push_back(e.what());
      return o;
    }
  }
  throw UsageError("unknown command \"" + cmd + "\"");
}

}  // namespace

std::optional<std::pair<int, int>> parse_range(const std::string& text) {
  const auto dots = text.find("..");
  if (dots == std::string::npos) return std::nullopt;
  try {
    std::size_t used_a = 0;
    std::size_t used_b = 0;
    const std::string a = text.substr(0, dots);
    const std::string b = text.substr(dots + 2);
    const int lo = std::stoi(a, &used_a);
    const int hi = std::stoi(b, &used_b);
    if (used_a != a.size() || used_b != b.size() || lo < 1 || lo > hi) return std::nullopt;
    return std::pair{lo, hi};
  } catch (const std::exception&) {
    return std::nullopt;
  }
}

unsigned worker_limit() {
  if (const char* env = std::getenv("LENSURF_THREADS")) {
    try {
      const int v = std::stoi(env);
      if (v >= 1) return static_cast<unsigned>(v);
    } catch (const std::exception&) {
    }
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  Outcome o;
  try {
    validate_paths(config);
    o = dispatch(config);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  if (config.output) {
    std::ofstream file(*config.output, std::ios::binary);
    if (!file) {
      err << "usage error: --output: cannot write " << *config.output << "\n";
      return kExitUsage;
    }
    file << o.text;
  } else {
    out << o.text;
  }
  for (const std::string& f : o.failures) err << "FAILED " << f << "\n";
  return o.passed ? kExitOk : kExitVerificationFailed;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Normal surfaces in lens spaces: triangulations, coordinates and the h_k construction", "lensurf"};
  app.require_subcommand(1, 1);

  RunConfig c;
  std::int64_t p = 0;
  std::int64_t q = 0;
  int n = 0;
  std::string range;
  std::string input;
  std::string output;
  std::string format = "json";

  struct Flags {
    bool pq = false;
    bool kappa = false;
    bool n = false;
    bool range = false;
    bool input = false;
    bool budget = false;
    bool coords = false;
  };
  std::vector<std::pair<CLI::App*, std::vector<CLI::Option*>>> registered;

  auto sub = [&](const std::string& name, const std::string& help, Flags f) {
    CLI::App* s = app.add_subcommand(name, help);
    std::vector<CLI::Option*> opts;
    if (f.pq) {
      opts.push_back(s->add_option("--p", p, "order of the lens space"));
      opts.push_back(s->add_option("--q", q, "twist, coprime to p"));
    }
    if (f.kappa) s->add_option("--kappa", c.kappa, "sequence parameter (default 2)");
    if (f.n) opts.push_back(s->add_option("--n", n, "index into the kappa = 2 sequence"));
    if (f.range) {
      opts.push_back(s->add_option("--n-range", range, "inclusive range a..b"));
      s->add_option("--max-n", c.max_n, "largest n accepted (default 8)");
    }
    if (f.input) opts.push_back(s->add_option("--input", input, "vector JSON file, or - for stdin"));
    if (f.budget) s->add_option("--budget", c.budget, "search node budget (default 1e8)");
    if (f.coords) {
      s->add_option("--coords", c.coords, "haken or q (default haken)")->check(CLI::IsMember({"haken", "q"}));
    }
    opts.push_back(s->add_option("--output", output, "write to this file instead of stdout"));
    s->add_option("--format", format, "json (default), csv or pretty")->check(CLI::IsMember({"json", "csv", "pretty"}));
    registered.emplace_back(s, std::move(opts));
  };

  sub("triangulate", "T(p, q) with gluings, edge and vertex classes", {.pq = true});
  sub("sequence", "(p_k, q_k) for k = 0..n", {.kappa = true, .n = true});
  sub("formulae", "check the six sequence identities at n", {.kappa = true, .n = true});
  sub("crosscap", "continued fraction and crosscap number of L(p, q), p even", {.pq = true});
  sub("basis", "the solution basis s_i, t_i of the quad matching equations", {.pq = true});
  sub("h0", "the starting surface h_0 for --p/--q or --n", {.pq = true, .n = true});
  sub("construct", "build h_{n-1} in L(p_n, q_n) and verify it", {.n = true});
  sub("schedule", "disk patch placements of every compression step", {.n = true});
  sub("verify-placements", "check the placement properties of the schedule", {.n = true});
  sub("analyze", "full report for a Haken or Q vector read from --input", {.input = true});
  sub("fundamental-check",
      "exhaustive minimality search; practical for p <= 8 (about 56 Haken variables)",
      {.input = true, .budget = true, .coords = true});
  sub("verify-theorem", "construct and verify h_{n-1} for --n or --n-range (default 2..8)", {.n = true, .range = true});

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    app.exit(e, out, err);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  }

  for (auto& [s, opts] : registered) {
    if (!s->parsed()) continue;
    c.command = s->get_name();
    for (CLI::Option* opt : opts) {
      if (opt->count() == 0) continue;
      const std::string& name = opt->get_name();
      if (name == "--p") c.p = p;
      if (name == "--q") c.q = q;
      if (name == "--n") c.n = n;
      if (name == "--input") c.input = input;
      if (name == "--output") c.output = output;
      if (name == "--n-range") {
        c.n_range = parse_range(range);
        if (!c.n_range) {
          err << "usage error: --n-range expects a..b with 1 <= a <= b, got \"" << range << "\"\n";
          return kExitUsage;
        }
      }
    }
  }
  c.format = format == "csv" ? Format::Csv : format == "pretty" ? Format::Pretty : Format::Json;
  return run(c, out, err);
}

}  // namespace lensurf::cli
