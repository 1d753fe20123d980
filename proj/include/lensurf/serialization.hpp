#pragma once

#include <string>

#include <json.hpp>

#include "lensurf/construction.hpp"
#include "lensurf/fundamentality.hpp"
#include "lensurf/lens_arithmetic.hpp"
#include "lensurf/lens_triangulation.hpp"
#include "lensurf/normal_coords.hpp"
#include "lensurf/q_theory.hpp"

namespace lensurf {

using Json = nlohmann::json;

inline constexpr const char* kHakenLayout = "per-tet[Tv+,Tv-,Tvlow,Tvhigh,Q1,Q2,Q3]";

/// A JSON number when the value fits in 64 bits, a decimal string otherwise.
Json bigint_json(const BigInt& x);

Json to_json(const Triangulation& tri);
Json to_json(const LensParams& params, const HakenVector& v);
Json to_json(const LensParams& params, const QVector& qv);
Json to_json(const LensParams& params, const QBasis& basis);
Json to_json(const KappaSequence& seq);
Json to_json(const FormulaReport& report);
Json to_json(const ContinuedFraction& cf);
Json to_json(const CrosscapResult& result);
Json to_json(const CompressionSchedule& schedule);
Json to_json(const SurfaceReport& report);
Json to_json(const PlacementReport& report);
Json to_json(const LensParams& params, const MinimalityVerdict<HakenVector>& verdict);
Json to_json(const LensParams& params, const MinimalityVerdict<QVector>& verdict);

std::string to_csv(const HakenVector& v);
std::string to_csv(const QVector& qv);
std::string to_csv(const KappaSequence& seq);
std::string to_csv(const CompressionSchedule& schedule);

struct HakenInput {
  LensParams params;
  HakenVector vector;
};

struct QInput {
  LensParams params;
  QVector vector;
};

/// Parse the documented vector formats. Throws Error(Parse) for malformed
/// documents and the usual parameter errors for bad (p, q).
HakenInput parse_haken(const Json& doc);
QInput parse_qvector(const Json& doc);

}  // namespace lensurf
