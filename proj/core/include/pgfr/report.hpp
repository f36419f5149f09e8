#pragma once

#include <cmath>
#include <optional>
#include <string>

#include <json.hpp>

#include "pgfr/engine.hpp"
#include "pgfr/walker.hpp"

namespace pgfr {

using Json = nlohmann::ordered_json;

inline constexpr const char* kToolName = "pgfr";
inline constexpr const char* kToolVersion = "0.1.0";
inline constexpr int kReportSchemaVersion = 1;

/// Echo of a CLI request; serialized verbatim into every report.
struct AnalysisRequest {
  std::string command;
  std::int64_t n = 0;
  std::vector<std::int64_t> s1;
  bool include_ab_coset = true;
  std::optional<std::pair<std::int64_t, std::int64_t>> pair;
  double epsilon = 1e-2;
  double t_max = 2000.0 * M_PI;
  std::int64_t bound = 3;
  std::optional<std::uint64_t> seed;
  std::string format = "text";
};

Json report_skeleton(const AnalysisRequest& request);

Json to_json(const SpectrumTable& table);
Json to_json(const RelationLattice& lattice);
Json to_json(const TheoremCheck& check);
Json to_json(const RevivalParameters& params);
Json to_json(const PgfrVerdict& verdict);
Json to_json(const OracleResult& oracle);
Json to_json(const FidelitySample& sample);
Json to_json(const SearchReport& search);

/// Canonical structured rendering (stable schema, lossless floats).
std::string serialize_structured(const Json& report);
Json parse_structured(const std::string& text);

/// Human-readable rendering; floats at 12 significant digits.
std::string render_text(const Json& report);

/// 12-significant-digit fixed rendering used by the text format.
std::string format_float(double x);

std::string format_rational(const Rational& q);

}  // namespace pgfr
