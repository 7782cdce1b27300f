#pragma once

#include <gmpxx.h>

#include <string>

#include "json.hpp"
#include "modgraph/convergence.hpp"

namespace modgraph {

inline constexpr const char* kReportSchema = "1";

/// "p/q", or "p" for integers.
std::string rational_string(const mpq_class& q);
/// Decimal rendering rounded half away from zero to 6 places.
std::string rational_decimal(const mpq_class& q);

/// Report with a fixed key order; `source` names the input.
nlohmann::ordered_json report_to_json(const ConvergenceReport& r, const std::string& source);

std::string report_csv_header();
std::string report_csv_row(const ConvergenceReport& r, const std::string& source);

/// (R, F, stderr) rows of every probe run, with a header line.
std::string probe_csv(const ConvergenceReport& r, const std::string& source);

nlohmann::ordered_json search_hit_json(const SearchHit& hit);
nlohmann::ordered_json growth_json(const GrowthVerdict& v, double s);

}  // namespace modgraph
