#pragma once

// Machine-readable reports. JSON is canonical; CSV is a flat projection
// with RFC-4180 quoting. Exact values are always "num/den" strings.

#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "holocrit/counts.hpp"
#include "holocrit/cp1_sim.hpp"
#include "holocrit/rmt_mc.hpp"
#include "holocrit/selberg.hpp"

namespace holocrit {

using Json = nlohmann::ordered_json;

Json to_json(const CountReport& r);
Json to_json(const LeadingReport& r);
Json to_json(const B0qEstimate& e);
Json to_json(const EnsembleStats& e);
Json selberg_json(const SelbergParams& params, bool exponential, const SelbergValue& v);

std::string csv_field(std::string_view field);
std::string csv_row(const std::vector<std::string>& fields);

std::string to_csv(const CountReport& r);
std::string to_csv(const LeadingReport& r);
std::string to_csv(const B0qEstimate& e);
std::string to_csv(const EnsembleStats& e);
std::string selberg_csv(const SelbergParams& params, bool exponential, const SelbergValue& v);
/// One row per trial: trial, count_q1, count_q2, solver_ok (plus flags).
std::string trials_csv(const EnsembleStats& e);

/// Shortest round-trip decimal form of a double.
std::string format_double(double x);

}  // namespace holocrit
