#pragma once

#include <memory>
#include <string>

#include "json.hpp"

#include "ccenum/bridge.hpp"
#include "ccenum/search.hpp"

namespace ccenum {

/// Report files are self-contained JSON: schema + tool version, the
/// configuration needed to rebuild the problem, and the enumeration
/// payload with every interval endpoint hex-encoded (binary64 exact)
/// alongside a decimal rendering.

inline constexpr const char* kReportSchema = "ccenum-report-1";
inline constexpr const char* kToolVersion = "1.0.0";

nlohmann::json interval_to_json(const Interval& x);
Interval interval_from_json(const nlohmann::json& j);
nlohmann::json box_to_json(const IntervalVector& b);
IntervalVector box_from_json(const nlohmann::json& j);

nlohmann::json report_to_json(const EnumerationReport& rep,
                              const nlohmann::json& config);
EnumerationReport report_from_json(const nlohmann::json& j);

nlohmann::json pairing_to_json(const PairingReport& rep,
                               const nlohmann::json& config);

/// temp file + rename in the destination directory
void write_json_atomic(const std::string& path, const nlohmann::json& j);
nlohmann::json load_json(const std::string& path);

/// Rebuilds the problem recorded under config.problem; recognizes
/// families "aniso" (k, mu, a, b) and "nbody" (masses, gauge).
std::unique_ptr<System> system_from_config(const nlohmann::json& config);

/// Re-runs the Krawczyk test on every certificate box of a report file
/// from its hex-exact endpoints; true iff all re-certify UniqueZero
/// (and pass the problem's certificate acceptance check).
bool verify_report(const std::string& path, std::string* diagnostic = nullptr);

/// Side-by-side comparison table, one row per matched pair.
std::string pairing_csv(const PairingReport& rep,
                        const EnumerationReport& limit);

}  // namespace ccenum
