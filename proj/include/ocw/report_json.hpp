#ifndef OCW_REPORT_JSON_HPP
#define OCW_REPORT_JSON_HPP

#include <span>
#include <string>
#include <string_view>

#include "json.hpp"
#include "ocw/checks.hpp"
#include "ocw/pcg.hpp"

namespace ocw {

inline constexpr std::string_view kToolVersion = "0.1.0";

// ISO 8601 UTC, e.g. "2026-01-01T00:00:00Z".
std::string utc_timestamp();

nlohmann::ordered_json check_to_json(const CheckReport& r);

/// Stable-schema suite report: {version, generated_at, checks, summary}.
/// Byte-identical across runs with identical inputs, except generated_at.
nlohmann::ordered_json suite_report_json(std::span<const CheckReport> reports,
                                         std::string_view generated_at);

nlohmann::ordered_json series_to_json(const PcgSeries& series, const PcgReport& verification);

}  // namespace ocw

#endif
