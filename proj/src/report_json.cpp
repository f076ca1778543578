#include "ocw/report_json.hpp"

#include <chrono>
#include <ctime>

#include "ocw/word_parser.hpp"

namespace ocw {

std::string utc_timestamp() {
  const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

nlohmann::ordered_json check_to_json(const CheckReport& r) {
  nlohmann::ordered_json j;
  j["subject"] = r.subject;
  j["group"] = r.group;
  j["word"] = r.word;
  nlohmann::ordered_json q;
  for (const auto& [key, value] : r.quantities) q[key] = value;
  j["quantities"] = std::move(q);
  j["ok"] = r.ok;
  if (r.counterexample) j["counterexample"] = *r.counterexample;
  if (r.skip_reason) j["skip_reason"] = *r.skip_reason;
  return j;
}

nlohmann::ordered_json suite_report_json(std::span<const CheckReport> reports,
                                         std::string_view generated_at) {
  nlohmann::ordered_json j;
  j["version"] = kToolVersion;
  j["generated_at"] = generated_at;
  nlohmann::ordered_json checks = nlohmann::ordered_json::array();
  for (const CheckReport& r : reports) checks.push_back(check_to_json(r));
  j["checks"] = std::move(checks);
  SuiteSummary s = summarize(reports);
  j["summary"] = {{"ok", s.ok}, {"fail", s.fail}, {"skip", s.skip}};
  return j;
}

nlohmann::ordered_json series_to_json(const PcgSeries& series, const PcgReport& verification) {
  nlohmann::ordered_json j;
  j["group"] = series.group->name();
  j["word"] = render_word(series.word);
  j["base_order"] = series.base.order();
  nlohmann::ordered_json steps = nlohmann::ordered_json::array();
  for (const PcgStep& step : series.steps)
    steps.push_back({{"order", step.subgroup.order()}, {"witnesses", step.witnesses.size()}});
  j["steps"] = std::move(steps);
  j["top_order"] = series.top().order();
  j["verified"] = verification.ok;
  if (!verification.ok) {
    nlohmann::ordered_json failures = nlohmann::ordered_json::array();
    for (const PcgFailure& f : verification.failures)
      failures.push_back(
          {{"step", f.step}, {"condition", to_string(f.condition)}, {"detail", f.detail}});
    j["failures"] = std::move(failures);
  }
  return j;
}

}  // namespace ocw
