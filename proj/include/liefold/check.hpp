#pragma once

#include <string>
#include <vector>

#include "json.hpp"

namespace liefold {

enum class Verdict { Pass, Fail, Skipped };

inline const char* verdict_name(Verdict v) {
  switch (v) {
    case Verdict::Pass: return "PASS";
    case Verdict::Fail: return "FAIL";
    default: return "SKIPPED";
  }
}

/// One verified statement: what was checked, against which quoted claim, and
/// the data that decided it.
struct CheckRecord {
  std::string name;
  std::string anchor;  // short quote of the claim being checked
  nlohmann::json inputs = nlohmann::json::object();
  nlohmann::json witness = nlohmann::json::object();
  Verdict verdict = Verdict::Skipped;
  double seconds = 0.0;  // only serialized when timings are requested

  bool passed() const { return verdict == Verdict::Pass; }
  nlohmann::json to_json(bool with_timing = false) const {
    nlohmann::json j{{"name", name}, {"anchor", anchor}, {"inputs", inputs},
                     {"verdict", verdict_name(verdict)}, {"witness", witness}};
    if (with_timing) j["seconds"] = seconds;
    return j;
  }
};

inline Verdict verdict_of(bool ok) { return ok ? Verdict::Pass : Verdict::Fail; }

inline bool all_passed(const std::vector<CheckRecord>& recs) {
  for (const auto& r : recs)
    if (!r.passed()) return false;
  return true;
}

}  // namespace liefold
