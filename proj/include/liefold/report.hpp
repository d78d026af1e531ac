#pragma once

// Run configuration, the staged verification pipeline and its JSON report.
//
// Stages run in dependency order: folding, chevalley, tds, branching,
// adjoint, hitchin, transgression, chevrestrict. A stage whose prerequisites
// did not pass is recorded as SKIPPED with the reason.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "liefold/branching.hpp"
#include "liefold/invariants.hpp"

namespace liefold {

class ConfigError : public InvalidInput {
 public:
  using InvalidInput::InvalidInput;
};

struct PairSelection {
  FoldPair pair;
  int n = 0;
};

/// Default family parameter per pair: A3->C2, A4->B2, D4->B3.
int default_n(FoldPair pair);
/// A3->C2, A5->C3, A4->B2, D5->B4, D4->G2, E6->F4.
std::vector<PairSelection> default_pairs();
std::vector<std::string> default_hitchin_types();
/// Every implemented type of rank <= 4, plus A5 and D5.
std::vector<std::string> default_adjoint_types();
/// Odd degrees 2m+1 of the type.
std::vector<int> primitive_degrees(const RootDatum& datum);

/// Flips the sign of [x_a, x_b] and [x_b, x_a] in the realization of `type`.
struct Mutation {
  std::string type;
  int a = 0, b = 0;
};

struct RunConfig {
  std::vector<PairSelection> pairs = default_pairs();
  std::vector<std::string> adjoint_types = default_adjoint_types();
  std::vector<std::string> hitchin_types = default_hitchin_types();
  std::optional<std::vector<int>> degrees;  // unset: all degrees; empty: Hitchin skipped
  EvalPolicy policy{Arithmetic::Modular, std::nullopt, 42};
  Caps caps;
  int dim_cap = LieRealization::kDefaultDimCap;
  int commute_samples = 10;
  std::string output;  // JSON path; empty means stdout
  bool timings = false;
  std::optional<Mutation> mutation;

  nlohmann::json to_json() const;
};

/// Throws ConfigError.
void validate(const RunConfig& config);

Arithmetic parse_mode(const std::string& s);
/// "auto" or a prime.
std::optional<std::uint64_t> parse_prime(const std::string& s);
std::vector<int> parse_int_list(const std::string& s);
Weight parse_weight(const std::string& s);  // "1,0,2" or "[1,0,2]"
Mutation parse_mutation(const std::string& s);  // "A3:4:6"

struct ReportSection {
  std::string stage;
  std::string subject;  // pair or type
  std::vector<CheckRecord> checks;
  nlohmann::json data = nlohmann::json::object();  // stage output beyond verdicts
  bool passed() const { return all_passed(checks); }
};

struct VerificationReport {
  nlohmann::json config;
  std::vector<ReportSection> sections;

  int count(Verdict v) const;
  bool failed() const { return count(Verdict::Fail) > 0; }
  nlohmann::json to_json(bool with_timing = false) const;
};

/// Plain-text rendering of a report JSON.
std::string render_text(const nlohmann::json& report);

// Stage runners, also used by the single-purpose subcommands.
ReportSection folding_section(const PairSelection& sel);
ReportSection chevalley_section(const PairSelection& sel, const RunConfig& config);
ReportSection branching_section(const PairSelection& sel, const RunConfig& config);
ReportSection tds_section(const PairSelection& sel, const RunConfig& config);
ReportSection transgression_section(const PairSelection& sel, const RunConfig& config);
ReportSection chevrestrict_section(const PairSelection& sel, const RunConfig& config);
/// Principal TDS of the type itself: triple, adjoint strings, dims.
ReportSection adjoint_section(const std::string& type, const RunConfig& config);
ReportSection hitchin_section(const std::string& type, const std::vector<int>& degrees, const RunConfig& config);

VerificationReport run_all(const RunConfig& config);

}  // namespace liefold
