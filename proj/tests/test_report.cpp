#include "doctest.h"
#include "liefold/report.hpp"

using namespace liefold;

namespace {

RunConfig small_config(FoldPair p, int n) {
  RunConfig c;
  c.pairs = {{p, n}};
  c.adjoint_types = {"A2"};
  c.hitchin_types = {"A2"};
  return c;
}

const ReportSection* find(const VerificationReport& r, const std::string& stage) {
  for (const auto& s : r.sections)
    if (s.stage == stage) return &s;
  return nullptr;
}

}  // namespace

TEST_CASE("configuration parsing") {
  CHECK(parse_mode("exact") == Arithmetic::Exact);
  CHECK(parse_mode("modular") == Arithmetic::Modular);
  CHECK_THROWS_AS(parse_mode("fast"), ConfigError);
  CHECK_FALSE(parse_prime("auto").has_value());
  CHECK(parse_prime("2147483659").value() == 2147483659ULL);
  CHECK_THROWS_AS(parse_prime("2147483658"), ConfigError);
  CHECK_THROWS_AS(parse_prime("12x"), ConfigError);
  CHECK(parse_int_list("3,11") == std::vector<int>{3, 11});
  CHECK(parse_int_list("[1, 0,2]") == std::vector<int>{1, 0, 2});
  CHECK(parse_int_list("").empty());
  CHECK_THROWS_AS(parse_int_list("3,a"), ConfigError);
  CHECK(parse_weight("0,1,0,0") == Weight({0, 1, 0, 0}));
  auto m = parse_mutation("A3:4:6");
  CHECK(m.type == "A3");
  CHECK(m.a == 4);
  CHECK(m.b == 6);
  CHECK_THROWS_AS(parse_mutation("A3"), ConfigError);
}

TEST_CASE("validate rejects bad configurations") {
  RunConfig c;
  CHECK_NOTHROW(validate(c));
  c.pairs = {{FoldPair::Dn_B, 2}};
  CHECK_THROWS_AS(validate(c), ConfigError);
  c = RunConfig{};
  c.degrees = std::vector<int>{4};
  CHECK_THROWS_AS(validate(c), ConfigError);
  c = RunConfig{};
  c.hitchin_types = {"Q7"};
  CHECK_THROWS_AS(validate(c), ConfigError);
  c = RunConfig{};
  c.mutation = Mutation{"A3", 0, 15};
  CHECK_THROWS_AS(validate(c), ConfigError);
  c.mutation = Mutation{"A3", 2, 2};
  CHECK_THROWS_AS(validate(c), ConfigError);
  c = RunConfig{};
  c.policy.prime = 100;
  CHECK_THROWS_AS(validate(c), ConfigError);
}

TEST_CASE("primitive degrees") {
  CHECK(primitive_degrees(RootDatum::parse("G2")) == std::vector<int>{3, 11});
  CHECK(primitive_degrees(RootDatum::parse("D4")) == std::vector<int>{3, 7, 11});
  CHECK(primitive_degrees(RootDatum::parse("A3")) == std::vector<int>{3, 5, 7});
}

TEST_CASE("run_all on D4 -> G2 passes every stage") {
  auto rep = run_all(small_config(FoldPair::D4_G2, 0));
  CHECK_FALSE(rep.failed());
  CHECK(rep.count(Verdict::Skipped) == 0);
  std::vector<std::string> order;
  for (const auto& s : rep.sections) order.push_back(s.stage);
  CHECK(order == std::vector<std::string>{"folding", "chevalley", "tds", "branching", "adjoint", "hitchin",
                                          "transgression", "chevrestrict"});
  auto j = rep.to_json();
  CHECK(j["schema"] == 1);
  CHECK(j["summary"]["FAIL"] == 0);
  CHECK_FALSE(j["sections"][0]["checks"][0].contains("seconds"));
  CHECK(rep.to_json(true)["sections"][0]["checks"][0].contains("seconds"));
}

TEST_CASE("run_all on A3 -> C2 contains the j = 2 contraction identity") {
  auto rep = run_all(small_config(FoldPair::A2n1_C, 1));
  const auto* b = find(rep, "branching");
  REQUIRE(b);
  bool found = false;
  for (const auto& c : b->checks) found = found || (c.name == "contraction_identity_2" && c.passed());
  CHECK(found);
  CHECK(b->data["preimages"]["W(0,1)"] == "phi[V2] - 1");
}

TEST_CASE("empty degree list skips only the Hitchin stage") {
  auto c = small_config(FoldPair::D4_G2, 0);
  c.degrees = std::vector<int>{};
  auto rep = run_all(c);
  for (const auto& s : rep.sections) {
    CAPTURE(s.stage);
    if (s.stage == "hitchin") {
      REQUIRE(s.checks.size() == 1);
      CHECK(s.checks[0].verdict == Verdict::Skipped);
    } else {
      CHECK(s.passed());
    }
  }
  CHECK_FALSE(rep.failed());
}

TEST_CASE("degree filter keeps matching degrees only") {
  auto c = small_config(FoldPair::D4_G2, 0);
  c.hitchin_types = {"G2", "A2"};
  c.degrees = std::vector<int>{11};
  auto rep = run_all(c);
  int hitchin_checks = 0, skipped_sections = 0;
  for (const auto& s : rep.sections)
    if (s.stage == "hitchin") {
      for (const auto& r : s.checks) hitchin_checks += r.name == "hitchin_nonvanishing";
      skipped_sections += s.checks.size() == 1 && s.checks[0].verdict == Verdict::Skipped;
    }
  CHECK(hitchin_checks == 1);  // G2 at 11; A2 has no degree 11
  CHECK(skipped_sections == 1);
}

TEST_CASE("reports are deterministic") {
  auto c = small_config(FoldPair::A2n1_C, 1);
  c.policy.seed = 42;
  CHECK(run_all(c).to_json().dump() == run_all(c).to_json().dump());
  auto d = c;
  d.policy.seed = 43;
  CHECK(run_all(c).to_json().dump() != run_all(d).to_json().dump());
}

TEST_CASE("a mutated structure constant fails and skips downstream") {
  auto c = small_config(FoldPair::A2n1_C, 1);
  c.hitchin_types = {"A3"};
  c.adjoint_types = {"A3"};
  c.mutation = Mutation{"A3", 4, 6};  // [f_alpha1, f_alpha2], indices 0-based
  auto rep = run_all(c);
  CHECK(rep.failed());
  CHECK_FALSE(find(rep, "chevalley")->passed());
  CHECK(find(rep, "tds")->checks[0].verdict == Verdict::Skipped);
  CHECK(find(rep, "transgression")->checks[0].verdict == Verdict::Skipped);
  CHECK(find(rep, "folding")->passed());
  CHECK(find(rep, "branching")->checks.back().verdict == Verdict::Skipped);
  CHECK_FALSE(find(rep, "hitchin")->passed());
}

TEST_CASE("text rendering is derived from the JSON") {
  auto rep = run_all(small_config(FoldPair::D4_G2, 0));
  auto text = render_text(rep.to_json());
  CHECK(text.find("PASS  folding / D4_G2") != std::string::npos);
  CHECK(text.find("summary: ") != std::string::npos);
  CHECK(text.find("0 failed") != std::string::npos);
}

TEST_CASE("hitchin section rejects a degree the type does not have") {
  RunConfig c;
  CHECK_THROWS_AS(hitchin_section("G2", {5}, c), ConfigError);
  auto s = hitchin_section("G2", {}, c);
  CHECK(s.checks.at(0).verdict == Verdict::Skipped);
}
