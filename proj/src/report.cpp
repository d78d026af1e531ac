#include "liefold/report.hpp"

#include <algorithm>
#include <chrono>
#include <memory>
#include <sstream>

#include "liefold/tds.hpp"

namespace liefold {

namespace {

using Clock = std::chrono::steady_clock;

double since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

CheckRecord skipped(const std::string& name, const std::string& reason, nlohmann::json inputs = nlohmann::json::object()) {
  CheckRecord r{name, "", std::move(inputs)};
  r.witness = {{"reason", reason}};
  r.verdict = Verdict::Skipped;
  return r;
}

CheckRecord failure(const std::string& name, const std::string& what, nlohmann::json inputs = nlohmann::json::object()) {
  CheckRecord r{name, "", std::move(inputs)};
  r.witness = {{"error", what}};
  r.verdict = Verdict::Fail;
  return r;
}

void append(std::vector<CheckRecord>& out, const std::vector<CheckRecord>& more) {
  out.insert(out.end(), more.begin(), more.end());
}

std::string subject_of(const PairSelection& sel) { return pair_name(sel.pair) + (sel.n ? " n=" + std::to_string(sel.n) : ""); }

nlohmann::json pair_inputs(const PairSelection& sel) { return {{"pair", pair_name(sel.pair)}, {"n", sel.n}}; }

// Runs body; a cap overrun becomes SKIPPED, any other library or domain
// error a FAIL record, so a stage never silently passes.
template <class Body>
void guarded(ReportSection& s, const std::string& stage, Body&& body) {
  try {
    body();
  } catch (const CapExceeded& e) {
    s.checks.push_back(skipped(stage, std::string("cap exceeded: ") + e.what()));
  } catch (const std::exception& e) {
    s.checks.push_back(failure(stage, e.what()));
  }
}

LieRealization realize(const RootDatum& datum, const RunConfig& config) {
  LieRealization g = LieRealization::build(datum, config.dim_cap);
  if (!config.mutation || config.mutation->type != datum.name()) return g;
  const auto& m = *config.mutation;
  BracketTable t = g.table();
  for (auto [a, b] : {std::pair{m.a, m.b}, std::pair{m.b, m.a}})
    for (auto& term : t[a][b]) term.coeff = -term.coeff;
  return LieRealization::from_table(datum, std::move(t));
}

struct PairContext {
  PairSelection sel;
  FoldingSpec spec;
  std::unique_ptr<LieRealization> g;
  AutomorphismReport sigma;
  SubalgebraEmbedding k;
  ReportSection chevalley;
  bool ok = false;
};

PairContext build_context(const PairSelection& sel, const RunConfig& config) {
  PairContext c{sel, make_folding(sel.pair, sel.n), nullptr, {}, {}, {"chevalley", subject_of(sel)}, false};
  auto t0 = Clock::now();
  guarded(c.chevalley, "chevalley", [&] {
    c.g = std::make_unique<LieRealization>(realize(c.spec.source, config));
    append(c.chevalley.checks, verify_realization(*c.g));
    c.sigma = automorphism_matrix(*c.g, c.spec);
    append(c.chevalley.checks, c.sigma.checks);
    c.k = fixed_subalgebra(*c.g, c.spec, c.sigma.matrix);
    append(c.chevalley.checks, c.k.checks);
    c.chevalley.data = {{"dim_g", c.g->dim()}, {"dim_k", c.k.dim()}, {"sigma_order", c.sigma.order},
                        {"sign_correction", c.sigma.sign_correction}};
  });
  if (!c.chevalley.checks.empty()) c.chevalley.checks.front().seconds = since(t0);
  c.ok = c.g && c.chevalley.passed();
  return c;
}

ReportSection skipped_section(const std::string& stage, const std::string& subject, const std::string& reason) {
  ReportSection s{stage, subject};
  s.checks.push_back(skipped(stage, reason));
  return s;
}

ReportSection tds_for(const PairContext& c) {
  ReportSection s{"tds", subject_of(c.sel)};
  guarded(s, "tds", [&] {
    const LieRealization& g = *c.g;
    auto t0 = Clock::now();
    Vec<Rational> y = folded_principal_nilpotent(c.spec, g, c.sigma.matrix);
    auto in = pair_inputs(c.sel);
    {
      auto pg = is_principal(g, y);
      CheckRecord r{"principal_in_g", "centralizer of y in g has dimension rank g", in};
      r.witness = {{"centralizer_dim", pg.centralizer_dim}, {"rank", g.rank()}};
      r.verdict = verdict_of(pg.principal);
      s.checks.push_back(r);
    }
    {
      auto pk = is_principal_in(g, c.k, c.spec.target_rank(), y);
      CheckRecord r{"principal_in_k", "centralizer of y in k has dimension rank k", in};
      r.witness = {{"centralizer_dim", pk.centralizer_dim}, {"rank", c.spec.target_rank()}};
      r.verdict = verdict_of(pk.principal);
      s.checks.push_back(r);
    }
    Sl2Triple t = complete_sl2(g, y);
    s.checks.push_back(verify_triple(g, t));
    {
      CheckRecord r{"triple_sigma_fixed", "the principal TDS lies in k", in};
      bool ok = true;
      for (const auto* v : {&t.x, &t.h, &t.y}) ok = ok && c.sigma.matrix.apply(*v) == *v && c.k.coordinates(*v);
      r.verdict = verdict_of(ok);
      s.checks.push_back(r);
    }
    auto dec = decompose_adjoint(g, t);
    append(s.checks, dec.checks);
    auto sub = decompose_in_subalgebra(g, t, c.k, dec);
    append(s.checks, sub.checks);
    std::vector<std::string> nil;
    for (int i = 0; i < g.rank(); ++i) nil.push_back(to_string(y[g.e_index(i)]));
    s.data = {{"y_simple_coefficients", nil}, {"dims_g", dec.dims}, {"dims_k", sub.dims}};
    s.checks.front().seconds = since(t0);
  });
  return s;
}

ReportSection transgression_for(const PairContext& c, const RunConfig& config) {
  ReportSection s{"transgression", subject_of(c.sel)};
  guarded(s, "transgression", [&] {
    auto t0 = Clock::now();
    auto emb = abstract_embedding(c.spec, *c.g, c.k);
    append(s.checks, emb.checks);
    if (!all_passed(emb.checks)) {
      s.checks.push_back(skipped("transgression_commutes", "embedding checks failed"));
      return;
    }
    auto p = invariant_polynomial(*c.g, 2);
    s.checks.push_back(verify_transgression_commutes(*c.g, emb, p, config.policy.seed, config.commute_samples));
    s.data = {{"polynomial", p.describe()}, {"samples", config.commute_samples}};
    s.checks.front().seconds = since(t0);
  });
  return s;
}

ReportSection chevrestrict_for(const PairContext& c, const RunConfig& config) {
  ReportSection s{"chevrestrict", subject_of(c.sel)};
  guarded(s, "chevrestrict",
          [&] { s.checks.push_back(chevalley_restriction_check(c.spec, *c.g, c.k, config.policy.seed)); });
  return s;
}

ReportSection branching_for(const PairSelection& sel, const PairContext* c, const RunConfig& config) {
  ReportSection s{"branching", subject_of(sel)};
  guarded(s, "branching", [&] {
    auto rep = verify_case(sel.pair, sel.n, config.caps);
    append(s.checks, rep.checks);
    s.data = rep.decompositions;
    if (c && c->ok)
      s.checks.push_back(adjoint_eigenspace_crosscheck(c->spec, *c->g, c->sigma.matrix, c->k));
    else
      s.checks.push_back(skipped("adjoint_branching_two_ways", "chevalley stage did not pass"));
  });
  return s;
}

struct TypeContext {
  RootDatum datum;
  std::unique_ptr<LieRealization> g;
  Sl2Triple triple;
  IsotypicDecomposition dec;
  std::vector<CheckRecord> prereq;
  bool ok = false;
};

TypeContext build_type(const std::string& type, const RunConfig& config) {
  TypeContext t{RootDatum::parse(type), nullptr, {}, {}, {}, false};
  t.g = std::make_unique<LieRealization>(realize(t.datum, config));
  append(t.prereq, verify_realization(*t.g));
  if (!all_passed(t.prereq)) return t;
  t.triple = complete_sl2(*t.g, principal_nilpotent(*t.g));
  t.prereq.push_back(verify_triple(*t.g, t.triple));
  t.dec = decompose_adjoint(*t.g, t.triple);
  append(t.prereq, t.dec.checks);
  t.ok = all_passed(t.prereq);
  return t;
}

std::string join(const std::vector<int>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s;
}

}  // namespace

// --- configuration ---------------------------------------------------------

int default_n(FoldPair pair) {
  switch (pair) {
    case FoldPair::A2n1_C: return 1;
    case FoldPair::A2n_B: return 2;
    case FoldPair::Dn_B: return 4;
    case FoldPair::Identity: return 2;
    default: return 0;
  }
}

std::vector<PairSelection> default_pairs() {
  return {{FoldPair::A2n1_C, 1}, {FoldPair::A2n1_C, 2}, {FoldPair::A2n_B, 2},
          {FoldPair::Dn_B, 5},   {FoldPair::D4_G2, 0},  {FoldPair::E6_F4, 0}};
}

std::vector<std::string> default_hitchin_types() { return {"A1", "A2", "A3", "B2", "C2", "G2", "D4"}; }

std::vector<std::string> default_adjoint_types() {
  return {"A1", "A2", "A3", "A4", "B2", "B3", "B4", "C2", "C3", "C4", "D3", "D4", "F4", "G2", "A5", "D5"};
}

std::vector<int> primitive_degrees(const RootDatum& datum) {
  std::vector<int> out;
  for (int m : datum.exponents())
    if (std::find(out.begin(), out.end(), 2 * m + 1) == out.end()) out.push_back(2 * m + 1);
  return out;
}

nlohmann::json RunConfig::to_json() const {
  nlohmann::json ps = nlohmann::json::array();
  for (const auto& p : pairs) ps.push_back(pair_inputs(p));
  nlohmann::json j{{"pairs", ps},
                   {"adjoint_types", adjoint_types},
                   {"hitchin_types", hitchin_types},
                   {"degrees", degrees ? nlohmann::json(*degrees) : nlohmann::json("all")},
                   {"mode", policy.mode == Arithmetic::Exact ? "exact" : "modular"},
                   {"prime", policy.prime ? nlohmann::json(*policy.prime) : nlohmann::json("auto")},
                   {"seed", policy.seed},
                   {"cap_dim", caps.character_dim},
                   {"realization_cap", dim_cap},
                   {"commute_samples", commute_samples}};
  if (mutation) j["mutation"] = {{"type", mutation->type}, {"a", mutation->a}, {"b", mutation->b}};
  return j;
}

void validate(const RunConfig& config) {
  for (const auto& p : config.pairs) {
    try {
      make_folding(p.pair, p.n);
    } catch (const Error& e) {
      throw ConfigError(std::string("invalid pair selection: ") + e.what());
    }
  }
  auto check_type = [](const std::string& t) {
    try {
      return RootDatum::parse(t);
    } catch (const Error& e) {
      throw ConfigError("invalid type " + t + ": " + e.what());
    }
  };
  for (const auto& t : config.adjoint_types) check_type(t);
  for (const auto& t : config.hitchin_types) check_type(t);
  if (config.degrees)
    for (int d : *config.degrees)
      if (d < 3 || d % 2 == 0) throw ConfigError("degree " + std::to_string(d) + " is not an odd integer >= 3");
  if (config.policy.prime && !is_prime_u64(*config.policy.prime))
    throw ConfigError(std::to_string(*config.policy.prime) + " is not prime");
  if (config.caps.character_dim < 1) throw ConfigError("cap-dim must be positive");
  if (config.commute_samples < 1) throw ConfigError("commute samples must be positive");
  if (config.mutation) {
    auto d = check_type(config.mutation->type);
    const auto& m = *config.mutation;
    if (m.a < 0 || m.b < 0 || m.a >= d.dimension() || m.b >= d.dimension() || m.a == m.b)
      throw ConfigError("mutation indices out of range");
  }
}

Arithmetic parse_mode(const std::string& s) {
  if (s == "exact") return Arithmetic::Exact;
  if (s == "modular") return Arithmetic::Modular;
  throw ConfigError("mode must be exact or modular, got " + s);
}

std::optional<std::uint64_t> parse_prime(const std::string& s) {
  if (s == "auto") return std::nullopt;
  try {
    std::size_t pos = 0;
    unsigned long long p = std::stoull(s, &pos);
    if (pos != s.size()) throw ConfigError("");
    if (!is_prime_u64(p)) throw ConfigError(s + " is not prime");
    return p;
  } catch (const ConfigError&) {
    throw;
  } catch (const std::exception&) {
    throw ConfigError("prime must be auto or a prime number, got " + s);
  }
}

std::vector<int> parse_int_list(const std::string& s) {
  std::vector<int> out;
  std::string cleaned;
  for (char ch : s)
    if (ch != '[' && ch != ']' && ch != ' ') cleaned += ch;
  if (cleaned.empty()) return out;
  std::stringstream ss(cleaned);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t pos = 0;
      int v = std::stoi(item, &pos);
      if (pos != item.size()) throw ConfigError("");
      out.push_back(v);
    } catch (const std::exception&) {
      throw ConfigError("not an integer list: " + s);
    }
  }
  return out;
}

Weight parse_weight(const std::string& s) { return Weight(parse_int_list(s)); }

Mutation parse_mutation(const std::string& s) {
  auto a = s.find(':'), b = s.rfind(':');
  if (a == std::string::npos || a == b) throw ConfigError("mutation must look like A3:4:6");
  Mutation m;
  m.type = s.substr(0, a);
  auto ints = parse_int_list(s.substr(a + 1, b - a - 1) + "," + s.substr(b + 1));
  m.a = ints.at(0);
  m.b = ints.at(1);
  return m;
}

// --- report ----------------------------------------------------------------

int VerificationReport::count(Verdict v) const {
  int c = 0;
  for (const auto& s : sections)
    for (const auto& r : s.checks) c += r.verdict == v;
  return c;
}

nlohmann::json VerificationReport::to_json(bool with_timing) const {
  nlohmann::json secs = nlohmann::json::array();
  for (const auto& s : sections) {
    nlohmann::json cs = nlohmann::json::array();
    Verdict v = Verdict::Pass;
    bool any_pass = false;
    for (const auto& r : s.checks) {
      cs.push_back(r.to_json(with_timing));
      if (r.verdict == Verdict::Fail) v = Verdict::Fail;
      if (r.verdict == Verdict::Skipped && v != Verdict::Fail) v = Verdict::Skipped;
      any_pass = any_pass || r.passed();
    }
    if (v == Verdict::Skipped && any_pass) v = Verdict::Pass;  // partial skips inside a passing stage
    secs.push_back({{"stage", s.stage}, {"subject", s.subject}, {"verdict", verdict_name(v)}, {"checks", cs}, {"data", s.data}});
  }
  return {{"schema", 1},
          {"tool", "liefold"},
          {"config", config},
          {"sections", secs},
          {"summary",
           {{"PASS", count(Verdict::Pass)}, {"FAIL", count(Verdict::Fail)}, {"SKIPPED", count(Verdict::Skipped)}}}};
}

std::string render_text(const nlohmann::json& report) {
  std::ostringstream os;
  for (const auto& s : report.at("sections")) {
    os << s.at("verdict").get<std::string>() << "  " << s.at("stage").get<std::string>() << " / "
       << s.at("subject").get<std::string>() << "\n";
    for (const auto& c : s.at("checks")) {
      const std::string v = c.at("verdict");
      os << "    " << (v == "PASS" ? "ok  " : v == "FAIL" ? "FAIL" : "skip") << "  " << c.at("name").get<std::string>();
      if (!c.at("anchor").get<std::string>().empty()) os << "  (" << c.at("anchor").get<std::string>() << ")";
      if (v != "PASS") os << "  " << c.at("witness").dump();
      if (c.contains("seconds")) os << "  [" << c.at("seconds").get<double>() << " s]";
      os << "\n";
    }
  }
  const auto& sum = report.at("summary");
  os << "summary: " << sum.at("PASS") << " passed, " << sum.at("FAIL") << " failed, " << sum.at("SKIPPED")
     << " skipped\n";
  return os.str();
}

// --- stages ----------------------------------------------------------------

ReportSection folding_section(const PairSelection& sel) {
  ReportSection s{"folding", subject_of(sel)};
  guarded(s, "folding", [&] {
    auto t0 = Clock::now();
    auto spec = make_folding(sel.pair, sel.n);
    append(s.checks, verify_restriction_lemma(spec));
    s.checks.push_back(verify_dominant_image(spec));
    s.data = spec.to_json();
    s.checks.front().seconds = since(t0);
  });
  return s;
}

ReportSection chevalley_section(const PairSelection& sel, const RunConfig& config) {
  return build_context(sel, config).chevalley;
}

ReportSection tds_section(const PairSelection& sel, const RunConfig& config) {
  auto c = build_context(sel, config);
  if (!c.ok) return skipped_section("tds", subject_of(sel), "chevalley stage did not pass");
  return tds_for(c);
}

ReportSection branching_section(const PairSelection& sel, const RunConfig& config) {
  auto c = build_context(sel, config);
  return branching_for(sel, &c, config);
}

ReportSection transgression_section(const PairSelection& sel, const RunConfig& config) {
  auto c = build_context(sel, config);
  if (!c.ok) return skipped_section("transgression", subject_of(sel), "chevalley stage did not pass");
  return transgression_for(c, config);
}

ReportSection chevrestrict_section(const PairSelection& sel, const RunConfig& config) {
  auto c = build_context(sel, config);
  if (!c.ok) return skipped_section("chevrestrict", subject_of(sel), "chevalley stage did not pass");
  return chevrestrict_for(c, config);
}

ReportSection adjoint_section(const std::string& type, const RunConfig& config) {
  ReportSection s{"adjoint", type};
  guarded(s, "adjoint", [&] {
    auto t0 = Clock::now();
    auto t = build_type(type, config);
    append(s.checks, t.prereq);
    if (!t.ok) return;
    std::vector<int> eig;
    for (auto [lam, d] : t.dec.multiple_highest_weights) eig.push_back(lam);
    s.data = {{"dims", t.dec.dims}, {"exponents", t.datum.exponents()}, {"multiple_highest_weight_eigenvalues", eig}};
    s.checks.front().seconds = since(t0);
  });
  return s;
}

ReportSection hitchin_section(const std::string& type, const std::vector<int>& degrees, const RunConfig& config) {
  ReportSection s{"hitchin", type};
  if (degrees.empty()) {
    s.checks.push_back(skipped("hitchin", "empty degree list"));
    return s;
  }
  const auto allowed = primitive_degrees(RootDatum::parse(type));
  for (int d : degrees)
    if (std::find(allowed.begin(), allowed.end(), d) == allowed.end())
      throw ConfigError(type + " has no primitive degree " + std::to_string(d) + " (degrees " + join(allowed) + ")");
  guarded(s, "hitchin", [&] {
    auto t = build_type(type, config);
    {
      CheckRecord r{"prerequisites", "realization and adjoint decomposition verified", {{"type", type}}};
      std::vector<std::string> failed;
      for (const auto& c : t.prereq)
        if (!c.passed()) failed.push_back(c.name);
      r.witness = {{"failed", failed}};
      r.verdict = verdict_of(t.ok);
      s.checks.push_back(r);
    }
    if (!t.ok) {
      s.checks.push_back(skipped("hitchin_nonvanishing", "prerequisites failed", {{"type", type}}));
      return;
    }
    s.checks.push_back(check_constructions_proportional(*t.g, 2, config.policy.seed));
    nlohmann::json per = nlohmann::json::array();
    for (int d : degrees) {
      auto ps = primitive_space(*t.g, d, config.policy);
      append(s.checks, ps.checks);
      std::vector<std::string> forms;
      for (std::size_t i = 0; i < ps.basis.size(); ++i) {
        forms.push_back(ps.basis[i].describe());
        if (d <= 7) {
          auto r = check_form_invariance(*t.g, ps.basis[i], config.policy.seed + i);
          s.checks.push_back(r);
        }
      }
      auto h = hitchin_check(*t.g, t.dec, d, ps.basis, config.policy);
      s.checks.push_back(h);
      per.push_back({{"d", d}, {"forms", forms}, {"verdict", verdict_name(h.verdict)}});
    }
    s.data = {{"degrees", per}};
  });
  return s;
}

VerificationReport run_all(const RunConfig& config) {
  validate(config);
  VerificationReport rep;
  rep.config = config.to_json();

  std::vector<ReportSection> folding;
  std::vector<PairContext> ctx;
  for (const auto& sel : config.pairs) {
    folding.push_back(folding_section(sel));
    if (folding.back().passed())
      ctx.push_back(build_context(sel, config));
    else
      ctx.push_back(PairContext{sel, make_folding(sel.pair, sel.n), nullptr, {}, {},
                                skipped_section("chevalley", subject_of(sel), "folding stage did not pass"), false});
  }
  for (auto& s : folding) rep.sections.push_back(std::move(s));
  for (auto& c : ctx) rep.sections.push_back(c.chevalley);
  for (auto& c : ctx)
    rep.sections.push_back(c.ok ? tds_for(c) : skipped_section("tds", subject_of(c.sel), "chevalley stage did not pass"));
  for (std::size_t i = 0; i < ctx.size(); ++i) {
    const bool fold_ok = rep.sections[i].passed();
    rep.sections.push_back(fold_ok ? branching_for(ctx[i].sel, &ctx[i], config)
                                   : skipped_section("branching", subject_of(ctx[i].sel), "folding stage did not pass"));
  }
  for (const auto& t : config.adjoint_types) rep.sections.push_back(adjoint_section(t, config));
  for (const auto& t : config.hitchin_types) {
    std::vector<int> ds;
    if (config.degrees) {
      auto allowed = primitive_degrees(RootDatum::parse(t));
      for (int d : *config.degrees)
        if (std::find(allowed.begin(), allowed.end(), d) != allowed.end()) ds.push_back(d);
    } else {
      ds = primitive_degrees(RootDatum::parse(t));
    }
    rep.sections.push_back(hitchin_section(t, ds, config));
  }
  for (auto& c : ctx)
    rep.sections.push_back(c.ok ? transgression_for(c, config)
                                : skipped_section("transgression", subject_of(c.sel), "chevalley stage did not pass"));
  for (auto& c : ctx)
    rep.sections.push_back(c.ok ? chevrestrict_for(c, config)
                                : skipped_section("chevrestrict", subject_of(c.sel), "chevalley stage did not pass"));
  return rep;
}

}  // namespace liefold
