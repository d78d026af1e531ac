// liefold: command-line front end for the verification pipeline.
//
// Every flag can also be set from the environment with the LIEFOLD_ prefix
// (LIEFOLD_PAIR, LIEFOLD_N, LIEFOLD_SEED, LIEFOLD_MODE, LIEFOLD_PRIME,
// LIEFOLD_JSON, LIEFOLD_CAP_DIM). Command-line values win.
//
// Exit status: 0 no FAIL, 1 some check failed, 2 configuration error.

#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "liefold/report.hpp"

using namespace liefold;

namespace {

struct Options {
  std::string pair;
  int n = -1;
  std::uint64_t seed = 42;
  std::string mode = "modular";
  std::string prime = "auto";
  std::string json;
  long long cap_dim = Caps{}.character_dim;
  bool timings = false;
  std::string mutate;
  // subcommand-specific
  std::string lambda;
  std::string type;
  std::string degrees;
  bool degrees_given = false;
};

RunConfig make_config(const Options& o) {
  RunConfig c;
  if (!o.pair.empty()) {
    FoldPair p;
    try {
      p = parse_pair(o.pair);
    } catch (const Error& e) {
      throw ConfigError(e.what());
    }
    c.pairs = {{p, o.n >= 0 ? o.n : default_n(p)}};
  } else if (o.n >= 0) {
    throw ConfigError("--n needs --pair");
  }
  c.policy.seed = o.seed;
  c.policy.mode = parse_mode(o.mode);
  c.policy.prime = parse_prime(o.prime);
  c.caps.character_dim = o.cap_dim;
  c.timings = o.timings;
  c.output = o.json;
  if (!o.mutate.empty()) c.mutation = parse_mutation(o.mutate);
  if (o.degrees_given) c.degrees = parse_int_list(o.degrees);
  validate(c);
  return c;
}

int emit(const VerificationReport& rep, const RunConfig& c, bool timings, const std::string& preface = "") {
  auto j = rep.to_json(timings);
  const std::string text = j.dump(2) + "\n";
  if (c.output == "-") {
    std::cout << text;
  } else {
    std::cout << preface << render_text(j);
    if (!c.output.empty()) {
      std::ofstream f(c.output, std::ios::binary);
      if (!f) throw ConfigError("cannot write " + c.output);
      f << text;
    }
  }
  return rep.failed() ? 1 : 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact verification of diagram folding, branching, principal TDS and invariant forms"};
  app.require_subcommand(1);
  Options o;
  app.add_option("--pair", o.pair, "A2n1_C | A2n_B | Dn_B | D4_G2 | E6_F4")->envname("LIEFOLD_PAIR");
  app.add_option("--n", o.n, "family parameter of the pair")->envname("LIEFOLD_N");
  app.add_option("--seed", o.seed, "seed for samples, random points and auto primes")->envname("LIEFOLD_SEED");
  app.add_option("--mode", o.mode, "exact | modular")->envname("LIEFOLD_MODE");
  app.add_option("--prime", o.prime, "auto | explicit prime")->envname("LIEFOLD_PRIME");
  app.add_option("--json", o.json, "write the JSON report here ('-' for stdout only)")->envname("LIEFOLD_JSON");
  app.add_option("--cap-dim", o.cap_dim, "cap on character dimensions")->envname("LIEFOLD_CAP_DIM");
  app.add_flag("--timings", o.timings, "include wall times in the report");
  app.add_option("--mutate", o.mutate, "testing aid: negate [x_a, x_b] in the realization of TYPE, as TYPE:a:b");

  auto* fold = app.add_subcommand("fold", "folding data and restriction tables");
  auto* lemma = app.add_subcommand("lemma11", "pairings <rho(varpi_i), beta_j^vee> against the stated tables");
  auto* br = app.add_subcommand("branch", "branching identities, or one restriction with --lambda");
  br->add_option("--lambda", o.lambda, "source dominant weight, e.g. 0,1,0,0");
  auto* tds = app.add_subcommand("tds", "folded principal TDS, or the adjoint strings of --type");
  tds->add_option("--type", o.type, "simple type, e.g. D4");
  auto* hit = app.add_subcommand("hitchin", "nonvanishing of primitive forms on principal strings");
  hit->add_option("--type", o.type, "simple type, e.g. G2");
  auto* hit_degrees = hit->add_option("--degrees", o.degrees, "odd degrees, e.g. 3,11");
  auto* tr = app.add_subcommand("transgression", "transgression commutes with restriction to k");
  auto* cr = app.add_subcommand("chevrestrict", "Jacobian rank of restricted invariants");
  auto* all = app.add_subcommand("all", "every stage in dependency order");
  auto* all_degrees = all->add_option("--degrees", o.degrees, "restrict Hitchin degrees; empty skips the stage");
  for (auto* s : app.get_subcommands({})) s->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }
  o.degrees_given = hit_degrees->count() > 0 || all_degrees->count() > 0;

  try {
    RunConfig c = make_config(o);
    VerificationReport rep;
    rep.config = c.to_json();
    if (fold->parsed() || lemma->parsed()) {
      std::vector<PairSelection> pairs = c.pairs;
      if (o.pair.empty() && lemma->parsed()) {
        pairs = {{FoldPair::A2n1_C, 2}, {FoldPair::A2n1_C, 3}, {FoldPair::A2n_B, 2}, {FoldPair::A2n_B, 3},
                 {FoldPair::Dn_B, 3},   {FoldPair::Dn_B, 4},   {FoldPair::D4_G2, 0}, {FoldPair::E6_F4, 0}};
      }
      std::string tables;
      for (const auto& p : pairs) {
        rep.sections.push_back(folding_section(p));
        if (fold->parsed()) tables += make_folding(p.pair, p.n).table() + "\n";
      }
      return emit(rep, c, c.timings, tables);
    }
    if (br->parsed()) {
      if (!o.lambda.empty()) {
        if (c.pairs.size() != 1) throw ConfigError("--lambda needs --pair");
        const auto& sel = c.pairs.front();
        auto spec = make_folding(sel.pair, sel.n);
        Weight lam = parse_weight(o.lambda);
        if (static_cast<int>(lam.size()) != spec.source.rank() || !lam.is_dominant())
          throw ConfigError("--lambda must be a dominant weight of " + spec.source.name());
        auto b = branch(spec, lam, c.caps);
        ReportSection s{"branching", pair_name(sel.pair)};
        s.checks = b.checks;
        s.data = {{"source", spec.source.name()},
                  {"target", spec.target.name()},
                  {"lambda", lam.coords},
                  {"rho_lambda", b.top.coords},
                  {"decomposition", b.decomposition.to_json()},
                  {"decomposition_text", b.decomposition.str()},
                  {"trace", b.trace}};
        rep.sections.push_back(s);
        return emit(rep, c, c.timings, spec.source.name() + " V" + lam.str() + " -> " + b.decomposition.str() + "\n");
      }
      for (const auto& p : c.pairs) rep.sections.push_back(branching_section(p, c));
      return emit(rep, c, c.timings);
    }
    if (tds->parsed()) {
      if (!o.type.empty())
        rep.sections.push_back(adjoint_section(o.type, c));
      else
        for (const auto& p : c.pairs) rep.sections.push_back(tds_section(p, c));
      return emit(rep, c, c.timings);
    }
    if (hit->parsed()) {
      std::vector<std::string> types = o.type.empty() ? c.hitchin_types : std::vector<std::string>{o.type};
      if (!o.type.empty()) {
        c.hitchin_types = types;
        validate(c);
        rep.config = c.to_json();
      }
      for (const auto& t : types) {
        std::vector<int> ds = c.degrees ? *c.degrees : primitive_degrees(RootDatum::parse(t));
        rep.sections.push_back(hitchin_section(t, ds, c));
      }
      return emit(rep, c, true);
    }
    if (tr->parsed()) {
      for (const auto& p : c.pairs) rep.sections.push_back(transgression_section(p, c));
      return emit(rep, c, c.timings);
    }
    if (cr->parsed()) {
      for (const auto& p : c.pairs) rep.sections.push_back(chevrestrict_section(p, c));
      return emit(rep, c, c.timings);
    }
    if (all->parsed()) return emit(run_all(c), c, c.timings);
  } catch (const ConfigError& e) {
    std::cerr << "configuration error: " << e.what() << "\n";
    return 2;
  } catch (const InvalidInput& e) {
    std::cerr << "configuration error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
