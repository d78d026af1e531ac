#include <random>

#include "doctest.h"
#include "liefold/branching.hpp"

using namespace liefold;

namespace {

Weight fw(int rank, int i) { return Weight::fundamental(rank, i); }
RepRingElement irr(const Weight& w) { return RepRingElement::irreducible(w); }

// Oracle: multiplicity of V(mu) in a character by Weyl's alternation,
// m_mu = sum_w sgn(w) chi[mu + rho - w rho], with w rho running over the
// orbit of rho (regular, so one term per Weyl group element).
RepRingElement alternation_decompose(const RootDatum& k, const Character& chi) {
  std::vector<std::pair<Weight, int>> signed_orbit;
  for (const auto& v : k.weyl_orbit(k.rho())) signed_orbit.emplace_back(v, k.dominant_conjugate(v).length_parity ? -1 : 1);
  RepRingElement out;
  for (const auto& [mu, m] : chi) {
    if (!mu.is_dominant()) continue;
    long long s = 0;
    for (const auto& [wr, sg] : signed_orbit) {
      auto it = chi.find(mu + k.rho() - wr);
      if (it != chi.end()) s += sg * it->second;
    }
    if (s != 0) out.add(mu, s);
  }
  return out;
}

RepRingElement oracle_branch(const FoldingSpec& spec, const Weight& lambda) {
  Character pushed;
  for (const auto& [w, m] : freudenthal_multiplicities(spec.source, lambda)) pushed[spec.restrict_weight(w)] += m;
  return alternation_decompose(spec.target, pushed);
}

Weight random_dominant(std::mt19937_64& rng, int rank, int max_coord) {
  Weight w = Weight::zero(rank);
  for (int i = 0; i < rank; ++i) w[i] = static_cast<int>(rng() % (max_coord + 1));
  return w;
}

struct PairN {
  FoldPair p;
  int n;
};

const std::vector<PairN> small_pairs{{FoldPair::A2n1_C, 1}, {FoldPair::A2n1_C, 2}, {FoldPair::A2n_B, 2},
                                     {FoldPair::Dn_B, 4},   {FoldPair::Dn_B, 5},   {FoldPair::D4_G2, 0}};

}  // namespace

TEST_CASE("branch examples") {
  auto d4b3 = make_folding(FoldPair::Dn_B, 4);
  auto b = branch(d4b3, fw(4, 1));
  CHECK(b.decomposition == irr(fw(3, 1)) + RepRingElement::trivial(3));
  CHECK(all_passed(b.checks));

  auto g2 = make_folding(FoldPair::D4_G2, 0);
  auto adj = branch(g2, fw(4, 2));
  CHECK(adj.decomposition == irr(fw(2, 2)) + 2 * irr(fw(2, 1)));
  CHECK(adj.top_multiplicity == 1);
  REQUIRE(adj.trace.size() == 2);
  CHECK(adj.trace[0]["dim"] == 14);
  CHECK(adj.trace[1]["remaining"] == 0);

  for (auto pn : small_pairs) {
    auto spec = make_folding(pn.p, pn.n);
    auto z = branch(spec, Weight::zero(spec.source.rank()));
    CHECK(z.decomposition == RepRingElement::trivial(spec.target_rank()));
  }
  CHECK_THROWS_AS(branch(g2, Weight({-1, 0, 0, 0})), InvalidInput);
  CHECK_THROWS_AS(branch(g2, fw(2, 1)), InvalidInput);
  Caps tiny;
  tiny.character_dim = 10;
  CHECK_THROWS_AS(branch(g2, fw(4, 2), tiny), CapExceeded);
}

TEST_CASE("branch agrees with the alternation oracle") {
  std::mt19937_64 rng(7);
  for (auto pn : small_pairs) {
    auto spec = make_folding(pn.p, pn.n);
    CAPTURE(spec.source.name());
    const int l = spec.source.rank();
    std::vector<Weight> lambdas;
    for (int i = 1; i <= l; ++i) lambdas.push_back(fw(l, i));
    for (int s = 0; s < 4; ++s) {
      Weight w = random_dominant(rng, l, 1);
      if (weyl_dimension(spec.source, w) <= 3000) lambdas.push_back(w);
    }
    for (const auto& lam : lambdas) {
      CAPTURE(lam.str());
      auto b = branch(spec, lam);
      CHECK(b.decomposition == oracle_branch(spec, lam));
      CHECK(all_passed(b.checks));
      CHECK(dimension(spec.target, b.decomposition) == weyl_dimension(spec.source, lam));
    }
  }
}

TEST_CASE("branch is additive and multiplicative") {
  std::mt19937_64 rng(11);
  for (auto pn : small_pairs) {
    auto spec = make_folding(pn.p, pn.n);
    CAPTURE(spec.source.name());
    const int l = spec.source.rank();
    for (int s = 0; s < 3; ++s) {
      Weight a = random_dominant(rng, l, 1), c = random_dominant(rng, l, 1);
      if (weyl_dimension(spec.source, a) * weyl_dimension(spec.source, c) > 4000) continue;
      auto ba = branch(spec, a).decomposition, bc = branch(spec, c).decomposition;
      CHECK(restrict_class(spec, irr(a) + 2 * irr(c)) == ba + 2 * bc);
      auto prod = tensor_decompose(spec.source, a, c);
      CHECK(restrict_class(spec, prod) == multiply(spec.target, ba, bc));
    }
  }
}

TEST_CASE("case identities hold for every pair") {
  std::vector<PairN> all{{FoldPair::A2n1_C, 1}, {FoldPair::A2n1_C, 2}, {FoldPair::A2n1_C, 3},
                         {FoldPair::A2n_B, 2},  {FoldPair::A2n_B, 3},  {FoldPair::Dn_B, 3},
                         {FoldPair::Dn_B, 4},   {FoldPair::Dn_B, 5},   {FoldPair::D4_G2, 0},
                         {FoldPair::E6_F4, 0},  {FoldPair::Identity, 3}};
  for (auto pn : all) {
    auto rep = verify_case(pn.p, pn.n);
    CAPTURE(rep.pair);
    CAPTURE(rep.n);
    for (const auto& c : rep.checks) {
      CAPTURE(c.name);
      CAPTURE(c.witness.dump());
      CHECK(c.passed());
    }
    CHECK(rep.checks.size() >= 2);
  }
}

TEST_CASE("case I contraction identity at n = 1") {
  auto rep = verify_case(FoldPair::A2n1_C, 1);
  bool found = false;
  for (const auto& c : rep.checks)
    if (c.name == "contraction_identity_2") found = c.passed();
  CHECK(found);
  // [W2] = phi[V2] - 1, computed directly.
  auto spec = make_folding(FoldPair::A2n1_C, 1);
  CHECK(branch(spec, fw(3, 2)).decomposition - RepRingElement::trivial(2) == irr(fw(2, 2)));
  auto s = surjectivity_report(FoldPair::A2n1_C, 1);
  CHECK(s.preimages.at(fw(2, 2)).str() == "phi[V2] - 1");
}

TEST_CASE("case III spin slot") {
  auto spec = make_folding(FoldPair::Dn_B, 4);
  CHECK(weyl_dimension(spec.source, fw(4, 3)) == 8);
  CHECK(weyl_dimension(spec.target, fw(3, 3)) == 8);
  CHECK(branch(spec, fw(4, 3)).decomposition == irr(fw(3, 3)));
  CHECK(branch(spec, fw(4, 4)).decomposition == irr(fw(3, 3)));
}

TEST_CASE("E6 and F4 dimensions") {
  auto e6 = RootDatum::parse("E6"), f4 = RootDatum::parse("F4");
  const std::vector<long> w{52, 1274, 273, 26}, v{27, 78, 351, 2925, 351, 27};
  for (int j = 1; j <= 4; ++j) CHECK(weyl_dimension(f4, fw(4, j)) == w[j - 1]);
  for (int i = 1; i <= 6; ++i) CHECK(weyl_dimension(e6, fw(6, i)) == v[i - 1]);
  CHECK(weyl_dimension(f4, 2 * fw(4, 4)) == 324);
  CHECK(weyl_dimension(f4, fw(4, 1) + fw(4, 4)) == 1053);
  CHECK(weyl_dimension(f4, 2 * fw(4, 1)) == 1053);
  // oracle: count weights with multiplicity
  for (int j : {1, 3, 4}) CHECK(weyl_dimension(f4, fw(4, j)).get_si() == character_dimension(freudenthal_multiplicities(f4, fw(4, j))));
  CHECK(character_dimension(freudenthal_multiplicities(e6, fw(6, 4))) == 2925);
}

TEST_CASE("F4 tensor identities by character multiplication") {
  auto f4 = RootDatum::parse("F4");
  auto prod = [&](int a, int b) { return tensor_decompose_by_characters(f4, fw(4, a), fw(4, b)); };
  auto one = RepRingElement::trivial(4);
  auto W = [&](int j) { return irr(fw(4, j)); };
  CHECK(prod(4, 4) - W(3) - W(1) - W(4) - one == irr(2 * fw(4, 4)));
  CHECK(prod(1, 4) - W(3) - W(4) == irr(fw(4, 1) + fw(4, 4)));
  CHECK(prod(1, 1) - W(2) - irr(2 * fw(4, 4)) - W(1) - one == irr(2 * fw(4, 1)));
}

TEST_CASE("2 nu_1 is not a weight of the 2925-dimensional module") {
  auto r = not_a_weight_check();
  CHECK(r.passed());
  CHECK(r.witness["lattice"]["alpha2_coefficient"] == "-1");
  CHECK(r.witness["lattice"]["varpi4_root_coords"] == std::vector<std::string>{"2", "3", "4", "6", "4", "2"});
  CHECK(r.witness["lattice"]["varpi2_root_coords"] == std::vector<std::string>{"1", "2", "2", "3", "2", "1"});
  CHECK(r.witness["lattice"]["varpi6_minus_varpi1"] ==
        std::vector<std::string>{"-2/3", "0", "-1/3", "0", "1/3", "2/3"});
  CHECK(r.witness["lattice"]["varpi5_minus_varpi3"] ==
        std::vector<std::string>{"-1/3", "0", "-2/3", "0", "2/3", "1/3"});
  CHECK(r.witness["brute_force"]["hits"] == 0);
  CHECK(r.witness["brute_force"]["weights_counted"] == 2925);
  // oracle: the alternation decomposition has no W(2 nu_1) either
  auto spec = make_folding(FoldPair::E6_F4, 0);
  auto v4 = oracle_branch(spec, fw(6, 4));
  CHECK(v4.coefficient(2 * fw(4, 1)) == 0);
  CHECK(v4.coefficient(fw(4, 2)) == 1);
}

TEST_CASE("surjectivity preimages") {
  auto d4 = surjectivity_report(FoldPair::D4_G2, 0);
  CHECK(all_passed(d4.checks));
  CHECK(d4.preimages.at(fw(2, 1)).str() == "phi[V1] - 1");
  CHECK(d4.preimages.at(fw(2, 2)).str() == "phi[V2] - 2 phi[V1] + 2");

  auto b2 = surjectivity_report(FoldPair::A2n_B, 2);
  CHECK(all_passed(b2.checks));
  CHECK(b2.preimages.size() == 2);
  CHECK(b2.preimages.at(2 * fw(2, 2)).str() == "phi[V2]");
  CHECK(b2.preimages.at(fw(2, 1)).str() == "phi[V1]");

  auto id = surjectivity_report(FoldPair::Identity, 3);
  for (int i = 1; i <= 3; ++i) CHECK(id.preimages.at(fw(3, i)) == PhiPolynomial::generator(i));

  auto e6 = surjectivity_report(FoldPair::E6_F4, 0);
  CHECK(all_passed(e6.checks));
  CHECK(e6.preimages.size() == 4);
  // W2 needs products of restricted classes
  bool quadratic = false;
  for (const auto& [m, c] : e6.preimages.at(fw(4, 2)).terms()) quadratic = quadratic || m.size() >= 2;
  CHECK(quadratic);
}

TEST_CASE("phi polynomial arithmetic") {
  auto x = PhiPolynomial::generator(1), y = PhiPolynomial::generator(2), one = PhiPolynomial::constant(1);
  CHECK((x * y).str() == "phi[V1] phi[V2]");
  CHECK(((x - one) * (x + one)).str() == "phi[V1]^2 - 1");
  CHECK((x - x).str() == "0");
  CHECK((3 * y - 2 * x + one).str() == "3 phi[V2] - 2 phi[V1] + 1");
  auto g2 = RootDatum::parse("G2");
  std::vector<RepRingElement> imgs{irr(fw(2, 1)) + RepRingElement::trivial(2)};
  CHECK((x - one).evaluate(g2, imgs) == irr(fw(2, 1)));
  CHECK_THROWS_AS(y.evaluate(g2, imgs), InvalidInput);
}

TEST_CASE("adjoint decomposition from sigma eigenspaces matches branching") {
  for (auto pn : {PairN{FoldPair::A2n1_C, 1}, PairN{FoldPair::D4_G2, 0}, PairN{FoldPair::A2n_B, 2},
                  PairN{FoldPair::Dn_B, 4}}) {
    auto spec = make_folding(pn.p, pn.n);
    auto g = LieRealization::build(spec.source);
    auto s = automorphism_matrix(g, spec);
    auto k = fixed_subalgebra(g, spec, s.matrix);
    auto r = adjoint_eigenspace_crosscheck(spec, g, s.matrix, k);
    CAPTURE(r.witness.dump());
    CHECK(r.passed());
  }
}

TEST_CASE("corrupted restriction is detected") {
  auto spec = make_folding(FoldPair::A2n1_C, 1);
  auto expected = branch(spec, fw(3, 1)).decomposition;
  spec.restriction[0][0] += 1;
  bool detected = false;
  try {
    detected = branch(spec, fw(3, 1)).decomposition != expected;
  } catch (const Error&) {
    detected = true;
  }
  CHECK(detected);
}
