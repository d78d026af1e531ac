#include "doctest.h"
#include "liefold/rootsys.hpp"

#include <random>
#include <set>

using namespace liefold;

namespace {

// Oracle: all roots as the Weyl-orbit closure of the simple roots, using
// s_i(beta) = beta - <beta, alpha_i^vee> alpha_i in simple-root coordinates.
std::set<RootCoords> roots_by_reflection(const IntMatrix& cartan) {
  const int l = static_cast<int>(cartan.size());
  std::set<RootCoords> seen;
  std::vector<RootCoords> stack;
  for (int i = 0; i < l; ++i) {
    RootCoords r(l, 0);
    r[i] = 1;
    seen.insert(r);
    stack.push_back(r);
  }
  while (!stack.empty()) {
    RootCoords b = stack.back();
    stack.pop_back();
    for (int i = 0; i < l; ++i) {
      long long p = 0;
      for (int j = 0; j < l; ++j) p += cartan[i][j] * b[j];
      RootCoords c = b;
      c[i] -= static_cast<int>(p);
      if (seen.insert(c).second) stack.push_back(c);
    }
  }
  return seen;
}

std::vector<RootDatum> all_small_types() {
  std::vector<RootDatum> out;
  for (int l = 1; l <= 5; ++l) out.push_back(RootDatum::build(Family::A, l));
  for (int l = 2; l <= 4; ++l) out.push_back(RootDatum::build(Family::B, l));
  for (int l = 2; l <= 4; ++l) out.push_back(RootDatum::build(Family::C, l));
  for (int l = 3; l <= 5; ++l) out.push_back(RootDatum::build(Family::D, l));
  out.push_back(RootDatum::build(Family::G, 2));
  out.push_back(RootDatum::build(Family::F, 4));
  out.push_back(RootDatum::build(Family::E, 6));
  return out;
}

}  // namespace

TEST_CASE("build_root_datum examples") {
  auto d4 = RootDatum::build(Family::D, 4);
  CHECK(d4.exponents() == std::vector<int>{1, 3, 3, 5});

  auto a1 = RootDatum::build(Family::A, 1);
  CHECK(a1.exponents() == std::vector<int>{1});
  CHECK(a1.positive_roots().size() == 1);

  auto g2 = RootDatum::build(Family::G, 2);
  auto oracle = roots_by_reflection(g2.cartan());
  CHECK(oracle.size() == 12);
  CHECK(g2.positive_roots().size() == 6);
  CHECK(g2.exponents() == std::vector<int>{1, 5});
  CHECK(g2.dimension() == 14);
}

TEST_CASE("invalid types are rejected") {
  CHECK_THROWS_AS(RootDatum::build(Family::B, 1), InvalidInput);
  CHECK_THROWS_AS(RootDatum::build(Family::D, 2), InvalidInput);
  CHECK_THROWS_AS(RootDatum::build(Family::E, 7), InvalidInput);
  CHECK_THROWS_AS(RootDatum::build(Family::G, 3), InvalidInput);
  CHECK_THROWS_AS(RootDatum::parse("X3"), InvalidInput);
  CHECK_THROWS_AS(RootDatum::parse("A"), InvalidInput);
  CHECK(RootDatum::parse("f4").name() == "F4");
}

TEST_CASE("root data match oracles and golden exponents") {
  for (const auto& d : all_small_types()) {
    CAPTURE(d.name());
    auto oracle = roots_by_reflection(d.cartan());
    std::set<RootCoords> positives;
    for (const auto& r : oracle)
      if (std::all_of(r.begin(), r.end(), [](int x) { return x >= 0; })) positives.insert(r);
    CHECK(positives == std::set<RootCoords>(d.positive_roots().begin(), d.positive_roots().end()));
    CHECK(oracle.size() == 2 * d.positive_roots().size());
    CHECK(d.exponents() == reference_exponents(d.family(), d.rank()));
    CHECK(d.exponents_via_heights() == d.exponents());
    int total = 0;
    for (int m : d.exponents()) total += 2 * m + 1;
    CHECK(total == d.rank() + 2 * static_cast<int>(oracle.size() / 2));
    // symmetrizer really symmetrizes
    for (int i = 0; i < d.rank(); ++i)
      for (int j = 0; j < d.rank(); ++j)
        CHECK(d.symmetrizer()[i] * d.cartan()[i][j] == d.symmetrizer()[j] * d.cartan()[j][i]);
    // simple roots are column j of the Cartan matrix
    for (int j = 0; j < d.rank(); ++j) {
      RootCoords e(d.rank(), 0);
      e[j] = 1;
      CHECK(d.to_weight(e) == d.simple_root(j));
      CHECK(d.to_root_coords(d.simple_root(j)) == e);
    }
  }
}

TEST_CASE("known dimensions") {
  CHECK(RootDatum::build(Family::B, 3).dimension() == 21);
  CHECK(RootDatum::build(Family::C, 2).dimension() == 10);
  CHECK(RootDatum::build(Family::F, 4).dimension() == 52);
  CHECK(RootDatum::build(Family::E, 6).dimension() == 78);
  CHECK(RootDatum::build(Family::D, 4).positive_roots().size() == 12);
}

TEST_CASE("exponents_via_heights examples") {
  auto c2 = RootDatum::build(Family::C, 2);
  std::vector<int> heights;
  for (const auto& r : c2.positive_roots()) heights.push_back(RootDatum::height(r));
  CHECK(heights == std::vector<int>{1, 1, 2, 3});
  CHECK(c2.exponents_via_heights() == std::vector<int>{1, 3});
  CHECK(RootDatum::build(Family::A, 3).exponents_via_heights() == std::vector<int>{1, 2, 3});
  CHECK(RootDatum::build(Family::A, 1).exponents_via_heights() == std::vector<int>{1});
}

TEST_CASE("weyl_dimension") {
  auto f4 = RootDatum::build(Family::F, 4);
  auto e6 = RootDatum::build(Family::E, 6);
  CHECK(weyl_dimension(f4, Weight::fundamental(4, 1)) == 52);
  CHECK(weyl_dimension(e6, Weight::fundamental(6, 4)) == 2925);
  CHECK(weyl_dimension(e6, Weight::zero(6)) == 1);
  CHECK(weyl_dimension(f4, Weight::zero(4)) == 1);
  CHECK_THROWS_AS(weyl_dimension(f4, Weight({-1, 0, 0, 0})), InvalidInput);
}

TEST_CASE("freudenthal: sl3 adjoint against explicit matrices") {
  // Oracle: weights of E_ij (i != j) and of the diagonal on the Cartan
  // h1 = E11 - E22, h2 = E22 - E33, read off directly.
  auto diag = [](int i, int k) {  // value of h_k on e_i
    if (k == 0) return i == 0 ? 1 : (i == 1 ? -1 : 0);
    return i == 1 ? 1 : (i == 2 ? -1 : 0);
  };
  Character oracle;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      if (i == j) continue;
      Weight w({diag(i, 0) - diag(j, 0), diag(i, 1) - diag(j, 1)});
      oracle[w] += 1;
    }
  oracle[Weight::zero(2)] += 2;
  auto a2 = RootDatum::build(Family::A, 2);
  auto got = freudenthal_multiplicities(a2, Weight({1, 1}));
  CHECK(got == oracle);
  CHECK(got.at(Weight::zero(2)) == 2);
  CHECK(character_dimension(got) == 8);
}

TEST_CASE("freudenthal: F4 26-dimensional module") {
  // Oracle: short roots of F4 each with multiplicity one, zero weight twice.
  auto f4 = RootDatum::build(Family::F, 4);
  long long short_norm = 0;
  for (const auto& r : f4.positive_roots()) {
    long long n = f4.root_norm(r);
    if (short_norm == 0 || n < short_norm) short_norm = n;
  }
  Character oracle;
  for (const auto& r : f4.positive_roots()) {
    if (f4.root_norm(r) != short_norm) continue;
    Weight w = f4.to_weight(r);
    oracle[w] = 1;
    oracle[Weight::zero(4) - w] = 1;
  }
  oracle[Weight::zero(4)] = 2;
  auto got = freudenthal_multiplicities(f4, Weight::fundamental(4, 4));
  CHECK(got == oracle);
  CHECK(character_dimension(got) == 26);
}

TEST_CASE("freudenthal: trivial module and cap") {
  for (const auto& d : all_small_types()) {
    auto chi = freudenthal_multiplicities(d, Weight::zero(d.rank()));
    CHECK(chi.size() == 1);
    CHECK(chi.begin()->second == 1);
  }
  auto e6 = RootDatum::build(Family::E, 6);
  Caps tiny;
  tiny.character_dim = 100;
  try {
    freudenthal_multiplicities(e6, Weight::fundamental(6, 4), tiny);
    FAIL("cap not enforced");
  } catch (const CapExceeded& e) {
    CHECK(std::string(e.what()).find("2925") != std::string::npos);
  }
}

TEST_CASE("freudenthal: Weyl invariance and dimension agreement (property)") {
  std::mt19937_64 rng(20261018);
  auto types = all_small_types();
  int pairs = 0;
  while (pairs < 100) {
    const auto& d = types[rng() % types.size()];
    Weight lam = Weight::zero(d.rank());
    for (int i = 0; i < d.rank(); ++i) lam[i] = static_cast<int>(rng() % 2);
    if (weyl_dimension(d, lam) > 3000) continue;
    auto chi = freudenthal_multiplicities(d, lam);
    CHECK(Integer(static_cast<long>(character_dimension(chi))) == weyl_dimension(d, lam));
    CHECK(chi.at(lam) == 1);
    // random weight of the module, moved by a random Weyl word
    auto it = chi.begin();
    std::advance(it, rng() % chi.size());
    Weight w = it->first;
    int len = 1 + static_cast<int>(rng() % 12);
    for (int s = 0; s < len; ++s) w = d.reflect(w, static_cast<int>(rng() % d.rank()));
    CHECK(chi.count(w) == 1);
    CHECK(chi.at(w) == it->second);
    ++pairs;
  }
}

TEST_CASE("tensor_decompose examples") {
  auto f4 = RootDatum::build(Family::F, 4);
  auto nu = [](int i) { return Weight::fundamental(4, i); };
  auto cls = [](const Weight& w) { return RepRingElement::irreducible(w); };
  auto one = RepRingElement::trivial(4);

  auto sq = tensor_decompose(f4, nu(4), nu(4));
  CHECK(sq.coefficient(2 * nu(4)) == 1);
  CHECK(sq - cls(nu(3)) - cls(nu(1)) - cls(nu(4)) - one == cls(2 * nu(4)));

  auto mixed = tensor_decompose(f4, nu(1), nu(4));
  CHECK(mixed - cls(nu(3)) - cls(nu(4)) == cls(nu(1) + nu(4)));
  CHECK(weyl_dimension(f4, nu(1) + nu(4)) == 1053);

  auto b3 = RootDatum::build(Family::B, 3);
  auto lam = Weight({1, 0, 1});
  CHECK(tensor_decompose(b3, lam, Weight::zero(3)) == cls(lam));
}

TEST_CASE("tensor products: symmetry, dimension, two methods agree") {
  std::mt19937_64 rng(99);
  auto types = all_small_types();
  for (int trial = 0; trial < 40; ++trial) {
    const auto& d = types[rng() % types.size()];
    Weight a = Weight::zero(d.rank()), b = Weight::zero(d.rank());
    a[rng() % d.rank()] = 1;
    b[rng() % d.rank()] = 1;
    if (rng() % 2) b[rng() % d.rank()] += 1;
    if (weyl_dimension(d, a) * weyl_dimension(d, b) > 20000) continue;
    CAPTURE(d.name());
    auto ab = tensor_decompose(d, a, b);
    CHECK(ab == tensor_decompose(d, b, a));
    CHECK(dimension(d, ab) == weyl_dimension(d, a) * weyl_dimension(d, b));
    CHECK(ab.is_effective());
    CHECK(ab == tensor_decompose_by_characters(d, a, b));
  }
}

TEST_CASE("exterior powers of the defining module of sl4") {
  auto a3 = RootDatum::build(Family::A, 3);
  auto v = freudenthal_multiplicities(a3, Weight::fundamental(3, 1));
  for (int j = 1; j <= 3; ++j) {
    auto ext = exterior_power(v, j);
    CHECK(decompose_character(a3, ext) == RepRingElement::irreducible(Weight::fundamental(3, j)));
  }
  auto top = exterior_power(v, 4);
  CHECK(decompose_character(a3, top) == RepRingElement::trivial(3));
  CHECK(exterior_power(v, 5).empty());
}

TEST_CASE("root datum json round trip") {
  auto e6 = RootDatum::build(Family::E, 6);
  auto j = e6.to_json();
  CHECK(j["schema"] == 1);
  CHECK(j["exponents"] == std::vector<int>{1, 4, 5, 7, 8, 11});
  CHECK(RootDatum::from_json(j).cartan() == e6.cartan());
  j["cartan"][0][0] = 3;
  CHECK_THROWS_AS(RootDatum::from_json(j), InvalidInput);
}
