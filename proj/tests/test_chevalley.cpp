#include "doctest.h"
#include "liefold/chevalley.hpp"

using namespace liefold;

namespace {

const Rational one(1), zero(0);

bool record_passed(const std::vector<CheckRecord>& recs, const std::string& name) {
  for (const auto& r : recs)
    if (r.name == name) return r.passed();
  FAIL("missing record " << name);
  return false;
}

Vec<Rational> vec(const LieRealization& g, int a) { return g.basis_vector(a, one); }

}  // namespace

TEST_CASE("realize examples") {
  auto a1 = LieRealization::build(RootDatum::parse("A1"));
  CHECK(a1.dim() == 3);
  auto e = vec(a1, a1.e_index(0)), f = vec(a1, a1.f_index(0)), h = vec(a1, a1.h_index(0));
  CHECK(a1.bracket(e, f) == h);
  auto two_e = e;
  two_e[a1.e_index(0)] = 2;
  CHECK(a1.bracket(h, e) == two_e);

  auto g2 = LieRealization::build(RootDatum::parse("G2"));
  CHECK(g2.dim() == 14);
  // Oracle: Killing matrix recomputed as tr(ad a ad b) with dense products.
  Matrix<Rational> k(14, 14, zero);
  for (int a = 0; a < 14; ++a)
    for (int b = 0; b < 14; ++b) {
      auto p = g2.ad(vec(g2, a)) * g2.ad(vec(g2, b));
      Rational tr = 0;
      for (int i = 0; i < 14; ++i) tr += p(i, i);
      k(a, b) = tr;
    }
  CHECK(k == to_rational(g2.killing()));
  CHECK_FALSE(is_zero(determinant(k, one)));

  auto d4 = LieRealization::build(RootDatum::parse("D4"));
  CHECK(d4.dim() == 28);
  CHECK(d4.datum().positive_roots().size() == 12);

  CHECK_THROWS_AS(LieRealization::build(RootDatum::parse("E6"), 60), CapExceeded);
}

TEST_CASE("structure constants satisfy the Chevalley identities") {
  for (const char* name : {"A3", "B3", "C3", "D4", "G2", "F4"}) {
    CAPTURE(name);
    auto g = LieRealization::build(RootDatum::parse(name));
    const auto& d = g.datum();
    std::vector<RootCoords> roots;
    for (const auto& r : d.positive_roots()) {
      roots.push_back(r);
      RootCoords m = r;
      for (auto& x : m) x = -x;
      roots.push_back(m);
    }
    for (const auto& a : roots)
      for (const auto& b : roots) {
        RootCoords s = a;
        for (std::size_t i = 0; i < s.size(); ++i) s[i] += b[i];
        bool zero_sum = std::all_of(s.begin(), s.end(), [](int x) { return x == 0; });
        long long n = g.structure_constant(a, b);
        if (zero_sum || !d.is_root(s)) {
          CHECK(n == 0);
          continue;
        }
        // |N| = p + 1 with p the largest integer making b - p a a root
        int p = 0;
        RootCoords x = b;
        while (true) {
          for (std::size_t i = 0; i < x.size(); ++i) x[i] -= a[i];
          if (std::all_of(x.begin(), x.end(), [](int v) { return v == 0; }) || !d.is_root(x)) break;
          ++p;
        }
        CHECK(std::llabs(n) == p + 1);
        RootCoords na = a, nb = b;
        for (auto& v : na) v = -v;
        for (auto& v : nb) v = -v;
        CHECK(g.structure_constant(na, nb) == -n);
        CHECK(g.structure_constant(b, a) == -n);
      }
  }
}

TEST_CASE("Jacobi identity is checked on every triple") {
  for (const char* name : {"A2", "B2", "G2", "D4", "E6"}) {
    auto g = LieRealization::build(RootDatum::parse(name));
    auto recs = verify_realization(g);
    CHECK(all_passed(recs));
    long long n = g.dim();
    for (const auto& r : recs)
      if (r.name == "jacobi") CHECK(r.witness["triples_checked"] == n * (n - 1) * (n - 2) / 6);
  }
}

TEST_CASE("a corrupted structure constant is caught") {
  auto g = LieRealization::build(RootDatum::parse("B3"));
  BracketTable t = g.table();
  // flip the sign of one non-simple bracket [e_a, e_b] and keep antisymmetry
  int flipped = 0;
  for (int a = g.rank(); a < g.dim() && !flipped; ++a)
    for (int b = a + 1; b < g.dim() && !flipped; ++b)
      if (!t[a][b].empty() && t[a][b][0].index >= g.rank() && a != g.e_index(0)) {
        t[a][b][0].coeff = -t[a][b][0].coeff;
        t[b][a][0].coeff = -t[b][a][0].coeff;
        flipped = 1;
      }
  REQUIRE(flipped);
  auto bad = LieRealization::from_table(g.datum(), t);
  auto recs = verify_realization(bad);
  CHECK(record_passed(recs, "antisymmetry"));
  CHECK_FALSE(record_passed(recs, "jacobi"));
}

TEST_CASE("automorphism_matrix examples") {
  SUBCASE("D4 triality") {
    auto spec = make_folding(FoldPair::D4_G2, 0);
    auto g = LieRealization::build(spec.source);
    auto s = automorphism_matrix(g, spec);
    CHECK(all_passed(s.checks));
    CHECK(s.order == 3);
    CHECK(s.sign_correction == "none");
    // Oracle: dim of the fixed space from rank(sigma - I).
    auto m = s.matrix - Matrix<Rational>::identity(28, one);
    CHECK(28 - rank(m) == 14);
  }
  SUBCASE("A3 -> C2") {
    auto spec = make_folding(FoldPair::A2n1_C, 1);
    auto g = LieRealization::build(spec.source);
    auto s = automorphism_matrix(g, spec);
    CHECK(all_passed(s.checks));
    CHECK(15 - rank(s.matrix - Matrix<Rational>::identity(15, one)) == 10);
  }
  SUBCASE("identity") {
    auto spec = make_folding(FoldPair::Identity, 2);
    auto g = LieRealization::build(spec.source);
    CHECK(automorphism_matrix(g, spec).matrix == Matrix<Rational>::identity(8, one));
  }
  SUBCASE("mismatched source") {
    auto spec = make_folding(FoldPair::D4_G2, 0);
    auto g = LieRealization::build(RootDatum::parse("A4"));
    CHECK_THROWS_AS(automorphism_matrix(g, spec), InvalidInput);
  }
}

TEST_CASE("fixed_subalgebra examples") {
  struct Case {
    FoldPair p;
    int n;
    int dim;
  };
  for (auto c : {Case{FoldPair::E6_F4, 0, 52}, Case{FoldPair::Dn_B, 4, 21}, Case{FoldPair::Identity, 2, 8},
                 Case{FoldPair::A2n_B, 2, 10}, Case{FoldPair::A2n1_C, 2, 21}, Case{FoldPair::D4_G2, 0, 14}}) {
    CAPTURE(pair_name(c.p));
    auto spec = make_folding(c.p, c.n);
    auto g = LieRealization::build(spec.source);
    auto s = automorphism_matrix(g, spec);
    auto k = fixed_subalgebra(g, spec, s.matrix);
    CHECK(k.dim() == c.dim);
    CHECK(all_passed(k.checks));
    // sigma is a Killing isometry
    CHECK(record_passed(s.checks, "sigma_killing_isometry"));
    // generators lie in k
    for (const auto& e : k.E) CHECK(k.coordinates(e).has_value());
  }
}

TEST_CASE("natural representations") {
  for (const char* name : {"A1", "A3", "B2", "B3", "C2", "C3", "D4", "D5"}) {
    CAPTURE(name);
    auto g = LieRealization::build(RootDatum::parse(name));
    auto m = natural_representation(g);
    REQUIRE(m);
    CHECK(is_representation(g, m->images));
    // the trace form is a nonzero multiple of the Killing form
    Rational ratio = 0;
    bool proportional = true;
    for (int a = 0; a < g.dim(); ++a)
      for (int b = 0; b < g.dim(); ++b) {
        auto p = m->images[a] * m->images[b];
        Rational tr = 0;
        for (int i = 0; i < m->size; ++i) tr += p(i, i);
        Rational kab(static_cast<long>(g.killing()[a][b]));
        if (is_zero(tr)) {
          proportional = proportional && is_zero(kab);
          continue;
        }
        if (is_zero(ratio)) ratio = kab / tr;
        proportional = proportional && kab == ratio * tr;
      }
    CHECK(proportional);
    CHECK_FALSE(is_zero(ratio));
  }
  // sl3: Killing = 6 tr, kappa(h1,h1) = 12
  auto a2 = LieRealization::build(RootDatum::parse("A2"));
  CHECK(a2.killing()[0][0] == 12);
  CHECK_FALSE(natural_representation(LieRealization::build(RootDatum::parse("G2"))));
}

TEST_CASE("realization json") {
  auto g = LieRealization::build(RootDatum::parse("A2"));
  auto j = g.to_json();
  CHECK(j["schema"] == 1);
  CHECK(j["dim"] == 8);
  CHECK(j["basis"][2] == "e[1,0]");
  CHECK(j["basis"][3] == "f[1,0]");
}
