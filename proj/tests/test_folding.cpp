#include "doctest.h"
#include "liefold/folding.hpp"

#include <set>

using namespace liefold;

namespace {

Weight nu(int rank, int j) { return Weight::fundamental(rank, j); }

std::vector<FoldingSpec> specs_n23() {
  std::vector<FoldingSpec> out;
  for (int n : {2, 3}) {
    out.push_back(make_folding(FoldPair::A2n1_C, n));
    out.push_back(make_folding(FoldPair::A2n_B, n));
    out.push_back(make_folding(FoldPair::Dn_B, n + 2));
  }
  out.push_back(make_folding(FoldPair::D4_G2, 0));
  out.push_back(make_folding(FoldPair::E6_F4, 0));
  return out;
}

}  // namespace

TEST_CASE("make_folding examples") {
  auto g2 = make_folding(FoldPair::D4_G2, 0);
  CHECK(g2.orbits == std::vector<std::vector<int>>{{0, 2, 3}, {1}});
  CHECK(g2.target.name() == "G2");
  CHECK(g2.order == 3);
  CHECK(g2.long_root == std::vector<bool>{false, true});

  auto f4 = make_folding(FoldPair::E6_F4, 0);
  CHECK(f4.orbits == std::vector<std::vector<int>>{{1}, {3}, {2, 4}, {0, 5}});
  CHECK(f4.reps == std::vector<int>{1, 3, 2, 0});
  CHECK(f4.restrict_simple_root(1) == f4.target.simple_root(0));
  CHECK(f4.restrict_simple_root(3) == f4.target.simple_root(1));
  CHECK(f4.long_root == std::vector<bool>{true, true, false, false});

  auto id = make_folding(FoldPair::Identity, 2);
  CHECK(id.target.cartan() == id.source.cartan());
  CHECK(id.restriction == IntMatrix{{1, 0}, {0, 1}});
  CHECK(id.order == 1);

  auto c3 = make_folding(FoldPair::A2n1_C, 2);
  CHECK(c3.long_root.back());
  CHECK(c3.order == 2);

  CHECK_THROWS_AS(make_folding(FoldPair::A2n_B, 1), InvalidInput);
  CHECK_THROWS_AS(make_folding(FoldPair::Dn_B, 2), InvalidInput);
  CHECK_THROWS_AS(make_folding(FoldPair::A2n1_C, 0), InvalidInput);
  CHECK_THROWS_AS(parse_pair("B2_A1"), InvalidInput);
  CHECK(parse_pair("e6_f4") == FoldPair::E6_F4);
}

TEST_CASE("folded Cartan matrices") {
  CHECK(make_folding(FoldPair::A2n_B, 2).folded_cartan() == IntMatrix{{2, -1}, {-2, 2}});
  CHECK(make_folding(FoldPair::A2n1_C, 1).folded_cartan() == IntMatrix{{2, -2}, {-1, 2}});
  for (const auto& s : specs_n23()) {
    CAPTURE(s.source.name());
    CHECK(s.folded_cartan() == s.target.cartan());
    // sigma preserves the Cartan matrix
    for (int i = 0; i < s.source.rank(); ++i)
      for (int j = 0; j < s.source.rank(); ++j)
        CHECK(s.source.cartan()[s.sigma[i]][s.sigma[j]] == s.source.cartan()[i][j]);
    CHECK(s.order == (s.pair == FoldPair::D4_G2 ? 3 : 2));
  }
}

TEST_CASE("restrict_weight examples") {
  auto f4 = make_folding(FoldPair::E6_F4, 0);
  CHECK(f4.restrict_weight(Weight::fundamental(6, 4)) == nu(4, 2));
  CHECK(f4.restrict_weight(Weight::fundamental(6, 1)) == nu(4, 4));
  CHECK(f4.restrict_weight(Weight::fundamental(6, 6)) == nu(4, 4));
  CHECK(f4.restrict_weight(Weight::fundamental(6, 2)) == nu(4, 1));
  CHECK(f4.restrict_weight(Weight::fundamental(6, 3)) == nu(4, 3));
  CHECK(f4.restrict_weight(Weight::fundamental(6, 5)) == nu(4, 3));

  auto b2 = make_folding(FoldPair::A2n_B, 2);
  CHECK(b2.restrict_weight(Weight::fundamental(4, 2)) == 2 * nu(2, 2));
  CHECK(b2.restrict_weight(Weight::fundamental(4, 3)) == 2 * nu(2, 2));
  CHECK(b2.restrict_weight(Weight::fundamental(4, 1)) == nu(2, 1));
  CHECK(b2.restrict_weight(Weight::fundamental(4, 4)) == nu(2, 1));

  for (const auto& s : specs_n23()) CHECK(s.restrict_weight(Weight::zero(s.source.rank())).is_zero());
  CHECK_THROWS_AS(b2.restrict_weight(Weight::zero(3)), InvalidInput);
}

TEST_CASE("restriction pairings") {
  SUBCASE("A2n1_C n=2 is Kronecker on the first three nodes") {
    auto s = make_folding(FoldPair::A2n1_C, 2);
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) CHECK(s.restriction[j][i] == (i == j));
  }
  SUBCASE("A2n_B n=2 doubled coroot") {
    auto s = make_folding(FoldPair::A2n_B, 2);
    CHECK(s.restriction[1][1] == 2);
    CHECK(s.coroot_fold[1] == std::vector<long long>{0, 2, 2, 0});
  }
  SUBCASE("E6_F4 beta_3 coroot") {
    auto s = make_folding(FoldPair::E6_F4, 0);
    CHECK(s.coroot_fold[2] == std::vector<long long>{0, 0, 1, 0, 1, 0});
    CHECK(s.restriction[2][2] == 1);
  }
  for (const auto& s : specs_n23()) {
    CAPTURE(s.source.name());
    auto recs = verify_restriction_lemma(s);
    CHECK(recs.size() >= 5);
    for (const auto& r : recs) {
      CAPTURE(r.name);
      CHECK(r.passed());
    }
  }
}

TEST_CASE("a wrong stated table is reported as a mismatch") {
  auto s = make_folding(FoldPair::E6_F4, 0);
  s.restriction[1][3] = 2;  // corrupt <varpi_4, beta_2^vee>
  auto recs = verify_restriction_lemma(s);
  bool flagged = false;
  for (const auto& r : recs)
    if (r.name == "pairings_match_stated_table") {
      flagged = !r.passed();
      REQUIRE(r.witness["mismatches"].size() == 1);
      CHECK(r.witness["mismatches"][0]["i"] == 4);
      CHECK(r.witness["mismatches"][0]["j"] == 2);
    }
  CHECK(flagged);
}

TEST_CASE("dominant_image examples") {
  auto b3 = make_folding(FoldPair::A2n_B, 3);
  auto img = dominant_image(b3);
  CHECK(std::set<Weight>(img.generators.begin(), img.generators.end()) ==
        std::set<Weight>{nu(3, 1), nu(3, 2), 2 * nu(3, 3)});
  CHECK(img.lattice_index == 2);
  CHECK(img.smith == std::vector<long long>{1, 1, 2});

  auto g2 = dominant_image(make_folding(FoldPair::D4_G2, 0));
  CHECK(std::set<Weight>(g2.generators.begin(), g2.generators.end()) == std::set<Weight>{nu(2, 1), nu(2, 2)});
  CHECK(g2.lattice_index == 1);

  auto id = dominant_image(make_folding(FoldPair::Identity, 2));
  CHECK(id.generators.size() == 2);

  for (const auto& s : specs_n23()) CHECK(verify_dominant_image(s).passed());
}

TEST_CASE("dominant image agrees with brute force over a box") {
  // Oracle: push every source dominant weight with coordinates <= 2 through
  // rho and compare with the target weights of the expected monoid in the
  // corresponding box.
  for (const auto& s : specs_n23()) {
    if (s.source.rank() > 6) continue;
    CAPTURE(s.source.name());
    const int l = s.source.rank(), lk = s.target_rank();
    std::set<Weight> images;
    std::vector<int> c(l, 0);
    while (true) {
      Weight w(c);
      images.insert(s.restrict_weight(w));
      int i = 0;
      while (i < l && c[i] == 2) c[i++] = 0;
      if (i == l) break;
      ++c[i];
    }
    for (const auto& im : images) {
      CHECK(im.is_dominant());
      if (s.pair == FoldPair::A2n_B) CHECK(im[lk - 1] % 2 == 0);
    }
    // every small target weight in the expected monoid is hit
    std::vector<int> t(lk, 0);
    while (true) {
      Weight mu(t);
      bool in_monoid = s.pair != FoldPair::A2n_B || mu[lk - 1] % 2 == 0;
      if (in_monoid) CHECK(images.count(mu) == 1);
      int i = 0;
      while (i < lk && t[i] == 1) t[i++] = 0;
      if (i == lk) break;
      ++t[i];
    }
  }
}

TEST_CASE("folding json") {
  auto j = make_folding(FoldPair::D4_G2, 0).to_json();
  CHECK(j["schema"] == 1);
  CHECK(j["orbits"][0] == std::vector<int>{1, 3, 4});
  CHECK(j["root_length"][1] == "long");
  auto table = make_folding(FoldPair::A2n_B, 2).table();
  CHECK(table.find("2a2^ + 2a3^") != std::string::npos);
}
