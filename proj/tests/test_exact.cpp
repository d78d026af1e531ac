#include "doctest.h"
#include "liefold/exact.hpp"

#include <random>

using namespace liefold;

TEST_CASE("modular residues") {
  const std::uint64_t p = next_prime(1ULL << 31);
  CHECK(p == 2147483659ULL);
  ModP a(5, p), b(-3, p);
  CHECK((a + b).value() == 2);
  CHECK((a * b).value() == p - 15);
  CHECK((a / a).value() == 1);
  CHECK(ModP::from_rational(Rational(1, 2), p) * ModP(2, p) == ModP(1, p));
  CHECK_THROWS_AS(ModP::from_rational(Rational(1, static_cast<long>(p)), p), std::domain_error);
  CHECK(is_prime_u64(2305843009213693951ULL));
  CHECK_FALSE(is_prime_u64(3215031751ULL));  // strong pseudoprime to bases 2,3,5,7
}

TEST_CASE("rank, kernel and solve agree") {
  Matrix<Rational> m(3, 4, Rational(0));
  int vals[3][4] = {{1, 2, 3, 4}, {2, 4, 6, 8}, {0, 1, 1, 1}};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 4; ++j) m(i, j) = vals[i][j];
  CHECK(rank(m) == 2);
  auto ker = kernel(m, Rational(1));
  REQUIRE(ker.size() == 2);
  for (const auto& v : ker) {
    auto mv = m.apply(v);
    for (const auto& x : mv) CHECK(is_zero(x));
  }
  auto x = solve(m, Vec<Rational>{Rational(10), Rational(20), Rational(3)}, Rational(1));
  REQUIRE(x);
  auto mx = m.apply(*x);
  CHECK(mx[0] == 10);
  CHECK(mx[2] == 3);
  CHECK_FALSE(solve(m, Vec<Rational>{Rational(1), Rational(1), Rational(0)}, Rational(1)));
}

TEST_CASE("determinant and inverse") {
  Matrix<Rational> m(3, 3, Rational(0));
  int vals[3][3] = {{2, -1, 0}, {-1, 2, -1}, {0, -1, 2}};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) m(i, j) = vals[i][j];
  CHECK(determinant(m, Rational(1)) == 4);
  auto inv = inverse(m, Rational(1));
  REQUIRE(inv);
  CHECK(m * *inv == Matrix<Rational>::identity(3, Rational(1)));
}

TEST_CASE("pfaffian squares to the determinant") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> dist(-4, 4);
  for (int n : {2, 4, 6, 8}) {
    for (int trial = 0; trial < 5; ++trial) {
      Matrix<Rational> a(n, n, Rational(0));
      for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
          a(i, j) = dist(rng);
          a(j, i) = -a(i, j);
        }
      Rational pf = pfaffian(a, Rational(1));
      CHECK(pf * pf == determinant(a, Rational(1)));
    }
  }
  // Sign convention: Pf of the standard symplectic block is +1.
  Matrix<Rational> j(2, 2, Rational(0));
  j(0, 1) = 1;
  j(1, 0) = -1;
  CHECK(pfaffian(j, Rational(1)) == 1);
  // Explicit 4x4 formula: a12 a34 - a13 a24 + a14 a23.
  Matrix<Rational> b(4, 4, Rational(0));
  int up[4][4] = {{0, 1, 2, 3}, {0, 0, 4, 5}, {0, 0, 0, 6}, {0, 0, 0, 0}};
  for (int r = 0; r < 4; ++r)
    for (int c = r + 1; c < 4; ++c) {
      b(r, c) = up[r][c];
      b(c, r) = -up[r][c];
    }
  CHECK(pfaffian(b, Rational(1)) == 1 * 6 - 2 * 5 + 3 * 4);
}

TEST_CASE("smith normal form") {
  CHECK(smith_invariants({{1, 0, 0, 1}, {0, 2, 2, 0}}) == std::vector<long long>{1, 2});
  CHECK(smith_invariants({{2, 4, 4}, {-6, 6, 12}, {10, -4, -16}}) == std::vector<long long>{2, 6, 12});
  CHECK(smith_invariants({{0, 0}, {0, 0}}) == std::vector<long long>{0, 0});
}
