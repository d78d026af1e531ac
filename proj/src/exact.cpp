#include "liefold/exact.hpp"

#include <algorithm>
#include <cstdlib>

namespace liefold {

namespace {

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % m);
}

std::uint64_t powmod(std::uint64_t b, std::uint64_t e, std::uint64_t m) {
  std::uint64_t r = 1 % m;
  b %= m;
  while (e) {
    if (e & 1) r = mulmod(r, b, m);
    b = mulmod(b, b, m);
    e >>= 1;
  }
  return r;
}

std::uint64_t mpz_mod_u64(const Integer& z, std::uint64_t p) {
  // p < 2^63 fits in an unsigned long on LP64 platforms.
  Integer r;
  mpz_fdiv_r_ui(r.get_mpz_t(), z.get_mpz_t(), static_cast<unsigned long>(p));
  return r.get_ui();
}

}  // namespace

ModP ModP::from_rational(const Rational& q, std::uint64_t p) {
  std::uint64_t den = mpz_mod_u64(q.get_den(), p);
  if (den == 0) throw std::domain_error("prime divides a denominator");
  std::uint64_t num = mpz_mod_u64(q.get_num(), p);
  return from_raw(num, p) * from_raw(den, p).inverse();
}

ModP ModP::pow(std::uint64_t e) const { return from_raw(powmod(v_, e, p_), p_); }

ModP ModP::inverse() const {
  if (v_ == 0) throw std::domain_error("inverse of zero residue");
  return pow(p_ - 2);
}

bool is_prime_u64(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t q : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    if (n % q == 0) return n == q;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  // Deterministic witness set for 64-bit integers.
  for (std::uint64_t a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    std::uint64_t x = powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

std::uint64_t next_prime(std::uint64_t n) {
  while (!is_prime_u64(n)) ++n;
  return n;
}

std::vector<long long> smith_invariants(IntMatrix m) {
  const std::size_t rows = m.size();
  const std::size_t cols = rows ? m[0].size() : 0;
  const std::size_t k = std::min(rows, cols);
  for (std::size_t t = 0; t < k; ++t) {
    // Find the smallest nonzero entry in the trailing block and move it to (t,t).
    for (;;) {
      long long best = 0;
      std::size_t bi = t, bj = t;
      for (std::size_t i = t; i < rows; ++i)
        for (std::size_t j = t; j < cols; ++j)
          if (m[i][j] != 0 && (best == 0 || std::llabs(m[i][j]) < best)) {
            best = std::llabs(m[i][j]);
            bi = i;
            bj = j;
          }
      if (best == 0) {
        std::vector<long long> out;
        for (std::size_t s = 0; s < k; ++s) out.push_back(s < t ? std::llabs(m[s][s]) : 0);
        return out;
      }
      std::swap(m[t], m[bi]);
      for (auto& row : m) std::swap(row[t], row[bj]);
      bool clean = true;
      for (std::size_t i = t + 1; i < rows; ++i) {
        long long q = m[i][t] / m[t][t];
        for (std::size_t j = t; j < cols; ++j) m[i][j] -= q * m[t][j];
        if (m[i][t] != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        long long q = m[t][j] / m[t][t];
        for (std::size_t i = t; i < rows; ++i) m[i][j] -= q * m[i][t];
        if (m[t][j] != 0) clean = false;
      }
      if (!clean) continue;
      // Divisibility: the pivot must divide every trailing entry.
      bool divides = true;
      for (std::size_t i = t + 1; i < rows && divides; ++i)
        for (std::size_t j = t + 1; j < cols; ++j)
          if (m[i][j] % m[t][t] != 0) {
            for (std::size_t c = t; c < cols; ++c) m[t][c] += m[i][c];
            divides = false;
            break;
          }
      if (divides) break;
    }
  }
  std::vector<long long> out;
  for (std::size_t s = 0; s < k; ++s) out.push_back(std::llabs(m[s][s]));
  return out;
}

Matrix<Rational> to_rational(const IntMatrix& m) {
  const std::size_t rows = m.size();
  const std::size_t cols = rows ? m[0].size() : 0;
  Matrix<Rational> out(rows, cols, Rational(0));
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) out(i, j) = Rational(static_cast<long>(m[i][j]));
  return out;
}

std::string to_string(const Rational& q) { return q.get_str(); }

}  // namespace liefold
