#pragma once

// Exact scalar types and dense linear algebra over a field.
//
// Two fields are supported: arbitrary-precision rationals (GMP) and integers
// modulo a word-size prime. Every algorithm here is templated on the scalar
// so that form evaluation can run in either mode with identical code.

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace liefold {

using Integer = mpz_class;
using Rational = mpq_class;

/// Residue modulo a prime p < 2^63. The modulus travels with the value.
class ModP {
 public:
  ModP() = default;
  ModP(std::int64_t v, std::uint64_t p) : p_(p) {
    std::int64_t r = v % static_cast<std::int64_t>(p);
    v_ = static_cast<std::uint64_t>(r < 0 ? r + static_cast<std::int64_t>(p) : r);
  }
  static ModP from_raw(std::uint64_t v, std::uint64_t p) {
    ModP m;
    m.v_ = v;
    m.p_ = p;
    return m;
  }
  /// Reduces a rational; throws std::domain_error if p divides the denominator.
  static ModP from_rational(const Rational& q, std::uint64_t p);

  std::uint64_t value() const { return v_; }
  std::uint64_t modulus() const { return p_; }

  ModP& operator+=(const ModP& o) {
    std::uint64_t p = pick(o);
    v_ += o.v_;
    if (v_ >= p) v_ -= p;
    p_ = p;
    return *this;
  }
  ModP& operator-=(const ModP& o) {
    std::uint64_t p = pick(o);
    v_ = v_ >= o.v_ ? v_ - o.v_ : v_ + p - o.v_;
    p_ = p;
    return *this;
  }
  ModP& operator*=(const ModP& o) {
    std::uint64_t p = pick(o);
    v_ = static_cast<std::uint64_t>((static_cast<unsigned __int128>(v_) * o.v_) % p);
    p_ = p;
    return *this;
  }
  ModP& operator/=(const ModP& o) { return *this *= o.inverse(); }
  ModP operator-() const { return from_raw(v_ == 0 ? 0 : p_ - v_, p_); }
  friend ModP operator+(ModP a, const ModP& b) { return a += b; }
  friend ModP operator-(ModP a, const ModP& b) { return a -= b; }
  friend ModP operator*(ModP a, const ModP& b) { return a *= b; }
  friend ModP operator/(ModP a, const ModP& b) { return a /= b; }
  friend bool operator==(const ModP& a, const ModP& b) { return a.v_ == b.v_; }

  ModP pow(std::uint64_t e) const;
  ModP inverse() const;

 private:
  // A default-constructed zero has modulus 0 and adopts the other operand's.
  std::uint64_t pick(const ModP& o) const { return p_ != 0 ? p_ : o.p_; }
  std::uint64_t v_ = 0;
  std::uint64_t p_ = 0;
};

inline bool is_zero(const Integer& x) { return sgn(x) == 0; }
inline bool is_zero(const Rational& x) { return sgn(x) == 0; }
inline bool is_zero(const ModP& x) { return x.value() == 0; }
inline bool is_zero(long long x) { return x == 0; }

/// Scalar construction helper: builds the field element for a small integer,
/// taking the modulus (if any) from a prototype.
template <class F>
F scalar_like(std::int64_t v, const F& proto);
template <>
inline Rational scalar_like<Rational>(std::int64_t v, const Rational&) {
  return Rational(static_cast<long>(v));
}
template <>
inline Integer scalar_like<Integer>(std::int64_t v, const Integer&) {
  return Integer(static_cast<long>(v));
}
template <>
inline ModP scalar_like<ModP>(std::int64_t v, const ModP& proto) {
  return ModP(v, proto.modulus());
}

bool is_prime_u64(std::uint64_t n);
/// Smallest prime >= n.
std::uint64_t next_prime(std::uint64_t n);

template <class F>
using Vec = std::vector<F>;

/// Dense row-major matrix.
template <class F>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, const F& fill = F())
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

  static Matrix identity(std::size_t n, const F& one) {
    Matrix m(n, n, one - one);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = one;
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  F& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const F& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  Vec<F> row(std::size_t r) const {
    return Vec<F>(data_.begin() + r * cols_, data_.begin() + (r + 1) * cols_);
  }
  Vec<F> col(std::size_t c) const {
    Vec<F> v(rows_);
    for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
    return v;
  }

  Matrix transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    return t;
  }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw std::invalid_argument("matrix shape mismatch");
    Matrix out(a.rows_, b.cols_, zero_of(a, b));
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const F& aik = a(i, k);
        if (is_zero(aik)) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) out(i, j) += aik * b(k, j);
      }
    return out;
  }
  friend Matrix operator+(Matrix a, const Matrix& b) {
    for (std::size_t i = 0; i < a.data_.size(); ++i) a.data_[i] += b.data_[i];
    return a;
  }
  friend Matrix operator-(Matrix a, const Matrix& b) {
    for (std::size_t i = 0; i < a.data_.size(); ++i) a.data_[i] -= b.data_[i];
    return a;
  }
  Matrix& operator*=(const F& s) {
    for (auto& x : data_) x *= s;
    return *this;
  }
  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

  Vec<F> apply(const Vec<F>& v) const {
    Vec<F> out(rows_, v.empty() ? F() : v[0] - v[0]);
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = 0; c < cols_; ++c)
        if (!is_zero(v[c])) out[r] += (*this)(r, c) * v[c];
    return out;
  }

  bool is_zero_matrix() const {
    for (const auto& x : data_)
      if (!is_zero(x)) return false;
    return true;
  }

  const std::vector<F>& data() const { return data_; }

 private:
  static F zero_of(const Matrix& a, const Matrix& b) {
    if (!a.data_.empty()) return a.data_[0] - a.data_[0];
    if (!b.data_.empty()) return b.data_[0] - b.data_[0];
    return F();
  }
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<F> data_;
};

/// In-place reduced row echelon form; returns pivot columns.
template <class F>
std::vector<std::size_t> rref(Matrix<F>& m) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t p = r;
    while (p < m.rows() && is_zero(m(p, c))) ++p;
    if (p == m.rows()) continue;
    if (p != r)
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(p, j), m(r, j));
    F inv = m(r, c);
    for (std::size_t j = c; j < m.cols(); ++j) m(r, j) /= inv;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == r || is_zero(m(i, c))) continue;
      F f = m(i, c);
      for (std::size_t j = c; j < m.cols(); ++j) m(i, j) -= f * m(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

template <class F>
std::size_t rank(Matrix<F> m) {
  return rref(m).size();
}

/// Basis of the right null space {x : m x = 0}, one vector per free column,
/// normalized so that the free coordinate equals one.
template <class F>
std::vector<Vec<F>> kernel(Matrix<F> m, const F& one) {
  auto piv = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto c : piv) is_pivot[c] = true;
  std::vector<Vec<F>> out;
  F zero = one - one;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    Vec<F> v(m.cols(), zero);
    v[free] = one;
    for (std::size_t i = 0; i < piv.size(); ++i) v[piv[i]] = -m(i, free);
    out.push_back(std::move(v));
  }
  return out;
}

/// Solves m x = b. Returns nullopt if inconsistent. Free variables are zero.
template <class F>
std::optional<Vec<F>> solve(const Matrix<F>& m, const Vec<F>& b, const F& one) {
  Matrix<F> aug(m.rows(), m.cols() + 1, one - one);
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) aug(i, j) = m(i, j);
    aug(i, m.cols()) = b[i];
  }
  auto piv = rref(aug);
  if (!piv.empty() && piv.back() == m.cols()) return std::nullopt;
  Vec<F> x(m.cols(), one - one);
  for (std::size_t i = 0; i < piv.size(); ++i) x[piv[i]] = aug(i, m.cols());
  return x;
}

template <class F>
F determinant(Matrix<F> m, const F& one) {
  if (m.rows() != m.cols()) throw std::invalid_argument("determinant of non-square matrix");
  F det = one;
  const std::size_t n = m.rows();
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && is_zero(m(p, c))) ++p;
    if (p == n) return one - one;
    if (p != c) {
      for (std::size_t j = 0; j < n; ++j) std::swap(m(p, j), m(c, j));
      det = -det;
    }
    det *= m(c, c);
    for (std::size_t i = c + 1; i < n; ++i) {
      if (is_zero(m(i, c))) continue;
      F f = m(i, c) / m(c, c);
      for (std::size_t j = c; j < n; ++j) m(i, j) -= f * m(c, j);
    }
  }
  return det;
}

template <class F>
std::optional<Matrix<F>> inverse(const Matrix<F>& m, const F& one) {
  const std::size_t n = m.rows();
  Matrix<F> aug(n, 2 * n, one - one);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n + i) = one;
  }
  auto piv = rref(aug);
  if (piv.size() < n || piv[n - 1] != n - 1) return std::nullopt;
  Matrix<F> inv(n, n, one - one);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = aug(i, n + j);
  return inv;
}

/// Pfaffian of an antisymmetric matrix by skew-symmetric elimination.
template <class F>
F pfaffian(Matrix<F> a, const F& one) {
  const std::size_t n = a.rows();
  if (n % 2 == 1) return one - one;
  F result = one;
  for (std::size_t k = 0; k + 1 < n; k += 2) {
    std::size_t piv = k + 1;
    while (piv < n && is_zero(a(k, piv))) ++piv;
    if (piv == n) return one - one;
    if (piv != k + 1) {
      // Simultaneous row/column swap flips the sign.
      for (std::size_t j = 0; j < n; ++j) std::swap(a(k + 1, j), a(piv, j));
      for (std::size_t i = 0; i < n; ++i) std::swap(a(i, k + 1), a(i, piv));
      result = -result;
    }
    const F pv = a(k, k + 1);
    result *= pv;
    // Congruence by a unimodular row/column operation clears rows k, k+1
    // from the trailing block; only the trailing block is read afterwards.
    for (std::size_t i = k + 2; i < n; ++i) {
      const F x = -a(i, k + 1) / pv;
      const F y = a(i, k) / pv;
      if (is_zero(x) && is_zero(y)) continue;
      for (std::size_t j = k + 2; j < n; ++j) a(i, j) += x * a(k, j) + y * a(k + 1, j);
    }
  }
  return result;
}

/// Integer matrix helpers.
using IntMatrix = std::vector<std::vector<long long>>;

/// Diagonal of the Smith normal form (invariant factors, nonnegative,
/// length min(rows, cols)).
std::vector<long long> smith_invariants(IntMatrix m);

Matrix<Rational> to_rational(const IntMatrix& m);

std::string to_string(const Rational& q);

}  // namespace liefold
