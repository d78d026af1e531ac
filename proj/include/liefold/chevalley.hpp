#pragma once

// Chevalley-basis realizations of simple Lie algebras with exact integer
// structure constants, diagram automorphisms acting on them, fixed
// subalgebras, and the defining matrix models of the classical types.
//
// Basis order: h_1..h_l, then e_alpha, f_alpha for each positive root alpha
// in RootDatum::positive_roots() order. f_alpha is e_{-alpha}.
//   [h_i, e_alpha] = <alpha, alpha_i^vee> e_alpha
//   [e_alpha, f_alpha] = h_alpha (the coroot, an integer combination of h_i)
//   [e_alpha, e_beta] = N_{alpha,beta} e_{alpha+beta},  N = +-(p+1)
// Signs: N = +(p+1) on extraspecial pairs for the order of positive_roots().

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "liefold/check.hpp"
#include "liefold/folding.hpp"
#include "liefold/rootsys.hpp"

namespace liefold {

struct Term {
  int index;
  long long coeff;
  bool operator==(const Term&) const = default;
};
using SparseVec = std::vector<Term>;
using BracketTable = std::vector<std::vector<SparseVec>>;  // [a][b] -> [x_a, x_b]

class LieRealization {
 public:
  static constexpr int kDefaultDimCap = 100;

  /// Builds and verifies (antisymmetry, Jacobi, Cartan relations, Killing
  /// invariance). Throws CapExceeded above dim_cap, InvariantViolation if a
  /// check fails.
  static LieRealization build(const RootDatum& datum, int dim_cap = kDefaultDimCap);
  /// Wraps an arbitrary table without verification (used to exercise the
  /// checks on deliberately broken data).
  static LieRealization from_table(const RootDatum& datum, BracketTable table);

  const RootDatum& datum() const { return datum_; }
  int dim() const { return static_cast<int>(table_.size()); }
  int rank() const { return datum_.rank(); }

  int h_index(int i) const { return i; }
  int e_index(int root) const { return rank() + 2 * root; }
  int f_index(int root) const { return rank() + 2 * root + 1; }
  /// Signed root coordinates of a root vector (empty for h_i).
  RootCoords root_of(int basis_index) const;
  /// Basis index of e_r for a positive or negative root r.
  int index_of_root(const RootCoords& r) const;
  std::string label(int a) const;

  const BracketTable& table() const { return table_; }
  const SparseVec& bracket_basis(int a, int b) const { return table_[a][b]; }
  /// N_{alpha,beta} for arbitrary roots, 0 if alpha+beta is not a root.
  long long structure_constant(const RootCoords& alpha, const RootCoords& beta) const;
  /// h_alpha = alpha^vee in the h_i basis, for a positive root.
  std::vector<long long> coroot(int root) const;

  template <class F>
  Vec<F> basis_vector(int a, const F& one) const {
    Vec<F> v(dim(), one - one);
    v[a] = one;
    return v;
  }
  template <class F>
  Vec<F> bracket(const Vec<F>& x, const Vec<F>& y) const;
  /// Matrix of ad(x) acting on column vectors.
  template <class F>
  Matrix<F> ad(const Vec<F>& x) const;
  Matrix<long long> ad_basis(int a) const;

  const IntMatrix& killing() const { return killing_; }
  template <class F>
  F killing_form(const Vec<F>& x, const Vec<F>& y) const;

  /// Chevalley involution: e_alpha -> -f_alpha, f_alpha -> -e_alpha, h -> -h.
  template <class F>
  Vec<F> chevalley_involution(Vec<F> x) const;

  nlohmann::json to_json() const;

 private:
  LieRealization(const RootDatum& datum, BracketTable table);
  void compute_killing();

  RootDatum datum_;
  BracketTable table_;
  IntMatrix killing_;
};

/// Structural checks of a realization: antisymmetry, Jacobi on all basis
/// triples, Cartan relations on generators, Killing invariance and
/// nondegeneracy.
std::vector<CheckRecord> verify_realization(const LieRealization& g);

/// Extends images of the Chevalley generators to all basis elements using
/// e_alpha = [e_i, e_beta] / N_{alpha_i, beta} (and the same on the negative
/// side). Only the images are computed; callers verify the homomorphism.
template <class T>
std::vector<T> extend_generators(const LieRealization& g, const std::vector<T>& h_img,
                                 const std::vector<T>& e_img, const std::vector<T>& f_img,
                                 const std::function<T(const T&, const T&)>& bracket,
                                 const std::function<T(const T&, const Rational&)>& scale);

struct AutomorphismReport {
  Matrix<Rational> matrix;        // columns are images of basis vectors
  std::string sign_correction;    // "none" unless a diagonal fix was needed
  int order = 1;
  std::vector<CheckRecord> checks;
};

/// The automorphism induced by the diagram symmetry of spec on the source
/// realization.
AutomorphismReport automorphism_matrix(const LieRealization& g, const FoldingSpec& spec);

struct SubalgebraEmbedding {
  std::vector<Vec<Rational>> basis;  // ambient coordinates
  // Chevalley generators of the fixed subalgebra, per folded node j.
  std::vector<Vec<Rational>> E, F, H;
  std::vector<CheckRecord> checks;
  int dim() const { return static_cast<int>(basis.size()); }
  /// Coordinates of the ambient vector v in the fixed basis, if v lies in it.
  std::optional<Vec<Rational>> coordinates(const Vec<Rational>& v) const;
};

SubalgebraEmbedding fixed_subalgebra(const LieRealization& g, const FoldingSpec& spec,
                                     const Matrix<Rational>& sigma);

/// Defining matrix model of a classical algebra (sl_{n+1}, so_{2n+1},
/// sp_{2n}, so_{2n}): one matrix per basis element, verified to be a
/// homomorphism. nullopt for exceptional types.
struct MatrixModel {
  std::string name;
  int size = 0;
  std::vector<Matrix<Rational>> images;  // per basis element
  Matrix<Rational> form;                 // invariant form J with X^T J + J X = 0 (orthogonal/symplectic)
};
std::optional<MatrixModel> natural_representation(const LieRealization& g);
/// Checks rho([a,b]) = [rho a, rho b] on all basis pairs.
bool is_representation(const LieRealization& g, const std::vector<Matrix<Rational>>& images);

// ---------------------------------------------------------------------------

template <class F>
Vec<F> LieRealization::bracket(const Vec<F>& x, const Vec<F>& y) const {
  const F zero = x.empty() ? F() : x[0] - x[0];
  Vec<F> out(dim(), zero);
  for (int a = 0; a < dim(); ++a) {
    if (is_zero(x[a])) continue;
    for (int b = 0; b < dim(); ++b) {
      if (is_zero(y[b])) continue;
      const auto& t = table_[a][b];
      if (t.empty()) continue;
      F xy = x[a] * y[b];
      for (const auto& term : t) out[term.index] += scalar_like<F>(term.coeff, xy) * xy;
    }
  }
  return out;
}

template <class F>
Matrix<F> LieRealization::ad(const Vec<F>& x) const {
  const F zero = x[0] - x[0];
  Matrix<F> m(dim(), dim(), zero);
  for (int a = 0; a < dim(); ++a) {
    if (is_zero(x[a])) continue;
    for (int b = 0; b < dim(); ++b)
      for (const auto& term : table_[a][b]) m(term.index, b) += scalar_like<F>(term.coeff, x[a]) * x[a];
  }
  return m;
}

template <class F>
F LieRealization::killing_form(const Vec<F>& x, const Vec<F>& y) const {
  F s = x[0] - x[0];
  for (int a = 0; a < dim(); ++a) {
    if (is_zero(x[a])) continue;
    for (int b = 0; b < dim(); ++b)
      if (killing_[a][b] != 0 && !is_zero(y[b])) s += scalar_like<F>(killing_[a][b], x[a]) * x[a] * y[b];
  }
  return s;
}

template <class F>
Vec<F> LieRealization::chevalley_involution(Vec<F> x) const {
  for (int i = 0; i < rank(); ++i) x[i] = -x[i];
  for (int r = 0; r < static_cast<int>(datum_.positive_roots().size()); ++r) {
    F e = x[e_index(r)], f = x[f_index(r)];
    x[e_index(r)] = -f;
    x[f_index(r)] = -e;
  }
  return x;
}

template <class T>
std::vector<T> extend_generators(const LieRealization& g, const std::vector<T>& h_img,
                                 const std::vector<T>& e_img, const std::vector<T>& f_img,
                                 const std::function<T(const T&, const T&)>& bracket,
                                 const std::function<T(const T&, const Rational&)>& scale) {
  const auto& roots = g.datum().positive_roots();
  const int l = g.rank();
  std::vector<std::optional<T>> img(g.dim());
  for (int i = 0; i < l; ++i) {
    img[g.h_index(i)] = h_img[i];
    img[g.e_index(i)] = e_img[i];
    img[g.f_index(i)] = f_img[i];
  }
  // positive_roots() is sorted by height, so the shorter root is done first.
  for (int r = l; r < static_cast<int>(roots.size()); ++r) {
    const RootCoords& alpha = roots[r];
    for (int i = 0; i < l; ++i) {
      RootCoords beta = alpha;
      beta[i] -= 1;
      int b = g.datum().root_index(beta);
      if (b < 0) continue;
      RootCoords ai(l, 0), nai(l, 0), nbeta = beta;
      ai[i] = 1;
      nai[i] = -1;
      for (auto& c : nbeta) c = -c;
      long long np = g.structure_constant(ai, beta);
      long long nn = g.structure_constant(nai, nbeta);
      if (np == 0 || nn == 0) throw InvariantViolation("zero structure constant on a root string");
      img[g.e_index(r)] = scale(bracket(e_img[i], *img[g.e_index(b)]), Rational(1) / static_cast<long>(np));
      img[g.f_index(r)] = scale(bracket(f_img[i], *img[g.f_index(b)]), Rational(1) / static_cast<long>(nn));
      break;
    }
  }
  std::vector<T> out;
  out.reserve(g.dim());
  for (auto& x : img) out.push_back(std::move(*x));
  return out;
}

}  // namespace liefold
