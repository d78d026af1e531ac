#pragma once

// Principal three-dimensional subalgebras: the principal nilpotent, its
// folded version inside a fixed subalgebra, completion to an sl2-triple and
// the decomposition of the adjoint module into sl2-strings.

#include <vector>

#include "liefold/chevalley.hpp"

namespace liefold {

/// [h,x] = 2x, [h,y] = -2y, [x,y] = h. x is the nilpositive element.
struct Sl2Triple {
  Vec<Rational> x, h, y;
  int homogeneous_solutions = 0;  // dim of the solution space of the homogeneous system for y
};

/// sum_i e_{alpha_i}.
Vec<Rational> principal_nilpotent(const LieRealization& g);

enum class FoldedSum {
  PowerSum,  // sum_n sum_{i=1}^{ord} sigma^i(e_{rep n})
  OrbitSum,  // sum_n sum_{k in orbit n} e_k
};

/// sigma-fixed principal nilpotent built from the orbit representatives.
/// Throws InvariantViolation if some orbit contribution vanishes or the
/// result is not sigma-fixed.
Vec<Rational> folded_principal_nilpotent(const FoldingSpec& spec, const LieRealization& g,
                                         const Matrix<Rational>& sigma, FoldedSum mode = FoldedSum::PowerSum);

/// Smallest k with (ad v)^k = 0; throws InvalidInput if v is not nilpotent.
int nilpotency_index(const LieRealization& g, const Vec<Rational>& v);

struct PrincipalCheck {
  int centralizer_dim = 0;
  bool principal = false;
};
/// dim ker(ad v); principal iff it equals the rank. v must be nilpotent.
PrincipalCheck is_principal(const LieRealization& g, const Vec<Rational>& v);
/// The same check for v inside a subalgebra k of g: dim of the centralizer of
/// v in k, compared with rank_k.
PrincipalCheck is_principal_in(const LieRealization& g, const SubalgebraEmbedding& k, int rank_k,
                               const Vec<Rational>& v);

/// Completes a principal nilpositive element sum a_i e_i (all a_i != 0) to an
/// sl2-triple with h = 2 rho^vee. Throws InvalidInput for other inputs and
/// InvariantViolation if the linear system for y is inconsistent.
Sl2Triple complete_sl2(const LieRealization& g, const Vec<Rational>& x);

struct Sl2String {
  int m = 0;                          // highest ad-h eigenvalue is 2m
  std::vector<Vec<Rational>> vectors;  // v, (ad y) v, ..., (ad y)^{2m} v
  int dim() const { return 2 * m + 1; }
};

struct IsotypicDecomposition {
  std::vector<Sl2String> components;  // sorted by m, declaration order inside an isotypic block
  std::vector<int> dims;
  // ad-h eigenvalue -> dimension of the highest-weight space, for every
  // eigenvalue whose highest-weight space has dimension > 1
  std::vector<std::pair<int, int>> multiple_highest_weights;
  std::vector<CheckRecord> checks;
};

/// Highest-weight vectors are ker(ad x) split by ad-h eigenvalue; strings are
/// generated by ad y. Inside a highest-weight space of dimension > 1 the basis
/// is orthogonalized for the positive pairing (u, v) -> -kappa(u, omega v),
/// omega the Chevalley involution, in declaration order.
IsotypicDecomposition decompose_adjoint(const LieRealization& g, const Sl2Triple& t);

/// Highest-weight vectors of the triple lying in k, grouped by eigenvalue;
/// returns the string dimensions of k under the triple (sorted) and checks
/// that each is one of the ambient components.
struct SubDecomposition {
  std::vector<int> dims;
  std::vector<CheckRecord> checks;
};
SubDecomposition decompose_in_subalgebra(const LieRealization& g, const Sl2Triple& t,
                                         const SubalgebraEmbedding& k, const IsotypicDecomposition& ambient);

/// Checks of the triple relations.
CheckRecord verify_triple(const LieRealization& g, const Sl2Triple& t);

}  // namespace liefold
