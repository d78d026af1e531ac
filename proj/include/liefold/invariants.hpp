#pragma once

// Invariant polynomials, invariant alternating forms and the checks built on
// them: primitive spaces, restriction to a subalgebra, transgression, the
// nonvanishing test on sl2-strings and the Chevalley restriction rank test.
//
// Forms are evaluators, never expanded. Evaluation is templated on the scalar
// ring and instantiated for Rational, ModP and Integer (integral inputs
// only; a non-integral coefficient throws std::domain_error).

#include <cstdint>
#include <memory>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "liefold/chevalley.hpp"
#include "liefold/tds.hpp"

namespace liefold {

struct SparseEntry {
  int row, col;
  Rational value;
};

/// A linear representation given by the images of the basis of a Lie algebra
/// (or of any vector space mapping into one).
struct RepModel {
  std::string name;
  int size = 0;  // matrix size
  int dim = 0;   // number of basis images
  std::vector<std::vector<SparseEntry>> images;
  std::optional<Matrix<Rational>> form;  // invariant form J, X^T J + J X = 0

  template <class F>
  Matrix<F> represent(const Vec<F>& v) const;
};

RepModel adjoint_model(const LieRealization& g);
/// Throws InvalidInput for exceptional types.
RepModel natural_model(const LieRealization& g);
/// Model of the composite V -> g -> gl: images of the columns of emb.
RepModel pullback(const RepModel& m, const Matrix<Rational>& emb);

enum class PolyKind { TracePower, Pfaffian };
enum class RepChoice { Auto, Natural, Adjoint };

const char* poly_kind_name(PolyKind k);

class InvariantPolynomial {
 public:
  InvariantPolynomial(int degree, PolyKind kind, std::shared_ptr<const RepModel> model, Rational scale = 1);

  int degree() const { return degree_; }
  PolyKind kind() const { return kind_; }
  const RepModel& model() const { return *model_; }
  const Rational& scale() const { return scale_; }
  int input_dim() const { return model_->dim; }
  std::string describe() const;

  InvariantPolynomial scaled(const Rational& c) const;
  InvariantPolynomial pulled_back(const Matrix<Rational>& emb) const;

  template <class F>
  F evaluate(const Vec<F>& v) const;
  /// Symmetric multilinear form P with P(v, ..., v) = p(v).
  template <class F>
  F polarize(const std::vector<Vec<F>>& args) const;
  /// d/dt p(v + t w) at t = 0.
  template <class F>
  F derivative(const Vec<F>& v, const Vec<F>& w) const;

 private:
  int degree_;
  PolyKind kind_;
  std::shared_ptr<const RepModel> model_;
  Rational scale_;
};

/// Basic invariant of degree k: tr(X^k) in the natural representation for
/// classical types and the adjoint one for exceptional types (overridable), or
/// Pf(J X) for D_l with k = l. Throws InvalidInput if k is not a generator
/// degree, if the Pfaffian is requested elsewhere, or if the chosen trace
/// power vanishes identically.
InvariantPolynomial invariant_polynomial(const LieRealization& g, int k, PolyKind kind = PolyKind::TracePower,
                                         RepChoice rep = RepChoice::Auto);
/// All basic invariants of degree k (two for D_l, l even, k = l).
std::vector<InvariantPolynomial> invariant_generators(const LieRealization& g, int k);

enum class FormKind { AltTrace, Transgression };
const char* form_kind_name(FormKind k);

/// Invariant alternating d-form.
///   AltTrace:      sum_pi sgn(pi) tr(X_pi1 ... X_pid) in a representation.
///   Transgression: sum_pi sgn(pi) P(x_pi1, [x_pi2, x_pi3], ..., [x_pi(d-1), x_pid]).
/// An optional precomposition restricts the form along a linear map.
class InvariantForm {
 public:
  static InvariantForm alt_trace(std::shared_ptr<const RepModel> model, int d);
  static InvariantForm transgression(const LieRealization& g, InvariantPolynomial p);

  int degree() const { return degree_; }
  FormKind kind() const { return kind_; }
  int input_dim() const;
  std::string describe() const;

  InvariantForm scaled(const Rational& c) const;
  /// The form v_1..v_d -> omega(emb v_1, ..., emb v_d).
  InvariantForm restricted(const Matrix<Rational>& emb, std::string label) const;

  template <class F>
  F evaluate(const std::vector<Vec<F>>& args) const;

 private:
  InvariantForm() = default;
  template <class F>
  F evaluate_direct(const std::vector<Vec<F>>& args) const;

  int degree_ = 0;
  FormKind kind_ = FormKind::AltTrace;
  Rational scale_ = 1;
  std::shared_ptr<const RepModel> model_;
  std::shared_ptr<const InvariantPolynomial> poly_;
  const LieRealization* lie_ = nullptr;  // must outlive the form
  std::shared_ptr<const Matrix<Rational>> pre_;
  std::string restriction_label_;
};

/// tau(p) as an explicit evaluator; degree 2k - 1. Throws CapExceeded for
/// k > 5.
InvariantForm transgress(const LieRealization& g, const InvariantPolynomial& p);
InvariantForm restrict_form(const InvariantForm& form, const SubalgebraEmbedding& k);

// --- arithmetic policy -----------------------------------------------------

enum class Arithmetic { Exact, Modular };

struct EvalPolicy {
  Arithmetic mode = Arithmetic::Modular;
  std::optional<std::uint64_t> prime;  // explicit first prime; otherwise derived from the seed
  std::uint64_t seed = 0;
};

/// Smallest prime above 2^31 + offset(seed).
std::uint64_t auto_prime(std::uint64_t seed);

template <class F>
F from_rational(const Rational& q, const F& proto);
template <>
inline Rational from_rational<Rational>(const Rational& q, const Rational&) {
  return q;
}
/// Throws std::domain_error for a non-integral value.
template <>
inline Integer from_rational<Integer>(const Rational& q, const Integer&) {
  if (q.get_den() != 1) throw std::domain_error("non-integral value in integer evaluation");
  return q.get_num();
}
template <>
inline ModP from_rational<ModP>(const Rational& q, const ModP& proto) {
  return ModP::from_rational(q, proto.modulus());
}
template <class F>
Vec<F> from_rational(const Vec<Rational>& v, const F& proto) {
  Vec<F> out;
  out.reserve(v.size());
  for (const auto& q : v) out.push_back(from_rational(q, proto));
  return out;
}

/// Seeded random rational vector: numerators in [-5, 5], denominators in
/// [1, max_den].
Vec<Rational> random_vector(std::mt19937_64& rng, int dim, int max_den = 3);

// --- checks ----------------------------------------------------------------

/// p(v + t[z, v]) has zero derivative at t = 0 for sampled (z, v).
CheckRecord check_polynomial_invariance(const LieRealization& g, const InvariantPolynomial& p, std::uint64_t seed,
                                        int samples = 20);
/// Alternating (repeated argument gives 0) and ad-invariant on sampled inputs.
/// lie is the algebra the form's inputs live in.
CheckRecord check_form_invariance(const LieRealization& lie, const InvariantForm& form, std::uint64_t seed,
                                  int samples = 3);

struct PrimitiveSpace {
  int degree = 0;
  int expected_dim = 0;  // #{i : 2 m_i + 1 = d}
  std::vector<InvariantForm> basis;
  std::vector<CheckRecord> checks;
};
/// Basis of P_d from the basic invariants of degree (d + 1) / 2; trace powers
/// give AltTrace forms, the Pfaffian its transgression.
PrimitiveSpace primitive_space(const LieRealization& g, int d, const EvalPolicy& policy = {});

/// Alternating trace forms and transgressions of the same trace power are
/// proportional; checked on sampled tuples.
CheckRecord check_constructions_proportional(const LieRealization& g, int k, std::uint64_t seed, int samples = 4);

/// Evaluates each form on the string basis of each d-dimensional component of
/// the adjoint decomposition. PASS iff the forms x components matrix has full
/// row rank, i.e. every nonzero form in the span is nonzero on some component.
/// Modular mode certifies at three primes; a rank drop falls back to exact.
/// Throws InvalidInput if no component has dimension d.
CheckRecord hitchin_check(const LieRealization& g, const IsotypicDecomposition& dec, int d,
                          const std::vector<InvariantForm>& forms, const EvalPolicy& policy);

/// Folded subalgebra as an abstract realization of the target type together
/// with the embedding matrix (columns = images of the target basis).
struct AbstractEmbedding {
  LieRealization k;
  Matrix<Rational> map;
  std::vector<CheckRecord> checks;
};
AbstractEmbedding abstract_embedding(const FoldingSpec& spec, const LieRealization& g, const SubalgebraEmbedding& fixed);

/// restrict(tau_g(p)) = tau_k(p restricted) on sampled tuples of k.
CheckRecord verify_transgression_commutes(const LieRealization& g, const AbstractEmbedding& emb,
                                          const InvariantPolynomial& p, std::uint64_t seed, int samples = 10);

/// Jacobian rank of the g-invariants of the k-generator degrees restricted to
/// the Cartan subalgebra of k, at up to five seeded random points.
CheckRecord chevalley_restriction_check(const FoldingSpec& spec, const LieRealization& g,
                                        const SubalgebraEmbedding& fixed, std::uint64_t seed);

}  // namespace liefold
