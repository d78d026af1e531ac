#pragma once

// Restriction of g-modules to the folded subalgebra k along rho, the per-pair
// branching identities, and explicit preimages of the generators of R(K).

#include <map>
#include <string>
#include <vector>

#include "json.hpp"
#include "liefold/check.hpp"
#include "liefold/chevalley.hpp"
#include "liefold/folding.hpp"

namespace liefold {

struct BranchingResult {
  Weight source;  // g-dominant
  Weight top;     // rho(source)
  RepRingElement decomposition;
  nlohmann::json trace = nlohmann::json::array();  // peeled k-weights in order
  long long top_multiplicity = 0;
  std::vector<CheckRecord> checks;
};

/// Pushes the weights of V(lambda) through rho into a k-character.
Character restrict_character(const FoldingSpec& spec, const Character& chi);

/// Decomposes V(lambda) restricted to k. Throws InvariantViolation on a
/// negative multiplicity or a dimension mismatch.
BranchingResult branch(const FoldingSpec& spec, const Weight& lambda, const Caps& caps = {});

/// phi on a class of R(G): linear extension of branch.
RepRingElement restrict_class(const FoldingSpec& spec, const RepRingElement& x, const Caps& caps = {});

struct CaseReport {
  std::string pair;
  int n = 0;
  std::vector<CheckRecord> checks;
  nlohmann::json decompositions = nlohmann::json::object();
  nlohmann::json to_json(bool with_timing = false) const;
};

/// The branching identities of the pair, plus the image-of-phi check.
CaseReport verify_case(FoldPair pair, int n, const Caps& caps = {});

/// 2 nu_1 is not a k-weight of V(varpi_4) of E6, by the root-lattice argument
/// and by pushing all weights through rho.
CheckRecord not_a_weight_check();

/// Integer polynomial in the classes phi[V(varpi_i)]. A monomial is the
/// sorted list of 1-based source nodes; the empty monomial is 1.
class PhiPolynomial {
 public:
  using Monomial = std::vector<int>;

  static PhiPolynomial constant(long long c);
  static PhiPolynomial generator(int i);

  const std::map<Monomial, long long>& terms() const { return terms_; }
  PhiPolynomial& operator+=(const PhiPolynomial& o);
  PhiPolynomial& operator-=(const PhiPolynomial& o);
  PhiPolynomial& operator*=(long long k);
  friend PhiPolynomial operator+(PhiPolynomial a, const PhiPolynomial& b) { return a += b; }
  friend PhiPolynomial operator-(PhiPolynomial a, const PhiPolynomial& b) { return a -= b; }
  friend PhiPolynomial operator*(long long k, PhiPolynomial a) { return a *= k; }
  friend PhiPolynomial operator*(const PhiPolynomial& a, const PhiPolynomial& b);
  bool operator==(const PhiPolynomial&) const = default;

  /// Evaluates in R(k) with phi[V_i] = images[i - 1].
  RepRingElement evaluate(const RootDatum& k, const std::vector<RepRingElement>& images, const Caps& caps = {}) const;
  std::string str() const;  // e.g. "phi[V2] - 2 phi[V1] + 2"

 private:
  void add(const Monomial& m, long long c);
  std::map<Monomial, long long> terms_;
};

struct SurjectivityReport {
  std::string pair;
  int n = 0;
  std::map<Weight, PhiPolynomial> preimages;  // generator of Lambda^+(K) -> polynomial
  std::vector<std::string> derivation;        // one line per solved class
  std::vector<CheckRecord> checks;
  nlohmann::json to_json(bool with_timing = false) const;
};

/// Solves for every generator of Lambda^+(K) as a polynomial in restricted
/// fundamental classes, triangularly: a class is solved once some phi[V_i] or
/// product of solved classes contains it with coefficient +-1 and contains
/// nothing else unsolved. Each preimage is re-expanded in R(k) and compared.
SurjectivityReport surjectivity_report(FoldPair pair, int n, const Caps& caps = {});

/// Decomposition of g as a k-module from the fixed subalgebra: k-highest-weight
/// vectors inside each eigenspace of sigma (rationally: ker(sigma - 1) and
/// ker(sigma^{r-1} + ... + 1)), compared with branch(adjoint weight).
CheckRecord adjoint_eigenspace_crosscheck(const FoldingSpec& spec, const LieRealization& g,
                                          const Matrix<Rational>& sigma, const SubalgebraEmbedding& k);

}  // namespace liefold
