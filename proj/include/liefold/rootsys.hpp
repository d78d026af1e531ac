#pragma once

// Root-system combinatorics for the simple types A-G: Cartan data, positive
// roots, weights, Weyl dimensions, weight multiplicities, tensor products and
// exponents.
//
// Conventions:
//   * Bourbaki numbering of simple roots.
//   * cartan[i][j] = <alpha_i^vee, alpha_j>, so simple root alpha_j written in
//     the fundamental-weight basis is column j of the Cartan matrix.
//   * Weights are integer vectors in the fundamental-weight basis; roots are
//     integer vectors in the simple-root basis.

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "liefold/errors.hpp"
#include "liefold/exact.hpp"

namespace liefold {

enum class Family { A, B, C, D, E, F, G };

char family_letter(Family f);
Family parse_family(char c);

/// Integral weight in the fundamental-weight basis.
struct Weight {
  std::vector<int> coords;

  Weight() = default;
  explicit Weight(std::vector<int> c) : coords(std::move(c)) {}
  static Weight zero(int rank) { return Weight(std::vector<int>(rank, 0)); }
  static Weight fundamental(int rank, int i);  // i is 1-based

  std::size_t size() const { return coords.size(); }
  int operator[](std::size_t i) const { return coords[i]; }
  int& operator[](std::size_t i) { return coords[i]; }
  bool is_dominant() const;
  bool is_zero() const;

  Weight& operator+=(const Weight& o);
  Weight& operator-=(const Weight& o);
  friend Weight operator+(Weight a, const Weight& b) { return a += b; }
  friend Weight operator-(Weight a, const Weight& b) { return a -= b; }
  friend Weight operator*(int k, Weight a) {
    for (auto& x : a.coords) x *= k;
    return a;
  }
  auto operator<=>(const Weight&) const = default;
  bool operator==(const Weight&) const = default;

  std::string str() const;
};

/// Simple-root coordinates of a root or root-lattice element.
using RootCoords = std::vector<int>;

/// Weight -> multiplicity. Used both for full characters and for formal
/// (possibly virtual) sums.
using Character = std::map<Weight, long long>;

struct Caps {
  long long character_dim = 10000;     // Freudenthal / character tables
  long long dimension_only = 10000000;  // Weyl-dimension-only computations
};

/// Result of moving a weight into the dominant chamber.
struct DominantConjugate {
  Weight weight;
  int length_parity = 0;  // parity of the number of reflections used
};

class RootDatum {
 public:
  /// Builds a simple root datum with Bourbaki numbering. Valid types are
  /// A(l>=1), B(l>=2), C(l>=2), D(l>=3), E6, F4, G2.
  static RootDatum build(Family family, int rank);
  static RootDatum parse(const std::string& name);  // e.g. "E6", "b3"

  Family family() const { return family_; }
  int rank() const { return rank_; }
  std::string name() const;
  const IntMatrix& cartan() const { return cartan_; }
  const std::vector<int>& symmetrizer() const { return symmetrizer_; }
  const std::vector<int>& exponents() const { return exponents_; }
  const std::vector<RootCoords>& positive_roots() const { return positive_roots_; }
  /// Positive roots written in the fundamental-weight basis (same order).
  const std::vector<Weight>& positive_roots_as_weights() const { return positive_root_weights_; }
  int dimension() const { return rank_ + 2 * static_cast<int>(positive_roots_.size()); }
  long long cartan_determinant() const { return det_; }

  /// Index of a positive root in positive_roots(), or -1.
  int root_index(const RootCoords& r) const;
  bool is_root(const RootCoords& r) const;  // positive or negative
  static int height(const RootCoords& r);

  Weight simple_root(int j) const;  // 0-based
  Weight to_weight(const RootCoords& r) const;
  /// Simple-root coordinates of a weight in the root lattice, else nullopt.
  std::optional<RootCoords> to_root_coords(const Weight& w) const;
  /// det(C) times the root coordinates (always integral).
  std::vector<long long> scaled_root_coords(const Weight& w) const;
  /// det(C) times the height sum_i c_i of a weight.
  long long scaled_height(const Weight& w) const;

  /// (mu, alpha) for alpha given in simple-root coordinates, in the
  /// normalization (alpha_i, alpha_j) = symmetrizer_i * cartan_ij.
  long long pair_with_root(const Weight& mu, const RootCoords& alpha) const;
  /// <mu, alpha^vee>.
  long long pair_with_coroot(const Weight& mu, const RootCoords& alpha) const;
  /// (alpha, alpha) in the same normalization.
  long long root_norm(const RootCoords& alpha) const;

  Weight reflect(const Weight& w, int i) const;  // simple reflection s_i, 0-based
  DominantConjugate dominant_conjugate(const Weight& w) const;
  std::vector<Weight> weyl_orbit(const Weight& w) const;
  Weight rho() const { return Weight(std::vector<int>(rank_, 1)); }

  /// Exponents recomputed from the dual partition of root heights.
  std::vector<int> exponents_via_heights() const;

  nlohmann::json to_json() const;
  /// Rebuilds from (family, rank) and checks the stored Cartan matrix and
  /// exponents agree.
  static RootDatum from_json(const nlohmann::json& j);

 private:
  RootDatum(Family family, int rank, IntMatrix cartan);
  void enumerate_positive_roots();
  void compute_symmetrizer();

  Family family_;
  int rank_;
  IntMatrix cartan_;
  IntMatrix adjugate_;  // det * C^{-1}
  long long det_ = 1;
  std::vector<int> symmetrizer_;
  std::vector<RootCoords> positive_roots_;
  std::vector<Weight> positive_root_weights_;
  std::map<RootCoords, int> root_lookup_;
  std::vector<int> exponents_;
};

/// Known exponent lists (Bourbaki tables), used as golden data.
std::vector<int> reference_exponents(Family family, int rank);

/// Product over positive roots of <lambda+rho, alpha^vee>/<rho, alpha^vee>.
Integer weyl_dimension(const RootDatum& datum, const Weight& lambda);

/// Multiplicities of the dominant weights of V(lambda), by Freudenthal's
/// recursion.
Character dominant_multiplicities(const RootDatum& datum, const Weight& lambda,
                                  const Caps& caps = {});
/// Full weight multiset of V(lambda).
Character freudenthal_multiplicities(const RootDatum& datum, const Weight& lambda,
                                     const Caps& caps = {});

/// Element of the representation ring: dominant weight -> integer class
/// coefficient. Zero coefficients are never stored.
class RepRingElement {
 public:
  RepRingElement() = default;
  static RepRingElement irreducible(const Weight& w, long long mult = 1);
  static RepRingElement trivial(int rank) { return irreducible(Weight::zero(rank)); }

  const std::map<Weight, long long>& terms() const { return terms_; }
  long long coefficient(const Weight& w) const;
  bool empty() const { return terms_.empty(); }
  void add(const Weight& w, long long m);

  RepRingElement& operator+=(const RepRingElement& o);
  RepRingElement& operator-=(const RepRingElement& o);
  RepRingElement& operator*=(long long k);
  friend RepRingElement operator+(RepRingElement a, const RepRingElement& b) { return a += b; }
  friend RepRingElement operator-(RepRingElement a, const RepRingElement& b) { return a -= b; }
  friend RepRingElement operator*(long long k, RepRingElement a) { return a *= k; }
  bool operator==(const RepRingElement&) const = default;

  bool is_effective() const;  // all coefficients >= 0
  std::string str() const;
  nlohmann::json to_json() const;

 private:
  std::map<Weight, long long> terms_;
};

/// Virtual dimension sum_i m_i dim V(lambda_i).
Integer dimension(const RootDatum& datum, const RepRingElement& x);

/// V(lambda) (x) V(mu) by the Brauer-Klimyk rule.
RepRingElement tensor_decompose(const RootDatum& datum, const Weight& lambda, const Weight& mu,
                                const Caps& caps = {});
/// V(lambda) (x) V(mu) by multiplying characters and peeling off highest
/// weights. Independent of tensor_decompose; used to cross-check it.
RepRingElement tensor_decompose_by_characters(const RootDatum& datum, const Weight& lambda,
                                              const Weight& mu, const Caps& caps = {});
/// Ring product, bilinear extension of tensor_decompose.
RepRingElement multiply(const RootDatum& datum, const RepRingElement& a,
                        const RepRingElement& b, const Caps& caps = {});

/// Decomposes a (Weyl-invariant, integral) character into irreducible
/// classes, peeling dominant weights in order of decreasing height with
/// lexicographic tie-break. Throws InvariantViolation if the remainder is not
/// zero at the end.
RepRingElement decompose_character(const RootDatum& datum, Character chi,
                                   const Caps& caps = {});
Character character_of(const RootDatum& datum, const RepRingElement& x, const Caps& caps = {});

Character character_product(const Character& a, const Character& b);
/// psi^k: weights scaled by k.
Character adams_operation(const Character& a, int k);
/// Character of the j-th exterior power via Newton's identities.
Character exterior_power(const Character& chi, int j);
long long character_dimension(const Character& chi);

}  // namespace liefold
