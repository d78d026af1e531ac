#pragma once

// Diagram foldings of simply-laced root data and the induced restriction of
// weights to the fixed torus.
//
// Index conventions (all 0-based in code, 1-based in printed output):
//   A_{2n+1} -> C_{n+1}   sigma(i) = 2n+2-i, beta_{n+1} long
//   A_{2n}   -> B_n       sigma(i) = 2n+1-i, beta_n short, coroot doubled
//   D_n      -> B_{n-1}   sigma swaps n-1 and n
//   D_4      -> G_2       orbits {1,3,4}, {2}; beta_2 long
//   E_6      -> F_4       beta_1..beta_4 from orbits {2}, {4}, {3,5}, {1,6}

#include <string>
#include <vector>

#include "json.hpp"
#include "liefold/check.hpp"
#include "liefold/rootsys.hpp"

namespace liefold {

enum class FoldPair { A2n1_C, A2n_B, Dn_B, D4_G2, E6_F4, Identity };

std::string pair_name(FoldPair p);
FoldPair parse_pair(const std::string& s);
/// The five genuine foldings, in report order.
const std::vector<FoldPair>& all_pairs();

struct FoldingSpec {
  FoldPair pair;
  int n = 0;
  RootDatum source;
  RootDatum target;
  std::vector<int> sigma;                // permutation of source nodes
  int order = 1;
  std::vector<std::vector<int>> orbits;  // orbits[j] = source nodes folding to target node j
  std::vector<int> reps;                 // smallest node in each orbit
  IntMatrix coroot_fold;                 // beta_j^vee = sum_k coroot_fold[j][k] alpha_k^vee
  IntMatrix restriction;                 // rho(lambda) = restriction * lambda
  std::vector<bool> long_root;           // per target node

  int target_rank() const { return static_cast<int>(orbits.size()); }
  Weight restrict_weight(const Weight& lambda) const;
  /// rho(alpha_k), alpha_k a source simple root.
  Weight restrict_simple_root(int k) const;
  /// Cartan matrix <beta_j^vee, beta_j'> recomputed from the coroot folds.
  IntMatrix folded_cartan() const;

  nlohmann::json to_json() const;
  std::string table() const;  // human-readable layout of the folding
};

/// n is the family parameter: A_{2n+1} (n>=1), A_{2n} (n>=2), D_n (n>=3),
/// ignored for D4_G2 and E6_F4, and the rank of A_n for Identity.
FoldingSpec make_folding(FoldPair pair, int n);

/// Expected rho(varpi_i) for every source node, written down from the stated
/// restriction tables (not from the coroot folds).
std::vector<Weight> stated_restriction_table(const FoldingSpec& spec);

/// Recomputes every pairing <rho(varpi_i), beta_j^vee> and compares it with
/// the stated tables. Also checks the structural invariants of the spec.
std::vector<CheckRecord> verify_restriction_lemma(const FoldingSpec& spec);

struct DominantImage {
  std::vector<Weight> generators;   // distinct rho(varpi_i), sorted
  std::vector<long long> smith;     // Smith invariants of the restriction matrix
  long long lattice_index = 1;      // [target weight lattice : rho(source lattice)]
};

DominantImage dominant_image(const FoldingSpec& spec);
/// Compares dominant_image with the expected monoid: the full dominant cone,
/// or the one with the last generator doubled for A_{2n}.
CheckRecord verify_dominant_image(const FoldingSpec& spec);

}  // namespace liefold
