#pragma once

#include <optional>
#include <string>
#include <vector>

#include "trilie/bialgebra.hpp"
#include "trilie/representation.hpp"

namespace trilie {

struct MatchedPairReport {
  bool ok = true;
  std::string stage;  // which axiom family failed
  std::vector<int> witness;
  std::string describe() const;
};

/// Verifies that (a1, a2, rho, chi) is a matched pair: both module structures,
/// rho(.,.) acting by derivations of a2 and chi(.,.) by derivations of a1, and the
/// four mixed compatibility identities, all exhaustively on basis tuples.
MatchedPairReport check_matched_pair(const ThreeLieAlgebra& a1, const ThreeLieAlgebra& a2,
                                     const Representation& rho, const Representation& chi);

struct JacobiReport {
  bool ok = true;
  int group = 0;                 // graded range family 1..4
  std::array<int, 5> witness{};  // five basis values (0-based)
  int pair_first = 0, pair_second = 0;  // positions forming the acting pair
  int star = -1;                        // position carrying the dual argument, -1 if none
  long families_checked = 0;
  std::string describe() const;
};

/// Evaluates the graded structure-constant identities that the fundamental identity
/// induces on the double space: for each of the four graded index groups, every way
/// of splitting five basis elements into an acting pair and a triple, with at most
/// one dual argument, must give a vanishing factored residual. The sums are computed
/// directly from the base constants, never through the double-space bracket.
JacobiReport check_jacobi_constraints(const ThreeLieAlgebra& alg, const InvolutiveDerivation& g);

struct DerImageReport {
  bool ok = true;
  std::string which;  // "adelta" or "apsi"
  std::array<int, 2> pair{};
  std::string detail;
  std::string describe() const;
};

struct PairingForm {
  Mat matrix;  // symmetric, non-degenerate
  Rational eval(const Vec& u, const Vec& v) const;
};

struct ManinTriple {
  ThreeLieAlgebra total;  // dim 4n
  Subspace part1, part2;
  PairingForm form;
};

/// Both semidirect tables on the 4n-dimensional space, basis ordered
/// x_1..x_n, x_1*..x_n*, y_1..y_n, y_1*..y_n*.
struct SemidirectTables {
  ThreeLieAlgebra b1;       // dim 2n
  ThreeLieAlgebra b2;       // dim 2n
  Representation adelta;    // pairs of b1 acting on b2 coordinates
  Representation apsi;      // pairs of b2 acting on b1 coordinates
  ThreeLieAlgebra bracket1; // dim 4n: b1 bracket + adelta action
  ThreeLieAlgebra bracket2; // dim 4n: b2 bracket + apsi action
};

/// Runs the pipeline up to the two 4n-dimensional bracket tables. Each table is
/// produced twice - generically as a coadjoint semidirect product and from the
/// graded case formulas - and any disagreement raises ClosedFormMismatch.
SemidirectTables semidirect_closed_forms(const ThreeLieAlgebra& alg, const InvolutiveDerivation& g);

/// Verifies that every adelta action matrix is a derivation of b2 and every apsi
/// action matrix is a derivation of b1.
DerImageReport check_derivation_images(const SemidirectTables& tables);
DerImageReport check_derivation_images(const ThreeLieAlgebra& alg, const InvolutiveDerivation& g);

struct PipelineOptions {
  bool verify_total_fi = true;
  bool check_cocycle = true;
};

/// Every artifact of the construction, kept for reporting.
struct ManinPipeline {
  ThreeLieAlgebra base;     // adapted input algebra
  InvolutiveDerivation grading;
  Mat adapt_map;            // change of basis from the adapted algebra into the input
  ThreeLieAlgebra b1;
  Tensor2 r;
  Tensor4 cybe;
  Comultiplication delta;
  ThreeLieAlgebra b2;
  SemidirectTables tables;
  ManinTriple triple;
};

ManinPipeline run_pipeline(const ThreeLieAlgebra& alg, const InvolutiveDerivation& g,
                           const PipelineOptions& opts = {});

/// Assembles and fully verifies the standard Manin triple on the double of the double.
ManinTriple build_manin(const ThreeLieAlgebra& alg, const InvolutiveDerivation& g);

/// Basis permutation transport: old basis index i becomes new_from_old[i].
ThreeLieAlgebra reindex(const ThreeLieAlgebra& alg, const std::vector<int>& new_from_old,
                        std::vector<std::string> labels);

}  // namespace trilie
