#pragma once

#include <string>
#include <vector>

#include "trilie/algebra.hpp"
#include "trilie/subspace.hpp"

namespace trilie {

/// Span of all brackets [u, v, w] with u, v, w running over the three generating sets.
Subspace bracket_span(const ThreeLieAlgebra& alg, const Subspace& u, const Subspace& v,
                      const Subspace& w);

enum class SeriesKind { Derived, LowerCentral };

enum class SeriesVerdict {
  Solvable,                 // derived series hits zero
  NotSolvableWithinBound,
  Nilpotent,                // lower central series hits zero
  NotNilpotentWithinBound,  // stabilized nonzero (definitive) or bound exhausted
};

struct SeriesReport {
  SeriesKind kind = SeriesKind::Derived;
  std::vector<Subspace> terms;  // first entry is [B,B,B]
  SeriesVerdict verdict = SeriesVerdict::Solvable;
  int index = 0;      // r for r-solvable, the class for nilpotent, else the stable step
  bool stabilized = false;
  std::vector<int> dims() const;
  std::string describe() const;
};

/// terms[r] = B^{(r+1)} with B^{(1)} = [B,B,B] and B^{(r+1)} = [B^{(r)}, B^{(r)}, B].
/// Verdict "r-solvable" when B^{(r+1)} = 0 first happens (r = 0 for an abelian algebra).
SeriesReport derived_series(const ThreeLieAlgebra& alg, int bound = -1);

/// terms[r] = B^{r+1} with B^1 = [B,B,B] and B^{r+1} = [B^r, B, B].
/// Nilpotent of class r when B^r = 0 first happens; a nonzero stable term is definitive
/// evidence of non-nilpotency.
SeriesReport lower_central_series(const ThreeLieAlgebra& alg, int bound = -1);

/// Least subspace containing seed that is closed under bracketing with the whole
/// algebra, computed by fixpoint iteration.
Subspace ideal_closure(const ThreeLieAlgebra& alg, const Subspace& seed);

struct IdealReport {
  bool is_ideal = false;        // [I, B, B] in I
  bool abelian_weak = false;    // [I, I, I] = 0
  bool abelian_strong = false;  // [I, I, B] = 0
  std::string describe() const;
};

IdealReport check_ideal(const ThreeLieAlgebra& alg, const Subspace& candidate);

/// Certifies minimality only among the ideals generated by single basis vectors.
struct MinimalityProbe {
  std::vector<Subspace> closures;     // ideal_closure(<e_i>) for each basis vector
  bool contained_in_all = false;      // the probed ideal sits inside every nonzero closure
  bool unique_minimum = false;        // the closures have a unique minimal element
  Subspace minimum;                   // meaningful when unique_minimum
  std::string describe() const;
};

MinimalityProbe minimality_probe(const ThreeLieAlgebra& alg, const Subspace& ideal);

}  // namespace trilie
