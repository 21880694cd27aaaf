#include "trilie/analysis.hpp"

#include <algorithm>
#include <sstream>

#include "trilie/errors.hpp"

namespace trilie {

namespace {

bool is_full(const Subspace& s) { return s.dim() == s.ambient(); }

}  // namespace

Subspace bracket_span(const ThreeLieAlgebra& alg, const Subspace& u, const Subspace& v,
                      const Subspace& w) {
  if (u.ambient() != alg.dim() || v.ambient() != alg.dim() || w.ambient() != alg.dim())
    throw Error(ErrorKind::ShapeMismatch, "bracket span ambient mismatch");
  const int n = alg.dim();
  std::vector<Vec> values;

  if (is_full(v) && is_full(w)) {
    // [x, B, B]: for each generator x, collect [x, e_p, e_q] keyed by the pair,
    // walking the stored triples once instead of all basis pairs.
    for (const auto& x : u.basis()) {
      std::map<std::array<int, 2>, Vec> acc;
      auto bump = [&](int p, int q, const Vec& gamma, const Rational& coef) {
        if (coef.is_zero()) return;
        auto [it, inserted] = acc.try_emplace({p, q}, zero_vec(n));
        add_scaled(it->second, gamma, coef);
      };
      for (const auto& [key, gamma] : alg.constants()) {
        const auto [a, b, c] = key;
        bump(b, c, gamma, x[static_cast<size_t>(a)]);
        bump(a, c, gamma, -x[static_cast<size_t>(b)]);
        bump(a, b, gamma, x[static_cast<size_t>(c)]);
      }
      for (auto& [pair, value] : acc)
        if (!is_zero(value)) values.push_back(std::move(value));
    }
    return Subspace::span(n, values);
  }

  if (is_full(w)) {
    // [x, y, B]: same idea with the third slot running over the basis.
    for (const auto& x : u.basis())
      for (const auto& y : v.basis()) {
        std::map<int, Vec> acc;
        auto bump = [&](int q, const Vec& gamma, const Rational& coef) {
          if (coef.is_zero()) return;
          auto [it, inserted] = acc.try_emplace(q, zero_vec(n));
          add_scaled(it->second, gamma, coef);
        };
        for (const auto& [key, gamma] : alg.constants()) {
          const auto [a, b, c] = key;
          bump(c, gamma, x[static_cast<size_t>(a)] * y[static_cast<size_t>(b)] -
                             x[static_cast<size_t>(b)] * y[static_cast<size_t>(a)]);
          bump(b, gamma, x[static_cast<size_t>(c)] * y[static_cast<size_t>(a)] -
                             x[static_cast<size_t>(a)] * y[static_cast<size_t>(c)]);
          bump(a, gamma, x[static_cast<size_t>(b)] * y[static_cast<size_t>(c)] -
                             x[static_cast<size_t>(c)] * y[static_cast<size_t>(b)]);
        }
        for (auto& [q, value] : acc)
          if (!is_zero(value)) values.push_back(std::move(value));
      }
    return Subspace::span(n, values);
  }

  for (const auto& a : u.basis())
    for (const auto& b : v.basis())
      for (const auto& c : w.basis()) {
        Vec value = alg.bracket(a, b, c);
        if (!is_zero(value)) values.push_back(std::move(value));
      }
  return Subspace::span(n, values);
}

std::vector<int> SeriesReport::dims() const {
  std::vector<int> out;
  out.reserve(terms.size());
  for (const auto& t : terms) out.push_back(t.dim());
  return out;
}

std::string SeriesReport::describe() const {
  std::ostringstream os;
  os << (kind == SeriesKind::Derived ? "derived series dims:" : "lower central series dims:");
  for (int d : dims()) os << " " << d;
  os << " | ";
  switch (verdict) {
    case SeriesVerdict::Solvable: os << index << "-solvable"; break;
    case SeriesVerdict::NotSolvableWithinBound: os << "not solvable within bound"; break;
    case SeriesVerdict::Nilpotent: os << "nilpotent of class " << index; break;
    case SeriesVerdict::NotNilpotentWithinBound:
      os << (stabilized ? "non-nilpotent (series stabilized)" : "not nilpotent within bound");
      break;
  }
  return os.str();
}

namespace {

int effective_bound(const ThreeLieAlgebra& alg, int bound) {
  if (bound > 0) return bound;
  return std::max(1, 2 * alg.dim());  // monotone chains stabilize well within this
}

}  // namespace

SeriesReport derived_series(const ThreeLieAlgebra& alg, int bound) {
  SeriesReport report;
  report.kind = SeriesKind::Derived;
  const Subspace whole = Subspace::full(alg.dim());
  Subspace current = whole;
  const int limit = effective_bound(alg, bound);
  for (int step = 1; step <= limit; ++step) {
    Subspace next = bracket_span(alg, current, current, whole);
    report.terms.push_back(next);
    if (next.is_zero()) {
      report.verdict = SeriesVerdict::Solvable;
      report.index = step - 1;  // B^{(r+1)} = 0 with B^{(r)} != 0 means r-solvable
      return report;
    }
    if (next == current) {
      report.verdict = SeriesVerdict::NotSolvableWithinBound;
      report.index = step;
      report.stabilized = true;
      return report;
    }
    current = std::move(next);
  }
  report.verdict = SeriesVerdict::NotSolvableWithinBound;
  report.index = limit;
  return report;
}

SeriesReport lower_central_series(const ThreeLieAlgebra& alg, int bound) {
  SeriesReport report;
  report.kind = SeriesKind::LowerCentral;
  const Subspace whole = Subspace::full(alg.dim());
  Subspace current = whole;
  const int limit = effective_bound(alg, bound);
  for (int step = 1; step <= limit; ++step) {
    Subspace next = bracket_span(alg, current, whole, whole);
    report.terms.push_back(next);
    if (next.is_zero()) {
      report.verdict = SeriesVerdict::Nilpotent;
      report.index = step;  // class 1 when [B,B,B] already vanishes
      return report;
    }
    if (next == current) {
      report.verdict = SeriesVerdict::NotNilpotentWithinBound;
      report.index = step;
      report.stabilized = true;  // monotone chain stabilized nonzero: definitive
      return report;
    }
    current = std::move(next);
  }
  report.verdict = SeriesVerdict::NotNilpotentWithinBound;
  report.index = limit;
  return report;
}

Subspace ideal_closure(const ThreeLieAlgebra& alg, const Subspace& seed) {
  if (seed.ambient() != alg.dim()) throw Error(ErrorKind::ShapeMismatch, "seed ambient mismatch");
  const Subspace whole = Subspace::full(alg.dim());
  Subspace current = seed;
  while (true) {
    Subspace grown = current.sum(bracket_span(alg, current, whole, whole));
    if (grown == current) return current;
    current = std::move(grown);
  }
}

std::string IdealReport::describe() const {
  std::ostringstream os;
  os << "ideal: " << (is_ideal ? "yes" : "no") << ", [I,I,I]=0: " << (abelian_weak ? "yes" : "no")
     << ", [I,I,B]=0: " << (abelian_strong ? "yes" : "no");
  return os.str();
}

IdealReport check_ideal(const ThreeLieAlgebra& alg, const Subspace& candidate) {
  IdealReport report;
  const Subspace whole = Subspace::full(alg.dim());
  report.is_ideal = candidate.includes(bracket_span(alg, candidate, whole, whole));
  report.abelian_weak = bracket_span(alg, candidate, candidate, candidate).is_zero();
  report.abelian_strong = bracket_span(alg, candidate, candidate, whole).is_zero();
  return report;
}

std::string MinimalityProbe::describe() const {
  std::ostringstream os;
  os << "basis-generated ideal closures:";
  for (const auto& c : closures) os << " " << c.dim();
  os << " | contained in all nonzero closures: " << (contained_in_all ? "yes" : "no");
  if (unique_minimum)
    os << " | unique minimal closure of dim " << minimum.dim();
  else
    os << " | no unique minimal closure";
  return os.str();
}

MinimalityProbe minimality_probe(const ThreeLieAlgebra& alg, const Subspace& ideal) {
  MinimalityProbe probe;
  const int n = alg.dim();
  for (int i = 0; i < n; ++i)
    probe.closures.push_back(ideal_closure(alg, Subspace::span(n, {unit_vec(n, i)})));

  probe.contained_in_all = true;
  for (const auto& c : probe.closures) {
    if (c.is_zero()) continue;
    if (!c.includes(ideal)) probe.contained_in_all = false;
  }

  // A unique minimal element among the nonzero closures, if there is one.
  int best = -1;
  for (int i = 0; i < n; ++i) {
    if (probe.closures[static_cast<size_t>(i)].is_zero()) continue;
    if (best < 0 || probe.closures[static_cast<size_t>(best)].includes(probe.closures[static_cast<size_t>(i)]))
      best = i;
  }
  if (best >= 0) {
    const Subspace& m = probe.closures[static_cast<size_t>(best)];
    bool minimal = true;
    for (const auto& c : probe.closures) {
      if (c.is_zero()) continue;
      if (!c.includes(m)) minimal = false;
    }
    probe.unique_minimum = minimal;
    if (minimal) probe.minimum = m;
  }
  return probe;
}

}  // namespace trilie
