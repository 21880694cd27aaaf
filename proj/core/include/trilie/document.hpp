#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "trilie/algebra.hpp"

namespace trilie {

struct ParsedDocument {
  ThreeLieAlgebra algebra;
  std::optional<Mat> derivation;
};

/// Parses an algebra document: dimension, optional basis labels, bracket records
/// with 1-based indices and rational-string coefficients, and an optional row-major
/// derivation matrix. Skew normalization applies on load; the fundamental identity
/// is NOT implicitly checked.
ParsedDocument parse_algebra_document(const std::string& text);

std::string serialize_algebra_document(const ThreeLieAlgebra& alg, const Mat* derivation = nullptr);

struct TableLine {
  std::array<int, 3> args{};        // 1-based, as printed
  std::map<int, Rational> coeffs;   // 1-based index -> coefficient
  std::string annotation;           // empty when the line is not annotated
};

struct TableDocument {
  int dim = 0;
  std::vector<TableLine> lines;
};

TableDocument parse_table_document(const std::string& text);
std::string serialize_table_document(const TableDocument& doc);

/// Full bracket table of an algebra as a reference-style document (canonical triples).
TableDocument table_of(const ThreeLieAlgebra& alg);

enum class DiffClass { Match, Conflicting, Missing };

struct DiffEntry {
  std::array<int, 3> key{};   // sorted 1-based triple
  std::array<int, 3> args{};  // as printed (equal to key for missing entries)
  std::string expected;       // reference value
  std::string found;          // regenerated value
  DiffClass cls = DiffClass::Match;
  bool annotated = false;
  std::string annotation;
};

struct DiffReport {
  std::vector<DiffEntry> entries;  // lexicographic on (key, args, expected)
  int matched = 0;      // non-annotated lines that agree
  int annotated = 0;    // annotated lines, agreeing or not
  int conflicting = 0;  // non-annotated lines that disagree
  int missing = 0;      // regenerated triples absent from the reference
  std::string describe() const;
};

/// Compares a regenerated algebra against a reference table line by line
/// (each line evaluated at its printed argument order), then lists regenerated
/// nonzero triples the reference does not cover.
DiffReport diff_table(const ThreeLieAlgebra& generated, const TableDocument& reference);

/// Renders a vector as a signed combination of labels, e.g. "x1 - 2*x3"; "0" when zero.
std::string format_combination(const Vec& v, const std::vector<std::string>& labels);

}  // namespace trilie
