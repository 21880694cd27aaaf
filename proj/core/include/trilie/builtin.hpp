#pragma once

#include <string>
#include <vector>

#include "trilie/document.hpp"

namespace trilie {

/// Identifiers of the shipped example inputs.
std::vector<std::string> builtin_ids();

/// Algebra document (input algebra plus derivation) for a shipped example.
std::string builtin_algebra_document(const std::string& id);

/// Reference bracket table for a shipped example, with known-discrepant lines
/// annotated so a diff can tell "engine disagrees with the reference" apart from
/// "the reference disagrees with itself".
std::string builtin_reference_table(const std::string& id);

}  // namespace trilie
