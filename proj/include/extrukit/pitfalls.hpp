#pragma once

#include <set>
#include <string>
#include <vector>

#include "extrukit/graph.hpp"

namespace extrukit {

// The two catalogue entries implemented: P02 "creating synonyms as
// classes" (classes declared mutually equivalent inside one namespace)
// and P04 "creating unconnected ontology elements" (declared classes or
// properties with no logical axiom beyond the declaration).
struct Finding {
  enum class Code { P02, P04 };
  Code code;
  std::vector<std::string> elements;  // P02: exactly 2 IRIs, P04: exactly 1
  std::string message;
  // Severity is "minor" for both implemented pitfalls.
  static constexpr const char* severity = "minor";

  bool operator==(const Finding&) const = default;
};

const std::string& to_string(Finding::Code code);

// Scans for the requested pitfall codes. allow_external lists IRI
// prefixes whose elements never fire P04 (alignment targets such as
// external machine-tool vocabularies are declared here without their
// defining axioms, which is residue of pruned imports, not a modeling
// error). Findings come back sorted by code, then IRI; the scan is pure
// and insensitive to triple insertion order.
std::vector<Finding> scan_pitfalls(
    const Graph& g,
    const std::set<Finding::Code>& codes = {Finding::Code::P02, Finding::Code::P04},
    const std::vector<std::string>& allow_external = {});

}  // namespace extrukit
