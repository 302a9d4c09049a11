#pragma once

#include <stdexcept>
#include <string>

namespace extrukit {

// Thrown by the Turtle reader and the query parser. Positions are
// 1-based and point at the offending token's first character.
struct ParseError : std::runtime_error {
  enum class Kind { Syntax, UnknownPrefix, BadLiteral, UnterminatedString };

  ParseError(Kind k, int line, int column, const std::string& what_arg)
      : std::runtime_error("line " + std::to_string(line) + ", column " +
                           std::to_string(column) + ": " + what_arg),
        kind(k),
        line(line),
        column(column) {}

  Kind kind;
  int line;
  int column;
};

// owl:propertyChainAxiom whose object is not a well-formed two-element list.
struct MalformedChainError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A class hierarchy with a subClassOf cycle has no depth metrics.
struct CycleDetectedError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A spatial edge asserts two different base relations for the same pair.
struct ContradictoryAssertionError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Fixture module name not recognised by the catalogue.
struct UnknownModuleError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace extrukit
