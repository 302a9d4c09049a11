#pragma once

#include <map>
#include <set>
#include <utility>
#include <vector>

#include "extrukit/errors.hpp"
#include "extrukit/graph.hpp"

namespace extrukit {

// A two-step property chain: first followed by second entails super.
struct PropertyChain {
  Term first;
  Term second;
  Term super;
  bool operator==(const PropertyChain&) const = default;
  bool operator<(const PropertyChain& o) const;
};

// The schema triples of a graph, pulled apart for the rule engine.
struct RuleSet {
  std::set<std::pair<Term, Term>> sub_class_of;
  std::set<std::pair<Term, Term>> equivalent_classes;
  std::set<std::pair<Term, Term>> disjoint_classes;
  std::set<std::pair<Term, Term>> sub_property_of;
  std::map<Term, std::set<Term>> domains;
  std::map<Term, std::set<Term>> ranges;
  std::set<std::pair<Term, Term>> inverses;  // stored in both orientations
  std::set<Term> symmetric;
  std::set<Term> transitive;
  std::set<Term> reflexive;
  std::set<Term> functional;
  std::vector<PropertyChain> chains;
};

// Reads the schema vocabulary out of g. owl:propertyChainAxiom objects
// must be well-formed two-element lists of property IRIs, otherwise
// MalformedChainError.
RuleSet extract_schema(const Graph& g);

struct InferenceOptions {
  // When set, every reflexive property p yields (x, p, x) for each
  // individual x. Off by default: it floods instance data with
  // self-loops that no competency question needs.
  bool reflexive_rule = false;
};

// Forward-chains the rule set over a copy of input until fixpoint:
// subclass/subproperty transitivity, type inheritance, domain/range
// typing, inverses, symmetry, transitivity, two-step property chains and
// equivalence-as-mutual-subsumption. Derivations that would need a
// literal subject are skipped. The result contains the input verbatim.
Graph materialize(const Graph& input, const InferenceOptions& options = {});

struct Clash {
  enum class Kind { DisjointClash, FunctionalViolation };
  Kind kind;
  Term individual;
  // DisjointClash: the offending class pair (ordered by term order).
  // FunctionalViolation: property holds the property, values the
  // distinct objects seen.
  Term first;
  Term second;
  std::vector<Term> values;
  bool operator==(const Clash&) const = default;
};

// Reports disjointness and functionality violations of a (typically
// materialized) graph. Nothing is repaired; one report per individual
// and axiom. Results are sorted for stable output.
std::vector<Clash> check_consistency(const Graph& g);

}  // namespace extrukit
