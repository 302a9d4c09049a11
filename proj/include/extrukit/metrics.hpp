#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "extrukit/errors.hpp"
#include "extrukit/graph.hpp"

namespace extrukit {

// Exact ratio. Ratios are never reported as floats internally so tests
// can demand exact equality (3/4 is 3/4, not 0.75000001).
struct Rational {
  std::int64_t num = 0;
  std::int64_t den = 1;

  Rational() = default;
  Rational(std::int64_t n, std::int64_t d);  // normalizes sign, reduces; d != 0

  double to_double() const { return static_cast<double>(num) / static_cast<double>(den); }
  std::string to_string() const;  // "3/4"
  bool operator==(const Rational&) const = default;
};

// Counting conventions (frozen for this artifact):
//  - classes: IRIs declared owl:Class/rdfs:Class, used as rdf:type objects,
//    or appearing as rdfs:subClassOf endpoints; IRIs in the RDF/RDFS/OWL/XSD
//    namespaces never count.
//  - declarations and annotations are not logical axioms; a chain axiom
//    counts once per owl:propertyChainAxiom triple, not per list triple;
//    inverse, equivalence and disjointness count per unordered pair.
//  - class assertions are rdf:type triples whose object lies outside the
//    built-in namespaces; individuals are their distinct subjects.
//  - property assertions split on object kind: literals are data property
//    assertions, everything else object property assertions.
struct AxiomCensus {
  std::size_t class_count = 0;
  std::size_t object_property_count = 0;
  std::size_t data_property_count = 0;
  std::size_t individual_count = 0;

  std::size_t sub_class_of = 0;
  std::size_t equivalent_classes = 0;
  std::size_t disjoint_classes = 0;
  std::size_t sub_object_property_of = 0;
  std::size_t inverse_object_properties = 0;
  std::size_t functional_object_property = 0;
  std::size_t transitive_object_property = 0;
  std::size_t symmetric_object_property = 0;
  std::size_t reflexive_object_property = 0;
  std::size_t object_property_domain = 0;
  std::size_t object_property_range = 0;
  std::size_t sub_property_chain_of = 0;
  std::size_t data_property_domain = 0;
  std::size_t data_property_range = 0;
  std::size_t class_assertion = 0;
  std::size_t object_property_assertion = 0;
  std::size_t data_property_assertion = 0;

  std::size_t logical_axiom_total() const;

  bool operator==(const AxiomCensus&) const = default;
};

AxiomCensus census(const Graph& g);

// Nullopt marks a ratio whose denominator is zero: undefined, never 0.
struct SchemaMetrics {
  std::optional<Rational> attribute_richness;      // dataProps / classes
  std::optional<Rational> inheritance_richness;    // subClassOf / classes
  std::optional<Rational> relationship_richness;   // objProps / (subClassOf + objProps)
  std::optional<Rational> equivalence_ratio;       // equivalentClasses / classes
  std::optional<Rational> axiom_class_ratio;       // logicalAxiomTotal / classes
  std::optional<Rational> inverse_relations_ratio; // 2 * inversePairs / objProps
  std::optional<Rational> class_relation_ratio;    // classes / (subClassOf + objProps)
};

SchemaMetrics schema_metrics(const AxiomCensus& c);

// Computed over the named-class subClassOf digraph. A path runs from a
// root down to a leaf and its length counts nodes; an isolated class is a
// one-node path. Levels are shortest distances from any root. Self-loop
// subclass edges are ignored; any longer cycle raises CycleDetectedError.
struct GraphMetrics {
  std::size_t root_cardinality = 0;
  std::size_t leaf_cardinality = 0;
  std::size_t sibling_cardinality = 0;
  std::size_t absolute_depth = 0;
  std::optional<Rational> average_depth;  // undefined when totalPaths = 0
  std::size_t maximal_depth = 0;
  std::size_t absolute_breadth = 0;
  std::optional<Rational> average_breadth;
  std::size_t maximal_breadth = 0;
  std::optional<Rational> leaf_fan_out_ratio;
  std::optional<Rational> sibling_fan_out_ratio;
  std::optional<Rational> tangledness;
  std::size_t total_paths = 0;
};

GraphMetrics graph_metrics(const Graph& g);

}  // namespace extrukit
