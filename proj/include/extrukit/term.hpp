#pragma once

#include <cstddef>
#include <functional>
#include <string>

namespace extrukit {

namespace xsd {
inline const std::string ns = "http://www.w3.org/2001/XMLSchema#";
inline const std::string string_ = ns + "string";
inline const std::string boolean = ns + "boolean";
inline const std::string integer = ns + "integer";
inline const std::string decimal = ns + "decimal";
inline const std::string double_ = ns + "double";
inline const std::string float_ = ns + "float";
inline const std::string date_time = ns + "dateTime";
}  // namespace xsd

namespace rdf {
inline const std::string ns = "http://www.w3.org/1999/02/22-rdf-syntax-ns#";
inline const std::string type = ns + "type";
inline const std::string first = ns + "first";
inline const std::string rest = ns + "rest";
inline const std::string nil = ns + "nil";
inline const std::string lang_string = ns + "langString";
inline const std::string property = ns + "Property";
}  // namespace rdf

namespace rdfs {
inline const std::string ns = "http://www.w3.org/2000/01/rdf-schema#";
inline const std::string sub_class_of = ns + "subClassOf";
inline const std::string sub_property_of = ns + "subPropertyOf";
inline const std::string domain = ns + "domain";
inline const std::string range = ns + "range";
inline const std::string label = ns + "label";
inline const std::string comment = ns + "comment";
inline const std::string see_also = ns + "seeAlso";
inline const std::string is_defined_by = ns + "isDefinedBy";
inline const std::string class_ = ns + "Class";
}  // namespace rdfs

namespace owl {
inline const std::string ns = "http://www.w3.org/2002/07/owl#";
inline const std::string class_ = ns + "Class";
inline const std::string object_property = ns + "ObjectProperty";
inline const std::string datatype_property = ns + "DatatypeProperty";
inline const std::string annotation_property = ns + "AnnotationProperty";
inline const std::string named_individual = ns + "NamedIndividual";
inline const std::string ontology = ns + "Ontology";
inline const std::string restriction = ns + "Restriction";
inline const std::string thing = ns + "Thing";
inline const std::string symmetric_property = ns + "SymmetricProperty";
inline const std::string transitive_property = ns + "TransitiveProperty";
inline const std::string reflexive_property = ns + "ReflexiveProperty";
inline const std::string functional_property = ns + "FunctionalProperty";
inline const std::string inverse_functional_property = ns + "InverseFunctionalProperty";
inline const std::string inverse_of = ns + "inverseOf";
inline const std::string equivalent_class = ns + "equivalentClass";
inline const std::string disjoint_with = ns + "disjointWith";
inline const std::string property_chain_axiom = ns + "propertyChainAxiom";
inline const std::string some_values_from = ns + "someValuesFrom";
inline const std::string on_property = ns + "onProperty";
inline const std::string version_info = ns + "versionInfo";
inline const std::string imports = ns + "imports";
}  // namespace owl

enum class TermKind { Iri, BlankNode, Literal };

// An RDF term. Equality is plain field equality: no value-space
// normalization happens at this layer ("1.0" and "1.00" are distinct).
struct Term {
  TermKind kind = TermKind::Iri;
  std::string value;     // IRI string, blank node label, or literal lexical form
  std::string datatype;  // literals only
  std::string lang;      // literals only; non-empty implies rdf:langString

  static Term iri(std::string v);
  static Term blank(std::string label);
  static Term literal(std::string lex, std::string datatype = xsd::string_);
  static Term lang_literal(std::string lex, std::string tag);

  bool is_iri() const { return kind == TermKind::Iri; }
  bool is_blank() const { return kind == TermKind::BlankNode; }
  bool is_literal() const { return kind == TermKind::Literal; }

  bool operator==(const Term&) const = default;
  bool operator<(const Term& other) const;
};

struct Triple {
  Term subject;    // Iri or BlankNode
  Term predicate;  // always an Iri
  Term object;     // any term

  bool operator==(const Triple&) const = default;
  bool operator<(const Triple& other) const;
};

struct TermHash {
  std::size_t operator()(const Term& t) const;
};

struct TripleHash {
  std::size_t operator()(const Triple& t) const;
};

}  // namespace extrukit
