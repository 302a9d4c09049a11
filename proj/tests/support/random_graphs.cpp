#include "support/random_graphs.hpp"

#include <string>

namespace extrukit::testsupport {

namespace {

Term cls(int i) { return Term::iri("urn:C" + std::to_string(i)); }
Term prop(int i) { return Term::iri("urn:p" + std::to_string(i)); }
Term ind(int i) { return Term::iri("urn:x" + std::to_string(i)); }

}  // namespace

Graph random_graph(std::mt19937& rng) {
  Graph g;
  auto pick = [&](int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); };
  const int n_classes = 5;
  const int n_props = 5;
  const int n_inds = 7;

  const int schema_axioms = pick(3, 8);
  for (int i = 0; i < schema_axioms; ++i) {
    switch (pick(0, 9)) {
      case 0:
        g.insert(cls(pick(0, n_classes - 1)), Term::iri(rdfs::sub_class_of),
                 cls(pick(0, n_classes - 1)));
        break;
      case 1:
        g.insert(cls(pick(0, n_classes - 1)), Term::iri(owl::equivalent_class),
                 cls(pick(0, n_classes - 1)));
        break;
      case 2:
        g.insert(cls(pick(0, n_classes - 1)), Term::iri(owl::disjoint_with),
                 cls(pick(0, n_classes - 1)));
        break;
      case 3:
        g.insert(prop(pick(0, n_props - 1)), Term::iri(rdfs::sub_property_of),
                 prop(pick(0, n_props - 1)));
        break;
      case 4:
        g.insert(prop(pick(0, n_props - 1)), Term::iri(rdfs::domain),
                 cls(pick(0, n_classes - 1)));
        break;
      case 5:
        g.insert(prop(pick(0, n_props - 1)), Term::iri(rdfs::range),
                 cls(pick(0, n_classes - 1)));
        break;
      case 6:
        g.insert(prop(pick(0, n_props - 1)), Term::iri(owl::inverse_of),
                 prop(pick(0, n_props - 1)));
        break;
      case 7: {
        static const std::string kinds[] = {owl::symmetric_property, owl::transitive_property,
                                            owl::reflexive_property, owl::functional_property};
        g.insert(prop(pick(0, n_props - 1)), Term::iri(rdf::type),
                 Term::iri(kinds[pick(0, 3)]));
        break;
      }
      default: {  // super owl:propertyChainAxiom (first second)
        Term spine1 = g.fresh_blank();
        Term spine2 = g.fresh_blank();
        g.insert(prop(pick(0, n_props - 1)), Term::iri(owl::property_chain_axiom), spine1);
        g.insert(spine1, Term::iri(rdf::first), prop(pick(0, n_props - 1)));
        g.insert(spine1, Term::iri(rdf::rest), spine2);
        g.insert(spine2, Term::iri(rdf::first), prop(pick(0, n_props - 1)));
        g.insert(spine2, Term::iri(rdf::rest), Term::iri(rdf::nil));
        break;
      }
    }
  }

  const int instance_triples = pick(5, 13);
  for (int i = 0; i < instance_triples; ++i) {
    switch (pick(0, 3)) {
      case 0:
        g.insert(ind(pick(0, n_inds - 1)), Term::iri(rdf::type), cls(pick(0, n_classes - 1)));
        break;
      case 3:
        g.insert(ind(pick(0, n_inds - 1)), prop(pick(0, n_props - 1)),
                 pick(0, 1) ? Term::literal(std::to_string(pick(0, 99)), xsd::integer)
                            : Term::literal("tag" + std::to_string(pick(0, 9))));
        break;
      default:
        g.insert(ind(pick(0, n_inds - 1)), prop(pick(0, n_props - 1)),
                 ind(pick(0, n_inds - 1)));
        break;
    }
  }
  return g;
}

}  // namespace extrukit::testsupport
