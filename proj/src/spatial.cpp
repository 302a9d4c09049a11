#include "extrukit/spatial.hpp"

#include <algorithm>

#include "extrukit/errors.hpp"

namespace extrukit {

namespace s4e {

std::string rcc8_property(Rcc8 r) {
  static const std::array<std::string, 8> locals = {"rcc8dc",  "rcc8ec",    "rcc8po",
                                                    "rcc8tpp", "rcc8ntpp",  "rcc8tppi",
                                                    "rcc8ntppi", "rcc8eq"};
  return ns + locals[static_cast<unsigned>(r)];
}

std::string rcc5_property(Rcc5 r) {
  static const std::array<std::string, 5> locals = {"rcc5dr", "rcc5po", "rcc5pp", "rcc5ppi",
                                                    "rcc5eq"};
  return ns + locals[static_cast<unsigned>(r)];
}

}  // namespace s4e

Graph spatial_vocabulary() {
  Graph g;
  g.add_prefix("s4e", s4e::ns);
  g.add_prefix("owl", owl::ns);
  g.add_prefix("rdf", rdf::ns);
  g.add_prefix("rdfs", rdfs::ns);
  g.add_prefix("dul", "http://www.ontologydesignpatterns.org/ont/dul/DUL.owl#");

  auto iri = [](const std::string& s) { return Term::iri(s); };
  const Term a = iri(rdf::type);
  const Term obj_prop = iri(owl::object_property);
  const Term sub_prop = iri(rdfs::sub_property_of);
  const Term spatial = iri(s4e::spatial_object);

  // The one class. Its alignment with an upper ontology stays an
  // annotation so the module remains self-contained.
  g.insert(spatial, a, iri(owl::class_));
  g.insert(spatial, iri(rdfs::label), Term::lang_literal("spatial object", "en"));
  g.insert(spatial, iri(rdfs::comment),
           Term::lang_literal("A region of space occupied by an extruder component.", "en"));
  g.insert(spatial, iri(rdfs::see_also),
           iri("http://www.ontologydesignpatterns.org/ont/dul/DUL.owl#PhysicalObject"));

  // Declarations, in lattice order: base layer, RCC5 layer, abstractions.
  std::vector<std::string> props;
  for (Rcc8 r : kRcc8All) props.push_back(s4e::rcc8_property(r));
  for (Rcc5 r : {Rcc5::DR, Rcc5::PO, Rcc5::PP, Rcc5::PPI, Rcc5::EQ}) {
    props.push_back(s4e::rcc5_property(r));
  }
  props.push_back(s4e::overlaps_not_equals);
  props.push_back(s4e::overlaps);
  for (const std::string& p : props) {
    g.insert(iri(p), a, obj_prop);
    g.insert(iri(p), iri(rdfs::domain), spatial);
    g.insert(iri(p), iri(rdfs::range), spatial);
  }

  // RCC8 -> RCC5 projection, then RCC5 -> overlap abstractions, plus the
  // two direct shortcuts; fifteen edges in total.
  for (Rcc8 r : kRcc8All) {
    g.insert(iri(s4e::rcc8_property(r)), sub_prop, iri(s4e::rcc5_property(to_rcc5(r))));
  }
  for (Rcc5 r : {Rcc5::PO, Rcc5::PP, Rcc5::PPI}) {
    g.insert(iri(s4e::rcc5_property(r)), sub_prop, iri(s4e::overlaps_not_equals));
  }
  g.insert(iri(s4e::overlaps_not_equals), sub_prop, iri(s4e::overlaps));
  g.insert(iri(s4e::rcc5_property(Rcc5::EQ)), sub_prop, iri(s4e::overlaps));
  g.insert(iri(s4e::rcc8_property(Rcc8::EQ)), sub_prop, iri(s4e::overlaps));
  g.insert(iri(s4e::rcc8_property(Rcc8::PO)), sub_prop, iri(s4e::overlaps));

  // Characteristics. Symmetry for every self-converse relation at every
  // granularity; transitivity and reflexivity only where RCC sanctions it.
  for (Rcc8 r : {Rcc8::DC, Rcc8::EC, Rcc8::PO, Rcc8::EQ}) {
    g.insert(iri(s4e::rcc8_property(r)), a, iri(owl::symmetric_property));
  }
  for (Rcc5 r : {Rcc5::DR, Rcc5::PO, Rcc5::EQ}) {
    g.insert(iri(s4e::rcc5_property(r)), a, iri(owl::symmetric_property));
  }
  g.insert(iri(s4e::overlaps), a, iri(owl::symmetric_property));
  g.insert(iri(s4e::overlaps_not_equals), a, iri(owl::symmetric_property));

  for (Rcc8 r : {Rcc8::EQ, Rcc8::NTPP, Rcc8::NTPPI}) {
    g.insert(iri(s4e::rcc8_property(r)), a, iri(owl::transitive_property));
  }
  g.insert(iri(s4e::rcc8_property(Rcc8::EQ)), a, iri(owl::reflexive_property));

  g.insert(iri(s4e::rcc8_property(Rcc8::TPP)), iri(owl::inverse_of),
           iri(s4e::rcc8_property(Rcc8::TPPI)));
  g.insert(iri(s4e::rcc8_property(Rcc8::NTPP)), iri(owl::inverse_of),
           iri(s4e::rcc8_property(Rcc8::NTPPI)));
  g.insert(iri(s4e::rcc5_property(Rcc5::PP)), iri(owl::inverse_of),
           iri(s4e::rcc5_property(Rcc5::PPI)));

  // One chain axiom per deterministic cell of the composition table.
  for (const DeterministicChain& c : deterministic_chains()) {
    Term second = g.fresh_blank();
    Term head = g.fresh_blank();
    g.insert(head, iri(rdf::first), iri(s4e::rcc8_property(c.first)));
    g.insert(head, iri(rdf::rest), second);
    g.insert(second, iri(rdf::first), iri(s4e::rcc8_property(c.second)));
    g.insert(second, iri(rdf::rest), iri(rdf::nil));
    g.insert(iri(s4e::rcc8_property(c.result)), iri(owl::property_chain_axiom), head);
  }
  return g;
}

Qcn network_from_graph(const Graph& g) {
  Qcn net;
  auto node_name = [](const Term& t) {
    return t.is_blank() ? "_:" + t.value : t.value;
  };
  for (Rcc8 r : kRcc8All) {
    const Term prop = Term::iri(s4e::rcc8_property(r));
    for (const Triple& t : g.match(std::nullopt, prop, std::nullopt)) {
      if (t.object.is_literal()) continue;
      int i = net.add_node(node_name(t.subject));
      int j = net.add_node(node_name(t.object));
      Rcc8Set cell = net.restrict(i, j, Rcc8Set{r});
      if (cell.empty()) {
        throw ContradictoryAssertionError("conflicting base relations between " +
                                          node_name(t.subject) + " and " + node_name(t.object));
      }
    }
  }
  return net;
}

}  // namespace extrukit
