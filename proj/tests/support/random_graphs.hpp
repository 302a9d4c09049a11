#pragma once

#include <random>

#include "extrukit/graph.hpp"

namespace extrukit::testsupport {

// A small random RDF graph (well under 50 triples) mixing schema axioms
// (subsumption, equivalence, domain/range, inverses, property
// characteristics, binary property chains) with instance assertions over
// short urn: IRIs. Deterministic for a given generator state.
Graph random_graph(std::mt19937& rng);

}  // namespace extrukit::testsupport
