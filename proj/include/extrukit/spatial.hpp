#pragma once

#include <string>

#include "extrukit/graph.hpp"
#include "extrukit/rcc8.hpp"

namespace extrukit {

namespace s4e {
inline const std::string ns =
    "http://bdi.si.ehu.es/bdi/ontologies/ExtruOnt/spatial4ExtruOnt#";
inline const std::string spatial_object = ns + "SpatialObject";
inline const std::string overlaps = ns + "overlaps";
inline const std::string overlaps_not_equals = ns + "overlapsNotEquals";

// s4e:rcc8dc ... s4e:rcc8eq
std::string rcc8_property(Rcc8 r);
// s4e:rcc5dr ... s4e:rcc5eq
std::string rcc5_property(Rcc5 r);
}  // namespace s4e

// The spatial module as a graph: one class, the eight RCC8 and five RCC5
// object properties plus the two overlap abstractions, their subsumption
// lattice, characteristics, domains/ranges, and one property chain per
// deterministic composition-table cell. Construction is deterministic,
// so serializing it always yields the same document.
Graph spatial_vocabulary();

// Collects the base-relation assertions (s4e:rcc8*) of g into a constraint
// network. Subjects and objects become nodes named by IRI (or "_:label").
// Throws ContradictoryAssertionError when the assertions for a pair leave
// no possible relation.
Qcn network_from_graph(const Graph& g);

}  // namespace extrukit
