#pragma once

#include "extrukit/graph.hpp"

namespace extrukit::testsupport {

// True when the two graphs hold the same triples up to a bijective
// renaming of blank node labels. Ground triples must match exactly;
// blank-involving triples are matched by signature refinement plus
// backtracking, so serializer-assigned labels never matter.
bool isomorphic(const Graph& a, const Graph& b);

}  // namespace extrukit::testsupport
