#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "extrukit/errors.hpp"
#include "extrukit/graph.hpp"

namespace extrukit {

// Parses a Turtle document. Supported syntax: @prefix, one optional
// @base (relative IRIs resolve by concatenation), 'a', ';' and ','
// continuations, <iri>, prefixed names, quoted strings with ^^datatype
// or @lang, bare integers/decimals/doubles/booleans, _:label blanks,
// [ ... ] anonymous blanks and ( ... ) collections. Parsing is
// all-or-nothing: any error throws ParseError and yields no graph.
// Blank node labels are document-scoped and renamed on the way in.
Graph parse_turtle(std::string_view text);

Graph parse_turtle_file(const std::filesystem::path& path);

// Deterministic writer: prefixes sorted by label, subject blocks sorted
// by rendered subject, rdf:type first inside a block, objects sorted.
// Well-formed rdf:first/rdf:rest spines come out as ( ... ) sugar.
// Output re-parses to an isomorphic graph.
std::string serialize_turtle(const Graph& g);

}  // namespace extrukit
