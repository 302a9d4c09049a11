#pragma once

#include <cstdint>
#include <optional>
#include <string>

namespace extrukit {

// Parses an xsd:dateTime lexical form (YYYY-MM-DDThh:mm:ss with optional
// fractional seconds and optional Z or +-hh:mm offset) into milliseconds
// since the Unix epoch, UTC. A missing offset means UTC. Returns nullopt
// for anything malformed, including out-of-range calendar fields.
std::optional<std::int64_t> parse_date_time_millis(const std::string& lex);

}  // namespace extrukit
