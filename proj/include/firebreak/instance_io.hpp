#pragma once

#include <iosfwd>
#include <string>
#include <variant>

#include "firebreak/graph.hpp"

namespace firebreak {

// A parsed instance in whichever numeric mode the file declares.
using LoadedInstance = std::variant<Instance<Rational>, Instance<double>>;

// Parses the JSON instance document:
//   { "mode": "rational"|"float",
//     "vertices": [{"id":int, "value":num|"p/q", "ignition":num|"p/q"}],
//     "edges": [{"tail":int, "head":int, "directed":bool,
//                "spread":num|"p/q", "cost":num|"p/q"}],
//     "budget": num|"p/q", "risk_threshold": optional }
// Rational literals are "p/q" strings with q > 0. Rational mode accepts
// integer JSON numbers but rejects fractional ones (mixing float
// literals into an exact instance is an error). Errors carry the
// offending field path.
LoadedInstance parse_instance(const std::string& text);
LoadedInstance load_instance_file(const std::string& path);

// Canonical serialization; parse(serialize(x)) reproduces x and
// serialize(parse(s)) is byte-identical for canonical files.
std::string serialize_instance(const Instance<Rational>& inst);
std::string serialize_instance(const Instance<double>& inst);
std::string serialize_instance(const LoadedInstance& inst);
void save_instance_file(const std::string& path, const LoadedInstance& inst);

void write_text_file(const std::string& path, const std::string& text);
std::string read_text_file(const std::string& path);

}  // namespace firebreak
