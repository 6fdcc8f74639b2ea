#pragma once

#include <iosfwd>
#include <string>

#include "graphcent/graph.hpp"

namespace graphcent {

/// On-disk graph encodings.
///
/// edge_list: first line "n", then one "i j" pair per line, ASCII decimal,
///            0-based, whitespace separated; '#' starts a comment that runs
///            to end of line; blank lines are ignored.
/// json:      object {"n": int, "edges": [[i,j], ...]}.
enum class GraphFormat { edge_list, json };

/// Parse a graph from a stream. Malformed input raises graph_error with
/// code parse_error and a message locating the offending line or field;
/// structurally invalid graphs raise the build_graph validation errors.
Graph read_graph(std::istream& in, GraphFormat format);

/// Serialize a graph in canonical form (sorted normalized edges), so
/// write(read(s)) is byte-stable and read(write(g)) == g.
void write_graph(std::ostream& out, const Graph& g, GraphFormat format);

/// Read a graph file, inferring the format from the extension
/// (".json" -> json, anything else -> edge_list). A missing or unreadable
/// file raises parse_error.
Graph read_graph_file(const std::string& path);

} // namespace graphcent
