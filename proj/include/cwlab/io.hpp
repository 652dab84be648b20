#pragma once

#include <cwlab/graph.hpp>

#include <string>
#include <string_view>

namespace cwlab {

/// Text format: first line "n m", then m lines "u v" with u < v in ascending
/// order. Every line ends with LF.
std::string write_text(const Graph & g);
/// Accepts edges in any order but requires exactly m distinct valid edges.
Graph read_text(std::string_view text);

/// graph6 (see README). Leading ">>graph6<<" header and trailing newline are accepted.
std::string write_graph6(const Graph & g);
Graph read_graph6(std::string_view text);

Graph read_graph_file(const std::string & path);

} // namespace cwlab
