#pragma once

#include <cwlab/cliquewidth.hpp>

namespace cwlab {

/// Certificate for the graph obtained by inserting a vertex v at index
/// `position` (default: at the end) of cert.graph, adjacent to `neighbours`
/// (indices in the new graph). Width at most 2k + 1 for k = cert.width:
/// every label is split by adjacency to v and v gets a label of its own.
/// Throws GraphError on an out-of-range position or neighbour.
WidthCertificate lift_add_vertex(const WidthCertificate & cert, const VertexSet & neighbours, int position = -1);

/// Certificate for subgraph_complementation(cert.graph, s). Width at most 2k
/// when s is the whole vertex set and at most 4k otherwise; s = {} returns
/// cert unchanged.
WidthCertificate lift_subgraph_complementation(const WidthCertificate & cert, const VertexSet & s);

/// Certificate for bipartite_complementation(cert.graph, s, t). Width at most
/// 6k; an empty s or t returns cert unchanged. Throws GraphError if s and t
/// overlap.
WidthCertificate lift_bipartite_complementation(const WidthCertificate & cert, const VertexSet & s, const VertexSet & t);

/// The width bounds above as functions of k.
int add_vertex_bound(int k);
int subgraph_complementation_bound(int k, bool whole_graph);
int bipartite_complementation_bound(int k);

} // namespace cwlab
