#pragma once

#include <cwlab/graph.hpp>

#include <optional>
#include <string>
#include <vector>

namespace cwlab {

/// Hexagonal wall of the given height: rows 0..h of 2h + 2 bricks' corners,
/// (x, y) with 0 <= x <= 2h + 1. Consecutive vertices of a row are adjacent;
/// (x, y) and (x, y + 1) are adjacent when x + y is odd. The two corners of
/// degree 1 are removed, leaving 2(h + 1)^2 - 2 vertices numbered row by row.
struct Wall {
    int height = 0;
    Graph graph;
    /// Grid position of each vertex.
    std::vector<std::pair<int, int>> position;
    /// Whether an edge of the wall is vertical, indexed like graph.edges().
    std::vector<bool> vertical;
};

/// Throws GraphError for height < 2.
Wall wall(int height);

struct Subdivision {
    Graph graph;
    /// For vertex v >= the original order: the original edge it lies on.
    std::vector<Edge> edge_of;
    int original_order = 0;
};

/// Replaces every edge {u, v} (in graph.edges() order) by a path with k new
/// internal vertices, numbered consecutively from the u end. Original
/// vertices keep their indices.
Subdivision subdivide_all(const Graph & g, int k);

/// A construction from a wall: how it was made and the class of every
/// vertex of the result (V1, V2, V3, A or B).
struct ConstructionTrace {
    int height = 0;
    int subdivisions = 0;
    std::vector<std::string> operations;
    std::vector<std::string> classes;
};

struct Construction {
    Graph graph;
    ConstructionTrace trace;
};

/// 1-subdivided wall; V1 original vertices, V2 on vertical edges, V3 on
/// horizontal edges; each class is complemented into a clique.
Construction thm5_graph(int height);
/// 1-subdivided wall with the neighbourhood of every original vertex made a
/// clique and the original vertices deleted.
Construction thm6_graph(int height);
/// 2-subdivided wall with the colour class A containing vertex 0 complemented.
Construction thm7_graph(int height);

/// Rebuilds a construction from its trace.
Graph replay(const ConstructionTrace & trace);
/// `CLASS <v> <name>` lines.
std::string format_trace(const ConstructionTrace & trace);

struct FreenessItem {
    std::string pattern;
    bool pass = false;
    VertexSet witness;
};

/// One item per pattern name, in the given order.
std::vector<FreenessItem> freeness_report(const Graph & g, const std::vector<std::string> & patterns);

/// The forbidden sets claimed for each construction.
std::vector<std::string> thm5_claimed();
std::vector<std::string> thm6_claimed();
std::vector<std::string> thm7_claimed();

} // namespace cwlab
