#pragma once

#include <cwlab/cliquewidth.hpp>

#include <optional>
#include <string>

namespace cwlab {

/// Cliques and independent sets that together partition V; blocks may be empty.
struct MixedPartition {
    std::vector<VertexSet> cliques;
    std::vector<VertexSet> indeps;

    friend bool operator==(const MixedPartition &, const MixedPartition &) = default;
};

/// Empty optional if p is a valid partition of g, otherwise vertices showing
/// why not (an uncovered or repeated vertex, or a bad pair in a block).
std::optional<VertexSet> mixed_partition_violation(const Graph & g, const MixedPartition & p);

/// Lexicographically first partition into max_cliques cliques and max_indep
/// independent sets (blocks may be empty), placing vertices in order and
/// trying cliques before independent sets. Throws BudgetError above 12 vertices.
std::optional<MixedPartition> find_mixed_partition(const Graph & g, int max_cliques, int max_indep);

enum class PairShape { Matching, CoMatching, Complete, AntiComplete };
std::string to_string(PairShape s);

bool is_matching_between(const Graph & g, const VertexSet & x, const VertexSet & y);
bool is_co_matching_between(const Graph & g, const VertexSet & x, const VertexSet & y);
bool is_complete_between(const Graph & g, const VertexSet & x, const VertexSet & y);
bool is_anticomplete_between(const Graph & g, const VertexSet & x, const VertexSet & y);

struct PairReduction {
    VertexSet delete_x;
    VertexSet delete_y;
    PairShape shape = PairShape::Matching;
};

/// Smallest deletion (fewest vertices, then lexicographic on the x side, then
/// the y side) of at most max_deletions vertices from each of x and y after
/// which the edges between the rest form a matching or a co-matching
/// (matching preferred).
std::optional<PairReduction> find_matching_reduction(const Graph & g, const VertexSet & x, const VertexSet & y,
                                                     int max_deletions = 1);
/// Same search for complete or anti-complete (anti-complete preferred).
std::optional<PairReduction> find_comp_anti_reduction(const Graph & g, const VertexSet & x, const VertexSet & y,
                                                      int max_deletions = 3);

using Width128 = unsigned __int128;
std::string to_decimal(Width128 v);

/// Upper bound on victor_pipeline widths over all inputs: the degree-2 bound 4
/// pushed back through 3 partial complementations, 6 and then 9 bipartite
/// complementations and 12 and then 54 vertex re-insertions.
Width128 victor_width_constant();

struct VictorReport {
    WidthCertificate certificate;
    int comp_anti_deletions = 0;
    int matching_deletions = 0;
    int bipartite_complementations = 0;
    int subgraph_complementations = 0;
    /// Width of the degree-2 certificate of the reduced graph.
    int residual_width = 0;
    /// The lift factors composed over the steps actually taken.
    Width128 bound = 0;
};

/// Reduces g to maximum degree 2 by deletions and complementations,
/// certifies the result and lifts the certificate back to g.
/// Throws WitnessError if g contains 2P1+P3 or its complement, or if the
/// partition is invalid or uses more than three cliques or independent sets.
VictorReport victor_pipeline_report(const Graph & g, const MixedPartition & part);
WidthCertificate victor_pipeline(const Graph & g, const MixedPartition & part);

} // namespace cwlab
