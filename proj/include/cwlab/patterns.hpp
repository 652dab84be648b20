#pragma once

#include <cwlab/graph.hpp>

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace cwlab {

enum class AtomKind { Path, Cycle, Complete, Star, Claw, Bull, X };

struct Atom {
    AtomKind kind;
    /// Path/Cycle/Complete/Star: {r}; Claw: {h, i, j}; X: {k}; Bull: {}.
    std::vector<int> params;
};

struct PatternTerm {
    int mult = 1;
    Atom atom;
};

/// A parsed pattern name: a disjoint union of atoms, optionally complemented.
struct Pattern {
    bool complemented = false;
    std::vector<PatternTerm> terms;
};

/// Grammar: ATOM := P<r> | C<r> | K<r> | K1,<r> | S<h>,<i>,<j> | bull | X<k>;
/// TERM := [mult]ATOM; NAME := TERM(+TERM)*, optionally prefixed by "co-"
/// (also "co-(NAME)"). Throws GraphError on malformed names or bad parameters.
Pattern parse_pattern(std::string_view name);
std::string format_pattern(const Pattern & p);
Graph instantiate(const Pattern & p);
/// parse_pattern followed by instantiate.
Graph pattern(std::string_view name);

Graph path_graph(int r);
Graph cycle_graph(int r);
Graph complete_graph(int r);
/// K1,r with centre 0.
Graph star_graph(int r);
/// S_{h,i,j}: centre 0, then the legs of length h, i, j in that order.
Graph subdivided_claw(int h, int i, int j);
/// Triangle 0,1,2 with pendant vertices 3 on 1 and 4 on 2.
Graph bull_graph();
/// The ten self-complementary graphs on eight vertices, k = 1..10.
Graph x_graph(int k);

/// Vertices of g inducing a copy of h (sorted), or nullopt if g is h-free.
std::optional<VertexSet> contains_induced(const Graph & g, const Graph & h);
bool is_induced_subgraph(const Graph & h, const Graph & g);
bool is_free(const Graph & g, const std::vector<Graph> & hs);

/// Every component is a path or a subdivided claw.
bool is_in_S(const Graph & g);

/// A complementing permutation f (uv edge iff f(u)f(v) non-edge), or nullopt.
std::optional<std::vector<int>> complementing_permutation(const Graph & g);
bool is_self_complementary(const Graph & g);
/// One representative per isomorphism class, sorted by canonical form.
std::vector<Graph> enumerate_self_complementary(int n, int max_n = 13);

struct UsefulReport {
    bool pass = true;
    int checked = 0;
    std::optional<Graph> counterexample;
};

/// All graphs of class S up to max_n vertices (components sorted, vertices
/// numbered component by component). Non-isomorphic.
std::vector<Graph> enumerate_class_S(int max_n);

/// For every graph of S with at most max_n vertices: free of
/// {K1,3+P1, 2P2, 3P1+P2, S1,1,2} iff an induced subgraph of
/// K1,3, P1+P4, 2P1+P3 or sP1.
UsefulReport lemma_useful_check(int max_n);
/// The biconditional for a single graph: {left side, right side}.
std::pair<bool, bool> lemma_useful_sides(const Graph & g);

} // namespace cwlab
