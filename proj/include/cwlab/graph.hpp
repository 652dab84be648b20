#pragma once

#include <cwlab/bitset.hpp>

#include <compare>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace cwlab {

/// Raised on malformed graph input: out-of-range endpoints, loops,
/// overlapping vertex sets and similar contract violations.
class GraphError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Raised when an exhaustive routine is asked for an input beyond its configured size limit.
class BudgetError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct Edge {
    int u;
    int v;
    friend auto operator<=>(const Edge &, const Edge &) = default;
};

/// Sorted, duplicate-free list of vertex indices.
using VertexSet = std::vector<int>;

/// Simple undirected graph on vertices 0..order()-1, stored as symmetric
/// adjacency rows. Values are immutable; use GraphBuilder to construct.
class Graph {
public:
    Graph() = default;
    explicit Graph(int n) : n_(n), adj_(n, Bitset(n)) {}

    int order() const { return n_; }
    int size() const { return m_; }

    bool adjacent(int u, int v) const { return adj_[u].test(v); }
    const Bitset & neighbours(int u) const { return adj_[u]; }
    int degree(int u) const { return adj_[u].count(); }

    /// Edges with u < v, ascending lexicographic.
    std::vector<Edge> edges() const;

    Bitset all_vertices() const
    {
        Bitset b(n_);
        b.set_all();
        return b;
    }

    friend bool operator==(const Graph & a, const Graph & b) { return a.n_ == b.n_ && a.adj_ == b.adj_; }

private:
    friend class GraphBuilder;
    int n_ = 0;
    int m_ = 0;
    std::vector<Bitset> adj_;
};

class GraphBuilder {
public:
    explicit GraphBuilder(int n) : g_(n) {}
    explicit GraphBuilder(Graph g) : g_(std::move(g)) {}

    int order() const { return g_.n_; }
    bool has_edge(int u, int v) const { return g_.adj_[u].test(v); }
    void add_edge(int u, int v);
    void remove_edge(int u, int v);
    void toggle_edge(int u, int v);

    Graph build() && { return std::move(g_); }
    const Graph & peek() const { return g_; }

private:
    void check(int u, int v) const;
    Graph g_;
};

/// Builds a graph from an edge list; duplicates collapse. Throws GraphError on
/// loops or endpoints outside 0..n-1.
Graph make_graph(int n, std::span<const Edge> edges);
Graph make_graph(int n, std::initializer_list<Edge> edges);

Graph complement(const Graph & g);
/// h's vertices are shifted by g.order().
Graph disjoint_union(const Graph & g, const Graph & h);
/// Vertices of the result are the members of s in ascending order.
Graph induced_subgraph(const Graph & g, const VertexSet & s);
Graph delete_vertices(const Graph & g, const VertexSet & s);
/// Flips every adjacency with both ends in s.
Graph subgraph_complementation(const Graph & g, const VertexSet & s);
/// Flips every adjacency with one end in s and the other in t; s and t must be disjoint.
Graph bipartite_complementation(const Graph & g, const VertexSet & s, const VertexSet & t);
/// perm[v] is the new index of vertex v.
Graph relabel(const Graph & g, std::span<const int> perm);

int max_degree(const Graph & g);
std::vector<VertexSet> components(const Graph & g);
bool is_connected(const Graph & g);
bool is_clique(const Graph & g, const VertexSet & s);
bool is_independent(const Graph & g, const VertexSet & s);
/// Length of a shortest cycle, or -1 for forests.
int girth(const Graph & g);
/// Two-colouring (0/1 per vertex, the smallest vertex of each component gets 0),
/// or nullopt if the graph has an odd cycle.
std::optional<std::vector<int>> bipartition(const Graph & g);

/// Validates membership and normalizes to sorted unique order.
VertexSet normalize_set(const Graph & g, VertexSet s);
Bitset to_bitset(const Graph & g, const VertexSet & s);
VertexSet to_vertex_set(const Bitset & b);
VertexSet complement_set(const Graph & g, const VertexSet & s);

std::string format_set(const VertexSet & s);

} // namespace cwlab
