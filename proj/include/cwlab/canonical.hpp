#pragma once

#include <cwlab/graph.hpp>

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

namespace cwlab {

/// Isomorphism-invariant key: the vertex count plus the adjacency bits of the
/// canonically relabelled graph (upper triangle, column order, MSB first).
struct CanonicalForm {
    int n = 0;
    std::vector<std::uint64_t> code;

    friend bool operator==(const CanonicalForm &, const CanonicalForm &) = default;
    friend auto operator<=>(const CanonicalForm &, const CanonicalForm &) = default;
};

struct CanonicalFormHash {
    std::size_t operator()(const CanonicalForm & c) const;
};

/// lab[v] is the position of v in the canonical order. Computed by colour
/// refinement with individualization; branches on twins are pruned.
std::vector<int> canonical_labelling(const Graph & g);
CanonicalForm canonical_form(const Graph & g);
/// relabel(g, canonical_labelling(g)); equal for isomorphic inputs.
Graph canonical_graph(const Graph & g);

/// Returns f with f[v] the image in h of vertex v of g, or nullopt.
std::optional<std::vector<int>> find_isomorphism(const Graph & g, const Graph & h);
bool is_isomorphic(const Graph & g, const Graph & h);

/// Calls visit(f) for every isomorphism g -> h, stopping early when visit
/// returns false. Plain backtracking, intended for small graphs.
void for_each_isomorphism(const Graph & g, const Graph & h, const std::function<bool(const std::vector<int> &)> & visit);

/// One canonical representative per isomorphism class on n vertices, sorted by
/// canonical form. Throws BudgetError when n > max_n.
std::vector<Graph> enumerate_graphs(int n, int max_n = 9);

/// Representatives of the n-vertex graphs in a hereditary class given by its
/// membership predicate. Only members of the class on n-1 vertices are extended.
std::vector<Graph> enumerate_hereditary(int n, const std::function<bool(const Graph &)> & member, int max_n = 10);

/// Same, returning every order 0..n in one pass (index = order).
std::vector<std::vector<Graph>> enumerate_hereditary_upto(int n, const std::function<bool(const Graph &)> & member, int max_n = 10);

} // namespace cwlab
