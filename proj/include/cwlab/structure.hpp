#pragma once

#include <cwlab/graph.hpp>

#include <optional>
#include <vector>

namespace cwlab {

bool is_module(const Graph & g, const VertexSet & x);
/// Smallest module containing u and v: keep adding vertices outside the set
/// that distinguish it until none remain.
VertexSet module_closure(const Graph & g, int u, int v);

/// A module X with 1 < |X| < n, or nullopt if g is prime. Exhaustive subset
/// search (smallest size first, then lexicographic) for n <= exhaustive_limit,
/// pairwise closure above.
std::optional<VertexSet> find_nontrivial_module(const Graph & g, int exhaustive_limit = 12);
bool is_prime(const Graph & g);
/// Independent primality test through pairwise module closure.
bool is_prime_by_closure(const Graph & g);

struct SplitPartition {
    VertexSet clique;
    VertexSet indep;
    friend bool operator==(const SplitPartition &, const SplitPartition &) = default;
};

/// The split partition with the lexicographically smallest clique side, or
/// nullopt if g is not split.
std::optional<SplitPartition> split_partition(const Graph & g);
/// Every split partition of g, sorted by clique side.
std::vector<SplitPartition> all_split_partitions(const Graph & g);

int clique_number(const Graph & g);
int independence_number(const Graph & g);
/// A maximum clique, lexicographically smallest among those found first by the search.
VertexSet maximum_clique(const Graph & g);

struct FixedVertexReport {
    int vertex = -1;
    int fixed_points = 0;
    bool deletion_self_complementary = false;
};

/// For a self-complementary g of odd order: the fixed point of a complementing
/// permutation, with the number of fixed points and whether g - v is again
/// self-complementary. Throws GraphError if g is not self-complementary or n is even.
FixedVertexReport fixed_vertex(const Graph & g);
/// Same, but for a caller-supplied complementing permutation.
FixedVertexReport fixed_vertex(const Graph & g, const std::vector<int> & f);

struct SplitUniquenessReport {
    bool pass = false;
    int partitions = 0;
    int clique_size = 0;
    int indep_size = 0;
};

/// For a self-complementary split graph of even order: exactly one split
/// partition, with both sides of size n/2. Throws GraphError on precondition failure.
SplitUniquenessReport unique_split_partition_check(const Graph & g);

struct RamseyResult {
    bool holds = false;
    /// When holds is false: an n x n red(1)/blue(0) matrix without a
    /// monochromatic K_{k,l}; rows as bit masks over columns.
    std::vector<std::uint32_t> witness;
};

/// Whether every red/blue colouring of K_{n,n} has a monochromatic K_{k,l}
/// (k rows and l columns, or l rows and k columns). Throws BudgetError for n > 6.
RamseyResult bipartite_ramsey_check(int k, int l, int n);
/// Independent check of a claimed colouring.
bool has_monochromatic_biclique(const std::vector<std::uint32_t> & rows, int n, int k, int l);

} // namespace cwlab
