#pragma once

#include <cwlab/graph.hpp>

#include <string>
#include <utility>
#include <vector>

namespace cwlab {

enum class Status { Bounded, Unbounded, Open };
std::string to_string(Status s);

struct Verdict {
    Status status = Status::Open;
    /// Clause tag such as "thm4-1vii", "thm4-2iii", "open1-ii", "thm2".
    std::string citation;
    /// The condition that matched, in pattern notation.
    std::string detail;
    /// Open because no clause matched although none of the listed open cases
    /// applies either (a hole in the clause tables).
    bool coverage_gap = false;
};

/// H-free graphs: bounded iff h is an induced subgraph of P4.
Verdict classify_single(const Graph & h);

/// Free of a set of non-empty self-complementary graphs: bounded iff P1 or P4
/// is in the set. Throws GraphError if some member is empty or not
/// self-complementary.
Verdict classify_self_comp_set(const std::vector<Graph> & hs);

/// (h, co-h)-free graphs: bounded iff h or co-h is an induced subgraph of
/// K1,3, P1+P4, 2P1+P3 or sP1.
Verdict classify_pair_complement(const Graph & h);

/// (h, co-h) plus a family of self-complementary graphs on at least five
/// vertices other than the bull; same boundary as classify_pair_complement.
/// Throws GraphError ("inapplicable") if the family breaks those conditions.
Verdict classify_pair_with_family(const Graph & h, const std::vector<Graph> & family);

/// Least pair (by canonical form) over the equivalence orbit generated by
/// complementing both graphs and exchanging K3 with co-(P1+P3).
std::pair<Graph, Graph> normalize_bigenic(const Graph & h1, const Graph & h2);

/// Every unordered pair in the orbit of {h1, h2}, each sorted.
std::vector<std::pair<Graph, Graph>> bigenic_orbit(const Graph & h1, const Graph & h2);

/// Checks the unbounded clauses, then the bounded ones, then the open list,
/// over the whole orbit and both orders of each pair.
Verdict classify_bigenic(const Graph & h1, const Graph & h2);

struct ClauseHits {
    std::vector<std::string> bounded;
    std::vector<std::string> unbounded;
    std::vector<std::string> open;
};

/// Every clause tag that matches somewhere in the orbit.
ClauseHits bigenic_clause_hits(const Graph & h1, const Graph & h2);

} // namespace cwlab
