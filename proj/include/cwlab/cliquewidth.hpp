#pragma once

#include <cwlab/graph.hpp>
#include <cwlab/kexpr.hpp>

#include <optional>
#include <stdexcept>
#include <vector>

namespace cwlab {

/// An expression together with the graph it builds. Leaves carry vertex tags,
/// so evaluate(expr) relabelled by the tags must equal graph exactly.
struct WidthCertificate {
    Graph graph;
    KExpression expr;
    int width = 0;

    /// Vertex of each leaf, in leaf order.
    std::vector<int> placement() const { return leaf_vertices(expr); }
};

/// Wraps expr (with vertex tags) as a certificate for g; width is computed.
WidthCertificate make_certificate(const Graph & g, const KExpression & expr);
/// True iff the tags are a permutation of V(g), the evaluated graph matches g
/// exactly under it, and width(expr) equals cert.width.
bool verify_certificate(const WidthCertificate & cert);
/// Throws std::logic_error with a description if verification fails.
void check_certificate(const WidthCertificate & cert, const char * what);

/// A bottom-up construction plan. Every node stands for an induced subgraph
/// G[S]; its classes partition S and each is a module relative to V - S.
/// Internal nodes unite their children and assign each child class to one of
/// their own classes.
struct DerivationNode {
    int vertex = -1;
    int left = -1;
    int right = -1;
    std::vector<Bitset> classes;
    std::vector<int> left_block;
    std::vector<int> right_block;
};

struct Derivation {
    std::vector<DerivationNode> nodes;
    int root = -1;
};

/// Turns a derivation into an expression whose width is at most the largest
/// number of classes at any node.
KExpression build_from_derivation(const Graph & g, const Derivation & d);

/// Re-derives an expression from the union structure of cert: each subtree
/// keeps only the classes forced by vertices outside it, and classes from the
/// two sides of a union share a label whenever that stays valid. Returns the
/// result if its width is not larger than cert.width, otherwise cert.
WidthCertificate compact(const WidthCertificate & cert);

struct ExactOptions {
    /// Inputs above this size throw BudgetError (hard limit 16).
    int max_n = 10;
    /// Stop once widths above this are ruled out.
    std::optional<int> budget;
};

struct ExactResult {
    /// The clique-width when exact, otherwise a proven lower bound.
    int width = 0;
    bool exact = true;
    std::optional<WidthCertificate> certificate;
};

/// Minimum k such that a k-expression for g exists, with a witness.
/// The empty graph has clique-width 0 and an empty expression.
ExactResult exact_cliquewidth(const Graph & g, const ExactOptions & options = {});
/// Shorthand: exact width, throwing BudgetError if not determined.
int cliquewidth(const Graph & g, int max_n = 10);

/// Thrown when a builder's precondition fails; carries the offending vertices.
class WitnessError : public std::invalid_argument {
public:
    WitnessError(const std::string & what, VertexSet witness) : std::invalid_argument(what), witness_(std::move(witness)) {}
    const VertexSet & witness() const { return witness_; }

private:
    VertexSet witness_;
};

/// Width at most 2, by recursion on components and co-components. Throws
/// WitnessError with an induced P4 if g is not P4-free.
WidthCertificate cograph_expression(const Graph & g);
/// Width at most 4 for graphs of maximum degree 2 (paths use at most 3).
/// Throws WitnessError with a vertex of degree 3 or more.
WidthCertificate degree2_expression(const Graph & g);

/// Clique-width through modular decomposition: the largest exact clique-width
/// among the quotient graphs of the decomposition.
int cw_via_primes(const Graph & g, int max_n = 10);

} // namespace cwlab
