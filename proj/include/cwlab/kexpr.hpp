#pragma once

#include <cwlab/graph.hpp>

#include <memory>
#include <string>
#include <string_view>
#include <vector>

namespace cwlab {

/// Immutable expression over the four clique-width operations. Subtrees are
/// shared between copies. A default-constructed expression is empty and
/// denotes the graph with no vertices.
class KExpression {
public:
    enum class Kind { Create, Union, Join, Rename };

    KExpression() = default;

    /// `vertex` tags the leaf with the graph vertex it stands for; it is not
    /// part of the text form.
    static KExpression create(int label, int vertex = -1);
    static KExpression unite(KExpression left, KExpression right);
    static KExpression join(int i, int j, KExpression child);
    static KExpression rename(int from, int to, KExpression child);

    bool empty() const { return ! node_; }
    Kind kind() const;
    /// Create: the label. Join/Rename: the first label.
    int a() const;
    /// Join/Rename: the second label. Create: the vertex tag.
    int b() const;
    const KExpression & left() const;
    const KExpression & right() const;
    /// The only child of a Join or Rename.
    const KExpression & child() const;

private:
    struct Node;
    explicit KExpression(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
    std::shared_ptr<const Node> node_;
};

struct KExpression::Node {
    Kind kind;
    int a = 0;
    int b = 0;
    KExpression left;
    KExpression right;
};

inline KExpression::Kind KExpression::kind() const { return node_->kind; }
inline int KExpression::a() const { return node_->a; }
inline int KExpression::b() const { return node_->b; }
inline const KExpression & KExpression::left() const { return node_->left; }
inline const KExpression & KExpression::right() const { return node_->right; }
inline const KExpression & KExpression::child() const { return node_->left; }

struct LabelledGraph {
    Graph graph;
    /// labels[v] for every vertex; vertices are numbered by leaf order.
    std::vector<int> labels;
};

/// Evaluates e. Vertices are the Create leaves in left-to-right order.
LabelledGraph evaluate(const KExpression & e);
/// Number of distinct labels mentioned anywhere in e.
int width(const KExpression & e);
std::vector<int> labels_used(const KExpression & e);
int leaf_count(const KExpression & e);
/// Vertex tags of the leaves in left-to-right order.
std::vector<int> leaf_vertices(const KExpression & e);
int node_count(const KExpression & e);

/// Relabels so the used labels become 1..width(e), preserving their order.
KExpression compress_labels(const KExpression & e);
/// Applies f to every vertex tag.
KExpression retag(const KExpression & e, const std::vector<int> & f);

/// Text form: (v l), (u e1 e2), (j i k e), (r i k e), single spaces. The empty
/// expression prints as the empty string.
std::string to_text(const KExpression & e);
/// Parses the text form; leaves are tagged 0, 1, 2, ... in leaf order.
/// Throws GraphError on malformed input or a join with i = k.
KExpression parse_kexpr(std::string_view text);

} // namespace cwlab
