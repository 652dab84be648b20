#include <cwlab/lifts.hpp>

#include <algorithm>
#include <functional>
#include <map>
#include <set>

namespace cwlab {

int add_vertex_bound(int k) { return 2 * k + 1; }
int subgraph_complementation_bound(int k, bool whole_graph) { return whole_graph ? 2 * k : 4 * k; }
int bipartite_complementation_bound(int k) { return 6 * k; }

namespace {

void check_width(const WidthCertificate & out, int bound, const char * what)
{
    check_certificate(out, what);
    if (out.width > bound)
        throw std::logic_error(std::string(what) + ": width " + std::to_string(out.width) + " exceeds " + std::to_string(bound));
}

void check_set(const Graph & g, const VertexSet & s)
{
    for (int v : s)
        if (v < 0 || v >= g.order())
            throw GraphError("vertex " + std::to_string(v) + " out of range");
}

} // namespace

WidthCertificate lift_add_vertex(const WidthCertificate & cert, const VertexSet & neighbours, int position)
{
    const int n = cert.graph.order();
    if (position < 0)
        position = n;
    if (position > n)
        throw GraphError("insert position out of range");
    std::vector<bool> adj(n + 1, false);
    for (int u : neighbours) {
        if (u < 0 || u > n || u == position)
            throw GraphError("neighbour " + std::to_string(u) + " out of range");
        adj[u] = true;
    }
    std::vector<int> shift(n);
    for (int v = 0; v < n; ++v)
        shift[v] = v < position ? v : v + 1;

    GraphBuilder b(n + 1);
    for (const auto & [u, v] : cert.graph.edges())
        b.add_edge(shift[u], shift[v]);
    for (int u : neighbours)
        b.add_edge(u, position);
    Graph target = std::move(b).build();

    KExpression base = compress_labels(cert.expr);
    const int k = width(base);
    std::function<KExpression(const KExpression &)> lift = [&](const KExpression & e) -> KExpression {
        switch (e.kind()) {
        case KExpression::Kind::Create: {
            int v = shift[e.b()];
            return KExpression::create(adj[v] ? e.a() + k : e.a(), v);
        }
        case KExpression::Kind::Union:
            return KExpression::unite(lift(e.left()), lift(e.right()));
        case KExpression::Kind::Join: {
            KExpression c = lift(e.child());
            for (int di : {0, k})
                for (int dj : {0, k})
                    c = KExpression::join(e.a() + di, e.b() + dj, c);
            return c;
        }
        case KExpression::Kind::Rename:
            return KExpression::rename(e.a() + k, e.b() + k, KExpression::rename(e.a(), e.b(), lift(e.child())));
        }
        return {};
    };
    const int fresh = 2 * k + 1;
    KExpression e = KExpression::create(fresh, position);
    if (! base.empty()) {
        e = KExpression::unite(lift(base), e);
        for (int i = 1; i <= k; ++i)
            e = KExpression::join(i + k, fresh, e);
    }
    auto out = make_certificate(target, e);
    check_width(out, add_vertex_bound(cert.width), "lift_add_vertex");
    return out;
}

namespace {

// Rebuilds e so that every edge between the two sides of a union is created
// right at that union, according to the target graph. Labels become
// (old label, membership, side); `flip` says whether a pair of memberships
// has its adjacency inverted.
class ComplementLift {
public:
    ComplementLift(const WidthCertificate & cert, std::vector<int> membership, int memberships,
                   std::function<bool(int, int)> flip)
        : g_(cert.graph), member_(std::move(membership)), m_(memberships), flip_(std::move(flip))
    {
        base_ = compress_labels(cert.expr);
    }

    KExpression run()
    {
        std::vector<std::pair<int, int>> out;
        return build(base_, 0, out);
    }

private:
    int enc(int label, int m, int side) const { return ((label - 1) * m_ + m) * 2 + side + 1; }

    // `out` receives (vertex, original label) for every vertex below e.
    KExpression build(const KExpression & e, int side, std::vector<std::pair<int, int>> & out)
    {
        switch (e.kind()) {
        case KExpression::Kind::Create:
            out.emplace_back(e.b(), e.a());
            return KExpression::create(enc(e.a(), member_[e.b()], side), e.b());
        case KExpression::Kind::Join:
            return build(e.child(), side, out);
        case KExpression::Kind::Rename: {
            KExpression c = build(e.child(), side, out);
            if (e.a() == e.b())
                return c;
            for (auto & [v, l] : out)
                if (l == e.a())
                    l = e.b();
            for (int m = 0; m < m_; ++m)
                c = KExpression::rename(enc(e.a(), m, side), enc(e.b(), m, side), c);
            return c;
        }
        case KExpression::Kind::Union:
            break;
        }
        std::vector<std::pair<int, int>> lo, ro;
        KExpression l = build(e.left(), 0, lo);
        KExpression r = build(e.right(), 1, ro);
        KExpression u = KExpression::unite(l, r);

        // Original adjacency between label classes across the union.
        std::map<std::pair<int, int>, bool> edge;
        for (auto [x, a] : lo)
            for (auto [y, b] : ro) {
                bool adj = g_.adjacent(x, y);
                auto [it, fresh] = edge.try_emplace({a, b}, adj);
                if (! fresh && it->second != adj)
                    throw std::logic_error("certificate labels do not determine cross adjacency");
            }
        std::set<std::pair<int, int>> left_classes, right_classes;
        for (auto [x, a] : lo)
            left_classes.emplace(a, member_[x]);
        for (auto [y, b] : ro)
            right_classes.emplace(b, member_[y]);
        for (auto [a, ma] : left_classes)
            for (auto [b, mb] : right_classes)
                if (edge.at({a, b}) != flip_(ma, mb))
                    u = KExpression::join(enc(a, ma, 0), enc(b, mb, 1), u);
        for (auto [a, ma] : left_classes)
            if (side != 0)
                u = KExpression::rename(enc(a, ma, 0), enc(a, ma, side), u);
        for (auto [b, mb] : right_classes)
            if (side != 1)
                u = KExpression::rename(enc(b, mb, 1), enc(b, mb, side), u);
        out = std::move(lo);
        out.insert(out.end(), ro.begin(), ro.end());
        return u;
    }

    const Graph & g_;
    std::vector<int> member_;
    int m_;
    std::function<bool(int, int)> flip_;
    KExpression base_;
};

} // namespace

WidthCertificate lift_subgraph_complementation(const WidthCertificate & cert, const VertexSet & s)
{
    check_set(cert.graph, s);
    if (s.empty() || cert.expr.empty())
        return cert;
    const int n = cert.graph.order();
    std::vector<int> member(n, 0);
    for (int v : s)
        member[v] = 1;
    const bool whole = static_cast<int>(normalize_set(cert.graph, s).size()) == n;
    KExpression e;
    if (whole)
        e = ComplementLift(cert, std::vector<int>(n, 0), 1, [](int, int) { return true; }).run();
    else
        e = ComplementLift(cert, member, 2, [](int a, int b) { return a == 1 && b == 1; }).run();
    auto out = make_certificate(subgraph_complementation(cert.graph, s), compress_labels(e));
    check_width(out, subgraph_complementation_bound(cert.width, whole), "lift_subgraph_complementation");
    return out;
}

WidthCertificate lift_bipartite_complementation(const WidthCertificate & cert, const VertexSet & s, const VertexSet & t)
{
    check_set(cert.graph, s);
    check_set(cert.graph, t);
    Graph target = bipartite_complementation(cert.graph, s, t);
    if (s.empty() || t.empty())
        return cert;
    std::vector<int> member(cert.graph.order(), 0);
    for (int v : s)
        member[v] = 1;
    for (int v : t)
        member[v] = 2;
    KExpression e = ComplementLift(cert, member, 3, [](int a, int b) { return a + b == 3 && a != b; }).run();
    auto out = make_certificate(target, compress_labels(e));
    check_width(out, bipartite_complementation_bound(cert.width), "lift_bipartite_complementation");
    return out;
}

} // namespace cwlab
