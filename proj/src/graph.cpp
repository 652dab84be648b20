#include <cwlab/graph.hpp>

#include <algorithm>
#include <deque>
#include <limits>
#include <sstream>

namespace cwlab {

std::vector<Edge> Graph::edges() const
{
    std::vector<Edge> out;
    out.reserve(m_);
    for (int u = 0; u < n_; ++u)
        for (int v = adj_[u].next(u + 1); v >= 0; v = adj_[u].next(v + 1))
            out.push_back({u, v});
    return out;
}

void GraphBuilder::check(int u, int v) const
{
    if (u < 0 || v < 0 || u >= g_.n_ || v >= g_.n_)
        throw GraphError("edge endpoint out of range: (" + std::to_string(u) + "," + std::to_string(v) + ")");
    if (u == v)
        throw GraphError("loop edge at vertex " + std::to_string(u));
}

void GraphBuilder::add_edge(int u, int v)
{
    check(u, v);
    if (! g_.adj_[u].test(v)) {
        g_.adj_[u].set(v);
        g_.adj_[v].set(u);
        ++g_.m_;
    }
}

void GraphBuilder::remove_edge(int u, int v)
{
    check(u, v);
    if (g_.adj_[u].test(v)) {
        g_.adj_[u].reset(v);
        g_.adj_[v].reset(u);
        --g_.m_;
    }
}

void GraphBuilder::toggle_edge(int u, int v)
{
    if (has_edge(u, v))
        remove_edge(u, v);
    else
        add_edge(u, v);
}

Graph make_graph(int n, std::span<const Edge> edges)
{
    if (n < 0)
        throw GraphError("negative vertex count");
    GraphBuilder b(n);
    for (auto [u, v] : edges)
        b.add_edge(u, v);
    return std::move(b).build();
}

Graph make_graph(int n, std::initializer_list<Edge> edges)
{
    return make_graph(n, std::span<const Edge>(edges.begin(), edges.size()));
}

Graph complement(const Graph & g)
{
    GraphBuilder b(g.order());
    for (int u = 0; u < g.order(); ++u)
        for (int v = u + 1; v < g.order(); ++v)
            if (! g.adjacent(u, v))
                b.add_edge(u, v);
    return std::move(b).build();
}

Graph disjoint_union(const Graph & g, const Graph & h)
{
    GraphBuilder b(g.order() + h.order());
    for (auto [u, v] : g.edges())
        b.add_edge(u, v);
    for (auto [u, v] : h.edges())
        b.add_edge(u + g.order(), v + g.order());
    return std::move(b).build();
}

VertexSet normalize_set(const Graph & g, VertexSet s)
{
    for (int v : s)
        if (v < 0 || v >= g.order())
            throw GraphError("vertex " + std::to_string(v) + " out of range");
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
    return s;
}

Bitset to_bitset(const Graph & g, const VertexSet & s)
{
    Bitset b(g.order());
    for (int v : normalize_set(g, s))
        b.set(v);
    return b;
}

VertexSet to_vertex_set(const Bitset & b) { return b.to_vector(); }

VertexSet complement_set(const Graph & g, const VertexSet & s)
{
    return to_vertex_set(~to_bitset(g, s));
}

Graph induced_subgraph(const Graph & g, const VertexSet & s)
{
    auto members = normalize_set(g, s);
    GraphBuilder b(static_cast<int>(members.size()));
    for (std::size_t i = 0; i < members.size(); ++i)
        for (std::size_t j = i + 1; j < members.size(); ++j)
            if (g.adjacent(members[i], members[j]))
                b.add_edge(static_cast<int>(i), static_cast<int>(j));
    return std::move(b).build();
}

Graph delete_vertices(const Graph & g, const VertexSet & s)
{
    return induced_subgraph(g, complement_set(g, s));
}

Graph subgraph_complementation(const Graph & g, const VertexSet & s)
{
    auto members = normalize_set(g, s);
    GraphBuilder b(g);
    for (std::size_t i = 0; i < members.size(); ++i)
        for (std::size_t j = i + 1; j < members.size(); ++j)
            b.toggle_edge(members[i], members[j]);
    return std::move(b).build();
}

Graph bipartite_complementation(const Graph & g, const VertexSet & s, const VertexSet & t)
{
    auto sb = to_bitset(g, s);
    auto tb = to_bitset(g, t);
    if (sb.intersects(tb))
        throw GraphError("bipartite complementation needs disjoint sets");
    GraphBuilder b(g);
    for (int u : to_vertex_set(sb))
        for (int v : to_vertex_set(tb))
            b.toggle_edge(u, v);
    return std::move(b).build();
}

Graph relabel(const Graph & g, std::span<const int> perm)
{
    if (static_cast<int>(perm.size()) != g.order())
        throw GraphError("permutation size mismatch");
    GraphBuilder b(g.order());
    for (auto [u, v] : g.edges())
        b.add_edge(perm[u], perm[v]);
    return std::move(b).build();
}

int max_degree(const Graph & g)
{
    int best = 0;
    for (int v = 0; v < g.order(); ++v)
        best = std::max(best, g.degree(v));
    return best;
}

std::vector<VertexSet> components(const Graph & g)
{
    std::vector<VertexSet> out;
    std::vector<bool> seen(g.order(), false);
    for (int s = 0; s < g.order(); ++s) {
        if (seen[s])
            continue;
        VertexSet comp;
        std::deque<int> queue{s};
        seen[s] = true;
        while (! queue.empty()) {
            int u = queue.front();
            queue.pop_front();
            comp.push_back(u);
            for (int v : g.neighbours(u).to_vector())
                if (! seen[v]) {
                    seen[v] = true;
                    queue.push_back(v);
                }
        }
        std::sort(comp.begin(), comp.end());
        out.push_back(std::move(comp));
    }
    return out;
}

bool is_connected(const Graph & g) { return components(g).size() <= 1; }

bool is_clique(const Graph & g, const VertexSet & s)
{
    for (std::size_t i = 0; i < s.size(); ++i)
        for (std::size_t j = i + 1; j < s.size(); ++j)
            if (! g.adjacent(s[i], s[j]))
                return false;
    return true;
}

bool is_independent(const Graph & g, const VertexSet & s)
{
    for (std::size_t i = 0; i < s.size(); ++i)
        for (std::size_t j = i + 1; j < s.size(); ++j)
            if (g.adjacent(s[i], s[j]))
                return false;
    return true;
}

int girth(const Graph & g)
{
    int best = std::numeric_limits<int>::max();
    const int n = g.order();
    std::vector<int> dist(n), parent(n);
    for (int s = 0; s < n; ++s) {
        std::fill(dist.begin(), dist.end(), -1);
        dist[s] = 0;
        parent[s] = -1;
        std::deque<int> queue{s};
        while (! queue.empty()) {
            int u = queue.front();
            queue.pop_front();
            if (2 * dist[u] + 1 >= best)
                break;
            for (int v : g.neighbours(u).to_vector()) {
                if (dist[v] < 0) {
                    dist[v] = dist[u] + 1;
                    parent[v] = u;
                    queue.push_back(v);
                }
                else if (parent[u] != v)
                    best = std::min(best, dist[u] + dist[v] + 1);
            }
        }
    }
    return best == std::numeric_limits<int>::max() ? -1 : best;
}

std::optional<std::vector<int>> bipartition(const Graph & g)
{
    std::vector<int> colour(g.order(), -1);
    for (int s = 0; s < g.order(); ++s) {
        if (colour[s] >= 0)
            continue;
        colour[s] = 0;
        std::deque<int> queue{s};
        while (! queue.empty()) {
            int u = queue.front();
            queue.pop_front();
            for (int v : g.neighbours(u).to_vector()) {
                if (colour[v] < 0) {
                    colour[v] = 1 - colour[u];
                    queue.push_back(v);
                }
                else if (colour[v] == colour[u])
                    return std::nullopt;
            }
        }
    }
    return colour;
}

std::string format_set(const VertexSet & s)
{
    std::ostringstream os;
    for (std::size_t i = 0; i < s.size(); ++i)
        os << (i ? "," : "") << s[i];
    return os.str();
}

} // namespace cwlab
