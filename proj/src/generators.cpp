#include <cwlab/generators.hpp>
#include <cwlab/patterns.hpp>

#include <algorithm>
#include <map>
#include <sstream>

namespace cwlab {

Wall wall(int height)
{
    if (height < 2)
        throw GraphError("wall height must be at least 2");
    const int h = height;
    const int cols = 2 * h + 2;
    // The degree-1 corners: (0, 0) and whichever top corner lacks a vertical edge.
    auto removed = [&](int x, int y) {
        if (x == 0 && y == 0)
            return true;
        if (y == h)
            return h % 2 == 0 ? x == cols - 1 : x == 0;
        return false;
    };
    Wall w;
    w.height = h;
    std::map<std::pair<int, int>, int> index;
    for (int y = 0; y <= h; ++y)
        for (int x = 0; x < cols; ++x)
            if (! removed(x, y)) {
                index[{x, y}] = static_cast<int>(w.position.size());
                w.position.emplace_back(x, y);
            }
    GraphBuilder b(static_cast<int>(w.position.size()));
    std::map<std::pair<int, int>, bool> kind;
    auto add = [&](std::pair<int, int> p, std::pair<int, int> q, bool vertical) {
        auto i = index.find(p), j = index.find(q);
        if (i == index.end() || j == index.end())
            return;
        b.add_edge(i->second, j->second);
        kind[std::minmax(i->second, j->second)] = vertical;
    };
    for (int y = 0; y <= h; ++y)
        for (int x = 0; x < cols; ++x) {
            if (x + 1 < cols)
                add({x, y}, {x + 1, y}, false);
            if (y < h && (x + y) % 2 == 1)
                add({x, y}, {x, y + 1}, true);
        }
    w.graph = std::move(b).build();
    for (const auto & e : w.graph.edges())
        w.vertical.push_back(kind.at({e.u, e.v}));
    return w;
}

Subdivision subdivide_all(const Graph & g, int k)
{
    if (k < 0)
        throw GraphError("subdivision count must be non-negative");
    const auto edges = g.edges();
    const int n = g.order();
    Subdivision s;
    s.original_order = n;
    s.edge_of.assign(n, Edge{-1, -1});
    GraphBuilder b(n + k * static_cast<int>(edges.size()));
    int next = n;
    for (const auto & e : edges) {
        int prev = e.u;
        for (int i = 0; i < k; ++i) {
            b.add_edge(prev, next);
            s.edge_of.push_back(e);
            prev = next++;
        }
        b.add_edge(prev, e.v);
    }
    s.graph = std::move(b).build();
    return s;
}

namespace {

VertexSet members(const std::vector<std::string> & classes, const std::string & name)
{
    VertexSet out;
    for (int v = 0; v < static_cast<int>(classes.size()); ++v)
        if (classes[v] == name)
            out.push_back(v);
    return out;
}

// Starting classes of a subdivided wall: V1/V2/V3 for one subdivision, A/B otherwise.
std::pair<Graph, std::vector<std::string>> base(int height, int k)
{
    Wall w = wall(height);
    Subdivision s = subdivide_all(w.graph, k);
    std::vector<std::string> classes(s.graph.order());
    if (k == 1) {
        std::map<std::pair<int, int>, bool> vertical;
        auto edges = w.graph.edges();
        for (std::size_t i = 0; i < edges.size(); ++i)
            vertical[{edges[i].u, edges[i].v}] = w.vertical[i];
        for (int v = 0; v < s.graph.order(); ++v)
            classes[v] = v < s.original_order ? "V1" : (vertical.at({s.edge_of[v].u, s.edge_of[v].v}) ? "V2" : "V3");
    }
    else {
        auto colour = bipartition(s.graph);
        for (int v = 0; v < s.graph.order(); ++v)
            classes[v] = (*colour)[v] == (*colour)[0] ? "A" : "B";
    }
    return {s.graph, classes};
}

void apply(const std::string & op, Graph & g, std::vector<std::string> & classes)
{
    std::istringstream in(op);
    std::string verb, cls;
    in >> verb >> cls;
    VertexSet s = members(classes, cls);
    if (verb == "complement")
        g = subgraph_complementation(g, s);
    else if (verb == "clique-neighbourhood") {
        GraphBuilder b(g);
        for (int v : s) {
            auto nb = g.neighbours(v).to_vector();
            for (std::size_t i = 0; i < nb.size(); ++i)
                for (std::size_t j = i + 1; j < nb.size(); ++j)
                    b.add_edge(nb[i], nb[j]);
        }
        g = std::move(b).build();
    }
    else if (verb == "delete") {
        g = delete_vertices(g, s);
        std::vector<std::string> rest;
        for (const auto & c : classes)
            if (c != cls)
                rest.push_back(c);
        classes = std::move(rest);
    }
    else
        throw GraphError("unknown construction step '" + op + "'");
}

Construction construct(int height, int k, std::vector<std::string> ops)
{
    auto [g, classes] = base(height, k);
    for (const auto & op : ops)
        apply(op, g, classes);
    return {g, {height, k, std::move(ops), classes}};
}

} // namespace

Construction thm5_graph(int height) { return construct(height, 1, {"complement V1", "complement V2", "complement V3"}); }
Construction thm6_graph(int height) { return construct(height, 1, {"clique-neighbourhood V1", "delete V1"}); }
Construction thm7_graph(int height) { return construct(height, 2, {"complement A"}); }

Graph replay(const ConstructionTrace & trace)
{
    auto [g, classes] = base(trace.height, trace.subdivisions);
    for (const auto & op : trace.operations)
        apply(op, g, classes);
    if (classes != trace.classes)
        throw GraphError("trace classes do not match the replayed construction");
    return g;
}

std::string format_trace(const ConstructionTrace & trace)
{
    std::string out;
    for (std::size_t v = 0; v < trace.classes.size(); ++v)
        out += "CLASS " + std::to_string(v) + " " + trace.classes[v] + "\n";
    return out;
}

std::vector<FreenessItem> freeness_report(const Graph & g, const std::vector<std::string> & patterns)
{
    std::vector<FreenessItem> out;
    for (const auto & name : patterns) {
        Graph h = pattern(name);
        if (h.order() > 8)
            throw BudgetError("freeness_report handles patterns of at most 8 vertices");
        FreenessItem item{name, true, {}};
        if (auto w = contains_induced(g, h)) {
            item.pass = false;
            item.witness = *w;
        }
        out.push_back(std::move(item));
    }
    return out;
}

std::vector<std::string> thm5_claimed()
{
    std::vector<std::string> out{"4P1", "co-(3P1+P2)", "C5"};
    for (int k = 1; k <= 10; ++k)
        out.push_back("X" + std::to_string(k));
    return out;
}

std::vector<std::string> thm6_claimed() { return {"C4", "C5", "K1,3", "K4", "co-(2P1+P2)"}; }

std::vector<std::string> thm7_claimed() { return {"C4", "2P2", "C5", "X1", "X2", "X3"}; }

} // namespace cwlab
