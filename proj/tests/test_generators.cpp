#include <cwlab/canonical.hpp>
#include <cwlab/generators.hpp>
#include <cwlab/patterns.hpp>
#include <cwlab/structure.hpp>

#include <doctest.h>

#include <map>

using namespace cwlab;

namespace {

// Height-2 wall transcribed from the drawing, as grid coordinates.
Graph drawn_wall_2()
{
    std::vector<std::pair<int, int>> pts;
    for (int x = 1; x <= 5; ++x)
        pts.emplace_back(x, 0);
    for (int x = 0; x <= 5; ++x)
        pts.emplace_back(x, 1);
    for (int x = 0; x <= 4; ++x)
        pts.emplace_back(x, 2);
    std::map<std::pair<int, int>, int> id;
    for (int i = 0; i < static_cast<int>(pts.size()); ++i)
        id[pts[i]] = i;
    std::vector<Edge> e;
    for (int y = 0; y <= 2; ++y)
        for (int x = 0; x < 5; ++x)
            if (id.count({x, y}) && id.count({x + 1, y}))
                e.push_back({id[{x, y}], id[{x + 1, y}]});
    for (auto [a, b] : std::vector<std::pair<std::pair<int, int>, std::pair<int, int>>>{
             {{0, 1}, {0, 2}}, {{1, 0}, {1, 1}}, {{2, 1}, {2, 2}}, {{3, 0}, {3, 1}}, {{4, 1}, {4, 2}}, {{5, 0}, {5, 1}}})
        e.push_back({id[a], id[b]});
    return make_graph(16, e);
}

} // namespace

TEST_CASE("walls")
{
    CHECK(wall(2).graph == drawn_wall_2());
    CHECK_THROWS_AS(wall(1), GraphError);
    for (int h = 2; h <= 5; ++h) {
        Wall w = wall(h);
        CHECK(w.graph.order() == 2 * (h + 1) * (h + 1) - 2);
        CHECK(max_degree(w.graph) == 3);
        CHECK(bipartition(w.graph).has_value());
        CHECK(girth(w.graph) == 6);
        CHECK(is_connected(w.graph));
        for (int v = 0; v < w.graph.order(); ++v)
            CHECK(w.graph.degree(v) >= 2);
        auto edges = w.graph.edges();
        for (std::size_t i = 0; i < edges.size(); ++i) {
            auto p = w.position[edges[i].u], q = w.position[edges[i].v];
            CHECK(w.vertical[i] == (p.first == q.first));
        }
    }
    CHECK(wall(3).graph.order() == 30);
    CHECK(wall(4).graph.order() == 48);
}

TEST_CASE("subdivision")
{
    CHECK(is_isomorphic(subdivide_all(pattern("P2"), 1).graph, pattern("P3")));
    CHECK(is_isomorphic(subdivide_all(pattern("C3"), 1).graph, pattern("C6")));
    CHECK(subdivide_all(pattern("C4"), 0).graph == pattern("C4"));
    auto s = subdivide_all(wall(2).graph, 2);
    CHECK(girth(s.graph) == 18);
    CHECK(girth(subdivide_all(wall(2).graph, 1).graph) == 12);
    CHECK(s.graph.order() == 16 + 2 * wall(2).graph.size());
    CHECK_THROWS_AS(subdivide_all(pattern("P2"), -1), GraphError);
}

TEST_CASE("construction from the 1-subdivided wall with three cliques")
{
    for (int h : {2, 3}) {
        auto c = thm5_graph(h);
        CHECK(replay(c.trace) == c.graph);
        VertexSet v1, v2, v3;
        for (int v = 0; v < c.graph.order(); ++v)
            (c.trace.classes[v] == "V1" ? v1 : c.trace.classes[v] == "V2" ? v2 : v3).push_back(v);
        CHECK(is_clique(c.graph, v1));
        CHECK(is_clique(c.graph, v2));
        CHECK(is_clique(c.graph, v3));
        for (int a : v2)
            for (int b : v3)
                CHECK(! c.graph.adjacent(a, b));
        for (const auto & item : freeness_report(c.graph, thm5_claimed()))
            CHECK_MESSAGE(item.pass, item.pattern);
    }
}

TEST_CASE("construction with clique neighbourhoods")
{
    for (int h : {2, 3}) {
        auto c = thm6_graph(h);
        CHECK(replay(c.trace) == c.graph);
        CHECK(clique_number(c.graph) <= 3);
        for (const auto & item : freeness_report(c.graph, thm6_claimed()))
            CHECK_MESSAGE(item.pass, item.pattern);
    }
}

TEST_CASE("split construction from the 2-subdivided wall")
{
    for (int h : {2, 3}) {
        auto c = thm7_graph(h);
        CHECK(replay(c.trace) == c.graph);
        auto base = subdivide_all(wall(h).graph, 2).graph;
        CHECK(is_free(base, {pattern("C4"), pattern("C8")}));
        VertexSet a, b;
        for (int v = 0; v < c.graph.order(); ++v)
            (c.trace.classes[v] == "A" ? a : b).push_back(v);
        CHECK(is_clique(c.graph, a));
        CHECK(is_independent(c.graph, b));
        for (int v : b) {
            bool non = false;
            for (int u : a)
                non = non || ! c.graph.adjacent(u, v);
            CHECK(non);
        }
        for (int u : a) {
            bool nb = false;
            for (int v : b)
                nb = nb || c.graph.adjacent(u, v);
            CHECK(nb);
        }
        for (const auto & item : freeness_report(c.graph, thm7_claimed()))
            CHECK_MESSAGE(item.pass, item.pattern);
    }
    auto c = thm7_graph(2);
    auto parts = all_split_partitions(c.graph);
    REQUIRE(parts.size() == 1);
    CHECK(parts[0].indep.size() + parts[0].clique.size() == static_cast<std::size_t>(c.graph.order()));
}

TEST_CASE("freeness report and traces")
{
    auto r = freeness_report(pattern("C4"), {"C4", "K3"});
    REQUIRE(r.size() == 2);
    CHECK(! r[0].pass);
    CHECK(r[0].witness == VertexSet{0, 1, 2, 3});
    CHECK(r[1].pass);
    auto c = thm7_graph(2);
    auto text = format_trace(c.trace);
    CHECK(text.rfind("CLASS 0 A\n", 0) == 0);
    auto bad = c.trace;
    bad.classes[0] = "B";
    CHECK_THROWS_AS(replay(bad), GraphError);
}
