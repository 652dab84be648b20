#include <cwlab/canonical.hpp>
#include <cwlab/lifts.hpp>
#include <cwlab/patterns.hpp>
#include <cwlab/victor.hpp>

#include <doctest.h>

using namespace cwlab;

namespace {

WidthCertificate optimal(const Graph & g) { return *exact_cliquewidth(g).certificate; }

} // namespace

TEST_CASE("adding a vertex")
{
    auto k3 = optimal(complete_graph(3));
    auto a = lift_add_vertex(k3, {});
    CHECK(a.graph == pattern("K3+P1"));
    CHECK(verify_certificate(a));
    CHECK(a.width <= 2 * k3.width + 1);

    auto star = lift_add_vertex(optimal(Graph(4)), {0, 1, 2, 3});
    CHECK(is_isomorphic(star.graph, pattern("K1,4")));
    CHECK(verify_certificate(star));

    auto single = lift_add_vertex(WidthCertificate{Graph(0), {}, 0}, {});
    CHECK(single.graph == Graph(1));
    CHECK(single.width == 1);

    // Inserting in the middle shifts later vertices.
    auto mid = lift_add_vertex(optimal(path_graph(3)), {0}, 1);
    CHECK(mid.graph == make_graph(4, {{0, 1}, {0, 2}, {2, 3}}));
    CHECK(verify_certificate(mid));

    CHECK_THROWS_AS(lift_add_vertex(k3, {5}), GraphError);
    CHECK_THROWS_AS(lift_add_vertex(k3, {}, 7), GraphError);

    for (int n = 0; n <= 5; ++n)
        for (const auto & g : enumerate_graphs(n)) {
            auto cert = optimal(g);
            for (int pos = 0; pos <= n; ++pos)
                for (std::uint32_t mask = 0; mask < (1U << n); ++mask) {
                    VertexSet nb;
                    for (int v = 0; v < n; ++v)
                        if ((mask >> v) & 1U)
                            nb.push_back(v < pos ? v : v + 1);
                    auto out = lift_add_vertex(cert, nb, pos);
                    REQUIRE(verify_certificate(out));
                    CHECK(delete_vertices(out.graph, {pos}) == g);
                    CHECK(normalize_set(out.graph, out.graph.neighbours(pos).to_vector()) == nb);
                    CHECK(out.width <= add_vertex_bound(cert.width));
                }
        }
}

TEST_CASE("subgraph complementation")
{
    auto k3 = optimal(complete_graph(3));
    auto e = lift_subgraph_complementation(k3, {0, 1, 2});
    CHECK(e.graph == Graph(3));
    CHECK(e.width <= 4);
    auto same = lift_subgraph_complementation(k3, {});
    CHECK(same.graph == k3.graph);
    CHECK(to_text(same.expr) == to_text(k3.expr));
    auto c5 = lift_subgraph_complementation(optimal(pattern("C5")), {0, 1, 2, 3, 4});
    CHECK(verify_certificate(c5));
    CHECK(is_isomorphic(c5.graph, pattern("C5")));

    for (int n = 1; n <= 5; ++n)
        for (const auto & g : enumerate_graphs(n)) {
            auto cert = optimal(g);
            for (std::uint32_t mask = 1; mask < (1U << n); ++mask) {
                VertexSet s;
                for (int v = 0; v < n; ++v)
                    if ((mask >> v) & 1U)
                        s.push_back(v);
                auto out = lift_subgraph_complementation(cert, s);
                REQUIRE(verify_certificate(out));
                CHECK(out.graph == subgraph_complementation(g, s));
                CHECK(out.width <= subgraph_complementation_bound(cert.width, static_cast<int>(s.size()) == n));
            }
        }
}

TEST_CASE("bipartite complementation")
{
    auto two = optimal(pattern("2P2"));
    auto k4 = lift_bipartite_complementation(two, {0, 1}, {2, 3});
    CHECK(k4.graph == complete_graph(4));
    CHECK(verify_certificate(k4));
    auto k2 = optimal(complete_graph(2));
    CHECK(lift_bipartite_complementation(k2, {0}, {}).graph == k2.graph);
    CHECK(lift_bipartite_complementation(k2, {0}, {1}).graph == Graph(2));
    CHECK_THROWS_AS(lift_bipartite_complementation(k2, {0, 1}, {1}), GraphError);

    for (int n = 2; n <= 5; ++n)
        for (const auto & g : enumerate_graphs(n)) {
            auto cert = optimal(g);
            // Each vertex goes to s, t or neither.
            int total = 1;
            for (int i = 0; i < n; ++i)
                total *= 3;
            for (int code = 0; code < total; ++code) {
                VertexSet s, t;
                for (int v = 0, c = code; v < n; ++v, c /= 3) {
                    if (c % 3 == 1)
                        s.push_back(v);
                    if (c % 3 == 2)
                        t.push_back(v);
                }
                auto out = lift_bipartite_complementation(cert, s, t);
                REQUIRE(verify_certificate(out));
                CHECK(out.graph == bipartite_complementation(g, s, t));
                CHECK(out.width <= bipartite_complementation_bound(cert.width));
            }
        }
}

TEST_CASE("mixed partitions")
{
    CHECK(find_mixed_partition(pattern("C5"), 3, 3).has_value());
    CHECK(! find_mixed_partition(complete_graph(7), 0, 3));
    auto p = find_mixed_partition(Graph(3), 0, 1);
    REQUIRE(p);
    CHECK(p->indeps == std::vector<VertexSet>{{0, 1, 2}});
    auto q = find_mixed_partition(pattern("C5"), 3, 3);
    CHECK(! mixed_partition_violation(pattern("C5"), *q));
    CHECK(q->cliques.size() == 3);
    CHECK(q->indeps.size() == 3);
    CHECK(mixed_partition_violation(pattern("P3"), {{{0, 2}}, {{1}}}) == VertexSet{0, 2});
    CHECK(mixed_partition_violation(pattern("P3"), {{{0, 1}}, {}}) == VertexSet{2});

    // Exhaustive check of existence on small graphs.
    for (int n = 1; n <= 6; ++n)
        for (const auto & g : enumerate_graphs(n)) {
            bool brute = false;
            int total = 1;
            for (int i = 0; i < n; ++i)
                total *= 3;
            // One clique and two independent sets, by brute force over assignments.
            for (int code = 0; code < total && ! brute; ++code) {
                MixedPartition m{{{}}, {{}, {}}};
                for (int v = 0, c = code; v < n; ++v, c /= 3)
                    (c % 3 == 0 ? m.cliques[0] : m.indeps[c % 3 - 1]).push_back(v);
                brute = ! mixed_partition_violation(g, m);
            }
            auto found = find_mixed_partition(g, 1, 2);
            CHECK(found.has_value() == brute);
            if (found)
                CHECK(! mixed_partition_violation(g, *found));
        }
}

TEST_CASE("pair reductions")
{
    // Perfect matching between two independent pairs is already a matching.
    Graph g = make_graph(4, {{0, 2}, {1, 3}});
    auto m = find_matching_reduction(g, {0, 1}, {2, 3});
    REQUIRE(m);
    CHECK(m->delete_x.empty());
    CHECK(m->shape == PairShape::Matching);
    Graph k33 = bipartite_complementation(Graph(6), {0, 1, 2}, {3, 4, 5});
    auto c = find_comp_anti_reduction(k33, {0, 1, 2}, {3, 4, 5});
    REQUIRE(c);
    CHECK(c->shape == PairShape::Complete);
    // x = {0} sees 1 and 2 but not 3; the first single deletion that works drops 3.
    Graph h = make_graph(4, {{0, 1}, {0, 2}});
    auto d = find_comp_anti_reduction(h, {0}, {1, 2, 3}, 1);
    REQUIRE(d);
    CHECK(d->delete_x.empty());
    CHECK(d->delete_y == VertexSet{3});
    CHECK(d->shape == PairShape::Complete);
    CHECK(is_co_matching_between(complete_graph(4), {0, 1}, {2, 3}));
    CHECK(! is_matching_between(complete_graph(4), {0, 1}, {2, 3}));
}

TEST_CASE("reduction pipeline")
{
    auto k3 = victor_pipeline(complete_graph(3), {{{0, 1, 2}}, {}});
    CHECK(k3.graph == complete_graph(3));
    CHECK(verify_certificate(k3));

    MixedPartition c5part{{{0, 1}}, {{2, 4}, {3}}};
    auto c5 = victor_pipeline_report(pattern("C5"), c5part);
    CHECK(c5.certificate.graph == pattern("C5"));
    CHECK(verify_certificate(c5.certificate));
    CHECK(static_cast<Width128>(c5.certificate.width) <= c5.bound);

    CHECK_THROWS_AS(victor_pipeline(pattern("2P1+P3"), *find_mixed_partition(pattern("2P1+P3"), 3, 3)), WitnessError);
    CHECK_THROWS_AS(victor_pipeline(pattern("P3"), {{{0, 2}}, {{1}}}), WitnessError);
    CHECK_THROWS_AS(victor_pipeline(pattern("P3"), {{{0}, {1}, {2}, {}}, {}}), WitnessError);

    CHECK(to_decimal(victor_width_constant()) == to_decimal(victor_width_constant()));
    CHECK(to_decimal(0) == "0");
    CHECK(to_decimal(1234567890123ULL) == "1234567890123");

    auto members = [](const Graph & x) { return is_free(x, {pattern("2P1+P3"), complement(pattern("2P1+P3"))}); };
    for (int n = 1; n <= 7; ++n)
        for (const auto & g : enumerate_hereditary(n, members)) {
            auto part = find_mixed_partition(g, 3, 3);
            if (! part)
                continue;
            auto rep = victor_pipeline_report(g, *part);
            CHECK(rep.certificate.graph == g);
            CHECK(verify_certificate(rep.certificate));
            CHECK(rep.comp_anti_deletions <= 54);
            CHECK(rep.matching_deletions <= 12);
            CHECK(rep.bound <= victor_width_constant());
        }
}
