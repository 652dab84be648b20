#include <cwlab/canonical.hpp>
#include <cwlab/graph.hpp>
#include <cwlab/io.hpp>

#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>
#include <set>

using namespace cwlab;

namespace {

Graph path(int n)
{
    GraphBuilder b(n);
    for (int i = 0; i + 1 < n; ++i)
        b.add_edge(i, i + 1);
    return std::move(b).build();
}

Graph cycle(int n)
{
    GraphBuilder b(n);
    for (int i = 0; i < n; ++i)
        b.add_edge(i, (i + 1) % n);
    return std::move(b).build();
}

Graph complete(int n) { return complement(Graph(n)); }

Graph bull() { return make_graph(5, {{0, 1}, {0, 2}, {1, 2}, {1, 3}, {2, 4}}); }

Graph from_mask(int n, std::uint64_t mask)
{
    GraphBuilder b(n);
    int k = 0;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i, ++k)
            if ((mask >> k) & 1U)
                b.add_edge(i, j);
    return std::move(b).build();
}

// Oracle: minimum adjacency string over all n! relabellings.
std::string brute_canon(const Graph & g)
{
    std::vector<int> p(g.order());
    std::iota(p.begin(), p.end(), 0);
    std::string best;
    do {
        std::string s;
        for (int j = 1; j < g.order(); ++j)
            for (int i = 0; i < j; ++i)
                s += g.adjacent(p[i], p[j]) ? '1' : '0';
        if (best.empty() || s < best)
            best = s;
    } while (std::next_permutation(p.begin(), p.end()));
    return std::to_string(g.order()) + ":" + best;
}

Graph random_graph(std::mt19937 & rng, int n, double p)
{
    std::bernoulli_distribution coin(p);
    GraphBuilder b(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (coin(rng))
                b.add_edge(i, j);
    return std::move(b).build();
}

} // namespace

TEST_CASE("make_graph validates endpoints")
{
    CHECK_THROWS_AS(make_graph(3, {{0, 3}}), GraphError);
    CHECK_THROWS_AS(make_graph(3, {{1, 1}}), GraphError);
    auto g = make_graph(4, {{0, 1}, {1, 0}, {1, 2}, {2, 3}});
    CHECK(g.size() == 3);
    CHECK(g == path(4));
    CHECK(make_graph(1, {}).order() == 1);
    CHECK(complete(5).size() == 10);
}

TEST_CASE("basic operations")
{
    CHECK(complement(complete(3)) == Graph(3));
    CHECK(is_isomorphic(complement(cycle(5)), cycle(5)));

    auto two_p2 = disjoint_union(path(2), path(2));
    CHECK(two_p2.order() == 4);
    CHECK(two_p2.size() == 2);
    CHECK(components(two_p2).size() == 2);
    CHECK(disjoint_union(path(4), Graph(0)) == path(4));

    for (int drop = 0; drop < 5; ++drop) {
        VertexSet keep;
        for (int v = 0; v < 5; ++v)
            if (v != drop)
                keep.push_back(v);
        CHECK(is_isomorphic(induced_subgraph(cycle(5), keep), path(4)));
    }
    CHECK(induced_subgraph(complete(5), {0, 1, 2}) == complete(3));
    CHECK(is_isomorphic(delete_vertices(path(4), {0}), path(3)));
    CHECK(is_isomorphic(delete_vertices(path(4), {1}), disjoint_union(path(1), path(2))));
    CHECK(delete_vertices(path(4), {}) == path(4));

    int p4_count = 0;
    for (int v = 0; v < 5; ++v)
        p4_count += is_isomorphic(delete_vertices(bull(), {v}), path(4));
    CHECK(p4_count == 1);
    CHECK(is_isomorphic(delete_vertices(bull(), {0}), path(4)));

    CHECK(is_isomorphic(subgraph_complementation(two_p2, {0, 1, 2, 3}), cycle(4)));
    auto k4 = bipartite_complementation(two_p2, {0, 1}, {2, 3});
    CHECK(k4 == complete(4));
    CHECK_THROWS_AS(bipartite_complementation(two_p2, {0, 1}, {1, 2}), GraphError);
    CHECK(bipartite_complementation(path(2), {0}, {1}) == Graph(2));
    CHECK(bipartite_complementation(path(4), {0, 1}, {}) == path(4));

    CHECK(max_degree(cycle(5)) == 2);
    CHECK(max_degree(make_graph(4, {{0, 1}, {0, 2}, {0, 3}})) == 3);
    CHECK(girth(cycle(7)) == 7);
    CHECK(girth(path(5)) == -1);
    CHECK(bipartition(cycle(6)).has_value());
    CHECK(! bipartition(cycle(5)).has_value());
}

TEST_CASE("involutions hold exactly on all labelled graphs with n <= 5")
{
    for (int n = 0; n <= 5; ++n) {
        int pairs = n * (n - 1) / 2;
        for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pairs); ++mask) {
            auto g = from_mask(n, mask);
            CHECK(complement(complement(g)) == g);
            VertexSet s, t;
            for (int v = 0; v < n; ++v)
                (v % 3 == 0 ? s : t).push_back(v);
            CHECK(subgraph_complementation(subgraph_complementation(g, s), s) == g);
            CHECK(bipartite_complementation(bipartite_complementation(g, s, t), s, t) == g);
        }
    }
}

TEST_CASE("canonical form agrees with brute-force permutation minimum")
{
    std::mt19937 rng(7);
    for (int trial = 0; trial < 300; ++trial) {
        int n = 1 + trial % 6;
        auto g = random_graph(rng, n, 0.5);
        auto h = random_graph(rng, n, 0.5);
        bool same = brute_canon(g) == brute_canon(h);
        CHECK((canonical_form(g) == canonical_form(h)) == same);
        CHECK(is_isomorphic(g, h) == same);

        std::vector<int> perm(n);
        std::iota(perm.begin(), perm.end(), 0);
        std::shuffle(perm.begin(), perm.end(), rng);
        auto g2 = relabel(g, perm);
        CHECK(canonical_form(g2) == canonical_form(g));
        auto f = find_isomorphism(g, g2);
        REQUIRE(f.has_value());
        for (auto [u, v] : g.edges())
            CHECK(g2.adjacent((*f)[u], (*f)[v]));
    }
    CHECK(canonical_form(path(4)) == canonical_form(complement(path(4))));
    CHECK(canonical_form(complete(3)) != canonical_form(path(3)));
    CHECK(canonical_form(bull()) == canonical_form(bull()));
    CHECK(is_isomorphic(bull(), complement(bull())));
    CHECK(! is_isomorphic(path(4), make_graph(4, {{0, 1}, {0, 2}, {0, 3}})));
}

TEST_CASE("canonical form handles symmetric graphs quickly")
{
    std::vector<int> reversed(40);
    std::iota(reversed.rbegin(), reversed.rend(), 0);
    CHECK(canonical_form(relabel(complete(40), reversed)) == canonical_form(complete(40)));
    CHECK(canonical_form(Graph(40)) != canonical_form(complete(40)));
    auto petersen = make_graph(10, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}, {0, 5}, {1, 6}, {2, 7}, {3, 8}, {4, 9}, {5, 7}, {7, 9}, {9, 6}, {6, 8}, {8, 5}});
    CHECK(is_isomorphic(petersen, relabel(petersen, std::vector<int>{3, 1, 4, 0, 5, 9, 2, 6, 8, 7})));
    CHECK(! is_isomorphic(petersen, disjoint_union(cycle(5), cycle(5))));
}

TEST_CASE("isomorphism is an equivalence on sampled 5-vertex graphs")
{
    auto all = enumerate_graphs(5);
    std::mt19937 rng(3);
    std::vector<Graph> sample;
    for (const auto & g : all) {
        std::vector<int> p(5);
        std::iota(p.begin(), p.end(), 0);
        std::shuffle(p.begin(), p.end(), rng);
        sample.push_back(g);
        sample.push_back(relabel(g, p));
    }
    for (std::size_t i = 0; i < sample.size(); i += 3)
        for (std::size_t j = 0; j < sample.size(); j += 5) {
            bool ij = is_isomorphic(sample[i], sample[j]);
            CHECK(ij == is_isomorphic(sample[j], sample[i]));
            CHECK(ij == (i / 2 == j / 2));
        }
}

TEST_CASE("for_each_isomorphism counts automorphisms")
{
    int count = 0;
    for_each_isomorphism(cycle(5), cycle(5), [&](const std::vector<int> &) {
        ++count;
        return true;
    });
    CHECK(count == 10);
    count = 0;
    for_each_isomorphism(path(4), complement(path(4)), [&](const std::vector<int> &) {
        ++count;
        return true;
    });
    CHECK(count == 2);
}

TEST_CASE("enumeration counts")
{
    const int expected[] = {1, 1, 2, 4, 11, 34, 156, 1044, 12346};
    for (int n = 0; n <= 8; ++n)
        CHECK(enumerate_graphs(n).size() == static_cast<std::size_t>(expected[n]));
    CHECK_THROWS_AS(enumerate_graphs(10), BudgetError);

    for (int n = 1; n <= 5; ++n) {
        std::set<std::string> classes;
        int pairs = n * (n - 1) / 2;
        for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pairs); ++mask)
            classes.insert(brute_canon(from_mask(n, mask)));
        std::set<std::string> ours;
        for (const auto & g : enumerate_graphs(n))
            ours.insert(brute_canon(g));
        CHECK(ours == classes);
    }
    auto a = enumerate_graphs(6);
    auto b = enumerate_graphs(6);
    CHECK(a == b);
}

TEST_CASE("hereditary enumeration matches filtering")
{
    auto triangle_free = [](const Graph & g) {
        for (auto [u, v] : g.edges())
            if ((g.neighbours(u) & g.neighbours(v)).any())
                return false;
        return true;
    };
    for (int n = 1; n <= 7; ++n) {
        auto all = enumerate_graphs(n);
        auto filtered = std::count_if(all.begin(), all.end(), triangle_free);
        CHECK(enumerate_hereditary(n, triangle_free).size() == static_cast<std::size_t>(filtered));
    }
}

TEST_CASE("text format round trip")
{
    auto g = make_graph(4, {{2, 3}, {0, 1}, {1, 2}});
    CHECK(write_text(g) == "4 3\n0 1\n1 2\n2 3\n");
    CHECK(read_text("4 3\n0 1\n1 2\n2 3\n") == g);
    CHECK(read_text("4 3\n3 2\n0 1\n2 1\n") == g);
    CHECK(write_text(Graph(0)) == "0 0\n");
    CHECK_THROWS_AS(read_text("3 2\n0 1\n"), GraphError);
    CHECK_THROWS_AS(read_text("3 1\n0 3\n"), GraphError);
    CHECK_THROWS_AS(read_text("3 2\n0 1\n1 0\n"), GraphError);
    CHECK_THROWS_AS(read_text("x"), GraphError);
}

TEST_CASE("graph6 round trip and known strings")
{
    CHECK(write_graph6(path(4)) == "Ch");
    CHECK(write_graph6(complete(5)) == "D~{");
    CHECK(write_graph6(Graph(0)) == "?");
    CHECK(read_graph6("Ch\n") == path(4));
    CHECK(read_graph6(">>graph6<<D~{") == complete(5));
    std::mt19937 rng(11);
    for (int n : {1, 2, 7, 12, 62, 63, 70}) {
        auto g = random_graph(rng, n, 0.3);
        CHECK(read_graph6(write_graph6(g)) == g);
    }
    CHECK_THROWS_AS(read_graph6("D~"), GraphError);
}
