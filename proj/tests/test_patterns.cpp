#include <cwlab/canonical.hpp>
#include <cwlab/patterns.hpp>

#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

using namespace cwlab;

namespace {

// Oracle: try every |h|-subset of g against h.
bool naive_contains(const Graph & g, const Graph & h)
{
    const int n = g.order(), k = h.order();
    for (std::uint32_t mask = 0; mask < (1U << n); ++mask) {
        if (std::popcount(mask) != k)
            continue;
        VertexSet s;
        for (int v = 0; v < n; ++v)
            if ((mask >> v) & 1U)
                s.push_back(v);
        if (is_isomorphic(induced_subgraph(g, s), h))
            return true;
    }
    return false;
}

bool brute_split(const Graph & g)
{
    const int n = g.order();
    for (std::uint32_t mask = 0; mask < (1U << n); ++mask) {
        VertexSet c, i;
        for (int v = 0; v < n; ++v)
            ((mask >> v) & 1U ? c : i).push_back(v);
        if (is_clique(g, c) && is_independent(g, i))
            return true;
    }
    return false;
}

int brute_omega(const Graph & g)
{
    int best = 0;
    for (std::uint32_t mask = 0; mask < (1U << g.order()); ++mask) {
        VertexSet s;
        for (int v = 0; v < g.order(); ++v)
            if ((mask >> v) & 1U)
                s.push_back(v);
        if (is_clique(g, s))
            best = std::max<int>(best, s.size());
    }
    return best;
}

} // namespace

TEST_CASE("pattern grammar")
{
    CHECK(pattern("P4") == path_graph(4));
    CHECK(pattern("K1,3") == star_graph(3));
    CHECK(is_isomorphic(pattern("S1,1,1"), pattern("K1,3")));
    auto b = pattern("bull");
    CHECK(b.order() == 5);
    CHECK(b.size() == 5);
    std::vector<int> degs;
    for (int v = 0; v < 5; ++v)
        degs.push_back(b.degree(v));
    std::sort(degs.begin(), degs.end());
    CHECK(degs == std::vector<int>{1, 1, 2, 3, 3});

    auto g = pattern("2P1+P3");
    CHECK(g.order() == 5);
    CHECK(g.size() == 2);
    CHECK(pattern("co-2P1+P3") == complement(g));
    CHECK(pattern("co-(2P1+P3)") == complement(g));
    CHECK(pattern("5P1") == Graph(5));
    CHECK(pattern("K1,3+P1").order() == 5);
    CHECK(pattern("co-co-P4") == path_graph(4));
    CHECK(format_pattern(parse_pattern("co-(2P1+P3)")) == "co-(2P1+P3)");
    CHECK(format_pattern(parse_pattern("K1,3+3P1")) == "K1,3+3P1");

    for (auto bad : {"", "P0", "C2", "S2,1,1", "X11", "K2,3", "Q4", "P4+", "0P1", "co-(P4", "bul"})
        CHECK_THROWS_AS(pattern(bad), GraphError);
}

TEST_CASE("contains_induced matches naive subset oracle")
{
    std::mt19937 rng(5);
    std::vector<Graph> hs;
    for (int k = 1; k <= 5; ++k)
        for (const auto & h : enumerate_graphs(k))
            hs.push_back(h);
    std::bernoulli_distribution coin(0.5);
    for (int trial = 0; trial < 60; ++trial) {
        int n = 3 + trial % 4;
        GraphBuilder b(n);
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                if (coin(rng))
                    b.add_edge(i, j);
        Graph g = std::move(b).build();
        for (const auto & h : hs) {
            if (h.order() > n)
                continue;
            auto w = contains_induced(g, h);
            CHECK(w.has_value() == naive_contains(g, h));
            if (w)
                CHECK(is_isomorphic(induced_subgraph(g, *w), h));
        }
    }
    CHECK(contains_induced(cycle_graph(5), path_graph(4)).has_value());
    CHECK(! contains_induced(complete_graph(5), Graph(2)).has_value());
    CHECK(! contains_induced(bull_graph(), cycle_graph(4)).has_value());
    CHECK(is_free(cycle_graph(5), {pattern("2P2"), pattern("C4")}));
    CHECK(! is_free(pattern("2P2"), {pattern("2P2")}));
    CHECK(is_free(Graph(5), {pattern("K2")}));
}

TEST_CASE("class S membership")
{
    CHECK(is_in_S(pattern("K1,3+P1")));
    CHECK(! is_in_S(pattern("C4")));
    CHECK(is_in_S(pattern("S1,2,3")));
    CHECK(! is_in_S(pattern("K1,4")));
    CHECK(! is_in_S(pattern("K3")));
    CHECK(is_in_S(Graph(0)));
    // Two degree-3 vertices: a tree outside S.
    CHECK(! is_in_S(make_graph(6, {{0, 1}, {0, 2}, {0, 3}, {3, 4}, {3, 5}})));

    auto s7 = enumerate_class_S(7);
    std::set<CanonicalForm> forms;
    for (const auto & g : s7) {
        CHECK(is_in_S(g));
        forms.insert(canonical_form(g));
    }
    CHECK(forms.size() == s7.size());
    std::size_t filtered = 0;
    for (int n = 1; n <= 7; ++n)
        for (const auto & g : enumerate_graphs(n))
            filtered += is_in_S(g);
    CHECK(filtered == s7.size());
}

TEST_CASE("self-complementarity")
{
    CHECK(is_self_complementary(pattern("P4")));
    CHECK(! is_self_complementary(pattern("P3")));
    CHECK(is_self_complementary(pattern("P1")));
    for (int k = 1; k <= 10; ++k) {
        auto x = x_graph(k);
        CHECK(x.size() == 14);
        auto f = complementing_permutation(x);
        REQUIRE(f.has_value());
        for (int u = 0; u < 8; ++u)
            for (int v = u + 1; v < 8; ++v)
                CHECK(x.adjacent(u, v) != x.adjacent((*f)[u], (*f)[v]));
    }
}

TEST_CASE("X1..X10 transcription guards")
{
    for (int a = 1; a <= 10; ++a)
        for (int b = a + 1; b <= 10; ++b)
            CHECK(! is_isomorphic(x_graph(a), x_graph(b)));
    for (int k = 1; k <= 10; ++k)
        CHECK(brute_split(x_graph(k)) == (k <= 3));
    for (int k = 1; k <= 3; ++k)
        CHECK(brute_omega(x_graph(k)) == 4);
}

TEST_CASE("self-complementary enumeration")
{
    const std::size_t expected[] = {1, 1, 0, 0, 1, 2, 0, 0, 10, 36};
    for (int n = 0; n <= 9; ++n) {
        auto sc = enumerate_self_complementary(n);
        CHECK(sc.size() == expected[n]);
        for (const auto & g : sc) {
            CHECK(g.size() * 4 == n * (n - 1));
            CHECK(is_self_complementary(g));
        }
    }
    // Cross-check against filtering the full enumeration.
    for (int n = 1; n <= 8; ++n) {
        std::set<CanonicalForm> brute;
        for (const auto & g : enumerate_graphs(n))
            if (is_self_complementary(g))
                brute.insert(canonical_form(g));
        std::set<CanonicalForm> ours;
        for (const auto & g : enumerate_self_complementary(n))
            ours.insert(canonical_form(g));
        CHECK(ours == brute);
    }
    std::set<CanonicalForm> eight, xs;
    for (const auto & g : enumerate_self_complementary(8))
        eight.insert(canonical_form(g));
    for (int k = 1; k <= 10; ++k)
        xs.insert(canonical_form(x_graph(k)));
    CHECK(eight == xs);

    auto five = enumerate_self_complementary(5);
    std::set<CanonicalForm> five_forms{canonical_form(five[0]), canonical_form(five[1])};
    CHECK(five_forms == std::set<CanonicalForm>{canonical_form(cycle_graph(5)), canonical_form(bull_graph())});
}

TEST_CASE("self-complementary graphs free of C4, C5 and K4 sit inside the bull")
{
    std::vector<Graph> forbid{cycle_graph(4), cycle_graph(5), complete_graph(4)};
    for (int n = 1; n <= 9; ++n)
        for (const auto & g : enumerate_self_complementary(n))
            if (is_free(g, forbid))
                CHECK(is_induced_subgraph(g, bull_graph()));
}

TEST_CASE("S-graph characterization")
{
    auto r = lemma_useful_check(7);
    CHECK(r.pass);
    CHECK(r.checked > 0);
    CHECK(lemma_useful_sides(pattern("2P1+P3")) == std::pair{true, true});
    CHECK(lemma_useful_sides(pattern("S1,1,2")) == std::pair{false, false});
}
