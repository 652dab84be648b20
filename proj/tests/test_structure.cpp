#include <cwlab/canonical.hpp>
#include <cwlab/patterns.hpp>
#include <cwlab/structure.hpp>

#include <doctest.h>

#include <algorithm>

using namespace cwlab;

namespace {

std::vector<SplitPartition> brute_split_partitions(const Graph & g)
{
    std::vector<SplitPartition> out;
    const int n = g.order();
    for (std::uint32_t mask = 0; mask < (1U << n); ++mask) {
        SplitPartition p;
        for (int v = 0; v < n; ++v)
            ((mask >> v) & 1U ? p.clique : p.indep).push_back(v);
        if (is_clique(g, p.clique) && is_independent(g, p.indep))
            out.push_back(p);
    }
    std::sort(out.begin(), out.end(), [](const auto & a, const auto & b) { return a.clique < b.clique; });
    return out;
}

int brute_clique(const Graph & g)
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

TEST_CASE("modules and primality")
{
    CHECK(! find_nontrivial_module(pattern("P4")).has_value());
    auto m = find_nontrivial_module(pattern("2P2"));
    REQUIRE(m.has_value());
    CHECK(is_module(pattern("2P2"), *m));
    CHECK(*m == VertexSet{0, 1});
    CHECK(find_nontrivial_module(pattern("K3")).has_value());
    CHECK(is_prime(pattern("C5")));
    CHECK(! is_prime(pattern("K4")));
    CHECK(is_prime(pattern("bull")));
    CHECK(module_closure(pattern("P4"), 0, 1) == VertexSet{0, 1, 2, 3});

    for (int n = 1; n <= 6; ++n)
        for (const auto & g : enumerate_graphs(n)) {
            CHECK(is_prime(g) == is_prime_by_closure(g));
            auto fast = find_nontrivial_module(g, 0);
            CHECK(fast.has_value() == ! is_prime(g));
            if (fast)
                CHECK(is_module(g, *fast));
        }
}

TEST_CASE("split partitions agree with the brute-force oracle and the forbidden-subgraph test")
{
    std::vector<Graph> forbid{pattern("2P2"), pattern("C4"), pattern("C5")};
    for (int n = 1; n <= 7; ++n)
        for (const auto & g : enumerate_graphs(n)) {
            auto ours = all_split_partitions(g);
            CHECK(ours == brute_split_partitions(g));
            CHECK(split_partition(g).has_value() == is_free(g, forbid));
        }
    auto p = split_partition(pattern("K1,3"));
    REQUIRE(p.has_value());
    CHECK(p->clique == VertexSet{0});
    CHECK(! split_partition(pattern("C4")));
    CHECK(! split_partition(pattern("C5")));
}

TEST_CASE("clique and independence numbers")
{
    for (int n = 1; n <= 6; ++n)
        for (const auto & g : enumerate_graphs(n)) {
            CHECK(clique_number(g) == brute_clique(g));
            CHECK(clique_number(g) == independence_number(complement(g)));
        }
    CHECK(clique_number(pattern("C5")) == 2);
    CHECK(independence_number(pattern("C5")) == 2);
    for (int k = 1; k <= 10; ++k)
        CHECK(clique_number(x_graph(k)) == brute_clique(x_graph(k)));
}

TEST_CASE("fixed vertex of odd self-complementary graphs")
{
    for (int n : {1, 5, 9})
        for (const auto & g : enumerate_self_complementary(n)) {
            auto r = fixed_vertex(g);
            CHECK(r.fixed_points == 1);
            CHECK(r.deletion_self_complementary);
        }
    // Every complementing permutation of C5 and the bull, found by exhaustive search.
    for (const auto & g : {pattern("C5"), pattern("bull")}) {
        int perms = 0;
        for_each_isomorphism(g, complement(g), [&](const std::vector<int> & f) {
            ++perms;
            CHECK(fixed_vertex(g, f).fixed_points == 1);
            return true;
        });
        CHECK(perms > 0);
    }
    auto r = fixed_vertex(pattern("bull"));
    CHECK(is_isomorphic(delete_vertices(pattern("bull"), {r.vertex}), pattern("P4")));
    CHECK_THROWS_AS(fixed_vertex(pattern("P4")), GraphError);
    CHECK_THROWS_AS(fixed_vertex(pattern("P3")), GraphError);
}

TEST_CASE("unique split partition of even self-complementary split graphs")
{
    auto p4 = unique_split_partition_check(pattern("P4"));
    CHECK(p4.pass);
    CHECK(p4.clique_size == 2);
    for (int k = 1; k <= 3; ++k) {
        auto r = unique_split_partition_check(x_graph(k));
        CHECK(r.pass);
        CHECK(r.partitions == 1);
        CHECK(r.clique_size == 4);
        CHECK(brute_split_partitions(x_graph(k)).size() == 1);
    }
    CHECK_THROWS_AS(unique_split_partition_check(x_graph(4)), GraphError);
    CHECK_THROWS_AS(unique_split_partition_check(pattern("C5")), GraphError);
}

TEST_CASE("bipartite Ramsey numbers")
{
    CHECK(bipartite_ramsey_check(2, 2, 5).holds);
    auto four = bipartite_ramsey_check(2, 2, 4);
    CHECK(! four.holds);
    REQUIRE(four.witness.size() == 4);
    CHECK(! has_monochromatic_biclique(four.witness, 4, 2, 2));
    CHECK(bipartite_ramsey_check(1, 1, 1).holds);
    CHECK(! bipartite_ramsey_check(2, 2, 1).holds);
    // K_{1,2}: any row of length 3 has two equal colours.
    CHECK(bipartite_ramsey_check(1, 2, 3).holds);
    CHECK(! bipartite_ramsey_check(1, 3, 3).holds);
}
