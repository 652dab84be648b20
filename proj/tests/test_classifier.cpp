#include <cwlab/canonical.hpp>
#include <cwlab/classifier.hpp>
#include <cwlab/patterns.hpp>

#include <doctest.h>

#include <set>

using namespace cwlab;

namespace {

std::vector<Graph> graphs_upto(int n)
{
    std::vector<Graph> out;
    for (int k = 1; k <= n; ++k)
        for (auto & g : enumerate_graphs(k))
            out.push_back(g);
    return out;
}

Graph co(const char * name) { return complement(pattern(name)); }

} // namespace

TEST_CASE("single forbidden graph")
{
    CHECK(classify_single(pattern("P4")).status == Status::Bounded);
    CHECK(classify_single(pattern("P1")).status == Status::Bounded);
    CHECK(classify_single(pattern("C5")).status == Status::Unbounded);
    CHECK(classify_single(pattern("K3")).status == Status::Unbounded);
    CHECK(classify_single(pattern("2P1")).status == Status::Bounded);
}

TEST_CASE("sets of self-complementary graphs")
{
    CHECK(classify_self_comp_set({pattern("C5"), pattern("P4")}).status == Status::Bounded);
    CHECK(classify_self_comp_set({pattern("C5"), pattern("bull")}).status == Status::Unbounded);
    CHECK(classify_self_comp_set({pattern("P1")}).status == Status::Bounded);
    CHECK(classify_self_comp_set({x_graph(1), x_graph(5)}).status == Status::Unbounded);
    CHECK_THROWS_AS(classify_self_comp_set({pattern("P3")}), GraphError);
    CHECK_THROWS_AS(classify_self_comp_set({Graph(0)}), GraphError);
}

TEST_CASE("a graph and its complement")
{
    CHECK(classify_pair_complement(pattern("2P1+P3")).status == Status::Bounded);
    CHECK(classify_pair_complement(pattern("S1,1,2")).status == Status::Unbounded);
    CHECK(classify_pair_complement(pattern("2P2")).status == Status::Unbounded);
    CHECK(classify_pair_complement(pattern("7P1")).status == Status::Bounded);
    CHECK(classify_pair_complement(pattern("K6")).status == Status::Bounded);
    CHECK(classify_pair_complement(co("P1+P4")).status == Status::Bounded);
    CHECK(classify_pair_complement(pattern("C5")).status == Status::Unbounded);

    CHECK(classify_pair_with_family(pattern("2P2"), {pattern("C5")}).status == Status::Unbounded);
    auto v = classify_pair_with_family(pattern("2P1+P3"), {pattern("C5"), x_graph(1)});
    CHECK(v.status == Status::Bounded);
    CHECK(v.citation == "thm3");
    CHECK_THROWS_AS(classify_pair_with_family(pattern("P5"), {pattern("bull")}), GraphError);
    CHECK_THROWS_AS(classify_pair_with_family(pattern("P5"), {pattern("P4")}), GraphError);
    CHECK_THROWS_AS(classify_pair_with_family(pattern("P5"), {pattern("C6")}), GraphError);
}

TEST_CASE("equivalence orbits")
{
    Graph g = pattern("P5");
    CHECK(normalize_bigenic(pattern("K3"), g) == normalize_bigenic(co("P1+P3"), g));
    CHECK(normalize_bigenic(pattern("C4"), g) == normalize_bigenic(co("C4"), complement(g)));
    CHECK(normalize_bigenic(pattern("C4"), g) == normalize_bigenic(g, pattern("C4")));
    CHECK(bigenic_orbit(pattern("C5"), pattern("P4")).size() == 1);
    // Each K3 may independently become co-(P1+P3), then everything complemented.
    CHECK(bigenic_orbit(pattern("K3"), pattern("K3")).size() == 6);
}

TEST_CASE("bigenic classes")
{
    auto v = classify_bigenic(pattern("2P1+P3"), co("2P1+P3"));
    CHECK(v.status == Status::Bounded);
    CHECK(v.citation == "thm4-1vii");
    auto o = classify_bigenic(pattern("3P1"), co("S1,2,3"));
    CHECK(o.status == Status::Open);
    CHECK(o.citation == "open1-i");
    CHECK(! o.coverage_gap);
    CHECK(classify_bigenic(pattern("2P1+P2"), co("P1+P5")).citation == "open1-ii");
    CHECK(classify_bigenic(pattern("P1+P4"), co("P2+P3")).citation == "open1-iii");
    auto u = classify_bigenic(pattern("2P2"), co("2P2"));
    CHECK(u.status == Status::Unbounded);
    CHECK(classify_bigenic(pattern("C4"), pattern("K4")).status == Status::Unbounded);
    CHECK(classify_bigenic(pattern("4P1"), pattern("K5")).citation == "thm4-1ii");
    CHECK(classify_bigenic(pattern("P4"), pattern("C6")).citation == "thm4-1i");
}

TEST_CASE("classifier consistency on small pairs")
{
    auto small = graphs_upto(4);
    for (std::size_t i = 0; i < small.size(); ++i)
        for (std::size_t j = 0; j < small.size(); ++j) {
            const auto & a = small[i];
            const auto & b = small[j];
            auto v = classify_bigenic(a, b);
            CHECK(v.status != Status::Open);
            CHECK(classify_bigenic(b, a).status == v.status);
            CHECK(classify_bigenic(complement(a), complement(b)).status == v.status);
            auto hits = bigenic_clause_hits(a, b);
            CHECK((hits.bounded.empty() || hits.unbounded.empty()));
        }
    for (const auto & h : graphs_upto(5))
        CHECK(classify_pair_complement(h).status == classify_bigenic(h, complement(h)).status);
}

TEST_CASE("open pairs up to six vertices are exactly the listed families")
{
    std::set<std::pair<CanonicalForm, CanonicalForm>> open, expected;
    auto key = [](const Graph & a, const Graph & b) {
        auto p = normalize_bigenic(a, b);
        return std::pair(canonical_form(p.first), canonical_form(p.second));
    };
    for (auto [h1, co2] : std::vector<std::pair<const char *, const char *>>{
             {"2P1+P2", "P1+P2+P3"}, {"2P1+P2", "P1+P5"}, {"P1+P4", "P1+2P2"}, {"P1+P4", "P2+P3"}})
        expected.insert(key(pattern(h1), co(co2)));
    auto small = graphs_upto(5);
    auto big = graphs_upto(6);
    for (const auto & a : small)
        for (const auto & b : big) {
            auto v = classify_bigenic(a, b);
            CHECK_MESSAGE(! v.coverage_gap, to_string(v.status));
            auto hits = bigenic_clause_hits(a, b);
            CHECK((hits.bounded.empty() || hits.unbounded.empty()));
            if (v.status == Status::Open)
                open.insert(key(a, b));
        }
    CHECK(open == expected);
}
