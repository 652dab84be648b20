#include <cwlab/suites.hpp>
#include <cwlab/canonical.hpp>
#include <cwlab/classifier.hpp>
#include <cwlab/cliquewidth.hpp>
#include <cwlab/generators.hpp>
#include <cwlab/io.hpp>
#include <cwlab/patterns.hpp>
#include <cwlab/structure.hpp>
#include <cwlab/victor.hpp>

#include <chrono>
#include <functional>
#include <map>
#include <stdexcept>

namespace cwlab {

std::string SuiteReport::text() const
{
    std::string out;
    for (const auto & item : items) {
        out += "ITEM " + item.key + (item.pass ? " PASS" : " FAIL");
        if (! item.witness.empty())
            out += " " + item.witness;
        out += "\n";
    }
    out += (pass ? "PASS " : "FAIL ") + summary + "\n";
    return out;
}

namespace {

// Accumulates one item per key; the first failure supplies the witness.
class Collector {
public:
    void check(const std::string & key, bool ok, const std::string & witness = {})
    {
        auto it = index_.find(key);
        if (it == index_.end()) {
            index_[key] = items_.size();
            items_.push_back({key, ok, ok ? std::string() : witness});
            return;
        }
        auto & item = items_[it->second];
        if (item.pass && ! ok) {
            item.pass = false;
            item.witness = witness;
        }
    }

    SuiteReport finish(const std::string & name, const std::string & summary)
    {
        SuiteReport r{name, std::move(items_), true, summary};
        for (const auto & i : r.items)
            r.pass = r.pass && i.pass;
        return r;
    }

private:
    std::vector<SuiteItem> items_;
    std::map<std::string, std::size_t> index_;
};

std::string g6(const Graph & g)
{
    auto s = write_graph6(g);
    while (! s.empty() && s.back() == '\n')
        s.pop_back();
    return s;
}

std::string key_n(int n) { return "n=" + std::to_string(n); }

int count_graphs(const std::vector<std::vector<Graph>> & by_n)
{
    int c = 0;
    for (std::size_t n = 1; n < by_n.size(); ++n)
        c += static_cast<int>(by_n[n].size());
    return c;
}

bool free_2p1p3(const Graph & g)
{
    static const Graph a = pattern("2P1+P3");
    static const Graph b = complement(pattern("2P1+P3"));
    return is_free(g, {a, b});
}

std::vector<std::vector<Graph>> all_upto(int n)
{
    std::vector<std::vector<Graph>> out;
    for (int k = 0; k <= n; ++k)
        out.push_back(enumerate_graphs(k, std::max(9, n)));
    return out;
}

SuiteReport exact_sanity(const SuiteOptions &)
{
    Collector c;
    auto timed = [&](const std::string & key, const Graph & g, int expect) {
        auto start = std::chrono::steady_clock::now();
        int w = cliquewidth(g);
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        c.check(key, w == expect && secs < 1.0, "cw=" + std::to_string(w));
    };
    for (int s = 1; s <= 8; ++s)
        timed(std::to_string(s) + "P1", Graph(s), 1);
    for (int n = 2; n <= 10; ++n)
        timed("K" + std::to_string(n), complete_graph(n), 2);
    timed("P4", pattern("P4"), 3);
    timed("C5", pattern("C5"), 3);
    return c.finish("exact-sanity", "exact clique-width of sP1, Kn, P4, C5");
}

SuiteReport degree2(const SuiteOptions & o)
{
    const int max_n = o.max_n.value_or(7);
    Collector c;
    int count = 0;
    auto by_n = enumerate_hereditary_upto(max_n, [](const Graph & g) { return max_degree(g) <= 2; });
    for (int n = 1; n <= max_n; ++n)
        for (const auto & g : by_n[n]) {
            ++count;
            auto cert = degree2_expression(g);
            int w = cliquewidth(g);
            c.check(key_n(n), w <= 4 && verify_certificate(cert) && cert.width <= 4, g6(g));
        }
    return c.finish("degree2", std::to_string(count) + " graphs with max degree 2 have cw <= 4");
}

SuiteReport p4_free(const SuiteOptions & o)
{
    const int max_n = o.max_n.value_or(7);
    Collector c;
    const Graph p4 = pattern("P4");
    auto by_n = enumerate_hereditary_upto(max_n, [&](const Graph & g) { return ! contains_induced(g, p4); });
    for (int n = 1; n <= max_n; ++n)
        for (const auto & g : by_n[n]) {
            auto cert = cograph_expression(g);
            c.check(key_n(n), cliquewidth(g) <= 2 && verify_certificate(cert) && cert.width <= 2, g6(g));
        }
    return c.finish("p4-free", std::to_string(count_graphs(by_n)) + " P4-free graphs have cw <= 2");
}

SuiteReport complement_bound(const SuiteOptions & o)
{
    const int max_n = o.max_n.value_or(6);
    Collector c;
    auto by_n = all_upto(max_n);
    for (int n = 1; n <= max_n; ++n)
        for (const auto & g : by_n[n])
            c.check(key_n(n), cliquewidth(complement(g)) <= 2 * cliquewidth(g), g6(g));
    return c.finish("complement-bound", "cw(co-G) <= 2 cw(G) on " + std::to_string(count_graphs(by_n)) + " graphs");
}

SuiteReport prime(const SuiteOptions & o)
{
    const int max_n = o.max_n.value_or(6);
    Collector c;
    auto by_n = all_upto(max_n);
    for (int n = 1; n <= max_n; ++n)
        for (const auto & g : by_n[n])
            c.check(key_n(n), cw_via_primes(g) == cliquewidth(g), g6(g));
    return c.finish("prime", "modular decomposition matches exact cw on " + std::to_string(count_graphs(by_n)) + " graphs");
}

SuiteReport split_char(const SuiteOptions & o)
{
    const int max_n = o.max_n.value_or(7);
    Collector c;
    std::vector<Graph> forbid{pattern("2P2"), pattern("C4"), pattern("C5")};
    auto by_n = all_upto(max_n);
    for (int n = 1; n <= max_n; ++n)
        for (const auto & g : by_n[n]) {
            auto p = split_partition(g);
            bool valid = ! p || (is_clique(g, p->clique) && is_independent(g, p->indep) &&
                                 p->clique.size() + p->indep.size() == static_cast<std::size_t>(n));
            c.check(key_n(n), valid && p.has_value() == is_free(g, forbid), g6(g));
        }
    return c.finish("split-char", "split iff (2P2,C4,C5)-free on " + std::to_string(count_graphs(by_n)) + " graphs");
}

SuiteReport ramsey(const SuiteOptions &)
{
    Collector c;
    c.check("Rb(2,2,5)", bipartite_ramsey_check(2, 2, 5).holds);
    auto four = bipartite_ramsey_check(2, 2, 4);
    std::string w;
    for (auto row : four.witness) {
        if (! w.empty())
            w += "/";
        for (int j = 0; j < 4; ++j)
            w += (row >> j) & 1U ? 'R' : 'B';
    }
    bool ok = ! four.holds && four.witness.size() == 4 && ! has_monochromatic_biclique(four.witness, 4, 2, 2);
    c.check("Rb(2,2,4)", ok, w);
    auto r = c.finish("ramsey", "Rb(2,2)=5");
    if (r.pass)
        r.items[1].witness = w;
    return r;
}

SuiteReport sc_catalog(const SuiteOptions &)
{
    Collector c;
    const std::map<int, int> expect{{1, 1}, {2, 0}, {3, 0}, {4, 1}, {5, 2}, {6, 0}, {7, 0}, {8, 10}};
    for (auto [n, count] : expect) {
        auto sc = enumerate_self_complementary(n);
        c.check(key_n(n) + " count", static_cast<int>(sc.size()) == count, std::to_string(sc.size()));
        for (const auto & g : sc)
            c.check(key_n(n) + " edges", g.size() * 4 == n * (n - 1) && is_self_complementary(g), g6(g));
    }
    auto five = enumerate_self_complementary(5);
    bool c5 = false, bull = false;
    for (const auto & g : five) {
        c5 = c5 || is_isomorphic(g, pattern("C5"));
        bull = bull || is_isomorphic(g, pattern("bull"));
    }
    c.check("n=5 is {C5, bull}", c5 && bull);
    auto eight = enumerate_self_complementary(8);
    for (int k = 1; k <= 10; ++k) {
        bool found = false;
        for (const auto & g : eight)
            found = found || is_isomorphic(g, x_graph(k));
        c.check("X" + std::to_string(k) + " listed", found);
    }
    return c.finish("sc-catalog", "self-complementary counts 1, 1, 2, 10 for n = 1, 4, 5, 8");
}

SuiteReport sc_ramsey(const SuiteOptions & o)
{
    const int max_n = o.max_n.value_or(9);
    Collector c;
    std::vector<Graph> forbid{pattern("C4"), pattern("C5"), pattern("K4")};
    const Graph bull = pattern("bull");
    int hits = 0;
    for (int n = 1; n <= max_n; ++n)
        for (const auto & g : enumerate_self_complementary(n)) {
            bool ok = true;
            if (is_free(g, forbid)) {
                ++hits;
                ok = is_induced_subgraph(g, bull);
            }
            c.check(key_n(n), ok, g6(g));
        }
    return c.finish("sc-ramsey", std::to_string(hits) + " (C4,C5,K4)-free self-complementary graphs, all inside the bull");
}

SuiteReport sc_structure(const SuiteOptions &)
{
    Collector c;
    for (int n : {5, 9})
        for (const auto & g : enumerate_self_complementary(n)) {
            auto r = fixed_vertex(g);
            c.check("fixed vertex " + key_n(n), r.fixed_points == 1 && r.deletion_self_complementary, g6(g));
        }
    for (int k = 1; k <= 3; ++k) {
        auto r = unique_split_partition_check(x_graph(k));
        c.check("X" + std::to_string(k) + " unique split partition",
                r.pass && r.partitions == 1 && r.clique_size == 4 && r.indep_size == 4);
    }
    int split_members = 0;
    for (const auto & g : enumerate_self_complementary(8))
        if (split_partition(g)) {
            ++split_members;
            c.check("omega of split n=8", clique_number(g) == 4, g6(g));
        }
    c.check("three split members at n=8", split_members == 3, std::to_string(split_members));
    return c.finish("sc-structure", "fixed vertices, unique split partitions, omega = 4");
}

// Every partition of V(g) into (x, y) with the requested block types.
template <class F>
void two_block_partitions(const Graph & g, bool any_types, F && visit)
{
    const int n = g.order();
    for (std::uint32_t mask = 0; mask < (1U << n); ++mask) {
        VertexSet x, y;
        for (int v = 0; v < n; ++v)
            ((mask >> v) & 1U ? x : y).push_back(v);
        if (any_types) {
            if (! (mask & 1U))
                continue;
            bool xo = is_clique(g, x) || is_independent(g, x);
            bool yo = is_clique(g, y) || is_independent(g, y);
            if (xo && yo)
                visit(x, y);
        }
        else if (is_clique(g, x) && is_independent(g, y))
            visit(x, y);
    }
}

SuiteReport matching_comatching(const SuiteOptions & o)
{
    const int max_n = o.max_n.value_or(8);
    Collector c;
    auto by_n = enumerate_hereditary_upto(max_n, free_2p1p3);
    long parts = 0;
    for (int n = 1; n <= max_n; ++n)
        for (const auto & g : by_n[n])
            two_block_partitions(g, true, [&](const VertexSet & x, const VertexSet & y) {
                ++parts;
                auto r = find_matching_reduction(g, x, y, 1);
                c.check(key_n(n), r.has_value(), g6(g) + " " + format_set(x));
            });
    return c.finish("matching-comatching", std::to_string(parts) + " partitions reduce with at most one deletion per side");
}

SuiteReport comp_anti(const SuiteOptions & o)
{
    const int max_n = o.max_n.value_or(8);
    Collector c;
    auto by_n = enumerate_hereditary_upto(max_n, free_2p1p3);
    long parts = 0;
    for (int n = 1; n <= max_n; ++n)
        for (const auto & g : by_n[n])
            two_block_partitions(g, false, [&](const VertexSet & x, const VertexSet & y) {
                ++parts;
                auto r = find_comp_anti_reduction(g, x, y, 3);
                c.check(key_n(n), r.has_value(), g6(g) + " " + format_set(x));
            });
    return c.finish("comp-anti", std::to_string(parts) + " clique/independent partitions reduce with at most three deletions per side");
}

SuiteReport victor(const SuiteOptions & o)
{
    const int max_n = o.max_n.value_or(9);
    Collector c;
    auto by_n = enumerate_hereditary_upto(max_n, free_2p1p3);
    const Width128 constant = victor_width_constant();
    int runs = 0, widest = 0;
    for (int n = 1; n <= max_n; ++n)
        for (const auto & g : by_n[n]) {
            auto part = find_mixed_partition(g, 3, 3);
            if (! part)
                continue;
            ++runs;
            bool ok = false;
            try {
                auto rep = victor_pipeline_report(g, *part);
                ok = rep.certificate.graph == g && verify_certificate(rep.certificate) &&
                     static_cast<Width128>(rep.certificate.width) <= constant;
                widest = std::max(widest, rep.certificate.width);
            }
            catch (const std::exception &) {
                ok = false;
            }
            c.check(key_n(n), ok, g6(g));
        }
    return c.finish("victor", std::to_string(runs) + " certificates, widest " + std::to_string(widest) + ", constant " +
                                  to_decimal(constant));
}

SuiteReport thm8(const SuiteOptions & o)
{
    const int max_n = o.max_n.value_or(8);
    Collector c;
    auto by_n = enumerate_hereditary_upto(max_n, free_2p1p3);
    int best = 0;
    for (int n = 1; n <= max_n; ++n) {
        int at_n = 0;
        for (const auto & g : by_n[n])
            at_n = std::max(at_n, cliquewidth(g));
        best = std::max(best, at_n);
        c.check(key_n(n) + " max-cw=" + std::to_string(at_n), static_cast<Width128>(at_n) <= victor_width_constant());
    }
    return c.finish("thm8", "max cw " + std::to_string(best) + " over " + std::to_string(count_graphs(by_n)) +
                                " graphs, constant " + to_decimal(victor_width_constant()));
}

SuiteReport thm567(const SuiteOptions &)
{
    Collector c;
    auto report = [&](const std::string & prefix, const Graph & g, const std::vector<std::string> & claims) {
        for (const auto & item : freeness_report(g, claims))
            c.check(prefix + " " + item.pattern + "-free", item.pass, format_set(item.witness));
    };
    for (int h : {2, 3}) {
        const std::string hs = "h=" + std::to_string(h);
        auto t5 = thm5_graph(h);
        report("thm5 " + hs, t5.graph, thm5_claimed());
        VertexSet v[3];
        for (int x = 0; x < t5.graph.order(); ++x)
            v[t5.trace.classes[x][1] - '1'].push_back(x);
        c.check("thm5 " + hs + " three cliques", is_clique(t5.graph, v[0]) && is_clique(t5.graph, v[1]) && is_clique(t5.graph, v[2]));
        c.check("thm5 " + hs + " V2 anti-complete to V3", is_anticomplete_between(t5.graph, v[1], v[2]));
        c.check("thm5 " + hs + " replay", replay(t5.trace) == t5.graph);

        auto t6 = thm6_graph(h);
        report("thm6 " + hs, t6.graph, thm6_claimed());
        c.check("thm6 " + hs + " subdivided girth 12", girth(subdivide_all(wall(h).graph, 1).graph) == 12);
        c.check("thm6 " + hs + " replay", replay(t6.trace) == t6.graph);

        auto t7 = thm7_graph(h);
        report("thm7 " + hs, t7.graph, thm7_claimed());
        VertexSet a, b;
        for (int x = 0; x < t7.graph.order(); ++x)
            (t7.trace.classes[x] == "A" ? a : b).push_back(x);
        c.check("thm7 " + hs + " split (A, B)", is_clique(t7.graph, a) && is_independent(t7.graph, b));
        bool b_non = true, a_nb = true;
        for (int y : b) {
            bool non = false;
            for (int x : a)
                non = non || ! t7.graph.adjacent(x, y);
            b_non = b_non && non;
        }
        for (int x : a)
            a_nb = a_nb && t7.graph.neighbours(x).intersects(to_bitset(t7.graph, b));
        c.check("thm7 " + hs + " B has non-neighbours in A", b_non);
        c.check("thm7 " + hs + " A has neighbours in B", a_nb);
        c.check("thm7 " + hs + " base (C4,C8)-free",
                is_free(subdivide_all(wall(h).graph, 2).graph, {pattern("C4"), pattern("C8")}));
        c.check("thm7 " + hs + " replay", replay(t7.trace) == t7.graph);
        if (h == 2) {
            auto parts = all_split_partitions(t7.graph);
            c.check("thm7 h=2 unique split partition", parts.size() == 1 && parts[0].clique == a,
                    std::to_string(parts.size()));
        }
    }
    return c.finish("thm567-freeness", "constructions free of their claimed subgraphs at heights 2 and 3");
}

SuiteReport classifier(const SuiteOptions &)
{
    Collector c;
    std::vector<Graph> small, five;
    for (int n = 1; n <= 5; ++n)
        for (const auto & g : enumerate_graphs(n)) {
            if (n <= 4)
                small.push_back(g);
            five.push_back(g);
        }
    int pairs = 0;
    for (const auto & a : small)
        for (const auto & b : small) {
            ++pairs;
            const std::string w = g6(a) + " " + g6(b);
            auto v = classify_bigenic(a, b);
            c.check("never open", v.status != Status::Open, w);
            c.check("symmetric", classify_bigenic(b, a).status == v.status, w);
            c.check("complement invariant", classify_bigenic(complement(a), complement(b)).status == v.status, w);
            auto hits = bigenic_clause_hits(a, b);
            c.check("no clause conflict", hits.bounded.empty() || hits.unbounded.empty(), w);
        }
    for (const auto & h : five)
        c.check("pair-complement agrees", classify_pair_complement(h).status == classify_bigenic(h, complement(h)).status, g6(h));
    return c.finish("classifier", std::to_string(pairs) + " pairs on at most 4 vertices classified consistently");
}

SuiteReport useful(const SuiteOptions & o)
{
    const int max_n = o.max_n.value_or(10);
    Collector c;
    auto r = lemma_useful_check(max_n);
    c.check("class S up to n=" + std::to_string(max_n), r.pass, r.counterexample ? g6(*r.counterexample) : std::string());
    return c.finish("useful", std::to_string(r.checked) + " graphs of class S checked");
}

using SuiteFn = std::function<SuiteReport(const SuiteOptions &)>;

const std::vector<std::pair<std::string, SuiteFn>> & registry()
{
    static const std::vector<std::pair<std::string, SuiteFn>> r{
        {"exact-sanity", exact_sanity},
        {"degree2", degree2},
        {"p4-free", p4_free},
        {"complement-bound", complement_bound},
        {"prime", prime},
        {"split-char", split_char},
        {"ramsey", ramsey},
        {"sc-catalog", sc_catalog},
        {"sc-ramsey", sc_ramsey},
        {"sc-structure", sc_structure},
        {"matching-comatching", matching_comatching},
        {"comp-anti", comp_anti},
        {"victor", victor},
        {"thm8", thm8},
        {"thm567-freeness", thm567},
        {"classifier", classifier},
        {"useful", useful},
    };
    return r;
}

} // namespace

const std::vector<std::string> & suite_names()
{
    static const std::vector<std::string> names = [] {
        std::vector<std::string> out;
        for (const auto & [n, f] : registry())
            out.push_back(n);
        return out;
    }();
    return names;
}

SuiteReport run_suite(const std::string & name, const SuiteOptions & options)
{
    for (const auto & [n, f] : registry())
        if (n == name)
            return f(options);
    throw std::invalid_argument("unknown suite '" + name + "'");
}

} // namespace cwlab
