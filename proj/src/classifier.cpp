#include <cwlab/classifier.hpp>
#include <cwlab/canonical.hpp>
#include <cwlab/patterns.hpp>

#include <algorithm>
#include <functional>
#include <set>

namespace cwlab {

std::string to_string(Status s)
{
    switch (s) {
    case Status::Bounded:
        return "BOUNDED";
    case Status::Unbounded:
        return "UNBOUNDED";
    case Status::Open:
        return "OPEN";
    }
    return {};
}

namespace {

bool edgeless(const Graph & g) { return g.size() == 0; }
bool complete(const Graph & g) { return g.size() == g.order() * (g.order() - 1) / 2; }

// h is an induced subgraph of one of the named graphs; returns the first match.
std::string within(const Graph & h, const std::vector<std::string> & names)
{
    for (const auto & n : names)
        if (is_induced_subgraph(h, pattern(n)))
            return n;
    return {};
}

// One of the named graphs is an induced subgraph of h.
std::string containing(const Graph & h, const std::vector<std::string> & names)
{
    for (const auto & n : names)
        if (is_induced_subgraph(pattern(n), h))
            return n;
    return {};
}

struct Clause {
    std::string tag;
    Status status;
    std::function<std::string(const Graph &, const Graph &)> match;
};

// Each clause reads an ordered pair (H1, H2) and returns a description when it applies.
const std::vector<Clause> & clauses()
{
    static const std::vector<Clause> table = [] {
        std::vector<Clause> t;
        auto both = [](const std::string & a, const std::string & b) {
            return a.empty() || b.empty() ? std::string() : a + "; " + b;
        };
        t.push_back({"thm4-2i", Status::Unbounded, [](const Graph & a, const Graph & b) {
                         return ! is_in_S(a) && ! is_in_S(b) ? std::string("H1, H2 not in S") : std::string();
                     }});
        t.push_back({"thm4-2ii", Status::Unbounded, [](const Graph & a, const Graph & b) {
                         return ! is_in_S(complement(a)) && ! is_in_S(complement(b)) ? std::string("co-H1, co-H2 not in S")
                                                                                      : std::string();
                     }});
        t.push_back({"thm4-2iii", Status::Unbounded, [both](const Graph & a, const Graph & b) {
                         auto x = containing(a, {"K1,3", "2P2"});
                         auto y = containing(complement(b), {"4P1", "2P2"});
                         return both(x.empty() ? x : "H1 contains " + x, y.empty() ? y : "co-H2 contains " + y);
                     }});
        t.push_back({"thm4-2iv", Status::Unbounded, [both](const Graph & a, const Graph & b) {
                         auto x = containing(a, {"2P1+P2"});
                         auto y = containing(complement(b), {"K1,3", "5P1", "P2+P4", "P6"});
                         return both(x.empty() ? x : "H1 contains " + x, y.empty() ? y : "co-H2 contains " + y);
                     }});
        t.push_back({"thm4-2v", Status::Unbounded, [both](const Graph & a, const Graph & b) {
                         auto x = containing(a, {"3P1"});
                         auto y = containing(complement(b), {"2P1+2P2", "2P1+P4", "4P1+P2", "3P2", "2P3"});
                         return both(x.empty() ? x : "H1 contains " + x, y.empty() ? y : "co-H2 contains " + y);
                     }});
        t.push_back({"thm4-2vi", Status::Unbounded, [both](const Graph & a, const Graph & b) {
                         auto x = containing(a, {"4P1"});
                         auto y = containing(complement(b), {"P1+P4", "3P1+P2"});
                         return both(x.empty() ? x : "H1 contains " + x, y.empty() ? y : "co-H2 contains " + y);
                     }});
        t.push_back({"thm4-1i", Status::Bounded, [](const Graph & a, const Graph &) {
                         return is_induced_subgraph(a, pattern("P4")) ? std::string("H1 in P4") : std::string();
                     }});
        t.push_back({"thm4-1ii", Status::Bounded, [](const Graph & a, const Graph & b) {
                         return edgeless(a) && complete(b) ? std::string("H1 = sP1, H2 = Kt") : std::string();
                     }});
        t.push_back({"thm4-1iii", Status::Bounded, [both](const Graph & a, const Graph & b) {
                         auto x = within(a, {"P1+P3"});
                         auto y = within(complement(b), {"K1,3+3P1", "K1,3+P2", "P1+P2+P3", "P1+P5", "P1+S1,1,2", "P2+P4",
                                                         "P6", "S1,1,3", "S1,2,2"});
                         return both(x.empty() ? x : "H1 in " + x, y.empty() ? y : "co-H2 in " + y);
                     }});
        t.push_back({"thm4-1iv", Status::Bounded, [both](const Graph & a, const Graph & b) {
                         auto x = within(a, {"2P1+P2"});
                         auto y = within(complement(b), {"P1+2P2", "3P1+P2", "P2+P3"});
                         return both(x.empty() ? x : "H1 in " + x, y.empty() ? y : "co-H2 in " + y);
                     }});
        t.push_back({"thm4-1v", Status::Bounded, [both](const Graph & a, const Graph & b) {
                         auto x = within(a, {"P1+P4"});
                         auto y = within(complement(b), {"P1+P4", "P5"});
                         return both(x.empty() ? x : "H1 in " + x, y.empty() ? y : "co-H2 in " + y);
                     }});
        t.push_back({"thm4-1vi", Status::Bounded, [both](const Graph & a, const Graph & b) {
                         auto x = within(a, {"K1,3"});
                         auto y = within(complement(b), {"K1,3"});
                         return both(x.empty() ? x : "H1 in " + x, y.empty() ? y : "co-H2 in " + y);
                     }});
        t.push_back({"thm4-1vii", Status::Bounded, [both](const Graph & a, const Graph & b) {
                         auto x = within(a, {"2P1+P3"});
                         auto y = within(complement(b), {"2P1+P3"});
                         return both(x.empty() ? x : "H1 in " + x, y.empty() ? y : "co-H2 in " + y);
                     }});
        auto exact = [](const char * h1, std::vector<std::string> co2) {
            return [h1, co2](const Graph & a, const Graph & b) -> std::string {
                if (! is_isomorphic(a, pattern(h1)))
                    return {};
                Graph cb = complement(b);
                for (const auto & n : co2)
                    if (is_isomorphic(cb, pattern(n)))
                        return std::string("H1 = ") + h1 + ", co-H2 = " + n;
                return {};
            };
        };
        t.push_back({"open1-i", Status::Open, exact("3P1", {"P1+S1,1,3", "S1,2,3"})});
        t.push_back({"open1-ii", Status::Open, exact("2P1+P2", {"P1+P2+P3", "P1+P5"})});
        t.push_back({"open1-iii", Status::Open, exact("P1+P4", {"P1+2P2", "P2+P3"})});
        return t;
    }();
    return table;
}

std::pair<Graph, Graph> sorted_pair(const Graph & a, const Graph & b)
{
    Graph ca = canonical_graph(a), cb = canonical_graph(b);
    if (canonical_form(cb) < canonical_form(ca))
        std::swap(ca, cb);
    return {ca, cb};
}

// The first matching clause of the given status, over the orbit and both orders.
std::optional<Verdict> first_hit(const std::vector<std::pair<Graph, Graph>> & orbit, Status status)
{
    for (const auto & c : clauses()) {
        if (c.status != status)
            continue;
        for (const auto & [a, b] : orbit)
            for (int order = 0; order < 2; ++order) {
                auto d = order == 0 ? c.match(a, b) : c.match(b, a);
                if (! d.empty())
                    return Verdict{status, c.tag, d, false};
            }
    }
    return std::nullopt;
}

std::string s_bound_match(const Graph & h)
{
    const int s = std::max(1, h.order());
    std::vector<std::string> names{"K1,3", "P1+P4", "2P1+P3", std::to_string(s) + "P1"};
    if (auto m = within(h, names); ! m.empty())
        return "H in " + m;
    if (auto m = within(complement(h), names); ! m.empty())
        return "co-H in " + m;
    return {};
}

} // namespace

Verdict classify_single(const Graph & h)
{
    if (is_induced_subgraph(h, pattern("P4")))
        return {Status::Bounded, "p4", "H in P4"};
    return {Status::Unbounded, "p4", "H not in P4"};
}

Verdict classify_self_comp_set(const std::vector<Graph> & hs)
{
    for (const auto & h : hs) {
        if (h.order() == 0)
            throw GraphError("forbidden graphs must be non-empty");
        if (! is_self_complementary(h))
            throw GraphError("forbidden graphs must be self-complementary");
    }
    for (const auto & h : hs) {
        if (is_isomorphic(h, pattern("P1")))
            return {Status::Bounded, "thm1", "P1 forbidden"};
        if (is_isomorphic(h, pattern("P4")))
            return {Status::Bounded, "thm1", "P4 forbidden"};
    }
    return {Status::Unbounded, "thm1", "neither P1 nor P4 forbidden"};
}

Verdict classify_pair_complement(const Graph & h)
{
    if (auto m = s_bound_match(h); ! m.empty())
        return {Status::Bounded, "thm2", m};
    return {Status::Unbounded, "thm2", "neither H nor co-H in K1,3, P1+P4, 2P1+P3, sP1"};
}

Verdict classify_pair_with_family(const Graph & h, const std::vector<Graph> & family)
{
    for (const auto & f : family) {
        if (f.order() < 5)
            throw GraphError("inapplicable: family member on fewer than five vertices");
        if (! is_self_complementary(f))
            throw GraphError("inapplicable: family member is not self-complementary");
        if (is_isomorphic(f, pattern("bull")))
            throw GraphError("inapplicable: family contains the bull");
    }
    Verdict v = classify_pair_complement(h);
    v.citation = "thm3";
    return v;
}

std::vector<std::pair<Graph, Graph>> bigenic_orbit(const Graph & h1, const Graph & h2)
{
    const Graph k3 = pattern("K3"), paw = pattern("co-(P1+P3)");
    std::vector<std::pair<Graph, Graph>> out;
    std::set<std::pair<CanonicalForm, CanonicalForm>> seen;
    std::vector<std::pair<Graph, Graph>> todo{sorted_pair(h1, h2)};
    while (! todo.empty()) {
        auto p = todo.back();
        todo.pop_back();
        if (! seen.insert({canonical_form(p.first), canonical_form(p.second)}).second)
            continue;
        out.push_back(p);
        todo.push_back(sorted_pair(complement(p.first), complement(p.second)));
        auto swap_one = [&](const Graph & g) -> std::optional<Graph> {
            if (is_isomorphic(g, k3))
                return paw;
            if (is_isomorphic(g, paw))
                return k3;
            return std::nullopt;
        };
        if (auto s = swap_one(p.first))
            todo.push_back(sorted_pair(*s, p.second));
        if (auto s = swap_one(p.second))
            todo.push_back(sorted_pair(p.first, *s));
    }
    std::sort(out.begin(), out.end(), [](const auto & x, const auto & y) {
        return std::pair(canonical_form(x.first), canonical_form(x.second)) <
               std::pair(canonical_form(y.first), canonical_form(y.second));
    });
    return out;
}

std::pair<Graph, Graph> normalize_bigenic(const Graph & h1, const Graph & h2) { return bigenic_orbit(h1, h2).front(); }

Verdict classify_bigenic(const Graph & h1, const Graph & h2)
{
    auto orbit = bigenic_orbit(h1, h2);
    for (Status s : {Status::Unbounded, Status::Bounded, Status::Open})
        if (auto v = first_hit(orbit, s))
            return *v;
    return {Status::Open, "none", "no clause applies", true};
}

ClauseHits bigenic_clause_hits(const Graph & h1, const Graph & h2)
{
    ClauseHits hits;
    auto orbit = bigenic_orbit(h1, h2);
    for (const auto & c : clauses()) {
        bool hit = false;
        for (const auto & [a, b] : orbit)
            hit = hit || ! c.match(a, b).empty() || ! c.match(b, a).empty();
        if (! hit)
            continue;
        (c.status == Status::Bounded ? hits.bounded : c.status == Status::Unbounded ? hits.unbounded : hits.open).push_back(c.tag);
    }
    return hits;
}

} // namespace cwlab
