#include <cwlab/canonical.hpp>
#include <cwlab/patterns.hpp>

#include <algorithm>
#include <cctype>
#include <functional>
#include <set>

namespace cwlab {

namespace {

// Adjacency of X1..X10, vertices 1..8, transcribed from the drawings.
const int x_edges[10][14][2] = {
    {{1, 2}, {1, 3}, {3, 4}, {2, 4}, {1, 5}, {1, 6}, {2, 5}, {2, 7}, {4, 7}, {4, 8}, {3, 6}, {3, 8}, {1, 4}, {2, 3}},
    {{1, 2}, {2, 3}, {3, 4}, {5, 1}, {5, 2}, {5, 3}, {6, 2}, {7, 3}, {8, 2}, {8, 3}, {8, 4}, {1, 4}, {1, 3}, {2, 4}},
    {{1, 2}, {2, 3}, {3, 4}, {5, 1}, {5, 2}, {6, 1}, {6, 2}, {7, 3}, {7, 4}, {8, 3}, {8, 4}, {1, 4}, {1, 3}, {2, 4}},
    {{1, 2}, {1, 3}, {2, 4}, {3, 4}, {5, 6}, {7, 8}, {5, 7}, {6, 8}, {3, 5}, {4, 6}, {1, 5}, {2, 6}, {3, 7}, {4, 8}},
    {{1, 2}, {3, 4}, {1, 5}, {1, 6}, {3, 5}, {3, 6}, {2, 7}, {2, 8}, {4, 7}, {4, 8}, {1, 4}, {2, 3}, {5, 6}, {7, 8}},
    {{1, 2}, {1, 5}, {1, 6}, {3, 5}, {3, 6}, {2, 7}, {2, 8}, {4, 7}, {4, 8}, {1, 4}, {2, 3}, {5, 6}, {7, 8}, {6, 7}},
    {{1, 2}, {1, 5}, {1, 6}, {3, 5}, {3, 6}, {2, 7}, {2, 8}, {4, 7}, {4, 8}, {1, 4}, {2, 3}, {1, 3}, {2, 4}, {6, 7}},
    {{1, 2}, {1, 3}, {3, 4}, {2, 4}, {1, 5}, {1, 6}, {2, 5}, {2, 7}, {4, 7}, {4, 8}, {3, 6}, {3, 8}, {5, 8}, {6, 7}},
    {{1, 2}, {1, 3}, {3, 4}, {2, 4}, {1, 5}, {1, 6}, {2, 5}, {2, 7}, {4, 7}, {4, 8}, {3, 6}, {3, 8}, {6, 7}, {2, 3}},
    {{1, 2}, {2, 3}, {3, 4}, {5, 1}, {5, 2}, {5, 3}, {5, 4}, {5, 6}, {6, 7}, {7, 8}, {8, 1}, {8, 2}, {8, 3}, {8, 4}},
};

[[noreturn]] void bad_name(std::string_view name, const std::string & why)
{
    throw GraphError("bad pattern name '" + std::string(name) + "': " + why);
}

int read_int(std::string_view & s, std::string_view whole)
{
    std::size_t i = 0;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i])))
        ++i;
    if (i == 0)
        bad_name(whole, "expected a number");
    if (i > 6)
        bad_name(whole, "number too large");
    int v = std::stoi(std::string(s.substr(0, i)));
    s.remove_prefix(i);
    return v;
}

Atom parse_atom(std::string_view s, std::string_view whole)
{
    if (s == "bull")
        return {AtomKind::Bull, {}};
    if (s.empty())
        bad_name(whole, "empty term");
    char head = s[0];
    s.remove_prefix(1);
    std::vector<int> nums{read_int(s, whole)};
    while (! s.empty() && s[0] == ',') {
        s.remove_prefix(1);
        nums.push_back(read_int(s, whole));
    }
    if (! s.empty())
        bad_name(whole, "unexpected '" + std::string(s) + "'");
    auto want = [&](std::size_t k) {
        if (nums.size() != k)
            bad_name(whole, "wrong number of parameters");
    };
    switch (head) {
    case 'P':
        want(1);
        if (nums[0] < 1)
            bad_name(whole, "P_r needs r >= 1");
        return {AtomKind::Path, nums};
    case 'C':
        want(1);
        if (nums[0] < 3)
            bad_name(whole, "C_r needs r >= 3");
        return {AtomKind::Cycle, nums};
    case 'K':
        if (nums.size() == 1) {
            if (nums[0] < 1)
                bad_name(whole, "K_r needs r >= 1");
            return {AtomKind::Complete, nums};
        }
        want(2);
        if (nums[0] != 1 || nums[1] < 1)
            bad_name(whole, "stars are written K1,r with r >= 1");
        return {AtomKind::Star, {nums[1]}};
    case 'S':
        want(3);
        if (! (1 <= nums[0] && nums[0] <= nums[1] && nums[1] <= nums[2]))
            bad_name(whole, "S_h,i,j needs 1 <= h <= i <= j");
        return {AtomKind::Claw, nums};
    case 'X':
        want(1);
        if (nums[0] < 1 || nums[0] > 10)
            bad_name(whole, "X_k needs 1 <= k <= 10");
        return {AtomKind::X, nums};
    default:
        bad_name(whole, "unknown atom");
    }
}

Graph instantiate_atom(const Atom & a)
{
    switch (a.kind) {
    case AtomKind::Path:
        return path_graph(a.params[0]);
    case AtomKind::Cycle:
        return cycle_graph(a.params[0]);
    case AtomKind::Complete:
        return complete_graph(a.params[0]);
    case AtomKind::Star:
        return star_graph(a.params[0]);
    case AtomKind::Claw:
        return subdivided_claw(a.params[0], a.params[1], a.params[2]);
    case AtomKind::Bull:
        return bull_graph();
    case AtomKind::X:
        return x_graph(a.params[0]);
    }
    return Graph();
}

std::string format_atom(const Atom & a)
{
    auto num = [&](int i) { return std::to_string(a.params[i]); };
    switch (a.kind) {
    case AtomKind::Path:
        return "P" + num(0);
    case AtomKind::Cycle:
        return "C" + num(0);
    case AtomKind::Complete:
        return "K" + num(0);
    case AtomKind::Star:
        return "K1," + num(0);
    case AtomKind::Claw:
        return "S" + num(0) + "," + num(1) + "," + num(2);
    case AtomKind::Bull:
        return "bull";
    case AtomKind::X:
        return "X" + num(0);
    }
    return {};
}

} // namespace

Pattern parse_pattern(std::string_view name)
{
    std::string_view s = name;
    if (s.substr(0, 3) == "co-") {
        s.remove_prefix(3);
        if (! s.empty() && s.front() == '(') {
            if (s.back() != ')')
                bad_name(name, "unbalanced parenthesis");
            s = s.substr(1, s.size() - 2);
        }
        Pattern inner = parse_pattern(s);
        inner.complemented = ! inner.complemented;
        return inner;
    }
    Pattern p;
    while (true) {
        auto plus = s.find('+');
        std::string_view term = s.substr(0, plus);
        PatternTerm t;
        if (! term.empty() && std::isdigit(static_cast<unsigned char>(term[0]))) {
            // A leading number is a multiplier unless the whole term is numeric.
            t.mult = read_int(term, name);
            if (t.mult < 1)
                bad_name(name, "multiplier must be positive");
        }
        t.atom = parse_atom(term, name);
        p.terms.push_back(std::move(t));
        if (plus == std::string_view::npos)
            break;
        s.remove_prefix(plus + 1);
    }
    return p;
}

std::string format_pattern(const Pattern & p)
{
    std::string body;
    for (std::size_t i = 0; i < p.terms.size(); ++i) {
        if (i)
            body += "+";
        if (p.terms[i].mult != 1)
            body += std::to_string(p.terms[i].mult);
        body += format_atom(p.terms[i].atom);
    }
    if (! p.complemented)
        return body;
    return p.terms.size() > 1 || p.terms[0].mult > 1 ? "co-(" + body + ")" : "co-" + body;
}

Graph instantiate(const Pattern & p)
{
    Graph g(0);
    for (const auto & t : p.terms) {
        Graph atom = instantiate_atom(t.atom);
        for (int i = 0; i < t.mult; ++i)
            g = disjoint_union(g, atom);
    }
    return p.complemented ? complement(g) : g;
}

Graph pattern(std::string_view name) { return instantiate(parse_pattern(name)); }

Graph path_graph(int r)
{
    GraphBuilder b(r);
    for (int i = 0; i + 1 < r; ++i)
        b.add_edge(i, i + 1);
    return std::move(b).build();
}

Graph cycle_graph(int r)
{
    if (r < 3)
        throw GraphError("cycle needs at least 3 vertices");
    GraphBuilder b(r);
    for (int i = 0; i < r; ++i)
        b.add_edge(i, (i + 1) % r);
    return std::move(b).build();
}

Graph complete_graph(int r) { return complement(Graph(r)); }

Graph star_graph(int r)
{
    GraphBuilder b(r + 1);
    for (int i = 1; i <= r; ++i)
        b.add_edge(0, i);
    return std::move(b).build();
}

Graph subdivided_claw(int h, int i, int j)
{
    GraphBuilder b(1 + h + i + j);
    int next = 1;
    for (int len : {h, i, j}) {
        int prev = 0;
        for (int k = 0; k < len; ++k, ++next) {
            b.add_edge(prev, next);
            prev = next;
        }
    }
    return std::move(b).build();
}

Graph bull_graph() { return make_graph(5, {{0, 1}, {0, 2}, {1, 2}, {1, 3}, {2, 4}}); }

Graph x_graph(int k)
{
    if (k < 1 || k > 10)
        throw GraphError("X_k needs 1 <= k <= 10");
    GraphBuilder b(8);
    for (const auto & e : x_edges[k - 1])
        b.add_edge(e[0] - 1, e[1] - 1);
    return std::move(b).build();
}

std::optional<VertexSet> contains_induced(const Graph & g, const Graph & h)
{
    const int n = g.order();
    const int k = h.order();
    if (k > n)
        return std::nullopt;
    if (k == 0)
        return VertexSet{};

    // Order pattern vertices so each has many constraints to earlier ones.
    std::vector<int> order;
    std::vector<bool> placed(k, false);
    for (int step = 0; step < k; ++step) {
        int best = -1, best_links = -1;
        for (int p = 0; p < k; ++p) {
            if (placed[p])
                continue;
            int links = 0;
            for (int q : order)
                links += h.adjacent(p, q);
            if (links > best_links || (links == best_links && h.degree(p) > h.degree(best))) {
                best = p;
                best_links = links;
            }
        }
        placed[best] = true;
        order.push_back(best);
    }

    std::vector<int> image(k, -1);
    std::vector<Bitset> candidates(k + 1, Bitset(n));
    std::function<bool(int)> extend = [&](int depth) -> bool {
        if (depth == k)
            return true;
        int p = order[depth];
        Bitset cand = g.all_vertices();
        for (int d = 0; d < depth; ++d) {
            int q = order[d];
            int w = image[q];
            if (h.adjacent(p, q))
                cand &= g.neighbours(w);
            else {
                cand -= g.neighbours(w);
                cand.reset(w);
            }
        }
        const int need_deg = h.degree(p);
        const int need_non = k - 1 - need_deg;
        for (int v = cand.first(); v >= 0; v = cand.next(v + 1)) {
            if (g.degree(v) < need_deg || n - 1 - g.degree(v) < need_non)
                continue;
            image[p] = v;
            if (extend(depth + 1))
                return true;
        }
        image[p] = -1;
        return false;
    };
    if (! extend(0))
        return std::nullopt;
    VertexSet out(image.begin(), image.end());
    std::sort(out.begin(), out.end());
    return out;
}

bool is_induced_subgraph(const Graph & h, const Graph & g) { return contains_induced(g, h).has_value(); }

bool is_free(const Graph & g, const std::vector<Graph> & hs)
{
    return std::none_of(hs.begin(), hs.end(), [&](const Graph & h) { return contains_induced(g, h).has_value(); });
}

bool is_in_S(const Graph & g)
{
    for (const auto & comp : components(g)) {
        int edges = 0, deg3 = 0;
        for (int v : comp) {
            int d = g.degree(v);
            if (d > 3)
                return false;
            deg3 += d == 3;
            edges += d;
        }
        edges /= 2;
        if (edges != static_cast<int>(comp.size()) - 1 || deg3 > 1)
            return false;
    }
    return true;
}

std::optional<std::vector<int>> complementing_permutation(const Graph & g)
{
    return find_isomorphism(g, complement(g));
}

bool is_self_complementary(const Graph & g) { return complementing_permutation(g).has_value(); }

std::vector<Graph> enumerate_self_complementary(int n, int max_n)
{
    if (n < 0)
        throw GraphError("negative vertex count");
    if (n > max_n)
        throw BudgetError("self-complementary enumeration limited to " + std::to_string(max_n) + " vertices");
    if (n % 4 == 2 || n % 4 == 3)
        return {};

    // Cycle types of complementing permutations: parts divisible by 4, plus a
    // fixed point when n is odd.
    std::vector<std::vector<int>> types;
    std::vector<int> cur;
    std::function<void(int, int)> parts = [&](int left, int max_part) {
        if (left == 0) {
            types.push_back(cur);
            return;
        }
        for (int p = std::min(left, max_part); p >= 4; p -= 4)
            if (p % 4 == 0) {
                cur.push_back(p);
                parts(left - p, p);
                cur.pop_back();
            }
    };
    parts(n - n % 4, n - n % 4);

    std::set<CanonicalForm> seen;
    std::vector<std::pair<CanonicalForm, Graph>> found;
    for (const auto & type : types) {
        std::vector<int> sigma(n);
        int start = 0;
        for (int len : type) {
            for (int i = 0; i < len; ++i)
                sigma[start + i] = start + (i + 1) % len;
            start += len;
        }
        if (n % 4 == 1)
            sigma[n - 1] = n - 1;

        std::vector<std::vector<Edge>> orbits;
        std::vector<std::vector<bool>> done(n, std::vector<bool>(n, false));
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v) {
                if (done[u][v])
                    continue;
                std::vector<Edge> orbit;
                int a = u, b = v;
                while (! done[std::min(a, b)][std::max(a, b)]) {
                    done[std::min(a, b)][std::max(a, b)] = true;
                    orbit.push_back({std::min(a, b), std::max(a, b)});
                    a = sigma[a];
                    b = sigma[b];
                }
                orbits.push_back(std::move(orbit));
            }
        const std::size_t choices = std::size_t{1} << orbits.size();
        for (std::size_t mask = 0; mask < choices; ++mask) {
            GraphBuilder b(n);
            for (std::size_t o = 0; o < orbits.size(); ++o)
                for (std::size_t i = ((mask >> o) & 1U) ? 0 : 1; i < orbits[o].size(); i += 2)
                    b.add_edge(orbits[o][i].u, orbits[o][i].v);
            Graph g = std::move(b).build();
            auto form = canonical_form(g);
            if (seen.insert(form).second)
                found.emplace_back(form, canonical_graph(g));
        }
    }
    std::sort(found.begin(), found.end(), [](const auto & a, const auto & b) { return a.first < b.first; });
    std::vector<Graph> out;
    for (auto & [form, g] : found)
        out.push_back(std::move(g));
    return out;
}

std::vector<Graph> enumerate_class_S(int max_n)
{
    if (max_n > 14)
        throw BudgetError("class S enumeration limited to 14 vertices");
    // Component types in a fixed order: paths, then subdivided claws.
    std::vector<Graph> kinds;
    for (int r = 1; r <= max_n; ++r)
        kinds.push_back(path_graph(r));
    for (int h = 1; 1 + 3 * h <= max_n; ++h)
        for (int i = h; 1 + h + 2 * i <= max_n; ++i)
            for (int j = i; 1 + h + i + j <= max_n; ++j)
                kinds.push_back(subdivided_claw(h, i, j));

    std::vector<Graph> out;
    std::function<void(std::size_t, const Graph &)> grow = [&](std::size_t from, const Graph & g) {
        if (g.order() > 0)
            out.push_back(g);
        for (std::size_t k = from; k < kinds.size(); ++k)
            if (g.order() + kinds[k].order() <= max_n)
                grow(k, disjoint_union(g, kinds[k]));
    };
    grow(0, Graph(0));
    return out;
}

std::pair<bool, bool> lemma_useful_sides(const Graph & g)
{
    static const std::vector<Graph> forbidden = {pattern("K1,3+P1"), pattern("2P2"), pattern("3P1+P2"), pattern("S1,1,2")};
    static const std::vector<Graph> hosts = {pattern("K1,3"), pattern("P1+P4"), pattern("2P1+P3")};
    bool left = is_free(g, forbidden);
    bool right = g.size() == 0 || std::any_of(hosts.begin(), hosts.end(), [&](const Graph & h) { return is_induced_subgraph(g, h); });
    return {left, right};
}

UsefulReport lemma_useful_check(int max_n)
{
    UsefulReport report;
    for (const auto & g : enumerate_class_S(max_n)) {
        ++report.checked;
        auto [left, right] = lemma_useful_sides(g);
        if (left != right) {
            report.pass = false;
            report.counterexample = g;
            return report;
        }
    }
    return report;
}

} // namespace cwlab
