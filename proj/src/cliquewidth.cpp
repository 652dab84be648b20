#include <cwlab/cliquewidth.hpp>
#include <cwlab/patterns.hpp>
#include <cwlab/structure.hpp>

#include <algorithm>
#include <bit>
#include <functional>
#include <map>
#include <set>

namespace cwlab {

WidthCertificate make_certificate(const Graph & g, const KExpression & expr)
{
    return {g, expr, width(expr)};
}

bool verify_certificate(const WidthCertificate & cert)
{
    const int n = cert.graph.order();
    auto tags = cert.placement();
    if (static_cast<int>(tags.size()) != n)
        return false;
    std::vector<bool> seen(n, false);
    for (int t : tags) {
        if (t < 0 || t >= n || seen[t])
            return false;
        seen[t] = true;
    }
    if (width(cert.expr) != cert.width)
        return false;
    auto built = evaluate(cert.expr).graph;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (built.adjacent(i, j) != cert.graph.adjacent(tags[i], tags[j]))
                return false;
    return true;
}

void check_certificate(const WidthCertificate & cert, const char * what)
{
    if (! verify_certificate(cert))
        throw std::logic_error(std::string(what) + ": certificate does not evaluate to its graph");
}

namespace {

bool has_cross_edge(const Graph & g, const Bitset & c, const Bitset & d, const Bitset & left)
{
    for (int x = c.first(); x >= 0; x = c.next(x + 1)) {
        Bitset other = d;
        if (left.test(x))
            other -= left;
        else
            other &= left;
        if (g.neighbours(x).intersects(other))
            return true;
    }
    return false;
}

KExpression build_node(const Graph & g, const Derivation & d, int idx, const std::vector<int> & f, int k)
{
    const auto & node = d.nodes[idx];
    if (node.vertex >= 0)
        return KExpression::create(f[0], node.vertex);

    auto side = [&](int child, const std::vector<int> & block_of) {
        const int parts = static_cast<int>(block_of.size());
        std::vector<bool> taken(k + 1, false);
        std::vector<int> first_of(node.classes.size(), -1);
        for (int j = 0; j < parts; ++j)
            if (first_of[block_of[j]] < 0) {
                first_of[block_of[j]] = j;
                taken[f[block_of[j]]] = true;
            }
        std::vector<int> g1(parts);
        int spare = 1;
        for (int j = 0; j < parts; ++j) {
            if (first_of[block_of[j]] == j)
                g1[j] = f[block_of[j]];
            else {
                while (taken[spare])
                    ++spare;
                g1[j] = spare;
                taken[spare] = true;
            }
        }
        KExpression e = build_node(g, d, child, g1, k);
        for (int j = 0; j < parts; ++j)
            if (g1[j] != f[block_of[j]])
                e = KExpression::rename(g1[j], f[block_of[j]], e);
        return e;
    };
    KExpression e = KExpression::unite(side(node.left, node.left_block), side(node.right, node.right_block));

    Bitset left(g.order());
    for (const auto & c : d.nodes[node.left].classes)
        left |= c;
    for (std::size_t a = 0; a < node.classes.size(); ++a)
        for (std::size_t b = a + 1; b < node.classes.size(); ++b)
            if (has_cross_edge(g, node.classes[a], node.classes[b], left))
                e = KExpression::join(f[a], f[b], e);
    return e;
}

} // namespace

KExpression build_from_derivation(const Graph & g, const Derivation & d)
{
    if (d.root < 0)
        return {};
    std::size_t k = 1;
    for (const auto & node : d.nodes)
        k = std::max(k, node.classes.size());
    std::vector<int> f(d.nodes[d.root].classes.size());
    for (std::size_t i = 0; i < f.size(); ++i)
        f[i] = static_cast<int>(i) + 1;
    return build_node(g, d, d.root, f, static_cast<int>(k));
}

// ---------------------------------------------------------------------------
// Compaction

namespace {

// Classes of s whose members agree on every vertex outside s, in order of
// their smallest member.
std::vector<Bitset> outside_twins(const Graph & g, const Bitset & s)
{
    Bitset outside = ~s;
    std::vector<Bitset> classes;
    std::vector<Bitset> profiles;
    for (int x = s.first(); x >= 0; x = s.next(x + 1)) {
        Bitset p = g.neighbours(x) & outside;
        auto it = std::find(profiles.begin(), profiles.end(), p);
        if (it == profiles.end()) {
            profiles.push_back(p);
            classes.emplace_back(g.order());
            classes.back().set(x);
        }
        else
            classes[it - profiles.begin()].set(x);
    }
    return classes;
}

bool complete_between(const Graph & g, const Bitset & a, const Bitset & b)
{
    for (int x = a.first(); x >= 0; x = a.next(x + 1))
        if (! b.is_subset_of(g.neighbours(x)))
            return false;
    return true;
}

// Every pair of blocks with a cross edge must be complete.
bool blocks_valid(const Graph & g, const std::vector<Bitset> & blocks, const Bitset & left)
{
    for (std::size_t a = 0; a < blocks.size(); ++a)
        for (std::size_t b = a + 1; b < blocks.size(); ++b)
            if (has_cross_edge(g, blocks[a], blocks[b], left) && ! complete_between(g, blocks[a], blocks[b]))
                return false;
    return true;
}

int derive_subtree(const Graph & g, const KExpression & e, Derivation & d, Bitset & set_out)
{
    switch (e.kind()) {
    case KExpression::Kind::Create: {
        DerivationNode leaf;
        leaf.vertex = e.b();
        Bitset c(g.order());
        c.set(e.b());
        leaf.classes.push_back(c);
        set_out = c;
        d.nodes.push_back(std::move(leaf));
        return static_cast<int>(d.nodes.size()) - 1;
    }
    case KExpression::Kind::Join:
    case KExpression::Kind::Rename:
        return derive_subtree(g, e.child(), d, set_out);
    case KExpression::Kind::Union:
        break;
    }
    Bitset s1, s2;
    int li = derive_subtree(g, e.left(), d, s1);
    int ri = derive_subtree(g, e.right(), d, s2);
    Bitset s = s1 | s2;
    Bitset outside = ~s;

    auto t1 = outside_twins(g, s1);
    auto t2 = outside_twins(g, s2);
    const int a = static_cast<int>(t1.size());
    const int c = static_cast<int>(t2.size());
    std::vector<int> partner(a, -1);
    std::vector<bool> used(c, false);
    auto blocks_for = [&]() {
        std::vector<Bitset> blocks;
        for (int i = 0; i < a; ++i)
            blocks.push_back(partner[i] >= 0 ? t1[i] | t2[partner[i]] : t1[i]);
        for (int j = 0; j < c; ++j)
            if (! used[j])
                blocks.push_back(t2[j]);
        return blocks;
    };
    for (int i = 0; i < a; ++i)
        for (int j = 0; j < c && partner[i] < 0; ++j) {
            if (used[j])
                continue;
            int x = t1[i].first(), y = t2[j].first();
            if (g.neighbours(x).intersects(t2[j]))
                continue;
            if ((g.neighbours(x) & outside) != (g.neighbours(y) & outside))
                continue;
            partner[i] = j;
            used[j] = true;
            if (! blocks_valid(g, blocks_for(), s1)) {
                partner[i] = -1;
                used[j] = false;
            }
        }

    DerivationNode node;
    node.left = li;
    node.right = ri;
    node.classes = blocks_for();
    auto block_of = [&](const Bitset & cls) {
        int x = cls.first();
        for (std::size_t b = 0; b < node.classes.size(); ++b)
            if (node.classes[b].test(x))
                return static_cast<int>(b);
        throw std::logic_error("class outside every block");
    };
    for (const auto & cls : d.nodes[li].classes)
        node.left_block.push_back(block_of(cls));
    for (const auto & cls : d.nodes[ri].classes)
        node.right_block.push_back(block_of(cls));
    set_out = s;
    d.nodes.push_back(std::move(node));
    return static_cast<int>(d.nodes.size()) - 1;
}

} // namespace

WidthCertificate compact(const WidthCertificate & cert)
{
    if (cert.expr.empty())
        return cert;
    Derivation d;
    Bitset all;
    d.root = derive_subtree(cert.graph, cert.expr, d, all);
    auto out = make_certificate(cert.graph, build_from_derivation(cert.graph, d));
    check_certificate(out, "compact");
    return out.width <= cert.width ? out : cert;
}

// ---------------------------------------------------------------------------
// Exact solver

namespace {

using Mask = std::uint32_t;

struct State {
    std::vector<Mask> classes;
    Mask s1 = 0;
    int li = -1;
    int ri = -1;
    std::vector<std::uint8_t> block;
    bool removed = false;
};

// Every class of a lies inside some class of b.
bool refines(const std::vector<Mask> & a, const std::vector<Mask> & b)
{
    for (Mask x : a) {
        bool inside = false;
        for (Mask y : b)
            if ((x & ~y) == 0) {
                inside = true;
                break;
            }
        if (! inside)
            return false;
    }
    return true;
}

class ExactSolver {
public:
    ExactSolver(const Graph & g) : g_(g), n_(g.order()), full_(n_ == 32 ? ~Mask{0} : (Mask{1} << n_) - 1), adj_(n_, 0)
    {
        for (int v = 0; v < n_; ++v)
            for (int u : g.neighbours(v).to_vector())
                adj_[v] |= Mask{1} << u;
        by_size_.resize(n_ + 1);
        for (Mask s = 1; s <= full_ && s != 0; ++s) {
            by_size_[std::popcount(s)].push_back(s);
            if (s == full_)
                break;
        }
    }

    bool feasible(int k)
    {
        k_ = k;
        states_.assign(std::size_t{1} << n_, {});
        for (int v = 0; v < n_; ++v)
            states_[Mask{1} << v].push_back(State{{Mask{1} << v}, 0, -1, -1, {}, false});
        for (int size = 2; size <= n_; ++size)
            for (Mask s : by_size_[size])
                process(s);
        return ! states_[full_].empty();
    }

    Derivation derivation() const
    {
        Derivation d;
        d.root = emit(d, full_, 0);
        return d;
    }

private:
    int twin_count(Mask s) const
    {
        Mask outside = full_ & ~s;
        Mask profiles[32];
        int count = 0;
        for (Mask rest = s; rest; rest &= rest - 1) {
            Mask p = adj_[std::countr_zero(rest)] & outside;
            if (std::find(profiles, profiles + count, p) == profiles + count)
                profiles[count++] = p;
        }
        return count;
    }

    bool complete(Mask a, Mask b) const
    {
        for (Mask rest = a; rest; rest &= rest - 1)
            if ((adj_[std::countr_zero(rest)] & b) != b)
                return false;
        return true;
    }

    void process(Mask s)
    {
        if (twin_count(s) > k_)
            return;
        const Mask low = s & (~s + 1);
        const Mask rest = s ^ low;
        // Submasks t of rest, t != rest, so both sides are non-empty.
        for (Mask t = (rest - 1) & rest;; t = (t - 1) & rest) {
            Mask s1 = low | t;
            Mask s2 = s ^ s1;
            const auto & left = states_[s1];
            const auto & right = states_[s2];
            for (int li = 0; li < static_cast<int>(left.size()); ++li)
                for (int ri = 0; ri < static_cast<int>(right.size()); ++ri)
                    combine(s, s1, s2, li, ri);
            if (t == 0)
                break;
        }
        auto & list = states_[s];
        list.erase(std::remove_if(list.begin(), list.end(), [](const State & st) { return st.removed; }), list.end());
    }

    void combine(Mask s, Mask s1, Mask s2, int li, int ri)
    {
        const auto & p1 = states_[s1][li].classes;
        const auto & p2 = states_[s2][ri].classes;
        const int a = static_cast<int>(p1.size());
        const int m = a + static_cast<int>(p2.size());
        parts_.assign(p1.begin(), p1.end());
        parts_.insert(parts_.end(), p2.begin(), p2.end());

        if (m <= k_) {
            assign_.resize(m);
            for (int i = 0; i < m; ++i)
                assign_[i] = static_cast<std::uint8_t>(i);
            offer(s, s1, li, ri, m);
            return;
        }

        const Mask outside = full_ & ~s;
        const Mask out1 = full_ & ~s1;
        const Mask out2 = full_ & ~s2;
        compat_.assign(m * m, 0);
        cross_edge_.assign(m * m, 0);
        complete_.assign(m * m, 0);
        for (int i = 0; i < m; ++i)
            for (int j = i + 1; j < m; ++j) {
                const Mask ri_ = adj_[std::countr_zero(parts_[i])];
                const Mask rj_ = adj_[std::countr_zero(parts_[j])];
                bool same_side = (i < a) == (j < a);
                bool ok;
                if (same_side) {
                    Mask out = i < a ? out1 : out2;
                    ok = (ri_ & out) == (rj_ & out);
                }
                else
                    ok = (ri_ & parts_[j]) == 0 && (ri_ & outside) == (rj_ & outside);
                bool cross = ! same_side && (ri_ & parts_[j]) != 0;
                bool comp = complete(parts_[i], parts_[j]);
                compat_[i * m + j] = compat_[j * m + i] = ok;
                cross_edge_[i * m + j] = cross_edge_[j * m + i] = cross;
                complete_[i * m + j] = complete_[j * m + i] = comp;
            }
        m_ = m;
        assign_.assign(m, 0);
        members_.assign(k_, {});
        enumerate(s, s1, li, ri, 0, 0);
    }

    // Restricted-growth enumeration of partitions of the parts into exactly k blocks.
    void enumerate(Mask s, Mask s1, int li, int ri, int i, int used)
    {
        if (used + (m_ - i) < k_)
            return;
        if (i == m_) {
            if (blocks_ok(used))
                offer(s, s1, li, ri, used);
            return;
        }
        for (int b = 0; b <= used && b < k_; ++b) {
            bool ok = true;
            for (int j : members_[b])
                if (! compat_[i * m_ + j]) {
                    ok = false;
                    break;
                }
            if (! ok)
                continue;
            assign_[i] = static_cast<std::uint8_t>(b);
            members_[b].push_back(i);
            enumerate(s, s1, li, ri, i + 1, b == used ? used + 1 : used);
            members_[b].pop_back();
        }
    }

    bool blocks_ok(int blocks) const
    {
        for (int c = 0; c < blocks; ++c)
            for (int d = c + 1; d < blocks; ++d) {
                bool any = false, all = true;
                for (int x : members_[c])
                    for (int y : members_[d]) {
                        any = any || cross_edge_[x * m_ + y];
                        all = all && complete_[x * m_ + y];
                    }
                if (any && ! all)
                    return false;
            }
        return true;
    }

    void offer(Mask s, Mask s1, int li, int ri, int blocks)
    {
        std::vector<Mask> cls(blocks, 0);
        for (int i = 0; i < static_cast<int>(parts_.size()); ++i)
            cls[assign_[i]] |= parts_[i];
        std::vector<int> order(blocks);
        for (int b = 0; b < blocks; ++b)
            order[b] = b;
        std::sort(order.begin(), order.end(), [&](int x, int y) { return cls[x] < cls[y]; });
        std::vector<int> rank(blocks);
        std::vector<Mask> sorted(blocks);
        for (int r = 0; r < blocks; ++r) {
            rank[order[r]] = r;
            sorted[r] = cls[order[r]];
        }
        auto & list = states_[s];
        for (const auto & st : list)
            if (! st.removed && refines(st.classes, sorted))
                return;
        for (auto & st : list)
            if (! st.removed && refines(sorted, st.classes))
                st.removed = true;
        State st{std::move(sorted), s1, li, ri, {}, false};
        st.block.resize(parts_.size());
        for (std::size_t i = 0; i < parts_.size(); ++i)
            st.block[i] = static_cast<std::uint8_t>(rank[assign_[i]]);
        list.push_back(std::move(st));
    }

    int emit(Derivation & d, Mask s, int idx) const
    {
        const State & st = states_[s][idx];
        DerivationNode node;
        for (Mask c : st.classes) {
            Bitset b(n_);
            for (Mask r = c; r; r &= r - 1)
                b.set(std::countr_zero(r));
            node.classes.push_back(std::move(b));
        }
        if (std::popcount(s) == 1)
            node.vertex = std::countr_zero(s);
        else {
            node.left = emit(d, st.s1, st.li);
            node.right = emit(d, s ^ st.s1, st.ri);
            const std::size_t a = states_[st.s1][st.li].classes.size();
            for (std::size_t i = 0; i < st.block.size(); ++i)
                (i < a ? node.left_block : node.right_block).push_back(st.block[i]);
        }
        d.nodes.push_back(std::move(node));
        return static_cast<int>(d.nodes.size()) - 1;
    }

    const Graph & g_;
    int n_;
    Mask full_;
    std::vector<Mask> adj_;
    std::vector<std::vector<Mask>> by_size_;
    std::vector<std::vector<State>> states_;
    int k_ = 0;

    // Scratch space for combine().
    std::vector<Mask> parts_;
    std::vector<std::uint8_t> assign_;
    std::vector<char> compat_, cross_edge_, complete_;
    std::vector<std::vector<int>> members_;
    int m_ = 0;
};

} // namespace

ExactResult exact_cliquewidth(const Graph & g, const ExactOptions & options)
{
    const int n = g.order();
    if (n > std::min(options.max_n, 16))
        throw BudgetError("exact clique-width limited to " + std::to_string(std::min(options.max_n, 16)) + " vertices");
    ExactResult r;
    if (n == 0) {
        r.width = 0;
        r.certificate = WidthCertificate{g, {}, 0};
        return r;
    }
    ExactSolver solver(g);
    for (int k = 1; k <= n; ++k) {
        if (options.budget && k > *options.budget) {
            r.width = k;
            r.exact = false;
            return r;
        }
        if (solver.feasible(k)) {
            auto cert = make_certificate(g, build_from_derivation(g, solver.derivation()));
            check_certificate(cert, "exact_cliquewidth");
            if (cert.width != k)
                throw std::logic_error("exact_cliquewidth: witness width differs from the optimum");
            r.width = k;
            r.certificate = std::move(cert);
            return r;
        }
    }
    throw std::logic_error("exact_cliquewidth: no expression found with n labels");
}

int cliquewidth(const Graph & g, int max_n)
{
    ExactOptions o;
    o.max_n = max_n;
    return exact_cliquewidth(g, o).width;
}

// ---------------------------------------------------------------------------
// Builders

namespace {

// All vertices of the result carry label 1; labels 1 and 2 are used.
KExpression cograph_rec(const Graph & g, const VertexSet & vs)
{
    if (vs.size() == 1)
        return KExpression::create(1, vs[0]);
    Graph sub = induced_subgraph(g, vs);
    auto comps = components(sub);
    if (comps.size() > 1) {
        KExpression e;
        for (const auto & c : comps) {
            VertexSet orig;
            for (int v : c)
                orig.push_back(vs[v]);
            e = KExpression::unite(e, cograph_rec(g, orig));
        }
        return e;
    }
    auto cocomps = components(complement(sub));
    if (cocomps.size() < 2)
        throw std::logic_error("cograph recursion reached a prime subgraph");
    KExpression e;
    for (const auto & c : cocomps) {
        VertexSet orig;
        for (int v : c)
            orig.push_back(vs[v]);
        KExpression part = cograph_rec(g, orig);
        if (e.empty())
            e = part;
        else
            e = KExpression::rename(2, 1, KExpression::join(1, 2, KExpression::unite(e, KExpression::rename(1, 2, part))));
    }
    return e;
}

} // namespace

WidthCertificate cograph_expression(const Graph & g)
{
    if (auto w = contains_induced(g, path_graph(4)))
        throw WitnessError("graph contains an induced P4", *w);
    if (g.order() == 0)
        return {g, {}, 0};
    auto cert = make_certificate(g, cograph_rec(g, g.all_vertices().to_vector()));
    check_certificate(cert, "cograph_expression");
    return cert;
}

WidthCertificate degree2_expression(const Graph & g)
{
    for (int v = 0; v < g.order(); ++v)
        if (g.degree(v) > 2)
            throw WitnessError("vertex " + std::to_string(v) + " has degree " + std::to_string(g.degree(v)), {v});
    KExpression all;
    for (const auto & comp : components(g)) {
        if (comp.size() == 1) {
            all = KExpression::unite(all, KExpression::create(1, comp[0]));
            continue;
        }
        // Walk the component from an end vertex (path) or any vertex (cycle).
        int start = comp[0];
        bool cycle = true;
        for (int v : comp)
            if (g.degree(v) == 1) {
                start = v;
                cycle = false;
                break;
            }
        std::vector<int> walk{start};
        int prev = -1, cur = start;
        while (true) {
            int next = -1;
            for (int u : g.neighbours(cur).to_vector())
                if (u != prev && u != start) {
                    next = u;
                    break;
                }
            if (next < 0)
                break;
            walk.push_back(next);
            prev = cur;
            cur = next;
        }
        // Labels: 1 finished, 2 current end, 3 new vertex, 4 first vertex of a cycle.
        KExpression e = KExpression::create(cycle ? 4 : 2, walk[0]);
        const std::size_t r = walk.size();
        for (std::size_t i = 1; i < r; ++i) {
            e = KExpression::unite(e, KExpression::create(3, walk[i]));
            if (i == 1 && cycle) {
                e = KExpression::rename(3, 2, KExpression::join(3, 4, e));
                continue;
            }
            e = KExpression::join(2, 3, e);
            if (cycle && i == r - 1)
                e = KExpression::join(3, 4, e);
            e = KExpression::rename(3, 2, KExpression::rename(2, 1, e));
        }
        e = KExpression::rename(2, 1, e);
        if (cycle)
            e = KExpression::rename(4, 1, e);
        all = KExpression::unite(all, e);
    }
    auto cert = make_certificate(g, all);
    check_certificate(cert, "degree2_expression");
    return cert;
}

// ---------------------------------------------------------------------------

int cw_via_primes(const Graph & g, int max_n)
{
    const int n = g.order();
    if (n > max_n)
        throw BudgetError("cw_via_primes limited to " + std::to_string(max_n) + " vertices");
    if (n <= 1)
        return n;
    auto sub_max = [&](const std::vector<VertexSet> & parts, int floor) {
        int best = floor;
        for (const auto & p : parts)
            best = std::max(best, cw_via_primes(induced_subgraph(g, p), max_n));
        return best;
    };
    auto comps = components(g);
    if (comps.size() > 1)
        return sub_max(comps, 1);
    auto cocomps = components(complement(g));
    if (cocomps.size() > 1)
        return sub_max(cocomps, 2);

    // Both g and its complement are connected: the maximal proper modules
    // partition V and the quotient is prime.
    std::vector<int> module_of(n, -1);
    std::vector<VertexSet> modules;
    for (int v = 0; v < n; ++v) {
        if (module_of[v] >= 0)
            continue;
        VertexSet m{v};
        for (int u = 0; u < n; ++u)
            if (u != v && static_cast<int>(module_closure(g, u, v).size()) < n)
                m.push_back(u);
        std::sort(m.begin(), m.end());
        for (int u : m)
            module_of[u] = static_cast<int>(modules.size());
        modules.push_back(std::move(m));
    }
    VertexSet reps;
    for (const auto & m : modules)
        reps.push_back(m[0]);
    Graph quotient = induced_subgraph(g, reps);
    if (! is_prime(quotient))
        throw std::logic_error("cw_via_primes: quotient graph is not prime");
    ExactOptions o;
    o.max_n = max_n;
    return sub_max(modules, exact_cliquewidth(quotient, o).width);
}

} // namespace cwlab
