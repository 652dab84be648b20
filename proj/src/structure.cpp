#include <cwlab/patterns.hpp>
#include <cwlab/structure.hpp>

#include <algorithm>
#include <functional>
#include <numeric>

namespace cwlab {

bool is_module(const Graph & g, const VertexSet & x)
{
    Bitset in = to_bitset(g, x);
    const int size = in.count();
    for (int w = 0; w < g.order(); ++w) {
        if (in.test(w))
            continue;
        int hits = (g.neighbours(w) & in).count();
        if (hits != 0 && hits != size)
            return false;
    }
    return true;
}

VertexSet module_closure(const Graph & g, int u, int v)
{
    Bitset in(g.order());
    in.set(u);
    in.set(v);
    bool grew = true;
    while (grew) {
        grew = false;
        const int size = in.count();
        for (int w = 0; w < g.order(); ++w) {
            if (in.test(w))
                continue;
            int hits = (g.neighbours(w) & in).count();
            if (hits != 0 && hits != size) {
                in.set(w);
                grew = true;
                break;
            }
        }
    }
    return to_vertex_set(in);
}

std::optional<VertexSet> find_nontrivial_module(const Graph & g, int exhaustive_limit)
{
    const int n = g.order();
    if (n <= 2)
        return std::nullopt;
    if (n > exhaustive_limit) {
        std::optional<VertexSet> best;
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v) {
                auto m = module_closure(g, u, v);
                if (static_cast<int>(m.size()) < n && (! best || m.size() < best->size() || (m.size() == best->size() && m < *best)))
                    best = m;
            }
        return best;
    }
    for (int size = 2; size < n; ++size) {
        std::vector<bool> pick(n, false);
        std::fill(pick.begin(), pick.begin() + size, true);
        do {
            VertexSet x;
            for (int v = 0; v < n; ++v)
                if (pick[v])
                    x.push_back(v);
            if (is_module(g, x))
                return x;
        } while (std::prev_permutation(pick.begin(), pick.end()));
    }
    return std::nullopt;
}

bool is_prime(const Graph & g) { return ! find_nontrivial_module(g).has_value(); }

bool is_prime_by_closure(const Graph & g)
{
    const int n = g.order();
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (static_cast<int>(module_closure(g, u, v).size()) < n)
                return false;
    return true;
}

namespace {

bool valid_split(const Graph & g, const VertexSet & c, const VertexSet & i)
{
    return is_clique(g, c) && is_independent(g, i);
}

// One split partition by the degree-sequence test, or nullopt.
std::optional<SplitPartition> some_split_partition(const Graph & g)
{
    const int n = g.order();
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return g.degree(a) > g.degree(b); });
    int m = 0;
    for (int i = 0; i < n; ++i)
        if (g.degree(order[i]) >= i)
            m = i + 1;
    long long head = 0, tail = 0;
    for (int i = 0; i < n; ++i)
        (i < m ? head : tail) += g.degree(order[i]);
    if (head != static_cast<long long>(m) * (m - 1) + tail)
        return std::nullopt;
    SplitPartition p;
    p.clique.assign(order.begin(), order.begin() + m);
    p.indep.assign(order.begin() + m, order.end());
    std::sort(p.clique.begin(), p.clique.end());
    std::sort(p.indep.begin(), p.indep.end());
    if (! valid_split(g, p.clique, p.indep))
        throw std::logic_error("degree-sequence split test produced an invalid partition");
    return p;
}

} // namespace

std::vector<SplitPartition> all_split_partitions(const Graph & g)
{
    auto base = some_split_partition(g);
    if (! base)
        return {};
    // Any other split partition differs from a given one by moving at most one
    // vertex in each direction.
    std::vector<int> from_c{-1}, from_i{-1};
    for (int v : base->clique)
        from_c.push_back(v);
    for (int v : base->indep)
        from_i.push_back(v);
    std::vector<SplitPartition> out;
    for (int x : from_c)
        for (int y : from_i) {
            Bitset c = to_bitset(g, base->clique);
            if (x >= 0)
                c.reset(x);
            if (y >= 0)
                c.set(y);
            SplitPartition p{to_vertex_set(c), to_vertex_set(~c)};
            if (valid_split(g, p.clique, p.indep))
                out.push_back(std::move(p));
        }
    std::sort(out.begin(), out.end(), [](const auto & a, const auto & b) { return a.clique < b.clique; });
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::optional<SplitPartition> split_partition(const Graph & g)
{
    auto all = all_split_partitions(g);
    if (all.empty())
        return std::nullopt;
    return all.front();
}

VertexSet maximum_clique(const Graph & g)
{
    VertexSet best, cur;
    std::function<void(Bitset)> expand = [&](Bitset cand) {
        if (cand.none()) {
            if (cur.size() > best.size())
                best = cur;
            return;
        }
        for (int v = cand.first(); v >= 0; v = cand.next(v + 1)) {
            if (cur.size() + cand.count() <= best.size())
                return;
            cur.push_back(v);
            expand(cand & g.neighbours(v));
            cur.pop_back();
            cand.reset(v);
        }
    };
    expand(g.all_vertices());
    return best;
}

int clique_number(const Graph & g) { return static_cast<int>(maximum_clique(g).size()); }

int independence_number(const Graph & g) { return clique_number(complement(g)); }

FixedVertexReport fixed_vertex(const Graph & g, const std::vector<int> & f)
{
    const int n = g.order();
    if (n % 2 == 0)
        throw GraphError("fixed vertex needs a graph of odd order");
    if (static_cast<int>(f.size()) != n)
        throw GraphError("permutation size mismatch");
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (g.adjacent(u, v) == g.adjacent(f[u], f[v]))
                throw GraphError("not a complementing permutation");
    FixedVertexReport r;
    for (int v = 0; v < n; ++v)
        if (f[v] == v) {
            if (r.fixed_points++ == 0)
                r.vertex = v;
        }
    if (r.vertex >= 0)
        r.deletion_self_complementary = is_self_complementary(delete_vertices(g, {r.vertex}));
    return r;
}

FixedVertexReport fixed_vertex(const Graph & g)
{
    if (g.order() % 2 == 0)
        throw GraphError("fixed vertex needs a graph of odd order");
    auto f = complementing_permutation(g);
    if (! f)
        throw GraphError("graph is not self-complementary");
    return fixed_vertex(g, *f);
}

SplitUniquenessReport unique_split_partition_check(const Graph & g)
{
    if (g.order() % 2 != 0)
        throw GraphError("split uniqueness check needs a graph of even order");
    if (! is_self_complementary(g))
        throw GraphError("graph is not self-complementary");
    auto all = all_split_partitions(g);
    if (all.empty())
        throw GraphError("graph is not split");
    SplitUniquenessReport r;
    r.partitions = static_cast<int>(all.size());
    r.clique_size = static_cast<int>(all[0].clique.size());
    r.indep_size = static_cast<int>(all[0].indep.size());
    r.pass = r.partitions == 1 && r.clique_size == g.order() / 2 && r.indep_size == g.order() / 2;
    return r;
}

bool has_monochromatic_biclique(const std::vector<std::uint32_t> & rows, int n, int k, int l)
{
    const std::uint32_t full = n >= 32 ? ~0U : (1U << n) - 1;
    for (auto [a, b] : {std::pair{k, l}, std::pair{l, k}})
        for (std::uint32_t rs = 0; rs < (1U << n); ++rs) {
            if (std::popcount(rs) != a)
                continue;
            std::uint32_t red = full, blue = full;
            for (int r = 0; r < n; ++r)
                if ((rs >> r) & 1U) {
                    red &= rows[r];
                    blue &= ~rows[r] & full;
                }
            if (std::popcount(red) >= b || std::popcount(blue) >= b)
                return true;
        }
    return false;
}

RamseyResult bipartite_ramsey_check(int k, int l, int n)
{
    if (n > 6)
        throw BudgetError("bipartite Ramsey search limited to n <= 6");
    if (k < 1 || l < 1)
        throw GraphError("k and l must be positive");
    if (k > n || l > n)
        return {false, std::vector<std::uint32_t>(n, 0)};
    const std::uint32_t full = (1U << n) - 1;
    std::vector<std::uint32_t> rows;

    // Does the newest row complete a monochromatic biclique with earlier rows?
    auto closes = [&](int a, int b) {
        const int last = static_cast<int>(rows.size()) - 1;
        for (std::uint32_t rs = 0; rs < (1U << last); ++rs) {
            if (std::popcount(rs) != a - 1)
                continue;
            std::uint32_t red = rows[last], blue = ~rows[last] & full;
            for (int r = 0; r < last; ++r)
                if ((rs >> r) & 1U) {
                    red &= rows[r];
                    blue &= ~rows[r];
                }
            if (std::popcount(red) >= b || std::popcount(blue) >= b)
                return true;
        }
        return false;
    };

    // Rows are kept non-decreasing; permuting rows does not change the answer.
    std::function<bool(std::uint32_t)> avoid = [&](std::uint32_t min_row) -> bool {
        if (static_cast<int>(rows.size()) == n)
            return true;
        for (std::uint32_t row = min_row; row <= full; ++row) {
            rows.push_back(row);
            bool bad = closes(k, l) || closes(l, k);
            if (! bad && avoid(row))
                return true;
            rows.pop_back();
        }
        return false;
    };
    if (avoid(0))
        return {false, rows};
    return {true, {}};
}

} // namespace cwlab
