#include <cwlab/canonical.hpp>

#include <algorithm>
#include <bit>
#include <unordered_map>

namespace cwlab {

namespace {

using Mask = std::uint64_t;

struct Search {
    int n;
    std::vector<Mask> adj;
    std::vector<Mask> best_code;
    std::vector<int> best_order;
    bool have_best = false;

    explicit Search(const Graph & g) : n(g.order()), adj(g.order(), 0)
    {
        if (n > 64)
            throw BudgetError("canonical form supports at most 64 vertices");
        for (int v = 0; v < n; ++v)
            for (int u : g.neighbours(v).to_vector())
                adj[v] |= Mask{1} << u;
    }

    // Split every cell by the number of neighbours in each cell until stable.
    void refine(std::vector<std::vector<int>> & cells) const
    {
        while (true) {
            std::vector<Mask> masks(cells.size(), 0);
            for (std::size_t c = 0; c < cells.size(); ++c)
                for (int v : cells[c])
                    masks[c] |= Mask{1} << v;

            std::vector<std::vector<int>> next;
            next.reserve(n);
            for (auto & cell : cells) {
                if (cell.size() == 1) {
                    next.push_back(cell);
                    continue;
                }
                std::vector<std::pair<std::vector<int>, int>> keyed;
                keyed.reserve(cell.size());
                for (int v : cell) {
                    std::vector<int> sig(masks.size());
                    for (std::size_t c = 0; c < masks.size(); ++c)
                        sig[c] = std::popcount(adj[v] & masks[c]);
                    keyed.emplace_back(std::move(sig), v);
                }
                std::sort(keyed.begin(), keyed.end());
                std::vector<int> cur{keyed[0].second};
                for (std::size_t i = 1; i < keyed.size(); ++i) {
                    if (keyed[i].first != keyed[i - 1].first) {
                        next.push_back(std::move(cur));
                        cur.clear();
                    }
                    cur.push_back(keyed[i].second);
                }
                next.push_back(std::move(cur));
            }
            bool stable = next.size() == cells.size();
            cells = std::move(next);
            if (stable)
                return;
        }
    }

    std::vector<Mask> code_of(const std::vector<int> & order) const
    {
        std::size_t bits = static_cast<std::size_t>(n) * (n - 1) / 2;
        std::vector<Mask> code((bits + 63) / 64, 0);
        std::size_t b = 0;
        for (int j = 1; j < n; ++j)
            for (int i = 0; i < j; ++i, ++b)
                if ((adj[order[i]] >> order[j]) & 1U)
                    code[b / 64] |= Mask{1} << (63 - b % 64);
        return code;
    }

    void dfs(std::vector<std::vector<int>> cells)
    {
        refine(cells);
        auto target = std::find_if(cells.begin(), cells.end(), [](const auto & c) { return c.size() > 1; });
        if (target == cells.end()) {
            std::vector<int> order;
            order.reserve(n);
            for (auto & c : cells)
                order.push_back(c[0]);
            auto code = code_of(order);
            if (! have_best || code > best_code) {
                best_code = std::move(code);
                best_order = std::move(order);
                have_best = true;
            }
            return;
        }
        std::size_t ti = target - cells.begin();
        std::vector<int> tried;
        for (int v : cells[ti]) {
            bool twin = std::any_of(tried.begin(), tried.end(), [&](int u) {
                return (adj[u] & ~(Mask{1} << v)) == (adj[v] & ~(Mask{1} << u));
            });
            if (twin)
                continue;
            tried.push_back(v);
            auto child = cells;
            auto rest = child[ti];
            rest.erase(std::find(rest.begin(), rest.end(), v));
            child[ti] = {v};
            child.insert(child.begin() + ti + 1, std::move(rest));
            dfs(std::move(child));
        }
    }

    void run()
    {
        if (n == 0) {
            have_best = true;
            return;
        }
        std::vector<int> all(n);
        for (int v = 0; v < n; ++v)
            all[v] = v;
        dfs({all});
    }
};

} // namespace

std::size_t CanonicalFormHash::operator()(const CanonicalForm & c) const
{
    std::size_t h = std::hash<int>{}(c.n);
    for (auto w : c.code)
        h ^= std::hash<std::uint64_t>{}(w) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    return h;
}

std::vector<int> canonical_labelling(const Graph & g)
{
    Search s(g);
    s.run();
    std::vector<int> lab(g.order());
    for (int pos = 0; pos < g.order(); ++pos)
        lab[s.best_order[pos]] = pos;
    return lab;
}

CanonicalForm canonical_form(const Graph & g)
{
    Search s(g);
    s.run();
    return {g.order(), s.best_code};
}

Graph canonical_graph(const Graph & g)
{
    auto lab = canonical_labelling(g);
    return relabel(g, lab);
}

std::optional<std::vector<int>> find_isomorphism(const Graph & g, const Graph & h)
{
    if (g.order() != h.order() || g.size() != h.size())
        return std::nullopt;
    auto lg = canonical_labelling(g);
    auto lh = canonical_labelling(h);
    if (relabel(g, lg) != relabel(h, lh))
        return std::nullopt;
    std::vector<int> inv(h.order());
    for (int v = 0; v < h.order(); ++v)
        inv[lh[v]] = v;
    std::vector<int> f(g.order());
    for (int v = 0; v < g.order(); ++v)
        f[v] = inv[lg[v]];
    return f;
}

bool is_isomorphic(const Graph & g, const Graph & h) { return find_isomorphism(g, h).has_value(); }

void for_each_isomorphism(const Graph & g, const Graph & h, const std::function<bool(const std::vector<int> &)> & visit)
{
    const int n = g.order();
    if (n != h.order() || g.size() != h.size())
        return;
    std::vector<int> f(n, -1);
    std::vector<bool> used(n, false);
    bool stop = false;
    std::function<void(int)> extend = [&](int v) {
        if (v == n) {
            stop = ! visit(f);
            return;
        }
        for (int w = 0; w < n && ! stop; ++w) {
            if (used[w] || g.degree(v) != h.degree(w))
                continue;
            bool ok = true;
            for (int u = 0; u < v && ok; ++u)
                ok = g.adjacent(u, v) == h.adjacent(f[u], w);
            if (! ok)
                continue;
            f[v] = w;
            used[w] = true;
            extend(v + 1);
            used[w] = false;
        }
        f[v] = -1;
    };
    extend(0);
}

std::vector<std::vector<Graph>> enumerate_hereditary_upto(int n, const std::function<bool(const Graph &)> & member, int max_n)
{
    if (n < 0)
        throw GraphError("negative vertex count");
    if (n > max_n)
        throw BudgetError("enumeration limited to " + std::to_string(max_n) + " vertices");
    std::vector<std::vector<Graph>> levels;
    levels.push_back({});
    if (member(Graph(0)))
        levels[0].push_back(Graph(0));
    for (int k = 1; k <= n; ++k) {
        std::unordered_map<CanonicalForm, bool, CanonicalFormHash> seen;
        std::vector<std::pair<CanonicalForm, Graph>> found;
        for (const auto & base : levels[k - 1]) {
            const Mask subsets = Mask{1} << (k - 1);
            for (Mask s = 0; s < subsets; ++s) {
                GraphBuilder b(k);
                for (auto [u, v] : base.edges())
                    b.add_edge(u, v);
                for (int u = 0; u < k - 1; ++u)
                    if ((s >> u) & 1U)
                        b.add_edge(u, k - 1);
                Graph cand = std::move(b).build();
                auto lab = canonical_labelling(cand);
                Graph canon = relabel(cand, lab);
                Search probe(canon);
                std::vector<int> identity(k);
                for (int v = 0; v < k; ++v)
                    identity[v] = v;
                CanonicalForm form{k, probe.code_of(identity)};
                auto [it, inserted] = seen.emplace(form, false);
                if (! inserted)
                    continue;
                if (member(canon)) {
                    it->second = true;
                    found.emplace_back(std::move(form), std::move(canon));
                }
            }
        }
        std::sort(found.begin(), found.end(), [](const auto & a, const auto & b) { return a.first < b.first; });
        std::vector<Graph> level;
        level.reserve(found.size());
        for (auto & [form, graph] : found)
            level.push_back(std::move(graph));
        levels.push_back(std::move(level));
    }
    return levels;
}

std::vector<Graph> enumerate_hereditary(int n, const std::function<bool(const Graph &)> & member, int max_n)
{
    return enumerate_hereditary_upto(n, member, max_n).back();
}

std::vector<Graph> enumerate_graphs(int n, int max_n)
{
    return enumerate_hereditary(n, [](const Graph &) { return true; }, max_n);
}

} // namespace cwlab
