#include <cwlab/victor.hpp>
#include <cwlab/lifts.hpp>
#include <cwlab/patterns.hpp>

#include <algorithm>
#include <functional>

namespace cwlab {

std::optional<VertexSet> mixed_partition_violation(const Graph & g, const MixedPartition & p)
{
    const int n = g.order();
    std::vector<int> seen(n, 0);
    auto scan = [&](const std::vector<VertexSet> & blocks, bool clique) -> std::optional<VertexSet> {
        for (const auto & b : blocks) {
            for (int v : b) {
                if (v < 0 || v >= n)
                    return VertexSet{v};
                if (seen[v]++)
                    return VertexSet{v};
            }
            for (std::size_t i = 0; i < b.size(); ++i)
                for (std::size_t j = i + 1; j < b.size(); ++j)
                    if (g.adjacent(b[i], b[j]) != clique)
                        return normalize_set(g, {b[i], b[j]});
        }
        return std::nullopt;
    };
    if (auto w = scan(p.cliques, true))
        return w;
    if (auto w = scan(p.indeps, false))
        return w;
    for (int v = 0; v < n; ++v)
        if (! seen[v])
            return VertexSet{v};
    return std::nullopt;
}

std::optional<MixedPartition> find_mixed_partition(const Graph & g, int max_cliques, int max_indep)
{
    const int n = g.order();
    if (n > 12)
        throw BudgetError("find_mixed_partition limited to 12 vertices");
    MixedPartition p;
    p.cliques.assign(std::max(0, max_cliques), {});
    p.indeps.assign(std::max(0, max_indep), {});
    std::function<bool(int)> place = [&](int v) {
        if (v == n)
            return true;
        for (int type = 0; type < 2; ++type) {
            auto & blocks = type == 0 ? p.cliques : p.indeps;
            bool opened = false;
            for (auto & b : blocks) {
                if (b.empty()) {
                    if (opened)
                        continue;
                    opened = true;
                }
                bool ok = std::all_of(b.begin(), b.end(), [&](int u) { return g.adjacent(u, v) == (type == 0); });
                if (! ok)
                    continue;
                b.push_back(v);
                if (place(v + 1))
                    return true;
                b.pop_back();
            }
        }
        return false;
    };
    if (! place(0))
        return std::nullopt;
    return p;
}

std::string to_string(PairShape s)
{
    switch (s) {
    case PairShape::Matching:
        return "matching";
    case PairShape::CoMatching:
        return "co-matching";
    case PairShape::Complete:
        return "complete";
    case PairShape::AntiComplete:
        return "anti-complete";
    }
    return {};
}

namespace {

// Largest number of (non-)neighbours any vertex has on the other side.
int max_cross(const Graph & g, const VertexSet & x, const VertexSet & y, bool adjacent)
{
    int best = 0;
    auto side = [&](const VertexSet & a, const VertexSet & b) {
        for (int u : a) {
            int c = 0;
            for (int v : b)
                c += g.adjacent(u, v) == adjacent;
            best = std::max(best, c);
        }
    };
    side(x, y);
    side(y, x);
    return best;
}

std::vector<VertexSet> subsets_upto(const VertexSet & s, int k)
{
    std::vector<VertexSet> out{{}};
    for (int size = 1; size <= std::min<int>(k, s.size()); ++size) {
        std::vector<bool> pick(s.size(), false);
        std::fill(pick.begin(), pick.begin() + size, true);
        do {
            VertexSet d;
            for (std::size_t i = 0; i < s.size(); ++i)
                if (pick[i])
                    d.push_back(s[i]);
            out.push_back(std::move(d));
        } while (std::prev_permutation(pick.begin(), pick.end()));
    }
    return out;
}

VertexSet minus(const VertexSet & a, const VertexSet & b)
{
    VertexSet out;
    std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

std::optional<PairReduction> search(const Graph & g, const VertexSet & x0, const VertexSet & y0, int k,
                                    const std::function<std::optional<PairShape>(const VertexSet &, const VertexSet &)> & shape)
{
    VertexSet x = normalize_set(g, x0), y = normalize_set(g, y0);
    auto dx = subsets_upto(x, k), dy = subsets_upto(y, k);
    for (int total = 0; total <= 2 * k; ++total)
        for (const auto & a : dx) {
            if (static_cast<int>(a.size()) > total)
                continue;
            for (const auto & b : dy) {
                if (static_cast<int>(a.size() + b.size()) != total)
                    continue;
                if (auto s = shape(minus(x, a), minus(y, b)))
                    return PairReduction{a, b, *s};
            }
        }
    return std::nullopt;
}

} // namespace

bool is_matching_between(const Graph & g, const VertexSet & x, const VertexSet & y) { return max_cross(g, x, y, true) <= 1; }
bool is_co_matching_between(const Graph & g, const VertexSet & x, const VertexSet & y) { return max_cross(g, x, y, false) <= 1; }
bool is_complete_between(const Graph & g, const VertexSet & x, const VertexSet & y) { return max_cross(g, x, y, false) == 0; }
bool is_anticomplete_between(const Graph & g, const VertexSet & x, const VertexSet & y) { return max_cross(g, x, y, true) == 0; }

std::optional<PairReduction> find_matching_reduction(const Graph & g, const VertexSet & x, const VertexSet & y, int max_deletions)
{
    return search(g, x, y, max_deletions, [&](const VertexSet & a, const VertexSet & b) -> std::optional<PairShape> {
        if (is_matching_between(g, a, b))
            return PairShape::Matching;
        if (is_co_matching_between(g, a, b))
            return PairShape::CoMatching;
        return std::nullopt;
    });
}

std::optional<PairReduction> find_comp_anti_reduction(const Graph & g, const VertexSet & x, const VertexSet & y, int max_deletions)
{
    return search(g, x, y, max_deletions, [&](const VertexSet & a, const VertexSet & b) -> std::optional<PairShape> {
        if (is_anticomplete_between(g, a, b))
            return PairShape::AntiComplete;
        if (is_complete_between(g, a, b))
            return PairShape::Complete;
        return std::nullopt;
    });
}

std::string to_decimal(Width128 v)
{
    if (v == 0)
        return "0";
    std::string s;
    while (v > 0) {
        s.push_back(static_cast<char>('0' + static_cast<int>(v % 10)));
        v /= 10;
    }
    std::reverse(s.begin(), s.end());
    return s;
}

Width128 victor_width_constant()
{
    Width128 w = 4;
    for (int i = 0; i < 3; ++i)
        w = 4 * w;
    for (int i = 0; i < 6; ++i)
        w = 6 * w;
    for (int i = 0; i < 12; ++i)
        w = 2 * w + 1;
    for (int i = 0; i < 9; ++i)
        w = 6 * w;
    for (int i = 0; i < 54; ++i)
        w = 2 * w + 1;
    return w;
}

namespace {

struct Step {
    enum class Kind { Delete, Complement, Bipartite } kind;
    int position = -1;
    VertexSet first;
    VertexSet second;
    bool whole = false;
};

class Reducer {
public:
    Reducer(Graph g, const MixedPartition & p) : h_(std::move(g))
    {
        blocks_.insert(blocks_.end(), p.cliques.begin(), p.cliques.end());
        blocks_.resize(3);
        blocks_.insert(blocks_.end(), p.indeps.begin(), p.indeps.end());
        blocks_.resize(6);
        for (auto & b : blocks_)
            b = normalize_set(h_, b);
    }

    VertexSet & clique(int i) { return blocks_[i]; }
    VertexSet & indep(int i) { return blocks_[3 + i]; }
    const Graph & graph() const { return h_; }
    const std::vector<Step> & steps() const { return steps_; }

    void remove(VertexSet vs)
    {
        std::sort(vs.rbegin(), vs.rend());
        for (int v : vs) {
            VertexSet nb = h_.neighbours(v).to_vector();
            steps_.push_back({Step::Kind::Delete, v, std::move(nb), {}, false});
            h_ = delete_vertices(h_, {v});
            for (auto & b : blocks_) {
                VertexSet nbk;
                for (int x : b)
                    if (x != v)
                        nbk.push_back(x > v ? x - 1 : x);
                b = std::move(nbk);
            }
        }
    }

    void complement(const VertexSet & s)
    {
        steps_.push_back({Step::Kind::Complement, -1, s, {}, static_cast<int>(s.size()) == h_.order()});
        h_ = subgraph_complementation(h_, s);
    }

    void flip(const VertexSet & s, const VertexSet & t)
    {
        steps_.push_back({Step::Kind::Bipartite, -1, s, t, false});
        h_ = bipartite_complementation(h_, s, t);
    }

private:
    Graph h_;
    std::vector<VertexSet> blocks_;
    std::vector<Step> steps_;
};

} // namespace

VictorReport victor_pipeline_report(const Graph & g, const MixedPartition & part)
{
    if (auto w = contains_induced(g, pattern("2P1+P3")))
        throw WitnessError("graph contains an induced 2P1+P3", *w);
    if (auto w = contains_induced(g, complement(pattern("2P1+P3"))))
        throw WitnessError("graph contains an induced co-(2P1+P3)", *w);
    if (part.cliques.size() > 3 || part.indeps.size() > 3)
        throw WitnessError("partition has more than three cliques or independent sets", {});
    if (auto w = mixed_partition_violation(g, part))
        throw WitnessError("invalid clique/independent-set partition", *w);

    VictorReport report;
    Reducer r(g, part);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            auto red = find_comp_anti_reduction(r.graph(), r.clique(i), r.indep(j), 3);
            if (! red)
                throw std::logic_error("no complete/anti-complete reduction within three deletions per side");
            VertexSet d = red->delete_x;
            d.insert(d.end(), red->delete_y.begin(), red->delete_y.end());
            report.comp_anti_deletions += static_cast<int>(d.size());
            r.remove(d);
        }
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            if (! is_anticomplete_between(r.graph(), r.clique(i), r.indep(j))) {
                r.flip(r.clique(i), r.indep(j));
                ++report.bipartite_complementations;
            }
    std::vector<std::pair<int, int>> pairs{{0, 1}, {0, 2}, {1, 2}, {3, 4}, {3, 5}, {4, 5}};
    auto block = [&](int b) -> VertexSet & { return b < 3 ? r.clique(b) : r.indep(b - 3); };
    for (auto [a, b] : pairs) {
        auto red = find_matching_reduction(r.graph(), block(a), block(b), 1);
        if (! red)
            throw std::logic_error("no matching/co-matching reduction within one deletion per side");
        VertexSet d = red->delete_x;
        d.insert(d.end(), red->delete_y.begin(), red->delete_y.end());
        report.matching_deletions += static_cast<int>(d.size());
        r.remove(d);
    }
    for (auto [a, b] : pairs)
        if (! is_matching_between(r.graph(), block(a), block(b))) {
            r.flip(block(a), block(b));
            ++report.bipartite_complementations;
        }
    for (int i = 0; i < 3; ++i)
        if (r.clique(i).size() >= 2) {
            r.complement(r.clique(i));
            ++report.subgraph_complementations;
        }
    if (max_degree(r.graph()) > 2)
        throw std::logic_error("reduced graph has a vertex of degree above 2");

    WidthCertificate cert = degree2_expression(r.graph());
    report.residual_width = cert.width;
    Width128 bound = cert.width;
    const auto & steps = r.steps();
    for (auto it = steps.rbegin(); it != steps.rend(); ++it) {
        switch (it->kind) {
        case Step::Kind::Delete:
            cert = lift_add_vertex(cert, it->first, it->position);
            bound = 2 * bound + 1;
            break;
        case Step::Kind::Complement:
            cert = lift_subgraph_complementation(cert, it->first);
            bound *= it->whole ? 2 : 4;
            break;
        case Step::Kind::Bipartite:
            cert = lift_bipartite_complementation(cert, it->first, it->second);
            bound *= 6;
            break;
        }
        cert = compact(cert);
    }
    if (! (cert.graph == g))
        throw std::logic_error("victor_pipeline: lifted certificate is for a different graph");
    check_certificate(cert, "victor_pipeline");
    if (static_cast<Width128>(cert.width) > bound || bound > victor_width_constant())
        throw std::logic_error("victor_pipeline: width bound violated");
    report.certificate = std::move(cert);
    report.bound = bound;
    return report;
}

WidthCertificate victor_pipeline(const Graph & g, const MixedPartition & part)
{
    return victor_pipeline_report(g, part).certificate;
}

} // namespace cwlab
