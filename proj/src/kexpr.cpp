#include <cwlab/kexpr.hpp>

#include <algorithm>
#include <cctype>
#include <functional>
#include <map>
#include <set>

namespace cwlab {

KExpression KExpression::create(int label, int vertex)
{
    if (label < 1)
        throw GraphError("labels must be positive");
    return KExpression(std::make_shared<const Node>(Node{Kind::Create, label, vertex, {}, {}}));
}

KExpression KExpression::unite(KExpression left, KExpression right)
{
    if (left.empty())
        return right;
    if (right.empty())
        return left;
    return KExpression(std::make_shared<const Node>(Node{Kind::Union, 0, 0, std::move(left), std::move(right)}));
}

KExpression KExpression::join(int i, int j, KExpression child)
{
    if (i == j)
        throw GraphError("join needs two different labels");
    if (i < 1 || j < 1)
        throw GraphError("labels must be positive");
    return KExpression(std::make_shared<const Node>(Node{Kind::Join, i, j, std::move(child), {}}));
}

KExpression KExpression::rename(int from, int to, KExpression child)
{
    if (from < 1 || to < 1)
        throw GraphError("labels must be positive");
    return KExpression(std::make_shared<const Node>(Node{Kind::Rename, from, to, std::move(child), {}}));
}

namespace {

// Label classes of a partial evaluation: label -> vertices (leaf indices).
using Classes = std::map<int, std::vector<int>>;

Classes eval_into(const KExpression & e, int & next_vertex, GraphBuilder & b)
{
    switch (e.kind()) {
    case KExpression::Kind::Create:
        return {{e.a(), {next_vertex++}}};
    case KExpression::Kind::Union: {
        Classes l = eval_into(e.left(), next_vertex, b);
        Classes r = eval_into(e.right(), next_vertex, b);
        for (auto & [label, vs] : r) {
            auto & dst = l[label];
            dst.insert(dst.end(), vs.begin(), vs.end());
        }
        return l;
    }
    case KExpression::Kind::Join: {
        Classes c = eval_into(e.child(), next_vertex, b);
        auto i = c.find(e.a());
        auto j = c.find(e.b());
        if (i != c.end() && j != c.end())
            for (int u : i->second)
                for (int v : j->second)
                    b.add_edge(u, v);
        return c;
    }
    case KExpression::Kind::Rename: {
        Classes c = eval_into(e.child(), next_vertex, b);
        auto i = c.find(e.a());
        if (i != c.end() && e.a() != e.b()) {
            auto moved = std::move(i->second);
            c.erase(i);
            auto & dst = c[e.b()];
            dst.insert(dst.end(), moved.begin(), moved.end());
        }
        return c;
    }
    }
    return {};
}

void collect_labels(const KExpression & e, std::set<int> & out)
{
    switch (e.kind()) {
    case KExpression::Kind::Create:
        out.insert(e.a());
        return;
    case KExpression::Kind::Union:
        collect_labels(e.left(), out);
        collect_labels(e.right(), out);
        return;
    case KExpression::Kind::Join:
    case KExpression::Kind::Rename:
        out.insert(e.a());
        out.insert(e.b());
        collect_labels(e.child(), out);
        return;
    }
}

KExpression map_labels(const KExpression & e, const std::function<int(int)> & f)
{
    switch (e.kind()) {
    case KExpression::Kind::Create:
        return KExpression::create(f(e.a()), e.b());
    case KExpression::Kind::Union:
        return KExpression::unite(map_labels(e.left(), f), map_labels(e.right(), f));
    case KExpression::Kind::Join:
        return KExpression::join(f(e.a()), f(e.b()), map_labels(e.child(), f));
    case KExpression::Kind::Rename:
        return KExpression::rename(f(e.a()), f(e.b()), map_labels(e.child(), f));
    }
    return {};
}

} // namespace

int leaf_count(const KExpression & e)
{
    if (e.empty())
        return 0;
    switch (e.kind()) {
    case KExpression::Kind::Create:
        return 1;
    case KExpression::Kind::Union:
        return leaf_count(e.left()) + leaf_count(e.right());
    default:
        return leaf_count(e.child());
    }
}

int node_count(const KExpression & e)
{
    if (e.empty())
        return 0;
    if (e.kind() == KExpression::Kind::Create)
        return 1;
    return 1 + node_count(e.left()) + node_count(e.right());
}

std::vector<int> leaf_vertices(const KExpression & e)
{
    std::vector<int> out;
    std::function<void(const KExpression &)> walk = [&](const KExpression & x) {
        if (x.empty())
            return;
        if (x.kind() == KExpression::Kind::Create)
            out.push_back(x.b());
        else {
            walk(x.left());
            walk(x.right());
        }
    };
    walk(e);
    return out;
}

LabelledGraph evaluate(const KExpression & e)
{
    const int n = leaf_count(e);
    GraphBuilder b(n);
    LabelledGraph out;
    out.labels.assign(n, 0);
    if (n == 0) {
        out.graph = Graph(0);
        return out;
    }
    int next = 0;
    Classes classes = eval_into(e, next, b);
    for (auto & [label, vs] : classes)
        for (int v : vs)
            out.labels[v] = label;
    out.graph = std::move(b).build();
    return out;
}

std::vector<int> labels_used(const KExpression & e)
{
    std::set<int> s;
    if (! e.empty())
        collect_labels(e, s);
    return {s.begin(), s.end()};
}

int width(const KExpression & e) { return static_cast<int>(labels_used(e).size()); }

KExpression compress_labels(const KExpression & e)
{
    if (e.empty())
        return e;
    auto used = labels_used(e);
    std::map<int, int> to;
    for (std::size_t i = 0; i < used.size(); ++i)
        to[used[i]] = static_cast<int>(i) + 1;
    return map_labels(e, [&](int l) { return to.at(l); });
}

KExpression retag(const KExpression & e, const std::vector<int> & f)
{
    if (e.empty())
        return e;
    switch (e.kind()) {
    case KExpression::Kind::Create:
        return KExpression::create(e.a(), e.b() >= 0 ? f.at(e.b()) : -1);
    case KExpression::Kind::Union:
        return KExpression::unite(retag(e.left(), f), retag(e.right(), f));
    case KExpression::Kind::Join:
        return KExpression::join(e.a(), e.b(), retag(e.child(), f));
    case KExpression::Kind::Rename:
        return KExpression::rename(e.a(), e.b(), retag(e.child(), f));
    }
    return {};
}

std::string to_text(const KExpression & e)
{
    if (e.empty())
        return {};
    switch (e.kind()) {
    case KExpression::Kind::Create:
        return "(v " + std::to_string(e.a()) + ")";
    case KExpression::Kind::Union:
        return "(u " + to_text(e.left()) + " " + to_text(e.right()) + ")";
    case KExpression::Kind::Join:
        return "(j " + std::to_string(e.a()) + " " + std::to_string(e.b()) + " " + to_text(e.child()) + ")";
    case KExpression::Kind::Rename:
        return "(r " + std::to_string(e.a()) + " " + std::to_string(e.b()) + " " + to_text(e.child()) + ")";
    }
    return {};
}

namespace {

struct Parser {
    std::string_view s;
    std::size_t pos = 0;
    int next_leaf = 0;

    [[noreturn]] void fail(const std::string & why) const
    {
        throw GraphError("malformed expression at offset " + std::to_string(pos) + ": " + why);
    }

    void expect(char c)
    {
        if (pos >= s.size() || s[pos] != c)
            fail(std::string("expected '") + c + "'");
        ++pos;
    }

    int number()
    {
        std::size_t start = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos])))
            ++pos;
        if (pos == start || pos - start > 9)
            fail("expected a label");
        int v = std::stoi(std::string(s.substr(start, pos - start)));
        if (v < 1)
            fail("labels must be positive");
        return v;
    }

    KExpression expr()
    {
        expect('(');
        if (pos >= s.size())
            fail("unexpected end");
        char op = s[pos++];
        KExpression out;
        if (op == 'v') {
            expect(' ');
            out = KExpression::create(number(), next_leaf++);
        }
        else if (op == 'u') {
            expect(' ');
            auto l = expr();
            expect(' ');
            auto r = expr();
            out = KExpression::unite(std::move(l), std::move(r));
        }
        else if (op == 'j' || op == 'r') {
            expect(' ');
            int i = number();
            expect(' ');
            int k = number();
            expect(' ');
            auto c = expr();
            if (op == 'j') {
                if (i == k)
                    fail("join needs two different labels");
                out = KExpression::join(i, k, std::move(c));
            }
            else
                out = KExpression::rename(i, k, std::move(c));
        }
        else
            fail(std::string("unknown operation '") + op + "'");
        expect(')');
        return out;
    }
};

} // namespace

KExpression parse_kexpr(std::string_view text)
{
    while (! text.empty() && (text.back() == '\n' || text.back() == '\r'))
        text.remove_suffix(1);
    if (text.empty())
        return {};
    Parser p{text};
    auto e = p.expr();
    if (p.pos != text.size())
        p.fail("trailing characters");
    return e;
}

} // namespace cwlab
