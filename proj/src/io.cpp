#include <cwlab/io.hpp>

#include <fstream>
#include <set>
#include <sstream>

namespace cwlab {

std::string write_text(const Graph & g)
{
    std::string out = std::to_string(g.order()) + " " + std::to_string(g.size()) + "\n";
    for (auto [u, v] : g.edges())
        out += std::to_string(u) + " " + std::to_string(v) + "\n";
    return out;
}

Graph read_text(std::string_view text)
{
    std::istringstream in{std::string(text)};
    long long n = -1, m = -1;
    if (! (in >> n >> m) || n < 0 || m < 0)
        throw GraphError("malformed header: expected \"n m\"");
    if (n > 100000)
        throw GraphError("vertex count too large");
    std::set<Edge> edges;
    for (long long i = 0; i < m; ++i) {
        long long u, v;
        if (! (in >> u >> v))
            throw GraphError("expected " + std::to_string(m) + " edges, got " + std::to_string(i));
        if (u < 0 || v < 0 || u >= n || v >= n)
            throw GraphError("edge endpoint out of range on edge " + std::to_string(i + 1));
        if (u == v)
            throw GraphError("loop edge at vertex " + std::to_string(u));
        Edge e{static_cast<int>(std::min(u, v)), static_cast<int>(std::max(u, v))};
        if (! edges.insert(e).second)
            throw GraphError("duplicate edge " + std::to_string(e.u) + " " + std::to_string(e.v));
    }
    std::string extra;
    if (in >> extra)
        throw GraphError("trailing data after edge list");
    std::vector<Edge> list(edges.begin(), edges.end());
    return make_graph(static_cast<int>(n), list);
}

std::string write_graph6(const Graph & g)
{
    const int n = g.order();
    std::string out;
    if (n <= 62)
        out += static_cast<char>(n + 63);
    else if (n <= 258047) {
        out += static_cast<char>(126);
        for (int shift = 12; shift >= 0; shift -= 6)
            out += static_cast<char>(((n >> shift) & 63) + 63);
    }
    else
        throw GraphError("graph6 writer supports at most 258047 vertices");
    int acc = 0, nbits = 0;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i) {
            acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
            if (++nbits == 6) {
                out += static_cast<char>(acc + 63);
                acc = nbits = 0;
            }
        }
    if (nbits > 0)
        out += static_cast<char>((acc << (6 - nbits)) + 63);
    return out;
}

Graph read_graph6(std::string_view text)
{
    constexpr std::string_view header = ">>graph6<<";
    if (text.substr(0, header.size()) == header)
        text.remove_prefix(header.size());
    while (! text.empty() && (text.back() == '\n' || text.back() == '\r'))
        text.remove_suffix(1);
    if (text.empty())
        throw GraphError("empty graph6 string");
    for (char c : text)
        if (c < 63 || c > 126)
            throw GraphError("invalid graph6 character");
    std::size_t pos = 0;
    int n;
    if (text[0] != 126)
        n = text[pos++] - 63;
    else {
        if (text.size() < 4 || text[1] == 126)
            throw GraphError("unsupported graph6 size prefix");
        n = 0;
        for (pos = 1; pos < 4; ++pos)
            n = (n << 6) | (text[pos] - 63);
    }
    std::size_t bits = static_cast<std::size_t>(n) * (n - 1) / 2;
    if (text.size() - pos != (bits + 5) / 6)
        throw GraphError("graph6 length does not match vertex count");
    GraphBuilder b(n);
    std::size_t k = 0;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i, ++k) {
            int byte = text[pos + k / 6] - 63;
            if ((byte >> (5 - k % 6)) & 1)
                b.add_edge(i, j);
        }
    return std::move(b).build();
}

Graph read_graph_file(const std::string & path)
{
    std::ifstream in(path, std::ios::binary);
    if (! in)
        throw GraphError("cannot open graph file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    std::string text = ss.str();
    auto first = text.find_first_not_of(" \t\r\n");
    if (first != std::string::npos && (text[first] < '0' || text[first] > '9'))
        return read_graph6(text.substr(first));
    return read_text(text);
}

} // namespace cwlab
