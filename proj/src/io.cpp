#include "thetaring/io.hpp"

#include "thetaring/error.hpp"

#include <cstdio>
#include <fstream>
#include <set>
#include <sstream>

namespace thetaring {

namespace {

    bool blank(const std::string & line)
    {
        return line.find_first_not_of(" \t\r") == std::string::npos;
    }

    // Reads exactly `count` integers from the line, nothing else.
    bool read_ints(const std::string & line, std::span<long long> out)
    {
        std::istringstream ss(line);
        for (auto & v : out)
            if (!(ss >> v))
                return false;
        std::string rest;
        return !(ss >> rest);
    }

} // namespace

Graph parse_edge_list(std::istream & in)
{
    std::string line;
    std::size_t lineno = 0;
    long long header[2];
    while (true) {
        if (!std::getline(in, line))
            throw ParseError(lineno + 1, "missing header `n m`");
        ++lineno;
        if (!blank(line))
            break;
    }
    if (!read_ints(line, header))
        throw ParseError(lineno, "header must be `n m`");
    auto [n, m] = std::pair{header[0], header[1]};
    if (n < 0 || m < 0)
        throw ParseError(lineno, "negative count in header");
    if (n > 100000)
        throw ParseError(lineno, "vertex count too large");

    std::vector<Edge> edges;
    std::set<Edge> seen;
    while (static_cast<long long>(edges.size()) < m) {
        if (!std::getline(in, line))
            throw ParseError(lineno + 1, "expected " + std::to_string(m) + " edge lines, found " + std::to_string(edges.size()));
        ++lineno;
        long long uv[2];
        if (!read_ints(line, uv))
            throw ParseError(lineno, "edge line must be `u v`");
        if (uv[0] < 0 || uv[1] < 0 || uv[0] >= n || uv[1] >= n)
            throw ParseError(lineno, "vertex out of range");
        if (uv[0] == uv[1])
            throw ParseError(lineno, "self loop");
        Edge e{static_cast<int>(std::min(uv[0], uv[1])), static_cast<int>(std::max(uv[0], uv[1]))};
        if (!seen.insert(e).second)
            throw ParseError(lineno, "duplicate edge");
        edges.push_back(e);
    }
    while (std::getline(in, line)) {
        ++lineno;
        if (!blank(line))
            throw ParseError(lineno, "unexpected content after " + std::to_string(m) + " edge lines");
    }
    return {static_cast<int>(n), edges};
}

Graph parse_edge_list(std::string_view text)
{
    std::istringstream in{std::string(text)};
    return parse_edge_list(in);
}

Graph read_edge_list(const std::filesystem::path & path)
{
    std::ifstream in(path);
    if (!in)
        throw GraphError("cannot open " + path.string());
    return parse_edge_list(in);
}

std::string to_edge_list(const Graph & g)
{
    std::ostringstream out;
    out << g.order() << ' ' << g.size() << '\n';
    for (auto [u, v] : g.edges())
        out << u << ' ' << v << '\n';
    return out.str();
}

Graph parse_graph6(std::string_view line)
{
    while (!line.empty() && (line.back() == '\n' || line.back() == '\r' || line.back() == ' '))
        line.remove_suffix(1);
    if (line.starts_with(">>graph6<<"))
        line.remove_prefix(10);
    if (line.empty())
        throw GraphError("empty graph6 line");
    for (char c : line)
        if (c < 63 || c > 126)
            throw GraphError("invalid graph6 character");
    int n = line[0] - 63;
    if (n == 63)
        throw GraphError("graph6 graphs above 62 vertices are not supported");
    std::size_t bits_needed = static_cast<std::size_t>(n) * (n - 1) / 2;
    if (line.size() - 1 != (bits_needed + 5) / 6)
        throw GraphError("graph6 length does not match vertex count");
    std::vector<Edge> edges;
    std::size_t k = 0;
    for (int v = 1; v < n; ++v)
        for (int u = 0; u < v; ++u, ++k) {
            int byte = line[1 + k / 6] - 63;
            if (byte & (1 << (5 - static_cast<int>(k % 6))))
                edges.push_back({u, v});
        }
    return {n, edges};
}

std::string to_graph6(const Graph & g)
{
    int n = g.order();
    if (n > 62)
        throw GraphError("graph6 graphs above 62 vertices are not supported");
    std::string out(1, static_cast<char>(63 + n));
    std::size_t bits = static_cast<std::size_t>(n) * (n - 1) / 2;
    std::string body((bits + 5) / 6, 0);
    std::size_t k = 0;
    for (int v = 1; v < n; ++v)
        for (int u = 0; u < v; ++u, ++k)
            if (g.adjacent(u, v))
                body[k / 6] = static_cast<char>(body[k / 6] | (1 << (5 - static_cast<int>(k % 6))));
    for (char & c : body)
        c = static_cast<char>(c + 63);
    return out + body;
}

std::string digest(std::string_view bytes)
{
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

} // namespace thetaring
