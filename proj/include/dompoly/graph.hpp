#pragma once

#include <algorithm>
#include <bit>
#include <charconv>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "errors.hpp"

namespace dompoly {

/// Set of vertices as a bitmask; bit v stands for vertex v.
using VertexSet = std::uint64_t;

/// Largest vertex count a Graph can hold (one bit per vertex in a VertexSet).
inline constexpr std::size_t max_vertices = 64;

inline constexpr VertexSet singleton(std::size_t v) noexcept { return VertexSet{1} << v; }

/// {0, ..., n-1}
inline constexpr VertexSet full_set(std::size_t n) noexcept
{
    return n >= 64 ? ~VertexSet{0} : (VertexSet{1} << n) - 1;
}

/// Simple undirected graph on vertices 0..n-1, immutable once built.
class Graph {
public:
    Graph() = default;

    /// n isolated vertices.
    explicit Graph(std::size_t n) : closed_(n)
    {
        check_capacity(n);
        for (std::size_t v = 0; v < n; ++v) closed_[v] = singleton(v);
    }

    Graph(std::size_t n, const std::vector<std::pair<std::size_t, std::size_t>>& edges) : Graph(n)
    {
        for (auto [u, v] : edges) add_edge(u, v);
    }

    std::size_t order() const noexcept { return closed_.size(); }

    std::size_t size() const noexcept
    {
        std::size_t twice = 0;
        for (auto m : closed_) twice += static_cast<std::size_t>(std::popcount(m)) - 1;
        return twice / 2;
    }

    VertexSet vertices() const noexcept { return full_set(order()); }

    /// N[v]
    VertexSet closed_neighborhood(std::size_t v) const { return closed_.at(v); }

    /// N(v)
    VertexSet neighborhood(std::size_t v) const { return closed_.at(v) & ~singleton(v); }

    std::span<const VertexSet> closed_neighborhoods() const noexcept { return closed_; }

    bool adjacent(std::size_t u, std::size_t v) const { return u != v && (closed_.at(u) & singleton(v)) != 0; }

    std::size_t degree(std::size_t v) const { return static_cast<std::size_t>(std::popcount(neighborhood(v))); }

    /// N[S], the union of N[v] over v in s.
    VertexSet closed_neighborhood_of(VertexSet s) const noexcept
    {
        VertexSet cover = 0;
        while (s != 0) {
            cover |= closed_[static_cast<std::size_t>(std::countr_zero(s))];
            s &= s - 1;
        }
        return cover;
    }

    /// Edges (u, v) with u < v in lexicographic order.
    std::vector<std::pair<std::size_t, std::size_t>> edges() const
    {
        std::vector<std::pair<std::size_t, std::size_t>> out;
        for (std::size_t u = 0; u < order(); ++u) {
            VertexSet higher = neighborhood(u) & ~full_set(u + 1);
            while (higher != 0) {
                out.emplace_back(u, static_cast<std::size_t>(std::countr_zero(higher)));
                higher &= higher - 1;
            }
        }
        return out;
    }

    /// Degrees sorted descending.
    std::vector<std::size_t> degree_sequence() const
    {
        std::vector<std::size_t> d(order());
        for (std::size_t v = 0; v < order(); ++v) d[v] = degree(v);
        std::sort(d.begin(), d.end(), std::greater<>());
        return d;
    }

    friend bool operator==(const Graph&, const Graph&) = default;

    static void check_capacity(std::size_t n)
    {
        if (n > max_vertices)
            throw CapacityError("graph with " + std::to_string(n) + " vertices exceeds the " +
                                std::to_string(max_vertices) + "-vertex mask width");
    }

private:
    void add_edge(std::size_t u, std::size_t v)
    {
        if (u >= order() || v >= order()) throw InvalidArgument("edge endpoint out of range");
        if (u == v) throw InvalidArgument("self-loop on vertex " + std::to_string(u));
        closed_[u] |= singleton(v);
        closed_[v] |= singleton(u);
    }

    std::vector<VertexSet> closed_;
};

/// Disjoint union; h's vertices are renumbered after g's.
inline Graph disjoint_union(const Graph& g, const Graph& h)
{
    const std::size_t n = g.order();
    Graph::check_capacity(n + h.order());
    auto edges = g.edges();
    for (auto [u, v] : h.edges()) edges.emplace_back(u + n, v + n);
    return Graph(n + h.order(), edges);
}

/// G + H: disjoint union plus every edge between V(G) and V(H).
inline Graph join(const Graph& g, const Graph& h)
{
    const std::size_t n = g.order();
    const std::size_t m = h.order();
    Graph::check_capacity(n + m);
    auto edges = g.edges();
    for (auto [u, v] : h.edges()) edges.emplace_back(u + n, v + n);
    for (std::size_t u = 0; u < n; ++u)
        for (std::size_t v = 0; v < m; ++v) edges.emplace_back(u, n + v);
    return Graph(n + m, edges);
}

/**
 * G o H: vertex i of G keeps index i; the copy of H attached to it occupies
 * n + i*m .. n + (i+1)*m - 1 and is fully joined to i.
 */
inline Graph corona(const Graph& g, const Graph& h)
{
    if (h.order() == 0) throw InvalidArgument("corona: the attached graph must have at least one vertex");
    const std::size_t n = g.order();
    const std::size_t m = h.order();
    Graph::check_capacity(n * (1 + m));
    auto edges = g.edges();
    const auto h_edges = h.edges();
    for (std::size_t i = 0; i < n; ++i) {
        const std::size_t base = n + i * m;
        for (auto [u, v] : h_edges) edges.emplace_back(base + u, base + v);
        for (std::size_t v = 0; v < m; ++v) edges.emplace_back(i, base + v);
    }
    return Graph(n * (1 + m), edges);
}

inline Graph complement(const Graph& g)
{
    const std::size_t n = g.order();
    std::vector<std::pair<std::size_t, std::size_t>> edges;
    for (std::size_t u = 0; u < n; ++u)
        for (std::size_t v = u + 1; v < n; ++v)
            if (!g.adjacent(u, v)) edges.emplace_back(u, v);
    return Graph(n, edges);
}

// Edge-list text format: a header "n m" followed by m lines "u v" (0-based, u != v).

inline std::string to_edge_list(const Graph& g)
{
    const auto edges = g.edges();
    std::ostringstream os;
    os << g.order() << ' ' << edges.size() << '\n';
    for (auto [u, v] : edges) os << u << ' ' << v << '\n';
    return os.str();
}

namespace detail {

inline std::vector<std::string_view> split_ws(std::string_view line)
{
    std::vector<std::string_view> out;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
        std::size_t j = i;
        while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
        if (j > i) out.push_back(line.substr(i, j - i));
        i = j;
    }
    return out;
}

inline std::size_t parse_index(std::string_view tok, std::size_t line)
{
    std::size_t value = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (ec != std::errc{} || ptr != tok.data() + tok.size())
        throw ParseError(line, "expected a nonnegative integer, got '" + std::string(tok) + "'");
    return value;
}

} // namespace detail

inline Graph parse_edge_list(std::string_view text)
{
    std::vector<std::string_view> lines;
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t end = text.find('\n', start);
        if (end == std::string_view::npos) end = text.size();
        lines.push_back(text.substr(start, end - start));
        start = end + 1;
    }
    // Trailing blank lines are tolerated; blank lines inside the body are not.
    while (!lines.empty() && detail::split_ws(lines.back()).empty()) lines.pop_back();
    if (lines.empty()) throw ParseError(1, "missing header line 'n m'");

    const auto header = detail::split_ws(lines[0]);
    if (header.size() != 2) throw ParseError(1, "header must be 'n m'");
    const std::size_t n = detail::parse_index(header[0], 1);
    const std::size_t m = detail::parse_index(header[1], 1);
    if (n > max_vertices)
        throw CapacityError("graph with " + std::to_string(n) + " vertices exceeds the " +
                            std::to_string(max_vertices) + "-vertex mask width");
    if (lines.size() - 1 != m)
        throw ParseError(lines.size(), "header declares " + std::to_string(m) + " edges but " +
                                           std::to_string(lines.size() - 1) + " edge lines follow");

    Graph g(n);
    std::vector<std::pair<std::size_t, std::size_t>> edges;
    edges.reserve(m);
    for (std::size_t i = 1; i < lines.size(); ++i) {
        const std::size_t lineno = i + 1;
        const auto tok = detail::split_ws(lines[i]);
        if (tok.size() != 2) throw ParseError(lineno, "edge line must be 'u v'");
        const std::size_t u = detail::parse_index(tok[0], lineno);
        const std::size_t v = detail::parse_index(tok[1], lineno);
        if (u >= n || v >= n) throw ParseError(lineno, "vertex index out of range [0, " + std::to_string(n) + ")");
        if (u == v) throw ParseError(lineno, "self-loop on vertex " + std::to_string(u));
        const auto key = std::minmax(u, v);
        if (std::find(edges.begin(), edges.end(), std::pair{key.first, key.second}) != edges.end())
            throw ParseError(lineno, "duplicate edge " + std::to_string(u) + " " + std::to_string(v));
        edges.emplace_back(key.first, key.second);
    }
    return Graph(n, edges);
}

} // namespace dompoly
