#pragma once

#include <array>
#include <charconv>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "graph.hpp"

namespace dompoly {

enum class Family {
    complete,
    complete_bipartite,
    path,
    cycle,
    friendship,
    complement_friendship,
    cocktail_party,
    book,
    k_star,
    h_witness,
};

/// A named parametric graph family instance, e.g. book(3) or k_star(3, 5).
struct FamilySpec {
    Family family;
    std::vector<std::size_t> params;

    friend bool operator==(const FamilySpec&, const FamilySpec&) = default;
};

namespace detail {

struct FamilyInfo {
    Family family;
    std::string_view name;
    std::size_t arity;
    std::string_view alias;
};

inline constexpr std::array<FamilyInfo, 10> family_table{{
    {Family::complete, "complete", 1, "K"},
    {Family::complete_bipartite, "complete_bipartite", 2, "Kab"},
    {Family::path, "path", 1, "P"},
    {Family::cycle, "cycle", 1, "C"},
    {Family::friendship, "friendship", 1, "F"},
    {Family::complement_friendship, "complement_friendship", 1, "Fc"},
    {Family::cocktail_party, "cocktail_party", 1, "CP"},
    {Family::book, "book", 1, "B"},
    {Family::k_star, "k_star", 2, "S"},
    {Family::h_witness, "h_witness", 1, "H"},
}};

inline const FamilyInfo& info(Family f)
{
    for (const auto& i : family_table)
        if (i.family == f) return i;
    throw InvalidArgument("unknown family");
}

} // namespace detail

inline std::string_view family_name(Family f) { return detail::info(f).name; }

/// Accepts the canonical names and the short aliases (K, P, C, F, Fc, CP, B, S, H, Kab).
inline std::optional<Family> family_from_name(std::string_view name)
{
    for (const auto& i : detail::family_table)
        if (i.name == name || i.alias == name) return i.family;
    return std::nullopt;
}

inline std::size_t family_arity(Family f) { return detail::info(f).arity; }

/// "name:p1,p2"
inline std::string to_string(const FamilySpec& spec)
{
    std::string s(family_name(spec.family));
    s += ':';
    for (std::size_t i = 0; i < spec.params.size(); ++i) {
        if (i > 0) s += ',';
        s += std::to_string(spec.params[i]);
    }
    return s;
}

/// Throws InvalidArgument when the parameters do not fit the family.
inline void validate(const FamilySpec& spec)
{
    const auto& p = spec.params;
    const auto fail = [&](const std::string& why) {
        throw InvalidArgument("invalid family spec " + to_string(spec) + ": " + why);
    };
    if (p.size() != family_arity(spec.family))
        fail("expected " + std::to_string(family_arity(spec.family)) + " parameter(s)");
    switch (spec.family) {
    case Family::cycle:
        if (p[0] < 3) fail("cycle needs n >= 3");
        break;
    case Family::k_star:
        if (p[0] < 1) fail("k_star needs k >= 1");
        if (p[1] < p[0] + 1) fail("k_star needs n >= k + 1");
        break;
    case Family::complete_bipartite:
        if (p[0] < 1 || p[1] < 1) fail("complete_bipartite needs a, b >= 1");
        break;
    default:
        if (p[0] < 1) fail("parameter must be >= 1");
    }
}

/// Vertex count of the instance, without building it (works beyond the mask cap).
inline std::size_t family_order(const FamilySpec& spec)
{
    validate(spec);
    const auto& p = spec.params;
    switch (spec.family) {
    case Family::complete:
    case Family::path:
    case Family::cycle:
        return p[0];
    case Family::complete_bipartite:
        return p[0] + p[1];
    case Family::friendship:
    case Family::complement_friendship:
        return 2 * p[0] + 1;
    case Family::cocktail_party:
        return 2 * p[0];
    case Family::book:
        return 2 * p[0] + 2;
    case Family::k_star:
        return p[1];
    case Family::h_witness:
        return p[0] % 2 == 0 ? 2 * p[0] : 2 * p[0] + 1;
    }
    throw InvalidArgument("unknown family");
}

inline Graph complete_graph(std::size_t n)
{
    std::vector<std::pair<std::size_t, std::size_t>> e;
    for (std::size_t u = 0; u < n; ++u)
        for (std::size_t v = u + 1; v < n; ++v) e.emplace_back(u, v);
    return Graph(n, e);
}

inline Graph path_graph(std::size_t n)
{
    std::vector<std::pair<std::size_t, std::size_t>> e;
    for (std::size_t v = 1; v < n; ++v) e.emplace_back(v - 1, v);
    return Graph(n, e);
}

inline Graph cycle_graph(std::size_t n)
{
    if (n < 3) throw InvalidArgument("cycle needs at least 3 vertices");
    auto e = path_graph(n).edges();
    e.emplace_back(0, n - 1);
    return Graph(n, e);
}

/// n triangles sharing vertex 0; triangle i uses vertices 2i+1 and 2i+2.
inline Graph friendship_graph(std::size_t n)
{
    std::vector<std::pair<std::size_t, std::size_t>> e;
    for (std::size_t i = 0; i < n; ++i) {
        e.emplace_back(0, 2 * i + 1);
        e.emplace_back(0, 2 * i + 2);
        e.emplace_back(2 * i + 1, 2 * i + 2);
    }
    return Graph(2 * n + 1, e);
}

/// K_2n without the matching {2i, 2i+1}.
inline Graph cocktail_party_graph(std::size_t n)
{
    std::vector<std::pair<std::size_t, std::size_t>> e;
    for (std::size_t u = 0; u < 2 * n; ++u)
        for (std::size_t v = u + 1; v < 2 * n; ++v)
            if (v != u + 1 || u % 2 != 0) e.emplace_back(u, v);
    return Graph(2 * n, e);
}

/// n 4-cycles glued along the spine edge {0, 1}; page i adds 2i+2 ~ 0 and 2i+3 ~ 1.
inline Graph book_graph(std::size_t n)
{
    std::vector<std::pair<std::size_t, std::size_t>> e{{0, 1}};
    for (std::size_t i = 0; i < n; ++i) {
        const std::size_t a = 2 * i + 2;
        const std::size_t b = 2 * i + 3;
        e.emplace_back(0, a);
        e.emplace_back(1, b);
        e.emplace_back(a, b);
    }
    return Graph(2 * n + 2, e);
}

/// S_{k,n-k}: clique on 0..k-1, every other vertex adjacent to exactly the clique.
inline Graph k_star_graph(std::size_t k, std::size_t n)
{
    std::vector<std::pair<std::size_t, std::size_t>> e;
    for (std::size_t u = 0; u < k; ++u)
        for (std::size_t v = u + 1; v < n; ++v) e.emplace_back(u, v);
    return Graph(n, e);
}

/**
 * Stand-in for the H_n family, matched on the domination polynomial only:
 * H_2k is P_k o P_3 and H_2k+1 is (P_k o P_3) plus a disjoint P_3.
 */
inline Graph h_witness_graph(std::size_t n)
{
    const Graph base = corona(path_graph(n / 2), path_graph(3));
    return n % 2 == 0 ? base : disjoint_union(base, path_graph(3));
}

inline Graph build_family(const FamilySpec& spec)
{
    Graph::check_capacity(family_order(spec));
    const auto& p = spec.params;
    switch (spec.family) {
    case Family::complete:
        return complete_graph(p[0]);
    case Family::complete_bipartite:
        return join(Graph(p[0]), Graph(p[1]));
    case Family::path:
        return path_graph(p[0]);
    case Family::cycle:
        return cycle_graph(p[0]);
    case Family::friendship:
        return friendship_graph(p[0]);
    case Family::complement_friendship:
        return complement(friendship_graph(p[0]));
    case Family::cocktail_party:
        return cocktail_party_graph(p[0]);
    case Family::book:
        return book_graph(p[0]);
    case Family::k_star:
        return k_star_graph(p[0], p[1]);
    case Family::h_witness:
        return h_witness_graph(p[0]);
    }
    throw InvalidArgument("unknown family");
}

/// Parses "name:p1,p2" (name may be an alias). Parameters must be plain integers.
inline FamilySpec parse_family_spec(std::string_view text)
{
    const auto colon = text.find(':');
    if (colon == std::string_view::npos) throw ParseError(0, "family spec must look like name:p1[,p2]");
    const auto fam = family_from_name(text.substr(0, colon));
    if (!fam) throw ParseError(0, "unknown family '" + std::string(text.substr(0, colon)) + "'");
    FamilySpec spec{*fam, {}};
    std::string_view rest = text.substr(colon + 1);
    while (true) {
        const auto comma = rest.find(',');
        const auto tok = rest.substr(0, comma);
        std::size_t v = 0;
        auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
        if (tok.empty() || ec != std::errc{} || ptr != tok.data() + tok.size())
            throw ParseError(0, "bad family parameter '" + std::string(tok) + "'");
        spec.params.push_back(v);
        if (comma == std::string_view::npos) break;
        rest = rest.substr(comma + 1);
    }
    validate(spec);
    return spec;
}

} // namespace dompoly
