#pragma once

#include <array>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "errors.hpp"
#include "graph.hpp"
#include "parallel.hpp"
#include "polynomial.hpp"

namespace dompoly {

/// Largest order accepted by the exhaustive enumerator (2^28 subsets).
inline constexpr std::size_t enumerator_cap = 28;

/// True iff N[s] = V(g).
inline bool is_dominating(const Graph& g, VertexSet s)
{
    if ((s & ~g.vertices()) != 0) throw InvalidArgument("is_dominating: set mentions a vertex outside the graph");
    const VertexSet all = g.vertices();
    VertexSet cover = 0;
    while (s != 0 && cover != all) {
        cover |= g.closed_neighborhood(static_cast<std::size_t>(std::countr_zero(s)));
        s &= s - 1;
    }
    return cover == all;
}

namespace detail {

inline void check_enumerator_cap(const Graph& g)
{
    if (g.order() > enumerator_cap)
        throw CapacityError("exhaustive enumeration is capped at " + std::to_string(enumerator_cap) +
                            " vertices (graph has " + std::to_string(g.order()) +
                            "); use a closed-form family polynomial instead");
}

/// N[S] for every subset S of the `width` vertices starting at `offset`.
inline std::vector<VertexSet> cover_table(const Graph& g, std::size_t offset, std::size_t width)
{
    std::vector<VertexSet> t(std::size_t{1} << width, 0);
    for (std::size_t s = 1; s < t.size(); ++s) {
        const auto low = static_cast<std::size_t>(std::countr_zero(s));
        t[s] = t[s & (s - 1)] | g.closed_neighborhood(offset + low);
    }
    return t;
}

} // namespace detail

/**
 * Counts dominating sets by size over all 2^n subsets.
 *
 * Vertices are split into a low half and a high half with precomputed N[S] tables, so
 * each subset costs one OR and one compare. The high-half index range is cut into chunks
 * processed in parallel; per-chunk counters are summed afterwards, so the result does not
 * depend on the thread count.
 */
inline Poly domination_polynomial(const Graph& g, unsigned threads = thread_count())
{
    detail::check_enumerator_cap(g);
    const std::size_t n = g.order();
    if (n == 0) return Poly::constant(1);

    const std::size_t low_bits = n / 2;
    const std::size_t high_bits = n - low_bits;
    const auto low = detail::cover_table(g, 0, low_bits);
    const auto high = detail::cover_table(g, low_bits, high_bits);
    const VertexSet all = g.vertices();

    using Counts = std::array<std::uint64_t, enumerator_cap + 1>;
    const std::size_t chunk_count = std::min<std::size_t>(high.size(), 64);
    const std::size_t chunk_len = (high.size() + chunk_count - 1) / chunk_count;
    std::vector<Counts> partial(chunk_count, Counts{});

    parallel_for(
        chunk_count,
        [&](std::size_t c) {
            Counts& counts = partial[c];
            const std::size_t begin = c * chunk_len;
            const std::size_t end = std::min(high.size(), begin + chunk_len);
            for (std::size_t h = begin; h < end; ++h) {
                const VertexSet hc = high[h];
                const auto hp = static_cast<std::size_t>(std::popcount(h));
                for (std::size_t l = 0; l < low.size(); ++l)
                    if ((hc | low[l]) == all) ++counts[hp + static_cast<std::size_t>(std::popcount(l))];
            }
        },
        threads);

    std::vector<BigInt> coeffs(n + 1, BigInt(0));
    for (const auto& counts : partial)
        for (std::size_t i = 0; i <= n; ++i) coeffs[i] += counts[i];
    return Poly(std::move(coeffs));
}

inline std::size_t domination_number(const Graph& g)
{
    detail::check_enumerator_cap(g);
    if (g.order() == 0) return 0;
    return zero_root_multiplicity(domination_polynomial(g));
}

} // namespace dompoly
