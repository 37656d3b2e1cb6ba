#pragma once

#include <cstddef>
#include <optional>
#include <string>

#include "enumerator.hpp"
#include "errors.hpp"
#include "family.hpp"
#include "polynomial.hpp"

namespace dompoly {

namespace detail {

inline void require_order(const Poly& p, std::size_t order, const char* what)
{
    if (order < 1) throw InvalidArgument(std::string(what) + ": graph order must be at least 1");
    if (p.degree() != static_cast<long>(order))
        throw InvalidArgument(std::string(what) + ": polynomial degree " + std::to_string(p.degree()) +
                              " does not match graph order " + std::to_string(order));
}

inline void require_positive(std::size_t n, const char* what)
{
    if (n < 1) throw InvalidArgument(std::string(what) + ": n must be at least 1");
}

inline const Poly& one()
{
    static const Poly p = Poly::constant(1);
    return p;
}

} // namespace detail

/// D(G + H) = ((1+x)^n - 1)((1+x)^m - 1) + D(G) + D(H), where n = |G|, m = |H|.
inline Poly poly_join(const Poly& dg, std::size_t n, const Poly& dh, std::size_t m)
{
    detail::require_order(dg, n, "poly_join");
    detail::require_order(dh, m, "poly_join");
    return (binomial_power(n) - detail::one()) * (binomial_power(m) - detail::one()) + dg + dh;
}

/// D(G o H) = (x(1+x)^m + D(H))^n. Only the order n of G enters; its edges do not.
inline Poly poly_corona(std::size_t n, const Poly& dh, std::size_t m)
{
    detail::require_positive(n, "poly_corona");
    detail::require_order(dh, m, "poly_corona");
    return pow(binomial_power(m).shifted(1) + dh, n);
}

/// D(G u H) = D(G) D(H)
inline Poly poly_union(const Poly& dg, const Poly& dh) { return dg * dh; }

/// D(K_n) = (1+x)^n - 1: every nonempty subset dominates.
inline Poly poly_complete(std::size_t n)
{
    detail::require_positive(n, "poly_complete");
    return binomial_power(n) - detail::one();
}

/// D(F_n) = (2x + x^2)^n + x(1+x)^2n
inline Poly poly_friendship(std::size_t n)
{
    detail::require_positive(n, "poly_friendship");
    return pow(Poly{0, 2, 1}, n) + binomial_power(2 * n).shifted(1);
}

/// D(CP(n)) = (1+x)^2n - (1 + 2nx); no single vertex dominates CP(n).
inline Poly poly_cocktail(std::size_t n)
{
    detail::require_positive(n, "poly_cocktail");
    return binomial_power(2 * n) - Poly{1, BigInt(2 * n)};
}

/// D(F_n^c) = x D(CP(n)), since F_n^c = CP(n) u K_1.
inline Poly poly_complement_friendship(std::size_t n)
{
    detail::require_positive(n, "poly_complement_friendship");
    return poly_cocktail(n).shifted(1);
}

/// D(B_n) = (x^2 + 2x)^n (2x + 1) + x^2 (x+1)^2n - 2x^n
inline Poly poly_book(std::size_t n)
{
    detail::require_positive(n, "poly_book");
    return pow(Poly{0, 2, 1}, n) * Poly{1, 2} + binomial_power(2 * n).shifted(2) - Poly::monomial(n, 2);
}

/// |V(H_n)|: 2n for even n, 2n + 1 for odd n (the degree of D(H_n)).
inline std::size_t order_of_H(std::size_t n)
{
    detail::require_positive(n, "order_of_H");
    return n % 2 == 0 ? 2 * n : 2 * n + 1;
}

/// D(H_2k) = (x^4 + 4x^3 + 6x^2 + 2x)^k, D(H_2k+1) = (x^3 + 3x^2 + x)(x^4 + 4x^3 + 6x^2 + 2x)^k
inline Poly poly_H(std::size_t n)
{
    detail::require_positive(n, "poly_H");
    const Poly block = pow(Poly{0, 2, 6, 4, 1}, n / 2);
    return n % 2 == 0 ? block : Poly{0, 1, 3, 1} * block;
}

/// Base graphs of the iterated corona families whose corona polynomials are pure powers.
enum class CgCoronaBase { clique, k_star, book2 };

/**
 * x(1+x)^m + D(H) for H = K_m (m even), S_{k,n-k} (n odd) or B_2.
 *
 * Every corona G o H, (G o H) o H, ... has domination polynomial equal to a power of this
 * factor, so its real roots decide membership for the whole tower.
 * Parameters: clique -> {m}; k_star -> {k, n}; book2 -> {}.
 */
inline Poly cg_family_factor(CgCoronaBase kind, const std::vector<std::size_t>& params)
{
    switch (kind) {
    case CgCoronaBase::clique: {
        if (params.size() != 1) throw InvalidArgument("cg_family_factor(clique): expected {m}");
        const std::size_t m = params[0];
        if (m < 2 || m % 2 != 0) throw InvalidArgument("cg_family_factor(clique): clique order must be even and >= 2");
        return binomial_power(m).shifted(1) + poly_complete(m);
    }
    case CgCoronaBase::k_star: {
        if (params.size() != 2) throw InvalidArgument("cg_family_factor(k_star): expected {k, n}");
        const std::size_t k = params[0];
        const std::size_t n = params[1];
        if (n % 2 == 0) throw InvalidArgument("cg_family_factor(k_star): n must be odd");
        if (k < 1 || n < k + 1) throw InvalidArgument("cg_family_factor(k_star): need 1 <= k < n");
        return binomial_power(n).shifted(1) + domination_polynomial(k_star_graph(k, n));
    }
    case CgCoronaBase::book2:
        if (!params.empty()) throw InvalidArgument("cg_family_factor(book2): takes no parameters");
        return binomial_power(6).shifted(1) + domination_polynomial(book_graph(2));
    }
    throw InvalidArgument("cg_family_factor: unknown kind");
}

/// The closed-form polynomial of a family instance, or nullopt when none is available.
inline std::optional<Poly> closed_form(const FamilySpec& spec)
{
    validate(spec);
    const std::size_t p = spec.params[0];
    switch (spec.family) {
    case Family::complete:
        return poly_complete(p);
    case Family::friendship:
        return poly_friendship(p);
    case Family::complement_friendship:
        return poly_complement_friendship(p);
    case Family::cocktail_party:
        return poly_cocktail(p);
    case Family::book:
        return poly_book(p);
    case Family::h_witness:
        return poly_H(p);
    default:
        return std::nullopt;
    }
}

enum class PolySource { closed_form, enumerator };

/// Closed form when the family has one, otherwise exhaustive enumeration of the built graph.
inline Poly family_polynomial(const FamilySpec& spec, PolySource* used = nullptr)
{
    if (auto p = closed_form(spec)) {
        if (used) *used = PolySource::closed_form;
        return *p;
    }
    if (used) *used = PolySource::enumerator;
    return domination_polynomial(build_family(spec));
}

} // namespace dompoly
