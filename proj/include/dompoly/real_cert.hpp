#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "errors.hpp"
#include "polynomial.hpp"

namespace dompoly {

/// An interval endpoint: -inf, +inf, or the rational num/den with den > 0.
struct RealBound {
    enum class Kind { neg_inf, finite, pos_inf };

    Kind kind = Kind::finite;
    BigInt num = 0;
    BigInt den = 1;

    static RealBound neg_infinity() { return {Kind::neg_inf, 0, 1}; }
    static RealBound pos_infinity() { return {Kind::pos_inf, 0, 1}; }

    static RealBound at(BigInt num, BigInt den = 1)
    {
        if (den == 0) throw InvalidArgument("RealBound: zero denominator");
        if (den < 0) {
            num = -num;
            den = -den;
        }
        return {Kind::finite, std::move(num), std::move(den)};
    }

    bool is_finite() const noexcept { return kind == Kind::finite; }
};

inline bool operator<(const RealBound& a, const RealBound& b)
{
    using K = RealBound::Kind;
    if (a.kind == K::pos_inf || b.kind == K::neg_inf) return false;
    if (a.kind == K::neg_inf || b.kind == K::pos_inf) return true;
    return a.num * b.den < b.num * a.den;
}

/// Sign (-1, 0, 1) of p at the bound; at +-inf the leading term decides.
inline int sign_at(const Poly& p, const RealBound& t)
{
    if (p.is_zero()) return 0;
    const int lead = p.leading() > 0 ? 1 : -1;
    switch (t.kind) {
    case RealBound::Kind::pos_inf:
        return lead;
    case RealBound::Kind::neg_inf:
        return p.degree() % 2 == 0 ? lead : -lead;
    case RealBound::Kind::finite:
        break;
    }
    // den^deg * p(num/den) = sum c_i num^i den^(deg-i), a positive multiple of p(t).
    BigInt acc = 0;
    BigInt den_pow = 1;
    auto c = p.coeffs();
    for (std::size_t k = c.size(); k-- > 0;) {
        acc = acc * t.num + c[k] * den_pow;
        den_pow *= t.den;
    }
    return acc > 0 ? 1 : (acc < 0 ? -1 : 0);
}

/**
 * Sturm chain p, p', -prem(p_{i-1}, p_i), ... with each remainder reduced to its primitive
 * part. Positive scaling keeps every sign pattern intact. The last element is
 * gcd(p, p') up to a positive factor, so it is constant exactly when p is squarefree.
 */
inline std::vector<Poly> sturm_sequence(const Poly& p)
{
    if (p.is_zero()) throw InvalidArgument("sturm_sequence: zero polynomial");
    std::vector<Poly> chain{p};
    Poly d = primitive_part(p.derivative());
    if (d.is_zero()) return chain;
    chain.push_back(std::move(d));
    while (true) {
        const auto& a = chain[chain.size() - 2];
        const auto& b = chain.back();
        Poly r = pseudo_divmod(a, b).second;
        if (r.is_zero()) break;
        chain.push_back(-primitive_part(r));
    }
    return chain;
}

/// Number of sign changes along the chain at t, zeros skipped.
inline std::size_t sign_variations(const std::vector<Poly>& chain, const RealBound& t)
{
    std::size_t changes = 0;
    int last = 0;
    for (const auto& q : chain) {
        const int s = sign_at(q, t);
        if (s == 0) continue;
        if (last != 0 && s != last) ++changes;
        last = s;
    }
    return changes;
}

/// Squarefree part of p (primitive, same real roots without multiplicity) and its Sturm chain.
inline std::pair<Poly, std::vector<Poly>> squarefree_sturm(const Poly& p)
{
    auto chain = sturm_sequence(p);
    if (chain.back().degree() <= 0) return {p, std::move(chain)};
    Poly sqf = exact_primitive_quotient(p, chain.back());
    auto sqf_chain = sturm_sequence(sqf);
    return {std::move(sqf), std::move(sqf_chain)};
}

/// Exact number of distinct real roots of p in the open interval (lo, hi).
inline std::size_t count_real_roots(const Poly& p, const RealBound& lo, const RealBound& hi)
{
    if (p.is_zero()) throw InvalidArgument("count_real_roots: zero polynomial");
    if (!(lo < hi)) throw InvalidArgument("count_real_roots: interval must satisfy left < right");
    if (p.degree() == 0) return 0;
    const auto [sqf, chain] = squarefree_sturm(p);
    const std::size_t vlo = sign_variations(chain, lo);
    const std::size_t vhi = sign_variations(chain, hi);
    // A root sitting on the right endpoint is counted by vlo - vhi; it is outside the open interval.
    const std::size_t on_hi = hi.is_finite() && sign_at(sqf, hi) == 0 ? 1 : 0;
    return vlo - vhi - on_hi;
}

inline std::size_t count_real_roots(const Poly& p)
{
    return count_real_roots(p, RealBound::neg_infinity(), RealBound::pos_infinity());
}

/// Sturm sign-variation counts of the deflated polynomial's chain at -inf, -1, 0, +inf.
struct SturmEvidence {
    std::size_t at_neg_inf = 0;
    std::size_t at_minus_one = 0;
    std::size_t at_zero = 0;
    std::size_t at_pos_inf = 0;

    friend bool operator==(const SturmEvidence&, const SturmEvidence&) = default;
};

/// Verdict on whether a domination polynomial has any nonzero real root.
struct CgCertificate {
    std::size_t gamma = 0;
    std::size_t nonzero_real_root_count = 0;
    bool in_cg = false;
    SturmEvidence evidence;
};

/**
 * Deflates the zero root, then counts the distinct real roots of what remains with an exact
 * Sturm chain. Coefficients must be nonnegative, which rules out positive roots; that is
 * checked against the chain as well.
 */
inline CgCertificate certify_cg(const Poly& p)
{
    if (p.is_zero()) throw InvalidArgument("certify_cg: zero polynomial");
    for (const auto& c : p.coeffs())
        if (c < 0) throw InvalidArgument("certify_cg: negative coefficient, not a domination polynomial");

    CgCertificate cert;
    cert.gamma = zero_root_multiplicity(p);
    const Poly q = deflate_zero(p);
    if (q.degree() > 0) {
        const auto chain = squarefree_sturm(q).second;
        cert.evidence.at_neg_inf = sign_variations(chain, RealBound::neg_infinity());
        cert.evidence.at_minus_one = sign_variations(chain, RealBound::at(-1));
        cert.evidence.at_zero = sign_variations(chain, RealBound::at(0));
        cert.evidence.at_pos_inf = sign_variations(chain, RealBound::pos_infinity());
    }
    const auto& ev = cert.evidence;
    if (ev.at_zero != ev.at_pos_inf)
        throw IntegrityError("certify_cg: Sturm chain reports a positive root for nonnegative coefficients");
    cert.nonzero_real_root_count = ev.at_neg_inf - ev.at_pos_inf;
    cert.in_cg = cert.nonzero_real_root_count == 0;
    return cert;
}

/// The number of dominating sets, D(G, 1), is odd for every graph.
inline bool check_oddness(const Poly& p) { return boost::multiprecision::bit_test(eval_int(p, BigInt(1)), 0); }

} // namespace dompoly
