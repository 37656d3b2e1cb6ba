#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <limits>
#include <numbers>
#include <numeric>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_bin_float.hpp>

#include "bigint.hpp"
#include "closed_forms.hpp"
#include "errors.hpp"
#include "polynomial.hpp"

namespace dompoly {

struct Root {
    std::complex<double> z;
    /// Backward error |q(u)| / (||q||_1 * max(1, |u|)^deg) where q is the squarefree factor
    /// containing z, shifted to its root centroid and deflated, and u = z - shift.
    double residual = 0.0;
    /// Radius of an inclusion disc around z (deg times the Weierstrass correction).
    double inclusion_radius = 0.0;
};

/// Zero root multiplicity (exact) plus numerically located nonzero roots.
struct RootSet {
    std::size_t zero_multiplicity = 0;
    std::vector<Root> roots;
    double tolerance = 0.0;
    /// Each squarefree factor f is solved as f(x + shift) with shift its root centroid rounded
    /// to an integer. These two fields describe the factor of highest degree.
    long shift = 0;
    /// Coefficients of that shifted factor were divided by 2^scale_exponent before
    /// conversion to double.
    long scale_exponent = 0;
    std::size_t iterations = 0;
};

class NonConvergenceError : public Error {
public:
    NonConvergenceError(const std::string& what, RootSet best) : Error(what), best_(std::move(best)) {}

    /// The iterate reached when the iteration cap was hit.
    const RootSet& best() const noexcept { return best_; }

private:
    RootSet best_;
};

namespace detail {

using cplx = std::complex<double>;

/// Scaled double coefficients of a polynomial with no zero root.
struct ScaledPoly {
    std::vector<double> a;
    double norm1 = 0.0;
    long scale_exponent = 0;

    std::size_t degree() const { return a.size() - 1; }
};

/// Nearest integer to the root centroid -a_{d-1} / (d a_d).
inline long centroid_shift(const Poly& q)
{
    const BigInt num = -q.coeff(static_cast<std::size_t>(q.degree() - 1));
    const BigInt den = BigInt(q.degree()) * q.leading();
    long e1 = 0, e2 = 0;
    const double m1 = frexp_big(num, e1);
    const double m2 = frexp_big(den, e2);
    const double c = std::ldexp(m1 / m2, static_cast<int>(e1 - e2));
    if (!std::isfinite(c) || std::abs(c) > 1e15) return 0;
    return static_cast<long>(std::llround(c));
}

/// q(x + c), exact.
inline Poly taylor_shift(const Poly& q, long c)
{
    if (c == 0 || q.degree() < 1) return q;
    std::vector<BigInt> b(q.coeffs().begin(), q.coeffs().end());
    const std::size_t d = b.size() - 1;
    const BigInt cc = c;
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = d; j-- > i;) b[j] += cc * b[j + 1];
    return Poly(std::move(b));
}

inline ScaledPoly scale_to_double(const Poly& q)
{
    ScaledPoly s;
    long emax = std::numeric_limits<long>::min();
    for (const auto& c : q.coeffs()) {
        if (c == 0) continue;
        long e = 0;
        frexp_big(c, e);
        emax = std::max(emax, e);
    }
    s.scale_exponent = emax;
    s.a.reserve(q.size());
    for (const auto& c : q.coeffs()) {
        s.a.push_back(to_scaled_double(c, emax));
        s.norm1 += std::abs(s.a.back());
    }
    return s;
}

/**
 * Value data at z. For |z| <= 1, value is p(z); beyond the unit disc everything is taken
 * from the reversed polynomial in w = 1/z, and value is p(z)/z^deg. Either way newton is
 * p(z)/p'(z) and bound is a running rounding-error bound on value.
 */
struct Eval {
    cplx value;
    cplx newton;
    double bound = 0.0;
    bool derivative_vanishes = false;
};

inline Eval evaluate(const ScaledPoly& p, cplx z)
{
    constexpr double eps = std::numeric_limits<double>::epsilon();
    const std::size_t d = p.degree();
    Eval e;
    if (std::abs(z) <= 1.0) {
        cplx v = p.a[d], dv = 0.0;
        double b = std::abs(p.a[d]);
        const double az = std::abs(z);
        for (std::size_t k = d; k-- > 0;) {
            dv = dv * z + v;
            v = v * z + p.a[k];
            b = b * az + std::abs(p.a[k]);
        }
        e.value = v;
        e.bound = 4.0 * static_cast<double>(d + 1) * eps * b;
        e.derivative_vanishes = dv == cplx(0.0);
        if (!e.derivative_vanishes) e.newton = v / dv;
        return e;
    }
    // q(w) = sum a_k w^(d-k); p'(z)/p(z) = w (d - w q'(w)/q(w)).
    const cplx w = 1.0 / z;
    const double aw = std::abs(w);
    cplx v = p.a[0], dv = 0.0;
    double b = std::abs(p.a[0]);
    for (std::size_t k = 1; k <= d; ++k) {
        dv = dv * w + v;
        v = v * w + p.a[k];
        b = b * aw + std::abs(p.a[k]);
    }
    e.value = v;
    e.bound = 4.0 * static_cast<double>(d + 1) * eps * b;
    if (v == cplx(0.0)) {
        e.newton = 0.0;
        return e;
    }
    const cplx ratio = w * (static_cast<double>(d) - w * dv / v);
    e.derivative_vanishes = ratio == cplx(0.0);
    if (!e.derivative_vanishes) e.newton = 1.0 / ratio;
    return e;
}

/**
 * Starting points from the upper convex hull of (k, log|a_k|): each hull edge from i to j
 * places j - i points on the circle whose radius balances the two end coefficients. These
 * radii track the root moduli, which a single Cauchy-bound circle does not for large degree.
 */
inline std::vector<cplx> initial_guesses(const ScaledPoly& p)
{
    constexpr double offset = 0.4;
    const std::size_t d = p.degree();
    std::vector<std::size_t> hull;
    std::vector<double> lg(d + 1, -std::numeric_limits<double>::infinity());
    for (std::size_t k = 0; k <= d; ++k)
        if (p.a[k] != 0.0) lg[k] = std::log(std::abs(p.a[k]));
    for (std::size_t k = 0; k <= d; ++k) {
        if (p.a[k] == 0.0) continue;
        while (hull.size() >= 2) {
            const std::size_t i = hull[hull.size() - 2];
            const std::size_t j = hull.back();
            // Drop j when it lies on or below the segment i--k.
            const double cross = (lg[j] - lg[i]) * static_cast<double>(k - i) - (lg[k] - lg[i]) * static_cast<double>(j - i);
            if (cross <= 0.0)
                hull.pop_back();
            else
                break;
        }
        hull.push_back(k);
    }
    std::vector<cplx> z;
    z.reserve(d);
    for (std::size_t h = 0; h + 1 < hull.size(); ++h) {
        const std::size_t i = hull[h];
        const std::size_t j = hull[h + 1];
        const std::size_t count = j - i;
        const double radius = std::exp((lg[i] - lg[j]) / static_cast<double>(count));
        const double shift = 2.0 * std::numbers::pi * static_cast<double>(i) / static_cast<double>(d);
        for (std::size_t t = 0; t < count; ++t) {
            const double angle = 2.0 * std::numbers::pi * static_cast<double>(t) / static_cast<double>(count) + offset + shift;
            z.push_back(std::polar(radius, angle));
        }
    }
    return z;
}

/// log |W_i|, the Weierstrass correction p(z_i) / (a_d prod_{j != i} (z_i - z_j)).
inline double log_weierstrass(const ScaledPoly& p, const std::vector<cplx>& z, std::size_t i)
{
    const Eval e = evaluate(p, z[i]);
    const double av = std::abs(e.value);
    if (av == 0.0) return -std::numeric_limits<double>::infinity();
    const std::size_t d = p.degree();
    double lw = std::log(av) - std::log(std::abs(p.a[d]));
    if (std::abs(z[i]) > 1.0) lw += static_cast<double>(d) * std::log(std::abs(z[i]));
    for (std::size_t j = 0; j < z.size(); ++j) {
        if (j == i) continue;
        const double dist = std::abs(z[i] - z[j]);
        if (dist == 0.0) return std::numeric_limits<double>::infinity();
        lw -= std::log(dist);
    }
    return lw;
}

/// Pairs each root with its conjugate partner and snaps unpaired roots onto the real axis.
inline void enforce_conjugate_symmetry(std::vector<cplx>& z)
{
    const std::size_t n = z.size();
    std::vector<bool> done(n, false);
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return std::abs(z[a].imag()) > std::abs(z[b].imag());
    });
    for (std::size_t i : order) {
        if (done[i]) continue;
        done[i] = true;
        if (z[i].imag() == 0.0) continue;
        // Partner: the root closest to conj(z_i) on the other side of the axis, accepted only
        // if it is closer than z_i's own mirror image.
        std::size_t best = n;
        double best_dist = 2.0 * std::abs(z[i].imag());
        for (std::size_t j = 0; j < n; ++j) {
            if (done[j] || (z[j].imag() > 0.0) == (z[i].imag() > 0.0)) continue;
            const double dist = std::abs(std::conj(z[i]) - z[j]);
            if (dist < best_dist) {
                best_dist = dist;
                best = j;
            }
        }
        if (best == n) {
            z[i] = cplx(z[i].real(), 0.0);
            continue;
        }
        done[best] = true;
        const cplx upper = z[i].imag() > 0.0 ? z[i] : z[best];
        const cplx lower = z[i].imag() > 0.0 ? z[best] : z[i];
        const cplx mean = 0.5 * (upper + std::conj(lower));
        z[i] = z[i].imag() > 0.0 ? mean : std::conj(mean);
        z[best] = std::conj(z[i]);
    }
}

using Quad = boost::multiprecision::cpp_bin_float_quad;

struct QuadComplex {
    Quad re = 0, im = 0;

    friend QuadComplex operator+(const QuadComplex& a, const QuadComplex& b) { return {a.re + b.re, a.im + b.im}; }
    friend QuadComplex operator-(const QuadComplex& a, const QuadComplex& b) { return {a.re - b.re, a.im - b.im}; }
    friend QuadComplex operator*(const QuadComplex& a, const QuadComplex& b)
    {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
    friend QuadComplex operator/(const QuadComplex& a, const QuadComplex& b)
    {
        const Quad den = b.re * b.re + b.im * b.im;
        return {(a.re * b.re + a.im * b.im) / den, (a.im * b.re - a.re * b.im) / den};
    }
    Quad norm() const { return re * re + im * im; }
    bool is_zero() const { return re == 0 && im == 0; }
};

/// p(z) and p'(z) by Horner in 113-bit precision.
inline std::pair<QuadComplex, QuadComplex> horner_quad(const std::vector<Quad>& a, const QuadComplex& z)
{
    QuadComplex v{a.back(), 0}, dv;
    for (std::size_t k = a.size() - 1; k-- > 0;) {
        dv = dv * z + v;
        v = v * z;
        v.re += a[k];
    }
    return {v, dv};
}

/**
 * Aberth sweeps in quad precision against the exact coefficients of q. Double-precision
 * iteration stops once |q(z)| reaches rounding level, which for tightly clustered roots can
 * still leave a large forward error; a few extended sweeps recover full double accuracy.
 * A root is kept at its double value if refinement does not lower |q(z)|.
 */
inline void refine_extended(const Poly& q, std::vector<cplx>& z, std::size_t max_sweeps = 8)
{
    const std::size_t d = z.size();
    std::vector<Quad> a;
    a.reserve(q.size());
    for (const auto& c : q.coeffs()) a.emplace_back(c);
    std::vector<QuadComplex> w(d);
    std::vector<Quad> start_norm(d);
    for (std::size_t i = 0; i < d; ++i) {
        w[i] = {Quad(z[i].real()), Quad(z[i].imag())};
        start_norm[i] = horner_quad(a, w[i]).first.norm();
    }
    const Quad stop = Quad(1e-60);
    for (std::size_t sweep = 0; sweep < max_sweeps; ++sweep) {
        Quad worst = 0;
        for (std::size_t i = 0; i < d; ++i) {
            const auto [v, dv] = horner_quad(a, w[i]);
            if (v.is_zero() || dv.is_zero()) continue;
            const QuadComplex newton = v / dv;
            QuadComplex sum;
            for (std::size_t j = 0; j < d; ++j) {
                if (j == i) continue;
                const QuadComplex diff = w[i] - w[j];
                if (!diff.is_zero()) sum = sum + QuadComplex{1, 0} / diff;
            }
            const QuadComplex den = QuadComplex{1, 0} - newton * sum;
            if (den.is_zero()) continue;
            const QuadComplex step = newton / den;
            w[i] = w[i] - step;
            const Quad scale = std::max(Quad(1), w[i].norm());
            worst = std::max(worst, step.norm() / scale);
        }
        if (worst < stop) break;
    }
    for (std::size_t i = 0; i < d; ++i) {
        const auto value = horner_quad(a, w[i]).first.norm();
        if (value <= start_norm[i] && boost::multiprecision::isfinite(w[i].re) && boost::multiprecision::isfinite(w[i].im))
            z[i] = cplx(w[i].re.convert_to<double>(), w[i].im.convert_to<double>());
    }
}

} // namespace detail

namespace detail {

struct FactorRoots {
    std::vector<Root> roots;
    long shift = 0;
    long scale_exponent = 0;
    std::size_t iterations = 0;
    std::size_t unconverged = 0;
};

/// Roots of a squarefree polynomial with q(0) != 0.
inline FactorRoots solve_factor(const Poly& q, double tol, std::size_t max_iter)
{
    FactorRoots out;
    // Centering on the roots keeps the monomial basis well conditioned for families such as
    // (1+x)^m - 1 - mx, whose roots crowd a circle around -1.
    out.shift = centroid_shift(q);
    const Poly shifted = taylor_shift(q, out.shift);
    // A root sitting exactly on the shift point is known exactly.
    const std::size_t exact_at_shift = zero_root_multiplicity(shifted);
    for (std::size_t k = 0; k < exact_at_shift; ++k) out.roots.push_back({cplx(static_cast<double>(out.shift), 0.0), 0.0, 0.0});
    const Poly work = deflate_zero(shifted);
    if (work.degree() == 0) return out;

    const auto sp = scale_to_double(work);
    out.scale_exponent = sp.scale_exponent;
    const std::size_t d = sp.degree();
    std::vector<cplx> z = initial_guesses(sp);
    if (z.size() != d) throw IntegrityError("find_roots: initial guess count does not match the degree");
    std::vector<bool> converged(d, false);
    std::size_t remaining = d;

    std::size_t iter = 0;
    for (; iter < max_iter && remaining > 0; ++iter) {
        for (std::size_t i = 0; i < d; ++i) {
            if (converged[i]) continue;
            const auto e = evaluate(sp, z[i]);
            if (std::abs(e.value) <= e.bound) {
                converged[i] = true;
                --remaining;
                continue;
            }
            if (e.derivative_vanishes) {
                z[i] += std::polar(1e-8 * (1.0 + std::abs(z[i])), 0.4);
                continue;
            }
            cplx sum = 0.0;
            for (std::size_t j = 0; j < d; ++j)
                if (j != i) sum += 1.0 / (z[i] - z[j]);
            const cplx step = e.newton / (1.0 - e.newton * sum);
            z[i] -= step;
            if (std::abs(step) <= tol * std::max(1.0, std::abs(z[i]))) {
                converged[i] = true;
                --remaining;
            }
        }
    }
    out.iterations = iter;
    out.unconverged = remaining;

    if (remaining == 0) refine_extended(work, z);
    enforce_conjugate_symmetry(z);
    out.roots.reserve(exact_at_shift + d);
    for (std::size_t i = 0; i < d; ++i) {
        const auto e = evaluate(sp, z[i]);
        const double lw = log_weierstrass(sp, z, i);
        out.roots.push_back({z[i] + static_cast<double>(out.shift), std::abs(e.value) / sp.norm1,
                             static_cast<double>(d) * std::exp(lw)});
    }
    return out;
}

} // namespace detail

/**
 * All roots of p. The zero root is split off exactly and the rest is factored exactly into
 * squarefree parts, so multiplicities are exact and every numerical solve sees simple roots.
 * Each part is Taylor-shifted (exactly, by an integer) to its root centroid and solved with
 * Aberth-Ehrlich simultaneous iteration (Gauss-Seidel updates) in double precision, then
 * polished with a few quad-precision sweeps on the exact coefficients. A root of multiplicity
 * k appears k times.
 *
 * A root stops moving once its correction falls below tol * max(1, |z|) or its value is
 * inside the rounding-error bound of the evaluation.
 */
inline RootSet find_roots(const Poly& p, double tol = 1e-12, std::size_t max_iter = 1000)
{
    if (p.degree() < 1) throw InvalidArgument("find_roots: polynomial degree must be at least 1");
    if (!(tol >= 1e-14)) throw InvalidArgument("find_roots: tolerance must be >= 1e-14");
    if (max_iter == 0) throw InvalidArgument("find_roots: max_iter must be positive");

    RootSet rs;
    rs.tolerance = tol;
    rs.zero_multiplicity = zero_root_multiplicity(p);
    const Poly q = deflate_zero(p);
    if (q.degree() == 0) return rs;

    std::size_t unconverged = 0;
    long widest = -1;
    for (const auto& [factor, multiplicity] : squarefree_factors(q)) {
        auto part = detail::solve_factor(factor, tol, max_iter);
        unconverged += part.unconverged * multiplicity;
        rs.iterations = std::max(rs.iterations, part.iterations);
        if (factor.degree() > widest) {
            widest = factor.degree();
            rs.shift = part.shift;
            rs.scale_exponent = part.scale_exponent;
        }
        for (const auto& r : part.roots)
            for (std::size_t k = 0; k < multiplicity; ++k) rs.roots.push_back(r);
    }
    if (unconverged > 0)
        throw NonConvergenceError("find_roots: " + std::to_string(unconverged) + " of " + std::to_string(q.degree()) +
                                      " roots did not converge in " + std::to_string(max_iter) + " iterations",
                                  std::move(rs));
    return rs;
}

/// A group of numerically coincident roots.
struct RootCluster {
    std::complex<double> center;
    std::size_t multiplicity = 0;
    /// Largest distance from center to a member.
    double spread = 0.0;
};

/**
 * Groups roots whose inclusion discs overlap or which lie within `radius` of each other.
 * Clusters are ordered by (real, imag) of their centers.
 */
inline std::vector<RootCluster> cluster_roots(const RootSet& rs, double radius = 1e-6)
{
    const std::size_t n = rs.roots.size();
    std::vector<std::size_t> parent(n);
    std::iota(parent.begin(), parent.end(), std::size_t{0});
    auto find = [&](std::size_t i) {
        while (parent[i] != i) i = parent[i] = parent[parent[i]];
        return i;
    };
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            const auto& a = rs.roots[i];
            const auto& b = rs.roots[j];
            const double reach = std::max(radius, a.inclusion_radius + b.inclusion_radius);
            if (std::abs(a.z - b.z) <= reach) parent[find(i)] = find(j);
        }
    std::vector<RootCluster> out;
    std::vector<std::size_t> slot(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        const std::size_t r = find(i);
        if (slot[r] == n) {
            slot[r] = out.size();
            out.push_back({});
        }
        auto& c = out[slot[r]];
        c.center += rs.roots[i].z;
        ++c.multiplicity;
    }
    for (auto& c : out) c.center /= static_cast<double>(c.multiplicity);
    for (std::size_t i = 0; i < n; ++i) {
        auto& c = out[slot[find(i)]];
        c.spread = std::max(c.spread, std::abs(rs.roots[i].z - c.center));
    }
    std::sort(out.begin(), out.end(), [](const RootCluster& a, const RootCluster& b) {
        return a.center.real() != b.center.real() ? a.center.real() < b.center.real() : a.center.imag() < b.center.imag();
    });
    return out;
}

/// Distinct real roots: clusters whose center lies within `imag_tol` of the real axis.
inline std::size_t count_numeric_real_roots(const RootSet& rs, double imag_tol = 1e-9, double radius = 1e-6)
{
    std::size_t count = 0;
    for (const auto& c : cluster_roots(rs, radius))
        if (std::abs(c.center.imag()) < imag_tol) ++count;
    return count;
}

struct CircleDeviation {
    double max_dev = 0.0;
    double mean_dev = 0.0;
};

/// max and mean of ||z - center| - radius| over the nonzero roots.
inline CircleDeviation circle_deviation(const RootSet& rs, std::complex<double> center, double radius)
{
    if (rs.roots.empty()) throw InvalidArgument("circle_deviation: no nonzero roots");
    if (!(radius > 0.0)) throw InvalidArgument("circle_deviation: radius must be positive");
    CircleDeviation out;
    double sum = 0.0;
    for (const auto& r : rs.roots) {
        const double dev = std::abs(std::abs(r.z - center) - radius);
        out.max_dev = std::max(out.max_dev, dev);
        sum += dev;
    }
    out.mean_dev = sum / static_cast<double>(rs.roots.size());
    return out;
}

inline constexpr double real_part_guard = 1e-9;

struct RealPartReport {
    std::size_t positive = 0; ///< re > guard
    std::size_t boundary = 0; ///< |re| <= guard
};

inline RealPartReport real_part_report(const RootSet& rs)
{
    RealPartReport rep;
    for (const auto& r : rs.roots) {
        if (r.z.real() > real_part_guard)
            ++rep.positive;
        else if (std::abs(r.z.real()) <= real_part_guard)
            ++rep.boundary;
    }
    return rep;
}

inline bool has_positive_real_part(const RootSet& rs) { return real_part_report(rs).positive > 0; }

/// D(F_n^c, x) written as alpha1 lambda1^n + alpha2 lambda2^n.
struct BkwForm {
    Poly alpha1;
    Poly lambda1;
    Poly alpha2;
    Poly lambda2;
    std::size_t n = 0;
};

inline BkwForm bkw_form(std::size_t n)
{
    if (n < 1) throw InvalidArgument("bkw_form: n must be at least 1");
    return {Poly::x(), Poly{1, 2, 1}, -Poly{0, 1, BigInt(2 * n)}, Poly::constant(1), n};
}

inline Poly bkw_reconstruct(const BkwForm& b) { return b.alpha1 * pow(b.lambda1, b.n) + b.alpha2 * pow(b.lambda2, b.n); }

} // namespace dompoly
