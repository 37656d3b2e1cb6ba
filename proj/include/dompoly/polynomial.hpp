#pragma once

#include <algorithm>
#include <complex>
#include <cstddef>
#include <initializer_list>
#include <ostream>
#include <span>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "bigint.hpp"
#include "errors.hpp"

namespace dompoly {

/**
 * Dense univariate polynomial with coefficients in ascending degree order.
 *
 * The coefficient vector never carries trailing zeros, so the zero polynomial is the
 * empty vector and degree() is size()-1 otherwise. T must behave like an integer ring
 * element (BigInt in practice; built-in integers work for small tests).
 */
template <class T>
class BasicPoly {
public:
    BasicPoly() = default;

    BasicPoly(std::initializer_list<T> ascending) : coeffs_(ascending) { trim(); }

    explicit BasicPoly(std::vector<T> ascending) : coeffs_(std::move(ascending)) { trim(); }

    /// c * x^k
    static BasicPoly monomial(std::size_t k, T c = T(1))
    {
        std::vector<T> v(k + 1, T(0));
        v[k] = std::move(c);
        return BasicPoly(std::move(v));
    }

    static BasicPoly constant(T c) { return BasicPoly(std::vector<T>{std::move(c)}); }

    /// The polynomial x.
    static BasicPoly x() { return monomial(1); }

    bool is_zero() const noexcept { return coeffs_.empty(); }

    /// Degree of a nonzero polynomial; -1 for zero.
    long degree() const noexcept { return static_cast<long>(coeffs_.size()) - 1; }

    std::size_t size() const noexcept { return coeffs_.size(); }

    std::span<const T> coeffs() const noexcept { return coeffs_; }

    /// Coefficient of x^i, zero beyond the degree.
    T coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : T(0); }

    const T& leading() const
    {
        if (is_zero()) throw InvalidArgument("leading coefficient of the zero polynomial");
        return coeffs_.back();
    }

    BasicPoly& operator+=(const BasicPoly& o)
    {
        if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), T(0));
        for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
        trim();
        return *this;
    }

    BasicPoly& operator-=(const BasicPoly& o)
    {
        if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), T(0));
        for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
        trim();
        return *this;
    }

    BasicPoly& operator*=(const T& s)
    {
        if (s == 0) {
            coeffs_.clear();
            return *this;
        }
        for (auto& c : coeffs_) c *= s;
        return *this;
    }

    BasicPoly& operator*=(const BasicPoly& o)
    {
        *this = *this * o;
        return *this;
    }

    friend BasicPoly operator+(BasicPoly a, const BasicPoly& b) { return a += b; }
    friend BasicPoly operator-(BasicPoly a, const BasicPoly& b) { return a -= b; }
    friend BasicPoly operator*(BasicPoly a, const T& s) { return a *= s; }
    friend BasicPoly operator*(const T& s, BasicPoly a) { return a *= s; }

    friend BasicPoly operator-(BasicPoly a)
    {
        for (auto& c : a.coeffs_) c = -c;
        return a;
    }

    // Schoolbook product.
    friend BasicPoly operator*(const BasicPoly& a, const BasicPoly& b)
    {
        if (a.is_zero() || b.is_zero()) return {};
        std::vector<T> out(a.coeffs_.size() + b.coeffs_.size() - 1, T(0));
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
            if (a.coeffs_[i] == 0) continue;
            for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
        }
        return BasicPoly(std::move(out));
    }

    friend bool operator==(const BasicPoly& a, const BasicPoly& b) { return a.coeffs_ == b.coeffs_; }

    /// Multiplies by x^k.
    BasicPoly shifted(std::size_t k) const
    {
        if (is_zero()) return {};
        std::vector<T> v(k, T(0));
        v.insert(v.end(), coeffs_.begin(), coeffs_.end());
        return BasicPoly(std::move(v));
    }

    BasicPoly derivative() const
    {
        if (coeffs_.size() <= 1) return {};
        std::vector<T> v(coeffs_.size() - 1);
        for (std::size_t i = 1; i < coeffs_.size(); ++i) v[i - 1] = coeffs_[i] * T(static_cast<long>(i));
        return BasicPoly(std::move(v));
    }

    std::string to_string(const char* var = "x") const
    {
        if (is_zero()) return "0";
        std::ostringstream os;
        bool first = true;
        for (std::size_t k = coeffs_.size(); k-- > 0;) {
            const T& c = coeffs_[k];
            if (c == 0) continue;
            T mag = c < 0 ? T(-c) : c;
            if (first) {
                if (c < 0) os << '-';
            } else {
                os << (c < 0 ? " - " : " + ");
            }
            first = false;
            if (mag != 1 || k == 0) os << mag;
            if (k >= 1) os << var;
            if (k >= 2) os << '^' << k;
        }
        return os.str();
    }

    friend std::ostream& operator<<(std::ostream& os, const BasicPoly& p) { return os << p.to_string(); }

private:
    void trim()
    {
        while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
    }

    std::vector<T> coeffs_;
};

using Poly = BasicPoly<BigInt>;

/// p^k by repeated squaring; pow(p, 0) == 1 (including p == 0).
template <class T>
BasicPoly<T> pow(BasicPoly<T> base, unsigned long k)
{
    BasicPoly<T> result = BasicPoly<T>::constant(T(1));
    while (k > 0) {
        if (k & 1UL) result *= base;
        k >>= 1;
        if (k > 0) base *= base;
    }
    return result;
}

/// (1+x)^n with exact binomial coefficients.
inline Poly binomial_power(unsigned long n)
{
    std::vector<BigInt> c(n + 1);
    c[0] = 1;
    for (unsigned long k = 1; k <= n; ++k) c[k] = c[k - 1] * (n - k + 1) / k;
    return Poly(std::move(c));
}

/// Exact Horner evaluation at an integer point.
template <class T>
T eval_int(const BasicPoly<T>& p, const T& t)
{
    T acc(0);
    auto c = p.coeffs();
    for (std::size_t k = c.size(); k-- > 0;) acc = acc * t + c[k];
    return acc;
}

/// Horner evaluation in double precision; coefficients are rounded to the nearest double.
template <class T>
std::complex<double> eval_complex(const BasicPoly<T>& p, std::complex<double> z)
{
    std::complex<double> acc(0.0, 0.0);
    auto c = p.coeffs();
    for (std::size_t k = c.size(); k-- > 0;) acc = acc * z + static_cast<double>(c[k]);
    return acc;
}

inline std::complex<double> eval_complex(const Poly& p, std::complex<double> z)
{
    std::complex<double> acc(0.0, 0.0);
    auto c = p.coeffs();
    for (std::size_t k = c.size(); k-- > 0;) acc = acc * z + c[k].convert_to<double>();
    return acc;
}

/// Index of the lowest nonzero coefficient. For a domination polynomial this is the
/// domination number.
template <class T>
std::size_t zero_root_multiplicity(const BasicPoly<T>& p)
{
    if (p.is_zero()) throw InvalidArgument("zero_root_multiplicity: zero polynomial");
    auto c = p.coeffs();
    std::size_t m = 0;
    while (c[m] == 0) ++m;
    return m;
}

/// p / x^m where m = zero_root_multiplicity(p).
template <class T>
BasicPoly<T> deflate_zero(const BasicPoly<T>& p)
{
    const std::size_t m = zero_root_multiplicity(p);
    auto c = p.coeffs();
    return BasicPoly<T>(std::vector<T>(c.begin() + static_cast<std::ptrdiff_t>(m), c.end()));
}

/// Nonnegative gcd of the coefficients; 0 for the zero polynomial.
inline BigInt content(const Poly& p)
{
    BigInt g = 0;
    for (const auto& c : p.coeffs()) {
        g = boost::multiprecision::gcd(g, c);
        if (g == 1) break;
    }
    return boost::multiprecision::abs(g);
}

/// p divided by its (positive) content. Signs are preserved.
inline Poly primitive_part(const Poly& p)
{
    if (p.is_zero()) return p;
    const BigInt g = content(p);
    if (g == 1) return p;
    std::vector<BigInt> v(p.coeffs().begin(), p.coeffs().end());
    for (auto& c : v) c /= g;
    return Poly(std::move(v));
}

/**
 * Sign-preserving pseudo-division: |lc(b)|^(deg a - deg b + 1) * a = q * b + r with deg r < deg b.
 * Using the absolute value of lc(b) keeps the sign of the remainder meaningful for Sturm chains.
 */
inline std::pair<Poly, Poly> pseudo_divmod(const Poly& a, const Poly& b)
{
    if (b.is_zero()) throw InvalidArgument("pseudo_divmod: division by the zero polynomial");
    if (a.degree() < b.degree()) return {Poly{}, a};
    const long db = b.degree();
    const BigInt lc = b.leading();
    const BigInt alc = boost::multiprecision::abs(lc);
    const long delta = a.degree() - db;

    std::vector<BigInt> r(a.coeffs().begin(), a.coeffs().end());
    std::vector<BigInt> q(static_cast<std::size_t>(delta + 1), BigInt(0));
    auto bc = b.coeffs();
    for (long k = delta; k >= 0; --k) {
        const BigInt t = r[static_cast<std::size_t>(k + db)];
        // r <- |lc| * r - sign(lc) * t * x^k * b ; q <- |lc| * q + sign(lc) * t * x^k
        for (auto& c : r) c *= alc;
        for (auto& c : q) c *= alc;
        const BigInt s = lc < 0 ? BigInt(-t) : t;
        q[static_cast<std::size_t>(k)] += s;
        for (long j = 0; j <= db; ++j) r[static_cast<std::size_t>(k + j)] -= s * bc[static_cast<std::size_t>(j)];
        r.resize(static_cast<std::size_t>(k + db));
    }
    return {Poly(std::move(q)), Poly(std::move(r))};
}

/// Primitive quotient of a by b when b divides a over the rationals; throws otherwise.
inline Poly exact_primitive_quotient(const Poly& a, const Poly& b)
{
    auto [q, r] = pseudo_divmod(a, b);
    if (!r.is_zero()) throw IntegrityError("exact_primitive_quotient: nonzero remainder");
    return primitive_part(q);
}


/// gcd over the rationals, normalized to a primitive polynomial with positive leading coefficient.
inline Poly poly_gcd(Poly a, Poly b)
{
    if (a.degree() < b.degree()) std::swap(a, b);
    while (!b.is_zero()) {
        Poly r = primitive_part(pseudo_divmod(a, b).second);
        a = std::move(b);
        b = std::move(r);
    }
    a = primitive_part(a);
    if (!a.is_zero() && a.leading() < 0) a = -a;
    return a;
}

/**
 * p = c * prod f_k^k with each f_k squarefree and pairwise coprime. Returns the (f_k, k) with
 * deg f_k > 0, in increasing k; each f_k is primitive with positive leading coefficient.
 */
inline std::vector<std::pair<Poly, std::size_t>> squarefree_factors(const Poly& p)
{
    if (p.is_zero()) throw InvalidArgument("squarefree_factors: zero polynomial");
    // P_0 = p, P_k = gcd(P_{k-1}, P_{k-1}'); S_k = P_{k-1} / P_k collects the factors of
    // multiplicity >= k, so S_k / S_{k+1} is the part of multiplicity exactly k.
    std::vector<Poly> s;
    Poly prev = primitive_part(p);
    while (prev.degree() > 0) {
        Poly next = poly_gcd(prev, prev.derivative());
        s.push_back(exact_primitive_quotient(prev, next));
        prev = std::move(next);
    }
    std::vector<std::pair<Poly, std::size_t>> out;
    for (std::size_t k = 0; k < s.size(); ++k) {
        Poly f = k + 1 < s.size() ? exact_primitive_quotient(s[k], s[k + 1]) : s[k];
        if (f.leading() < 0) f = -f;
        if (f.degree() > 0) out.emplace_back(std::move(f), k + 1);
    }
    return out;
}

} // namespace dompoly
