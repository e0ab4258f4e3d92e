#pragma once

/**
 * @file polynomial.hpp
 * @brief Univariate integer polynomials, Sturm counting and resultants.
 *
 * This is the exact engine behind algebraic cuts: sign evaluation at
 * rationals, primitive remainder sequences for gcd and squarefree parts,
 * Sturm sequences for root counting, and the two resultant constructions
 * that produce polynomials vanishing at sums and products of roots.
 */

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "dedekind/exact_arith.hpp"

namespace dedekind {

class IntPolynomial {
public:
    IntPolynomial() = default;

    /// Coefficients lowest degree first; trailing zeros are dropped.
    explicit IntPolynomial(std::vector<BigInt> coeffs) : c_(std::move(coeffs)) { trim(); }

    IntPolynomial(std::initializer_list<long> coeffs) {
        for (long v : coeffs) c_.emplace_back(v);
        trim();
    }

    static IntPolynomial constant(const BigInt& v) { return IntPolynomial(std::vector<BigInt>{v}); }

    static IntPolynomial monomial(const BigInt& coeff, std::size_t power) {
        std::vector<BigInt> c(power + 1, BigInt(0));
        c[power] = coeff;
        return IntPolynomial(std::move(c));
    }

    /// -1 for the zero polynomial.
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    const std::vector<BigInt>& coeffs() const { return c_; }

    BigInt coeff(std::size_t i) const { return i < c_.size() ? c_[i] : BigInt(0); }
    const BigInt& lead() const { return c_.back(); }

    /// Exact value at a rational point (Horner).
    BigRational eval(const BigRational& x) const {
        BigRational acc(0);
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + BigRational(*it);
        return acc;
    }

    /// Sign of p(n/d), computed on the homogenised integer form to avoid fractions.
    int sign_at(const BigRational& x) const {
        if (c_.empty()) return 0;
        const BigInt n = x.num();
        const BigInt d = x.den();
        BigInt acc = c_.back();
        BigInt dpow = 1;
        for (std::size_t i = c_.size() - 1; i-- > 0;) {
            dpow *= d;
            acc = acc * n + c_[i] * dpow;
        }
        return sgn(acc);
    }

    IntPolynomial derivative() const {
        std::vector<BigInt> d;
        for (std::size_t i = 1; i < c_.size(); ++i) d.push_back(c_[i] * static_cast<unsigned long>(i));
        return IntPolynomial(std::move(d));
    }

    /// gcd of the coefficients, non-negative.
    BigInt content() const {
        BigInt g = 0;
        for (const auto& v : c_) g = big_gcd(g, v);
        return g;
    }

    /// Divides out the content and makes the leading coefficient positive.
    IntPolynomial primitive_part() const {
        if (c_.empty()) return {};
        BigInt g = content();
        if (lead() < 0) g = -g;
        std::vector<BigInt> out;
        out.reserve(c_.size());
        for (const auto& v : c_) out.push_back(v / g);
        return IntPolynomial(std::move(out));
    }

    bool is_primitive() const { return !c_.empty() && content() == 1 && lead() > 0; }

    friend IntPolynomial operator+(const IntPolynomial& a, const IntPolynomial& b) {
        std::vector<BigInt> out(std::max(a.c_.size(), b.c_.size()), BigInt(0));
        for (std::size_t i = 0; i < a.c_.size(); ++i) out[i] += a.c_[i];
        for (std::size_t i = 0; i < b.c_.size(); ++i) out[i] += b.c_[i];
        return IntPolynomial(std::move(out));
    }

    friend IntPolynomial operator-(const IntPolynomial& a) {
        std::vector<BigInt> out;
        for (const auto& v : a.c_) out.push_back(-v);
        return IntPolynomial(std::move(out));
    }

    friend IntPolynomial operator-(const IntPolynomial& a, const IntPolynomial& b) { return a + (-b); }

    friend IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b) {
        if (a.is_zero() || b.is_zero()) return {};
        std::vector<BigInt> out(a.c_.size() + b.c_.size() - 1, BigInt(0));
        for (std::size_t i = 0; i < a.c_.size(); ++i)
            for (std::size_t j = 0; j < b.c_.size(); ++j) out[i + j] += a.c_[i] * b.c_[j];
        return IntPolynomial(std::move(out));
    }

    friend IntPolynomial operator*(const BigInt& k, const IntPolynomial& p) {
        std::vector<BigInt> out;
        for (const auto& v : p.c_) out.push_back(k * v);
        return IntPolynomial(std::move(out));
    }

    friend bool operator==(const IntPolynomial&, const IntPolynomial&) = default;

    /// p(-x).
    IntPolynomial reflect() const {
        std::vector<BigInt> out = c_;
        for (std::size_t i = 1; i < out.size(); i += 2) out[i] = -out[i];
        return IntPolynomial(std::move(out));
    }

    /// Drops factors of x: p(x) / x^k where x^k is the largest power dividing p.
    IntPolynomial strip_zero_roots() const {
        std::size_t k = 0;
        while (k < c_.size() && c_[k] == 0) ++k;
        return IntPolynomial(std::vector<BigInt>(c_.begin() + static_cast<std::ptrdiff_t>(k), c_.end()));
    }

    /**
     * Primitive integer polynomial proportional to p(alpha*x + beta).
     * alpha must be nonzero. Roots map r -> (r - beta) / alpha.
     */
    IntPolynomial compose_affine(const BigRational& alpha, const BigRational& beta) const {
        if (alpha.is_zero()) throw DomainError("compose_affine: zero scale");
        // Horner over rational coefficients: acc = acc*(alpha x + beta) + c_i
        std::vector<BigRational> acc;
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
            std::vector<BigRational> next(acc.size() + 1, BigRational(0));
            for (std::size_t i = 0; i < acc.size(); ++i) {
                next[i] += acc[i] * beta;
                next[i + 1] += acc[i] * alpha;
            }
            next[0] += BigRational(*it);
            acc = std::move(next);
        }
        return from_rational(acc);
    }

    /// Primitive integer polynomial proportional to a rational coefficient list.
    static IntPolynomial from_rational(const std::vector<BigRational>& coeffs) {
        BigInt l = 1;
        for (const auto& v : coeffs) l = big_lcm(l, v.den());
        std::vector<BigInt> out;
        out.reserve(coeffs.size());
        for (const auto& v : coeffs) out.push_back(v.num() * (l / v.den()));
        return IntPolynomial(std::move(out)).primitive_part();
    }

    /// "x^2 - 2" style rendering in variable `var`.
    std::string str(const std::string& var = "x") const {
        if (c_.empty()) return "0";
        std::string out;
        for (std::size_t k = c_.size(); k-- > 0;) {
            const BigInt& v = c_[k];
            if (v == 0) continue;
            BigInt mag = big_abs(v);
            if (out.empty()) {
                if (v < 0) out += "-";
            } else {
                out += v < 0 ? " - " : " + ";
            }
            bool unit = mag == 1 && k > 0;
            if (!unit) out += mag.get_str();
            if (k > 0) {
                if (!unit) out += "*";
                out += var;
                if (k > 1) out += "^" + std::to_string(k);
            }
        }
        return out;
    }

private:
    void trim() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }

    std::vector<BigInt> c_;
};

/**
 * Pseudo-remainder scaled by a positive multiple: r with
 * m * f = q * g + r, m > 0, deg r < deg g.
 */
inline IntPolynomial pseudo_remainder(const IntPolynomial& f, const IntPolynomial& g) {
    if (g.is_zero()) throw DivisionByZero();
    IntPolynomial r = f;
    const BigInt lg = g.lead();
    std::size_t steps = 0;
    while (!r.is_zero() && r.degree() >= g.degree()) {
        IntPolynomial t = IntPolynomial::monomial(r.lead(), static_cast<std::size_t>(r.degree() - g.degree()));
        r = lg * r - t * g;
        ++steps;
    }
    if (lg < 0 && steps % 2 == 1) r = -r;
    return r;
}

/// Primitive gcd with positive leading coefficient; gcd(0, 0) = 0.
inline IntPolynomial poly_gcd(IntPolynomial a, IntPolynomial b) {
    if (a.is_zero()) return b.primitive_part();
    if (b.is_zero()) return a.primitive_part();
    a = a.primitive_part();
    b = b.primitive_part();
    if (a.degree() < b.degree()) std::swap(a, b);
    while (!b.is_zero()) {
        IntPolynomial r = pseudo_remainder(a, b);
        a = std::move(b);
        b = r.primitive_part();
    }
    return a.primitive_part();
}

/// Exact quotient f / g; throws if g does not divide f over the rationals.
inline IntPolynomial poly_divide_exact(const IntPolynomial& f, const IntPolynomial& g) {
    if (g.is_zero()) throw DivisionByZero();
    if (f.degree() < g.degree()) {
        if (f.is_zero()) return {};
        throw DomainError("poly_divide_exact: not divisible");
    }
    std::vector<BigRational> r;
    for (const auto& v : f.coeffs()) r.emplace_back(v);
    std::vector<BigRational> q(static_cast<std::size_t>(f.degree() - g.degree() + 1), BigRational(0));
    const BigRational lg(g.lead());
    for (int k = f.degree() - g.degree(); k >= 0; --k) {
        BigRational t = r[static_cast<std::size_t>(k + g.degree())] / lg;
        q[static_cast<std::size_t>(k)] = t;
        for (int i = 0; i <= g.degree(); ++i)
            r[static_cast<std::size_t>(k + i)] -= t * BigRational(g.coeffs()[static_cast<std::size_t>(i)]);
    }
    for (const auto& v : r)
        if (!v.is_zero()) throw DomainError("poly_divide_exact: not divisible");
    std::vector<BigInt> out;
    for (const auto& v : q) {
        if (!v.is_integer()) return IntPolynomial::from_rational(q);
        out.push_back(v.num());
    }
    return IntPolynomial(std::move(out));
}

/// Primitive squarefree part p / gcd(p, p').
inline IntPolynomial squarefree_part(const IntPolynomial& p) {
    if (p.degree() <= 0) return p.primitive_part();
    IntPolynomial g = poly_gcd(p, p.derivative());
    return poly_divide_exact(p.primitive_part(), g).primitive_part();
}

inline bool is_squarefree(const IntPolynomial& p) {
    return p.degree() <= 0 || poly_gcd(p, p.derivative()).degree() == 0;
}

/// Sturm chain p, p', -rem(...), ... with positive rescaling at each step.
inline std::vector<IntPolynomial> sturm_sequence(const IntPolynomial& p) {
    std::vector<IntPolynomial> seq;
    if (p.is_zero()) return seq;
    seq.push_back(p);
    IntPolynomial d = p.derivative();
    if (d.is_zero()) return seq;
    seq.push_back(d);
    while (true) {
        IntPolynomial r = -pseudo_remainder(seq[seq.size() - 2], seq.back());
        if (r.is_zero()) break;
        // divide by the positive content only; the sign carries the Sturm information
        const BigInt c = r.content();
        std::vector<BigInt> scaled;
        for (const auto& v : r.coeffs()) scaled.push_back(v / c);
        seq.emplace_back(std::move(scaled));
    }
    return seq;
}

inline int sign_variations(const std::vector<IntPolynomial>& seq, const BigRational& x) {
    int count = 0;
    int prev = 0;
    for (const auto& s : seq) {
        int v = s.sign_at(x);
        if (v == 0) continue;
        if (prev != 0 && v != prev) ++count;
        prev = v;
    }
    return count;
}

namespace detail {

/// Distinct roots in (lo, hi]; valid for squarefree p even when p(lo) = 0.
inline int count_half_open(const std::vector<IntPolynomial>& seq, const BigRational& lo, const BigRational& hi) {
    return sign_variations(seq, lo) - sign_variations(seq, hi);
}

/// Distinct roots in the open interval (lo, hi).
inline int count_open(const std::vector<IntPolynomial>& seq, const BigRational& lo, const BigRational& hi) {
    if (seq.empty()) return 0;
    return count_half_open(seq, lo, hi) - (seq.front().sign_at(hi) == 0 ? 1 : 0);
}

}  // namespace detail

/**
 * Number of distinct real roots of p in (lo, hi].
 * Requires p nonzero, lo < hi and p(lo) != 0.
 */
inline int sturm_count(const IntPolynomial& p, const BigRational& lo, const BigRational& hi) {
    if (p.is_zero()) throw DomainError("sturm_count: zero polynomial");
    if (!(lo < hi)) throw DomainError("sturm_count: empty interval");
    if (p.sign_at(lo) == 0) throw DomainError("sturm_count: polynomial vanishes at the lower endpoint");
    return detail::count_half_open(sturm_sequence(p), lo, hi);
}

/// Determinant of a square integer matrix by fraction-free (Bareiss) elimination.
inline BigInt determinant(std::vector<std::vector<BigInt>> m) {
    const std::size_t n = m.size();
    if (n == 0) return 1;
    BigInt prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k] == 0) {
            std::size_t swap_row = k + 1;
            while (swap_row < n && m[swap_row][k] == 0) ++swap_row;
            if (swap_row == n) return 0;
            std::swap(m[k], m[swap_row]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
            }
            m[i][k] = 0;
        }
        prev = m[k][k];
    }
    return sign * m[n - 1][n - 1];
}

/// Resultant of f and g, with g taken at formal degree `g_degree` (leading zeros allowed).
inline BigInt resultant(const IntPolynomial& f, const std::vector<BigInt>& g, std::size_t g_degree) {
    const std::size_t m = static_cast<std::size_t>(f.degree());
    const std::size_t n = g_degree;
    const std::size_t size = m + n;
    std::vector<std::vector<BigInt>> s(size, std::vector<BigInt>(size, BigInt(0)));
    // rows hold coefficients highest degree first
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t i = 0; i <= m; ++i) s[r][r + i] = f.coeff(m - i);
    for (std::size_t r = 0; r < m; ++r)
        for (std::size_t i = 0; i <= n; ++i) s[n + r][r + i] = (n - i) < g.size() ? g[n - i] : BigInt(0);
    return determinant(std::move(s));
}

/// Polynomial through (k, values[k]) for k = 0..n-1; must have integer coefficients.
inline IntPolynomial interpolate_integer_points(const std::vector<BigInt>& values) {
    const std::size_t n = values.size();
    // Newton divided differences on nodes 0..n-1
    std::vector<BigRational> dd;
    for (const auto& v : values) dd.emplace_back(v);
    for (std::size_t level = 1; level < n; ++level)
        for (std::size_t i = n - 1; i >= level; --i) {
            dd[i] = (dd[i] - dd[i - 1]) / BigRational(static_cast<long>(level));
            if (i == level) break;
        }
    // expand: p = dd[n-1]; p = p*(x - k) + dd[k]
    std::vector<BigRational> poly{dd[n - 1]};
    for (std::size_t k = n - 1; k-- > 0;) {
        std::vector<BigRational> next(poly.size() + 1, BigRational(0));
        for (std::size_t i = 0; i < poly.size(); ++i) {
            next[i + 1] += poly[i];
            next[i] -= poly[i] * BigRational(static_cast<long>(k));
        }
        next[0] += dd[k];
        poly = std::move(next);
    }
    std::vector<BigInt> out;
    for (const auto& v : poly) {
        if (!v.is_integer()) throw DomainError("interpolation produced a non-integer coefficient");
        out.push_back(v.num());
    }
    return IntPolynomial(std::move(out));
}

/// Coefficients of g(a*y + b) in y for integer a, b.
inline std::vector<BigInt> substitute_linear(const IntPolynomial& g, const BigInt& a, const BigInt& b) {
    std::vector<BigInt> acc;
    for (auto it = g.coeffs().rbegin(); it != g.coeffs().rend(); ++it) {
        std::vector<BigInt> next(acc.size() + 1, BigInt(0));
        for (std::size_t i = 0; i < acc.size(); ++i) {
            next[i] += acc[i] * b;
            next[i + 1] += acc[i] * a;
        }
        next[0] += *it;
        acc = std::move(next);
    }
    return acc;
}

/// Res_y(f(y), g(x - y)): vanishes at every sum of a root of f and a root of g.
inline IntPolynomial composed_sum(const IntPolynomial& f, const IntPolynomial& g) {
    const std::size_t m = static_cast<std::size_t>(f.degree());
    const std::size_t n = static_cast<std::size_t>(g.degree());
    std::vector<BigInt> values;
    for (std::size_t k = 0; k <= m * n; ++k)
        values.push_back(resultant(f, substitute_linear(g, BigInt(-1), BigInt(static_cast<unsigned long>(k))), n));
    return interpolate_integer_points(values);
}

/// Res_y(f(y), y^n g(x / y)): vanishes at every product of a root of f and a root of g.
inline IntPolynomial composed_product(const IntPolynomial& f, const IntPolynomial& g) {
    const std::size_t m = static_cast<std::size_t>(f.degree());
    const std::size_t n = static_cast<std::size_t>(g.degree());
    std::vector<BigInt> values;
    for (std::size_t k = 0; k <= m * n; ++k) {
        std::vector<BigInt> h(n + 1, BigInt(0));
        BigInt kp = 1;
        for (std::size_t i = 0; i <= n; ++i) {
            h[n - i] = g.coeff(i) * kp;
            kp *= static_cast<unsigned long>(k);
        }
        values.push_back(resultant(f, h, n));
    }
    return interpolate_integer_points(values);
}

}  // namespace dedekind
