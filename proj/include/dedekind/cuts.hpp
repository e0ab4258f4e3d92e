#pragma once

/**
 * @file cuts.hpp
 * @brief Cuts of the rationals, decided exactly.
 *
 * A cut is either rational or algebraic. An algebraic cut carries a
 * squarefree primitive integer polynomial with positive leading coefficient
 * and an open rational interval (lo, hi) holding exactly one of its roots;
 * the lower class is every rational below that root.
 *
 * For a rational cut q the lower class is {x : x < q}: the defining
 * rational sits in the upper class.
 *
 * Normalisation invariants of the algebraic variant:
 *   - p(lo) != 0 and p(hi) != 0;
 *   - hi - lo <= 1 / lead(p), which leaves room for at most one rational
 *     with denominator dividing lead(p); that candidate is tested, so a
 *     rational value is never kept as an algebraic cut;
 *   - p has no factor x.
 */

#include <compare>
#include <span>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "dedekind/exact_arith.hpp"
#include "dedekind/polynomial.hpp"

namespace dedekind {

class Cut {
public:
    struct Rational {
        BigRational value;
    };

    struct Algebraic {
        IntPolynomial poly;
        BigRational lo, hi;
    };

    /// The cut whose upper class starts at q.
    static Cut rational(BigRational q) { return Cut(Rational{std::move(q)}); }

    /**
     * Cut at the unique root of p inside the open interval (lo, hi).
     * p is reduced to its squarefree primitive part; a rational root is
     * returned as the rational variant.
     */
    static Cut algebraic(const IntPolynomial& p, BigRational lo, BigRational hi);

    bool is_rational() const { return std::holds_alternative<Rational>(rep_); }
    bool is_algebraic() const { return !is_rational(); }

    const BigRational& rational_value() const {
        if (!is_rational()) throw DomainError("cut is not rational");
        return std::get<Rational>(rep_).value;
    }

    const Algebraic& algebraic_value() const {
        if (is_rational()) throw DomainError("cut is rational");
        return std::get<Algebraic>(rep_);
    }

    std::string str() const {
        if (is_rational()) return rational_value().str();
        const auto& a = algebraic_value();
        return "root of " + a.poly.str() + " in (" + a.lo.str() + ", " + a.hi.str() + ")";
    }

private:
    explicit Cut(Rational r) : rep_(std::move(r)) {}
    explicit Cut(Algebraic a) : rep_(std::move(a)) {}

    friend Cut normalized_cut(IntPolynomial p, BigRational lo, BigRational hi);

    std::variant<Rational, Algebraic> rep_;
};

/// A rational bracket: lo < value < hi, or lo == hi == value for rational cuts.
struct Bracket {
    BigRational lo, hi;
};

namespace detail {

/// One bisection step; p has no rational root inside so the midpoint is never a root.
inline Cut::Algebraic bisect(const Cut::Algebraic& a) {
    BigRational mid = (a.lo + a.hi) / BigRational(2);
    if (a.poly.sign_at(mid) == a.poly.sign_at(a.lo)) return {a.poly, mid, a.hi};
    return {a.poly, a.lo, mid};
}

inline Cut::Algebraic refine_to(Cut::Algebraic a, const BigRational& width) {
    while (a.hi - a.lo > width) a = bisect(a);
    return a;
}

}  // namespace detail

/**
 * Builds a normalised cut from a squarefree primitive p with exactly one
 * root in the open interval (lo, hi). Endpoint roots are moved off by
 * bisection; rational roots are detected and returned as rational cuts.
 */
inline Cut normalized_cut(IntPolynomial p, BigRational lo, BigRational hi) {
    const auto seq = sturm_sequence(p);
    // move endpoints off other roots of p
    while (p.sign_at(lo) == 0) {
        BigRational mid = (lo + hi) / BigRational(2);
        if (p.sign_at(mid) == 0) return Cut::rational(mid);
        if (detail::count_open(seq, lo, mid) == 1)
            hi = mid;
        else
            lo = mid;
    }
    while (p.sign_at(hi) == 0) {
        BigRational mid = (lo + hi) / BigRational(2);
        if (p.sign_at(mid) == 0) return Cut::rational(mid);
        if (detail::count_open(seq, mid, hi) == 1)
            lo = mid;
        else
            hi = mid;
    }

    // any rational root has a denominator dividing lead(p)
    const BigRational grid = BigRational(BigInt(1), p.lead());
    while (hi - lo > grid) {
        BigRational mid = (lo + hi) / BigRational(2);
        int s = p.sign_at(mid);
        if (s == 0) return Cut::rational(mid);
        if (s == p.sign_at(lo))
            lo = mid;
        else
            hi = mid;
    }
    BigRational candidate(floor(lo * BigRational(p.lead())) + 1, p.lead());
    if (candidate < hi && p.sign_at(candidate) == 0) return Cut::rational(candidate);

    p = p.strip_zero_roots();
    return Cut(Cut::Algebraic{std::move(p), std::move(lo), std::move(hi)});
}

inline Cut Cut::algebraic(const IntPolynomial& p, BigRational lo, BigRational hi) {
    if (p.degree() < 1) throw DomainError("algebraic cut needs a non-constant polynomial");
    if (!(lo < hi)) throw DomainError("algebraic cut needs lo < hi");
    IntPolynomial sf = squarefree_part(p);
    if (detail::count_open(sturm_sequence(sf), lo, hi) != 1)
        throw DomainError("interval (" + lo.str() + ", " + hi.str() + ") does not isolate exactly one root of " +
                          p.str());
    return normalized_cut(std::move(sf), std::move(lo), std::move(hi));
}

inline Cut cut_of_rational(const BigRational& q) { return Cut::rational(q); }

/// The positive real n-th root of q > 0.
inline Cut cut_root(unsigned long n, const BigRational& q) {
    if (n < 2) throw DomainError("cut_root needs n >= 2");
    if (q.sign() <= 0) throw DomainError("cut_root needs a positive radicand");
    bool num_exact = false;
    bool den_exact = false;
    BigInt rn = big_root(q.num(), n, &num_exact);
    BigInt rd = big_root(q.den(), n, &den_exact);
    if (num_exact && den_exact) return Cut::rational(BigRational(rn, rd));

    IntPolynomial p = IntPolynomial::monomial(q.den(), n) - IntPolynomial::constant(q.num());
    BigInt k = big_root(floor(q), n);  // k^n <= q < (k+1)^n
    return Cut::algebraic(p, BigRational(k), BigRational(k + 1));
}

/// True iff q lies in the lower class of c.
inline bool cut_member(const Cut& c, const BigRational& q) {
    if (c.is_rational()) return q < c.rational_value();
    const auto& a = c.algebraic_value();
    if (q <= a.lo) return true;
    if (q >= a.hi) return false;
    // the unique root is a sign change of p inside (lo, hi)
    return a.poly.sign_at(q) == a.poly.sign_at(a.lo);
}

inline std::strong_ordering cut_cmp(const Cut& x, const Cut& y) {
    if (x.is_rational() && y.is_rational()) return x.rational_value() <=> y.rational_value();
    if (x.is_rational()) {
        // an algebraic cut is never rational, so EQ is impossible here
        return cut_member(y, x.rational_value()) ? std::strong_ordering::less : std::strong_ordering::greater;
    }
    if (y.is_rational())
        return cut_member(x, y.rational_value()) ? std::strong_ordering::greater : std::strong_ordering::less;

    Cut::Algebraic a = x.algebraic_value();
    Cut::Algebraic b = y.algebraic_value();
    if (a.hi <= b.lo) return std::strong_ordering::less;
    if (b.hi <= a.lo) return std::strong_ordering::greater;

    // a common root of gcd(p, q) inside the overlap is both values at once
    IntPolynomial g = poly_gcd(a.poly, b.poly);
    if (g.degree() >= 1) {
        BigRational lo = std::max(a.lo, b.lo);
        BigRational hi = std::min(a.hi, b.hi);
        if (detail::count_open(sturm_sequence(g), lo, hi) > 0) return std::strong_ordering::equal;
    }
    while (true) {
        if (a.hi <= b.lo) return std::strong_ordering::less;
        if (b.hi <= a.lo) return std::strong_ordering::greater;
        a = detail::bisect(a);
        b = detail::bisect(b);
    }
}

inline bool operator==(const Cut& x, const Cut& y) { return cut_cmp(x, y) == 0; }
inline std::strong_ordering operator<=>(const Cut& x, const Cut& y) { return cut_cmp(x, y); }

inline Cut cut_neg(const Cut& c) {
    if (c.is_rational()) return Cut::rational(-c.rational_value());
    const auto& a = c.algebraic_value();
    return normalized_cut(a.poly.reflect().primitive_part(), -a.hi, -a.lo);
}

namespace detail {

/**
 * Shrinks operand enclosures until the open box `bound(x, y)` isolates
 * exactly one root of the squarefree part of h, then normalises.
 */
template <class Bound>
Cut isolate_result(const IntPolynomial& h, Cut::Algebraic x, Cut::Algebraic y, Bound bound) {
    IntPolynomial sf = squarefree_part(h);
    const auto seq = sturm_sequence(sf);
    while (true) {
        auto [lo, hi] = bound(x, y);
        if (sf.sign_at(lo) != 0 && sf.sign_at(hi) != 0 && count_open(seq, lo, hi) == 1)
            return normalized_cut(sf, lo, hi);
        x = bisect(x);
        y = bisect(y);
    }
}

}  // namespace detail

inline Cut cut_add(const Cut& x, const Cut& y) {
    if (x.is_rational() && y.is_rational()) return Cut::rational(x.rational_value() + y.rational_value());
    if (y.is_rational()) {
        const BigRational& q = y.rational_value();
        if (q.is_zero()) return x;
        const auto& a = x.algebraic_value();
        return normalized_cut(a.poly.compose_affine(BigRational(1), -q), a.lo + q, a.hi + q);
    }
    if (x.is_rational()) return cut_add(y, x);

    const auto& a = x.algebraic_value();
    const auto& b = y.algebraic_value();
    return detail::isolate_result(composed_sum(a.poly, b.poly), a, b,
                                  [](const Cut::Algebraic& u, const Cut::Algebraic& v) {
                                      return std::pair{u.lo + v.lo, u.hi + v.hi};
                                  });
}

inline Cut cut_sub(const Cut& x, const Cut& y) { return cut_add(x, cut_neg(y)); }

inline Cut cut_mul(const Cut& x, const Cut& y) {
    if (x.is_rational() && y.is_rational()) return Cut::rational(x.rational_value() * y.rational_value());
    if (y.is_rational()) {
        const BigRational& q = y.rational_value();
        if (q.is_zero()) return Cut::rational(BigRational(0));
        if (q == BigRational(1)) return x;
        const auto& a = x.algebraic_value();
        BigRational lo = a.lo * q;
        BigRational hi = a.hi * q;
        if (hi < lo) std::swap(lo, hi);
        return normalized_cut(a.poly.compose_affine(q.inverse(), BigRational(0)), lo, hi);
    }
    if (x.is_rational()) return cut_mul(y, x);

    const auto& a = x.algebraic_value();
    const auto& b = y.algebraic_value();
    return detail::isolate_result(composed_product(a.poly, b.poly), a, b,
                                  [](const Cut::Algebraic& u, const Cut::Algebraic& v) {
                                      BigRational c[4] = {u.lo * v.lo, u.lo * v.hi, u.hi * v.lo, u.hi * v.hi};
                                      BigRational lo = c[0];
                                      BigRational hi = c[0];
                                      for (const auto& e : c) {
                                          lo = std::min(lo, e);
                                          hi = std::max(hi, e);
                                      }
                                      return std::pair{lo, hi};
                                  });
}

/**
 * Nested-interval approximation: width <= eps, and successive calls with
 * smaller eps return sub-brackets of earlier ones (same bisection path).
 */
inline Bracket cut_approx(const Cut& c, const BigRational& eps) {
    if (eps.sign() <= 0) throw DomainError("cut_approx needs eps > 0");
    if (c.is_rational()) return {c.rational_value(), c.rational_value()};
    auto a = detail::refine_to(c.algebraic_value(), eps);
    return {a.lo, a.hi};
}

/// A sample split into lower-class and upper-class members, in input order.
struct Partition {
    std::vector<BigRational> lower, upper;
};

inline Partition cut_partition(const Cut& c, std::span<const BigRational> sample) {
    Partition out;
    for (const auto& q : sample) (cut_member(c, q) ? out.lower : out.upper).push_back(q);
    return out;
}

/**
 * Every sampled rational lands in exactly one class and every lower-class
 * sample is strictly below every upper-class sample.
 */
inline bool cut_partition_check(const Cut& c, std::span<const BigRational> sample) {
    Partition p = cut_partition(c, sample);
    if (p.lower.size() + p.upper.size() != sample.size()) return false;
    for (const auto& l : p.lower)
        for (const auto& u : p.upper)
            if (!(l < u)) return false;
    return true;
}

}  // namespace dedekind
