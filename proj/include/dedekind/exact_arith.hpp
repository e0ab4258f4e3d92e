#pragma once

/**
 * @file exact_arith.hpp
 * @brief Exact integers and rationals.
 *
 * BigInt is GMP's mpz_class. BigRational keeps its value in lowest terms
 * with a positive denominator at all times, so two rationals are equal
 * exactly when their numerators and denominators are.
 */

#include <gmpxx.h>

#include <cctype>
#include <compare>
#include <ostream>
#include <string>
#include <string_view>

#include "dedekind/error.hpp"

namespace dedekind {

using BigInt = mpz_class;

inline BigInt big_abs(const BigInt& x) {
    BigInt r;
    mpz_abs(r.get_mpz_t(), x.get_mpz_t());
    return r;
}

/// gcd(0, n) = |n|; the result is never negative.
inline BigInt big_gcd(const BigInt& a, const BigInt& b) {
    BigInt r;
    mpz_gcd(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

inline BigInt big_lcm(const BigInt& a, const BigInt& b) {
    BigInt r;
    mpz_lcm(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

/// Floor division and the matching non-negative remainder for positive m.
inline BigInt floor_div(const BigInt& a, const BigInt& m) {
    BigInt q;
    mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
    return q;
}

inline BigInt mod_floor(const BigInt& a, const BigInt& m) {
    BigInt r;
    mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
    return r;
}

inline BigInt big_pow(const BigInt& base, unsigned long exp) {
    BigInt r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exp);
    return r;
}

/// Integer n-th root of x >= 0, truncated; `exact` reports whether root^n == x.
inline BigInt big_root(const BigInt& x, unsigned long n, bool* exact = nullptr) {
    BigInt r;
    int is_exact = mpz_root(r.get_mpz_t(), x.get_mpz_t(), n);
    if (exact) *exact = is_exact != 0;
    return r;
}

inline std::string to_string(const BigInt& x) { return x.get_str(); }

inline BigInt parse_bigint(std::string_view text) {
    std::string s(text);
    std::size_t start = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
    if (start == s.size()) throw ParseError("empty integer: '" + s + "'");
    for (std::size_t i = start; i < s.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(s[i])))
            throw ParseError("not an integer: '" + s + "'");
    if (s[0] == '+') s.erase(0, 1);
    return BigInt(s, 10);
}

class BigRational {
public:
    BigRational() = default;
    BigRational(long n) : q_(n) {}                       // NOLINT(implicit)
    BigRational(int n) : q_(static_cast<long>(n)) {}     // NOLINT(implicit)
    BigRational(const BigInt& n) : q_(n) {}              // NOLINT(implicit)

    BigRational(const BigInt& num, const BigInt& den) {
        if (den == 0) throw DivisionByZero();
        q_ = mpq_class(num, den);
        q_.canonicalize();
    }

    BigInt num() const { return q_.get_num(); }
    BigInt den() const { return q_.get_den(); }

    int sign() const { return sgn(q_); }
    bool is_zero() const { return sign() == 0; }
    bool is_integer() const { return q_.get_den() == 1; }

    BigRational operator-() const { return from_mpq(-q_); }
    BigRational abs() const { return from_mpq(::abs(q_)); }

    BigRational inverse() const {
        if (is_zero()) throw DivisionByZero();
        return BigRational(den(), num());
    }

    friend BigRational operator+(const BigRational& x, const BigRational& y) { return from_mpq(x.q_ + y.q_); }
    friend BigRational operator-(const BigRational& x, const BigRational& y) { return from_mpq(x.q_ - y.q_); }
    friend BigRational operator*(const BigRational& x, const BigRational& y) { return from_mpq(x.q_ * y.q_); }
    friend BigRational operator/(const BigRational& x, const BigRational& y) {
        if (y.is_zero()) throw DivisionByZero();
        return from_mpq(x.q_ / y.q_);
    }

    BigRational& operator+=(const BigRational& y) { return *this = *this + y; }
    BigRational& operator-=(const BigRational& y) { return *this = *this - y; }
    BigRational& operator*=(const BigRational& y) { return *this = *this * y; }
    BigRational& operator/=(const BigRational& y) { return *this = *this / y; }

    friend bool operator==(const BigRational& x, const BigRational& y) { return x.q_ == y.q_; }
    friend std::strong_ordering operator<=>(const BigRational& x, const BigRational& y) {
        int c = cmp(x.q_, y.q_);
        return c < 0 ? std::strong_ordering::less
                     : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

    /// "p/q", or "p" when the value is an integer.
    std::string str() const {
        return is_integer() ? num().get_str() : num().get_str() + "/" + den().get_str();
    }

    double to_double() const { return q_.get_d(); }

    friend std::ostream& operator<<(std::ostream& os, const BigRational& x) { return os << x.str(); }

private:
    static BigRational from_mpq(mpq_class v) {
        BigRational r;
        r.q_ = std::move(v);
        return r;
    }

    mpq_class q_;
};

inline std::string to_string(const BigRational& x) { return x.str(); }

/// Floor of a rational as an integer.
inline BigInt floor(const BigRational& x) { return floor_div(x.num(), x.den()); }

/**
 * Parses "p/q", an integer, a decimal ("1.25") or scientific notation
 * ("1e-6", "-2.5E3"). The value is exact: decimals are read as fractions
 * of a power of ten, never through a double.
 */
inline BigRational parse_rational(std::string_view text) {
    std::string s(text);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.pop_back();
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.erase(0, 1);
    if (s.empty()) throw ParseError("empty rational");

    if (auto slash = s.find('/'); slash != std::string::npos) {
        BigInt n = parse_bigint(s.substr(0, slash));
        BigInt d = parse_bigint(s.substr(slash + 1));
        if (d == 0) throw ParseError("zero denominator in '" + s + "'");
        return BigRational(n, d);
    }

    long exponent = 0;
    if (auto e = s.find_first_of("eE"); e != std::string::npos) {
        std::string ex = s.substr(e + 1);
        try {
            std::size_t used = 0;
            exponent = std::stol(ex, &used);
            if (used != ex.size()) throw ParseError("bad exponent in '" + s + "'");
        } catch (const std::logic_error&) {
            throw ParseError("bad exponent in '" + s + "'");
        }
        s = s.substr(0, e);
    }

    std::string digits = s;
    if (auto dot = s.find('.'); dot != std::string::npos) {
        std::string frac = s.substr(dot + 1);
        digits = s.substr(0, dot) + frac;
        exponent -= static_cast<long>(frac.size());
        if (digits == "-" || digits == "+" || digits.empty()) throw ParseError("not a number: '" + std::string(text) + "'");
    }
    BigInt mant = parse_bigint(digits);
    BigInt scale = big_pow(BigInt(10), static_cast<unsigned long>(exponent < 0 ? -exponent : exponent));
    return exponent >= 0 ? BigRational(mant * scale) : BigRational(mant, scale);
}

enum class RatOp { add, sub, mul, div };

/// Exact rational arithmetic; throws DivisionByZero for div by zero.
inline BigRational rat_arith(RatOp op, const BigRational& x, const BigRational& y) {
    switch (op) {
        case RatOp::add: return x + y;
        case RatOp::sub: return x - y;
        case RatOp::mul: return x * y;
        case RatOp::div: return x / y;
    }
    throw DomainError("unknown rational operation");
}

/// Both sides of the two gcd/lcm modular identities for one triple.
struct ModularLawReport {
    BigInt m1_lhs, m1_rhs;  // gcd(lcm(a,b), lcm(a,c))  vs  lcm(a, gcd(b, lcm(a,c)))
    BigInt m2_lhs, m2_rhs;  // lcm(gcd(a,b), gcd(a,c))  vs  gcd(a, lcm(b, gcd(a,c)))
    bool m1 = false;
    bool m2 = false;
};

inline ModularLawReport gcd_lcm_modular_check(const BigInt& a, const BigInt& b, const BigInt& c) {
    if (a <= 0 || b <= 0 || c <= 0) throw DomainError("modular-law check needs positive integers");
    ModularLawReport r;
    r.m1_lhs = big_gcd(big_lcm(a, b), big_lcm(a, c));
    r.m1_rhs = big_lcm(a, big_gcd(b, big_lcm(a, c)));
    r.m2_lhs = big_lcm(big_gcd(a, b), big_gcd(a, c));
    r.m2_rhs = big_gcd(a, big_lcm(b, big_gcd(a, c)));
    r.m1 = r.m1_lhs == r.m1_rhs;
    r.m2 = r.m2_lhs == r.m2_rhs;
    return r;
}

}  // namespace dedekind
