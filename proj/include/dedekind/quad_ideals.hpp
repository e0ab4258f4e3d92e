#pragma once

/**
 * @file quad_ideals.hpp
 * @brief Ideals in the ring of integers of Q(sqrt(d)).
 *
 * Elements are x + y*w with w^2 = t*w + k:
 *   d = 2, 3 (mod 4):  w = sqrt(d),         t = 0, k = d
 *   d = 1 (mod 4):     w = (1 + sqrt(d))/2, t = 1, k = (d - 1)/4
 * Ideals are kept in Hermite normal form, so equality is structural.
 */

#include <algorithm>
#include <cctype>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "dedekind/error.hpp"
#include "dedekind/exact_arith.hpp"
#include "dedekind/lattice.hpp"

namespace dedekind {

enum class OmegaKind { sqrt_d, half_one_plus_sqrt_d };

struct QuadraticRing {
    BigInt d;
    OmegaKind omega_kind = OmegaKind::sqrt_d;
    BigInt t;  // trace of w
    BigInt k;  // w^2 = t*w + k
    BigInt discriminant;

    std::string tag() const { return "Q(sqrt(" + d.get_str() + "))"; }
    friend bool operator==(const QuadraticRing& x, const QuadraticRing& y) { return x.d == y.d; }
};

inline bool is_squarefree(const BigInt& n) {
    BigInt m = big_abs(n);
    for (BigInt p = 2; p * p <= m; ++p)
        if (m % (p * p) == 0) return false;
    return true;
}

inline QuadraticRing ring_of(const BigInt& d) {
    if (d == 0 || d == 1) throw DomainError("d must not be 0 or 1");
    if (!is_squarefree(d)) throw DomainError("d = " + d.get_str() + " is not squarefree");
    QuadraticRing r;
    r.d = d;
    if (mod_floor(d, 4) == 1) {
        r.omega_kind = OmegaKind::half_one_plus_sqrt_d;
        r.t = 1;
        r.k = (d - 1) / 4;
        r.discriminant = d;
    } else {
        r.omega_kind = OmegaKind::sqrt_d;
        r.t = 0;
        r.k = d;
        r.discriminant = 4 * d;
    }
    return r;
}

/// x + y*w.
struct QuadInt {
    BigInt x;
    BigInt y;

    QuadInt() = default;
    QuadInt(BigInt x_, BigInt y_ = 0) : x(std::move(x_)), y(std::move(y_)) {}
    QuadInt(long x_) : x(x_), y(0) {}

    bool is_zero() const { return x == 0 && y == 0; }
    friend bool operator==(const QuadInt& a, const QuadInt& b) { return a.x == b.x && a.y == b.y; }
    friend QuadInt operator+(const QuadInt& a, const QuadInt& b) { return {a.x + b.x, a.y + b.y}; }
    friend QuadInt operator-(const QuadInt& a, const QuadInt& b) { return {a.x - b.x, a.y - b.y}; }
    friend QuadInt operator*(const BigInt& s, const QuadInt& a) { return {s * a.x, s * a.y}; }

    /// "3", "w", "1+w", "2-3*w".
    std::string str() const {
        if (y == 0) return x.get_str();
        std::string ypart = (big_abs(y) == 1) ? "w" : big_abs(y).get_str() + "*w";
        if (x == 0) return (y < 0 ? "-" : "") + ypart;
        return x.get_str() + (y < 0 ? "-" : "+") + ypart;
    }
};

inline QuadInt quad_mul(const QuadraticRing& r, const QuadInt& a, const QuadInt& b) {
    BigInt yy = a.y * b.y;
    return {a.x * b.x + r.k * yy, a.x * b.y + a.y * b.x + r.t * yy};
}

/// Galois conjugate: w maps to t - w.
inline QuadInt quad_conj(const QuadraticRing& r, const QuadInt& a) { return {a.x + r.t * a.y, -a.y}; }

/// N(x + y*w) = x^2 + t*x*y - k*y^2; negative values occur only for d > 0.
inline BigInt elem_norm(const QuadraticRing& r, const QuadInt& z) {
    return z.x * z.x + r.t * z.x * z.y - r.k * z.y * z.y;
}

/// Accepts sums of integer terms and integer multiples of w, e.g. "1+w", "-2*w+3", "6".
inline QuadInt parse_quadint(std::string_view text) {
    std::string s;
    for (char ch : text)
        if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
    if (s.empty()) throw ParseError("empty ring element");
    QuadInt out;
    std::size_t i = 0;
    while (i < s.size()) {
        int sign = 1;
        if (s[i] == '+' || s[i] == '-') {
            sign = s[i] == '-' ? -1 : 1;
            ++i;
        } else if (i != 0) {
            throw ParseError("bad ring element '" + std::string(text) + "'");
        }
        std::size_t j = i;
        while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
        BigInt coef = j > i ? BigInt(s.substr(i, j - i)) : BigInt(1);
        bool is_w = false;
        if (j < s.size() && s[j] == '*') {
            if (j == i || j + 1 >= s.size() || s[j + 1] != 'w') throw ParseError("bad ring element '" + std::string(text) + "'");
            is_w = true;
            j += 2;
        } else if (j < s.size() && s[j] == 'w') {
            is_w = true;
            ++j;
        } else if (j == i) {
            throw ParseError("bad ring element '" + std::string(text) + "'");
        }
        (is_w ? out.y : out.x) += sign * coef;
        i = j;
    }
    return out;
}

/// Z-module with basis {a, b + c*w}: a > 0, c > 0, 0 <= b < a. Not necessarily an ideal.
struct ZModule {
    QuadraticRing ring;
    BigInt a, b, c;

    static ZModule make(const QuadraticRing& r, BigInt a, BigInt b, BigInt c) {
        if (a <= 0 || c <= 0 || b < 0 || b >= a) throw DomainError("module basis not in normal form");
        return {r, std::move(a), std::move(b), std::move(c)};
    }

    bool contains(const QuadInt& z) const {
        if (z.y % c != 0) return false;
        BigInt m = z.y / c;
        return (z.x - m * b) % a == 0;
    }

    std::vector<QuadInt> basis() const { return {QuadInt(a), QuadInt(b, c)}; }
};

/// Reduce spanning vectors of a full-rank sublattice of Z^2 to normal form.
inline ZModule hnf(const QuadraticRing& r, std::vector<QuadInt> vs) {
    // Euclid on the w-coordinate until one row carries it
    for (;;) {
        std::size_t piv = vs.size();
        for (std::size_t i = 0; i < vs.size(); ++i)
            if (vs[i].y != 0 && (piv == vs.size() || big_abs(vs[i].y) < big_abs(vs[piv].y))) piv = i;
        if (piv == vs.size()) throw DomainError("module is not of full rank");
        bool done = true;
        for (std::size_t i = 0; i < vs.size(); ++i) {
            if (i == piv || vs[i].y == 0) continue;
            BigInt q = floor_div(vs[i].y, vs[piv].y);
            vs[i] = vs[i] - q * vs[piv];
            if (vs[i].y != 0) done = false;
        }
        if (done) {
            QuadInt w = vs[piv];
            if (w.y < 0) w = BigInt(-1) * w;
            BigInt a = 0;
            for (std::size_t i = 0; i < vs.size(); ++i)
                if (i != piv) a = big_gcd(a, vs[i].x);
            if (a == 0) throw DomainError("module is not of full rank");
            return ZModule::make(r, a, mod_floor(w.x, a), w.y);
        }
    }
}

class Ideal {
public:
    /// Rejects modules not stable under multiplication by w.
    static Ideal from_module(const ZModule& m) {
        for (const auto& e : m.basis())
            if (!m.contains(quad_mul(m.ring, QuadInt(0, 1), e)))
                throw DomainError("module is not stable under multiplication by w");
        return Ideal(m);
    }

    static Ideal make(const QuadraticRing& r, BigInt a, BigInt b, BigInt c) {
        return from_module(ZModule::make(r, std::move(a), std::move(b), std::move(c)));
    }

    const QuadraticRing& ring() const { return m_.ring; }
    const BigInt& a() const { return m_.a; }
    const BigInt& b() const { return m_.b; }
    const BigInt& c() const { return m_.c; }
    const ZModule& module() const { return m_; }
    BigInt norm() const { return m_.a * m_.c; }
    bool is_unit() const { return norm() == 1; }

    bool contains(const QuadInt& z) const { return m_.contains(z); }
    std::vector<QuadInt> basis() const { return m_.basis(); }

    /// "[a, b+c*w]".
    std::string str() const { return "[" + a().get_str() + ", " + b().get_str() + "+" + c().get_str() + "*w]"; }

    friend bool operator==(const Ideal& x, const Ideal& y) {
        return x.ring() == y.ring() && x.a() == y.a() && x.b() == y.b() && x.c() == y.c();
    }

    /// Norm first, then (a, b, c).
    friend bool operator<(const Ideal& x, const Ideal& y) {
        BigInt nx = x.norm(), ny = y.norm();
        if (nx != ny) return nx < ny;
        if (x.a() != y.a()) return x.a() < y.a();
        if (x.b() != y.b()) return x.b() < y.b();
        return x.c() < y.c();
    }

private:
    explicit Ideal(ZModule m) : m_(std::move(m)) {}

    ZModule m_;
};

namespace detail {

inline void require_same_ring(const Ideal& I, const Ideal& J) {
    if (!(I.ring() == J.ring())) throw DomainError("ideals live in different rings");
}

}  // namespace detail

/// Z-span of {g, w*g : g in gens}.
inline Ideal ideal_from_gens(const QuadraticRing& r, const std::vector<QuadInt>& gens) {
    std::vector<QuadInt> vs;
    for (const auto& g : gens) {
        if (g.is_zero()) continue;
        vs.push_back(g);
        vs.push_back(quad_mul(r, QuadInt(0, 1), g));
    }
    if (vs.empty()) throw DomainError("ideal needs a nonzero generator");
    return Ideal::from_module(hnf(r, vs));
}

inline Ideal unit_ideal(const QuadraticRing& r) { return Ideal::make(r, 1, 0, 1); }

inline Ideal ideal_add(const Ideal& I, const Ideal& J) {
    detail::require_same_ring(I, J);
    auto vs = I.basis();
    for (const auto& v : J.basis()) vs.push_back(v);
    return Ideal::from_module(hnf(I.ring(), vs));
}

inline Ideal ideal_mul(const Ideal& I, const Ideal& J) {
    detail::require_same_ring(I, J);
    std::vector<QuadInt> vs;
    for (const auto& u : I.basis())
        for (const auto& v : J.basis()) vs.push_back(quad_mul(I.ring(), u, v));
    return Ideal::from_module(hnf(I.ring(), vs));
}

inline Ideal ideal_pow(const Ideal& I, unsigned e) {
    Ideal out = unit_ideal(I.ring());
    for (unsigned i = 0; i < e; ++i) out = ideal_mul(out, I);
    return out;
}

inline Ideal ideal_conj(const Ideal& I) {
    std::vector<QuadInt> gens;
    for (const auto& v : I.basis()) gens.push_back(quad_conj(I.ring(), v));
    return ideal_from_gens(I.ring(), gens);
}

/**
 * Module intersection. The x-axis part is lcm(a, a'); the w-coordinate is the
 * least multiple C of lcm(c, c') for which both congruences on x are
 * compatible, which happens by C = gcd(a, a') * lcm(c, c').
 */
inline Ideal ideal_intersect(const Ideal& I, const Ideal& J) {
    detail::require_same_ring(I, J);
    const BigInt A = big_lcm(I.a(), J.a());
    const BigInt L = big_lcm(I.c(), J.c());
    const BigInt g = big_gcd(I.a(), J.a());
    for (BigInt m = 1; m <= g; ++m) {
        BigInt y = m * L;
        BigInt r1 = mod_floor((y / I.c()) * I.b(), I.a());
        BigInt r2 = mod_floor((y / J.c()) * J.b(), J.a());
        if ((r2 - r1) % g != 0) continue;
        // x = r1 + a*s with a*s = r2 - r1 (mod a')
        BigInt mod = J.a() / g;
        BigInt s = 0;
        if (mod != 1) {
            BigInt inv;
            BigInt base = mod_floor(I.a() / g, mod);
            mpz_invert(inv.get_mpz_t(), base.get_mpz_t(), mod.get_mpz_t());
            s = mod_floor(((r2 - r1) / g) * inv, mod);
        }
        QuadInt w(r1 + I.a() * s, y);
        return Ideal::from_module(hnf(I.ring(), {QuadInt(A), w}));
    }
    throw Error("ideal_intersect: no compatible w-coordinate found");
}

inline bool ideal_contains(const Ideal& I, const QuadInt& z) { return I.contains(z); }

/// I | J  <=>  I contains J.
inline bool ideal_divides(const Ideal& I, const Ideal& J) {
    detail::require_same_ring(I, J);
    for (const auto& v : J.basis())
        if (!I.contains(v)) return false;
    return true;
}

/// Sums, differences and products (with w and with each other) of sampled members stay inside.
inline bool ideal_closure_check(const ZModule& M, const std::vector<std::pair<QuadInt, QuadInt>>& samples) {
    const QuadInt w(0, 1);
    for (const auto& [u, v] : samples) {
        if (!M.contains(u + v) || !M.contains(u - v)) return false;
        if (!M.contains(quad_mul(M.ring, w, u)) || !M.contains(quad_mul(M.ring, w, v))) return false;
        if (!M.contains(quad_mul(M.ring, u, v))) return false;
    }
    return true;
}

inline bool ideal_closure_check(const Ideal& I, const std::vector<std::pair<QuadInt, QuadInt>>& samples) {
    return ideal_closure_check(I.module(), samples);
}

inline bool is_prime_integer(const BigInt& p) {
    if (p < 2) return false;
    for (BigInt q = 2; q * q <= p; ++q)
        if (p % q == 0) return false;
    return true;
}

enum class SplitKind { ramified, split, inert };

inline const char* to_string(SplitKind k) {
    switch (k) {
        case SplitKind::ramified: return "ramified";
        case SplitKind::split: return "split";
        case SplitKind::inert: return "inert";
    }
    return "?";
}

struct SplitResult {
    SplitKind kind;
    std::vector<Ideal> primes;  // sorted; a single (p) when inert
};

/// Roots of x^2 - t*x - k mod p decide the splitting; P = (p, w - r) for each root r.
inline SplitResult split_prime(const QuadraticRing& r, const BigInt& p) {
    if (!is_prime_integer(p)) throw DomainError(p.get_str() + " is not prime");
    std::vector<BigInt> roots;
    for (BigInt x = 0; x < p; ++x)
        if (mod_floor(x * x - r.t * x - r.k, p) == 0) roots.push_back(x);
    if (roots.empty()) return {SplitKind::inert, {ideal_from_gens(r, {QuadInt(p)})}};
    std::vector<Ideal> primes;
    for (const auto& root : roots) primes.push_back(ideal_from_gens(r, {QuadInt(p), QuadInt(-root, 1)}));
    std::sort(primes.begin(), primes.end());
    if (roots.size() == 1) return {SplitKind::ramified, primes};
    return {SplitKind::split, primes};
}

/// Prime norm, or (p) for an inert p.
inline bool ideal_is_prime(const Ideal& I) {
    BigInt n = I.norm();
    if (is_prime_integer(n)) return true;
    BigInt p = I.a();
    if (I.c() != p || I.b() != 0 || !is_prime_integer(p)) return false;
    return split_prime(I.ring(), p).kind == SplitKind::inert;
}

inline std::vector<BigInt> prime_divisors(BigInt n) {
    std::vector<BigInt> out;
    n = big_abs(n);
    for (BigInt p = 2; p * p <= n; ++p)
        if (n % p == 0) {
            out.push_back(p);
            while (n % p == 0) n /= p;
        }
    if (n > 1) out.push_back(n);
    return out;
}

using IdealFactorization = std::vector<std::pair<Ideal, unsigned>>;

inline Ideal factorization_product(const QuadraticRing& r, const IdealFactorization& f) {
    Ideal out = unit_ideal(r);
    for (const auto& [P, e] : f) out = ideal_mul(out, ideal_pow(P, e));
    return out;
}

/// I / P = (I * conj(P)) / N(P) whenever P | I.
inline Ideal ideal_divide_by_prime(const Ideal& I, const Ideal& P) {
    Ideal prod = ideal_mul(I, ideal_conj(P));
    BigInt n = P.norm();
    if (prod.a() % n != 0 || prod.b() % n != 0 || prod.c() % n != 0) throw Error("ideal division is not exact");
    return Ideal::make(I.ring(), prod.a() / n, prod.b() / n, prod.c() / n);
}

/// Prime ideals with exponents, sorted; the product is checked against I.
inline IdealFactorization ideal_factor(const Ideal& I) {
    IdealFactorization out;
    Ideal rest = I;
    for (const auto& p : prime_divisors(I.norm()))
        for (const auto& P : split_prime(I.ring(), p).primes) {
            unsigned e = 0;
            while (ideal_divides(P, rest)) {
                rest = ideal_divide_by_prime(rest, P);
                ++e;
            }
            if (e) out.emplace_back(P, e);
        }
    if (!rest.is_unit() || !(factorization_product(I.ring(), out) == I))
        throw Error("ideal_factor: reconstruction failed for " + I.str());
    return out;
}

/**
 * First element of norm n in the order y = 0, 1, -1, 2, ... then x likewise.
 * Imaginary rings are searched exhaustively; real rings only up to |x|, |y| <= bound.
 */
inline std::optional<QuadInt> has_element_of_norm(const QuadraticRing& r, const BigInt& n, const BigInt& bound) {
    BigInt ymax, xmax;
    if (r.d < 0) {
        if (n < 0) return std::nullopt;
        // N = (x + t*y/2)^2 + |disc|/4 * y^2
        ymax = big_root(4 * n / big_abs(r.discriminant), 2);
        xmax = big_root(n, 2) + ymax + 1;
    } else {
        ymax = bound;
        xmax = bound;
    }
    auto zigzag = [](const BigInt& i) { return i % 2 == 1 ? BigInt((i + 1) / 2) : BigInt(-(i / 2)); };
    for (BigInt iy = 0; iy <= 2 * ymax; ++iy) {
        BigInt y = zigzag(iy);
        for (BigInt ix = 0; ix <= 2 * xmax; ++ix) {
            QuadInt z(zigzag(ix), y);
            if (elem_norm(r, z) == n) return z;
        }
    }
    return std::nullopt;
}

/// All divisors of I, ordered by exponent vector, with join = sum and meet = intersection.
inline FiniteLattice divisor_lattice(const Ideal& I) {
    IdealFactorization f = ideal_factor(I);
    std::vector<Ideal> divisors{unit_ideal(I.ring())};
    for (const auto& [P, e] : f) {
        std::vector<Ideal> next;
        for (const auto& D : divisors) {
            Ideal cur = D;
            for (unsigned i = 0; i <= e; ++i) {
                next.push_back(cur);
                cur = ideal_mul(cur, P);
            }
        }
        divisors = std::move(next);
    }
    std::map<Ideal, ElementId> id;
    for (ElementId i = 0; i < divisors.size(); ++i) id.emplace(divisors[i], i);
    const std::size_t n = divisors.size();
    OperationTables t{{}, OpTable(n, std::vector<ElementId>(n)), OpTable(n, std::vector<ElementId>(n))};
    for (ElementId i = 0; i < n; ++i) {
        t.labels.push_back(divisors[i].str());
        for (ElementId j = 0; j < n; ++j) {
            t.join[i][j] = id.at(ideal_add(divisors[i], divisors[j]));
            t.meet[i][j] = id.at(ideal_intersect(divisors[i], divisors[j]));
        }
    }
    return FiniteLattice::from_tables(std::move(t));
}

}  // namespace dedekind
