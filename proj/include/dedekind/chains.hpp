#pragma once

/**
 * @file chains.hpp
 * @brief Chains of a self-map, simply infinite systems, and arithmetic built from successor.
 */

#include <algorithm>
#include <cstddef>
#include <functional>
#include <numeric>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "dedekind/error.hpp"
#include "dedekind/exact_arith.hpp"

namespace dedekind {

using ElementSet = std::vector<std::size_t>;  // sorted, no repeats

/// A total self-map phi on {0, ..., size-1}.
struct FiniteDynamics {
    std::size_t size = 0;
    std::vector<std::size_t> phi;

    static FiniteDynamics make(std::vector<std::size_t> table) {
        for (auto v : table)
            if (v >= table.size()) throw DomainError("map value out of range");
        return {table.size(), std::move(table)};
    }
};

namespace detail {

inline void check_subset(const FiniteDynamics& dyn, const ElementSet& s) {
    for (auto e : s)
        if (e >= dyn.size) throw DomainError("element " + std::to_string(e) + " is outside the carrier");
}

}  // namespace detail

/// Least K containing seed with phi(K) inside K.
inline ElementSet chain_closure(const FiniteDynamics& dyn, const ElementSet& seed) {
    detail::check_subset(dyn, seed);
    std::vector<bool> in(dyn.size, false);
    std::vector<std::size_t> work(seed.begin(), seed.end());
    for (auto e : seed) in[e] = true;
    while (!work.empty()) {
        std::size_t e = work.back();
        work.pop_back();
        std::size_t f = dyn.phi[e];
        if (!in[f]) {
            in[f] = true;
            work.push_back(f);
        }
    }
    ElementSet out;
    for (std::size_t i = 0; i < dyn.size; ++i)
        if (in[i]) out.push_back(i);
    return out;
}

inline bool is_chain(const FiniteDynamics& dyn, const ElementSet& k) {
    detail::check_subset(dyn, k);
    std::vector<bool> in(dyn.size, false);
    for (auto e : k) in[e] = true;
    return std::all_of(k.begin(), k.end(), [&](std::size_t e) { return in[dyn.phi[e]]; });
}

/// Injectivity of phi.
inline bool is_similar(const FiniteDynamics& dyn) {
    std::vector<bool> hit(dyn.size, false);
    for (auto v : dyn.phi) {
        if (hit[v]) return false;
        hit[v] = true;
    }
    return true;
}

/**
 * True when no injection of {0..size-1} into a proper subset exists,
 * found by trying every map into every proper subset.
 */
inline bool dedekind_finite_check(std::size_t size) {
    if (size > 6) throw DomainError("dedekind_finite_check is exhaustive only up to size 6");
    for (unsigned mask = 0; mask + 1 < (1U << size); ++mask) {
        std::vector<std::size_t> target;
        for (std::size_t i = 0; i < size; ++i)
            if ((mask >> i) & 1U) target.push_back(i);
        if (target.empty()) continue;  // a nonempty carrier has no map into the empty set
        std::vector<std::size_t> choice(size, 0);  // odometer over target^size
        for (;;) {
            std::vector<bool> hit(size, false);
            bool injective = true;
            for (auto c : choice) {
                if (hit[target[c]]) {
                    injective = false;
                    break;
                }
                hit[target[c]] = true;
            }
            if (injective) return false;
            std::size_t pos = 0;
            while (pos < size && ++choice[pos] == target.size()) choice[pos++] = 0;
            if (pos == size) break;
        }
    }
    return true;
}

/// Checks that `map` is injective on {1..k} and sends nothing to an odd number <= 2k.
inline bool infinite_witness_check(unsigned long k,
                                   const std::function<BigInt(const BigInt&)>& map = [](const BigInt& n) {
                                       return BigInt(2 * n);
                                   }) {
    if (k < 1) throw DomainError("prefix length must be at least 1");
    std::vector<BigInt> image;
    for (unsigned long i = 1; i <= k; ++i) {
        BigInt v = map(BigInt(i));
        if (v >= 1 && v <= 2 * BigInt(k) && mod_floor(v, 2) == 1) return false;
        image.push_back(v);
    }
    std::sort(image.begin(), image.end());
    return std::adjacent_find(image.begin(), image.end()) == image.end();
}

// ---------------------------------------------------------------------------
// Simply infinite systems
// ---------------------------------------------------------------------------

/// An enumerable presentation: base element, successor, and an explicit equality.
struct SisPresentation {
    std::string name;
    std::string base;
    std::function<std::string(const std::string&)> succ;
    std::function<bool(const std::string&, const std::string&)> eq;

    /// base, succ(base), ... (n entries).
    std::vector<std::string> enumerate(std::size_t n) const {
        std::vector<std::string> out;
        if (n == 0) return out;
        out.push_back(base);
        while (out.size() < n) out.push_back(succ(out.back()));
        return out;
    }
};

/// Strings of marks: "|", "||", ...
inline SisPresentation unary_presentation() {
    return {"unary", "|", [](const std::string& s) { return s + "|"; },
            [](const std::string& a, const std::string& b) {
                return a.size() == b.size() && a.find_first_not_of('|') == std::string::npos &&
                       b.find_first_not_of('|') == std::string::npos;
            }};
}

/// Binary numerals "1", "10", "11", ... with digit-wise increment.
inline SisPresentation binary_presentation() {
    return {"binary", "1",
            [](std::string s) {
                std::size_t i = s.size();
                while (i > 0 && s[i - 1] == '1') s[--i] = '0';
                if (i == 0) return "1" + s;
                s[i - 1] = '1';
                return s;
            },
            [](const std::string& a, const std::string& b) {
                auto strip = [](const std::string& s) {
                    auto p = s.find_first_not_of('0');
                    return p == std::string::npos ? std::string() : s.substr(p);
                };
                return strip(a) == strip(b);
            }};
}

/// Even numbers 2, 4, 6, ... in decimal.
inline SisPresentation evens_presentation() {
    return {"evens", "2", [](const std::string& s) { return BigInt(BigInt(s) + 2).get_str(); },
            [](const std::string& a, const std::string& b) { return BigInt(a) == BigInt(b); }};
}

/// 1 -> 2 -> ... -> m -> 1; re-enters the base.
inline SisPresentation cyclic_presentation(unsigned m = 3) {
    return {"cyclic", "1",
            [m](const std::string& s) { return std::to_string(std::stoul(s) % m + 1); },
            [](const std::string& a, const std::string& b) { return a == b; }};
}

/// Counts up to 7, then 7 -> 6, so 5 and 7 share a successor.
inline SisPresentation collapsing_presentation() {
    return {"collapsing", "1",
            [](const std::string& s) {
                unsigned long v = std::stoul(s);
                return std::to_string(v == 7 ? 6 : v + 1);
            },
            [](const std::string& a, const std::string& b) { return a == b; }};
}

inline SisPresentation presentation_by_name(const std::string& name) {
    if (name == "unary") return unary_presentation();
    if (name == "binary") return binary_presentation();
    if (name == "evens") return evens_presentation();
    if (name == "cyclic") return cyclic_presentation();
    if (name == "collapsing") return collapsing_presentation();
    throw DomainError("unknown presentation '" + name + "'");
}

struct AxiomVerdict {
    bool holds = true;
    std::string witness;
};

/// alpha: succ stays in the system; beta: everything reached from base;
/// gamma: succ injective; delta: base is nobody's successor.
struct SisReport {
    AxiomVerdict alpha, beta, gamma, delta;
    bool ok() const { return alpha.holds && beta.holds && gamma.holds && delta.holds; }
};

inline SisReport check_simply_infinite_prefix(const SisPresentation& sis, std::size_t n) {
    if (n < 2) throw DomainError("prefix length must be at least 2");
    SisReport r;
    std::vector<std::string> prefix = sis.enumerate(n);
    std::vector<std::string> next;
    for (std::size_t i = 0; i < n; ++i) {
        try {
            next.push_back(sis.succ(prefix[i]));
        } catch (const std::exception& e) {
            r.alpha = {false, "succ(" + prefix[i] + ") failed: " + e.what()};
            return r;
        }
    }
    // beta: each element is base or the successor of its predecessor, under eq
    if (!sis.eq(prefix[0], sis.base)) r.beta = {false, "first element " + prefix[0] + " is not the base"};
    for (std::size_t i = 0; i + 1 < n && r.beta.holds; ++i)
        if (!sis.eq(prefix[i + 1], next[i]))
            r.beta = {false, "element " + std::to_string(i + 2) + " is not reached from the base"};
    for (std::size_t i = 0; i < n && r.gamma.holds; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (!sis.eq(prefix[i], prefix[j]) && sis.eq(next[i], next[j])) {
                r.gamma = {false, "succ(" + prefix[i] + ") = succ(" + prefix[j] + ") = " + next[i]};
                break;
            }
    for (std::size_t i = 0; i < n; ++i)
        if (sis.eq(next[i], sis.base)) {
            r.delta = {false, "succ(" + prefix[i] + ") = base " + sis.base};
            break;
        }
    return r;
}

struct IsoResult {
    std::vector<std::pair<std::string, std::string>> table;
    bool verified = false;
};

/// k-th element to k-th element, checked to commute with succ and to be injective.
inline IsoResult categorical_iso(const SisPresentation& s1, const SisPresentation& s2, std::size_t n) {
    if (!check_simply_infinite_prefix(s1, n).ok()) throw DomainError(s1.name + " fails the prefix axioms");
    if (!check_simply_infinite_prefix(s2, n).ok()) throw DomainError(s2.name + " fails the prefix axioms");
    auto p1 = s1.enumerate(n), p2 = s2.enumerate(n);
    IsoResult out;
    for (std::size_t i = 0; i < n; ++i) out.table.emplace_back(p1[i], p2[i]);
    auto image = [&](const std::string& x) -> std::optional<std::string> {
        for (const auto& [a, b] : out.table)
            if (s1.eq(a, x)) return b;
        return std::nullopt;
    };
    out.verified = true;
    for (std::size_t i = 0; i + 1 < n && out.verified; ++i) {
        auto lhs = image(s1.succ(p1[i]));
        if (!lhs || !s2.eq(*lhs, s2.succ(p2[i]))) out.verified = false;
    }
    for (std::size_t i = 0; i < n && out.verified; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (s2.eq(p2[i], p2[j])) out.verified = false;
    return out;
}

/**
 * Number of injections of the s1 prefix into the s2 prefix that send base to
 * base and commute with succ inside the prefix; all n! candidates are tried.
 */
inline std::size_t count_prefix_morphisms(const SisPresentation& s1, const SisPresentation& s2, std::size_t n) {
    if (n > 8) throw DomainError("brute-force morphism count supports n <= 8");
    auto p1 = s1.enumerate(n), p2 = s2.enumerate(n);
    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::size_t count = 0;
    do {
        if (!s2.eq(p2[perm[0]], s2.base)) continue;
        bool ok = true;
        // perm sends p1[i] to p2[perm[i]], and succ1(p1[i]) is p1[i+1]
        for (std::size_t i = 0; i + 1 < n && ok; ++i) ok = s2.eq(p2[perm[i + 1]], s2.succ(p2[perm[i]]));
        if (ok) ++count;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return count;
}

// ---------------------------------------------------------------------------
// Arithmetic by repetition
// ---------------------------------------------------------------------------

/// A natural number (starting at 1) offering only the base element, successor and equality.
class Natural {
public:
    static constexpr Natural one() { return Natural(1); }
    constexpr Natural succ() const { return Natural(v_ + 1); }
    friend constexpr bool operator==(Natural, Natural) = default;

    /// succ applied count-1 times to one(); count >= 1.
    static Natural from_count(unsigned long long count) {
        if (count == 0) throw DomainError("naturals start at 1");
        Natural n = one();
        for (unsigned long long i = 1; i < count; ++i) n = n.succ();
        return n;
    }

    /// Display value; not used by the arithmetic below.
    constexpr unsigned long long count() const { return v_; }

private:
    constexpr explicit Natural(unsigned long long v) : v_(v) {}

    unsigned long long v_;
};

/// f(1) = base_value, f(succ k) = step(f(k), k).
template <class V, class Step>
auto recursion_define(V base_value, Step step) {
    return [base_value = std::move(base_value), step = std::move(step)](Natural n) {
        V v = base_value;
        for (Natural k = Natural::one(); !(k == n); k = k.succ()) v = step(v, k);
        return v;
    };
}

inline Natural nat_add(Natural m, Natural n) {
    return recursion_define(m.succ(), [](Natural v, Natural) { return v.succ(); })(n);
}

inline Natural nat_mul(Natural m, Natural n) {
    return recursion_define(m, [m](Natural v, Natural) { return nat_add(v, m); })(n);
}

inline Natural nat_pow(Natural m, Natural n) {
    return recursion_define(m, [m](Natural v, Natural) { return nat_mul(v, m); })(n);
}

enum class LadderLevel { succ = 0, add = 1, mul = 2, pow = 3 };

/// Level 0 ignores n. Exponents start at 1: pow(m, 1) = m.
inline Natural ops_ladder(LadderLevel level, Natural m, Natural n) {
    switch (level) {
        case LadderLevel::succ: return m.succ();
        case LadderLevel::add: return nat_add(m, n);
        case LadderLevel::mul: return nat_mul(m, n);
        case LadderLevel::pow: return nat_pow(m, n);
    }
    throw DomainError("unknown ladder level");
}

}  // namespace dedekind
