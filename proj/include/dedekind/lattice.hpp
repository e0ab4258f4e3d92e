#pragma once

/**
 * @file lattice.hpp
 * @brief Finite lattices (Dualgruppen) given by explicit join/meet tables.
 *
 * Law checks are exhaustive over all pairs and triples in lexicographic
 * order, so a reported witness is always the first failing triple.
 * Throughout, "join" plays the role of the lcm-like operation and "meet"
 * the gcd-like one; the order is x <= y  <=>  meet(x, y) == x.
 */

#include <algorithm>
#include <array>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "dedekind/error.hpp"

namespace dedekind {

using ElementId = std::size_t;
using OpTable = std::vector<std::vector<ElementId>>;

/// Two binary operations on {0, ..., n-1}; nothing beyond shape is assumed.
struct OperationTables {
    std::vector<std::string> labels;
    OpTable join;
    OpTable meet;

    std::size_t size() const { return labels.size(); }
    friend bool operator==(const OperationTables&, const OperationTables&) = default;
};

/// First failing instance of a law: element ids and which operation broke it.
struct Witness {
    ElementId a = 0, b = 0, c = 0;
    std::string op;
    friend bool operator==(const Witness&, const Witness&) = default;
};

/// Throws DomainError unless both tables are n x n with entries below n.
inline void validate_shape(const OperationTables& t) {
    const std::size_t n = t.labels.size();
    if (n == 0) throw DomainError("lattice tables: empty carrier");
    for (const OpTable* table : {&t.join, &t.meet}) {
        if (table->size() != n) throw DomainError("lattice tables: wrong row count");
        for (const auto& row : *table) {
            if (row.size() != n) throw DomainError("lattice tables: wrong column count");
            for (ElementId v : row)
                if (v >= n) throw DomainError("lattice tables: entry out of range");
        }
    }
}

struct AxiomReport {
    bool commutative = true;
    bool associative = true;
    bool absorptive = true;
    std::optional<Witness> commutative_witness, associative_witness, absorptive_witness;

    bool ok() const { return commutative && associative && absorptive; }
};

/// Exhaustive check of commutativity, associativity and absorption for both operations.
inline AxiomReport check_dualgruppe(const OperationTables& t) {
    validate_shape(t);
    const std::size_t n = t.size();
    const auto& J = t.join;
    const auto& M = t.meet;
    AxiomReport r;
    auto fail = [](bool& flag, std::optional<Witness>& w, Witness value) {
        if (flag) {
            flag = false;
            w = std::move(value);
        }
    };
    for (ElementId a = 0; a < n; ++a)
        for (ElementId b = 0; b < n; ++b) {
            if (J[a][b] != J[b][a]) fail(r.commutative, r.commutative_witness, {a, b, b, "join"});
            if (M[a][b] != M[b][a]) fail(r.commutative, r.commutative_witness, {a, b, b, "meet"});
            if (J[a][M[a][b]] != a) fail(r.absorptive, r.absorptive_witness, {a, b, b, "join"});
            if (M[a][J[a][b]] != a) fail(r.absorptive, r.absorptive_witness, {a, b, b, "meet"});
            for (ElementId c = 0; c < n; ++c) {
                if (J[J[a][b]][c] != J[a][J[b][c]]) fail(r.associative, r.associative_witness, {a, b, c, "join"});
                if (M[M[a][b]][c] != M[a][M[b][c]]) fail(r.associative, r.associative_witness, {a, b, c, "meet"});
            }
        }
    return r;
}

class FiniteLattice {
public:
    /// Rejects tables that fail any Dualgruppe axiom.
    static FiniteLattice from_tables(OperationTables t) {
        AxiomReport r = check_dualgruppe(t);
        if (!r.ok()) {
            std::string which = !r.commutative ? "commutativity" : (!r.associative ? "associativity" : "absorption");
            throw DomainError("tables are not a lattice: " + which + " fails");
        }
        return FiniteLattice(std::move(t));
    }

    /// Lattice of a finite partial order; throws if some pair lacks a join or meet.
    static FiniteLattice from_order(std::vector<std::string> labels, const std::vector<std::vector<bool>>& leq) {
        const std::size_t n = labels.size();
        if (leq.size() != n) throw DomainError("order matrix has the wrong size");
        for (std::size_t i = 0; i < n; ++i) {
            if (leq[i].size() != n || !leq[i][i]) throw DomainError("order relation is not reflexive");
            for (std::size_t j = 0; j < n; ++j) {
                if (i != j && leq[i][j] && leq[j][i]) throw DomainError("order relation is not antisymmetric");
                for (std::size_t k = 0; k < n; ++k)
                    if (leq[i][j] && leq[j][k] && !leq[i][k]) throw DomainError("order relation is not transitive");
            }
        }
        auto extremal = [&](ElementId a, ElementId b, bool upper) -> ElementId {
            std::vector<ElementId> bounds;
            for (ElementId z = 0; z < n; ++z)
                if (upper ? (leq[a][z] && leq[b][z]) : (leq[z][a] && leq[z][b])) bounds.push_back(z);
            for (ElementId z : bounds) {
                bool best = std::all_of(bounds.begin(), bounds.end(),
                                        [&](ElementId w) { return upper ? leq[z][w] : leq[w][z]; });
                if (best) return z;
            }
            throw DomainError("order has no " + std::string(upper ? "join" : "meet") + " for " + labels[a] + ", " +
                              labels[b]);
        };
        OperationTables t{{}, OpTable(n, std::vector<ElementId>(n)), OpTable(n, std::vector<ElementId>(n))};
        for (ElementId a = 0; a < n; ++a)
            for (ElementId b = 0; b < n; ++b) {
                t.join[a][b] = extremal(a, b, true);
                t.meet[a][b] = extremal(a, b, false);
            }
        t.labels = std::move(labels);
        return from_tables(std::move(t));
    }

    std::size_t size() const { return t_.size(); }
    const std::string& label(ElementId i) const { return t_.labels.at(i); }
    const std::vector<std::string>& labels() const { return t_.labels; }
    const OperationTables& tables() const { return t_; }

    ElementId join(ElementId a, ElementId b) const { return t_.join[a][b]; }
    ElementId meet(ElementId a, ElementId b) const { return t_.meet[a][b]; }
    bool leq(ElementId a, ElementId b) const { return t_.meet[a][b] == a; }

    ElementId bottom() const {
        ElementId x = 0;
        for (ElementId i = 1; i < size(); ++i) x = meet(x, i);
        return x;
    }

    ElementId top() const {
        ElementId x = 0;
        for (ElementId i = 1; i < size(); ++i) x = join(x, i);
        return x;
    }

    friend bool operator==(const FiniteLattice&, const FiniteLattice&) = default;

private:
    explicit FiniteLattice(OperationTables t) : t_(std::move(t)) {}

    OperationTables t_;
};

struct LawReport {
    bool holds = true;
    std::optional<Witness> witness;
};

/// [a meet (b join c)] join (b meet c) == [a join (b meet c)] meet (b join c) for all triples.
inline LawReport check_modular(const FiniteLattice& L) {
    const std::size_t n = L.size();
    for (ElementId a = 0; a < n; ++a)
        for (ElementId b = 0; b < n; ++b)
            for (ElementId c = 0; c < n; ++c) {
                ElementId lhs = L.join(L.meet(a, L.join(b, c)), L.meet(b, c));
                ElementId rhs = L.meet(L.join(a, L.meet(b, c)), L.join(b, c));
                if (lhs != rhs) return {false, Witness{a, b, c, "M"}};
            }
    return {};
}

struct DistributiveReport {
    bool holds = true;
    bool d1_holds = true;
    bool d2_holds = true;
    std::optional<Witness> witness;
};

/// D1: (a join b) meet (a join c) == a join (b meet c);  D2: the dual.
inline DistributiveReport check_distributive(const FiniteLattice& L) {
    const std::size_t n = L.size();
    DistributiveReport r;
    for (ElementId a = 0; a < n; ++a)
        for (ElementId b = 0; b < n; ++b)
            for (ElementId c = 0; c < n; ++c) {
                if (r.d1_holds && L.meet(L.join(a, b), L.join(a, c)) != L.join(a, L.meet(b, c))) {
                    r.d1_holds = false;
                    if (!r.witness) r.witness = Witness{a, b, c, "D1"};
                }
                if (r.d2_holds && L.join(L.meet(a, b), L.meet(a, c)) != L.meet(a, L.join(b, c))) {
                    r.d2_holds = false;
                    if (!r.witness) r.witness = Witness{a, b, c, "D2"};
                }
            }
    r.holds = r.d1_holds && r.d2_holds;
    return r;
}

/// Verdicts of the two gcd/lcm modular identities and of (M), read as laws on L.
struct ModularEquivalenceReport {
    bool m1 = true;
    bool m2 = true;
    bool m = true;
    bool equivalent() const { return (m1 && m2) == m; }
};

/**
 * gcd becomes meet and lcm becomes join:
 *   M1: meet(join(a,b), join(a,c)) == join(a, meet(b, join(a,c)))
 *   M2: join(meet(a,b), meet(a,c)) == meet(a, join(b, meet(a,c)))
 */
inline ModularEquivalenceReport modular_equivalence(const FiniteLattice& L) {
    const std::size_t n = L.size();
    ModularEquivalenceReport r;
    for (ElementId a = 0; a < n; ++a)
        for (ElementId b = 0; b < n; ++b)
            for (ElementId c = 0; c < n; ++c) {
                if (L.meet(L.join(a, b), L.join(a, c)) != L.join(a, L.meet(b, L.join(a, c)))) r.m1 = false;
                if (L.join(L.meet(a, b), L.meet(a, c)) != L.meet(a, L.join(b, L.meet(a, c)))) r.m2 = false;
            }
    r.m = check_modular(L).holds;
    return r;
}

inline bool check_m_equiv_m1m2(const FiniteLattice& L) { return modular_equivalence(L).equivalent(); }

namespace detail {

inline FiniteLattice five_element(const std::vector<std::pair<ElementId, ElementId>>& strict_order) {
    std::vector<std::vector<bool>> leq(5, std::vector<bool>(5, false));
    for (ElementId i = 0; i < 5; ++i) {
        leq[i][i] = true;
        leq[0][i] = true;
        leq[i][4] = true;
    }
    for (auto [lo, hi] : strict_order) leq[lo][hi] = true;
    return FiniteLattice::from_order({"0", "a", "b", "c", "1"}, leq);
}

}  // namespace detail

/// The pentagon: 0 < a < c < 1 and 0 < b < 1.
inline FiniteLattice n5() { return detail::five_element({{1, 3}}); }

/// The diamond: three pairwise incomparable atoms a, b, c.
inline FiniteLattice m3() { return detail::five_element({}); }

inline FiniteLattice chain_lattice(std::size_t n) {
    if (n == 0) throw DomainError("chain needs at least one element");
    std::vector<std::string> labels;
    std::vector<std::vector<bool>> leq(n, std::vector<bool>(n, false));
    for (std::size_t i = 0; i < n; ++i) {
        labels.push_back(std::to_string(i));
        for (std::size_t j = i; j < n; ++j) leq[i][j] = true;
    }
    return FiniteLattice::from_order(std::move(labels), leq);
}

/// Divisors of n ordered by divisibility (meet = gcd, join = lcm).
inline FiniteLattice integer_divisor_lattice(unsigned long n) {
    if (n == 0) throw DomainError("divisor lattice needs n >= 1");
    std::vector<unsigned long> divs;
    for (unsigned long d = 1; d <= n; ++d)
        if (n % d == 0) divs.push_back(d);
    std::vector<std::string> labels;
    std::vector<std::vector<bool>> leq(divs.size(), std::vector<bool>(divs.size()));
    for (std::size_t i = 0; i < divs.size(); ++i) {
        labels.push_back(std::to_string(divs[i]));
        for (std::size_t j = 0; j < divs.size(); ++j) leq[i][j] = divs[j] % divs[i] == 0;
    }
    return FiniteLattice::from_order(std::move(labels), leq);
}

// ---------------------------------------------------------------------------
// Ambients and sublattice generation
// ---------------------------------------------------------------------------

/// Subsets of {0, ..., universe_size-1} as bitsets; join = union, meet = intersection.
struct SetAmbient {
    using element_type = std::uint64_t;

    unsigned universe_size = 0;

    explicit SetAmbient(unsigned n) : universe_size(n) {
        if (n > 63) throw DomainError("set ambient supports at most 63 points");
    }

    bool valid(element_type s) const { return (s >> universe_size) == 0; }
    element_type join(element_type a, element_type b) const { return a | b; }
    element_type meet(element_type a, element_type b) const { return a & b; }

    /// Canonical order is the bitset value.
    bool less(element_type a, element_type b) const { return a < b; }

    std::string label(element_type s) const {
        std::string out = "{";
        bool first = true;
        for (unsigned i = 0; i < universe_size; ++i)
            if ((s >> i) & 1U) {
                if (!first) out += ",";
                out += std::to_string(i);
                first = false;
            }
        return out + "}";
    }
};

/// A subspace of F_q^dim stored as its reduced row-echelon basis.
struct Subspace {
    std::vector<std::vector<std::uint8_t>> rows;

    std::size_t dim() const { return rows.size(); }
    friend bool operator==(const Subspace&, const Subspace&) = default;
};

/// Subspaces of F_q^dim for a small prime q; join = sum, meet = intersection.
class SubspaceAmbient {
public:
    using element_type = Subspace;
    using Vector = std::vector<std::uint8_t>;

    SubspaceAmbient(unsigned field_size, unsigned dim) : q_(field_size), dim_(dim) {
        if (field_size < 2 || field_size > 7) throw DomainError("subspace ambient supports primes 2..7");
        for (unsigned d = 2; d * d <= field_size; ++d)
            if (field_size % d == 0) throw DomainError("field size must be prime");
        if (dim == 0 || dim > 16) throw DomainError("subspace dimension must be in 1..16");
    }

    unsigned field_size() const { return q_; }
    unsigned dimension() const { return dim_; }

    /// Canonical basis of the span of arbitrary vectors.
    Subspace span(std::vector<Vector> vs) const {
        for (auto& v : vs) {
            if (v.size() != dim_) throw DomainError("vector has the wrong length");
            for (auto& x : v) x = static_cast<std::uint8_t>(x % q_);
        }
        std::size_t rank = 0;
        for (unsigned col = 0; col < dim_ && rank < vs.size(); ++col) {
            std::size_t piv = rank;
            while (piv < vs.size() && vs[piv][col] == 0) ++piv;
            if (piv == vs.size()) continue;
            std::swap(vs[rank], vs[piv]);
            unsigned inv = inverse(vs[rank][col]);
            for (auto& x : vs[rank]) x = static_cast<std::uint8_t>((x * inv) % q_);
            for (std::size_t r = 0; r < vs.size(); ++r) {
                if (r == rank || vs[r][col] == 0) continue;
                unsigned f = vs[r][col];
                for (unsigned k = 0; k < dim_; ++k)
                    vs[r][k] = static_cast<std::uint8_t>((vs[r][k] + q_ * q_ - f * vs[rank][k]) % q_);
            }
            ++rank;
        }
        vs.resize(rank);
        return Subspace{std::move(vs)};
    }

    bool valid(const Subspace& s) const { return span(s.rows) == s; }

    Subspace join(const Subspace& a, const Subspace& b) const {
        std::vector<Vector> vs = a.rows;
        vs.insert(vs.end(), b.rows.begin(), b.rows.end());
        return span(std::move(vs));
    }

    /// Orthogonal complement under the standard dot product.
    Subspace perp(const Subspace& s) const {
        std::vector<int> pivot_of_col(dim_, -1);
        for (std::size_t r = 0; r < s.rows.size(); ++r)
            for (unsigned c = 0; c < dim_; ++c)
                if (s.rows[r][c] != 0) {
                    pivot_of_col[c] = static_cast<int>(r);
                    break;
                }
        std::vector<Vector> basis;
        for (unsigned free = 0; free < dim_; ++free) {
            if (pivot_of_col[free] >= 0) continue;
            Vector v(dim_, 0);
            v[free] = 1;
            for (unsigned c = 0; c < dim_; ++c)
                if (pivot_of_col[c] >= 0)
                    v[c] = static_cast<std::uint8_t>((q_ - s.rows[static_cast<std::size_t>(pivot_of_col[c])][free]) % q_);
            basis.push_back(std::move(v));
        }
        return span(std::move(basis));
    }

    /// (U^perp + W^perp)^perp; the dot product is nondegenerate so this is U cap W.
    Subspace meet(const Subspace& a, const Subspace& b) const { return perp(join(perp(a), perp(b))); }

    /// Lower dimension first, then by basis rows.
    bool less(const Subspace& a, const Subspace& b) const {
        if (a.dim() != b.dim()) return a.dim() < b.dim();
        return a.rows < b.rows;
    }

    std::string label(const Subspace& s) const {
        std::string out = "<";
        for (std::size_t r = 0; r < s.rows.size(); ++r) {
            if (r) out += ",";
            for (auto x : s.rows[r]) out += static_cast<char>('0' + x);
        }
        return out + ">";
    }

private:
    unsigned inverse(unsigned a) const {
        for (unsigned x = 1; x < q_; ++x)
            if ((a * x) % q_ == 1) return x;
        throw DomainError("no inverse");
    }

    unsigned q_;
    unsigned dim_;
};

/// Elements of an existing finite lattice, by id.
struct LatticeAmbient {
    using element_type = ElementId;

    const FiniteLattice* lattice;

    explicit LatticeAmbient(const FiniteLattice& L) : lattice(&L) {}

    bool valid(ElementId e) const { return e < lattice->size(); }
    ElementId join(ElementId a, ElementId b) const { return lattice->join(a, b); }
    ElementId meet(ElementId a, ElementId b) const { return lattice->meet(a, b); }
    bool less(ElementId a, ElementId b) const { return a < b; }
    std::string label(ElementId e) const { return lattice->label(e); }
};

/// A generated sublattice with the ambient elements behind each id.
template <class E>
struct Sublattice {
    FiniteLattice lattice;
    std::vector<E> elements;
    std::vector<ElementId> generators;
};

/**
 * Least subset of the ambient containing `generators` and closed under its
 * join and meet. Ids follow the ambient's canonical order.
 */
template <class Ambient>
Sublattice<typename Ambient::element_type> generate_sublattice(const Ambient& ambient,
                                                              const std::vector<typename Ambient::element_type>& generators) {
    using E = typename Ambient::element_type;
    if (generators.empty()) throw DomainError("generate_sublattice needs at least one generator");
    auto cmp = [&ambient](const E& a, const E& b) { return ambient.less(a, b); };
    std::set<E, decltype(cmp)> closed(cmp);
    for (const auto& g : generators) {
        if (!ambient.valid(g)) throw DomainError("generator is not an element of the ambient");
        closed.insert(g);
    }
    std::vector<E> frontier(closed.begin(), closed.end());
    while (!frontier.empty()) {
        std::vector<E> current(closed.begin(), closed.end());
        std::set<E, decltype(cmp)> fresh(cmp);
        for (const auto& a : frontier)
            for (const auto& b : current)
                for (E e : {ambient.join(a, b), ambient.meet(a, b)})
                    if (!closed.count(e)) fresh.insert(std::move(e));
        for (const auto& e : fresh) closed.insert(e);
        frontier.assign(fresh.begin(), fresh.end());
    }

    std::vector<E> elements(closed.begin(), closed.end());
    std::map<E, ElementId, decltype(cmp)> id(cmp);
    for (ElementId i = 0; i < elements.size(); ++i) id.emplace(elements[i], i);
    const std::size_t n = elements.size();
    OperationTables t{{}, OpTable(n, std::vector<ElementId>(n)), OpTable(n, std::vector<ElementId>(n))};
    for (ElementId i = 0; i < n; ++i) {
        t.labels.push_back(ambient.label(elements[i]));
        for (ElementId j = 0; j < n; ++j) {
            t.join[i][j] = id.at(ambient.join(elements[i], elements[j]));
            t.meet[i][j] = id.at(ambient.meet(elements[i], elements[j]));
        }
    }
    std::vector<ElementId> gen_ids;
    for (const auto& g : generators) gen_ids.push_back(id.at(g));
    return {FiniteLattice::from_tables(std::move(t)), std::move(elements), std::move(gen_ids)};
}

// ---------------------------------------------------------------------------
// Free lattices on three generators
// ---------------------------------------------------------------------------

/// A triple of subspaces whose generated sublattice is the free modular lattice FM(3).
struct FreeModularRealization {
    unsigned field_size = 0;
    unsigned dim = 0;
    std::vector<unsigned> blocks;  // indices into the block catalogue, see below
    std::array<Subspace, 3> generators;
    Sublattice<Subspace> closure;
};

namespace detail {

/// 1-dim blocks: a line lying in exactly the generators of a nonempty proper subset.
inline constexpr std::array<unsigned, 6> kLineBlockMembers = {0b001, 0b010, 0b100, 0b011, 0b101, 0b110};
/// Catalogue index of the 2-dim block: three distinct lines in a plane, one per generator.
inline constexpr unsigned kThreeLinesBlock = 6;

inline unsigned block_dim(unsigned block) { return block == kThreeLinesBlock ? 2 : 1; }

/// Direct sum of the chosen blocks as three subspaces of F_q^dim.
inline std::array<Subspace, 3> assemble_blocks(const SubspaceAmbient& amb, const std::vector<unsigned>& blocks) {
    const unsigned dim = amb.dimension();
    std::array<std::vector<SubspaceAmbient::Vector>, 3> gens;
    auto unit = [dim](unsigned i) {
        SubspaceAmbient::Vector v(dim, 0);
        v[i] = 1;
        return v;
    };
    unsigned offset = 0;
    for (unsigned b : blocks) {
        if (b == kThreeLinesBlock) {
            SubspaceAmbient::Vector sum = unit(offset);
            sum[offset + 1] = 1;
            gens[0].push_back(unit(offset));
            gens[1].push_back(unit(offset + 1));
            gens[2].push_back(sum);
        } else {
            for (unsigned g = 0; g < 3; ++g)
                if ((kLineBlockMembers[b] >> g) & 1U) gens[g].push_back(unit(offset));
        }
        offset += block_dim(b);
    }
    return {amb.span(gens[0]), amb.span(gens[1]), amb.span(gens[2])};
}

}  // namespace detail

/**
 * Bounded search for a subspace triple generating a 28-element lattice.
 *
 * Candidates are direct sums of distinct catalogue blocks, visited by field
 * size, then total dimension, then block subset. Every 3-generated modular
 * lattice is a quotient of FM(3), so reaching 28 elements means the
 * closure is FM(3) itself. FM(3) has height 8, so no triple in dimension
 * below 8 can succeed.
 */
inline FreeModularRealization find_free_modular_realization(unsigned max_dim = 8,
                                                            const std::vector<unsigned>& fields = {2, 3}) {
    constexpr std::size_t kTarget = 28;
    constexpr unsigned kBlocks = 7;
    std::size_t tried = 0;
    for (unsigned q : fields)
        for (unsigned dim = 1; dim <= max_dim; ++dim) {
            SubspaceAmbient amb(q, dim);
            for (unsigned mask = 1; mask < (1U << kBlocks); ++mask) {
                std::vector<unsigned> blocks;
                unsigned total = 0;
                for (unsigned b = 0; b < kBlocks; ++b)
                    if ((mask >> b) & 1U) {
                        blocks.push_back(b);
                        total += detail::block_dim(b);
                    }
                if (total != dim) continue;
                ++tried;
                auto gens = detail::assemble_blocks(amb, blocks);
                auto closure = generate_sublattice(amb, std::vector<Subspace>(gens.begin(), gens.end()));
                if (closure.lattice.size() == kTarget)
                    return {q, dim, std::move(blocks), std::move(gens), std::move(closure)};
            }
        }
    throw DomainError("free modular search exhausted " + std::to_string(tried) +
                      " block configurations up to dimension " + std::to_string(max_dim) +
                      " without a 28-element closure");
}

/// The cached realization found by the default search.
inline const FreeModularRealization& free_modular_realization() {
    static const FreeModularRealization r = find_free_modular_realization();
    return r;
}

inline const FiniteLattice& free_modular_3() { return free_modular_realization().closure.lattice; }

/// Closure of the three "coordinate" subsets of the 8 points of {0,1}^3.
inline Sublattice<SetAmbient::element_type> free_distributive_closure() {
    SetAmbient amb(8);
    std::vector<std::uint64_t> gens(3, 0);
    for (unsigned p = 0; p < 8; ++p)
        for (unsigned g = 0; g < 3; ++g)
            if ((p >> g) & 1U) gens[g] |= std::uint64_t{1} << p;
    return generate_sublattice(amb, gens);
}

inline FiniteLattice free_distributive_3() { return free_distributive_closure().lattice; }

// ---------------------------------------------------------------------------
// Down-set lattices, Hasse diagrams, DOT
// ---------------------------------------------------------------------------

/// Lattice of down-closed subsets of a poset given by covering pairs (lower, upper).
inline FiniteLattice downset_lattice(std::size_t n, const std::vector<std::pair<std::size_t, std::size_t>>& covers) {
    if (n > 8) throw DomainError("downset_lattice supports at most 8 poset elements");
    std::vector<std::vector<bool>> reach(n, std::vector<bool>(n, false));
    for (auto [lo, hi] : covers) {
        if (lo >= n || hi >= n) throw DomainError("covering pair out of range");
        reach[lo][hi] = true;
    }
    for (std::size_t k = 0; k < n; ++k)
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                if (reach[i][k] && reach[k][j]) reach[i][j] = true;
    for (std::size_t i = 0; i < n; ++i)
        if (reach[i][i]) throw DomainError("covering relation has a cycle");

    std::vector<std::uint64_t> downsets;
    for (std::uint64_t m = 0; m < (std::uint64_t{1} << n); ++m) {
        bool closed = true;
        for (auto [lo, hi] : covers)
            if (((m >> hi) & 1U) && !((m >> lo) & 1U)) closed = false;
        if (closed) downsets.push_back(m);
    }
    SetAmbient amb(static_cast<unsigned>(n));
    std::map<std::uint64_t, ElementId> id;
    for (ElementId i = 0; i < downsets.size(); ++i) id[downsets[i]] = i;
    const std::size_t size = downsets.size();
    OperationTables t{{}, OpTable(size, std::vector<ElementId>(size)), OpTable(size, std::vector<ElementId>(size))};
    for (ElementId i = 0; i < size; ++i) {
        t.labels.push_back(amb.label(downsets[i]));
        for (ElementId j = 0; j < size; ++j) {
            t.join[i][j] = id.at(downsets[i] | downsets[j]);
            t.meet[i][j] = id.at(downsets[i] & downsets[j]);
        }
    }
    return FiniteLattice::from_tables(std::move(t));
}

/// Covering pairs (lower, upper), sorted.
inline std::vector<std::pair<ElementId, ElementId>> hasse_edges(const FiniteLattice& L) {
    const std::size_t n = L.size();
    std::vector<std::pair<ElementId, ElementId>> edges;
    for (ElementId x = 0; x < n; ++x)
        for (ElementId y = 0; y < n; ++y) {
            if (x == y || !L.leq(x, y)) continue;
            bool covered = true;
            for (ElementId z = 0; z < n && covered; ++z)
                if (z != x && z != y && L.leq(x, z) && L.leq(z, y)) covered = false;
            if (covered) edges.emplace_back(x, y);
        }
    return edges;
}

inline std::string dot_escape(const std::string& s) {
    std::string out;
    for (char c : s) {
        if (c == '"' || c == '\\') out += '\\';
        out += c;
    }
    return out;
}

/// Hasse diagram as a DOT digraph; edges point from lower to upper element.
inline std::string to_dot(const FiniteLattice& L, const std::string& name = "lattice") {
    std::ostringstream os;
    os << "digraph \"" << dot_escape(name) << "\" {\n";
    os << "  rankdir=BT;\n";
    os << "  node [shape=plaintext];\n";
    for (ElementId i = 0; i < L.size(); ++i) os << "  n" << i << " [label=\"" << dot_escape(L.label(i)) << "\"];\n";
    for (auto [lo, hi] : hasse_edges(L)) os << "  n" << lo << " -> n" << hi << ";\n";
    os << "}\n";
    return os.str();
}

}  // namespace dedekind
