#include <gtest/gtest.h>

#include <fstream>
#include <random>
#include <set>

#include <json.hpp>

#include "dedekind/lattice.hpp"

using namespace dedekind;

namespace {

/// Every test lattice used by the property checks.
std::vector<FiniteLattice> zoo() {
    std::vector<FiniteLattice> out{n5(), m3(), chain_lattice(1), chain_lattice(3), chain_lattice(6),
                                   integer_divisor_lattice(12), integer_divisor_lattice(60),
                                   free_distributive_3(), free_modular_3()};
    out.push_back(downset_lattice(2, {}));
    out.push_back(downset_lattice(3, {{0, 2}, {1, 2}}));
    out.push_back(downset_lattice(5, {{0, 2}, {1, 2}, {1, 3}, {3, 4}}));
    SubspaceAmbient plane(3, 2);
    std::vector<Subspace> lines;
    for (std::uint8_t t = 0; t < 3; ++t) lines.push_back(plane.span({{1, t}}));
    lines.push_back(plane.span({{0, 1}}));
    out.push_back(generate_sublattice(plane, lines).lattice);  // M4
    return out;
}

/// Closed under join and meet of the ambient lattice.
bool closed(const FiniteLattice& L, unsigned mask) {
    for (ElementId a = 0; a < L.size(); ++a)
        for (ElementId b = 0; b < L.size(); ++b)
            if (((mask >> a) & 1U) && ((mask >> b) & 1U))
                if (!((mask >> L.join(a, b)) & 1U) || !((mask >> L.meet(a, b)) & 1U)) return false;
    return true;
}

/// Intersection of all closed supersets of `gens`.
unsigned closure_oracle(const FiniteLattice& L, unsigned gens) {
    unsigned full = (1U << L.size()) - 1;
    unsigned acc = full;
    for (unsigned m = 0; m <= full; ++m)
        if ((m & gens) == gens && closed(L, m)) acc &= m;
    return acc;
}

unsigned mask_of(const Sublattice<ElementId>& s) {
    unsigned m = 0;
    for (ElementId e : s.elements) m |= 1U << e;
    return m;
}

/// Naive union/intersection closure with no canonical ordering.
std::set<std::uint64_t> naive_set_closure(std::set<std::uint64_t> s) {
    for (bool grew = true; grew;) {
        grew = false;
        std::vector<std::uint64_t> v(s.begin(), s.end());
        for (auto a : v)
            for (auto b : v) grew |= s.insert(a | b).second | s.insert(a & b).second;
    }
    return s;
}

}  // namespace

TEST(Dualgruppe, ChainAndPentagonPass) {
    EXPECT_TRUE(check_dualgruppe(chain_lattice(3).tables()).ok());
    EXPECT_TRUE(check_dualgruppe(n5().tables()).ok());
    EXPECT_TRUE(check_dualgruppe(m3().tables()).ok());
}

TEST(Dualgruppe, MutatedPentagonFailsAssociativity) {
    OperationTables t = n5().tables();
    // a join b is 1; pretend it is c (a <= c, but b is not below c)
    t.join[1][2] = 3;
    t.join[2][1] = 3;
    AxiomReport r = check_dualgruppe(t);
    EXPECT_FALSE(r.associative);
    ASSERT_TRUE(r.associative_witness.has_value());
    const Witness& w = *r.associative_witness;
    EXPECT_NE(t.join[t.join[w.a][w.b]][w.c], t.join[w.a][t.join[w.b][w.c]]);
    EXPECT_THROW(FiniteLattice::from_tables(t), DomainError);
}

TEST(Dualgruppe, WitnessIsFirstFailure) {
    OperationTables t = chain_lattice(3).tables();
    t.join[0][2] = 1;
    AxiomReport r = check_dualgruppe(t);
    EXPECT_FALSE(r.commutative);
    EXPECT_EQ(r.commutative_witness->a, 0u);
    EXPECT_EQ(r.commutative_witness->b, 2u);
}

TEST(Dualgruppe, MalformedTablesRejected) {
    OperationTables t = chain_lattice(2).tables();
    t.meet[0].push_back(0);
    EXPECT_THROW(check_dualgruppe(t), DomainError);
    t = chain_lattice(2).tables();
    t.join[1][1] = 7;
    EXPECT_THROW(check_dualgruppe(t), DomainError);
    EXPECT_THROW(FiniteLattice::from_order({"a", "b"}, {{true, false}, {false, true}}), DomainError);
}

TEST(Laws, ModularExamples) {
    EXPECT_TRUE(check_modular(m3()).holds);
    LawReport r = check_modular(n5());
    EXPECT_FALSE(r.holds);
    ASSERT_TRUE(r.witness.has_value());
    // the pentagon triple involves a, b and c = the two comparable elements and the lone one
    std::set<ElementId> ids{r.witness->a, r.witness->b, r.witness->c};
    EXPECT_EQ(ids, (std::set<ElementId>{1, 2, 3}));
}

TEST(Laws, DistributiveExamples) {
    EXPECT_TRUE(check_distributive(integer_divisor_lattice(12)).holds);
    DistributiveReport r = check_distributive(m3());
    EXPECT_FALSE(r.holds);
    ASSERT_TRUE(r.witness.has_value());
    std::set<ElementId> ids{r.witness->a, r.witness->b, r.witness->c};
    EXPECT_EQ(ids, (std::set<ElementId>{1, 2, 3}));
    EXPECT_TRUE(check_distributive(chain_lattice(1)).holds);
}

TEST(Laws, ModularEquivalence) {
    auto rn = modular_equivalence(n5());
    EXPECT_FALSE(rn.m1);
    EXPECT_FALSE(rn.m2);
    EXPECT_FALSE(rn.m);
    EXPECT_TRUE(check_m_equiv_m1m2(n5()));
    auto rm = modular_equivalence(m3());
    EXPECT_TRUE(rm.m1 && rm.m2 && rm.m);
    EXPECT_TRUE(check_m_equiv_m1m2(m3()));
}

TEST(Generators, PentagonAndDiamond) {
    EXPECT_EQ(n5().size(), 5u);
    EXPECT_EQ(m3().size(), 5u);
    EXPECT_EQ(n5().bottom(), 0u);
    EXPECT_EQ(m3().top(), 4u);
    EXPECT_EQ(m3().join(1, 2), 4u);
    EXPECT_EQ(n5().join(1, 3), 3u);
}

TEST(Sublattice, SingletonGenerator) {
    SetAmbient amb(4);
    auto s = generate_sublattice(amb, {0b0101});
    EXPECT_EQ(s.lattice.size(), 1u);
    EXPECT_EQ(s.lattice.label(0), "{0,2}");
    EXPECT_THROW(generate_sublattice(amb, {}), DomainError);
    EXPECT_THROW(generate_sublattice(amb, {0b100000}), DomainError);
}

TEST(Sublattice, FreeDistributiveHas18) {
    auto s = free_distributive_closure();
    EXPECT_EQ(s.lattice.size(), 18u);
    std::set<std::uint64_t> gens(s.elements.begin(), s.elements.end());
    std::set<std::uint64_t> g3;
    for (ElementId g : s.generators) g3.insert(s.elements[g]);
    EXPECT_EQ(naive_set_closure(g3), gens);
    EXPECT_TRUE(check_distributive(s.lattice).holds);
    EXPECT_TRUE(check_modular(s.lattice).holds);
}

TEST(Sublattice, SubspaceMeetIsIntersection) {
    // compare against explicit vector enumeration over F_2^4 and F_3^3
    std::mt19937 rng(7);
    for (auto [q, dim] : {std::pair{2u, 4u}, std::pair{3u, 3u}}) {
        SubspaceAmbient amb(q, dim);
        auto random_space = [&] {
            std::vector<SubspaceAmbient::Vector> vs(rng() % 3 + 1, SubspaceAmbient::Vector(dim));
            for (auto& v : vs)
                for (auto& x : v) x = static_cast<std::uint8_t>(rng() % q);
            return amb.span(vs);
        };
        auto members = [&](const Subspace& s) {
            std::set<SubspaceAmbient::Vector> out;
            unsigned total = 1;
            for (unsigned i = 0; i < s.dim(); ++i) total *= q;
            for (unsigned code = 0; code < total; ++code) {
                SubspaceAmbient::Vector v(dim, 0);
                unsigned c = code;
                for (const auto& row : s.rows) {
                    unsigned k = c % q;
                    c /= q;
                    for (unsigned j = 0; j < dim; ++j) v[j] = static_cast<std::uint8_t>((v[j] + k * row[j]) % q);
                }
                out.insert(v);
            }
            return out;
        };
        for (int trial = 0; trial < 60; ++trial) {
            Subspace u = random_space(), w = random_space();
            auto mu = members(u), mw = members(w);
            std::set<SubspaceAmbient::Vector> both;
            for (const auto& v : mu)
                if (mw.count(v)) both.insert(v);
            EXPECT_EQ(members(amb.meet(u, w)), both);
            EXPECT_TRUE(amb.valid(amb.join(u, w)));
        }
    }
}

TEST(Sublattice, ClosureMatchesBruteForceOracle) {
    std::vector<FiniteLattice> small{n5(), m3(), chain_lattice(4), integer_divisor_lattice(12),
                                     downset_lattice(3, {{0, 2}, {1, 2}})};
    for (const auto& L : small) {
        ASSERT_LE(L.size(), 6u);
        LatticeAmbient amb(L);
        for (unsigned gens = 1; gens < (1U << L.size()); ++gens) {
            std::vector<ElementId> g;
            for (ElementId i = 0; i < L.size(); ++i)
                if ((gens >> i) & 1U) g.push_back(i);
            auto s = generate_sublattice(amb, g);
            unsigned m = mask_of(s);
            EXPECT_EQ(m, closure_oracle(L, gens));
            EXPECT_EQ(m & gens, gens);  // extensive
            std::vector<ElementId> again(s.elements.begin(), s.elements.end());
            EXPECT_EQ(mask_of(generate_sublattice(amb, again)), m);  // idempotent
            for (ElementId extra = 0; extra < L.size(); ++extra) {  // monotone
                auto bigger = g;
                bigger.push_back(extra);
                EXPECT_EQ(mask_of(generate_sublattice(amb, bigger)) & m, m);
            }
        }
    }
}

TEST(FreeModular, TwentyEightElements) {
    const FiniteLattice& fm = free_modular_3();
    EXPECT_EQ(fm.size(), 28u);
    EXPECT_TRUE(check_dualgruppe(fm.tables()).ok());
    EXPECT_TRUE(check_modular(fm).holds);
    EXPECT_FALSE(check_distributive(fm).holds);
}

TEST(FreeModular, GeneratorsGenerateEverything) {
    const auto& r = free_modular_realization();
    ASSERT_EQ(r.closure.generators.size(), 3u);
    LatticeAmbient amb(r.closure.lattice);
    auto s = generate_sublattice(amb, r.closure.generators);
    EXPECT_EQ(s.lattice.size(), 28u);
    // no pair of generators suffices
    for (int skip = 0; skip < 3; ++skip) {
        std::vector<ElementId> two;
        for (int i = 0; i < 3; ++i)
            if (i != skip) two.push_back(r.closure.generators[static_cast<std::size_t>(i)]);
        EXPECT_LT(generate_sublattice(amb, two).lattice.size(), 28u);
    }
}

TEST(FreeModular, MatchesRecordedFixture) {
    std::ifstream in(std::string(DEDEKIND_FIXTURE_DIR) + "/fm3_realization.json");
    ASSERT_TRUE(in.good());
    auto fx = nlohmann::json::parse(in);
    const auto& r = free_modular_realization();
    SubspaceAmbient amb(r.field_size, r.dim);
    EXPECT_EQ(fx["field_size"].get<unsigned>(), r.field_size);
    EXPECT_EQ(fx["dim"].get<unsigned>(), r.dim);
    EXPECT_EQ(fx["blocks"].get<std::vector<unsigned>>(), r.blocks);
    for (std::size_t g = 0; g < 3; ++g) {
        std::string label = "<";
        for (std::size_t i = 0; i < fx["generators"][g].size(); ++i)
            label += (i ? "," : "") + fx["generators"][g][i].get<std::string>();
        EXPECT_EQ(amb.label(r.generators[g]), label + ">");
    }
    EXPECT_EQ(fx["element_count"].get<std::size_t>(), free_modular_3().size());
    EXPECT_EQ(fx["hasse_edge_count"].get<std::size_t>(), hasse_edges(free_modular_3()).size());
}

TEST(FreeModular, NoRealizationBelowHeightEight) {
    EXPECT_THROW(find_free_modular_realization(7), DomainError);
}

TEST(FreeModular, Deterministic) {
    auto again = find_free_modular_realization();
    EXPECT_EQ(again.closure.lattice, free_modular_3());
    EXPECT_EQ(to_dot(again.closure.lattice), to_dot(free_modular_3()));
}

TEST(Downsets, Examples) {
    EXPECT_EQ(downset_lattice(2, {}).size(), 4u);
    auto chain = downset_lattice(3, {{0, 1}, {1, 2}});
    EXPECT_EQ(chain.size(), 4u);
    EXPECT_EQ(hasse_edges(chain).size(), 3u);
    auto v = downset_lattice(3, {{0, 2}, {1, 2}});
    EXPECT_EQ(v.labels(), (std::vector<std::string>{"{}", "{0}", "{1}", "{0,1}", "{0,1,2}"}));
    EXPECT_THROW(downset_lattice(3, {{0, 1}, {1, 2}, {2, 0}}), DomainError);
    EXPECT_THROW(downset_lattice(2, {{0, 5}}), DomainError);
    EXPECT_THROW(downset_lattice(9, {}), DomainError);
}

TEST(Hasse, Examples) {
    EXPECT_EQ(hasse_edges(chain_lattice(2)).size(), 1u);
    auto e = hasse_edges(m3());
    EXPECT_EQ(e, (std::vector<std::pair<ElementId, ElementId>>{{0, 1}, {0, 2}, {0, 3}, {1, 4}, {2, 4}, {3, 4}}));
    EXPECT_EQ(hasse_edges(free_modular_3()).size(), 48u);
}

TEST(Hasse, DotOutput) {
    std::string dot = to_dot(m3(), "M3");
    EXPECT_NE(dot.find("digraph \"M3\""), std::string::npos);
    EXPECT_NE(dot.find("rankdir=BT"), std::string::npos);
    EXPECT_NE(dot.find("n0 -> n1;"), std::string::npos);
    EXPECT_EQ(dot, to_dot(m3(), "M3"));
}

TEST(Properties, SoundnessChainAndDualLaws) {
    for (const auto& L : zoo()) {
        auto d = check_distributive(L);
        if (d.holds) {
            EXPECT_TRUE(check_modular(L).holds);
        }
        EXPECT_EQ(d.d1_holds, d.d2_holds);
        EXPECT_TRUE(check_m_equiv_m1m2(L));
        EXPECT_TRUE(check_dualgruppe(L.tables()).ok());
    }
}

TEST(Properties, OrderSanity) {
    for (const auto& L : zoo())
        for (ElementId x = 0; x < L.size(); ++x)
            for (ElementId y = 0; y < L.size(); ++y) {
                EXPECT_TRUE(L.leq(L.meet(x, y), x));
                EXPECT_TRUE(L.leq(x, L.join(x, y)));
            }
}

TEST(Properties, PentagonIsIndependenceWitness) {
    EXPECT_TRUE(check_dualgruppe(n5().tables()).ok());
    EXPECT_FALSE(check_modular(n5()).holds);
    EXPECT_TRUE(check_modular(m3()).holds);
    EXPECT_FALSE(check_distributive(m3()).holds);
}
