#include <gtest/gtest.h>

#include <random>
#include <vector>

#include "dedekind/cuts.hpp"

using namespace dedekind;

namespace {

BigRational q(long n, long d = 1) { return BigRational(BigInt(n), BigInt(d)); }

const Cut& sqrt2() {
    static const Cut c = cut_root(2, q(2));
    return c;
}
const Cut& sqrt3() {
    static const Cut c = cut_root(2, q(3));
    return c;
}
const Cut& cbrt2() {
    static const Cut c = cut_root(3, q(2));
    return c;
}

int cmp(const Cut& a, const Cut& b) {
    auto o = cut_cmp(a, b);
    return o < 0 ? -1 : (o > 0 ? 1 : 0);
}

bool eq(const Cut& a, const Cut& b) { return cmp(a, b) == 0; }

/// Values drawn from {small rationals, +-sqrt2, sqrt3, cbrt2}.
Cut random_cut(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> kind(0, 4);
    std::uniform_int_distribution<long> num(-9, 9), den(1, 5);
    switch (kind(rng)) {
        case 0: return cut_of_rational(q(num(rng), den(rng)));
        case 1: return sqrt2();
        case 2: return sqrt3();
        case 3: return cbrt2();
        default: return cut_neg(sqrt2());
    }
}

}  // namespace

TEST(CutOfRational, StrictLowerClass) {
    Cut h = cut_of_rational(q(1, 2));
    EXPECT_TRUE(cut_member(h, q(1, 3)));
    EXPECT_FALSE(cut_member(h, q(1, 2)));
    Cut z = cut_of_rational(q(0));
    EXPECT_TRUE(cut_member(z, q(-1)));
    EXPECT_FALSE(cut_member(z, q(1)));
    Cut n = cut_of_rational(q(-3, 4));
    EXPECT_TRUE(cut_member(n, q(-1)));
    EXPECT_FALSE(cut_member(n, q(0)));
    EXPECT_FALSE(cut_member(cut_of_rational(q(5)), q(5)));
}

TEST(CutRoot, PerfectPowersAreRational) {
    Cut c = cut_root(2, q(4));
    ASSERT_TRUE(c.is_rational());
    EXPECT_EQ(c.rational_value(), q(2));
    EXPECT_EQ(cut_root(3, q(8, 27)).rational_value(), q(2, 3));
}

TEST(CutRoot, SqrtTwoRepresentation) {
    const Cut& c = sqrt2();
    ASSERT_TRUE(c.is_algebraic());
    EXPECT_EQ(c.algebraic_value().poly, (IntPolynomial{-2, 0, 1}));
    EXPECT_EQ(c.algebraic_value().lo, q(1));
    EXPECT_EQ(c.algebraic_value().hi, q(2));
    // (7/5)^2 = 49/25 < 2
    EXPECT_TRUE(cut_member(c, q(7, 5)));
    EXPECT_TRUE(cut_member(c, q(1)));
    // (3/2)^2 = 9/4 > 2
    EXPECT_FALSE(cut_member(c, q(3, 2)));
}

TEST(CutRoot, CubeRootOfTwo) {
    // (5/4)^3 = 125/64 < 2, (13/10)^3 = 2197/1000 > 2
    EXPECT_TRUE(cut_member(cbrt2(), q(5, 4)));
    EXPECT_FALSE(cut_member(cbrt2(), q(13, 10)));
}

TEST(CutRoot, Errors) {
    EXPECT_THROW(cut_root(2, q(0)), DomainError);
    EXPECT_THROW(cut_root(2, q(-2)), DomainError);
    EXPECT_THROW(cut_root(1, q(2)), DomainError);
}

TEST(CutAlgebraic, ConstructionValidates) {
    EXPECT_THROW(Cut::algebraic(IntPolynomial{-2, 0, 1}, q(2), q(1)), DomainError);
    EXPECT_THROW(Cut::algebraic(IntPolynomial{-2, 0, 1}, q(-2), q(2)), DomainError);
    EXPECT_THROW(Cut::algebraic(IntPolynomial{5}, q(0), q(1)), DomainError);
    EXPECT_THROW(Cut::algebraic(IntPolynomial(), q(0), q(1)), DomainError);
    // rational root inside the interval collapses to the rational variant
    Cut r = Cut::algebraic(IntPolynomial{-3, 2} * IntPolynomial{-2, 0, 1}, q(29, 20), q(8, 5));
    ASSERT_TRUE(r.is_rational());
    EXPECT_EQ(r.rational_value(), q(3, 2));
    // squares are reduced to the squarefree part
    Cut s = Cut::algebraic(IntPolynomial{-2, 0, 1} * IntPolynomial{-2, 0, 1}, q(0), q(3));
    EXPECT_EQ(s.algebraic_value().poly, (IntPolynomial{-2, 0, 1}));
    // root at an endpoint of another factor is moved off
    Cut t = Cut::algebraic(IntPolynomial{-2, 0, 1} * IntPolynomial{-1, 1}, q(1), q(2));
    EXPECT_TRUE(eq(t, sqrt2()));
}

TEST(CutCmp, Examples) {
    EXPECT_LT(cmp(sqrt2(), cut_of_rational(q(3, 2))), 0);
    EXPECT_GT(cmp(cut_of_rational(q(3, 2)), sqrt2()), 0);
    EXPECT_EQ(cmp(sqrt2(), sqrt2()), 0);
    EXPECT_LT(cmp(sqrt2(), sqrt3()), 0);
    EXPECT_GT(cmp(sqrt3(), cbrt2()), 0);
    Cut p = cut_mul(sqrt2(), sqrt2());
    EXPECT_TRUE(p.is_rational());
    EXPECT_TRUE(eq(p, cut_of_rational(q(2))));
}

TEST(CutAdd, Examples) {
    Cut a = cut_add(sqrt2(), cut_of_rational(q(0)));
    EXPECT_TRUE(eq(a, sqrt2()));
    EXPECT_EQ(a.algebraic_value().poly, sqrt2().algebraic_value().poly);
    Cut b = cut_add(cut_of_rational(q(1, 2)), cut_of_rational(q(1, 3)));
    ASSERT_TRUE(b.is_rational());
    EXPECT_EQ(b.rational_value(), q(5, 6));
    // (2 sqrt2)^2 = 8
    EXPECT_TRUE(eq(cut_add(sqrt2(), sqrt2()), cut_root(2, q(8))));
}

TEST(CutAdd, ShiftsAndNegatives) {
    Cut s = cut_add(sqrt2(), cut_of_rational(q(1, 3)));
    // sqrt2 + 1/3 in (1.74, 1.75): 1.74 - 1/3 = 1.40667 < sqrt2 < 1.41667
    EXPECT_TRUE(cut_member(s, q(174, 100)));
    EXPECT_FALSE(cut_member(s, q(175, 100)));
    Cut z = cut_add(sqrt2(), cut_neg(sqrt2()));
    ASSERT_TRUE(z.is_rational());
    EXPECT_EQ(z.rational_value(), q(0));
    EXPECT_TRUE(cut_sub(sqrt3(), sqrt3()).is_rational());
}

TEST(CutMul, Examples) {
    Cut c = cut_mul(sqrt2(), cut_of_rational(q(1)));
    EXPECT_TRUE(eq(c, sqrt2()));
    EXPECT_TRUE(eq(cut_mul(sqrt2(), sqrt3()), cut_root(2, q(6))));
    Cut z = cut_mul(sqrt2(), cut_of_rational(q(0)));
    ASSERT_TRUE(z.is_rational());
    EXPECT_EQ(z.rational_value(), q(0));
}

TEST(CutMul, SignsAndRationalScaling) {
    Cut m = cut_mul(cut_neg(sqrt2()), sqrt3());
    EXPECT_TRUE(eq(m, cut_neg(cut_root(2, q(6)))));
    Cut h = cut_mul(sqrt2(), cut_of_rational(q(-1, 2)));
    // -sqrt2/2 squared is 1/2
    EXPECT_TRUE(eq(cut_mul(h, h), cut_of_rational(q(1, 2))));
    EXPECT_LT(cmp(h, cut_of_rational(q(0))), 0);
    EXPECT_TRUE(eq(cut_mul(cbrt2(), cut_mul(cbrt2(), cbrt2())), cut_of_rational(q(2))));
}

TEST(CutApprox, RationalIsExact) {
    Bracket b = cut_approx(cut_of_rational(q(3, 7)), q(1, 1000));
    EXPECT_EQ(b.lo, q(3, 7));
    EXPECT_EQ(b.hi, q(3, 7));
    EXPECT_THROW(cut_approx(sqrt2(), q(0)), DomainError);
}

TEST(CutApprox, SqrtTwoAgainstIntegerSqrtOracle) {
    // oracle: floor(sqrt(2) * 10^4) = isqrt(2 * 10^8) = 14142
    BigInt f = big_root(BigInt(200000000), 2);
    ASSERT_EQ(f, 14142);
    BigRational eps = q(1, 10000);
    Bracket b = cut_approx(sqrt2(), eps);
    EXPECT_LE(b.hi - b.lo, eps);
    EXPECT_LT(b.lo * b.lo, q(2));
    EXPECT_GT(b.hi * b.hi, q(2));
    EXPECT_LE(b.lo, q(14143, 10000));
    EXPECT_GE(b.hi, q(14142, 10000));
}

TEST(CutApprox, CubeRootAndNesting) {
    Bracket b = cut_approx(cbrt2(), q(1, 100));
    EXPECT_LE(b.hi - b.lo, q(1, 100));
    EXPECT_LT(b.lo * b.lo * b.lo, q(2));
    EXPECT_GT(b.hi * b.hi * b.hi, q(2));
    Bracket finer = cut_approx(cbrt2(), q(1, 10000));
    EXPECT_GE(finer.lo, b.lo);
    EXPECT_LE(finer.hi, b.hi);
    EXPECT_TRUE(cut_member(cbrt2(), finer.lo));
    EXPECT_FALSE(cut_member(cbrt2(), finer.hi));
}

TEST(CutPartition, Examples) {
    std::vector<BigRational> s{q(1), q(7, 5), q(3, 2), q(2)};
    EXPECT_TRUE(cut_partition_check(sqrt2(), s));
    Partition p = cut_partition(sqrt2(), s);
    EXPECT_EQ(p.lower, (std::vector<BigRational>{q(1), q(7, 5)}));
    EXPECT_EQ(p.upper, (std::vector<BigRational>{q(3, 2), q(2)}));
    EXPECT_TRUE(cut_partition_check(cbrt2(), std::vector<BigRational>{}));
    std::vector<BigRational> t{q(-1), q(0), q(1)};
    Partition z = cut_partition(cut_of_rational(q(0)), t);
    EXPECT_EQ(z.lower, (std::vector<BigRational>{q(-1)}));
    EXPECT_EQ(z.upper, (std::vector<BigRational>{q(0), q(1)}));
    EXPECT_TRUE(cut_partition_check(cut_of_rational(q(0)), t));
}

TEST(CutProperties, TrichotomyAndTransitivity) {
    std::mt19937_64 rng(11);
    for (int i = 0; i < 150; ++i) {
        Cut a = random_cut(rng), b = random_cut(rng), c = random_cut(rng);
        auto ab = cut_cmp(a, b);
        auto ba = cut_cmp(b, a);
        EXPECT_EQ(ab < 0, ba > 0);
        EXPECT_EQ(ab == 0, ba == 0);
        if (cmp(a, b) <= 0 && cmp(b, c) <= 0) {
            EXPECT_LE(cmp(a, c), 0);
        }
    }
}

TEST(CutProperties, MembershipIsMonotone) {
    std::mt19937_64 rng(12);
    std::uniform_int_distribution<long> num(-400, 400), den(1, 97);
    for (int i = 0; i < 300; ++i) {
        Cut c = random_cut(rng);
        BigRational x = q(num(rng), den(rng)), y = q(num(rng), den(rng));
        if (y < x) std::swap(x, y);
        if (cut_member(c, y)) {
            EXPECT_TRUE(cut_member(c, x));
        }
    }
}

TEST(CutProperties, FieldLawsUpToEquality) {
    std::mt19937_64 rng(13);
    for (int i = 0; i < 60; ++i) {
        Cut a = random_cut(rng), b = random_cut(rng), c = random_cut(rng);
        EXPECT_TRUE(eq(cut_add(a, b), cut_add(b, a)));
        EXPECT_TRUE(eq(cut_mul(a, b), cut_mul(b, a)));
        EXPECT_TRUE(eq(cut_add(cut_add(a, b), c), cut_add(a, cut_add(b, c))));
        EXPECT_TRUE(eq(cut_mul(cut_mul(a, b), c), cut_mul(a, cut_mul(b, c))));
        EXPECT_TRUE(eq(cut_mul(a, cut_add(b, c)), cut_add(cut_mul(a, b), cut_mul(a, c))));
    }
}

TEST(CutProperties, LessThanHasRationalWitness) {
    std::mt19937_64 rng(14);
    for (int i = 0; i < 100; ++i) {
        Cut a = random_cut(rng), b = random_cut(rng);
        if (cut_cmp(a, b) >= 0) continue;
        // a's upper bracket end is a rational outside a's lower class
        BigRational eps(1);
        bool found = false;
        for (int k = 0; k < 60 && !found; ++k, eps /= BigRational(2)) {
            BigRational w = cut_approx(a, eps).hi;
            found = !cut_member(a, w) && cut_member(b, w);
        }
        EXPECT_TRUE(found) << a.str() << " < " << b.str();
    }
}

TEST(CutProperties, ApproxEndpointsClassifyConsistently) {
    for (const Cut* c : {&sqrt2(), &sqrt3(), &cbrt2()}) {
        for (long k = 1; k <= 40; k += 3) {
            BigRational eps(BigInt(1), big_pow(BigInt(2), static_cast<unsigned long>(k)));
            Bracket b = cut_approx(*c, eps);
            EXPECT_TRUE(cut_member(*c, b.lo));
            EXPECT_FALSE(cut_member(*c, b.hi));
            EXPECT_LE(b.hi - b.lo, eps);
        }
    }
}
