#include "planes/plane.hpp"

#include <gtest/gtest.h>

#include <stdexcept>

using namespace planes;

namespace {

// Admissibility straight from the definition.
bool admissible_slow(const BigInt& n) {
    if (n % 9 == 0) return false;
    for (const auto& pf : factorize(n).factors)
        if (pf.prime != 3 && pf.prime % 3 != 1) return false;
    return true;
}

}  // namespace

TEST(PlaneOrder, Examples) {
    const PlaneOrder two = plane_order(2);
    EXPECT_EQ(two.x, 4);
    EXPECT_EQ(two.v, 21);
    const PlaneOrder three = plane_order(3);
    EXPECT_EQ(three.x, 9);
    EXPECT_EQ(three.v, 91);
    EXPECT_EQ(three.v_factors.to_string(), "7*13");
    EXPECT_THROW(plane_order(1), std::invalid_argument);
}

TEST(PlaneOrder, FactorsMultiply) {
    for (int u = 2; u <= 2000; ++u) {
        const PlaneOrder p = plane_order(u);
        ASSERT_EQ(p.factor_plus * p.factor_minus, p.v);
        ASSERT_EQ(p.v, plane_points(u));
        ASSERT_EQ(p.v_factors.product(), p.v);
    }
}

TEST(Admissible, Examples) {
    EXPECT_TRUE(admissible_index(7));
    EXPECT_FALSE(admissible_index(9));
    EXPECT_FALSE(admissible_index(5));
    EXPECT_TRUE(admissible_index(21));
    EXPECT_TRUE(admissible_index(1));
    EXPECT_TRUE(admissible_index(3));
}

TEST(Admissible, FastPathAgreesWithDefinition) {
    for (int n = 1; n <= 30000; ++n) ASSERT_EQ(admissible_index(n), admissible_slow(n)) << n;
    const BigInt big = BigInt(1000003) * 1000033 * 3;  // both primes are 1 mod 3
    EXPECT_EQ(admissible_index(big), admissible_slow(big));
    EXPECT_TRUE(admissible_factorization(factorize(273)));
    EXPECT_FALSE(admissible_factorization(factorize(693)));
}

TEST(Admissible, DividesEveryPlaneOrder) {
    for (int u = 2; u <= 3000; ++u) ASSERT_TRUE(admissible_index(plane_points(u))) << u;
}

TEST(Ljunggren, Examples) {
    EXPECT_EQ(ljunggren_classify(18), Ljunggren::SevenCubed);
    EXPECT_EQ(ljunggren_classify(2), Ljunggren::PrimeValue);
    EXPECT_EQ(ljunggren_classify(4), Ljunggren::Composite);
    EXPECT_EQ(ljunggren_from_factors(factorize(343)), Ljunggren::SevenCubed);
    EXPECT_EQ(ljunggren_from_factors(factorize(169)), Ljunggren::OtherPrimePower);
}

TEST(Kantor, Examples) {
    const BigInt v18 = plane_points(18);
    EXPECT_TRUE(kantor_inequality_holds(7, 3, v18 / 343, 18));
    // Search for 169 | v(u) and check the m > 8p^a branch.
    bool found = false;
    for (int u = 2; u <= 10000 && !found; ++u) {
        const BigInt v = plane_points(u);
        if (v % 169 != 0 || (v / 169) % 13 == 0) continue;
        found = true;
        EXPECT_TRUE(kantor_inequality_holds(13, 2, v / 169, u)) << u;
    }
    EXPECT_TRUE(found);
    EXPECT_THROW(kantor_inequality_holds(7, 3, 2, 18), std::invalid_argument);
    EXPECT_THROW(kantor_inequality_holds(7, 1, v18 / 7, 18), std::invalid_argument);
}

TEST(Forms, RoundTrip) {
    for (int u = 2; u <= 5000; ++u) {
        ASSERT_EQ(solve_minus_form(BigInt(u) * u - u + 1), BigInt(u));
        ASSERT_EQ(solve_plus_form(BigInt(u) * u + u + 1), BigInt(u));
    }
    EXPECT_FALSE(solve_minus_form(8));
    EXPECT_FALSE(solve_plus_form(8));
}

TEST(InvolutionCounts, Examples) {
    const auto a = involution_counts(91, 7);
    ASSERT_TRUE(a);
    EXPECT_EQ(a->ratio, 13);
    EXPECT_EQ(a->u, 4);
    EXPECT_EQ(a->d_g, 21);
    EXPECT_EQ(a->v(), 273);
    const auto b = involution_counts(21, 3);
    ASSERT_TRUE(b);
    EXPECT_EQ(b->ratio, 7);
    EXPECT_EQ(b->u, 3);
    EXPECT_EQ(b->d_g, 13);
    EXPECT_EQ(b->v(), 91);
    EXPECT_FALSE(involution_counts(16, 2));
    EXPECT_FALSE(involution_counts(91, 3));
}

TEST(LargestPrimePart, Examples) {
    EXPECT_EQ(largest_prime_part_bound(0, 7, 2, 143), 167);
    EXPECT_EQ(largest_prime_part_bound(0, 7, 3, 1), 343);
}

TEST(StructureProperty, CoprimeFactorsWithAdmissiblePrimes) {
    for (int u = 2; u <= 10000; ++u) {
        const BigInt plus = BigInt(u) * u + u + 1, minus = BigInt(u) * u - u + 1;
        ASSERT_EQ(boost::multiprecision::gcd(plus, minus), 1) << u;
        for (const BigInt& w : {plus, minus})
            for (const auto& pf : factorize(w).factors) ASSERT_TRUE(pf.prime == 3 || pf.prime % 3 == 1) << u;
    }
}
