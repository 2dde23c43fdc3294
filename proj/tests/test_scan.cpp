#include "planes/scan.hpp"

#include <gtest/gtest.h>

#include <random>
#include <stdexcept>

using namespace planes;

namespace {

Factorization to_factorization(std::uint64_t value, const WordFactors& f) {
    Factorization out;
    out.value = value;
    for (auto [p, e] : f) out.factors.push_back({BigInt(p), e});
    return out;
}

const FilterOutcome* find_filter(const SieveRow& row, const std::string& prefix) {
    for (const auto& f : row.filter_trace)
        if (f.name.rfind(prefix, 0) == 0) return &f;
    return nullptr;
}

}  // namespace

TEST(QuadraticSieve, MatchesFactorize) {
    std::mt19937_64 rng(11);
    std::vector<std::pair<std::uint64_t, std::uint64_t>> windows{{1, 3000}, {kScanUMax - 2000, kScanUMax}};
    for (int i = 0; i < 6; ++i) {
        const std::uint64_t lo = 1 + rng() % (kScanUMax - 500);
        windows.emplace_back(lo, lo + 400);
    }
    for (auto [lo, hi] : windows) {
        std::uint64_t expected = lo;
        for_each_quadratic(lo, hi, [&](std::uint64_t w, std::uint64_t value, const WordFactors& f) {
            ASSERT_EQ(w, expected++);
            ASSERT_EQ(value, w * w + w + 1);
            ASSERT_EQ(to_factorization(value, f), factorize(value)) << w;
        });
        EXPECT_EQ(expected, hi + 1);
    }
}

TEST(Sieve, SingleRowExamples) {
    const auto two = sieve_orders(2, 2);
    ASSERT_EQ(two.size(), 1u);
    EXPECT_EQ(two[0].u, 2);
    EXPECT_EQ(two[0].v, 21);
    EXPECT_TRUE(two[0].survived);

    const auto eighteen = sieve_orders(18, 18);
    ASSERT_EQ(eighteen.size(), 1u);
    EXPECT_EQ(eighteen[0].ljunggren, Ljunggren::SevenCubed);
    EXPECT_TRUE(eighteen[0].survived);
    const FilterOutcome* lj = find_filter(eighteen[0], "ljunggren");
    ASSERT_NE(lj, nullptr);
    EXPECT_TRUE(lj->pass);
    EXPECT_NE(lj->detail.find("SevenCubed"), std::string::npos);
}

TEST(Sieve, TraceOrder) {
    const auto rows = sieve_orders(4, 4, {GroupSpec::linear(2, 13)});
    ASSERT_EQ(rows.size(), 1u);
    const auto& t = rows[0].filter_trace;
    ASSERT_EQ(t.size(), 5u);
    EXPECT_EQ(t[0].name, "coprime");
    EXPECT_EQ(t[1].name, "admissible");
    EXPECT_EQ(t[2].name, "ljunggren");
    EXPECT_EQ(t[3].name, "kantor");
    EXPECT_EQ(t[4].name, "gate PSL(2,13)");
}

TEST(Sieve, BaseFiltersHoldEverywhere) {
    std::size_t rows = 0;
    sieve_orders_each(2, 20000, {}, 2, [&](const SieveRow& row) {
        ++rows;
        ASSERT_EQ(row.v, plane_points(row.u));
        ASSERT_EQ(row.v_factors.product(), row.v);
        ASSERT_TRUE(find_filter(row, "coprime")->pass);
        ASSERT_TRUE(find_filter(row, "admissible")->pass);
        ASSERT_TRUE(find_filter(row, "ljunggren")->pass);
    });
    EXPECT_EQ(rows, 19999u);
}

TEST(Sieve, KantorHoldsWhereApplicable) {
    // p^a divides one of two coprime factors near sqrt(v), far below v/8.
    std::size_t applied = 0;
    sieve_orders_each(2, 20000, {}, 1, [&](const SieveRow& row) {
        const FilterOutcome* k = find_filter(row, "kantor");
        ASSERT_NE(k, nullptr);
        if (k->detail != "not applicable") ++applied;
        ASSERT_TRUE(k->pass) << row.u;
    });
    EXPECT_GT(applied, 0u);
}

TEST(Sieve, GatePassesFollowDefinition) {
    // Rows where u^2-u+1 divides n_g = 91 and the quotient is a valid r_g:
    // u = 3 (ratio 7), u = 4 (ratio 13) and u = 10 (ratio 91).
    std::vector<BigInt> passing;
    for (const auto& row : sieve_orders(2, 100, {GroupSpec::linear(2, 13)})) {
        const FilterOutcome* g = find_filter(row, "gate");
        ASSERT_NE(g, nullptr);
        if (g->detail.rfind("pass", 0) == 0) passing.push_back(row.u);
    }
    EXPECT_EQ(passing, (std::vector<BigInt>{3, 4, 10}));
}

TEST(Sieve, DeterministicAcrossJobs) {
    const std::vector<GroupSpec> c{GroupSpec::linear(2, 13), GroupSpec::exceptional(Family::G2, 7)};
    const auto a = sieve_orders(2, 30000, c, 1);
    const auto b = sieve_orders(2, 30000, c, 3);
    ASSERT_EQ(a.size(), b.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        ASSERT_EQ(a[i].u, b[i].u);
        ASSERT_EQ(a[i].filter_trace, b[i].filter_trace);
        ASSERT_EQ(a[i].survived, b[i].survived);
    }
}

TEST(Sieve, RejectsBadRanges) {
    EXPECT_THROW(sieve_orders(1, 5), std::invalid_argument);
    EXPECT_THROW(sieve_orders(10, 5), std::invalid_argument);
    EXPECT_THROW(sieve_orders(2, kScanUMax + 1), std::invalid_argument);
}

TEST(Gate, Examples) {
    const GroupSpec psl213 = GroupSpec::linear(2, 13);
    const GateResult four = candidate_gate(plane_order(4), psl213);
    EXPECT_EQ(four.verdict, GateVerdict::Pass);
    ASSERT_FALSE(four.reasons.empty());
    EXPECT_NE(four.reasons[0].find("r_g = 7"), std::string::npos);

    EXPECT_EQ(candidate_gate(plane_order(2), psl213).verdict, GateVerdict::Fail);

    const GateResult g2 = candidate_gate(plane_order(3), GroupSpec::exceptional(Family::G2, 7));
    EXPECT_EQ(g2.verdict, GateVerdict::Fail);
}

TEST(Gate, FloorCanBeDisabled) {
    GateOptions off;
    off.index_floor = false;
    const GateResult g2 = candidate_gate(plane_order(3), GroupSpec::exceptional(Family::G2, 7), off);
    EXPECT_EQ(g2.verdict, GateVerdict::Pass);
}

TEST(Gate, DivisorCapGivesUncovered) {
    GateOptions tight;
    tight.divisor_cap = 1;
    const CandidateGate gate(GroupSpec::linear(2, 13), tight);
    EXPECT_EQ(gate.evaluate(4, 273).verdict, GateVerdict::Uncovered);
}

TEST(Gate, NoCatalogClassesGivesUncovered) {
    const CandidateGate gate(GroupSpec::sporadic("M11"));
    EXPECT_EQ(gate.evaluate(4, 273).verdict, GateVerdict::Uncovered);
}

TEST(Gate, VerdictNames) {
    EXPECT_EQ(to_string(GateVerdict::Pass), "pass");
    EXPECT_EQ(to_string(GateVerdict::Fail), "fail");
    EXPECT_EQ(to_string(GateVerdict::Uncovered), "uncovered");
}
