#include <gtest/gtest.h>

#include <thread>

#include "insdel/combinatorics.hpp"

using namespace insdel;

namespace {

// Phi_{r,j} straight from the defining sum with A_{j,u} taken from the cover counts.
Rational phi_from_covers(int r, int j) {
    Rational total = 0;
    for (int u = 1; u <= std::min(r, j); ++u) total += Rational(combination_weight(r, u)) * Rational(signed_cover_sum(j, u));
    return total;
}

}  // namespace

TEST(Binomial, Basics) {
    EXPECT_EQ(binomial(5, 2), 10);
    EXPECT_EQ(binomial(5, 0), 1);
    EXPECT_EQ(binomial(5, 6), 0);
    EXPECT_EQ(binomial(5, -1), 0);
    EXPECT_EQ(binomial(60, 30), BigInt("118264581564861424"));
}

TEST(CoverCounts, Examples) {
    EXPECT_EQ(count_v_covers(3, 2, 2), 3);
    EXPECT_EQ(enumerate_v_covers(3, 2, 2), 3);
    EXPECT_EQ(enumerate_v_covers(2, 1, 2), 1);
    EXPECT_EQ(enumerate_v_covers(4, 1, 2), 0);
    for (int j = 1; j <= 8; ++j) {
        for (int ell = 1; ell <= 10; ++ell) EXPECT_EQ(count_v_covers(j, ell, 1), ell == j ? 1 : 0);
        for (int v = 1; v <= j; ++v) EXPECT_EQ(count_v_covers(j, static_cast<std::int64_t>(binomial(j, v)), v), 1);
    }
}

TEST(CoverCounts, ZeroOutsideFeasibleRange) {
    EXPECT_EQ(count_v_covers(4, 7, 2), 0);  // only C(4,2) = 6 subsets exist
    EXPECT_EQ(count_v_covers(5, 2, 2), 0);  // 2 * 2 < 5
    EXPECT_EQ(count_v_covers(2, 1, 3), 0);
    EXPECT_THROW(count_v_covers(0, 1, 1), std::invalid_argument);
}

TEST(CoverCounts, RecursionMatchesEnumerationBeyondAcceptanceRange) {
    for (int v = 1; v <= 6; ++v)
        for (int ell = 1; ell <= 4; ++ell) ASSERT_EQ(count_v_covers(6, ell, v), enumerate_v_covers(6, ell, v));
}

TEST(CoverCounts, EnumerationHonoursCap) {
    EXPECT_THROW(enumerate_v_covers(8, 10, 4, 1000), EnumerationCapExceeded);
}

TEST(CoverCounts, InstanceMemoAndThreadsAgree) {
    CoverCounter counter;
    const BigInt expected = counter.count(7, 5, 3);
    EXPECT_GT(counter.memo_size(), 0u);
    std::vector<BigInt> seen(4);
    std::vector<std::thread> threads;
    for (int i = 0; i < 4; ++i) threads.emplace_back([&seen, i] { seen[i] = count_v_covers(7, 5, 3); });
    for (auto& t : threads) t.join();
    for (const BigInt& s : seen) EXPECT_EQ(s, expected);
}

TEST(CoefficientA, Examples) {
    EXPECT_EQ(coefficient_A(3, 2), -2);
    EXPECT_EQ(signed_cover_sum(3, 2), -2);
    for (int j = 2; j <= 10; ++j) {
        EXPECT_EQ(coefficient_A(j, j), 1);
        EXPECT_EQ(coefficient_A(j, 1), j % 2 == 1 ? 1 : -1);
    }
    EXPECT_EQ(coefficient_A(2, 3), 0);
}

TEST(Claim8, Examples) {
    EXPECT_EQ(claim8_sum(5, 1), 1);
    EXPECT_EQ(claim8_sum(7, 3), 1);
    for (int v = 2; v <= 12; ++v) EXPECT_EQ(claim8_sum(v, v), 1);
    EXPECT_THROW(claim8_sum(1, 1), std::invalid_argument);
    EXPECT_THROW(claim8_sum(3, 4), std::invalid_argument);
}

TEST(PhiRows, Examples) {
    const PhiRow row = phi_coefficients(2, 2);
    EXPECT_EQ(row.coefficients, (std::vector<Rational>{2, -1, 0}));
    for (int L = 2; L <= 6; ++L) {
        const PhiRow r1 = phi_coefficients(L, 1);
        EXPECT_EQ(r1.at(1), 1);
        EXPECT_EQ(r1.at(2), -1);
    }
    const PhiRow r42 = phi_coefficients(4, 2);
    EXPECT_EQ(r42.coefficients, (std::vector<Rational>{2, -1, 0, 1, -2}));
    EXPECT_GT(r42.at(4), 0);
    EXPECT_LT(r42.at(5), 0);
    EXPECT_THROW(phi_coefficients(1, 1), std::invalid_argument);
    EXPECT_THROW(phi_coefficients(3, 4), std::invalid_argument);
}

TEST(PhiRows, MatchCoverCountRoute) {
    for (int L = 2; L <= 8; ++L)
        for (int r = 1; r <= L; ++r) {
            const PhiRow row = phi_coefficients(L, r);
            for (int j = 1; j <= L + 1; ++j) ASSERT_EQ(row.at(j), phi_from_covers(r, j)) << L << " " << r << " " << j;
        }
}

TEST(PhiRows, SignStructure) {
    for (int L = 2; L <= 12; ++L)
        for (int r = 1; r <= L; ++r) {
            const PhiRow row = phi_coefficients(L, r);
            for (int j = r + 2; j <= L; ++j)
                if ((j - r) % 2 == 0) {
                    ASSERT_GT(row.at(j), 0);
                    ASSERT_LT(row.at(j + 1), 0);
                }
            if ((L - r) % 2 == 1 && L + 1 >= r + 2) ASSERT_GT(row.at(L + 1), 0);
        }
}

TEST(PhiRows, PairedConstantAtLeastThree) {
    for (int r = 2; r <= 12; ++r)
        for (int j = r + 2; j <= 13; j += 2) {
            ASSERT_EQ(paired_tail_constant(r, j), paired_tail_constant_closed_form(r, j));
            ASSERT_GE(paired_tail_constant_closed_form(r, j), 3);
        }
    EXPECT_THROW(paired_tail_constant(1, 4), std::invalid_argument);
    EXPECT_THROW(phi_tail_closed_form(3, 4), std::invalid_argument);
}
