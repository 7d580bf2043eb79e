#include <gtest/gtest.h>

#include <random>

#include "insdel/bounds.hpp"
#include "insdel/regression.hpp"
#include "insdel/verify.hpp"

using namespace insdel;

namespace {

Word w(std::initializer_list<int> s, int q = 2) { return Word(s, q); }

// Decoder-side oracle: scan every candidate received word and count codewords in its decoder ball.
bool decodable_by_scan(const Code& code, std::size_t t_I, std::size_t t_D, int L) {
    const std::size_t n = code.length();
    for (std::size_t len = n >= t_D ? n - t_D : 0; len <= n + t_I; ++len)
        for (const Word& y : all_words(code.q(), len)) {
            int hits = 0;
            for (const Word& c : code.codewords()) hits += in_insdel_ball(y, c, t_D, t_I);
            if (hits > L) return false;
        }
    return true;
}

Code random_code(std::mt19937_64& rng, int q, std::size_t n, std::size_t size) {
    std::set<Word> words;
    std::uniform_int_distribution<int> sym(0, q - 1);
    while (words.size() < size) {
        std::vector<Symbol> s(n);
        for (auto& x : s) x = static_cast<Symbol>(sym(rng));
        words.insert(Word(s, q));
    }
    return Code(q, n, {words.begin(), words.end()});
}

}  // namespace

TEST(MinDistance, Examples) {
    EXPECT_EQ(min_levenshtein_distance(vt_binary(4, 0)), 4u);
    EXPECT_EQ(min_levenshtein_distance(Code(2, 4, all_words(2, 4))), 2u);
    const Word x = w({0, 1, 1, 0, 1}), y = w({1, 0, 1, 0, 1});
    EXPECT_EQ(min_levenshtein_distance(Code(2, 5, {x, y})), 2 * (5 - lcs_length(x, y)));
    EXPECT_THROW(min_levenshtein_distance(Code(2, 3, {w({0, 0, 0})})), std::invalid_argument);
}

TEST(MinDistance, EvenAndWorkerIndependent) {
    std::mt19937_64 rng(11);
    for (int i = 0; i < 20; ++i) {
        const Code c = random_code(rng, 3, 5, 12);
        const std::size_t d = min_levenshtein_distance(c);
        EXPECT_EQ(d % 2, 0u);
        EXPECT_EQ(d, min_levenshtein_distance(c, 3));
    }
}

TEST(ListDecodable, Examples) {
    const Code vt = vt_binary(4, 0);
    EXPECT_TRUE(list_decodable(vt, 0, 0, 1).decodable);
    EXPECT_TRUE(list_decodable(vt, 1, 0, 1).decodable);
    EXPECT_TRUE(list_decodable(vt, 0, 1, 1).decodable);
    // one insertion plus one deletion is d/2 errors: 0000 and 1001 both reach 0001
    const Verdict both = list_decodable(vt, 1, 1, 1);
    EXPECT_FALSE(both.decodable);
    EXPECT_TRUE(witness_holds(vt, both));
    EXPECT_TRUE(in_insdel_ball(w({0, 0, 0, 0}), w({0, 0, 0, 1}), 1, 1));
    EXPECT_TRUE(in_insdel_ball(w({1, 0, 0, 1}), w({0, 0, 0, 1}), 1, 1));

    const Code full = Code(2, 3, all_words(2, 3));
    const Verdict v = list_decodable(full, 1, 0, 1);
    EXPECT_FALSE(v.decodable);
    ASSERT_TRUE(v.witness.has_value());
    EXPECT_EQ(v.witness->received.size(), 4u);
    EXPECT_TRUE(witness_holds(full, v));
    EXPECT_THROW(list_decodable(full, 0, 4, 1), std::invalid_argument);
    EXPECT_THROW(list_decodable(full, 0, 0, 0), std::invalid_argument);
}

TEST(ListDecodable, CapRaisesBallTooLarge) {
    VerifyOptions tight;
    tight.cap = 50;
    EXPECT_THROW(list_decodable(vt_binary(8, 0), 3, 3, 2, tight), BallTooLarge);
}

TEST(ListDecodable, AgreesWithDecoderScanAndWitnessesHold) {
    std::mt19937_64 rng(3);
    for (int i = 0; i < 40; ++i) {
        const int q = 2 + i % 2;
        const std::size_t n = 3 + i % 3;
        const Code c = random_code(rng, q, n, 3 + i % 6);
        for (std::size_t t_I = 0; t_I <= 2; ++t_I)
            for (std::size_t t_D = 0; t_D <= 2; ++t_D)
                for (int L : {1, 2, 3}) {
                    const Verdict v = list_decodable(c, t_I, t_D, L);
                    ASSERT_EQ(v.decodable, decodable_by_scan(c, t_I, t_D, L));
                    ASSERT_EQ(v.witness.has_value(), !v.decodable);
                    if (!v.decodable) ASSERT_TRUE(witness_holds(c, v));
                    VerifyOptions fast;
                    fast.want_witness = false;
                    ASSERT_EQ(list_decodable(c, t_I, t_D, L, fast).decodable, v.decodable);
                }
    }
}

TEST(ListDecodable, Monotone) {
    std::mt19937_64 rng(5);
    for (int i = 0; i < 15; ++i) {
        const Code c = random_code(rng, 2, 5, 6);
        for (std::size_t t_I = 0; t_I <= 2; ++t_I)
            for (std::size_t t_D = 0; t_D <= 2; ++t_D)
                for (int L = 1; L <= 3; ++L) {
                    if (!list_decodable(c, t_I, t_D, L).decodable) continue;
                    for (std::size_t a = 0; a <= t_I; ++a)
                        for (std::size_t b = 0; b <= t_D; ++b)
                            for (int M = L; M <= 4; ++M) ASSERT_TRUE(list_decodable(c, a, b, M).decodable);
                }
    }
}

TEST(ListDecodable, ParallelTallyMatchesSerial) {
    const Code c = Code(2, 4, all_words(2, 4));
    for (unsigned workers : {2u, 3u, 8u}) {
        VerifyOptions opts;
        opts.workers = workers;
        const Verdict a = list_decodable(c, 1, 1, 3);
        const Verdict b = list_decodable(c, 1, 1, 3, opts);
        EXPECT_EQ(a.decodable, b.decodable);
        ASSERT_TRUE(a.witness && b.witness);
        EXPECT_EQ(a.witness->received, b.witness->received);
        EXPECT_EQ(a.witness->codewords, b.witness->codewords);
    }
}

TEST(WitnessCheck, RejectsTamperedWitness) {
    const Code full = Code(2, 3, all_words(2, 3));
    Verdict v = list_decodable(full, 1, 0, 1);
    ASSERT_TRUE(witness_holds(full, v));
    Verdict short_list = v;
    short_list.witness->codewords.resize(1);
    EXPECT_FALSE(witness_holds(full, short_list));
    Verdict far = v;
    far.witness->received = w({1, 1, 1, 1, 1, 1});
    EXPECT_FALSE(witness_holds(full, far));
}

TEST(Direction, DecoderBallMatchesChannelOutputs) {
    const CheckSummary s = check_direction_equivalence(2, 4, 2);
    EXPECT_TRUE(s.ok()) << s.first_failure.value_or("");
    EXPECT_GT(s.cases, 0u);
    const CheckSummary ternary = check_direction_equivalence(3, 2, 2);
    EXPECT_TRUE(ternary.ok()) << ternary.first_failure.value_or("");
}

TEST(Containment, Examples) {
    const std::vector<Word> y{w({0, 1})};
    const std::vector<InsdelPair> radii{{1, 1}, {0, 0}};
    EXPECT_TRUE(check_ball_containment(y, radii).ok());
    EXPECT_EQ(insdel_ball(y[0], 0, 0), levenshtein_ball(y[0], 0));
}

TEST(UniqueVsList, Examples) {
    const UniqueDecodingReport helberg_report = check_unique_vs_list(helberg(2, 5, 2, BigInt(0)));
    EXPECT_TRUE(helberg_report.all_decodable);
    EXPECT_EQ(helberg_report.checks.size(), 6u);  // t_I + t_D <= 2

    const UniqueDecodingReport d2 = check_unique_vs_list(Code(2, 3, all_words(2, 3)));
    EXPECT_EQ(d2.distance, 2u);
    ASSERT_EQ(d2.checks.size(), 1u);
    EXPECT_EQ(d2.checks[0].t_I + d2.checks[0].t_D, 0u);

    const UniqueDecodingReport vt6 = check_unique_vs_list(vt_binary(6, 0));
    EXPECT_EQ(vt6.distance, 4u);
    EXPECT_EQ(vt6.radius, 1u);
    EXPECT_TRUE(vt6.all_decodable);
}

TEST(TheoremRegion, StrictRationalBoundary) {
    // delta = 9/10, L = 2, n = 15: t_D = 0 gives t_I/15 < 17/15, so t_I <= 16
    const auto region = theorem_region(15, Rational(9, 10), 2);
    std::size_t max_ti_at_zero = 0;
    for (const InsdelPair& p : region) {
        EXPECT_TRUE(list_decoding_hypothesis(Rational(9, 10), 2, Rational(p.insertions, 15), Rational(p.deletions, 15)));
        if (p.deletions == 0) max_ti_at_zero = std::max(max_ti_at_zero, p.insertions);
    }
    EXPECT_EQ(max_ti_at_zero, 16u);
}

TEST(Theorem, RandomBinaryCodesHaveNoViolations) {
    std::mt19937_64 rng(2024);
    for (int i = 0; i < 20; ++i) {
        const Code c = random_code(rng, 2, 6, 2 + i % 5);
        const TheoremReport r = check_main_theorem(c, 2);
        EXPECT_EQ(r.violations, 0u);
        EXPECT_EQ(r.skipped, 0u);
        EXPECT_FALSE(r.cases.empty());
    }
}

TEST(Theorem, SmallDistanceStaysInUniqueRegime) {
    const TheoremReport r = check_main_theorem(Code(2, 4, all_words(2, 4)), 2);
    EXPECT_EQ(r.distance, 2u);
    ASSERT_EQ(r.cases.size(), 1u);
    EXPECT_FALSE(r.beyond_unique_decoding);
    EXPECT_NE(r.note.find("2/(L+1)"), std::string::npos);
}

TEST(Theorem, TernaryCodeBeyondUniqueDecoding) {
    // relative distance 2/3 exceeds 2/(L+1) for L = 3
    const Code c(3, 6, {Word({0, 0, 0, 0, 0, 0}, 3), Word({1, 1, 1, 1, 1, 1}, 3), Word({2, 2, 2, 2, 2, 2}, 3),
                        Word({0, 0, 1, 1, 2, 2}, 3)});
    const TheoremReport r = check_main_theorem(c, 3);
    EXPECT_EQ(r.delta, Rational(2, 3));
    EXPECT_TRUE(r.beyond_unique_decoding);
    EXPECT_EQ(r.violations, 0u);
    EXPECT_EQ(r.skipped, 0u);
    bool saw_four = false;
    for (const TheoremCase& tc : r.cases) saw_four |= tc.t_I == 4 && tc.t_D == 0;
    EXPECT_TRUE(saw_four);
}

TEST(Theorem, HighDistanceTernaryFamilies) {
    std::mt19937_64 rng(8);
    std::size_t beyond = 0;
    for (int i = 0; i < 30; ++i) {
        const Code c = random_code(rng, 4, 5, 3);
        const std::size_t d = min_levenshtein_distance(c);
        if (d >= 2 * c.length()) continue;  // relative distance 1 is outside the bound's domain
        for (int L : {2, 3}) {
            const TheoremReport r = check_main_theorem(c, L);
            ASSERT_EQ(r.violations, 0u);
            beyond += r.beyond_unique_decoding;
        }
    }
    EXPECT_GT(beyond, 0u);
}

TEST(Theorem, SkippedPairsAreReported) {
    VerifyOptions tight;
    tight.cap = 40;
    const Code c(3, 6, {Word({0, 0, 0, 0, 0, 0}, 3), Word({1, 1, 1, 1, 1, 1}, 3), Word({2, 2, 2, 2, 2, 2}, 3),
                        Word({0, 0, 1, 1, 2, 2}, 3)});
    const TheoremReport r = check_main_theorem(c, 3, tight);
    EXPECT_GT(r.skipped, 0u);
    EXPECT_EQ(r.violations, 0u);
}

TEST(Theorem, HarnessFixturesAreStable) {
    const auto a = theorem_harness_cases(1);
    const auto b = theorem_harness_cases(1);
    ASSERT_EQ(a.size(), 54u);
    for (std::size_t i = 0; i < a.size(); ++i) {
        EXPECT_EQ(a[i].code, b[i].code);
        EXPECT_EQ(a[i].L, b[i].L);
        if (i >= 4) {
            EXPECT_GE(a[i].code.size(), 4u);
            EXPECT_LE(a[i].code.size(), 16u);
            EXPECT_GE(a[i].code.length(), 5u);
            EXPECT_LE(a[i].code.length(), 7u);
        }
    }
}
