#include <gtest/gtest.h>

#include <filesystem>
#include <map>
#include <sstream>

#include "insdel/codes.hpp"
#include "insdel/verify.hpp"

using namespace insdel;

namespace {

Word w(std::initializer_list<int> s, int q = 2) { return Word(s, q); }

std::size_t hamming(const Word& a, const Word& b) {
    std::size_t d = 0;
    for (std::size_t i = 0; i < a.size(); ++i) d += a[i] != b[i];
    return d;
}

}  // namespace

TEST(Code, ValidatesAndSorts) {
    const Code c(2, 2, {w({1, 1}), w({0, 0})});
    EXPECT_EQ(c[0], w({0, 0}));
    EXPECT_TRUE(c.contains(w({1, 1})));
    EXPECT_FALSE(c.contains(w({0, 1})));
    EXPECT_DOUBLE_EQ(c.rate(), 0.5);
    EXPECT_THROW(Code(2, 2, {}), std::invalid_argument);
    EXPECT_THROW(Code(2, 2, {w({0, 0}), w({0, 0})}), std::invalid_argument);
    EXPECT_THROW(Code(2, 2, {w({0})}), std::invalid_argument);
    EXPECT_THROW(Code(3, 1, {w({0})}), std::invalid_argument);
}

TEST(Code, FileRoundTrip) {
    const Code c = vt_qary(4, 3, 1, 2);
    std::stringstream buffer;
    write_code(buffer, c);
    EXPECT_EQ(buffer.str().substr(0, 8), "q=3 n=4\n");
    EXPECT_EQ(read_code(buffer), c);

    const auto path = std::filesystem::temp_directory_path() / "insdel_code_roundtrip.txt";
    save_code(path, c);
    EXPECT_EQ(load_code(path), c);
    std::filesystem::remove(path);

    std::istringstream bad("q=2 n=3\n0,1\n");
    EXPECT_THROW(read_code(bad), std::invalid_argument);
    std::istringstream bad_header("n=3\n");
    EXPECT_THROW(read_code(bad_header), std::invalid_argument);
}

TEST(PrimeField, AxiomsOnSamples) {
    EXPECT_THROW(PrimeField(9), std::invalid_argument);
    EXPECT_THROW(PrimeField(257), std::invalid_argument);
    for (std::uint32_t p : {2u, 5u, 7u, 13u, 251u}) {
        const PrimeField f(p);
        EXPECT_THROW(f.inv(0), std::domain_error);
        for (std::uint32_t a = 1; a < p; ++a) ASSERT_EQ(f.mul(a, f.inv(a)), 1u);
        for (std::uint32_t a = 0; a < std::min(p, 20u); ++a)
            for (std::uint32_t b = 0; b < std::min(p, 20u); ++b) {
                ASSERT_EQ(f.add(a, f.neg(a)), 0u);
                ASSERT_EQ(f.sub(f.add(a, b), b), a);
                for (std::uint32_t c = 0; c < std::min(p, 7u); ++c)
                    ASSERT_EQ(f.mul(a, f.add(b, c)), f.add(f.mul(a, b), f.mul(a, c)));
            }
        ASSERT_EQ(f.pow(2 % p, p - 1), p == 2 ? 0u : 1u);
    }
}

TEST(ReedSolomon, Examples) {
    const PrimeField f5(5);
    const Code constants = rs_code(f5, 4, 1, {0, 1, 2, 3});
    EXPECT_EQ(constants.size(), 5u);
    for (const Word& c : constants.codewords()) EXPECT_EQ(std::set<Symbol>(c.symbols().begin(), c.symbols().end()).size(), 1u);

    const Code full = rs_code(PrimeField(3), 3, 3, {0, 1, 2});
    EXPECT_EQ(full.codewords().size(), 27u);
    EXPECT_EQ(full, Code(3, 3, all_words(3, 3)));

    const Code c = rs_code(f5, 4, 2, {0, 1, 2, 3});
    EXPECT_EQ(c.size(), 25u);
    EXPECT_EQ(min_hamming_distance(c), 3u);

    EXPECT_THROW(rs_code(f5, 4, 2, {0, 1, 1, 3}), std::invalid_argument);
    EXPECT_THROW(rs_code(f5, 4, 5, {0, 1, 2, 3}), std::invalid_argument);
    EXPECT_THROW(rs_code(f5, 6, 2, {0, 1, 2, 3, 4, 0}), std::invalid_argument);
}

TEST(ReedSolomon, HammingDistanceIsSingletonBound) {
    for (std::uint32_t p : {5u, 7u})
        for (std::size_t n = 2; n <= 5; ++n)
            for (std::size_t k = 1; k <= std::min<std::size_t>(n, 3); ++k) {
                std::vector<std::uint32_t> alpha(n);
                for (std::size_t i = 0; i < n; ++i) alpha[i] = static_cast<std::uint32_t>(i);
                const Code c = rs_code(PrimeField(p), n, k, alpha);
                if (c.size() < 2) continue;
                std::size_t brute = n;
                for (std::size_t i = 0; i < c.size(); ++i)
                    for (std::size_t j = i + 1; j < c.size(); ++j) brute = std::min(brute, hamming(c[i], c[j]));
                ASSERT_EQ(brute, n - k + 1);
                ASSERT_EQ(min_hamming_distance(c), brute);
            }
}

TEST(ReedSolomon, ViewMatchesEvaluation) {
    const PrimeField f(7);
    const ReedSolomonView view(f, 2, {1, 3, 5});
    EXPECT_EQ(view.size(), 49);
    // index 3 + 2*7 encodes f(x) = 3 + 2x
    EXPECT_EQ(view.codeword(3 + 2 * 7), Word({5, 2, 6}, 7));
    const std::vector<std::uint32_t> coeffs{3, 2};
    EXPECT_EQ(view.encode(coeffs), view.codeword(17));
}

TEST(ReedSolomon, CyclicEvaluationPointsGiveDistanceTwo) {
    // alpha = powers of 2 in F_5 form a cyclic group, so the code is closed under cyclic shifts.
    const Code c = rs_code(PrimeField(5), 4, 2, {1, 2, 4, 3});
    EXPECT_EQ(min_levenshtein_distance(c), 2u);
}

TEST(ReedSolomon, TargetClipping) {
    EXPECT_EQ(rs_target_distance(4, 1), 8u);
    EXPECT_EQ(rs_target_distance(4, 2), 4u);
    EXPECT_EQ(rs_target_distance(4, 3), 0u);
    EXPECT_EQ(rs_target_distance(6, 2), 8u);
}

TEST(ReedSolomon, SearchRegressionValues) {
    const PrimeField f7(7);
    const RsSearchResult constants = rs_search_eval_points(f7, 4, 1, rs_target_distance(4, 1), 1'000'000);
    EXPECT_EQ(constants.achieved_distance, 8u);
    EXPECT_TRUE(constants.target_met);
    EXPECT_TRUE(constants.exhaustive);
    EXPECT_EQ(constants.alpha, (std::vector<std::uint32_t>{0, 1, 2, 3}));

    const RsSearchResult r = rs_search_eval_points(f7, 4, 2, rs_target_distance(4, 2), 1'000'000);
    EXPECT_TRUE(r.exhaustive);
    EXPECT_EQ(r.candidates_examined, 840u);  // 7!/3! ordered vectors
    EXPECT_EQ(r.achieved_distance, 4u);
    EXPECT_TRUE(r.target_met);
    EXPECT_EQ(min_levenshtein_distance(rs_code(f7, 4, 2, r.alpha)), r.achieved_distance);
}

TEST(ReedSolomon, RandomisedSearchIsSeeded) {
    const PrimeField f(13);
    const RsSearchResult a = rs_search_eval_points(f, 5, 2, rs_target_distance(5, 2), 300, 99);
    const RsSearchResult b = rs_search_eval_points(f, 5, 2, rs_target_distance(5, 2), 300, 99);
    EXPECT_FALSE(a.exhaustive);
    EXPECT_EQ(a.alpha, b.alpha);
    EXPECT_EQ(a.achieved_distance, b.achieved_distance);
    EXPECT_LE(a.candidates_examined, 300u);
}

TEST(VtBinary, Examples) {
    EXPECT_EQ(vt_binary(4, 0), Code(2, 4, {w({0, 0, 0, 0}), w({1, 0, 0, 1}), w({0, 1, 1, 0}), w({1, 1, 1, 1})}));
    EXPECT_EQ(vt_binary(1, 0), Code(2, 1, {w({0})}));
    EXPECT_EQ(vt_binary(1, 1), Code(2, 1, {w({1})}));
    EXPECT_THROW(vt_binary(4, 5), std::invalid_argument);
}

TEST(VtBinary, SyndromesPartitionTheSpace) {
    for (std::size_t n = 1; n <= 10; ++n) {
        std::set<Word> seen;
        std::size_t total = 0;
        for (std::size_t a = 0; a <= n; ++a) {
            const Code c = vt_binary(n, a);
            total += c.size();
            for (const Word& x : c.codewords()) {
                std::size_t s = 0;
                for (std::size_t i = 0; i < n; ++i) s += (i + 1) * x[i];
                ASSERT_EQ(s % (n + 1), a);
                seen.insert(x);
            }
        }
        ASSERT_EQ(total, std::size_t{1} << n);
        ASSERT_EQ(seen.size(), total);
    }
}

TEST(VtBinary, CorrectsOneInsdel) {
    EXPECT_EQ(min_levenshtein_distance(vt_binary(4, 0)), 4u);
    for (std::size_t n = 2; n <= 7; ++n) {
        const UniqueDecodingReport r = check_unique_vs_list(vt_binary(n, 0));
        EXPECT_GE(r.radius, 1u);
        EXPECT_TRUE(r.all_decodable);
    }
}

TEST(VtQary, ExamplesAndPartition) {
    const Code c = vt_qary(2, 3, 0, 0);
    for (const Word& s : c.codewords()) {
        const std::vector<int> asc = vt_ascent_vector(s);
        ASSERT_EQ(asc.size(), 1u);
        EXPECT_EQ((1 * asc[0]) % 2, 0);
        EXPECT_EQ((s[0] + s[1]) % 3, 0);
    }
    // 9 words, brute-force filter of both congruences
    std::size_t expected = 0;
    for (const Word& s : all_words(3, 2)) expected += (s[1] >= s[0] ? 1 : 0) % 2 == 0 && (s[0] + s[1]) % 3 == 0;
    EXPECT_EQ(c.size(), expected);

    for (std::size_t n = 1; n <= 5; ++n) {
        std::size_t total = 0;
        for (std::size_t a = 0; a < n; ++a)
            for (int b = 0; b < 3; ++b) {
                try {
                    total += vt_qary(n, 3, a, b).size();
                } catch (const std::invalid_argument&) {
                    // empty syndrome class
                }
            }
        ASSERT_EQ(total, static_cast<std::size_t>(std::pow(3, n)));
    }
    EXPECT_THROW(vt_qary(4, 2, 0, 0), std::invalid_argument);
    EXPECT_THROW(vt_qary(4, 3, 4, 0), std::invalid_argument);
    EXPECT_THROW(vt_qary(4, 3, 0, 3), std::invalid_argument);
}

TEST(VtQary, ConstantWords) {
    const std::size_t n = 4;
    for (int c = 0; c < 3; ++c) {
        const Word s(std::vector<Symbol>(n, static_cast<Symbol>(c)), 3);
        const std::vector<int> asc = vt_ascent_vector(s);
        EXPECT_EQ(asc, std::vector<int>(n - 1, 1));
        const std::size_t a = (1 + 2 + 3) % n;
        const int b = static_cast<int>(n) * c % 3;
        EXPECT_TRUE(vt_qary(n, 3, a, b).contains(s));
    }
}

TEST(Helberg, Weights) {
    const HelbergWeights w = helberg_weights(2, 6, 2);
    std::vector<BigInt> expected{1, 2, 4, 7, 12, 20, 33};
    EXPECT_EQ(w.weights, expected);
    EXPECT_EQ(w.modulus, 33);
    // a single-term recursion gives v_i = i for binary alphabets
    const HelbergWeights s1 = helberg_weights(2, 5, 1);
    EXPECT_EQ(s1.weights, (std::vector<BigInt>{1, 2, 3, 4, 5, 6}));
    const HelbergWeights q3 = helberg_weights(3, 4, 2);
    EXPECT_EQ(q3.weights, (std::vector<BigInt>{1, 3, 9, 25, 69}));
}

TEST(Helberg, SingleErrorBinaryCaseIsVt) {
    for (std::size_t n = 2; n <= 9; ++n)
        for (std::size_t a = 0; a <= n; ++a) ASSERT_EQ(helberg(2, n, 1, BigInt(a)), vt_binary(n, a));
}

TEST(Helberg, CorrectsTwoErrors) {
    const Code c = helberg(2, 5, 2, BigInt(0));
    EXPECT_GE(min_levenshtein_distance(c), 6u);
    const UniqueDecodingReport r = check_unique_vs_list(c);
    EXPECT_TRUE(r.all_decodable);
    EXPECT_EQ(r.radius, 2u);
    for (std::size_t t_I = 0; t_I <= 2; ++t_I)
        EXPECT_TRUE(list_decodable(c, t_I, 2 - t_I, 1).decodable);
}

TEST(Helberg, TernaryDistance) {
    for (std::size_t n = 3; n <= 5; ++n) {
        const HelbergWeights w = helberg_weights(3, n, 2);
        for (BigInt a = 0; a < w.modulus; ++a) {
            try {
                const Code c = helberg(3, n, 2, a);
                if (c.size() >= 2) ASSERT_GE(min_levenshtein_distance(c), 6u) << n << " " << a;
            } catch (const std::invalid_argument&) {
            }
        }
    }
}

TEST(Helberg, ParameterChecks) {
    EXPECT_THROW(helberg(2, 5, 5, BigInt(0)), std::invalid_argument);
    EXPECT_THROW(helberg(2, 5, 2, BigInt(20)), std::invalid_argument);
    EXPECT_THROW(helberg(2, 5, 2, BigInt(0), BigInt(10)), std::invalid_argument);
    EXPECT_NO_THROW(helberg(2, 5, 2, BigInt(0), BigInt(25)));
}

TEST(CodeCaps, Enforced) {
    CodeOptions tight;
    tight.max_codewords = 10;
    EXPECT_THROW(vt_binary(10, 0, tight), CodeTooLarge);
    EXPECT_THROW(rs_code(PrimeField(7), 4, 2, {0, 1, 2, 3}, tight), CodeTooLarge);
}
