#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "insdel/codes.hpp"
#include "insdel/numeric.hpp"
#include "insdel/word.hpp"

namespace insdel {

// Exhaustive oracles over small codes.
//
// Radii convention: a code is (t_I, t_D, L)-list-decodable when every received word y has at
// most L codewords c that can be reached from y by <= t_D insertions and <= t_I deletions,
// i.e. |B_ID(y, t_D, t_I) ∩ C| <= L. Reversing the edit script, that is the same as c producing
// y through a channel applying <= t_I insertions and <= t_D deletions. list_decodable tallies
// channel outputs per codeword; check_direction_equivalence asserts the two sides agree.

struct VerifyOptions {
    std::uint64_t cap = 10'000'000;  ///< channel outputs per codeword (estimated before enumerating)
    unsigned workers = 1;
    bool want_witness = true;  ///< when false the tally may stop at the first overfull word
};

struct Witness {
    Word received;
    std::vector<Word> codewords;  ///< every codeword whose decoder ball holds `received`, sorted
};

struct Verdict {
    bool decodable = true;
    std::optional<Witness> witness;
    std::size_t max_insertions = 0;  ///< channel insertions t_I
    std::size_t max_deletions = 0;   ///< channel deletions t_D
    int list_size = 1;
};

/// Exact minimum pairwise insdel distance; throws for codes with fewer than two codewords.
std::size_t min_levenshtein_distance(const Code& code, unsigned workers = 1);

/// Throws BallTooLarge when a codeword's channel-output estimate exceeds options.cap.
Verdict list_decodable(const Code& code, std::size_t t_I, std::size_t t_D, int L, const VerifyOptions& options = {});

/// Re-checks a failing verdict with the membership predicate: more than L codewords, each reachable
/// from the received word within the decoder radii, and the received length in [n - t_D, n + t_I].
bool witness_holds(const Code& code, const Verdict& verdict);

/// Words y whose decoder ball B_ID(y, t_D, t_I) contains c, found by scanning every word of length
/// |c| - t_D .. |c| + t_I with the membership predicate.
WordSet decoder_preimage(const Word& c, std::size_t t_I, std::size_t t_D);

struct CheckSummary {
    std::size_t cases = 0;
    std::size_t failures = 0;
    std::optional<std::string> first_failure;

    bool ok() const noexcept { return failures == 0; }
};

/// For every word c over q symbols of length <= max_length and radii t_I, t_D <= max_radius (t_D <= |c|):
/// decoder_preimage(c, t_I, t_D) == insdel_ball(c, t_I, t_D).
CheckSummary check_direction_equivalence(int q, std::size_t max_length, std::size_t max_radius);

/// insdel_ball(y, t_D, t_I) ⊆ levenshtein_ball(y, t_I + t_D) for each word and each radius pair
/// (pairs with t_D > |y| are skipped).
CheckSummary check_ball_containment(std::span<const Word> words, std::span<const InsdelPair> radii,
                                    const BallOptions& options = {});

struct RadiusCheck {
    std::size_t t_I = 0;
    std::size_t t_D = 0;
    bool decodable = false;
};

struct UniqueDecodingReport {
    std::size_t distance = 0;
    std::size_t radius = 0;  ///< floor((d - 1) / 2)
    std::vector<RadiusCheck> checks;
    bool all_decodable = true;
};

/// list_decodable(code, t_I, t_D, 1) for all t_I + t_D <= floor((d-1)/2).
UniqueDecodingReport check_unique_vs_list(const Code& code, const VerifyOptions& options = {});

enum class CaseOutcome { Decodable, Violation, Skipped };

struct TheoremCase {
    std::size_t t_I = 0;
    std::size_t t_D = 0;
    CaseOutcome outcome = CaseOutcome::Decodable;
    std::optional<Witness> witness;
    std::string note;
};

struct TheoremReport {
    std::size_t n = 0;
    std::size_t distance = 0;
    Rational delta;  ///< d / (2n)
    int L = 2;
    std::vector<TheoremCase> cases;
    std::size_t violations = 0;
    std::size_t skipped = 0;
    bool beyond_unique_decoding = false;  ///< some checked pair has t_I + t_D >= d/2
    std::string note;
};

/// Integer (t_I, t_D) pairs with t_D/n < delta and t_I/n < rho(1 - t_D/n), in increasing t_D then t_I.
std::vector<InsdelPair> theorem_region(std::size_t n, const Rational& delta, int L);

/// Checks list-decodability at every pair of theorem_region; a non-decodable pair is a violation.
TheoremReport check_main_theorem(const Code& code, int L, const VerifyOptions& options = {});

}  // namespace insdel
