#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <set>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_set>
#include <vector>

#include "insdel/numeric.hpp"

namespace insdel {

using Symbol = std::uint8_t;

/// Largest supported alphabet; symbols are stored as single bytes.
inline constexpr int kMaxAlphabet = 256;

/// A finite sequence over the alphabet {0, ..., q-1}.
class Word {
public:
    /// Empty binary word.
    Word() = default;

    Word(std::vector<Symbol> symbols, int q);
    Word(std::initializer_list<int> symbols, int q);

    /// Empty word over an alphabet of size q.
    static Word empty(int q);

    int q() const noexcept { return q_; }
    std::size_t size() const noexcept { return symbols_.size(); }
    bool is_empty() const noexcept { return symbols_.empty(); }
    std::span<const Symbol> symbols() const noexcept { return symbols_; }
    Symbol operator[](std::size_t i) const { return symbols_[i]; }

    /// Shorter words order first; equal lengths compare lexicographically.
    friend std::strong_ordering operator<=>(const Word& a, const Word& b) noexcept;
    friend bool operator==(const Word& a, const Word& b) noexcept = default;

private:
    std::vector<Symbol> symbols_;
    int q_ = 2;
};

struct WordHash {
    std::size_t operator()(const Word& w) const noexcept;
};

using WordSet = std::set<Word>;
using WordHashSet = std::unordered_set<Word, WordHash>;

/// Numbers of insertions and deletions turning one word into another.
struct InsdelPair {
    std::size_t insertions = 0;
    std::size_t deletions = 0;

    std::size_t total() const noexcept { return insertions + deletions; }
    bool within(std::size_t max_insertions, std::size_t max_deletions) const noexcept {
        return insertions <= max_insertions && deletions <= max_deletions;
    }
    friend auto operator<=>(const InsdelPair&, const InsdelPair&) = default;
};

/// Raised when a ball would exceed the enumeration cap.
class BallTooLarge : public std::runtime_error {
public:
    BallTooLarge(const BigInt& estimate, std::uint64_t cap);
    const BigInt& estimate() const noexcept { return estimate_; }

private:
    BigInt estimate_;
};

struct BallOptions {
    std::uint64_t cap = 10'000'000;
};

std::size_t lcs_length(const Word& a, const Word& b);

/// Insertion/deletion distance |a| + |b| - 2 LCS(a, b).
std::size_t levenshtein_distance(const Word& a, const Word& b);

/// Componentwise-minimal (insertions, deletions) turning a into b.
InsdelPair minimal_insdel_pair(const Word& a, const Word& b);

/// True when y is reachable from x by at most max_insertions insertions and max_deletions deletions.
bool in_insdel_ball(const Word& x, const Word& y, std::size_t max_insertions, std::size_t max_deletions);

bool in_levenshtein_ball(const Word& x, const Word& y, std::size_t radius);

/// Upper bound on |insdel_ball(x, t_I, t_D)| for any centre of the given length.
BigInt insdel_ball_size_bound(std::size_t length, int q, std::size_t max_insertions, std::size_t max_deletions);

BigInt levenshtein_ball_size_bound(std::size_t length, int q, std::size_t radius);

/// All words reachable from x by at most max_insertions insertions and at most max_deletions deletions.
WordSet insdel_ball(const Word& x, std::size_t max_insertions, std::size_t max_deletions,
                    const BallOptions& options = {});

/// Same set as insdel_ball, unordered; used on hot enumeration paths.
WordHashSet insdel_ball_unordered(const Word& x, std::size_t max_insertions, std::size_t max_deletions,
                                  const BallOptions& options = {});

WordSet levenshtein_ball(const Word& x, std::size_t radius, const BallOptions& options = {});

/// Every word of the given length over {0..q-1}, in lexicographic order.
std::vector<Word> all_words(int q, std::size_t length);

/// Comma-separated decimal symbols; the empty word is the empty string.
std::string to_string(const Word& w);
Word parse_word(std::string_view text, int q);

}  // namespace insdel
