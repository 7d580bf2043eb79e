#include "insdel/word.hpp"

#include <algorithm>
#include <charconv>

namespace insdel {

namespace {

void check_alphabet(int q) {
    if (q < 2 || q > kMaxAlphabet)
        throw std::invalid_argument("alphabet size must lie in [2, 256], got " + std::to_string(q));
}

void check_same_alphabet(const Word& a, const Word& b) {
    if (a.q() != b.q())
        throw std::invalid_argument("mismatched alphabets: q=" + std::to_string(a.q()) + " vs q=" +
                                    std::to_string(b.q()));
}

}  // namespace

Word::Word(std::vector<Symbol> symbols, int q) : symbols_(std::move(symbols)), q_(q) {
    check_alphabet(q);
    for (Symbol s : symbols_)
        if (s >= q) throw std::invalid_argument("symbol " + std::to_string(s) + " outside alphabet of size " +
                                                std::to_string(q));
}

Word::Word(std::initializer_list<int> symbols, int q) : q_(q) {
    check_alphabet(q);
    symbols_.reserve(symbols.size());
    for (int s : symbols) {
        if (s < 0 || s >= q)
            throw std::invalid_argument("symbol " + std::to_string(s) + " outside alphabet of size " +
                                        std::to_string(q));
        symbols_.push_back(static_cast<Symbol>(s));
    }
}

Word Word::empty(int q) { return Word(std::vector<Symbol>{}, q); }

std::strong_ordering operator<=>(const Word& a, const Word& b) noexcept {
    if (auto c = a.size() <=> b.size(); c != 0) return c;
    if (auto c = a.symbols_ <=> b.symbols_; c != 0) return c;
    return a.q_ <=> b.q_;
}

std::size_t WordHash::operator()(const Word& w) const noexcept {
    // FNV-1a over length and symbols
    std::uint64_t h = 1469598103934665603ULL;
    auto mix = [&h](std::uint64_t byte) {
        h ^= byte;
        h *= 1099511628211ULL;
    };
    mix(w.size());
    for (Symbol s : w.symbols()) mix(s);
    return static_cast<std::size_t>(h);
}

BallTooLarge::BallTooLarge(const BigInt& estimate, std::uint64_t cap)
    : std::runtime_error("ball enumeration estimate " + estimate.str() + " exceeds cap " + std::to_string(cap)),
      estimate_(estimate) {}

std::size_t lcs_length(const Word& a, const Word& b) {
    check_same_alphabet(a, b);
    const auto x = a.symbols();
    const auto y = b.symbols();
    if (x.empty() || y.empty()) return 0;

    std::vector<std::size_t> prev(y.size() + 1, 0), cur(y.size() + 1, 0);
    for (std::size_t i = 1; i <= x.size(); ++i) {
        for (std::size_t j = 1; j <= y.size(); ++j) {
            cur[j] = x[i - 1] == y[j - 1] ? prev[j - 1] + 1 : std::max(prev[j], cur[j - 1]);
        }
        std::swap(prev, cur);
    }
    return prev[y.size()];
}

std::size_t levenshtein_distance(const Word& a, const Word& b) {
    return a.size() + b.size() - 2 * lcs_length(a, b);
}

InsdelPair minimal_insdel_pair(const Word& a, const Word& b) {
    const std::size_t ell = lcs_length(a, b);
    return {b.size() - ell, a.size() - ell};
}

bool in_insdel_ball(const Word& x, const Word& y, std::size_t max_insertions, std::size_t max_deletions) {
    if (y.size() + max_deletions < x.size() || y.size() > x.size() + max_insertions) return false;
    return minimal_insdel_pair(x, y).within(max_insertions, max_deletions);
}

bool in_levenshtein_ball(const Word& x, const Word& y, std::size_t radius) {
    const std::size_t gap = x.size() > y.size() ? x.size() - y.size() : y.size() - x.size();
    if (gap > radius) return false;
    return levenshtein_distance(x, y) <= radius;
}

BigInt insdel_ball_size_bound(std::size_t length, int q, std::size_t max_insertions, std::size_t max_deletions) {
    const auto n = static_cast<std::int64_t>(length);
    BigInt deletion_choices = 0;
    for (std::size_t i = 0; i <= std::min(max_deletions, length); ++i)
        deletion_choices += binomial(n, static_cast<std::int64_t>(i));

    // supersequences of a length-n word with exactly t insertions: sum_i C(n+t, i) (q-1)^i
    BigInt insertion_outputs = 0;
    for (std::size_t t = 0; t <= max_insertions; ++t) {
        BigInt power = 1;
        for (std::size_t i = 0; i <= t; ++i) {
            insertion_outputs += binomial(n + static_cast<std::int64_t>(t), static_cast<std::int64_t>(i)) * power;
            power *= q - 1;
        }
    }
    return deletion_choices * insertion_outputs;
}

BigInt levenshtein_ball_size_bound(std::size_t length, int q, std::size_t radius) {
    BigInt total = 0;
    for (std::size_t deletions = 0; deletions <= std::min(radius, length); ++deletions)
        total += insdel_ball_size_bound(length, q, radius - deletions, 0) *
                 binomial(static_cast<std::int64_t>(length), static_cast<std::int64_t>(deletions));
    return total;
}

namespace {

void enforce_cap(const BigInt& estimate, std::uint64_t cap) {
    if (estimate > cap) throw BallTooLarge(estimate, cap);
}

// Distinct words obtained from x by exactly k deletions, for k = 0..max_deletions.
std::vector<std::vector<Word>> deletion_levels(const Word& x, std::size_t max_deletions) {
    std::vector<std::vector<Word>> levels;
    levels.push_back({x});
    for (std::size_t k = 1; k <= max_deletions && k <= x.size(); ++k) {
        WordHashSet next;
        for (const Word& w : levels.back()) {
            const auto s = w.symbols();
            for (std::size_t i = 0; i < s.size(); ++i) {
                if (i > 0 && s[i] == s[i - 1]) continue;  // same result as deleting s[i-1]
                std::vector<Symbol> shorter;
                shorter.reserve(s.size() - 1);
                shorter.insert(shorter.end(), s.begin(), s.begin() + static_cast<std::ptrdiff_t>(i));
                shorter.insert(shorter.end(), s.begin() + static_cast<std::ptrdiff_t>(i) + 1, s.end());
                next.emplace(std::move(shorter), w.q());
            }
        }
        levels.emplace_back(next.begin(), next.end());
    }
    return levels;
}

// Adds every word reachable from base by at most max_insertions insertions.
void add_supersequences(const Word& base, std::size_t max_insertions, WordHashSet& out) {
    std::vector<Word> current{base};
    out.insert(base);
    const int q = base.q();
    for (std::size_t k = 1; k <= max_insertions; ++k) {
        WordHashSet next;
        for (const Word& w : current) {
            const auto s = w.symbols();
            for (std::size_t pos = 0; pos <= s.size(); ++pos) {
                for (int sym = 0; sym < q; ++sym) {
                    // inserting sym right after an equal symbol repeats an earlier insertion
                    if (pos > 0 && s[pos - 1] == sym) continue;
                    std::vector<Symbol> longer;
                    longer.reserve(s.size() + 1);
                    longer.insert(longer.end(), s.begin(), s.begin() + static_cast<std::ptrdiff_t>(pos));
                    longer.push_back(static_cast<Symbol>(sym));
                    longer.insert(longer.end(), s.begin() + static_cast<std::ptrdiff_t>(pos), s.end());
                    next.emplace(std::move(longer), q);
                }
            }
        }
        current.assign(next.begin(), next.end());
        out.insert(current.begin(), current.end());
    }
}

}  // namespace

WordHashSet insdel_ball_unordered(const Word& x, std::size_t max_insertions, std::size_t max_deletions,
                                  const BallOptions& options) {
    if (max_deletions > x.size())
        throw std::invalid_argument("deletion radius " + std::to_string(max_deletions) + " exceeds word length " +
                                    std::to_string(x.size()));
    enforce_cap(insdel_ball_size_bound(x.size(), x.q(), max_insertions, max_deletions), options.cap);

    WordHashSet ball;
    for (const auto& level : deletion_levels(x, max_deletions))
        for (const Word& base : level) add_supersequences(base, max_insertions, ball);
    return ball;
}

WordSet insdel_ball(const Word& x, std::size_t max_insertions, std::size_t max_deletions,
                    const BallOptions& options) {
    auto ball = insdel_ball_unordered(x, max_insertions, max_deletions, options);
    return WordSet(ball.begin(), ball.end());
}

WordSet levenshtein_ball(const Word& x, std::size_t radius, const BallOptions& options) {
    enforce_cap(levenshtein_ball_size_bound(x.size(), x.q(), radius), options.cap);

    WordHashSet ball;
    const auto levels = deletion_levels(x, std::min(radius, x.size()));
    for (std::size_t deletions = 0; deletions < levels.size(); ++deletions)
        for (const Word& base : levels[deletions]) add_supersequences(base, radius - deletions, ball);
    return WordSet(ball.begin(), ball.end());
}

std::vector<Word> all_words(int q, std::size_t length) {
    check_alphabet(q);
    std::vector<Word> words;
    std::vector<Symbol> digits(length, 0);
    while (true) {
        words.emplace_back(digits, q);
        std::size_t i = length;
        while (i > 0) {
            --i;
            if (digits[i] + 1 < q) {
                ++digits[i];
                break;
            }
            digits[i] = 0;
            if (i == 0) return words;
        }
        if (length == 0) return words;
    }
}

std::string to_string(const Word& w) {
    std::string out;
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (i > 0) out.push_back(',');
        out += std::to_string(static_cast<int>(w[i]));
    }
    return out;
}

Word parse_word(std::string_view text, int q) {
    check_alphabet(q);
    std::vector<Symbol> symbols;
    if (text.empty()) return Word(symbols, q);
    std::size_t start = 0;
    while (true) {
        std::size_t comma = text.find(',', start);
        std::string_view token = text.substr(start, comma == std::string_view::npos ? text.size() - start
                                                                                    : comma - start);
        int value = -1;
        auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
        if (ec != std::errc{} || ptr != token.data() + token.size() || token.empty())
            throw std::invalid_argument("malformed word symbol '" + std::string(token) + "'");
        if (value < 0 || value >= q)
            throw std::invalid_argument("symbol " + std::to_string(value) + " outside alphabet of size " +
                                        std::to_string(q));
        symbols.push_back(static_cast<Symbol>(value));
        if (comma == std::string_view::npos) break;
        start = comma + 1;
    }
    return Word(std::move(symbols), q);
}

}  // namespace insdel
