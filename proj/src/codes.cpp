#include "insdel/codes.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <istream>
#include <limits>
#include <numeric>
#include <ostream>
#include <random>
#include <sstream>
#include <string>

namespace insdel {

Code::Code(int q, std::size_t n, std::vector<Word> codewords) : q_(q), n_(n), codewords_(std::move(codewords)) {
    if (codewords_.empty()) throw std::invalid_argument("a code must contain at least one codeword");
    for (const Word& c : codewords_) {
        if (c.q() != q) throw std::invalid_argument("codeword alphabet differs from code alphabet");
        if (c.size() != n)
            throw std::invalid_argument("codeword '" + to_string(c) + "' has length " + std::to_string(c.size()) +
                                        ", expected " + std::to_string(n));
    }
    std::sort(codewords_.begin(), codewords_.end());
    if (std::adjacent_find(codewords_.begin(), codewords_.end()) != codewords_.end())
        throw std::invalid_argument("duplicate codeword");
}

bool Code::contains(const Word& w) const { return std::binary_search(codewords_.begin(), codewords_.end(), w); }

double Code::rate() const {
    if (n_ == 0) return 0.0;
    return std::log(static_cast<double>(codewords_.size())) / std::log(static_cast<double>(q_)) /
           static_cast<double>(n_);
}

namespace {

bool is_prime(std::uint32_t p) {
    if (p < 2) return false;
    for (std::uint64_t d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

BigInt search_space(int q, std::size_t n) { return boost::multiprecision::pow(BigInt(q), static_cast<unsigned>(n)); }

void check_search_space(int q, std::size_t n, const CodeOptions& options) {
    const BigInt space = search_space(q, n);
    if (space > options.max_search_space)
        throw CodeTooLarge("scanning " + space.str() + " words exceeds the search cap " +
                           std::to_string(options.max_search_space));
}

// Calls visit(digits) for every word of {0..q-1}^n in lexicographic order.
template <typename Visit>
void for_each_word(int q, std::size_t n, Visit&& visit) {
    std::vector<Symbol> digits(n, 0);
    while (true) {
        visit(digits);
        std::size_t i = n;
        while (true) {
            if (i == 0) return;
            --i;
            if (digits[i] + 1 < q) {
                ++digits[i];
                break;
            }
            digits[i] = 0;
        }
    }
}

std::vector<Word> checked_collect(std::vector<Word> words, const CodeOptions& options) {
    if (words.size() > options.max_codewords)
        throw CodeTooLarge(std::to_string(words.size()) + " codewords exceed the cap " +
                           std::to_string(options.max_codewords));
    return words;
}

}  // namespace

PrimeField::PrimeField(std::uint32_t p) : p_(p) {
    if (!is_prime(p)) throw std::invalid_argument(std::to_string(p) + " is not prime");
    if (p > kMaxAlphabet) throw std::invalid_argument("field size must not exceed 256 symbols");
}

std::uint32_t PrimeField::pow(std::uint32_t a, std::uint64_t e) const noexcept {
    std::uint32_t result = 1 % p_;
    std::uint32_t base = a % p_;
    while (e > 0) {
        if (e & 1) result = mul(result, base);
        base = mul(base, base);
        e >>= 1;
    }
    return result;
}

std::uint32_t PrimeField::inv(std::uint32_t a) const {
    if (a % p_ == 0) throw std::domain_error("zero has no multiplicative inverse");
    return pow(a, p_ - 2);
}

ReedSolomonView::ReedSolomonView(PrimeField field, std::size_t k, std::vector<std::uint32_t> alpha)
    : field_(field), k_(k), alpha_(std::move(alpha)) {
    const std::size_t n = alpha_.size();
    if (k_ < 1 || k_ > n) throw std::invalid_argument("RS dimension must satisfy 1 <= k <= n");
    if (n > field_.p()) throw std::invalid_argument("RS length n must not exceed the field size");
    std::vector<std::uint32_t> sorted = alpha_;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        throw std::invalid_argument("RS evaluation points must be distinct");
    for (auto a : alpha_)
        if (a >= field_.p()) throw std::invalid_argument("RS evaluation point outside the field");
}

BigInt ReedSolomonView::size() const { return search_space(static_cast<int>(field_.p()), k_); }

Word ReedSolomonView::encode(std::span<const std::uint32_t> coefficients) const {
    if (coefficients.size() != k_) throw std::invalid_argument("expected k coefficients");
    std::vector<Symbol> symbols;
    symbols.reserve(alpha_.size());
    for (auto x : alpha_) {
        std::uint32_t acc = 0;
        for (std::size_t i = k_; i-- > 0;) acc = field_.add(field_.mul(acc, x), coefficients[i] % field_.p());
        symbols.push_back(static_cast<Symbol>(acc));
    }
    return Word(std::move(symbols), static_cast<int>(field_.p()));
}

Word ReedSolomonView::codeword(std::uint64_t index) const {
    std::vector<std::uint32_t> coefficients(k_);
    for (std::size_t i = 0; i < k_; ++i) {
        coefficients[i] = static_cast<std::uint32_t>(index % field_.p());
        index /= field_.p();
    }
    return encode(coefficients);
}

Code rs_code(const PrimeField& field, std::size_t n, std::size_t k, const std::vector<std::uint32_t>& alpha,
             const CodeOptions& options) {
    if (alpha.size() != n) throw std::invalid_argument("expected n evaluation points");
    ReedSolomonView view(field, k, alpha);
    const BigInt count = view.size();
    if (count > options.max_codewords)
        throw CodeTooLarge("RS code with " + count.str() + " codewords exceeds the cap; use ReedSolomonView");
    const auto total = count.convert_to<std::uint64_t>();
    std::vector<Word> words;
    words.reserve(total);
    for (std::uint64_t i = 0; i < total; ++i) words.push_back(view.codeword(i));
    return Code(static_cast<int>(field.p()), n, std::move(words));
}

std::size_t rs_target_distance(std::size_t n, std::size_t k) {
    const auto raw = 2 * static_cast<std::int64_t>(n) - 4 * static_cast<std::int64_t>(k) + 4;
    return static_cast<std::size_t>(std::clamp<std::int64_t>(raw, 0, 2 * static_cast<std::int64_t>(n)));
}

namespace {

// Minimum pairwise insdel distance, abandoning once it drops to `floor_value` or below.
std::size_t min_distance_above(const std::vector<Word>& words, std::size_t floor_value) {
    std::size_t best = std::numeric_limits<std::size_t>::max();
    for (std::size_t i = 0; i < words.size(); ++i) {
        for (std::size_t j = i + 1; j < words.size(); ++j) {
            best = std::min(best, levenshtein_distance(words[i], words[j]));
            if (best <= floor_value) return best;
        }
    }
    return best;
}

}  // namespace

RsSearchResult rs_search_eval_points(const PrimeField& field, std::size_t n, std::size_t k,
                                     std::size_t target_distance, std::uint64_t budget, std::uint64_t seed) {
    const std::uint32_t p = field.p();
    if (k < 1 || k > n || n > p) throw std::invalid_argument("RS search needs 1 <= k <= n <= p");
    if (budget == 0) throw std::invalid_argument("search budget must be positive");
    if (search_space(static_cast<int>(p), k) > 100'000)
        throw CodeTooLarge("RS search limited to codes with at most 100000 codewords");
    if (search_space(static_cast<int>(p), k) < 2) throw std::invalid_argument("RS search needs >= 2 codewords");

    RsSearchResult result;
    result.target_distance = std::min(target_distance, 2 * n);
    const std::size_t ceiling = std::min(2 * n, 2 * (n - k + 1));

    BigInt ordered = 1;
    for (std::size_t i = 0; i < n; ++i) ordered *= p - i;
    const bool exhaustive = ordered <= budget;

    bool done = false;
    auto consider = [&](const std::vector<std::uint32_t>& alpha) {
        ReedSolomonView view(field, k, alpha);
        const auto total = view.size().convert_to<std::uint64_t>();
        std::vector<Word> words;
        words.reserve(total);
        for (std::uint64_t i = 0; i < total; ++i) words.push_back(view.codeword(i));
        ++result.candidates_examined;
        const std::size_t d = min_distance_above(words, result.alpha.empty() ? 0 : result.achieved_distance);
        if (result.alpha.empty() || d > result.achieved_distance) {
            result.achieved_distance = d;
            result.alpha = alpha;
        }
        if (result.achieved_distance >= ceiling) done = true;
    };

    if (exhaustive) {
        std::vector<std::uint32_t> alpha;
        std::vector<bool> used(p, false);
        auto descend = [&](auto&& self) -> void {
            if (done) return;
            if (alpha.size() == n) {
                consider(alpha);
                return;
            }
            for (std::uint32_t x = 0; x < p && !done; ++x) {
                if (used[x]) continue;
                used[x] = true;
                alpha.push_back(x);
                self(self);
                alpha.pop_back();
                used[x] = false;
            }
        };
        descend(descend);
    } else {
        std::mt19937_64 rng(seed);
        std::vector<std::uint32_t> pool(p);
        std::iota(pool.begin(), pool.end(), 0u);
        for (std::uint64_t trial = 0; trial < budget && !done; ++trial) {
            // partial Fisher-Yates; drawn explicitly so results do not depend on the library's shuffle
            for (std::size_t i = 0; i < n; ++i) {
                const std::uint64_t span = p - i;
                const std::size_t pick = i + static_cast<std::size_t>(rng() % span);
                std::swap(pool[i], pool[pick]);
            }
            consider(std::vector<std::uint32_t>(pool.begin(), pool.begin() + static_cast<std::ptrdiff_t>(n)));
        }
    }

    result.exhaustive = exhaustive;
    result.target_met = result.achieved_distance >= result.target_distance;
    return result;
}

std::size_t min_hamming_distance(const Code& code) {
    if (code.size() < 2) throw std::invalid_argument("minimum distance needs at least two codewords");
    std::size_t best = std::numeric_limits<std::size_t>::max();
    const auto words = code.codewords();
    for (std::size_t i = 0; i < words.size(); ++i) {
        for (std::size_t j = i + 1; j < words.size(); ++j) {
            std::size_t d = 0;
            for (std::size_t t = 0; t < code.length(); ++t) d += words[i][t] != words[j][t];
            best = std::min(best, d);
        }
    }
    return best;
}

Code vt_binary(std::size_t n, std::size_t a, const CodeOptions& options) {
    if (n < 1) throw std::invalid_argument("VT length must be >= 1");
    if (a > n) throw std::invalid_argument("VT syndrome a must lie in [0, n]");
    check_search_space(2, n, options);
    std::vector<Word> words;
    for_each_word(2, n, [&](const std::vector<Symbol>& c) {
        std::size_t syndrome = 0;
        for (std::size_t i = 0; i < n; ++i) syndrome += (i + 1) * c[i];
        if (syndrome % (n + 1) == a) words.emplace_back(c, 2);
    });
    return Code(2, n, checked_collect(std::move(words), options));
}

std::vector<int> vt_ascent_vector(const Word& s) {
    std::vector<int> ascent;
    for (std::size_t i = 1; i < s.size(); ++i) ascent.push_back(s[i] >= s[i - 1] ? 1 : 0);
    return ascent;
}

Code vt_qary(std::size_t n, int q, std::size_t a, int b, const CodeOptions& options) {
    if (q <= 2 || q > kMaxAlphabet) throw std::invalid_argument("q-ary VT codes need 2 < q <= 256");
    if (n < 1) throw std::invalid_argument("VT length must be >= 1");
    if (a >= n) throw std::invalid_argument("q-ary VT syndrome a must lie in [0, n-1]");
    if (b < 0 || b >= q) throw std::invalid_argument("q-ary VT sum b must lie in [0, q-1]");
    check_search_space(q, n, options);
    std::vector<Word> words;
    for_each_word(q, n, [&](const std::vector<Symbol>& s) {
        std::size_t syndrome = 0;
        std::size_t sum = s.empty() ? 0 : s[0];
        for (std::size_t i = 1; i < n; ++i) {
            if (s[i] >= s[i - 1]) syndrome += i;
            sum += s[i];
        }
        if (syndrome % n == a && sum % static_cast<std::size_t>(q) == static_cast<std::size_t>(b))
            words.emplace_back(s, q);
    });
    return Code(q, n, checked_collect(std::move(words), options));
}

HelbergWeights helberg_weights(int q, std::size_t n, std::size_t s, std::optional<BigInt> modulus) {
    if (q < 2 || q > kMaxAlphabet) throw std::invalid_argument("Helberg codes need 2 <= q <= 256");
    if (s < 1 || s >= n) throw std::invalid_argument("Helberg codes need 1 <= s < n");
    HelbergWeights w{q, s, {}, 0};
    w.weights.reserve(n + 1);
    for (std::size_t i = 1; i <= n + 1; ++i) {
        BigInt tail = 0;
        for (std::size_t j = 1; j <= s && j < i; ++j) tail += w.weights[i - j - 1];
        w.weights.push_back(1 + (q - 1) * tail);
    }
    w.modulus = modulus.value_or(w.weights.back());
    if (w.modulus < w.weights.back())
        throw std::invalid_argument("Helberg modulus " + w.modulus.str() + " is below v_{n+1} = " +
                                    w.weights.back().str());
    return w;
}

Code helberg(int q, std::size_t n, std::size_t s, const BigInt& a, std::optional<BigInt> modulus,
             const CodeOptions& options) {
    const HelbergWeights w = helberg_weights(q, n, s, std::move(modulus));
    if (a < 0 || a >= w.modulus) throw std::invalid_argument("Helberg residue a must lie in [0, m)");
    check_search_space(q, n, options);
    if (w.modulus > std::numeric_limits<std::uint64_t>::max() / 2)
        throw CodeTooLarge("Helberg modulus too large for enumeration");

    const auto m = w.modulus.convert_to<std::uint64_t>();
    const auto target = a.convert_to<std::uint64_t>();
    std::vector<std::uint64_t> reduced;
    for (std::size_t i = 0; i < n; ++i) reduced.push_back(BigInt(w.weights[i] % w.modulus).convert_to<std::uint64_t>());

    std::vector<Word> words;
    for_each_word(q, n, [&](const std::vector<Symbol>& x) {
        unsigned __int128 sum = 0;
        for (std::size_t i = 0; i < n; ++i) sum = (sum + static_cast<unsigned __int128>(reduced[i]) * x[i]) % m;
        if (static_cast<std::uint64_t>(sum) == target) words.emplace_back(x, q);
    });
    if (words.empty())
        throw std::invalid_argument("Helberg code with residue " + a.str() + " is empty");
    return Code(q, n, checked_collect(std::move(words), options));
}

void write_code(std::ostream& out, const Code& code) {
    out << "q=" << code.q() << " n=" << code.length() << '\n';
    for (const Word& c : code.codewords()) out << to_string(c) << '\n';
}

Code read_code(std::istream& in) {
    std::string header;
    if (!std::getline(in, header)) throw std::invalid_argument("code file is empty");
    int q = 0;
    long long n = -1;
    if (std::sscanf(header.c_str(), "q=%d n=%lld", &q, &n) != 2 || n < 0)
        throw std::invalid_argument("malformed code header '" + header + "', expected 'q=<q> n=<n>'");

    std::vector<Word> words;
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty() && n > 0) continue;
        words.push_back(parse_word(line, q));
    }
    return Code(q, static_cast<std::size_t>(n), std::move(words));
}

void save_code(const std::filesystem::path& path, const Code& code) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open '" + path.string() + "' for writing");
    write_code(out, code);
}

Code load_code(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open '" + path.string() + "'");
    return read_code(in);
}

}  // namespace insdel
