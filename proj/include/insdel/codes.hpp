#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

#include "insdel/numeric.hpp"
#include "insdel/word.hpp"

namespace insdel {

/// A non-empty set of distinct length-n words over {0..q-1}, kept sorted.
class Code {
public:
    Code(int q, std::size_t n, std::vector<Word> codewords);

    int q() const noexcept { return q_; }
    std::size_t length() const noexcept { return n_; }
    std::size_t size() const noexcept { return codewords_.size(); }
    std::span<const Word> codewords() const noexcept { return codewords_; }
    const Word& operator[](std::size_t i) const { return codewords_[i]; }
    bool contains(const Word& w) const;

    /// log_q |C| / n
    double rate() const;

    friend bool operator==(const Code&, const Code&) = default;

private:
    int q_;
    std::size_t n_;
    std::vector<Word> codewords_;
};

class CodeTooLarge : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct CodeOptions {
    std::uint64_t max_codewords = 1'000'000;
    std::uint64_t max_search_space = 100'000'000;  ///< words scanned by congruence constructions
};

class PrimeField {
public:
    explicit PrimeField(std::uint32_t p);

    std::uint32_t p() const noexcept { return p_; }
    std::uint32_t add(std::uint32_t a, std::uint32_t b) const noexcept { return (a + b) % p_; }
    std::uint32_t sub(std::uint32_t a, std::uint32_t b) const noexcept { return (a + p_ - b) % p_; }
    std::uint32_t mul(std::uint32_t a, std::uint32_t b) const noexcept {
        return static_cast<std::uint32_t>(std::uint64_t{a} * b % p_);
    }
    std::uint32_t neg(std::uint32_t a) const noexcept { return a == 0 ? 0 : p_ - a; }
    std::uint32_t pow(std::uint32_t a, std::uint64_t e) const noexcept;
    /// Throws std::domain_error for zero.
    std::uint32_t inv(std::uint32_t a) const;

private:
    std::uint32_t p_;
};

/// Evaluations of all polynomials of degree < k at the points alpha, enumerated on demand.
/// Index i encodes the coefficients f_0..f_{k-1} in base p, f_0 least significant.
class ReedSolomonView {
public:
    ReedSolomonView(PrimeField field, std::size_t k, std::vector<std::uint32_t> alpha);

    const PrimeField& field() const noexcept { return field_; }
    std::size_t length() const noexcept { return alpha_.size(); }
    std::size_t dimension() const noexcept { return k_; }
    std::span<const std::uint32_t> evaluation_points() const noexcept { return alpha_; }
    /// p^k
    BigInt size() const;
    Word codeword(std::uint64_t index) const;
    Word encode(std::span<const std::uint32_t> coefficients) const;

private:
    PrimeField field_;
    std::size_t k_;
    std::vector<std::uint32_t> alpha_;
};

/// RS_alpha(n, k) over a prime field, materialised. Requires 1 <= k <= n <= p, alpha.size() == n, distinct alpha.
Code rs_code(const PrimeField& field, std::size_t n, std::size_t k, const std::vector<std::uint32_t>& alpha,
             const CodeOptions& options = {});

/// 2n - 4k + 4 clipped to [0, 2n]; the distance reachable by a well-chosen alpha.
std::size_t rs_target_distance(std::size_t n, std::size_t k);

struct RsSearchResult {
    std::vector<std::uint32_t> alpha;     ///< best evaluation vector found
    std::size_t achieved_distance = 0;    ///< its minimum insdel distance
    std::size_t target_distance = 0;      ///< requested target clipped to 2n
    bool target_met = false;
    std::uint64_t candidates_examined = 0;
    bool exhaustive = false;              ///< every ordered alpha was examined (or the search stopped at the ceiling)
};

/// Searches ordered evaluation vectors for the largest minimum insdel distance. Exhaustive in
/// lexicographic order when p!/(p-n)! <= budget, otherwise `budget` random vectors from `seed`.
/// Stops early once the ceiling min(2n, 2(n-k+1)) is reached.
RsSearchResult rs_search_eval_points(const PrimeField& field, std::size_t n, std::size_t k, std::size_t target_distance,
                                     std::uint64_t budget, std::uint64_t seed = 0);

/// Minimum Hamming distance over distinct pairs; requires at least two codewords.
std::size_t min_hamming_distance(const Code& code);

/// {c in {0,1}^n : sum_{i=1}^n i c_i = a (mod n+1)}, 0 <= a <= n.
Code vt_binary(std::size_t n, std::size_t a, const CodeOptions& options = {});

/// Up/down indicator of a q-ary word: entry i (1-based, i < n) is 1 iff s_i >= s_{i-1} (0-based symbols).
std::vector<int> vt_ascent_vector(const Word& s);

/// {s in Z_q^n : sum_{i=1}^{n-1} i alpha_i = a (mod n), sum s_i = b (mod q)} with alpha the ascent vector.
/// Requires q > 2, 0 <= a <= n-1, 0 <= b <= q-1.
Code vt_qary(std::size_t n, int q, std::size_t a, int b, const CodeOptions& options = {});

struct HelbergWeights {
    int q = 2;
    std::size_t s = 1;
    std::vector<BigInt> weights;  ///< v_1..v_{n+1}
    BigInt modulus;               ///< m >= v_{n+1}

    const BigInt& v(std::size_t i) const { return weights.at(i - 1); }
};

/// v_i = 1 + (q-1) sum_{j=1}^{s} v_{i-j}, v_i = 0 for i <= 0; modulus defaults to v_{n+1}.
HelbergWeights helberg_weights(int q, std::size_t n, std::size_t s, std::optional<BigInt> modulus = std::nullopt);

/// {x in Z_q^n : sum v_i x_i = a (mod m)}. Requires q >= 2, 1 <= s < n, m >= v_{n+1}, 0 <= a < m.
Code helberg(int q, std::size_t n, std::size_t s, const BigInt& a, std::optional<BigInt> modulus = std::nullopt,
             const CodeOptions& options = {});

/// Text format: header "q=<q> n=<n>", then one comma-separated codeword per line.
void write_code(std::ostream& out, const Code& code);
Code read_code(std::istream& in);
void save_code(const std::filesystem::path& path, const Code& code);
Code load_code(const std::filesystem::path& path);

}  // namespace insdel
