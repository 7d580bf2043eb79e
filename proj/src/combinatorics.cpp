#include "insdel/combinatorics.hpp"

#include <string>

namespace insdel {

namespace {

void require_positive(std::int64_t value, const char* name) {
    if (value < 1) throw std::invalid_argument(std::string(name) + " must be >= 1, got " + std::to_string(value));
}

BigInt sign(std::int64_t exponent) { return (exponent % 2 == 0) ? BigInt(1) : BigInt(-1); }

}  // namespace

BigInt CoverCounter::count(std::int64_t j, std::int64_t ell, std::int64_t v) {
    require_positive(j, "j");
    require_positive(ell, "ell");
    require_positive(v, "v");

    const BigInt subsets = binomial(j, v);
    if (BigInt(ell) > subsets) return 0;
    if (ell * v < j) return 0;

    const auto key = std::make_tuple(j, ell, v);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;

    BigInt value = binomial(subsets, ell);
    for (std::int64_t t = 1; t < j; ++t) value -= binomial(j, t) * count(t, ell, v);
    memo_.emplace(key, value);
    return value;
}

BigInt count_v_covers(std::int64_t j, std::int64_t ell, std::int64_t v) {
    thread_local CoverCounter counter;
    return counter.count(j, ell, v);
}

namespace {

struct FamilyWalk {
    const std::vector<std::uint64_t>& subsets;
    std::uint64_t full;
    std::int64_t ell;
    std::uint64_t covers = 0;

    void descend(std::size_t start, std::int64_t chosen, std::uint64_t covered) {
        if (chosen == ell) {
            if (covered == full) ++covers;
            return;
        }
        const std::size_t remaining = static_cast<std::size_t>(ell - chosen);
        for (std::size_t i = start; i + remaining <= subsets.size(); ++i)
            descend(i + 1, chosen + 1, covered | subsets[i]);
    }
};

// v-subsets of {0..j-1} as bitmasks, in lexicographic order of their sorted elements.
void collect_subsets(std::int64_t j, std::int64_t v, std::int64_t start, std::uint64_t mask, std::int64_t left,
                     std::vector<std::uint64_t>& out) {
    if (left == 0) {
        out.push_back(mask);
        return;
    }
    for (std::int64_t e = start; e + left <= j; ++e)
        collect_subsets(j, v, e + 1, mask | (std::uint64_t{1} << e), left - 1, out);
}

}  // namespace

BigInt enumerate_v_covers(std::int64_t j, std::int64_t ell, std::int64_t v, std::uint64_t cap) {
    require_positive(j, "j");
    require_positive(ell, "ell");
    require_positive(v, "v");
    if (j > 63) throw std::invalid_argument("enumerate_v_covers supports j <= 63");

    const BigInt families = binomial(binomial(j, v), ell);
    if (families > cap)
        throw EnumerationCapExceeded("enumerating " + families.str() + " families exceeds cap " +
                                     std::to_string(cap));
    if (families == 0) return 0;

    std::vector<std::uint64_t> subsets;
    collect_subsets(j, v, 0, 0, v, subsets);
    const std::uint64_t full = (std::uint64_t{1} << j) - 1;
    FamilyWalk walk{subsets, full, ell};
    walk.descend(0, 0, 0);
    return walk.covers;
}

BigInt coefficient_A(std::int64_t j, std::int64_t v) {
    require_positive(j, "j");
    require_positive(v, "v");
    if (j < v) return 0;
    return sign(j - v) * binomial(j - 1, v - 1);
}

BigInt signed_cover_sum(std::int64_t j, std::int64_t v) {
    require_positive(j, "j");
    require_positive(v, "v");
    if (j < v) return 0;
    const auto max_ell = binomial(j, v).convert_to<std::int64_t>();
    BigInt total = 0;
    for (std::int64_t ell = 1; ell <= max_ell; ++ell) total += sign(ell - 1) * count_v_covers(j, ell, v);
    return total;
}

BigInt claim8_sum(std::int64_t j, std::int64_t v) {
    require_positive(v, "v");
    if (j < std::max<std::int64_t>(v, 2))
        throw std::invalid_argument("claim8_sum requires j >= max(v, 2), got j=" + std::to_string(j) +
                                    " v=" + std::to_string(v));
    BigInt total = 0;
    for (std::int64_t t = 1; t <= j; ++t) total += sign(t - v) * binomial(j, t) * binomial(t - 1, v - 1);
    return total;
}

std::int64_t combination_weight(int r, int u) { return static_cast<std::int64_t>(r) + 1 - u; }

PhiRow phi_coefficients(int L, int r) {
    if (L < 2) throw std::invalid_argument("list size L must be >= 2, got " + std::to_string(L));
    if (r < 1 || r > L)
        throw std::invalid_argument("r must lie in [1, L], got r=" + std::to_string(r) + " L=" + std::to_string(L));

    PhiRow row{r, L, {}};
    row.coefficients.reserve(static_cast<std::size_t>(L) + 1);
    for (int j = 1; j <= L + 1; ++j) {
        BigInt value = 0;
        for (int u = 1; u <= std::min(r, j); ++u) value += combination_weight(r, u) * coefficient_A(j, u);
        row.coefficients.emplace_back(value);
    }
    return row;
}

namespace {

void require_tail_domain(int r, int j) {
    if (r < 2 || j < r + 2)
        throw std::invalid_argument("tail closed forms need r >= 2 and j >= r + 2, got r=" + std::to_string(r) +
                                    " j=" + std::to_string(j));
}

}  // namespace

Rational phi_tail_closed_form(int r, int j) {
    require_tail_domain(r, j);
    const Rational inner = Rational(r * (j - 2), r - 1) - (j - 1);
    return Rational(sign(j - r) * binomial(j - 3, r - 2)) * inner;
}

Rational paired_tail_constant(int r, int j) {
    require_tail_domain(r, j);
    const Rational first = Rational(binomial(j - 3, r - 2)) * (Rational(r * (j - 2), r - 1) - (j - 1));
    const Rational second = Rational(binomial(j - 2, r - 2)) * (Rational(r * (j - 1), r - 1) - j);
    return Rational(j + 1) * first - second;
}

Rational paired_tail_constant_closed_form(int r, int j) {
    require_tail_domain(r, j);
    return Rational(binomial(j - 3, r - 1)) * (Rational(j) - Rational(r - 1, j - r - 1));
}

}  // namespace insdel
