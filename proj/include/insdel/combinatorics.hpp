#pragma once

#include <cstdint>
#include <map>
#include <stdexcept>
#include <tuple>
#include <vector>

#include "insdel/numeric.hpp"

namespace insdel {

/// Counts of v-covers: families of ell distinct v-subsets of {1..j} whose union is {1..j}.
///
/// Evaluated through the subtraction recursion
///   A(j, ell, v) = C(C(j, v), ell) - sum_{t=1}^{j-1} C(j, t) A(t, ell, v),
/// which removes the families whose union is a proper t-subset. The memo is owned by the
/// instance; the free function count_v_covers keeps one per thread.
class CoverCounter {
public:
    BigInt count(std::int64_t j, std::int64_t ell, std::int64_t v);
    std::size_t memo_size() const noexcept { return memo_.size(); }

private:
    std::map<std::tuple<std::int64_t, std::int64_t, std::int64_t>, BigInt> memo_;
};

BigInt count_v_covers(std::int64_t j, std::int64_t ell, std::int64_t v);

class EnumerationCapExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Brute-force v-cover count: walks the ell-element families of v-subsets of {1..j} in
/// lexicographic order of subset index. Throws EnumerationCapExceeded when C(C(j,v), ell) > cap.
BigInt enumerate_v_covers(std::int64_t j, std::int64_t ell, std::int64_t v, std::uint64_t cap = 100'000'000);

/// Inclusion-exclusion coefficient of the j-fold intersection sum in the union of all
/// v-fold intersections: (-1)^(j-v) C(j-1, v-1), and 0 when j < v.
BigInt coefficient_A(std::int64_t j, std::int64_t v);

/// The same coefficient as the signed cover sum  sum_ell (-1)^(ell-1) A(j, ell, v).
BigInt signed_cover_sum(std::int64_t j, std::int64_t v);

/// sum_{t=1}^{j} (-1)^(t-v) C(j, t) C(t-1, v-1). Requires v >= 1 and j >= max(v, 2).
BigInt claim8_sum(std::int64_t j, std::int64_t v);

/// Coefficients of the j-fold intersection sums (j = 1..L+1) in the weighted combination
/// sum_{u=1}^{r} (r+1-u) * Union_u.
struct PhiRow {
    int r = 0;
    int L = 0;
    std::vector<Rational> coefficients;  ///< coefficients[j-1] holds the coefficient of index j

    const Rational& at(int j) const { return coefficients.at(static_cast<std::size_t>(j - 1)); }
};

/// Weight c_{r,u} = r + 1 - u of the u-fold union in the r-th combination.
std::int64_t combination_weight(int r, int u);

PhiRow phi_coefficients(int L, int r);

/// Closed form (-1)^(j-r) C(j-3, r-2) (r(j-2)/(r-1) - (j-1)) of the tail coefficient,
/// valid for r >= 2 and j >= r + 2.
Rational phi_tail_closed_form(int r, int j);

/// Net multiplicity of each (j+1)-fold intersection after pairing the j and j+1 tail terms:
/// (j+1) C(j-3,r-2)(r(j-2)/(r-1)-(j-1)) - C(j-2,r-2)(r(j-1)/(r-1)-j). Requires r >= 2, j >= r+2.
Rational paired_tail_constant(int r, int j);

/// C(j-3, r-1) (j - (r-1)/(j-r-1)); equal to paired_tail_constant on its domain.
Rational paired_tail_constant_closed_form(int r, int j);

}  // namespace insdel
