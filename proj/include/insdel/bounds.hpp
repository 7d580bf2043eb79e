#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "insdel/numeric.hpp"

namespace insdel {

// The list-decoding bound rho^(delta, L)(x) is the upper envelope of the L lines
//   u_r(x) = (2L - r + 1)/(L + 1) * x - (L / r) * (1 - delta),   r = 1..L,
// on the domain x in [1 - delta, 1], where x = 1 - tau_D. A code of relative minimum
// insdel distance delta is (tau_I, tau_D, L)-list-decodable whenever tau_D < delta and
// tau_I < rho(1 - tau_D).
//
// Exact evaluation uses Rational throughout; the double overloads are for reports and CSV.

/// Line u_r evaluated anywhere (no domain check).
Rational rho_line(const Rational& delta, int L, int r, const Rational& x);

/// max_r u_r(x). Throws std::domain_error unless L >= 2, 0 < delta < 1, 1 - delta <= x <= 1.
Rational rho(const Rational& delta, int L, const Rational& x);
double rho(double delta, int L, double x);

/// x above which u_r beats u_{r+1}: L(L+1)/(r(r+1)) * (1 - delta), for r = 1..L-1.
Rational rho_breakpoint(const Rational& delta, int L, int r);

/// Smallest r in 1..L with L(L+1)/(r(r+1)) * (1 - delta) < 1; the line active at x = 1.
int rho_r_min(const Rational& delta, int L);

struct BoundPiece {
    int r = 0;           ///< index of the active line
    Rational lo;         ///< left end; open except for the first piece
    Rational hi;         ///< right end, closed
    Rational slope;
    Rational intercept;

    Rational value(const Rational& x) const { return slope * x + intercept; }
};

struct PiecewiseBound {
    Rational delta;
    int L = 0;
    int r_min = 0;
    std::vector<BoundPiece> pieces;  ///< ordered by increasing x, first piece starts at 1 - delta

    const BoundPiece& piece_at(const Rational& x) const;
    Rational evaluate(const Rational& x) const { return piece_at(x).value(x); }
};

PiecewiseBound rho_piecewise(const Rational& delta, int L);

/// delta - tau_D; requires 0 <= tau_D < delta.
Rational unique_decoding_limit(const Rational& delta, const Rational& tau_D);

/// Prior-bound quadratic x^2/(1 - delta) - x.
Rational hy_phi1(const Rational& delta, const Rational& x);
double hy_phi1(double delta, double x);

/// Prior-bound quadratic ((L+1)x^2 - (L+1)(1-delta)x + (1-delta) - 1) / (L(1-delta) + 1).
Rational hy_phi2(const Rational& delta, int L, const Rational& x);
double hy_phi2(double delta, int L, double x);

/// List size guaranteed by the prior bound,
///   floor(delta (1 + tau_I) / ((delta - tau_D)(1 - tau_D) - (1 - delta) tau_I)),
/// or nullopt when tau_I >= (delta - tau_D)(1 - tau_D)/(1 - delta) and the bound does not apply.
std::optional<BigInt> hy_list_size(const Rational& delta, const Rational& tau_I, const Rational& tau_D);

/// Positive-rate limits for a q-ary alphabet: tau_D < (q-1)/q and tau_I < q-1.
struct AlphabetLimits {
    Rational max_tau_d;
    Rational max_tau_i;
};
AlphabetLimits alphabet_limits(int q);

/// Strict hypothesis of the list-decoding theorem: tau_D < delta and tau_I < rho(1 - tau_D).
bool list_decoding_hypothesis(const Rational& delta, int L, const Rational& tau_I, const Rational& tau_D);

/// Positive root of (6L+2)e^2 + (L^2-4L+3)e - (L-1)^2 = 0 in e = 1 - delta.
double beta2(int L);

/// max(2/(L+1), 1 - beta2(L)).
double delta1(int L);

/// (L^2 + 8L + 7 - (L-1) sqrt(L^2 + 18L + 17)) / (4(3L+1)).
double delta1_closed_form(int L);

/// Upper x-end of the improvement window for L = 2:
/// (17(1-delta) + 4 + sqrt(-143(1-delta)^2 - 188(1-delta) + 124)) / 18.
double list2_alpha(double delta);

/// Point where rho leaves the unique-decoding line: (1 - (L+1)/(L-1)(1-delta), 2(1-delta)/(L-1)).
std::pair<Rational, Rational> unique_merge_point(const Rational& delta, int L);

struct ComparisonReport {
    Rational delta;
    int L = 0;
    double delta1 = 0;
    double delta1_closed_form = 0;
    double beta2 = 0;
    bool improves = false;                              ///< delta > delta1 + 1e-9
    std::optional<std::pair<double, double>> interval;  ///< open tau_D interval where rho beats phi2
    std::optional<std::pair<double, double>> p1;        ///< (tau_D, tau_I) at the smallest-tau_D crossing
    std::optional<std::pair<Rational, Rational>> p2;    ///< (tau_D, tau_I) where rho meets the unique line
    std::size_t crossings = 0;                          ///< crossings of rho and phi2 above the merge point
    bool multiple_crossings = false;
};

/// Locates the tau_D window in which rho exceeds the prior bound by sweeping the pieces of rho
/// upward from the unique-decoding merge point and intersecting each with phi2.
ComparisonReport comparison_report(const Rational& delta, int L);

}  // namespace insdel
