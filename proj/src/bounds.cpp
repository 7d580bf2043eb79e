#include "insdel/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace insdel {

namespace {

constexpr double kThresholdTolerance = 1e-9;

void check_list_size(int L) {
    if (L < 2) throw std::domain_error("list size L must be >= 2, got " + std::to_string(L));
}

void check_delta(const Rational& delta) {
    if (delta <= 0 || delta >= 1) throw std::domain_error("delta must lie in (0, 1), got " + to_string(delta));
}

void check_x(const Rational& delta, const Rational& x) {
    if (x < 1 - delta || x > 1)
        throw std::domain_error("x = " + to_string(x) + " outside [1 - delta, 1] = [" + to_string(1 - delta) +
                                ", 1]");
}

}  // namespace

Rational rho_line(const Rational& delta, int L, int r, const Rational& x) {
    return Rational(2 * L - r + 1, L + 1) * x - Rational(L, r) * (1 - delta);
}

Rational rho(const Rational& delta, int L, const Rational& x) {
    check_list_size(L);
    check_delta(delta);
    check_x(delta, x);
    Rational best = rho_line(delta, L, 1, x);
    for (int r = 2; r <= L; ++r) best = std::max(best, rho_line(delta, L, r, x));
    return best;
}

double rho(double delta, int L, double x) {
    check_list_size(L);
    if (!(delta > 0 && delta < 1)) throw std::domain_error("delta must lie in (0, 1)");
    if (x < 1 - delta || x > 1) throw std::domain_error("x outside [1 - delta, 1]");
    double best = -INFINITY;
    for (int r = 1; r <= L; ++r) {
        const double line = double(2 * L - r + 1) / (L + 1) * x - double(L) / r * (1 - delta);
        best = std::max(best, line);
    }
    return best;
}

Rational rho_breakpoint(const Rational& delta, int L, int r) {
    return Rational(L * (L + 1), r * (r + 1)) * (1 - delta);
}

int rho_r_min(const Rational& delta, int L) {
    check_list_size(L);
    check_delta(delta);
    for (int r = 1; r < L; ++r)
        if (rho_breakpoint(delta, L, r) < 1) return r;
    return L;
}

const BoundPiece& PiecewiseBound::piece_at(const Rational& x) const {
    check_x(delta, x);
    for (std::size_t i = 0; i < pieces.size(); ++i) {
        const auto& p = pieces[i];
        const bool above_lo = i == 0 ? x >= p.lo : x > p.lo;
        if (above_lo && x <= p.hi) return p;
    }
    throw std::logic_error("piecewise bound does not cover x = " + to_string(x));
}

PiecewiseBound rho_piecewise(const Rational& delta, int L) {
    check_list_size(L);
    check_delta(delta);

    PiecewiseBound bound{delta, L, rho_r_min(delta, L), {}};
    for (int r = L; r >= bound.r_min; --r) {
        BoundPiece piece;
        piece.r = r;
        piece.lo = r == L ? Rational(1 - delta) : rho_breakpoint(delta, L, r);
        piece.hi = r == bound.r_min ? Rational(1) : rho_breakpoint(delta, L, r - 1);
        piece.slope = Rational(2 * L - r + 1, L + 1);
        piece.intercept = -Rational(L, r) * (1 - delta);
        bound.pieces.push_back(std::move(piece));
    }
    return bound;
}

Rational unique_decoding_limit(const Rational& delta, const Rational& tau_D) {
    if (tau_D < 0 || tau_D >= delta)
        throw std::domain_error("unique decoding needs 0 <= tau_D < delta, got tau_D = " + to_string(tau_D));
    return delta - tau_D;
}

Rational hy_phi1(const Rational& delta, const Rational& x) {
    check_delta(delta);
    return x * x / (1 - delta) - x;
}

double hy_phi1(double delta, double x) { return x * x / (1 - delta) - x; }

Rational hy_phi2(const Rational& delta, int L, const Rational& x) {
    check_list_size(L);
    check_delta(delta);
    const Rational e = 1 - delta;
    return ((L + 1) * x * x - (L + 1) * e * x + e - 1) / (L * e + 1);
}

double hy_phi2(double delta, int L, double x) {
    const double e = 1 - delta;
    return ((L + 1) * x * x - (L + 1) * e * x + e - 1) / (L * e + 1);
}

std::optional<BigInt> hy_list_size(const Rational& delta, const Rational& tau_I, const Rational& tau_D) {
    check_delta(delta);
    if (tau_D < 0 || tau_D >= 1) throw std::domain_error("tau_D must lie in [0, 1), got " + to_string(tau_D));
    if (tau_I < 0) throw std::domain_error("tau_I must be non-negative, got " + to_string(tau_I));

    const Rational slack = (delta - tau_D) * (1 - tau_D);
    if (tau_I >= slack / (1 - delta)) return std::nullopt;
    const Rational denominator = slack - (1 - delta) * tau_I;
    return floor(delta * (1 + tau_I) / denominator);
}

AlphabetLimits alphabet_limits(int q) {
    if (q < 2) throw std::domain_error("alphabet size must be >= 2");
    return {Rational(q - 1, q), Rational(q - 1)};
}

bool list_decoding_hypothesis(const Rational& delta, int L, const Rational& tau_I, const Rational& tau_D) {
    if (tau_D < 0 || tau_I < 0) throw std::domain_error("error fractions must be non-negative");
    if (tau_D >= delta) return false;
    return tau_I < rho(delta, L, 1 - tau_D);
}

double beta2(int L) {
    check_list_size(L);
    const double l = L;
    return (l - 1) / (4 * (3 * l + 1)) * (-(l - 3) + std::sqrt(l * l + 18 * l + 17));
}

double delta1(int L) { return std::max(2.0 / (L + 1), 1 - beta2(L)); }

double delta1_closed_form(int L) {
    check_list_size(L);
    const double l = L;
    return (l * l + 8 * l + 7 - (l - 1) * std::sqrt(l * l + 18 * l + 17)) / (4 * (3 * l + 1));
}

double list2_alpha(double delta) {
    const double e = 1 - delta;
    return (17 * e + 4 + std::sqrt(-143 * e * e - 188 * e + 124)) / 18;
}

std::pair<Rational, Rational> unique_merge_point(const Rational& delta, int L) {
    check_list_size(L);
    check_delta(delta);
    const Rational e = 1 - delta;
    return {1 - Rational(L + 1, L - 1) * e, Rational(2, L - 1) * e};
}

namespace {

// Real roots of a x^2 + b x + c = 0 with a != 0, ascending.
std::vector<double> quadratic_roots(double a, double b, double c) {
    const double disc = b * b - 4 * a * c;
    if (disc < 0) return {};
    const double s = std::sqrt(disc);
    const double q = -0.5 * (b + std::copysign(s, b));
    std::vector<double> roots;
    if (q != 0) {
        roots.push_back(q / a);
        roots.push_back(c / q);
    } else {
        roots.push_back(0.0);
    }
    std::sort(roots.begin(), roots.end());
    return roots;
}

}  // namespace

ComparisonReport comparison_report(const Rational& delta, int L) {
    check_list_size(L);
    check_delta(delta);

    ComparisonReport report;
    report.delta = delta;
    report.L = L;
    report.beta2 = beta2(L);
    report.delta1 = delta1(L);
    report.delta1_closed_form = delta1_closed_form(L);

    const Rational e = 1 - delta;
    const Rational merge_x = Rational(L + 1, L - 1) * e;
    if (merge_x < 1) report.p2 = unique_merge_point(delta, L);

    const double d = to_double(delta);
    // delta1 is irrational in general but can be exact (L = 8 gives 3/10); within the tolerance
    // rho only touches phi2 at the merge point.
    report.improves = d > report.delta1 + kThresholdTolerance;
    if (!report.improves || merge_x >= 1) return report;

    const double de = to_double(e);
    const double denom = L * de + 1;
    const double xb = to_double(merge_x);
    std::vector<double> crossings;
    for (const auto& piece : rho_piecewise(delta, L).pieces) {
        if (piece.r == L) continue;  // the unique-decoding piece ends at the merge point
        const double lo = to_double(piece.lo);
        const double hi = to_double(piece.hi);
        const double s = to_double(piece.slope);
        const double c = to_double(piece.intercept);
        // phi2(x) = s x + c  <=>  (L+1) x^2 - ((L+1) e + D s) x - (delta + D c) = 0
        for (double root : quadratic_roots(L + 1, -((L + 1) * de + denom * s), -(d + denom * c))) {
            if (root > lo && root <= hi + 1e-15 && root > xb) {
                if (crossings.empty() || std::abs(crossings.back() - root) > 1e-12) crossings.push_back(root);
            }
        }
    }
    std::sort(crossings.begin(), crossings.end());
    report.crossings = crossings.size();
    report.multiple_crossings = crossings.size() > 1;

    const double upper_x = crossings.empty() ? 1.0 : std::min(crossings.front(), 1.0);
    report.interval = std::make_pair(1 - upper_x, 1 - xb);
    if (!crossings.empty()) report.p1 = std::make_pair(1 - upper_x, rho(d, L, upper_x));
    return report;
}

}  // namespace insdel
