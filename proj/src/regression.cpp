#include "insdel/regression.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <ostream>
#include <random>
#include <limits>
#include <set>

#include <fmt/format.h>

#include "insdel/bounds.hpp"
#include "insdel/figures.hpp"
#include "insdel/report_json.hpp"
#include "insdel/verify.hpp"

namespace insdel {

namespace {

// Counts checks and keeps the first failure message.
struct Tracker {
    std::size_t checks = 0;
    std::size_t failures = 0;
    std::string first;

    void expect(bool ok, const std::string& what) {
        ++checks;
        if (ok) return;
        if (failures++ == 0) first = what;
    }
    template <typename Describe>
    void expect_lazy(bool ok, Describe&& describe) {
        ++checks;
        if (ok) return;
        if (failures++ == 0) first = describe();
    }
};

template <typename Body>
CriterionResult timed(int id, std::string name, double limit_seconds, Body&& body) {
    CriterionResult result;
    result.id = id;
    result.name = std::move(name);
    result.limit_seconds = limit_seconds;
    const auto start = std::chrono::steady_clock::now();
    try {
        body(result);
    } catch (const std::exception& e) {
        result.status = Status::Fail;
        result.detail = std::string("exception: ") + e.what();
    }
    result.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (limit_seconds > 0 && result.seconds > limit_seconds && result.status != Status::Fail) {
        result.status = Status::Fail;
        result.detail += fmt::format(" (time limit {:.0f} s exceeded)", limit_seconds);
    }
    return result;
}

void settle(CriterionResult& result, const Tracker& t, const std::string& summary) {
    if (t.failures == 0) {
        result.status = Status::Pass;
        result.detail = summary;
    } else {
        result.status = Status::Fail;
        result.detail = fmt::format("{} of {} checks failed; first: {}", t.failures, t.checks, t.first);
    }
}

std::string exact(const BigInt& v) { return v.str(); }

}  // namespace

std::string to_string(Status status) {
    switch (status) {
        case Status::Pass: return "PASS";
        case Status::Fail: return "FAIL";
        case Status::Skipped: return "SKIPPED";
    }
    return "?";
}

CriterionResult check_cover_counts() {
    return timed(1, "cover-count recursion vs enumeration", 10, [](CriterionResult& result) {
        Tracker t;
        for (std::int64_t j = 1; j <= 5; ++j)
            for (std::int64_t v = 1; v <= j; ++v) {
                const BigInt subsets = binomial(j, v);
                for (std::int64_t ell = 1; ell <= subsets; ++ell) {
                    const BigInt recursive = count_v_covers(j, ell, v);
                    const BigInt brute = enumerate_v_covers(j, ell, v);
                    t.expect_lazy(recursive == brute, [&] {
                        return fmt::format("A({},{},{}): recursion {} vs enumeration {}", j, ell, v, exact(recursive),
                                           exact(brute));
                    });
                }
            }
        settle(result, t, fmt::format("{} (j, ell, v) triples agree", t.checks));
    });
}

CriterionResult check_inclusion_exclusion_coefficients() {
    return timed(2, "inclusion-exclusion coefficient closed form", 30, [](CriterionResult& result) {
        Tracker t;
        for (std::int64_t j = 2; j <= 9; ++j)
            for (std::int64_t v = 1; v <= j; ++v) {
                const BigInt closed = coefficient_A(j, v);
                const BigInt sum = signed_cover_sum(j, v);
                const BigInt sign = (j - v) % 2 == 0 ? 1 : -1;
                t.expect_lazy(closed == sum, [&] {
                    return fmt::format("A_{{{},{}}}: closed form {} vs signed cover sum {}", j, v, exact(closed),
                                       exact(sum));
                });
                t.expect_lazy(sum == sign * binomial(j - 1, v - 1), [&] {
                    return fmt::format("A_{{{},{}}} = {} differs from (-1)^(j-v) C(j-1,v-1)", j, v, exact(sum));
                });
            }
        settle(result, t, fmt::format("{} checks over 2 <= j <= 9", t.checks));
    });
}

CriterionResult check_claim8() {
    return timed(3, "alternating binomial sum equals 1", 1, [](CriterionResult& result) {
        Tracker t;
        for (std::int64_t j = 2; j <= 30; ++j)
            for (std::int64_t v = 1; v <= j; ++v) {
                const BigInt s = claim8_sum(j, v);
                t.expect_lazy(s == 1, [&] { return fmt::format("j={} v={}: sum is {}", j, v, exact(s)); });
            }
        settle(result, t, fmt::format("{} (j, v) pairs with 2 <= j <= 30", t.checks));
    });
}

CriterionResult check_phi_rows(const PhiProvider& phi) {
    return timed(4, "combination coefficient rows", 5, [&phi](CriterionResult& result) {
        Tracker t;
        for (int L = 2; L <= 12; ++L)
            for (int r = 1; r <= L; ++r) {
                const PhiRow row = phi(L, r);
                auto where = [&](int j, const std::string& invariant) {
                    return fmt::format("L={} r={} j={}: {} violated (value {})", L, r, j, invariant,
                                       to_string(row.at(j)));
                };
                t.expect_lazy(row.coefficients.size() == static_cast<std::size_t>(L + 1),
                              [&] { return fmt::format("L={} r={}: row has {} entries", L, r, row.coefficients.size()); });
                if (row.coefficients.size() != static_cast<std::size_t>(L + 1)) continue;
                t.expect_lazy(row.at(1) == r, [&] { return where(1, "Phi_{r,1} = r"); });
                t.expect_lazy(row.at(2) == -1, [&] { return where(2, "Phi_{r,2} = -1"); });
                for (int j = 3; j <= std::min(r + 1, L + 1); ++j)
                    t.expect_lazy(row.at(j) == 0, [&] { return where(j, "Phi_{r,j} = 0 for 3 <= j <= r+1"); });
                if (r < 2) continue;
                for (int j = r + 2; j <= L + 1; ++j) {
                    const Rational& value = row.at(j);
                    const int sign = (j - r) % 2 == 0 ? 1 : -1;
                    t.expect_lazy(sign * value > 0, [&] { return where(j, "sign (-1)^(j-r)"); });
                    t.expect_lazy(value == phi_tail_closed_form(r, j), [&] { return where(j, "tail closed form"); });
                }
                for (int j = r + 2; j + 1 <= L + 1; ++j) {
                    const Rational paired = (j + 1) * abs(row.at(j)) - abs(row.at(j + 1));
                    const Rational closed = paired_tail_constant_closed_form(r, j);
                    t.expect_lazy(paired == paired_tail_constant(r, j) && paired == closed, [&] {
                        return fmt::format("r={} j={}: paired constant {} vs closed form {}", r, j, to_string(paired),
                                           to_string(closed));
                    });
                    t.expect_lazy(closed >= 3, [&] {
                        return fmt::format("r={} j={}: paired constant {} below 3", r, j, to_string(closed));
                    });
                }
            }
        settle(result, t, fmt::format("{} coefficient checks for L <= 12", t.checks));
    });
}

CriterionResult check_rho_forms() {
    return timed(5, "max form vs piecewise form of rho", 10, [](CriterionResult& result) {
        Tracker t;
        constexpr int kDeltas = 20;
        constexpr long kPoints = 1000;
        for (int k = 1; k <= kDeltas; ++k) {
            const Rational delta(k, kDeltas + 1);
            for (int L = 2; L <= 12; ++L) {
                const PiecewiseBound bound = rho_piecewise(delta, L);
                t.expect_lazy(bound.pieces.size() == static_cast<std::size_t>(L - bound.r_min + 1), [&] {
                    return fmt::format("delta={} L={}: {} pieces, r_min {}", to_string(delta), L, bound.pieces.size(),
                                       bound.r_min);
                });
                const Rational lo = 1 - delta;
                for (long i = 0; i < kPoints; ++i) {
                    const Rational x = lo + delta * Rational(i, kPoints - 1);
                    const Rational a = rho(delta, L, x);
                    const Rational b = bound.evaluate(x);
                    t.expect_lazy(a == b, [&] {
                        return fmt::format("delta={} L={} x={}: max form {} vs piecewise {}", to_string(delta), L,
                                           to_string(x), to_string(a), to_string(b));
                    });
                }
            }
        }
        settle(result, t, fmt::format("{} exact comparisons over 20 x 11 (delta, L)", t.checks));
    });
}

CriterionResult check_prior_bound_comparison() {
    return timed(6, "prior-bound comparison landmarks", 5, [](CriterionResult& result) {
        Tracker t;
        const double golden = (27 - std::sqrt(57.0)) / 28;
        t.expect(std::abs(delta1_closed_form(2) - golden) <= 1e-9,
                 fmt::format("closed-form threshold {:.12f} vs {:.12f}", delta1_closed_form(2), golden));
        t.expect(std::abs(delta1(2) - golden) <= 1e-9,
                 fmt::format("max(2/(L+1), 1 - beta2) = {:.12f} vs {:.12f}", delta1(2), golden));

        const ComparisonReport report = comparison_report(Rational(9, 10), 2);
        t.expect(report.p2.has_value() && report.p2->first == Rational(7, 10) && report.p2->second == Rational(1, 5),
                 "P2 is not exactly (7/10, 1/5)");
        const double tau_p1 = 1 - list2_alpha(0.9);
        t.expect(report.p1.has_value() && std::abs(report.p1->first - tau_p1) <= 1e-6,
                 fmt::format("P1 tau_D {} vs 1 - alpha = {:.9f}",
                             report.p1 ? fmt::format("{:.9f}", report.p1->first) : std::string("missing"), tau_p1));
        t.expect(report.interval.has_value() && std::abs(report.interval->first - tau_p1) <= 1e-6 &&
                     std::abs(report.interval->second - 0.7) <= 1e-9,
                 "improvement interval is not (1 - alpha, 0.7)");

        std::size_t grid = 0;
        for (int L : {2, 3, 5, 10})
            for (int i = 1; i < 100; ++i)
                for (int e = 1; e < 100; ++e) {
                    const Rational x(i, 100);
                    const Rational delta = 1 - Rational(e, 100);
                    ++grid;
                    t.expect_lazy(hy_phi2(delta, L, x) < hy_phi1(delta, x), [&] {
                        return fmt::format("phi2 >= phi1 at x={} delta={} L={}", to_string(x), to_string(delta), L);
                    });
                }
        settle(result, t,
               fmt::format("threshold {:.9f}, P1 tau_D {:.9f}, P2 (7/10, 1/5), phi2 < phi1 on {} grid points", golden,
                           report.p1 ? report.p1->first : 0.0, grid));
    });
}

CriterionResult check_code_distances() {
    return timed(7, "code family minimum distances", 300, [](CriterionResult& result) {
        Tracker t;
        std::optional<std::size_t> vt_exact_four;
        for (std::size_t n = 1; n <= 10; ++n) {
            std::size_t smallest = std::numeric_limits<std::size_t>::max();
            for (std::size_t a = 0; a <= n; ++a) {
                const Code code = vt_binary(n, a);
                if (code.size() < 2) continue;
                const std::size_t d = min_levenshtein_distance(code);
                smallest = std::min(smallest, d);
                t.expect(d >= 4, fmt::format("VT_{}({}) has distance {}", a, n, d));
            }
            if (smallest == 4 && !vt_exact_four) vt_exact_four = n;
        }
        for (std::size_t n = 1; n <= 6; ++n)
            for (std::size_t a = 0; a < n; ++a)
                for (int b = 0; b < 3; ++b) {
                    const Code code = vt_qary(n, 3, a, b);
                    if (code.size() < 2) continue;
                    const std::size_t d = min_levenshtein_distance(code);
                    t.expect(d >= 4, fmt::format("q-ary VT (n={}, a={}, b={}) has distance {}", n, a, b, d));
                }
        for (std::size_t n = 3; n <= 8; ++n) {
            const HelbergWeights w = helberg_weights(2, n, 2);
            for (BigInt a = 0; a < w.modulus; ++a) {
                const Code code = helberg(2, n, 2, a);
                if (code.size() < 2) continue;
                const std::size_t d = min_levenshtein_distance(code);
                t.expect(d >= 6, fmt::format("Helberg (2, {}, 2, {}) has distance {}", n, a.str(), d));
            }
        }
        settle(result, t,
               fmt::format("{} codes; smallest n with a VT distance of exactly 4: {}", t.checks,
                           vt_exact_four ? std::to_string(*vt_exact_four) : std::string("none up to 10")));
    });
}

std::vector<HarnessCase> theorem_harness_cases(std::uint64_t seed) {
    std::vector<HarnessCase> cases;
    for (std::size_t n : {6u, 8u})
        for (int L : {2, 3}) cases.push_back({vt_binary(n, 0), L, fmt::format("VT_0({}) L={}", n, L)});

    // Modulo reduction keeps the sample identical across standard libraries.
    std::mt19937_64 rng(seed);
    for (int i = 0; i < 50; ++i) {
        const std::size_t n = 5 + rng() % 3;
        const std::size_t size = 4 + rng() % 13;
        const int L = 2 + static_cast<int>(rng() % 2);
        std::set<std::uint64_t> picked;
        while (picked.size() < size) picked.insert(rng() % (std::uint64_t{1} << n));
        std::vector<Word> words;
        for (std::uint64_t bits : picked) {
            std::vector<Symbol> symbols(n);
            for (std::size_t k = 0; k < n; ++k) symbols[k] = static_cast<Symbol>((bits >> (n - 1 - k)) & 1);
            words.emplace_back(std::move(symbols), 2);
        }
        cases.push_back({Code(2, n, std::move(words)), L, fmt::format("random #{} n={} |C|={} L={}", i, n, size, L)});
    }
    return cases;
}

CriterionResult check_theorem_harness(const RegressionOptions& options) {
    return timed(8, "list-decoding theorem harness", 1800, [&options](CriterionResult& result) {
        VerifyOptions verify;
        verify.cap = options.cap;
        verify.workers = options.workers;
        std::size_t codes = 0, pairs = 0, violations = 0, skipped = 0, beyond = 0;
        std::string first_violation;
        for (const HarnessCase& hc : theorem_harness_cases(options.seed)) {
            const TheoremReport report = check_main_theorem(hc.code, hc.L, verify);
            ++codes;
            pairs += report.cases.size();
            skipped += report.skipped;
            beyond += report.beyond_unique_decoding ? 1 : 0;
            if (report.violations > 0 && violations == 0) {
                for (const TheoremCase& c : report.cases)
                    if (c.outcome == CaseOutcome::Violation) {
                        first_violation = fmt::format("{} at (t_I={}, t_D={})", hc.label, c.t_I, c.t_D);
                        break;
                    }
            }
            violations += report.violations;
        }
        const std::string summary =
            fmt::format("{} codes, {} (t_I, t_D) pairs, {} violations, {} skipped by cap, {} codes beyond unique decoding",
                        codes, pairs, violations, skipped, beyond);
        if (violations > 0)
            result.status = Status::Fail;
        else if (skipped > 0)
            result.status = Status::Skipped;
        else
            result.status = Status::Pass;
        result.detail = violations > 0 ? summary + "; first: " + first_violation : summary;
    });
}

CriterionResult check_containment() {
    return timed(9, "insdel ball inside Levenshtein ball", 60, [](CriterionResult& result) {
        std::vector<Word> words;
        for (std::size_t len = 0; len <= 3; ++len)
            for (Word& w : all_words(2, len)) words.push_back(std::move(w));
        std::vector<InsdelPair> radii;
        for (std::size_t i = 0; i <= 2; ++i)
            for (std::size_t d = 0; d <= 2; ++d) radii.push_back({i, d});
        const CheckSummary s = check_ball_containment(words, radii);
        result.status = s.ok() ? Status::Pass : Status::Fail;
        result.detail = s.ok() ? fmt::format("{} (word, radius) cases", s.cases)
                               : fmt::format("{} of {} cases failed; first: {}", s.failures, s.cases, *s.first_failure);
    });
}

CriterionResult check_direction() {
    return timed(10, "decoder ball vs channel outputs", 60, [](CriterionResult& result) {
        const CheckSummary s = check_direction_equivalence(2, 4, 2);
        result.status = s.ok() ? Status::Pass : Status::Fail;
        result.detail = s.ok() ? fmt::format("{} (codeword, radius) cases", s.cases)
                               : fmt::format("{} of {} cases failed; first: {}", s.failures, s.cases, *s.first_failure);
    });
}

CriterionResult check_determinism(const RegressionOptions& options) {
    return timed(11, "determinism across runs and worker counts", 0, [&options](CriterionResult& result) {
        Tracker t;
        std::vector<FigureSpec> specs(3);
        specs[0].id = FigureId::Fig1;
        specs[0].delta = Rational(9, 10);
        specs[0].list_sizes = {2};
        specs[1].id = FigureId::Fig2;
        specs[1].delta = Rational(9, 10);
        specs[1].list_sizes = {2, 3, 4, 5, 6, 7, 8, 9, 10};
        specs[2].id = FigureId::Fig3;
        specs[2].list_sizes = {25};
        specs[2].rates = {Rational(1, 10), Rational(1, 5), Rational(3, 10), Rational(2, 5)};
        for (const FigureSpec& spec : specs)
            t.expect(emit_figure(spec) == emit_figure(spec), to_string(spec.id) + " CSV differs between runs");
        t.expect(bound_curve_csv(Rational(9, 10), 2, 512) == bound_curve_csv(Rational(9, 10), 2, 512),
                 "bound CSV differs between runs");

        const unsigned many = std::max(2u, options.workers);
        VerifyOptions one;
        one.cap = options.cap;
        VerifyOptions parallel = one;
        parallel.workers = many;

        std::vector<Code> codes = {vt_binary(6, 0), vt_binary(8, 0), Code(2, 3, all_words(2, 3)),
                                   helberg(2, 5, 2, BigInt(0))};
        for (const HarnessCase& hc : theorem_harness_cases(options.seed)) {
            codes.push_back(hc.code);
            if (codes.size() >= 10) break;
        }
        for (const Code& code : codes) {
            for (std::size_t t_I = 0; t_I <= 2; ++t_I)
                for (std::size_t t_D = 0; t_D <= 2; ++t_D)
                    for (int L : {1, 2}) {
                        const std::string a = to_json(list_decodable(code, t_I, t_D, L, one)).dump();
                        const std::string b = to_json(list_decodable(code, t_I, t_D, L, one)).dump();
                        const std::string c = to_json(list_decodable(code, t_I, t_D, L, parallel)).dump();
                        t.expect_lazy(a == b && a == c, [&] {
                            return fmt::format("verdict for n={} |C|={} (t_I={}, t_D={}, L={}) depends on run or workers",
                                               code.length(), code.size(), t_I, t_D, L);
                        });
                    }
            t.expect(min_levenshtein_distance(code, 1) == min_levenshtein_distance(code, many),
                     "minimum distance depends on worker count");
            const std::string a = to_json(check_main_theorem(code, 2, one)).dump();
            const std::string c = to_json(check_main_theorem(code, 2, parallel)).dump();
            t.expect(a == c, fmt::format("theorem report for n={} |C|={} depends on workers", code.length(), code.size()));
        }
        const PrimeField field(11);
        const std::string s1 = to_json(rs_search_eval_points(field, 5, 2, rs_target_distance(5, 2), 2000, 7)).dump();
        const std::string s2 = to_json(rs_search_eval_points(field, 5, 2, rs_target_distance(5, 2), 2000, 7)).dump();
        t.expect(s1 == s2, "seeded evaluation-point search differs between runs");
        settle(result, t, fmt::format("{} comparisons, 1 vs {} workers", t.checks, many));
    });
}

std::vector<CriterionResult> run_regression(const RegressionOptions& options, std::ostream* log) {
    const std::vector<std::function<CriterionResult()>> criteria = {
        [] { return check_cover_counts(); },
        [] { return check_inclusion_exclusion_coefficients(); },
        [] { return check_claim8(); },
        [&] { return check_phi_rows(options.phi); },
        [] { return check_rho_forms(); },
        [] { return check_prior_bound_comparison(); },
        [] { return check_code_distances(); },
        [&] { return check_theorem_harness(options); },
        [] { return check_containment(); },
        [] { return check_direction(); },
        [&] { return check_determinism(options); },
    };
    std::vector<CriterionResult> results;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        const int id = static_cast<int>(i) + 1;
        if (!options.only.empty() && std::find(options.only.begin(), options.only.end(), id) == options.only.end())
            continue;
        results.push_back(criteria[i]());
        if (log) *log << format_result(results.back()) << std::endl;
    }
    return results;
}

std::string format_result(const CriterionResult& result) {
    return fmt::format("[{}] {} {} ({:.2f} s): {}", to_string(result.status), result.id, result.name, result.seconds,
                       result.detail);
}

int regression_exit_code(const std::vector<CriterionResult>& results) {
    for (const CriterionResult& r : results)
        if (r.status == Status::Fail) return 1;
    return 0;
}

}  // namespace insdel
