#pragma once

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <string>
#include <vector>

#include "insdel/codes.hpp"
#include "insdel/combinatorics.hpp"

namespace insdel {

enum class Status { Pass, Fail, Skipped };

std::string to_string(Status status);

struct CriterionResult {
    int id = 0;
    std::string name;
    Status status = Status::Pass;
    std::string detail;
    double seconds = 0;
    double limit_seconds = 0;  ///< 0 when the criterion has no time limit
};

using PhiProvider = std::function<PhiRow(int L, int r)>;

struct RegressionOptions {
    unsigned workers = 4;                 ///< worker count compared against 1 in the determinism check
    std::uint64_t cap = 10'000'000;       ///< enumeration cap handed to the verify oracles
    std::uint64_t seed = 0x5eed'2024;     ///< random code sample for the theorem harness
    std::vector<int> only;                ///< criterion ids to run; empty runs all
    PhiProvider phi = phi_coefficients;   ///< replaceable so tests can feed a corrupted row
};

CriterionResult check_cover_counts();
CriterionResult check_inclusion_exclusion_coefficients();
CriterionResult check_claim8();
CriterionResult check_phi_rows(const PhiProvider& phi);
CriterionResult check_rho_forms();
CriterionResult check_prior_bound_comparison();
CriterionResult check_code_distances();
CriterionResult check_theorem_harness(const RegressionOptions& options);
CriterionResult check_containment();
CriterionResult check_direction();
CriterionResult check_determinism(const RegressionOptions& options);

/// The codes exercised by the theorem harness: VT_0(6), VT_0(8) and 50 random binary codes.
struct HarnessCase {
    Code code;
    int L;
    std::string label;
};
std::vector<HarnessCase> theorem_harness_cases(std::uint64_t seed);

/// Runs the selected criteria in id order, writing one line per criterion to `log` when given.
std::vector<CriterionResult> run_regression(const RegressionOptions& options = {}, std::ostream* log = nullptr);

/// One-line summary, e.g. "[PASS] 3 claim8 identity (0.01 s): 464 pairs".
std::string format_result(const CriterionResult& result);

/// 0 when nothing failed; skipped criteria do not count as failures.
int regression_exit_code(const std::vector<CriterionResult>& results);

}  // namespace insdel
