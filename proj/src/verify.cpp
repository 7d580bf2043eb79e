#include "insdel/verify.hpp"

#include <algorithm>
#include <limits>
#include <thread>
#include <unordered_map>

#include "insdel/bounds.hpp"

namespace insdel {

namespace {

using Tally = std::unordered_map<Word, std::uint32_t, WordHash>;

unsigned effective_workers(unsigned requested, std::size_t items) {
    const unsigned w = std::max(1u, requested);
    return static_cast<unsigned>(std::min<std::size_t>(w, std::max<std::size_t>(items, 1)));
}

// Runs body(worker_index) on `workers` threads (inline when there is only one).
template <typename Body>
void run_workers(unsigned workers, Body&& body) {
    if (workers <= 1) {
        body(0u);
        return;
    }
    std::vector<std::thread> threads;
    threads.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) threads.emplace_back([&body, w] { body(w); });
    for (auto& t : threads) t.join();
}

}  // namespace

std::size_t min_levenshtein_distance(const Code& code, unsigned workers) {
    if (code.size() < 2) throw std::invalid_argument("minimum distance needs at least two codewords");
    const auto words = code.codewords();
    const unsigned w = effective_workers(workers, words.size());
    std::vector<std::size_t> partial(w, std::numeric_limits<std::size_t>::max());
    run_workers(w, [&](unsigned id) {
        std::size_t best = std::numeric_limits<std::size_t>::max();
        for (std::size_t i = id; i < words.size(); i += w)
            for (std::size_t j = i + 1; j < words.size(); ++j)
                best = std::min(best, levenshtein_distance(words[i], words[j]));
        partial[id] = best;
    });
    return *std::min_element(partial.begin(), partial.end());
}

Verdict list_decodable(const Code& code, std::size_t t_I, std::size_t t_D, int L, const VerifyOptions& options) {
    if (L < 1) throw std::invalid_argument("list size must be >= 1");
    if (t_D > code.length())
        throw std::invalid_argument("deletion radius " + std::to_string(t_D) + " exceeds code length " +
                                    std::to_string(code.length()));

    const BigInt estimate = insdel_ball_size_bound(code.length(), code.q(), t_I, t_D);
    if (estimate > options.cap) throw BallTooLarge(estimate, options.cap);

    Verdict verdict;
    verdict.max_insertions = t_I;
    verdict.max_deletions = t_D;
    verdict.list_size = L;

    const auto words = code.codewords();
    const auto limit = static_cast<std::uint32_t>(L);
    const BallOptions ball_options{options.cap};
    const unsigned w = effective_workers(options.workers, words.size());

    Tally merged;
    if (w == 1) {
        for (const Word& c : words) {
            for (const Word& y : insdel_ball_unordered(c, t_I, t_D, ball_options)) {
                if (++merged[y] > limit && !options.want_witness) {
                    verdict.decodable = false;
                    return verdict;
                }
            }
        }
    } else {
        std::vector<Tally> partial(w);
        run_workers(w, [&](unsigned id) {
            for (std::size_t i = id; i < words.size(); i += w)
                for (const Word& y : insdel_ball_unordered(words[i], t_I, t_D, ball_options)) ++partial[id][y];
        });
        merged = std::move(partial[0]);
        for (unsigned id = 1; id < w; ++id)
            for (auto& [y, count] : partial[id]) merged[y] += count;
    }

    const Word* worst = nullptr;
    for (const auto& [y, count] : merged)
        if (count > limit && (worst == nullptr || y < *worst)) worst = &y;
    if (worst == nullptr) return verdict;

    verdict.decodable = false;
    if (options.want_witness) {
        Witness witness{*worst, {}};
        for (const Word& c : words)
            if (in_insdel_ball(c, *worst, t_I, t_D)) witness.codewords.push_back(c);
        verdict.witness = std::move(witness);
    }
    return verdict;
}

bool witness_holds(const Code& code, const Verdict& verdict) {
    if (verdict.decodable || !verdict.witness) return false;
    const Witness& w = *verdict.witness;
    const std::size_t n = code.length();
    if (w.received.size() + verdict.max_deletions < n || w.received.size() > n + verdict.max_insertions) return false;
    if (w.codewords.size() <= static_cast<std::size_t>(verdict.list_size)) return false;
    for (std::size_t i = 0; i < w.codewords.size(); ++i) {
        const Word& c = w.codewords[i];
        if (!code.contains(c)) return false;
        if (i > 0 && !(w.codewords[i - 1] < c)) return false;
        // decoder side: c from the received word by <= t_D insertions and <= t_I deletions
        if (!in_insdel_ball(w.received, c, verdict.max_deletions, verdict.max_insertions)) return false;
    }
    return true;
}

WordSet decoder_preimage(const Word& c, std::size_t t_I, std::size_t t_D) {
    WordSet out;
    const std::size_t shortest = c.size() >= t_D ? c.size() - t_D : 0;
    for (std::size_t len = shortest; len <= c.size() + t_I; ++len)
        for (Word& y : all_words(c.q(), len))
            if (in_insdel_ball(y, c, t_D, t_I)) out.insert(std::move(y));
    return out;
}

CheckSummary check_direction_equivalence(int q, std::size_t max_length, std::size_t max_radius) {
    CheckSummary summary;
    for (std::size_t n = 0; n <= max_length; ++n) {
        for (const Word& c : all_words(q, n)) {
            for (std::size_t t_I = 0; t_I <= max_radius; ++t_I) {
                for (std::size_t t_D = 0; t_D <= std::min(max_radius, n); ++t_D) {
                    ++summary.cases;
                    if (decoder_preimage(c, t_I, t_D) != insdel_ball(c, t_I, t_D)) {
                        if (!summary.first_failure)
                            summary.first_failure = "c=[" + to_string(c) + "] t_I=" + std::to_string(t_I) +
                                                    " t_D=" + std::to_string(t_D);
                        ++summary.failures;
                    }
                }
            }
        }
    }
    return summary;
}

CheckSummary check_ball_containment(std::span<const Word> words, std::span<const InsdelPair> radii,
                                    const BallOptions& options) {
    CheckSummary summary;
    for (const Word& y : words) {
        for (const InsdelPair& radius : radii) {
            const std::size_t t_I = radius.insertions;
            const std::size_t t_D = radius.deletions;
            if (t_I > y.size()) continue;  // insdel_ball(y, t_D, t_I) deletes up to t_I symbols of y
            ++summary.cases;
            const WordSet inner = insdel_ball(y, t_D, t_I, options);
            const WordSet outer = levenshtein_ball(y, t_I + t_D, options);
            if (!std::includes(outer.begin(), outer.end(), inner.begin(), inner.end())) {
                if (!summary.first_failure)
                    summary.first_failure = "y=[" + to_string(y) + "] t_I=" + std::to_string(t_I) +
                                            " t_D=" + std::to_string(t_D);
                ++summary.failures;
            }
        }
    }
    return summary;
}

UniqueDecodingReport check_unique_vs_list(const Code& code, const VerifyOptions& options) {
    UniqueDecodingReport report;
    report.distance = min_levenshtein_distance(code, options.workers);
    report.radius = (report.distance - 1) / 2;
    VerifyOptions verdict_only = options;
    verdict_only.want_witness = false;
    for (std::size_t total = 0; total <= report.radius; ++total) {
        for (std::size_t t_D = 0; t_D <= std::min(total, code.length()); ++t_D) {
            const std::size_t t_I = total - t_D;
            const bool ok = list_decodable(code, t_I, t_D, 1, verdict_only).decodable;
            report.checks.push_back({t_I, t_D, ok});
            report.all_decodable = report.all_decodable && ok;
        }
    }
    return report;
}

std::vector<InsdelPair> theorem_region(std::size_t n, const Rational& delta, int L) {
    if (n == 0) throw std::invalid_argument("code length must be positive");
    std::vector<InsdelPair> region;
    for (std::size_t t_D = 0; Rational(t_D, n) < delta; ++t_D) {
        const Rational tau_D(t_D, n);
        const Rational limit = rho(delta, L, 1 - tau_D);
        for (std::size_t t_I = 0; Rational(t_I, n) < limit; ++t_I) region.push_back({t_I, t_D});
    }
    return region;
}

TheoremReport check_main_theorem(const Code& code, int L, const VerifyOptions& options) {
    if (L < 2) throw std::invalid_argument("the list-decoding theorem needs L >= 2");
    TheoremReport report;
    report.n = code.length();
    report.L = L;
    report.distance = min_levenshtein_distance(code, options.workers);
    report.delta = Rational(report.distance, 2 * report.n);
    if (report.delta >= 1) throw std::invalid_argument("relative distance must be below 1");

    for (const InsdelPair& pair : theorem_region(report.n, report.delta, L)) {
        TheoremCase tc{pair.insertions, pair.deletions, CaseOutcome::Decodable, std::nullopt, {}};
        if (2 * pair.total() >= report.distance) report.beyond_unique_decoding = true;
        try {
            Verdict v = list_decodable(code, tc.t_I, tc.t_D, L, options);
            if (!v.decodable) {
                tc.outcome = CaseOutcome::Violation;
                tc.witness = std::move(v.witness);
                tc.note = "theorem violation";
                ++report.violations;
            }
        } catch (const BallTooLarge& e) {
            tc.outcome = CaseOutcome::Skipped;
            tc.note = e.what();
            ++report.skipped;
        }
        report.cases.push_back(std::move(tc));
    }

    if (!report.beyond_unique_decoding)
        report.note = "no checked pair reaches t_I + t_D >= d/2; going beyond unique decoding needs relative distance "
                      "above 2/(L+1) = " + to_string(Rational(2, L + 1)) + " (here delta = " + to_string(report.delta) + ")";
    return report;
}

}  // namespace insdel
