// insdel-lab: bounds, identities, code constructions, exhaustive verification and figure data.
//
// Exit codes: 0 success, 1 a check failed (or a cap was hit), 2 invalid input.

#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "insdel/bounds.hpp"
#include "insdel/codes.hpp"
#include "insdel/combinatorics.hpp"
#include "insdel/figures.hpp"
#include "insdel/regression.hpp"
#include "insdel/report_json.hpp"
#include "insdel/verify.hpp"

using namespace insdel;
using json = nlohmann::ordered_json;

namespace {

constexpr int kOk = 0;
constexpr int kFailure = 1;
constexpr int kInvalid = 2;

constexpr const char* kRhoName = "list-decoding envelope rho^(delta,L): tau_I < rho(1 - tau_D), tau_D < delta";
constexpr const char* kPriorName = "prior quadratic bound: tau_I < phi(1 - tau_D), list size from the floor formula";
constexpr const char* kUniqueName = "unique decoding: tau_I + tau_D < delta";

struct Globals {
    std::uint64_t seed = 1;
    std::uint64_t cap = 10'000'000;
    unsigned workers = 1;
};

void print(const json& j) { std::cout << j.dump(2) << '\n'; }

void write_text(const std::string& path, const std::string& text) {
    if (path.empty() || path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open " + path + " for writing");
    out << text;
}

Rational rational_arg(const std::string& text, const char* name) {
    try {
        return parse_rational(text);
    } catch (const std::invalid_argument& e) {
        throw std::invalid_argument(std::string("--") + name + ": " + e.what());
    }
}

// ---- bound ---------------------------------------------------------------

struct BoundArgs {
    std::string delta;
    int L = 2;
    std::optional<std::string> tau_d;
    std::optional<std::string> tau_i;
    std::string csv;
    std::size_t points = 512;
    std::optional<int> q;
};

int bound_rho(const BoundArgs& a) {
    const Rational delta = rational_arg(a.delta, "delta");
    json out = {{"bound", kRhoName}, {"delta", rational_json(delta)}, {"list_size", a.L}};
    out["piecewise"] = to_json(rho_piecewise(delta, a.L));
    if (a.tau_d) {
        const Rational tau_D = rational_arg(*a.tau_d, "tau-d");
        if (tau_D < 0 || tau_D >= delta) throw std::invalid_argument("--tau-d must lie in [0, delta)");
        out["tau_d"] = rational_json(tau_D);
        out["tau_i_limit"] = rational_json(rho(delta, a.L, 1 - tau_D));
        out["unique_limit"] = {{"bound", kUniqueName}, {"value", rational_json(unique_decoding_limit(delta, tau_D))}};
        if (a.tau_i) {
            const Rational tau_I = rational_arg(*a.tau_i, "tau-i");
            out["tau_i"] = rational_json(tau_I);
            out["hypothesis_holds"] = list_decoding_hypothesis(delta, a.L, tau_I, tau_D);
        }
    }
    if (a.q) {
        const AlphabetLimits lim = alphabet_limits(*a.q);
        out["alphabet_limits"] = {{"q", *a.q}, {"max_tau_d", rational_json(lim.max_tau_d)},
                                  {"max_tau_i", rational_json(lim.max_tau_i)}};
    }
    if (!a.csv.empty()) write_text(a.csv, bound_curve_csv(delta, a.L, a.points));
    print(out);
    return kOk;
}

int bound_hy(const BoundArgs& a) {
    const Rational delta = rational_arg(a.delta, "delta");
    if (delta <= 0 || delta >= 1) throw std::invalid_argument("--delta must lie in (0, 1)");
    const Rational tau_D = a.tau_d ? rational_arg(*a.tau_d, "tau-d") : Rational(0);
    const Rational x = 1 - tau_D;
    json out = {{"bound", kPriorName}, {"delta", rational_json(delta)}, {"tau_d", rational_json(tau_D)}};
    out["phi1"] = rational_json(hy_phi1(delta, x));
    out["phi2"] = rational_json(hy_phi2(delta, a.L, x));
    out["list_size_for_phi2"] = a.L;
    if (a.tau_i) {
        const Rational tau_I = rational_arg(*a.tau_i, "tau-i");
        out["tau_i"] = rational_json(tau_I);
        const auto L = hy_list_size(delta, tau_I, tau_D);
        out["guaranteed_list_size"] = L ? json(L->str()) : json(nullptr);
        if (!L) out["note"] = "tau_I >= (delta - tau_D)(1 - tau_D)/(1 - delta): the prior bound does not apply";
    }
    print(out);
    return kOk;
}

int bound_compare(const BoundArgs& a) {
    const Rational delta = rational_arg(a.delta, "delta");
    json out = to_json(comparison_report(delta, a.L));
    out["bounds"] = {kRhoName, kPriorName, kUniqueName};
    print(out);
    return kOk;
}

// ---- identity ------------------------------------------------------------

struct IdentityArgs {
    std::int64_t j = 0, ell = 0, v = 0;
    int L = 2, r = 1;
};

int identity_covers(const IdentityArgs& a, const Globals& g) {
    json out = {{"identity", "v-cover count A(j, ell, v) by recursion; oracle enumerates families"},
                {"inputs", {{"j", a.j}, {"ell", a.ell}, {"v", a.v}}}};
    const BigInt value = count_v_covers(a.j, a.ell, a.v);
    out["value"] = value.str();
    try {
        const BigInt oracle = enumerate_v_covers(a.j, a.ell, a.v, g.cap);
        out["oracle_value"] = oracle.str();
        out["agree"] = oracle == value;
    } catch (const EnumerationCapExceeded& e) {
        out["oracle_value"] = nullptr;
        out["note"] = e.what();
    }
    print(out);
    return out.contains("agree") && !out["agree"].get<bool>() ? kFailure : kOk;
}

int identity_ajv(const IdentityArgs& a) {
    const BigInt value = coefficient_A(a.j, a.v);
    const BigInt oracle = signed_cover_sum(a.j, a.v);
    print({{"identity", "A_{j,v} = (-1)^(j-v) C(j-1, v-1); oracle is the signed cover-count sum"},
           {"inputs", {{"j", a.j}, {"v", a.v}}},
           {"value", value.str()},
           {"oracle_value", oracle.str()},
           {"agree", value == oracle}});
    return value == oracle ? kOk : kFailure;
}

int identity_claim8(const IdentityArgs& a) {
    const BigInt value = claim8_sum(a.j, a.v);
    print({{"identity", "sum_t (-1)^(t-v) C(j,t) C(t-1,v-1) = 1"},
           {"inputs", {{"j", a.j}, {"v", a.v}}},
           {"value", value.str()},
           {"oracle_value", "1"},
           {"agree", value == 1}});
    return value == 1 ? kOk : kFailure;
}

int identity_phi(const IdentityArgs& a) {
    const PhiRow row = phi_coefficients(a.L, a.r);
    json value = json::array(), oracle = json::array();
    bool agree = true;
    for (int j = 1; j <= a.L + 1; ++j) {
        Rational direct = 0;
        for (int u = 1; u <= std::min(a.r, j); ++u)
            direct += Rational(combination_weight(a.r, u)) * Rational(signed_cover_sum(j, u));
        value.push_back(to_string(row.at(j)));
        oracle.push_back(to_string(direct));
        agree = agree && direct == row.at(j);
    }
    print({{"identity", "Phi_{r,j} = sum_u (r+1-u) A_{j,u}, j = 1..L+1; oracle uses cover counts"},
           {"inputs", {{"list_size", a.L}, {"r", a.r}}},
           {"value", value},
           {"oracle_value", oracle},
           {"agree", agree}});
    return agree ? kOk : kFailure;
}

// ---- code ----------------------------------------------------------------

struct CodeArgs {
    std::size_t n = 0;
    std::size_t a = 0;
    int b = 0;
    int q = 3;
    std::size_t s = 1;
    std::string helberg_a = "0";
    std::optional<std::string> modulus;
    std::uint32_t p = 0;
    std::size_t k = 1;
    std::vector<std::uint32_t> alpha;
    std::uint64_t budget = 100'000;
    std::string out;
};

int emit_code(const Code& code, const std::string& family, const CodeArgs& a, json extra = json::object()) {
    json out = {{"family", family}, {"q", code.q()}, {"n", code.length()}, {"size", code.size()},
                {"rate", code.rate()}};
    for (auto& [k, v] : extra.items()) out[k] = v;
    if (!a.out.empty() && a.out != "-") {
        save_code(a.out, code);
        out["path"] = a.out;
        print(out);
    } else {
        write_code(std::cout, code);
    }
    return kOk;
}

int code_rs(const CodeArgs& a, const Globals& g) {
    const PrimeField field(a.p);
    std::vector<std::uint32_t> alpha = a.alpha;
    json extra = {{"k", a.k}};
    if (alpha.empty()) {
        const RsSearchResult r = rs_search_eval_points(field, a.n, a.k, rs_target_distance(a.n, a.k), a.budget, g.seed);
        alpha = r.alpha;
        extra["search"] = to_json(r);
    }
    extra["alpha"] = alpha;
    return emit_code(rs_code(field, a.n, a.k, alpha), "reed-solomon", a, extra);
}

// ---- verify --------------------------------------------------------------

struct VerifyArgs {
    std::string code;
    std::size_t t_I = 0;
    std::size_t t_D = 0;
    int L = 1;
    bool witness = false;
};

VerifyOptions verify_options(const Globals& g, bool witness) {
    VerifyOptions o;
    o.cap = g.cap;
    o.workers = g.workers;
    o.want_witness = witness;
    return o;
}

int verify_mindist(const VerifyArgs& a, const Globals& g) {
    const Code code = load_code(a.code);
    print({{"q", code.q()}, {"n", code.length()}, {"size", code.size()},
           {"min_distance", min_levenshtein_distance(code, g.workers)}});
    return kOk;
}

int verify_list(const VerifyArgs& a, const Globals& g) {
    const Code code = load_code(a.code);
    const Verdict v = list_decodable(code, a.t_I, a.t_D, a.L, verify_options(g, a.witness));
    json out = to_json(v);
    if (v.witness) out["witness_rechecked"] = witness_holds(code, v);
    print(out);
    return v.decodable ? kOk : kFailure;
}

int verify_theorem(const VerifyArgs& a, const Globals& g) {
    const Code code = load_code(a.code);
    const TheoremReport r = check_main_theorem(code, a.L, verify_options(g, true));
    json out = to_json(r);
    out["bound"] = kRhoName;
    print(out);
    return r.violations == 0 ? kOk : kFailure;
}

int verify_unique(const VerifyArgs& a, const Globals& g) {
    const Code code = load_code(a.code);
    const UniqueDecodingReport r = check_unique_vs_list(code, verify_options(g, false));
    print(to_json(r));
    return r.all_decodable ? kOk : kFailure;
}

// ---- figure --------------------------------------------------------------

struct FigureArgs {
    std::optional<std::string> delta;
    std::vector<int> list_sizes;
    std::vector<std::string> rates;
    std::size_t points = 512;
    std::optional<int> q;
    std::string out;
};

int figure(FigureId id, const FigureArgs& a) {
    FigureSpec spec;
    spec.id = id;
    if (a.delta) spec.delta = rational_arg(*a.delta, "delta");
    spec.list_sizes = a.list_sizes;
    for (const std::string& r : a.rates) spec.rates.push_back(rational_arg(r, "rates"));
    spec.points = a.points;
    spec.q = a.q;
    write_text(a.out, emit_figure(spec));
    return kOk;
}

// ---- regress -------------------------------------------------------------

int regress(const std::vector<int>& only, const Globals& g) {
    RegressionOptions options;
    options.cap = g.cap;
    options.only = only;
    options.workers = std::max(2u, g.workers);
    const auto results = run_regression(options, &std::cout);
    return regression_exit_code(results);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"insdel-lab: insertion/deletion list-decoding bounds, identities, codes and oracles"};
    app.require_subcommand(1);
    Globals g;
    g.workers = std::max(1u, std::thread::hardware_concurrency());
    app.add_option("--seed", g.seed, "seed for randomised searches");
    app.add_option("--cap", g.cap, "enumeration cap (ball sizes, families)");
    app.add_option("--workers", g.workers, "worker threads for exhaustive checks")->check(CLI::PositiveNumber);

    std::function<int()> action;

    // bound
    BoundArgs bound_args;
    auto* bound = app.add_subcommand("bound", "evaluate the bounds");
    bound->require_subcommand(1);
    auto add_bound_options = [&](CLI::App* sub, bool needs_list) {
        sub->add_option("--delta", bound_args.delta, "relative minimum distance, e.g. 9/10 or 0.9")->required();
        auto* list = sub->add_option("--list-size", bound_args.L, "list size L")->check(CLI::Range(2, 1000));
        if (needs_list) list->required();
        sub->add_option("--tau-d", bound_args.tau_d, "deletion fraction");
        sub->add_option("--tau-i", bound_args.tau_i, "insertion fraction");
    };
    auto* rho_cmd = bound->add_subcommand("rho", "rho^(delta,L) pieces, limits and CSV curve");
    add_bound_options(rho_cmd, true);
    rho_cmd->add_option("--csv", bound_args.csv, "write tau_d,rho,phi1,phi2,unique to PATH");
    rho_cmd->add_option("--points", bound_args.points, "grid points for --csv")->check(CLI::PositiveNumber);
    rho_cmd->add_option("--q", bound_args.q, "report alphabet limits for q")->check(CLI::Range(2, 256));
    rho_cmd->callback([&] { action = [&] { return bound_rho(bound_args); }; });
    auto* hy_cmd = bound->add_subcommand("hy", "prior quadratic bound and guaranteed list size");
    add_bound_options(hy_cmd, false);
    hy_cmd->callback([&] { action = [&] { return bound_hy(bound_args); }; });
    auto* cmp_cmd = bound->add_subcommand("compare", "where rho improves on the prior bound");
    add_bound_options(cmp_cmd, true);
    cmp_cmd->callback([&] { action = [&] { return bound_compare(bound_args); }; });

    // identity
    IdentityArgs id_args;
    auto* identity = app.add_subcommand("identity", "combinatorial identities with brute-force oracles");
    identity->require_subcommand(1);
    auto* covers = identity->add_subcommand("covers", "v-cover counts");
    covers->add_option("--j", id_args.j)->required();
    covers->add_option("--ell", id_args.ell)->required();
    covers->add_option("--v", id_args.v)->required();
    covers->callback([&] { action = [&] { return identity_covers(id_args, g); }; });
    auto* ajv = identity->add_subcommand("ajv", "inclusion-exclusion coefficient A_{j,v}");
    ajv->add_option("--j", id_args.j)->required();
    ajv->add_option("--v", id_args.v)->required();
    ajv->callback([&] { action = [&] { return identity_ajv(id_args); }; });
    auto* claim8 = identity->add_subcommand("claim8", "alternating binomial sum");
    claim8->add_option("--j", id_args.j)->required();
    claim8->add_option("--v", id_args.v)->required();
    claim8->callback([&] { action = [&] { return identity_claim8(id_args); }; });
    auto* phi = identity->add_subcommand("phi", "combination coefficient row Phi_{r,.}");
    phi->add_option("--list-size", id_args.L)->required();
    phi->add_option("--r", id_args.r)->required();
    phi->callback([&] { action = [&] { return identity_phi(id_args); }; });

    // code
    CodeArgs code_args;
    auto* code = app.add_subcommand("code", "construct a code; writes the code file to --out or stdout");
    code->require_subcommand(1);
    auto* vt = code->add_subcommand("vt", "binary VT code");
    vt->add_option("--n", code_args.n)->required();
    vt->add_option("--a", code_args.a, "syndrome")->capture_default_str();
    vt->add_option("--out", code_args.out);
    vt->callback([&] {
        action = [&] { return emit_code(vt_binary(code_args.n, code_args.a), "vt", code_args); };
    });
    auto* vtq = code->add_subcommand("vtq", "q-ary VT code");
    vtq->add_option("--n", code_args.n)->required();
    vtq->add_option("--q", code_args.q)->required();
    vtq->add_option("--a", code_args.a)->capture_default_str();
    vtq->add_option("--b", code_args.b)->capture_default_str();
    vtq->add_option("--out", code_args.out);
    vtq->callback([&] {
        action = [&] {
            return emit_code(vt_qary(code_args.n, code_args.q, code_args.a, code_args.b), "vt-qary", code_args);
        };
    });
    auto* hb = code->add_subcommand("helberg", "Helberg code");
    hb->add_option("--q", code_args.q)->required();
    hb->add_option("--n", code_args.n)->required();
    hb->add_option("--s", code_args.s)->required();
    hb->add_option("--a", code_args.helberg_a)->capture_default_str();
    hb->add_option("--m", code_args.modulus, "modulus (default v_{n+1})");
    hb->add_option("--out", code_args.out);
    hb->callback([&] {
        action = [&] {
            auto big = [](const std::string& s, const char* name) {
                const Rational r = rational_arg(s, name);
                if (denominator(r) != 1) throw std::invalid_argument(std::string("--") + name + " must be an integer");
                return BigInt(numerator(r));
            };
            std::optional<BigInt> m;
            if (code_args.modulus) m = big(*code_args.modulus, "m");
            const HelbergWeights w = helberg_weights(code_args.q, code_args.n, code_args.s, m);
            json extra = {{"s", code_args.s}, {"modulus", w.modulus.str()}};
            return emit_code(helberg(code_args.q, code_args.n, code_args.s, big(code_args.helberg_a, "a"), m),
                             "helberg", code_args, extra);
        };
    });
    auto* rs = code->add_subcommand("rs", "Reed-Solomon code over a prime field");
    rs->add_option("--p", code_args.p, "prime field size")->required();
    rs->add_option("--n", code_args.n)->required();
    rs->add_option("--k", code_args.k)->required();
    rs->add_option("--alpha", code_args.alpha, "evaluation points; searched when omitted")->delimiter(',');
    rs->add_option("--budget", code_args.budget, "evaluation vectors to try when searching");
    rs->add_option("--out", code_args.out);
    rs->callback([&] { action = [&] { return code_rs(code_args, g); }; });

    // verify
    VerifyArgs verify_args;
    auto* verify = app.add_subcommand("verify", "exhaustive oracles on a code file");
    verify->require_subcommand(1);
    auto* md = verify->add_subcommand("mindist", "minimum insdel distance");
    md->add_option("--code", verify_args.code)->required()->check(CLI::ExistingFile);
    md->callback([&] { action = [&] { return verify_mindist(verify_args, g); }; });
    auto* ld = verify->add_subcommand("list-decodable", "tally channel outputs; exit 1 when not decodable");
    ld->add_option("--code", verify_args.code)->required()->check(CLI::ExistingFile);
    ld->add_option("--ti", verify_args.t_I, "channel insertions")->required();
    ld->add_option("--td", verify_args.t_D, "channel deletions")->required();
    ld->add_option("--list-size", verify_args.L)->required()->check(CLI::PositiveNumber);
    ld->add_flag("--witness", verify_args.witness, "report the smallest overfull received word");
    ld->callback([&] { action = [&] { return verify_list(verify_args, g); }; });
    auto* th = verify->add_subcommand("theorem", "check every integer pair inside the rho hypothesis region");
    th->add_option("--code", verify_args.code)->required()->check(CLI::ExistingFile);
    th->add_option("--list-size", verify_args.L)->required()->check(CLI::Range(2, 1000));
    th->callback([&] { action = [&] { return verify_theorem(verify_args, g); }; });
    auto* uq = verify->add_subcommand("unique", "list size 1 for all t_I + t_D <= (d-1)/2");
    uq->add_option("--code", verify_args.code)->required()->check(CLI::ExistingFile);
    uq->callback([&] { action = [&] { return verify_unique(verify_args, g); }; });

    // figure
    FigureArgs fig_args;
    auto* fig = app.add_subcommand("figure", "emit figure data as CSV");
    fig->require_subcommand(1);
    for (const char* name : {"fig1", "fig2", "fig3"}) {
        auto* sub = fig->add_subcommand(name, std::string("CSV for ") + name);
        sub->add_option("--delta", fig_args.delta);
        sub->add_option("--list-size", fig_args.list_sizes, "one or more list sizes")->required()->delimiter(',');
        sub->add_option("--rates", fig_args.rates, "code rates in (0, 1/2)")->delimiter(',');
        sub->add_option("--points", fig_args.points)->check(CLI::PositiveNumber);
        sub->add_option("--q", fig_args.q, "clip fig3 to the alphabet limits")->check(CLI::Range(2, 256));
        sub->add_option("--out", fig_args.out, "output path (stdout when omitted)");
        const FigureId id = parse_figure_id(name);
        sub->callback([&, id] { action = [&, id] { return figure(id, fig_args); }; });
    }

    // regress
    std::vector<int> only;
    auto* reg = app.add_subcommand("regress", "run the acceptance suite");
    reg->add_option("--only", only, "criterion ids")->delimiter(',')->check(CLI::Range(1, 11));
    reg->callback([&] { action = [&] { return regress(only, g); }; });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? kOk : kInvalid;
    }

    try {
        return action();
    } catch (const std::invalid_argument& e) {
        std::cerr << "invalid input: " << e.what() << '\n';
        return kInvalid;
    } catch (const std::domain_error& e) {
        std::cerr << "invalid input: " << e.what() << '\n';
        return kInvalid;
    } catch (const BallTooLarge& e) {
        std::cerr << "cap exceeded: " << e.what() << '\n';
        return kFailure;
    } catch (const CodeTooLarge& e) {
        std::cerr << "cap exceeded: " << e.what() << '\n';
        return kFailure;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kFailure;
    }
}
