#include "insdel/figures.hpp"

#include <fstream>
#include <stdexcept>

#include <fmt/format.h>

#include "insdel/bounds.hpp"

namespace insdel {

namespace {

void require(bool ok, const std::string& message) {
    if (!ok) throw std::invalid_argument(message);
}

// tau_D = i * delta / points for i = 0 .. points-1, so the grid stays inside [0, delta).
Rational tau_at(const Rational& delta, std::size_t i, std::size_t points) {
    return delta * Rational(static_cast<long>(i), static_cast<long>(points));
}

std::string fig1_csv(const Rational& delta, int L, std::size_t points) {
    std::string out = "tau_d,rho,phi2,unique,marker\n";
    auto row = [&](const Rational& tau_D, const char* marker) {
        const Rational x = 1 - tau_D;
        out += fmt::format("{},{},{},{},{}\n", format_value(to_double(tau_D)), format_value(to_double(rho(delta, L, x))),
                           format_value(to_double(hy_phi2(delta, L, x))),
                           format_value(to_double(unique_decoding_limit(delta, tau_D))), marker);
    };
    for (std::size_t i = 0; i < points; ++i) row(tau_at(delta, i, points), "");

    const ComparisonReport report = comparison_report(delta, L);
    if (report.p1) {
        const double tau_D = report.p1->first;
        const double x = 1 - tau_D;
        out += fmt::format("{},{},{},{},P1\n", format_value(tau_D), format_value(rho(to_double(delta), L, x)),
                           format_value(hy_phi2(to_double(delta), L, x)), format_value(to_double(delta) - tau_D));
    }
    if (report.p2 && report.p2->first >= 0) row(report.p2->first, "P2");
    return out;
}

std::string fig2_csv(const Rational& delta, const std::vector<int>& list_sizes, std::size_t points) {
    std::string out = "x";
    for (int L : list_sizes) out += fmt::format(",rho_L{}", L);
    out += '\n';
    const Rational lo = 1 - delta;
    for (std::size_t i = 0; i < points; ++i) {
        const Rational x = lo + delta * Rational(static_cast<long>(i), static_cast<long>(points - 1));
        out += format_value(to_double(x));
        for (int L : list_sizes) out += "," + format_value(to_double(rho(delta, L, x)));
        out += '\n';
    }
    return out;
}

std::string fig3_csv(int L, const std::vector<Rational>& rates, std::size_t points, std::optional<int> q) {
    std::string out = "rate,delta,tau_d,tau_i_max\n";
    const std::optional<AlphabetLimits> limits = q ? std::optional(alphabet_limits(*q)) : std::nullopt;
    for (const Rational& rate : rates) {
        const Rational delta = 1 - 2 * rate;
        for (std::size_t i = 0; i < points; ++i) {
            const Rational tau_D = tau_at(delta, i, points);
            if (limits && tau_D >= limits->max_tau_d) break;
            Rational tau_I = rho(delta, L, 1 - tau_D);
            if (limits && tau_I > limits->max_tau_i) tau_I = limits->max_tau_i;
            out += fmt::format("{},{},{},{}\n", format_value(to_double(rate)), format_value(to_double(delta)),
                               format_value(to_double(tau_D)), format_value(to_double(tau_I)));
        }
    }
    return out;
}

}  // namespace

void FigureSpec::validate() const {
    require(points >= 2, "a curve needs at least 2 points");
    if (q) require(*q >= 2, "alphabet size must be at least 2");
    auto check_delta = [&] {
        require(delta.has_value(), to_string(id) + " needs --delta");
        require(*delta > 0 && *delta < 1, "delta must lie in (0, 1)");
    };
    auto check_list_sizes = [&] {
        require(!list_sizes.empty(), to_string(id) + " needs at least one list size");
        for (int L : list_sizes) require(L >= 2, "list size must be at least 2");
    };
    switch (id) {
        case FigureId::Fig1:
            check_delta();
            check_list_sizes();
            require(list_sizes.size() == 1, "fig1 takes exactly one list size");
            break;
        case FigureId::Fig2:
            check_delta();
            check_list_sizes();
            break;
        case FigureId::Fig3:
            check_list_sizes();
            require(list_sizes.size() == 1, "fig3 takes exactly one list size");
            require(!rates.empty(), "fig3 needs at least one rate");
            for (const Rational& r : rates) require(r > 0 && 2 * r < 1, "rates must lie in (0, 1/2)");
            break;
    }
}

FigureId parse_figure_id(const std::string& name) {
    if (name == "fig1") return FigureId::Fig1;
    if (name == "fig2") return FigureId::Fig2;
    if (name == "fig3") return FigureId::Fig3;
    throw std::invalid_argument("unknown figure '" + name + "'");
}

std::string to_string(FigureId id) {
    switch (id) {
        case FigureId::Fig1: return "fig1";
        case FigureId::Fig2: return "fig2";
        case FigureId::Fig3: return "fig3";
    }
    return "fig?";
}

std::string emit_figure(const FigureSpec& spec) {
    spec.validate();
    switch (spec.id) {
        case FigureId::Fig1: return fig1_csv(*spec.delta, spec.list_sizes.front(), spec.points);
        case FigureId::Fig2: return fig2_csv(*spec.delta, spec.list_sizes, spec.points);
        case FigureId::Fig3: return fig3_csv(spec.list_sizes.front(), spec.rates, spec.points, spec.q);
    }
    throw std::logic_error("unhandled figure id");
}

void emit_figure(const FigureSpec& spec, const std::filesystem::path& out) {
    const std::string csv = emit_figure(spec);
    std::ofstream file(out, std::ios::binary);
    if (!file) throw std::runtime_error("cannot open " + out.string() + " for writing");
    file << csv;
}

std::string bound_curve_csv(const Rational& delta, int L, std::size_t points) {
    if (points < 1) throw std::invalid_argument("a curve needs at least 1 point");
    std::string out = "tau_d,rho,phi1,phi2,unique\n";
    for (std::size_t i = 0; i < points; ++i) {
        const Rational tau_D = tau_at(delta, i, points);
        const Rational x = 1 - tau_D;
        out += fmt::format("{},{},{},{},{}\n", format_value(to_double(tau_D)), format_value(to_double(rho(delta, L, x))),
                           format_value(to_double(hy_phi1(delta, x))), format_value(to_double(hy_phi2(delta, L, x))),
                           format_value(to_double(unique_decoding_limit(delta, tau_D))));
    }
    return out;
}

std::string format_value(double value) {
    if (value == 0) value = 0;  // drop the sign of -0
    return fmt::format("{:.10f}", value);
}

}  // namespace insdel
