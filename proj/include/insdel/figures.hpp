#pragma once

#include <cstddef>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "insdel/numeric.hpp"

namespace insdel {

enum class FigureId { Fig1, Fig2, Fig3 };

/// fig1: rho, phi2 and the unique line against tau_D for one (delta, L), plus P1/P2 marker rows.
/// fig2: rho^(delta, L)(x) over [1 - delta, 1] for several L.
/// fig3: the largest admissible tau_I against tau_D for each rate R of an RS code, delta = 1 - 2R.
struct FigureSpec {
    FigureId id = FigureId::Fig1;
    std::optional<Rational> delta;
    std::vector<int> list_sizes;
    std::vector<Rational> rates;
    std::size_t points = 512;
    std::optional<int> q;  ///< clip fig3 to tau_D < (q-1)/q and tau_I < q-1

    /// Throws std::invalid_argument when a required parameter is missing or out of range.
    void validate() const;
};

FigureId parse_figure_id(const std::string& name);
std::string to_string(FigureId id);

/// CSV text; every value is computed exactly and printed with fixed precision.
std::string emit_figure(const FigureSpec& spec);
void emit_figure(const FigureSpec& spec, const std::filesystem::path& out);

/// Columns tau_d, rho, phi1, phi2, unique over tau_D = i delta / points, i < points.
std::string bound_curve_csv(const Rational& delta, int L, std::size_t points);

/// Fixed-precision decimal used by every CSV writer.
std::string format_value(double value);

}  // namespace insdel
