#include "thermgrav/correction.hpp"

#include "thermgrav/compensated.hpp"
#include "thermgrav/errors.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <cmath>

namespace thermgrav {

std::string_view to_string(Convention c) { return c == Convention::literal ? "literal" : "ratio"; }

std::string_view to_string(CorrectionMethod m) {
    return m == CorrectionMethod::closed_form ? "closed_form" : "small_y_guard";
}

Convention parse_convention(std::string_view name) {
    if (name == "literal") return Convention::literal;
    if (name == "ratio") return Convention::ratio;
    throw DomainError(fmt::format("unknown convention '{}'", name));
}

Spacing parse_spacing(std::string_view name) {
    if (name == "linear") return Spacing::linear;
    if (name == "log") return Spacing::log;
    throw DomainError(fmt::format("unknown spacing '{}'", name));
}

ReducedVariables reduce(double y) {
    if (!(y > 0.0) || !std::isfinite(y)) throw DomainError(fmt::format("reduced variable y = {} must be positive", y));
    const double x = std::exp(-2.0 * y);
    const double one_minus_x = -std::expm1(-2.0 * y);
    return {y, x, y / one_minus_x};
}

CorrectionResult correction_factor(double y, Convention convention) {
    const ReducedVariables rv = reduce(y);
    if (y >= underflow_y) {
        // Literal values approach zero from below.
        return {convention == Convention::ratio ? 0.0 : -0.0, convention, true, CorrectionMethod::closed_form};
    }

    // Bracket term j: c_j z^(j+2) A_j(x).
    std::array<double, 5> terms{};
    double zpow = rv.z * rv.z;
    for (std::size_t j = 0; j < terms.size(); ++j) {
        const auto& a = closed_form_numerators[j];
        double poly = 0.0;
        for (auto it = a.rbegin(); it != a.rend(); ++it) poly = poly * rv.x + *it;
        terms[j] = closed_form_bracket[j] * zpow * poly;
        zpow *= rv.z;
    }

    CorrectionMethod method = CorrectionMethod::closed_form;
    double bracket = 0.0;
    if (y <= small_y_switch) {
        // O(1) result from O(10) terms of alternating sign.
        method = CorrectionMethod::small_y_guard;
        std::sort(terms.begin(), terms.end(), [](double a, double b) { return std::abs(a) < std::abs(b); });
        CompensatedSum acc;
        for (double t : terms) acc += t;
        bracket = acc.value();
    } else {
        for (double t : terms) bracket += t;
    }

    const double literal = (16.0 / 25.0) * rv.x * bracket;
    return {convention == Convention::ratio ? -literal : literal, convention, false, method};
}

std::vector<double> make_grid(double lo, double hi, std::size_t points, Spacing spacing) {
    if (!(lo > 0.0) || !(lo < hi) || !std::isfinite(hi)) {
        throw DomainError(fmt::format("invalid range [{}, {}]: need 0 < min < max", lo, hi));
    }
    if (points < 2) throw DomainError("at least two points are required");
    std::vector<double> grid(points);
    const double steps = static_cast<double>(points - 1);
    if (spacing == Spacing::log) {
        const double a = std::log(lo);
        const double b = std::log(hi);
        for (std::size_t i = 0; i < points; ++i) grid[i] = std::exp(a + (b - a) * (static_cast<double>(i) / steps));
    } else {
        for (std::size_t i = 0; i < points; ++i) grid[i] = lo + (hi - lo) * (static_cast<double>(i) / steps);
    }
    grid.front() = lo;
    grid.back() = hi;
    return grid;
}

std::vector<CorrectionRow> correction_table(double y_min, double y_max, std::size_t points, Spacing spacing) {
    const auto grid = make_grid(y_min, y_max, points, spacing);
    std::vector<CorrectionRow> rows;
    rows.reserve(grid.size());
    for (double y : grid) rows.push_back({y, correction_factor(y, Convention::ratio).value});
    return rows;
}

}  // namespace thermgrav
