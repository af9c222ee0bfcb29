#pragma once

#include <array>
#include <cstddef>
#include <string_view>
#include <vector>

namespace thermgrav {

/// Sign convention for the temperature correction factor.
///
/// `literal` is the analytic sum exactly as printed, which tends to -1 as
/// y -> 0. `ratio` is F(r,T)/F(r,0), which tends to +1; it is -literal.
enum class Convention { literal, ratio };

enum class CorrectionMethod { closed_form, small_y_guard };

std::string_view to_string(Convention c);
std::string_view to_string(CorrectionMethod m);
/// Parses "literal" or "ratio"; throws DomainError otherwise.
Convention parse_convention(std::string_view name);

/// Dimensionless triple: x = exp(-2y), z = y / (1 - x).
struct ReducedVariables {
    double y;
    double x;
    double z;
};

struct CorrectionResult {
    double value = 0.0;
    Convention convention = Convention::ratio;
    bool underflowed = false;
    CorrectionMethod method = CorrectionMethod::closed_form;
};

/// Below this y the bracket is summed in ascending magnitude with compensation.
inline constexpr double small_y_switch = 1e-3;
/// At and above this y, exp(-2y) is within a few decades of underflow; G is reported as 0.
inline constexpr double underflow_y = 350.0;

/// Numerator polynomials of the closed form as printed, ascending powers of x,
/// paired with the bracket coefficients -12, 29, -61/2, 15, -3 of z^2..z^6.
inline constexpr std::array<std::array<int, 5>, 5> closed_form_numerators = {{
    {1, 0, 0, 0, 0},
    {1, 1, 0, 0, 0},
    {1, 4, 1, 0, 0},
    {1, 11, 11, 1, 0},
    {1, 26, 66, 26, 1},
}};
inline constexpr std::array<double, 5> closed_form_bracket = {-12.0, 29.0, -30.5, 15.0, -3.0};

/// Throws DomainError for y <= 0. 1 - x is always formed with expm1.
ReducedVariables reduce(double y);

/// Closed-form temperature correction factor at reduced distance y > 0.
CorrectionResult correction_factor(double y, Convention convention = Convention::ratio);

enum class Spacing { linear, log };
Spacing parse_spacing(std::string_view name);

struct CorrectionRow {
    double y;
    double g;
};

/// `points` ratio-convention rows from y_min to y_max inclusive. Requires
/// 0 < y_min < y_max and points >= 2.
std::vector<CorrectionRow> correction_table(double y_min, double y_max, std::size_t points, Spacing spacing);

/// Grid of `points` values from lo to hi inclusive, endpoints exact.
std::vector<double> make_grid(double lo, double hi, std::size_t points, Spacing spacing);

}  // namespace thermgrav
