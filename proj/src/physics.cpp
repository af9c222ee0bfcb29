#include "thermgrav/physics.hpp"

#include "thermgrav/correction.hpp"
#include "thermgrav/errors.hpp"
#include "thermgrav/kernels.hpp"
#include "thermgrav/quadrature.hpp"

#include <fmt/format.h>

#include <cmath>
#include <numbers>

namespace thermgrav {

namespace {

void require_separation(double r) {
    if (!(r > 0.0) || !std::isfinite(r)) throw DomainError(fmt::format("separation r = {} must be positive", r));
}

// (4/5)^2 times the dimensionless integral of the kernel; exactly +1 for the
// potential kernel and -1 for the force kernel.
double newton_factor(const ExponentialPolynomialKernel& kernel) {
    return to_double(Rational(16, 25) * integrate_kernel_exact(kernel));
}

double majorant(double y) { return (16.0 / 25.0) * 3.0 * std::pow(y, 6) * std::exp(-2.0 * y); }

}  // namespace

ParticlePair::ParticlePair(double m1, double m2) : m1_(m1), m2_(m2) {
    if (!(m1 > 0.0 && std::isfinite(m1)) || !(m2 > 0.0 && std::isfinite(m2))) {
        throw DomainError(fmt::format("masses must be positive and finite (got {}, {})", m1, m2));
    }
}

double static_polarizability(double mass, const PhysicalConstants& consts) {
    if (!(mass >= 0.0)) throw DomainError("mass must be nonnegative");
    return mass * std::sqrt(32.0 * std::numbers::pi * consts.gamma_grav / (25.0 * consts.hbar * consts.c));
}

double potential_zero_T(const ParticlePair& pair, double r, const PhysicalConstants& consts) {
    require_separation(r);
    static const double factor = newton_factor(potential_kernel());
    return -consts.gamma_grav * pair.m1() * pair.m2() * factor / r;
}

double force_zero_T(const ParticlePair& pair, double r, const PhysicalConstants& consts) {
    require_separation(r);
    // -dV/dr turns exp(-2u) P(u) into exp(-2u) Q(u) / r with a positive
    // prefactor; the Q integral is negative, so the force is attractive.
    static const double factor = newton_factor(force_kernel());
    return consts.gamma_grav * pair.m1() * pair.m2() * factor / (r * r);
}

ThermalForce force_finite_T(const ParticlePair& pair, double r, double temperature, const PhysicalConstants& consts) {
    const double f0 = force_zero_T(pair, r, consts);
    const double y = reduced_y(r, temperature, consts);
    if (y == 0.0) return {f0, 1.0, 0.0, false};
    const CorrectionResult g = correction_factor(y, Convention::ratio);
    if (g.underflowed) return {0.0, 0.0, y, true};
    return {f0 * g.value, g.value, y, false};
}

double range_scan_limit(double threshold, double grid_step) {
    // The majorant peaks at y = 3; walk right on the grid until it is below threshold.
    double y = grid_step * std::ceil(3.0 / grid_step);
    while (majorant(y) >= threshold) y += grid_step;
    return y;
}

RangeSolution gravity_range(double temperature, double threshold, const PhysicalConstants& consts,
                            const RangeOptions& options) {
    if (!(temperature > 0.0)) throw DomainError("gravity_range requires T > 0");
    if (!(threshold > 0.0 && threshold < 1.0)) {
        throw DomainError(fmt::format("threshold {} outside (0, 1)", threshold));
    }
    if (!(options.grid_step > 0.0) || !(options.y_tolerance > 0.0)) throw DomainError("invalid range options");

    const auto above = [threshold](double y) {
        // G(0+) = 1.
        const double g = y == 0.0 ? 1.0 : correction_factor(y, Convention::ratio).value;
        return g >= threshold;
    };

    const double y_hi = range_scan_limit(threshold, options.grid_step);
    const auto steps = static_cast<std::size_t>(std::llround(y_hi / options.grid_step));

    std::size_t crossings = 0;
    double lo = 0.0;
    double hi = 0.0;
    bool prev = above(0.0);
    for (std::size_t i = 1; i <= steps; ++i) {
        const double y = static_cast<double>(i) * options.grid_step;
        const bool cur = above(y);
        if (cur != prev) {
            ++crossings;
            lo = static_cast<double>(i - 1) * options.grid_step;
            hi = y;
        }
        prev = cur;
    }
    if (crossings == 0) {
        throw NotFoundError(fmt::format("correction factor never crosses threshold {} on (0, {}]", threshold, y_hi));
    }

    const bool lo_above = above(lo);
    while (hi - lo > options.y_tolerance) {
        const double mid = 0.5 * (lo + hi);
        if (above(mid) == lo_above) {
            lo = mid;
        } else {
            hi = mid;
        }
    }

    RangeSolution sol;
    sol.y_star = 0.5 * (lo + hi);
    sol.r_star = sol.y_star * thermal_length(temperature, consts);
    sol.threshold = threshold;
    sol.crossings_found = crossings;
    sol.bracket_width = hi - lo;
    return sol;
}

}  // namespace thermgrav
