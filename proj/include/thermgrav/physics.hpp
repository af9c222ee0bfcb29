#pragma once

#include "thermgrav/constants.hpp"

#include <cstddef>

namespace thermgrav {

/// Two point masses in kg, both strictly positive and finite.
class ParticlePair {
public:
    ParticlePair(double m1, double m2);

    double m1() const noexcept { return m1_; }
    double m2() const noexcept { return m2_; }

private:
    double m1_;
    double m2_;
};

/// m sqrt(32 pi gamma / (25 hbar c)). Requires m >= 0.
double static_polarizability(double mass, const PhysicalConstants& consts = {});

/// Zero-temperature potential energy (J) from the kernel-integral route;
/// reduces to -gamma m1 m2 / r. Requires r > 0.
double potential_zero_T(const ParticlePair& pair, double r, const PhysicalConstants& consts = {});

/// Zero-temperature radial force (N), negative = attractive; reduces to
/// -gamma m1 m2 / r^2. Requires r > 0.
double force_zero_T(const ParticlePair& pair, double r, const PhysicalConstants& consts = {});

struct ThermalForce {
    double force = 0.0;       // N, radial
    double correction = 1.0;  // ratio-convention G
    double y = 0.0;
    bool underflowed = false;
};

/// force_zero_T scaled by the ratio-convention correction at y(r, T).
/// At T = 0 the correction is exactly 1. Requires r > 0, T >= 0.
ThermalForce force_finite_T(const ParticlePair& pair, double r, double temperature,
                            const PhysicalConstants& consts = {});

/// Largest crossing of the ratio-convention correction through a threshold.
struct RangeSolution {
    double y_star = 0.0;
    double r_star = 0.0;  // m
    double threshold = 0.0;
    std::size_t crossings_found = 0;
    double bracket_width = 0.0;
};

struct RangeOptions {
    double grid_step = 0.05;
    double y_tolerance = 1e-10;
};

/// Scans G on y = step, 2 step, ... up to the point where the large-y
/// majorant (16/25) 3 y^6 exp(-2y) drops below the threshold, counts the
/// crossings, and bisects the last one. Requires T > 0 and
/// 0 < threshold < 1; throws NotFoundError when no crossing exists.
RangeSolution gravity_range(double temperature, double threshold, const PhysicalConstants& consts = {},
                            const RangeOptions& options = {});

/// Upper end of the range scan for a threshold.
double range_scan_limit(double threshold, double grid_step = 0.05);

}  // namespace thermgrav
