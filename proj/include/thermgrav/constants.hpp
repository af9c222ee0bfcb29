#pragma once

#include <filesystem>
#include <string>

namespace thermgrav {

/// SI physical constants used by every unit-bearing computation.
///
/// Defaults are CODATA 2018. All four values must be strictly positive and
/// finite; construction through `make` or `load_constants` enforces this.
struct PhysicalConstants {
    double hbar = 1.054571817e-34;     // J s
    double c = 299792458.0;            // m/s
    double k_boltzmann = 1.380649e-23; // J/K
    double gamma_grav = 6.67430e-11;   // m^3 kg^-1 s^-2

    /// Validated construction. Throws DomainError on a nonpositive value.
    static PhysicalConstants make(double hbar, double c, double k_boltzmann, double gamma_grav);

    static PhysicalConstants codata2018() { return {}; }

    /// Throws DomainError unless every field is strictly positive and finite.
    void validate() const;

    /// Stable hex digest of the four values; changes iff any value changes.
    std::string fingerprint() const;

    friend bool operator==(const PhysicalConstants&, const PhysicalConstants&) = default;
};

/// Reads `key = value` lines (keys: hbar, c, k_boltzmann, gamma_grav) over
/// the CODATA defaults. Blank lines and lines starting with '#' are skipped.
/// Unknown keys, malformed numbers and nonpositive values throw DomainError;
/// an unreadable file throws std::runtime_error.
PhysicalConstants load_constants(const std::filesystem::path& path);

/// Same as load_constants, from already-read text.
PhysicalConstants parse_constants(const std::string& text);

/// y = 2 pi r k_B T / (hbar c). Requires r >= 0 and T >= 0.
///
/// The product r*T is formed first, so y depends on (r, T) only through the
/// rounded product.
double reduced_y(double r, double temperature, const PhysicalConstants& consts = {});

/// hbar c / (2 pi k_B T), the distance at which y = 1. Requires T > 0.
double thermal_length(double temperature, const PhysicalConstants& consts = {});

/// T0 / scale. Both must be positive.
double scaled_temperature(double t0, double scale);

}  // namespace thermgrav
