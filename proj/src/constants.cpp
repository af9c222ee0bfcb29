#include "thermgrav/constants.hpp"

#include "thermgrav/errors.hpp"

#include <fmt/format.h>

#include <charconv>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <numbers>
#include <sstream>
#include <string_view>

namespace thermgrav {

namespace {

void require_positive(double v, std::string_view name) {
    if (!(std::isfinite(v) && v > 0.0)) {
        throw DomainError(fmt::format("constant '{}' must be positive and finite (got {})", name, v));
    }
}

std::string_view trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string_view::npos) return {};
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

double parse_number(std::string_view text, std::string_view key) {
    double v = 0.0;
    const auto* end = text.data() + text.size();
    auto [ptr, ec] = std::from_chars(text.data(), end, v);
    if (ec != std::errc{} || ptr != end) {
        throw DomainError(fmt::format("malformed value for '{}': '{}'", key, text));
    }
    return v;
}

}  // namespace

PhysicalConstants PhysicalConstants::make(double hbar, double c, double k_boltzmann, double gamma_grav) {
    PhysicalConstants pc{hbar, c, k_boltzmann, gamma_grav};
    pc.validate();
    return pc;
}

void PhysicalConstants::validate() const {
    require_positive(hbar, "hbar");
    require_positive(c, "c");
    require_positive(k_boltzmann, "k_boltzmann");
    require_positive(gamma_grav, "gamma_grav");
}

std::string PhysicalConstants::fingerprint() const {
    // FNV-1a over the round-trip decimal form of each value.
    const std::string canon = fmt::format("{:.17g};{:.17g};{:.17g};{:.17g}", hbar, c, k_boltzmann, gamma_grav);
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char ch : canon) {
        h ^= ch;
        h *= 0x100000001b3ULL;
    }
    return fmt::format("{:016x}", h);
}

PhysicalConstants parse_constants(const std::string& text) {
    PhysicalConstants pc;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto body = trim(line);
        if (body.empty() || body.front() == '#') continue;
        const auto eq = body.find('=');
        if (eq == std::string_view::npos) {
            throw DomainError(fmt::format("constants line {}: expected 'key = value'", lineno));
        }
        const auto key = trim(body.substr(0, eq));
        const auto value = parse_number(trim(body.substr(eq + 1)), key);
        if (key == "hbar") {
            pc.hbar = value;
        } else if (key == "c") {
            pc.c = value;
        } else if (key == "k_boltzmann") {
            pc.k_boltzmann = value;
        } else if (key == "gamma_grav") {
            pc.gamma_grav = value;
        } else {
            throw DomainError(fmt::format("constants line {}: unknown key '{}'", lineno, key));
        }
    }
    pc.validate();
    return pc;
}

PhysicalConstants load_constants(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot read constants file: " + path.string());
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_constants(ss.str());
}

double reduced_y(double r, double temperature, const PhysicalConstants& consts) {
    if (!(r >= 0.0) || !(temperature >= 0.0)) {
        throw DomainError("reduced_y requires r >= 0 and T >= 0");
    }
    const double per_metre_kelvin = 2.0 * std::numbers::pi * consts.k_boltzmann / (consts.hbar * consts.c);
    return (r * temperature) * per_metre_kelvin;
}

double thermal_length(double temperature, const PhysicalConstants& consts) {
    if (!(temperature > 0.0)) throw DomainError("thermal_length requires T > 0");
    const double metre_kelvin = consts.hbar * consts.c / (2.0 * std::numbers::pi * consts.k_boltzmann);
    return metre_kelvin / temperature;
}

double scaled_temperature(double t0, double scale) {
    if (!(t0 > 0.0) || !(scale > 0.0)) {
        throw DomainError("scaled_temperature requires T0 > 0 and scale > 0");
    }
    return t0 / scale;
}

}  // namespace thermgrav
