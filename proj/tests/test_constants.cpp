#include "thermgrav/constants.hpp"
#include "thermgrav/errors.hpp"

#include <doctest.h>

#include <bit>
#include <cstdint>
#include <random>

using namespace thermgrav;

#include "oracle_values.hpp"

TEST_CASE("CODATA defaults are positive and validate") {
    const PhysicalConstants pc;
    CHECK(pc.hbar == 1.054571817e-34);
    CHECK(pc.c == 299792458.0);
    CHECK(pc.k_boltzmann == 1.380649e-23);
    CHECK(pc.gamma_grav == 6.67430e-11);
    CHECK_NOTHROW(pc.validate());
    CHECK_THROWS_AS(PhysicalConstants::make(1.0, -1.0, 1.0, 1.0), DomainError);
    CHECK_THROWS_AS(PhysicalConstants::make(0.0, 1.0, 1.0, 1.0), DomainError);
}

TEST_CASE("reduced_y basics") {
    CHECK(reduced_y(123.0, 0.0) == 0.0);
    CHECK(reduced_y(0.0, 2.7) == 0.0);
    CHECK(reduced_y(1.3498e-4, 2.7) == doctest::Approx(1.0).epsilon(1e-3));
    CHECK_THROWS_AS(reduced_y(-1.0, 2.7), DomainError);
    CHECK_THROWS_AS(reduced_y(1.0, -2.7), DomainError);
}

TEST_CASE("thermal_length") {
    const double l = thermal_length(2.7);
    CHECK(l == doctest::Approx(oracle::thermal_length_2_7K).epsilon(1e-14));
    CHECK(thermal_length(5.4) == l / 2.0);
    CHECK(thermal_length(2.7 / 11000.0) == doctest::Approx(11000.0 * l).epsilon(1e-14));
    CHECK(reduced_y(l, 2.7) == doctest::Approx(1.0).epsilon(1e-14));
    CHECK_THROWS_AS(thermal_length(0.0), DomainError);
    CHECK_THROWS_AS(thermal_length(-1.0), DomainError);
}

TEST_CASE("scaled_temperature") {
    CHECK(scaled_temperature(2.7, 11000.0) == doctest::Approx(2.4545454545e-4).epsilon(1e-10));
    CHECK(scaled_temperature(2.7, 1.0) == 2.7);
    CHECK(scaled_temperature(2.7, 2.0) == 1.35);
    CHECK_THROWS_AS(scaled_temperature(0.0, 2.0), DomainError);
    CHECK_THROWS_AS(scaled_temperature(2.7, 0.0), DomainError);
}

TEST_CASE("reduced_y is bilinear and invariant under stretch-and-cool") {
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> logu(-6.0, 6.0);
    for (int i = 0; i < 200; ++i) {
        const double r = std::pow(10.0, logu(rng));
        const double t = std::pow(10.0, logu(rng) / 2.0);
        const double y = reduced_y(r, t);
        for (double kappa : {0.5, 2.0, 10.0, 1000.0}) {
            CHECK(reduced_y(kappa * r, t) == doctest::Approx(kappa * y).epsilon(1e-15));
            CHECK(reduced_y(r, kappa * t) == doctest::Approx(kappa * y).epsilon(1e-15));
            CHECK(reduced_y(kappa * r, t / kappa) == doctest::Approx(y).epsilon(1e-15));
        }
        // Power-of-two stretches are exact in floating point.
        CHECK(std::bit_cast<std::uint64_t>(reduced_y(4.0 * r, t / 4.0)) == std::bit_cast<std::uint64_t>(y));
        CHECK(reduced_y(thermal_length(t), t) == doctest::Approx(1.0).epsilon(1e-14));
    }
}

TEST_CASE("constants file parsing") {
    const auto pc = parse_constants("# override\n\nc = 3e8\n  gamma_grav=6.7e-11  \n");
    CHECK(pc.c == 3e8);
    CHECK(pc.gamma_grav == 6.7e-11);
    CHECK(pc.hbar == PhysicalConstants{}.hbar);

    CHECK_THROWS_AS(parse_constants("c = -3e8\n"), DomainError);
    CHECK_THROWS_AS(parse_constants("c = 0\n"), DomainError);
    CHECK_THROWS_AS(parse_constants("speed = 3e8\n"), DomainError);
    CHECK_THROWS_AS(parse_constants("c = fast\n"), DomainError);
    CHECK_THROWS_AS(parse_constants("c 3e8\n"), DomainError);
    CHECK_THROWS_AS(load_constants("/nonexistent/constants.cfg"), std::runtime_error);
}

TEST_CASE("fingerprint tracks every constant") {
    const PhysicalConstants base;
    CHECK(base.fingerprint() == PhysicalConstants{}.fingerprint());
    CHECK(base.fingerprint().size() == 16);
    auto a = base;
    a.hbar *= 1.0 + 1e-15;
    auto b = base;
    b.c += 1.0;
    auto k = base;
    k.k_boltzmann *= 2.0;
    auto g = base;
    g.gamma_grav = 6.6743e-11 * (1 + 1e-12);
    for (const auto& other : {a, b, k, g}) CHECK(other.fingerprint() != base.fingerprint());
}
