#include "thermgrav/correction.hpp"
#include "thermgrav/errors.hpp"
#include "thermgrav/series.hpp"

#include <doctest.h>

#include <cmath>
#include <vector>

#include "oracle_values.hpp"

using namespace thermgrav;

namespace {

// Plain long-double partial sum of n^k x^n for n = 0..terms.
long double partial_power_sum(int k, long double x, int terms) {
    long double s = 0.0L;
    for (int n = 0; n <= terms; ++n) s += std::pow(static_cast<long double>(n), k) * std::pow(x, n);
    return s;
}

}  // namespace

TEST_CASE("Eulerian numerators match the printed polynomials") {
    CHECK(eulerian_numerator(1) == std::vector<long long>{1});
    CHECK(eulerian_numerator(2) == std::vector<long long>{1, 1});
    CHECK(eulerian_numerator(3) == std::vector<long long>{1, 4, 1});
    CHECK(eulerian_numerator(4) == std::vector<long long>{1, 11, 11, 1});
    CHECK(eulerian_numerator(5) == std::vector<long long>{1, 26, 66, 26, 1});
    // Row sums are k!.
    CHECK(eulerian_numerator(7).size() == 7);
    long long sum = 0;
    for (auto v : eulerian_numerator(7)) sum += v;
    CHECK(sum == 5040);
}

TEST_CASE("eulerian_sum closed form") {
    CHECK(eulerian_sum(0, 0.5) == 2.0);
    CHECK(eulerian_sum(1, 0.5) == 2.0);
    CHECK(eulerian_sum(5, 0.5) == doctest::Approx(1082.0).epsilon(1e-15));
    CHECK(std::abs(static_cast<double>(partial_power_sum(5, 0.5L, 80)) - 1082.0) < 1e-12);
    CHECK(eulerian_sum(3, 0.0) == 0.0);
    CHECK(eulerian_sum(0, 0.0) == 1.0);
    CHECK_THROWS_AS(eulerian_sum(2, 1.0), DomainError);
    CHECK_THROWS_AS(eulerian_sum(2, -0.1), DomainError);
    CHECK_THROWS_AS(eulerian_sum(6, 0.5), DomainError);
}

TEST_CASE("brute Eulerian sums") {
    const auto a = brute_eulerian_sum(1, 0.5, 1e-12);
    CHECK(std::abs(a.value - 2.0) <= 1e-12);
    const auto b = brute_eulerian_sum(5, 0.5, 1e-12);
    CHECK(std::abs(b.value - 1082.0) <= 1e-9);
    const auto c = brute_eulerian_sum(0, 0.9, 1e-12);
    CHECK(std::abs(c.value - 10.0) <= 1e-11);
    CHECK(c.truncation_bound >= 0.0);

    const auto z = brute_eulerian_sum(3, 0.0, 1e-12);
    CHECK(z.value == 0.0);

    SeriesOptions small;
    small.max_terms = 1000;
    CHECK_THROWS_AS(brute_eulerian_sum(5, 0.999, 1e-12, small), ConvergenceError);
    CHECK_THROWS_AS(brute_eulerian_sum(1, 0.5, 1e-16), DomainError);
}

TEST_CASE("closed and brute Eulerian sums agree across k and x") {
    for (int k = 0; k <= 5; ++k) {
        for (double x : {0.01, 0.1, 0.3, 0.5, 0.7, 0.9, 0.99}) {
            const auto b = brute_eulerian_sum(k, x, 1e-13);
            const double closed = eulerian_sum(k, x);
            CHECK(std::abs(b.value - closed) <= 1e-10 * std::abs(closed));
            CHECK(std::abs(b.value - closed) <= 1e-13 * std::abs(b.value) + b.truncation_bound + 1e-14 * closed);
        }
    }
}

TEST_CASE("Matsubara frequencies reduce to n y") {
    const double t = 2.7;
    const double r = 3.0e-4;
    const double c = PhysicalConstants{}.c;
    const double y = reduced_y(r, t);
    CHECK(matsubara_frequency(0, t) == 0.0);
    for (long long n : {1LL, 2LL, 17LL, 1000LL}) {
        CHECK(matsubara_frequency(n, t) * r / c == doctest::Approx(static_cast<double>(n) * y).epsilon(1e-14));
    }
    CHECK_THROWS_AS(matsubara_frequency(-1, t), DomainError);
}

TEST_CASE("zero-frequency term vanishes for the force kernel and is half-weighted in general") {
    for (double y : {1e-3, 0.5, 7.0}) CHECK(matsubara_summand(force_kernel(), 0, y) == 0.0);
    CHECK(matsubara_summand(potential_kernel(), 0, 0.3) == 1.5);
    CHECK(matsubara_summand(ExponentialPolynomialKernel{Rational(1)}, 0, 1.0) == 0.5);
    // Geometric check of the half weight: sum' exp(-2ny) = 1/2 + x/(1-x).
    const double y = 0.4;
    const double x = std::exp(-2 * y);
    const auto s = matsubara_sum(ExponentialPolynomialKernel{Rational(1)}, y, 1e-14);
    CHECK(s.value == doctest::Approx(0.5 + x / (1 - x)).epsilon(1e-13));
}

TEST_CASE("brute Matsubara sum against frozen high-precision values") {
    struct Case {
        double y;
        double g;
    };
    for (const auto& c : {Case{0.01, oracle::g_0_01}, Case{0.1, oracle::g_0_1}, Case{0.5, oracle::g_0_5},
                          Case{1.0, oracle::g_1}, Case{2.0, oracle::g_2}, Case{3.0, oracle::g_3},
                          Case{5.0, oracle::g_5}, Case{10.0, oracle::g_10}, Case{30.0, oracle::g_30}}) {
        const auto r = brute_matsubara_G(c.y, 1e-14);
        CHECK(r.value < 0.0);
        CHECK(std::abs(-r.value - c.g) <= 1e-12 * c.g);
        CHECK(r.truncation_bound >= 0.0);
        CHECK(static_cast<double>(r.terms_used) >= std::ceil(3.0 / c.y) + 5.0);
    }
    const auto far = brute_matsubara_G(100.0, 1e-14);
    CHECK(std::abs(far.value) < 1e-74);
    CHECK(-far.value == doctest::Approx(oracle::g_100).epsilon(1e-12));
}

TEST_CASE("brute Matsubara sum errors") {
    CHECK_THROWS_AS(brute_matsubara_G(0.0, 1e-12), DomainError);
    CHECK_THROWS_AS(brute_matsubara_G(-1.0, 1e-12), DomainError);
    SeriesOptions small;
    small.max_terms = 100;
    CHECK_THROWS_AS(brute_matsubara_G(0.01, 1e-12, small), ConvergenceError);
}

TEST_CASE("stopping rule does not quit on the rising flank") {
    // At small y the first terms grow; a loose tolerance must still run past n y = 6.
    for (double y : {0.005, 0.02, 0.2}) {
        const auto r = brute_matsubara_G(y, 1e-3);
        CHECK(static_cast<double>(r.terms_used) * y > 6.0);
        const double closed = correction_factor(y, Convention::literal).value;
        CHECK(std::abs(r.value - closed) <= 1e-3 * std::abs(r.value) + r.truncation_bound);
    }
}

TEST_CASE("closed form equals the Matsubara sum on 200 log-spaced points") {
    const auto ys = make_grid(0.01, 30.0, 200, Spacing::log);
    for (double y : ys) {
        const double brute = brute_matsubara_G(y, 1e-14).value;
        const double closed = correction_factor(y, Convention::literal).value;
        CHECK(std::abs(brute - closed) <= 1e-10 * std::abs(closed) + 1e-14);
    }
}
