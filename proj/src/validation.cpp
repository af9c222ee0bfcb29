#include "thermgrav/validation.hpp"

#include "thermgrav/correction.hpp"
#include "thermgrav/kernels.hpp"
#include "thermgrav/physics.hpp"
#include "thermgrav/quadrature.hpp"
#include "thermgrav/series.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <exception>
#include <functional>
#include <random>

namespace thermgrav {

namespace {

CheckResult make_check(std::string name, double measured, double tolerance, std::string detail = {}) {
    return {std::move(name), measured, tolerance, measured <= tolerance, std::move(detail)};
}

double rel_err(double value, double expected) {
    return std::abs(value - expected) / std::max(std::abs(expected), 1e-300);
}

// Rounds v to `bits` significant bits so that products of a few such values
// and small integers are exact in double precision.
double snap(double v, int bits) {
    int e = 0;
    const double m = std::frexp(v, &e);
    return std::ldexp(std::round(std::ldexp(m, bits)), e - bits);
}

CheckResult newton_limit(const std::string& label, const ExponentialPolynomialKernel& kernel, int expected_sign) {
    const Rational exact = Rational(16, 25) * integrate_kernel_exact(kernel);
    const QuadratureResult num = integrate_kernel_numeric(kernel, 1e-12);
    const double numeric = (16.0 / 25.0) * num.value;
    const bool exact_ok = exact == Rational(expected_sign);
    const double err = rel_err(numeric, expected_sign);
    return make_check(label, exact_ok ? err : std::numeric_limits<double>::infinity(), 1e-10,
                      fmt::format("exact={}/{} numeric={:.15g}", exact.numerator(), exact.denominator(), numeric));
}

std::vector<double> log_grid(double lo, double hi, std::size_t n) { return make_grid(lo, hi, n, Spacing::log); }

}  // namespace

std::vector<CheckResult> run_validation(const PhysicalConstants& consts, const ValidationOptions& options) {
    std::vector<CheckResult> out;
    const std::size_t thin = options.quick ? 10 : 1;
    std::mt19937_64 rng(options.seed);

    // Guard each check so one throwing check reports as a failure instead of aborting the run.
    const auto run = [&out](const std::string& name, const std::function<CheckResult()>& check) {
        try {
            out.push_back(check());
        } catch (const std::exception& ex) {
            out.push_back({name, std::numeric_limits<double>::infinity(), 0.0, false, ex.what()});
        }
    };

    run("newton_potential", [] { return newton_limit("newton_potential", potential_kernel(), 1); });
    run("newton_force", [] { return newton_limit("newton_force", force_kernel(), -1); });

    run("force_sign", [&consts] {
        const double f = force_zero_T(ParticlePair(1.0, 1.0), 1.0, consts);
        return make_check("force_sign", f < 0.0 ? 0.0 : 1.0, 0.0, fmt::format("F(1 kg, 1 kg, 1 m) = {:.6g} N", f));
    });

    run("kernel_derivation", [] {
        const bool same = derive_force_kernel(potential_kernel()) == force_kernel();
        return make_check("kernel_derivation", same ? 0.0 : 1.0, 0.0, "u(P' - 2P) of potential bracket");
    });

    run("moment_recurrence", [] {
        int bad = 0;
        for (int n = 1; n <= 20; ++n) {
            if (exp_moment(n) != Rational(n, 2) * exp_moment(n - 1)) ++bad;
        }
        return make_check("moment_recurrence", bad, 0.0, "n = 1..20");
    });

    run("quadrature_random_kernels", [&rng, thin] {
        std::uniform_int_distribution<int> coeff(-100, 100);
        std::uniform_int_distribution<int> degree(0, 8);
        double worst = 0.0;
        const int samples = static_cast<int>(50 / thin);
        for (int s = 0; s < samples; ++s) {
            std::vector<Rational> c(static_cast<std::size_t>(degree(rng)) + 1);
            for (auto& v : c) v = Rational(coeff(rng), 2);
            const ExponentialPolynomialKernel k(c);
            const double exact = to_double(integrate_kernel_exact(k));
            const QuadratureResult q = integrate_kernel_numeric(k, 1e-10);
            const double excess = std::abs(q.value - exact) - q.abs_error_estimate;
            worst = std::max(worst, std::max(excess, 0.0) / std::max(std::abs(exact), 1e-300));
        }
        return make_check("quadrature_random_kernels", worst, 1e-10, fmt::format("{} kernels", samples));
    });

    run("eulerian_numerators", [] {
        int bad = 0;
        for (int k = 1; k <= 5; ++k) {
            const auto a = eulerian_numerator(k);
            for (std::size_t i = 0; i < 5; ++i) {
                const long long printed = closed_form_numerators[static_cast<std::size_t>(k - 1)][i];
                const long long derived = i < a.size() ? a[i] : 0;
                if (printed != derived) ++bad;
            }
        }
        return make_check("eulerian_numerators", bad, 0.0, "A_1..A_5");
    });

    run("eulerian_sum_vs_brute", [] {
        double worst = 0.0;
        for (int k = 0; k <= 5; ++k) {
            for (double x : {0.01, 0.1, 0.3, 0.5, 0.7, 0.9, 0.99}) {
                const SeriesResult b = brute_eulerian_sum(k, x, 1e-13);
                worst = std::max(worst, rel_err(eulerian_sum(k, x), b.value));
            }
        }
        return make_check("eulerian_sum_vs_brute", worst, 1e-10, "k = 0..5, 7 x values");
    });

    run("eulerian_spot_1082", [] {
        const SeriesResult b = brute_eulerian_sum(5, 0.5, 1e-14);
        const double err = std::max(std::abs(b.value - 1082.0), std::abs(eulerian_sum(5, 0.5) - 1082.0));
        return make_check("eulerian_spot_1082", err, 1e-9, "sum n^5 / 2^n");
    });

    run("closed_form_vs_matsubara", [thin] {
        double worst = 0.0;
        double worst_y = 0.0;
        const auto ys = log_grid(0.01, 30.0, 200 / thin);
        for (double y : ys) {
            const double closed = correction_factor(y, Convention::literal).value;
            const double brute = brute_matsubara_G(y, 1e-14).value;
            const double err = std::abs(brute - closed) / (1e-10 * std::abs(closed) + 1e-14);
            if (err > worst) {
                worst = err;
                worst_y = y;
            }
        }
        // Measured in units of the allowance 1e-10 |G| + 1e-14.
        return make_check("closed_form_vs_matsubara", worst, 1.0,
                          fmt::format("{} log-spaced y in [0.01, 30], worst at y = {:.6g}", ys.size(), worst_y));
    });

    run("small_y_guard", [] {
        double worst = 0.0;
        for (double y : {1e-4, 1e-3}) {
            const double closed = correction_factor(y, Convention::literal).value;
            SeriesOptions big;
            big.max_terms = 100'000'000;
            const double brute = brute_matsubara_G(y, 1e-13, big).value;
            worst = std::max(worst, rel_err(closed, brute));
        }
        return make_check("small_y_guard", worst, 1e-9, "y in {1e-4, 1e-3}");
    });

    run("limit_small_y", [] {
        const double ratio = correction_factor(1e-6, Convention::ratio).value;
        const double literal = correction_factor(1e-6, Convention::literal).value;
        return make_check("limit_small_y", std::max(std::abs(ratio - 1.0), std::abs(literal + 1.0)), 1e-6,
                          "G(1e-6) -> 1 (ratio), -1 (literal)");
    });

    run("limit_large_y", [] {
        const double g = correction_factor(30.0, Convention::ratio).value;
        const double gl = correction_factor(30.0, Convention::literal).value;
        const bool signs = g >= 0.0 && gl <= 0.0;
        return make_check("limit_large_y", signs ? std::max(g, -gl) : 1.0, 1e-15, "G(30)");
    });

    run("underflow_flag", [] {
        int bad = 0;
        for (double y : {350.0, 400.0, 1e6}) {
            for (Convention c : {Convention::ratio, Convention::literal}) {
                const CorrectionResult r = correction_factor(y, c);
                if (!r.underflowed || r.value != 0.0) ++bad;
            }
        }
        if (correction_factor(349.0).underflowed) ++bad;
        return make_check("underflow_flag", bad, 0.0, "y >= 350");
    });

    run("scaling_invariance_bitwise", [&rng, &consts] {
        std::uniform_real_distribution<double> unit(0.0, 1.0);
        int mismatches = 0;
        for (int i = 0; i < 50; ++i) {
            const double y_target = 0.01 * std::pow(3000.0, unit(rng));
            const double raw_temperature = std::pow(10.0, -3.0 + 4.0 * unit(rng));
            const double temperature = 1000.0 * snap(raw_temperature / 1000.0, 16);
            const double r = snap(y_target * thermal_length(temperature, consts), 20);
            const double g = correction_factor(reduced_y(r, temperature, consts)).value;
            for (double kappa : {2.0, 10.0, 1000.0}) {
                const double gs = correction_factor(reduced_y(kappa * r, temperature / kappa, consts)).value;
                if (std::bit_cast<std::uint64_t>(g) != std::bit_cast<std::uint64_t>(gs)) ++mismatches;
            }
        }
        return make_check("scaling_invariance_bitwise", mismatches, 0.0, "50 pairs x kappa in {2, 10, 1000}");
    });

    run("range_scaling", [&consts] {
        const RangeSolution base = gravity_range(2.7, 0.5, consts);
        double worst = 0.0;
        for (double kappa : {2.0, 10.0, 1000.0}) {
            const RangeSolution s = gravity_range(2.7 / kappa, 0.5, consts);
            worst = std::max(worst, rel_err(s.r_star, kappa * base.r_star));
        }
        return make_check("range_scaling", worst, 1e-10, "r_star(T/kappa) = kappa r_star(T)");
    });

    run("range_threshold_half", [&consts] {
        const RangeSolution s = gravity_range(2.7, 0.5, consts);
        const double err = std::abs(s.y_star - 4.84070610257545);
        const bool unique = s.crossings_found == 1;
        return make_check("range_threshold_half", unique ? err : 1.0, 1e-6,
                          fmt::format("y* = {:.12g}, r* = {:.6g} m, crossings = {}", s.y_star, s.r_star,
                                      s.crossings_found));
    });

    run("figure_shape", [] {
        const auto table = correction_table(0.01, 30.0, 300, Spacing::log);
        double err = std::abs(table.front().g - 1.0) <= 1e-3 ? 0.0 : 1.0;
        if (!(table.back().g < 1e-15)) err = 1.0;

        // Interior extrema on a fine linear grid.
        const auto fine = correction_table(1.0, 6.0, 501, Spacing::linear);
        double min_y = 0, min_g = 2, max_y = 0, max_g = -1;
        for (std::size_t i = 1; i + 1 < fine.size(); ++i) {
            const double prev = fine[i - 1].g, cur = fine[i].g, next = fine[i + 1].g;
            if (cur < prev && cur < next) {
                min_y = fine[i].y;
                min_g = cur;
            }
            if (cur > prev && cur > next) {
                max_y = fine[i].y;
                max_g = cur;
            }
        }
        if (std::abs(min_g - 0.588030) > 1e-4 || std::abs(min_y - 2.2864) > 0.02) err = 1.0;
        if (std::abs(max_g - 0.697984) > 1e-4 || std::abs(max_y - 3.6098) > 0.02) err = 1.0;
        return make_check("figure_shape", err, 0.0,
                          fmt::format("min {:.6g} at y = {:.4g}, max {:.6g} at y = {:.4g}", min_g, min_y, max_g,
                                      max_y));
    });

    run("zero_T_identities", [&consts] {
        const ParticlePair pair(3.0, 5.0);
        const double gm = consts.gamma_grav * 15.0;
        double worst = 0.0;
        for (double r : log_grid(1e-3, 1e20, 47)) {
            worst = std::max(worst, std::abs(potential_zero_T(pair, r, consts) * r / -gm - 1.0));
            worst = std::max(worst, std::abs(force_zero_T(pair, r, consts) * r * r / -gm - 1.0));
        }
        return make_check("zero_T_identities", worst, 1e-12, "r in [1e-3, 1e20] m");
    });

    return out;
}

bool report_validation(const std::vector<CheckResult>& results, std::ostream& out) {
    bool all = true;
    for (const auto& r : results) {
        all = all && r.passed;
        out << fmt::format("{} {:<28} measured={:<12.4g} tol={:<10.3g} {}\n", r.passed ? "PASS" : "FAIL", r.name,
                           r.measured, r.tolerance, r.detail);
    }
    out << fmt::format("{} of {} checks passed\n",
                       std::count_if(results.begin(), results.end(), [](const auto& r) { return r.passed; }),
                       results.size());
    return all;
}

}  // namespace thermgrav
