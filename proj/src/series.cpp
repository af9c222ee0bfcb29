#include "thermgrav/series.hpp"

#include "thermgrav/compensated.hpp"
#include "thermgrav/errors.hpp"

#include <fmt/format.h>

#include <cmath>
#include <limits>
#include <numbers>

namespace thermgrav {

namespace {

void check_series_x(double x) {
    if (!(x >= 0.0 && x < 1.0)) throw DomainError(fmt::format("series argument x = {} outside [0, 1)", x));
}

void check_k(int k) {
    if (k < 0 || k > 5) throw DomainError(fmt::format("power k = {} outside 0..5", k));
}

void check_rel_tol(double rel_tol) {
    if (!(rel_tol >= 1e-15 && rel_tol < 1.0)) throw DomainError("series rel_tol must lie in [1e-15, 1)");
}

// Geometric tail after a term of size `term` whose successors shrink by at
// most `ratio` each step. Infinite when ratio >= 1.
double geometric_tail(double term, double ratio) {
    if (ratio >= 1.0) return std::numeric_limits<double>::infinity();
    return term * ratio / (1.0 - ratio);
}

double abs_majorant(const ExponentialPolynomialKernel& kernel, double u) {
    double acc = 0.0;
    const auto& c = kernel.coeffs();
    for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * u + std::abs(to_double(*it));
    return acc;
}

}  // namespace

std::vector<long long> eulerian_numerator(int k) {
    if (k < 0 || k > 20) throw DomainError("eulerian_numerator: k outside 0..20");
    // A(k, m) = (m + 1) A(k-1, m) + (k - m) A(k-1, m-1), starting from A_1 = {1}.
    std::vector<long long> row{1};
    for (int order = 2; order <= k; ++order) {
        std::vector<long long> next(static_cast<std::size_t>(order), 0);
        for (int m = 0; m < order; ++m) {
            long long v = 0;
            if (m < order - 1) v += (m + 1) * row[static_cast<std::size_t>(m)];
            if (m > 0) v += (order - m) * row[static_cast<std::size_t>(m - 1)];
            next[static_cast<std::size_t>(m)] = v;
        }
        row = std::move(next);
    }
    return row;
}

double eulerian_sum(int k, double x) {
    check_k(k);
    check_series_x(x);
    const double one_minus_x = 1.0 - x;
    if (k == 0) return 1.0 / one_minus_x;
    const auto a = eulerian_numerator(k);
    double poly = 0.0;
    for (auto it = a.rbegin(); it != a.rend(); ++it) poly = poly * x + static_cast<double>(*it);
    return x * poly / std::pow(one_minus_x, k + 1);
}

SeriesResult brute_eulerian_sum(int k, double x, double rel_tol, const SeriesOptions& options) {
    check_k(k);
    check_series_x(x);
    check_rel_tol(rel_tol);
    if (x == 0.0) return {k == 0 ? 1.0 : 0.0, 1, 0.0};

    // Terms n^k x^n increase up to n ~ k / (-ln x).
    const double peak = k / -std::log(x);
    CompensatedSum sum;
    for (std::size_t n = 0; n < options.max_terms; ++n) {
        const double nd = static_cast<double>(n);
        const double term = std::pow(nd, k) * std::pow(x, nd);
        sum += term;
        if (n == 0 || nd <= peak) continue;
        const double partial = std::abs(sum.value());
        if (term > rel_tol * partial) continue;
        const double tail = geometric_tail(term, x * std::pow(1.0 + 1.0 / nd, k));
        if (tail <= 0.1 * rel_tol * partial) return {sum.value(), n + 1, tail};
    }
    throw ConvergenceError(fmt::format("eulerian sum (k = {}, x = {}) exceeded {} terms", k, x, options.max_terms),
                           sum.value());
}

double matsubara_frequency(long long n, double temperature, const PhysicalConstants& consts) {
    if (n < 0) throw DomainError("Matsubara index must be nonnegative");
    if (!(temperature >= 0.0)) throw DomainError("temperature must be nonnegative");
    return 2.0 * std::numbers::pi * static_cast<double>(n) * consts.k_boltzmann * temperature / consts.hbar;
}

double matsubara_summand(const ExponentialPolynomialKernel& kernel, long long n, double y) {
    if (n < 0) throw DomainError("Matsubara index must be nonnegative");
    const double u = static_cast<double>(n) * y;
    const double term = std::exp(-2.0 * u) * kernel.eval(u);
    // The zero-frequency term carries half weight.
    return n == 0 ? 0.5 * term : term;
}

SeriesResult matsubara_sum(const ExponentialPolynomialKernel& kernel, double y, double rel_tol,
                           double min_reduced_frequency, const SeriesOptions& options) {
    if (!(y > 0.0) || !std::isfinite(y)) throw DomainError(fmt::format("reduced variable y = {} must be positive", y));
    check_rel_tol(rel_tol);

    const int degree = kernel.degree();
    const double min_terms = std::ceil(3.0 / y) + 5.0;
    const double damping = std::exp(-2.0 * y);
    CompensatedSum sum;
    for (std::size_t n = 0; n < options.max_terms; ++n) {
        const double nd = static_cast<double>(n);
        const double term = matsubara_summand(kernel, static_cast<long long>(n), y);
        sum += term;
        const auto used = static_cast<double>(n + 1);
        if (n == 0 || used < min_terms || nd * y <= min_reduced_frequency) continue;
        const double partial = std::abs(sum.value());
        if (std::abs(term) > rel_tol * partial) continue;
        const double envelope = std::exp(-2.0 * nd * y) * abs_majorant(kernel, nd * y);
        const double tail = geometric_tail(envelope, damping * std::pow(1.0 + 1.0 / nd, degree));
        if (tail <= 0.1 * rel_tol * partial) return {sum.value(), n + 1, tail};
    }
    throw ConvergenceError(fmt::format("Matsubara sum at y = {} exceeded {} terms", y, options.max_terms),
                           sum.value());
}

SeriesResult brute_matsubara_G(double y, double rel_tol, const SeriesOptions& options) {
    const SeriesResult raw = matsubara_sum(force_kernel(), y, rel_tol, 6.0, options);
    const double scale = (16.0 / 25.0) * y;
    return {scale * raw.value, raw.terms_used, scale * raw.truncation_bound};
}

}  // namespace thermgrav
