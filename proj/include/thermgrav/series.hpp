#pragma once

#include "thermgrav/constants.hpp"
#include "thermgrav/kernels.hpp"

#include <cstddef>
#include <vector>

namespace thermgrav {

/// A truncated series with a bound on the neglected tail.
struct SeriesResult {
    double value = 0.0;
    std::size_t terms_used = 0;
    double truncation_bound = 0.0;
};

struct SeriesOptions {
    std::size_t max_terms = 10'000'000;
};

/// Coefficients of the Eulerian numerator A_k, ascending powers, so that
/// sum_{n>=0} n^k x^n = x A_k(x) / (1-x)^(k+1) for k >= 1.
/// A_0 is returned as {1} (the k = 0 sum is 1/(1-x) and takes no x prefactor).
std::vector<long long> eulerian_numerator(int k);

/// Closed form of sum_{n>=0} n^k x^n for 0 <= k <= 5 and 0 <= x < 1.
double eulerian_sum(int k, double x);

/// Direct compensated summation of sum_{n>=0} n^k x^n, stopped once past
/// the peak term with both the current term and the geometric tail bound
/// below rel_tol * |partial|.
SeriesResult brute_eulerian_sum(int k, double x, double rel_tol, const SeriesOptions& options = {});

/// omega_n = 2 pi n k_B T / hbar, the n-th bosonic Matsubara frequency (rad/s).
double matsubara_frequency(long long n, double temperature, const PhysicalConstants& consts = {});

/// Term n of the thermal sum at reduced spacing y: w_n exp(-2ny) K(ny),
/// with w_0 = 1/2 and w_n = 1 otherwise.
double matsubara_summand(const ExponentialPolynomialKernel& kernel, long long n, double y);

/// sum_{n>=0} w_n exp(-2ny) K(ny) by direct compensated summation.
///
/// The summand rises before it falls, so stopping requires n y beyond
/// `min_reduced_frequency` (default 6, past the last extremum of the force
/// kernel's summand) and at least ceil(3/y) + 5 terms, in addition to the
/// term and tail tests. The tail uses the absolute-coefficient majorant of K
/// with ratio exp(-2y) (1 + 1/n)^degree.
SeriesResult matsubara_sum(const ExponentialPolynomialKernel& kernel, double y, double rel_tol,
                           double min_reduced_frequency = 6.0, const SeriesOptions& options = {});

/// Literal-sign correction factor by brute force:
/// (4/5)^2 y sum_{n>=1} exp(-2ny) Q(ny), with Q the force kernel. Negative valued.
SeriesResult brute_matsubara_G(double y, double rel_tol, const SeriesOptions& options = {});

}  // namespace thermgrav
