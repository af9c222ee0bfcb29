#pragma once

#include "thermgrav/kernels.hpp"

#include <cstddef>

namespace thermgrav {

/// Value of a dimensionless integral int_0^inf exp(-2t) K(t) dt.
///
/// The exact path reports evaluations = 0 and abs_error_estimate = 0.
/// The numeric path reports the quadrature error estimate plus the
/// analytic tail bound beyond `t_cut`.
struct QuadratureResult {
    double value = 0.0;
    double abs_error_estimate = 0.0;
    std::size_t evaluations = 0;
    double t_cut = 0.0;
};

struct QuadratureOptions {
    std::size_t max_evaluations = 1'000'000;
};

/// n! / 2^(n+1) = int_0^inf exp(-2t) t^n dt, exactly. Throws std::out_of_range for n > 20.
Rational exp_moment(int n);

/// sum_k c_k k!/2^(k+1), exactly.
Rational integrate_kernel_exact(const ExponentialPolynomialKernel& kernel);

/// Upper bound on int_T^inf exp(-2t) |K|(t) dt, where |K| has the absolute
/// coefficients of K. Valid for T >= degree(K); uses
/// int_T^inf exp(-2t) t^n dt <= exp(-2T) T^n (1 + n/T).
double exp_tail_bound(const ExponentialPolynomialKernel& kernel, double t_cut);

/// Adaptive Gauss-Kronrod (7/15) integration of exp(-2t) K(t) on [0, inf).
///
/// The interval is truncated at the first t_cut whose tail bound is at most
/// rel_tol * |partial| / 10. Requires 1e-14 <= rel_tol <= 1e-2. Throws
/// ConvergenceError (carrying the best estimate) when the evaluation budget
/// runs out.
QuadratureResult integrate_kernel_numeric(const ExponentialPolynomialKernel& kernel, double rel_tol,
                                          const QuadratureOptions& options = {});

/// Same adaptive scheme on the fixed finite interval [0, t_cut]; no tail term.
QuadratureResult integrate_kernel_on(const ExponentialPolynomialKernel& kernel, double t_cut, double rel_tol,
                                     const QuadratureOptions& options = {});

}  // namespace thermgrav
