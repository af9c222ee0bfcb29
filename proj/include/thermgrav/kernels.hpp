#pragma once

#include <boost/rational.hpp>

#include <cstdint>
#include <initializer_list>
#include <vector>

namespace thermgrav {

using Rational = boost::rational<std::int64_t>;

/// Polynomial P(u) = sum_k c_k u^k that multiplies exp(-2u) in the
/// potential and force integrands, with u = omega r / c.
///
/// Coefficients are exact rationals; conversion to double happens only in
/// `eval`. Trailing zero coefficients are trimmed, and the zero polynomial is
/// stored as the single coefficient 0.
class ExponentialPolynomialKernel {
public:
    static constexpr int max_degree = 8;

    ExponentialPolynomialKernel() : coeffs_{Rational(0)} {}
    explicit ExponentialPolynomialKernel(std::vector<Rational> coeffs);
    ExponentialPolynomialKernel(std::initializer_list<Rational> coeffs)
        : ExponentialPolynomialKernel(std::vector<Rational>(coeffs)) {}

    const std::vector<Rational>& coeffs() const noexcept { return coeffs_; }
    int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
    Rational coeff(int k) const;

    /// Horner evaluation in double precision. Throws DomainError on non-finite u.
    double eval(double u) const;
    /// Exact evaluation at a rational point.
    Rational eval_exact(Rational u) const;

    friend bool operator==(const ExponentialPolynomialKernel&, const ExponentialPolynomialKernel&) = default;

private:
    std::vector<Rational> coeffs_;
};

/// Bracket of the zero-temperature potential integrand: 3 - 6u + 17/2 u^2 - 9/2 u^3 + 3/2 u^4.
ExponentialPolynomialKernel potential_kernel();

/// Bracket of the zero-temperature force integrand: -12u + 29u^2 - 61/2 u^3 + 15u^4 - 3u^5.
ExponentialPolynomialKernel force_kernel();

/// Q(u) = u (P'(u) - 2 P(u)).
///
/// For an integrand exp(-2u) P(u) with u proportional to r, r d/dr of the
/// integrand is exp(-2u) Q(u). Requires degree(P) <= 7 so that Q stays
/// within the degree cap.
ExponentialPolynomialKernel derive_force_kernel(const ExponentialPolynomialKernel& potential);

inline double eval_kernel(const ExponentialPolynomialKernel& k, double u) { return k.eval(u); }

double to_double(Rational q);

}  // namespace thermgrav
