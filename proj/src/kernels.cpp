#include "thermgrav/kernels.hpp"

#include "thermgrav/errors.hpp"

#include <cmath>
#include <utility>

namespace thermgrav {

ExponentialPolynomialKernel::ExponentialPolynomialKernel(std::vector<Rational> coeffs)
    : coeffs_(std::move(coeffs)) {
    while (coeffs_.size() > 1 && coeffs_.back() == Rational(0)) coeffs_.pop_back();
    if (coeffs_.empty()) coeffs_.emplace_back(0);
    if (degree() > max_degree) {
        throw DomainError("kernel degree exceeds " + std::to_string(max_degree));
    }
}

Rational ExponentialPolynomialKernel::coeff(int k) const {
    if (k < 0 || k > degree()) return Rational(0);
    return coeffs_[static_cast<std::size_t>(k)];
}

double ExponentialPolynomialKernel::eval(double u) const {
    if (!std::isfinite(u)) throw DomainError("kernel evaluated at non-finite u");
    double acc = 0.0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        acc = acc * u + to_double(*it);
    }
    return acc;
}

Rational ExponentialPolynomialKernel::eval_exact(Rational u) const {
    Rational acc(0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        acc = acc * u + *it;
    }
    return acc;
}

double to_double(Rational q) {
    return static_cast<double>(q.numerator()) / static_cast<double>(q.denominator());
}

ExponentialPolynomialKernel potential_kernel() {
    return {Rational(3), Rational(-6), Rational(17, 2), Rational(-9, 2), Rational(3, 2)};
}

ExponentialPolynomialKernel force_kernel() {
    return {Rational(0), Rational(-12), Rational(29), Rational(-61, 2), Rational(15), Rational(-3)};
}

ExponentialPolynomialKernel derive_force_kernel(const ExponentialPolynomialKernel& potential) {
    const int d = potential.degree();
    if (d > ExponentialPolynomialKernel::max_degree - 1) {
        throw DomainError("derive_force_kernel requires degree <= 7");
    }
    // u (P' - 2P): coefficient of u^k is k c_k - 2 c_{k-1}.
    std::vector<Rational> q(static_cast<std::size_t>(d) + 2, Rational(0));
    for (int k = 1; k <= d + 1; ++k) {
        q[static_cast<std::size_t>(k)] = Rational(k) * potential.coeff(k) - Rational(2) * potential.coeff(k - 1);
    }
    return ExponentialPolynomialKernel(std::move(q));
}

}  // namespace thermgrav
