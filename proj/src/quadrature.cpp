#include "thermgrav/quadrature.hpp"

#include "thermgrav/errors.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <vector>

namespace thermgrav {

namespace {

// Kronrod 15-point abscissae on [-1, 1] (positive half, descending) and
// weights; odd indices are the embedded 7-point Gauss nodes.
constexpr std::array<double, 8> kronrod_nodes = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000,
};
constexpr std::array<double, 8> kronrod_weights = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714,
};
constexpr std::array<double, 4> gauss_weights = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327,
};

constexpr double eps = std::numeric_limits<double>::epsilon();

struct Panel {
    double a;
    double b;
    double value;
    double error;
    double abs_value;  // estimate of int |f| over the panel

    bool operator<(const Panel& other) const { return error < other.error; }
};

template <typename F>
Panel gk15(F&& f, double a, double b) {
    const double centre = 0.5 * (a + b);
    const double half = 0.5 * (b - a);
    const double fc = f(centre);
    double kronrod = fc * kronrod_weights[7];
    double gauss = fc * gauss_weights[3];
    double abs_sum = std::abs(fc) * kronrod_weights[7];
    for (std::size_t j = 0; j < 7; ++j) {
        const double dx = half * kronrod_nodes[j];
        const double f1 = f(centre - dx);
        const double f2 = f(centre + dx);
        kronrod += kronrod_weights[j] * (f1 + f2);
        abs_sum += kronrod_weights[j] * (std::abs(f1) + std::abs(f2));
        if (j % 2 == 1) gauss += gauss_weights[j / 2] * (f1 + f2);
    }
    return {a, b, kronrod * half, std::abs((kronrod - gauss) * half), abs_sum * std::abs(half)};
}

constexpr std::size_t evals_per_panel = 15;

/// Global adaptive integration over a growing set of panels, kept as a
/// max-heap on the error estimate.
class AdaptiveIntegrator {
public:
    AdaptiveIntegrator(const ExponentialPolynomialKernel& kernel, std::size_t budget)
        : kernel_(kernel), budget_(budget) {}

    void add_interval(double a, double b) { push(panel(a, b)); }

    /// Refines until the summed error is below rel_tol * |value| or the
    /// worst panel is already at its rounding floor.
    void refine(double rel_tol) {
        while (!heap_.empty()) {
            if (error() <= rel_tol * std::abs(value())) return;
            const Panel worst = heap_.front();
            if (worst.error <= 50.0 * eps * worst.abs_value) return;
            if (evaluations_ + 2 * evals_per_panel > budget_) {
                throw ConvergenceError(
                    fmt::format("quadrature did not converge within {} evaluations", budget_), value());
            }
            std::pop_heap(heap_.begin(), heap_.end());
            heap_.pop_back();
            const double mid = 0.5 * (worst.a + worst.b);
            push(panel(worst.a, mid));
            push(panel(mid, worst.b));
        }
    }

    double value() const { return ordered_sum(&Panel::value); }
    double error() const { return ordered_sum(&Panel::error); }
    std::size_t evaluations() const { return evaluations_; }

private:
    double integrand(double t) const { return std::exp(-2.0 * t) * kernel_.eval(t); }

    Panel panel(double a, double b) const {
        return gk15([this](double t) { return integrand(t); }, a, b);
    }

    void push(const Panel& p) {
        evaluations_ += evals_per_panel;
        heap_.push_back(p);
        std::push_heap(heap_.begin(), heap_.end());
    }

    // Summed in ascending magnitude so the result does not depend on heap order.
    double ordered_sum(double Panel::*field) const {
        std::vector<double> parts;
        parts.reserve(heap_.size());
        for (const auto& p : heap_) parts.push_back(p.*field);
        std::sort(parts.begin(), parts.end(), [](double x, double y) { return std::abs(x) < std::abs(y); });
        double s = 0.0;
        for (double v : parts) s += v;
        return s;
    }

    const ExponentialPolynomialKernel& kernel_;
    std::size_t budget_;
    std::size_t evaluations_ = 0;
    std::vector<Panel> heap_;
};

void check_rel_tol(double rel_tol) {
    if (!(rel_tol >= 1e-14 && rel_tol <= 1e-2)) {
        throw DomainError("quadrature rel_tol must lie in [1e-14, 1e-2]");
    }
}

}  // namespace

Rational exp_moment(int n) {
    if (n < 0) throw DomainError("exp_moment requires n >= 0");
    if (n > 20) throw std::out_of_range("exp_moment: n > 20 overflows the exact representation");
    Rational m(1, 2);
    for (int k = 1; k <= n; ++k) m *= Rational(k, 2);
    return m;
}

Rational integrate_kernel_exact(const ExponentialPolynomialKernel& kernel) {
    Rational sum(0);
    for (int k = 0; k <= kernel.degree(); ++k) {
        if (kernel.coeff(k) != Rational(0)) sum += kernel.coeff(k) * exp_moment(k);
    }
    return sum;
}

double exp_tail_bound(const ExponentialPolynomialKernel& kernel, double t_cut) {
    if (!(t_cut >= kernel.degree()) || t_cut <= 0.0) {
        throw DomainError("exp_tail_bound requires t_cut >= max(degree, 0+)");
    }
    const double damp = std::exp(-2.0 * t_cut);
    double bound = 0.0;
    for (int k = 0; k <= kernel.degree(); ++k) {
        const double c = std::abs(to_double(kernel.coeff(k)));
        bound += c * std::pow(t_cut, k) * (1.0 + k / t_cut);
    }
    return damp * bound;
}

QuadratureResult integrate_kernel_on(const ExponentialPolynomialKernel& kernel, double t_cut, double rel_tol,
                                     const QuadratureOptions& options) {
    check_rel_tol(rel_tol);
    if (!(t_cut > 0.0) || !std::isfinite(t_cut)) throw DomainError("integration limit must be positive");
    AdaptiveIntegrator integ(kernel, options.max_evaluations);
    integ.add_interval(0.0, t_cut);
    integ.refine(0.5 * rel_tol);
    return {integ.value(), integ.error(), integ.evaluations(), t_cut};
}

QuadratureResult integrate_kernel_numeric(const ExponentialPolynomialKernel& kernel, double rel_tol,
                                          const QuadratureOptions& options) {
    check_rel_tol(rel_tol);
    AdaptiveIntegrator integ(kernel, options.max_evaluations);

    double t_cut = std::max(8.0, 2.0 * kernel.degree());
    integ.add_interval(0.0, t_cut);
    for (;;) {
        integ.refine(0.5 * rel_tol);
        const double tail = exp_tail_bound(kernel, t_cut);
        if (tail <= 0.1 * rel_tol * std::abs(integ.value())) {
            return {integ.value(), integ.error() + tail, integ.evaluations(), t_cut};
        }
        if (integ.evaluations() + evals_per_panel > options.max_evaluations) {
            throw ConvergenceError("quadrature tail did not shrink within the evaluation budget", integ.value());
        }
        const double next = 1.5 * t_cut;
        integ.add_interval(t_cut, next);
        t_cut = next;
    }
}

}  // namespace thermgrav
