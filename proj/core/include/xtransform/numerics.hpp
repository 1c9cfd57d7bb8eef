#pragma once

#include <cmath>
#include <functional>
#include <span>
#include <utility>
#include <vector>

namespace xtransform::num {

struct QuadratureResult {
    double value = 0.0;
    double abs_error = 0.0;
    long evaluations = 0;
};

/// Adaptive quadrature on [a, b]. Each interval is integrated with a
/// 15-point Gauss-Legendre rule; the error estimate of an interval is the
/// difference between the whole-interval rule and the two half-interval
/// rules, and intervals are bisected until the estimate drops below the
/// local share of `abs_tol`. Throws ConvergenceError naming the subinterval
/// if `max_depth` bisections do not suffice.
QuadratureResult integrate(const std::function<double(double)>& f,
                           double a, double b, double abs_tol,
                           int max_depth = 48);

/// Fixed 15-point Gauss-Legendre rule on [a, b].
double gauss15(const std::function<double(double)>& f, double a, double b);

struct RootResult {
    double x = 0.0;
    double f_value = 0.0;
    int iterations = 0;
};

/// Newton iteration safeguarded by a bracket [lo, hi] with f(lo) <= 0 <= f(hi)
/// (f increasing across the bracket). Falls back to bisection whenever a
/// Newton step leaves the bracket. `f` returns (value, derivative).
/// Throws ConvergenceError carrying the final bracket on failure.
RootResult newton_bracketed(const std::function<std::pair<double, double>(double)>& f,
                            double lo, double hi,
                            double x_tol, double f_tol, int max_iter = 200);

/// k-th forward difference from equally spaced samples f(x), f(x+h), ...,
/// f(x + k h): sum_{j} (-1)^{k-j} C(k,j) samples[j].
double forward_difference(std::span<const double> samples);

/// Eigenvalues of a dense symmetric matrix (row-major, size n*n) by cyclic
/// Jacobi rotations. Intended for the small Hankel matrices of this
/// project; O(n^3) per sweep.
std::vector<double> symmetric_eigenvalues(std::vector<double> a, int n);

/// Neumaier compensated accumulator; used where sums over many grid cells
/// must stay accurate and reproducible under a fixed summation order.
class CompensatedSum {
public:
    void add(double x) {
        double t = sum_ + x;
        if (std::abs(sum_) >= std::abs(x))
            comp_ += (sum_ - t) + x;
        else
            comp_ += (x - t) + sum_;
        sum_ = t;
    }
    double value() const { return sum_ + comp_; }

private:
    double sum_ = 0.0;
    double comp_ = 0.0;
};

} // namespace xtransform::num
