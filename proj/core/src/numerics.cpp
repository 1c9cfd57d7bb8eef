#include "xtransform/numerics.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "xtransform/errors.hpp"

namespace xtransform::num {

namespace {

// 15-point Gauss-Legendre abscissas/weights on [-1, 1], positive half.
constexpr int kGaussHalf = 8;
constexpr double kGaussNode[kGaussHalf] = {
    0.00000000000000000e+00, 2.01194093997434514e-01, 3.94151347077563385e-01,
    5.70972172608538830e-01, 7.24417731360170070e-01, 8.48206583410427206e-01,
    9.37273392400705951e-01, 9.87992518020485377e-01};
constexpr double kGaussWeight[kGaussHalf] = {
    2.02578241925560898e-01, 1.98431485327111246e-01, 1.86161000015561878e-01,
    1.66269205816993781e-01, 1.39570677926153908e-01, 1.07159220467171773e-01,
    7.03660474881080689e-02, 3.07532419961186465e-02};

struct Segment {
    double a, b;
    double value;
    int depth;
};

} // namespace

double gauss15(const std::function<double(double)>& f, double a, double b) {
    const double mid = 0.5 * (a + b);
    const double half = 0.5 * (b - a);
    double acc = kGaussWeight[0] * f(mid);
    for (int i = 1; i < kGaussHalf; ++i) {
        const double dx = half * kGaussNode[i];
        acc += kGaussWeight[i] * (f(mid - dx) + f(mid + dx));
    }
    return acc * half;
}

QuadratureResult integrate(const std::function<double(double)>& f,
                           double a, double b, double abs_tol, int max_depth) {
    QuadratureResult out;
    if (a == b) return out;

    std::vector<Segment> stack;
    stack.push_back({a, b, gauss15(f, a, b), 0});
    out.evaluations = 15;

    CompensatedSum total;
    double err_total = 0.0;
    while (!stack.empty()) {
        Segment s = stack.back();
        stack.pop_back();
        const double mid = 0.5 * (s.a + s.b);
        const double left = gauss15(f, s.a, mid);
        const double right = gauss15(f, mid, s.b);
        out.evaluations += 30;
        const double refined = left + right;
        const double err = std::abs(refined - s.value);
        // local tolerance proportional to the interval share
        const double local_tol =
            abs_tol * std::max(std::abs(s.b - s.a) / std::abs(b - a), 1e-3);
        if (err <= local_tol || err <= 1e-3 * abs_tol) {
            total.add(refined);
            err_total += err;
        } else if (s.depth >= max_depth) {
            std::ostringstream msg;
            msg << "quadrature did not converge on subinterval [" << s.a << ", "
                << s.b << "]: error estimate " << err << " exceeds tolerance "
                << local_tol;
            throw ConvergenceError(msg.str());
        } else {
            stack.push_back({s.a, mid, left, s.depth + 1});
            stack.push_back({mid, s.b, right, s.depth + 1});
        }
    }
    out.value = total.value();
    out.abs_error = err_total;
    return out;
}

RootResult newton_bracketed(const std::function<std::pair<double, double>(double)>& f,
                            double lo, double hi,
                            double x_tol, double f_tol, int max_iter) {
    auto [flo, dlo] = f(lo);
    (void)dlo;
    if (flo == 0.0) return {lo, 0.0, 0};
    auto [fhi, dhi] = f(hi);
    (void)dhi;
    if (fhi == 0.0) return {hi, 0.0, 0};
    if (flo > 0.0 || fhi < 0.0) {
        std::ostringstream msg;
        msg << "root is not bracketed by [" << lo << ", " << hi << "]: f(lo)="
            << flo << ", f(hi)=" << fhi;
        throw ConvergenceError(msg.str());
    }

    double x = 0.5 * (lo + hi);
    for (int it = 1; it <= max_iter; ++it) {
        auto [fx, dfx] = f(x);
        if (std::abs(fx) <= f_tol) return {x, fx, it};
        if (fx < 0.0)
            lo = x;
        else
            hi = x;
        double next = dfx != 0.0 ? x - fx / dfx : 0.5 * (lo + hi);
        if (!(next > lo && next < hi)) next = 0.5 * (lo + hi);
        if (std::abs(next - x) <= x_tol && std::abs(fx) <= 1e3 * f_tol)
            return {next, fx, it};
        x = next;
        if (hi - lo <= x_tol) return {0.5 * (lo + hi), fx, it};
    }
    std::ostringstream msg;
    msg << "bracketed Newton did not converge; final bracket [" << lo << ", "
        << hi << "]";
    throw ConvergenceError(msg.str());
}

double forward_difference(std::span<const double> samples) {
    const int k = static_cast<int>(samples.size()) - 1;
    double binom = 1.0; // C(k, 0)
    double acc = 0.0;
    for (int j = 0; j <= k; ++j) {
        const double sign = ((k - j) % 2 == 0) ? 1.0 : -1.0;
        acc += sign * binom * samples[j];
        binom = binom * static_cast<double>(k - j) / static_cast<double>(j + 1);
    }
    return acc;
}

std::vector<double> symmetric_eigenvalues(std::vector<double> a, int n) {
    if (n <= 0) return {};
    auto at = [&](int i, int j) -> double& { return a[static_cast<size_t>(i) * n + j]; };
    double norm = 0.0;
    for (double v : a) norm += v * v;
    norm = std::sqrt(norm);
    const double stop = std::max(norm, 1.0) * 1e-15;

    for (int sweep = 0; sweep < 64; ++sweep) {
        double off = 0.0;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) off += at(i, j) * at(i, j);
        if (std::sqrt(2.0 * off) <= stop) break;
        for (int p = 0; p < n - 1; ++p) {
            for (int q = p + 1; q < n; ++q) {
                if (at(p, q) == 0.0) continue;
                const double theta = (at(q, q) - at(p, p)) / (2.0 * at(p, q));
                const double t = (theta >= 0 ? 1.0 : -1.0) /
                                 (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                const double c = 1.0 / std::sqrt(t * t + 1.0);
                const double s = t * c;
                for (int k = 0; k < n; ++k) {
                    const double akp = at(k, p), akq = at(k, q);
                    at(k, p) = c * akp - s * akq;
                    at(k, q) = s * akp + c * akq;
                }
                for (int k = 0; k < n; ++k) {
                    const double apk = at(p, k), aqk = at(q, k);
                    at(p, k) = c * apk - s * aqk;
                    at(q, k) = s * apk + c * aqk;
                }
            }
        }
    }
    std::vector<double> eig(n);
    for (int i = 0; i < n; ++i) eig[i] = at(i, i);
    std::sort(eig.begin(), eig.end());
    return eig;
}

} // namespace xtransform::num
