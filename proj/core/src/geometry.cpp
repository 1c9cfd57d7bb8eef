#include "xtransform/geometry.hpp"

#include <cmath>

#include "xtransform/errors.hpp"

namespace xtransform::geo {

double dot(std::span<const double> a, std::span<const double> b) {
    double acc = 0.0;
    for (size_t i = 0; i < a.size(); ++i) acc += a[i] * b[i];
    return acc;
}

double norm_sq(std::span<const double> a) { return dot(a, a); }

double norm(std::span<const double> a) { return std::sqrt(norm_sq(a)); }

double dist(std::span<const double> a, std::span<const double> b) {
    double acc = 0.0;
    for (size_t i = 0; i < a.size(); ++i) {
        const double d = a[i] - b[i];
        acc += d * d;
    }
    return std::sqrt(acc);
}

Point sub(std::span<const double> a, std::span<const double> b) {
    Point out(a.size());
    for (size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
    return out;
}

Point add(std::span<const double> a, std::span<const double> b) {
    Point out(a.size());
    for (size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
    return out;
}

Point scaled(std::span<const double> a, double s) {
    Point out(a.size());
    for (size_t i = 0; i < a.size(); ++i) out[i] = a[i] * s;
    return out;
}

ReflectionToAxis::ReflectionToAxis(std::span<const double> direction) {
    const double len = norm(direction);
    if (len == 0.0) throw DomainError("cannot orient a zero direction onto the axis");
    std::vector<double> u(direction.begin(), direction.end());
    for (double& c : u) c /= len;
    u[0] -= 1.0; // v = u - e1
    const double vlen = norm(u);
    if (vlen < 1e-14) return; // already aligned with e1
    for (double& c : u) c /= vlen;
    v_ = std::move(u);
    identity_ = false;
}

Point ReflectionToAxis::apply(std::span<const double> x) const {
    Point out(x.begin(), x.end());
    if (identity_) return out;
    const double proj = 2.0 * dot(x, v_);
    for (size_t i = 0; i < out.size(); ++i) out[i] -= proj * v_[i];
    return out;
}

Point sample_direction(std::mt19937_64& rng, int dim) {
    std::normal_distribution<double> gauss(0.0, 1.0);
    Point dir(dim);
    double len = 0.0;
    do {
        for (int i = 0; i < dim; ++i) dir[i] = gauss(rng);
        len = norm(dir);
    } while (len < 1e-12);
    for (double& c : dir) c /= len;
    return dir;
}

} // namespace xtransform::geo
