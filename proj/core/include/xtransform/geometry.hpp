#pragma once

#include <random>
#include <span>
#include <vector>

namespace xtransform {

/// A point of R^n. Dimensions in this project are small (2..5), so a plain
/// vector keeps the interfaces simple.
using Point = std::vector<double>;

namespace geo {

double dot(std::span<const double> a, std::span<const double> b);
double norm_sq(std::span<const double> a);
double norm(std::span<const double> a);
double dist(std::span<const double> a, std::span<const double> b);

Point sub(std::span<const double> a, std::span<const double> b);
Point add(std::span<const double> a, std::span<const double> b);
Point scaled(std::span<const double> a, double s);

/// The reflection H = I - 2 v v^T (v the unit bisector direction) that maps
/// `direction`/|direction| onto the first coordinate axis. Degenerates to
/// the identity when the direction already points along e1.
class ReflectionToAxis {
public:
    explicit ReflectionToAxis(std::span<const double> direction);
    Point apply(std::span<const double> x) const;
    bool is_identity() const { return identity_; }

private:
    bool identity_ = true;
    std::vector<double> v_;
};

/// Uniform direction on the unit sphere of R^dim.
Point sample_direction(std::mt19937_64& rng, int dim);

} // namespace geo
} // namespace xtransform
