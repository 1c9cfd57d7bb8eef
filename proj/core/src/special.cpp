#include "xtransform/special.hpp"

#include <cmath>
#include <sstream>

#include "xtransform/errors.hpp"

namespace xtransform::num {

double digamma(double z) {
    if (!(z > 0.0)) {
        std::ostringstream msg;
        msg << "digamma requires a positive argument, got " << z;
        throw DomainError(msg.str());
    }
    double acc = 0.0;
    while (z < 8.0) {
        acc -= 1.0 / z;
        z += 1.0;
    }
    // Psi(z) ~ ln z - 1/(2z) - sum B_{2n} / (2n z^{2n})
    const double inv = 1.0 / z;
    const double inv2 = inv * inv;
    double series = std::log(z) - 0.5 * inv;
    series -= inv2 * (1.0 / 12.0 +
                      inv2 * (-1.0 / 120.0 +
                              inv2 * (1.0 / 252.0 +
                                      inv2 * (-1.0 / 240.0 +
                                              inv2 * (1.0 / 132.0 +
                                                      inv2 * (-691.0 / 32760.0 +
                                                              inv2 * (1.0 / 12.0)))))));
    return acc + series;
}

double unit_sphere_area(int n) {
    if (n < 1) throw DomainError("unit_sphere_area requires dimension >= 1");
    const double half = 0.5 * static_cast<double>(n);
    return 2.0 * std::pow(M_PI, half) / std::tgamma(half);
}

double unit_ball_volume(int n) {
    return unit_sphere_area(n) / static_cast<double>(n);
}

} // namespace xtransform::num
