#include "xtransform/profile.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "xtransform/errors.hpp"
#include "xtransform/numerics.hpp"
#include "xtransform/special.hpp"

namespace xtransform {

namespace {

/// 1 - m^alpha, stable for m near 1.
double one_minus_pow(double m, double alpha) {
    if (m <= 0.0) return 1.0;
    return -std::expm1(alpha * std::log1p(m - 1.0));
}

/// Smooth part of the inverse integrand:
///   r(s) = 1/(1 - s^alpha) - 1/(alpha (1-s)),
/// continuous on [0,1] with r(1) = (alpha-1)/(2 alpha). The direct form
/// cancels catastrophically near s = 1, so a binomial tail expansion in
/// u = 1-s takes over there.
double smooth_integrand(double s, double alpha) {
    const double u = 1.0 - s;
    if (u > 0.25) {
        return 1.0 / one_minus_pow(s, alpha) - 1.0 / (alpha * u);
    }
    // r(1-u) = (sum_k p_k u^{k-1}) / (alpha (1 - P)), P = sum_k p_k u^k,
    // p_1 = alpha(alpha-1)/2!, p_{k+1} = -p_k (alpha-k-1)/(k+2).
    double p = 0.5 * alpha * (alpha - 1.0);
    double pw = 1.0; // u^{k-1}
    double head = 0.0, big_p = 0.0;
    for (int k = 1; k <= 64; ++k) {
        const double term = p * pw;
        head += term;
        big_p += term * u;
        if (std::abs(term) < 1e-18 * (std::abs(head) + 1e-300)) break;
        p *= -(alpha - static_cast<double>(k + 1)) / static_cast<double>(k + 2);
        pw *= u;
    }
    return head / (alpha * (1.0 - big_p));
}

} // namespace

double gamma_alpha(double alpha, GammaRoute route) {
    if (alpha < 0.0) throw DomainError("gamma_alpha requires alpha >= 0");
    if (alpha == 0.0) {
        // Limit of the defining formula: the integral equals the harmonic
        // number H_{1/alpha - 1} = Psi(1/alpha) + euler, and
        // Psi(1/alpha) - ln(1/alpha) -> 0, so gamma_alpha -> e^{-euler}.
        return std::exp(-num::euler_mascheroni);
    }
    if (route == GammaRoute::digamma) {
        const double inv = 1.0 / alpha;
        return std::exp(-num::digamma(inv) - num::euler_mascheroni + std::log(inv));
    }
    if (alpha > 1.0)
        throw DomainError("gamma_alpha quadrature route accepts alpha in [0, 1]");
    if (alpha == 1.0) return 1.0; // exponent vanishes, integrand is zero
    const double beta = (1.0 - alpha) / alpha;
    auto integrand = [beta](double x) {
        const double u = 1.0 - x;
        if (u < 1e-12) return beta; // endpoint limit, avoids 0/0
        return -std::expm1(beta * std::log1p(-u)) / u;
    };
    const auto q = num::integrate(integrand, 0.0, 1.0, 1e-12);
    return std::exp(-q.value) / alpha;
}

std::vector<double> sigma_coeffs(double alpha, int count) {
    if (count < 1) throw DomainError("sigma_coeffs requires count >= 1");
    std::vector<double> sigma(static_cast<size_t>(count));
    sigma[0] = 1.0;
    for (int k = 2; k <= count; ++k) {
        double acc = 0.0;
        for (int v = 1; v < k; ++v) {
            acc += sigma[v - 1] * sigma[k - v - 1] *
                   ((1.0 + alpha) * v - alpha * k) * static_cast<double>(v);
        }
        sigma[k - 1] = acc / (static_cast<double>(k) * (k - 1.0));
    }
    return sigma;
}

double TaylorProfile::phi_series(double t, double tail_tol) const {
    if (!(std::abs(t) < 1.0))
        throw DomainError("phi series only converges for |t| < 1");
    const double q = gamma * t;
    num::CompensatedSum acc;
    double power = 1.0;
    double prev_term = 0.0, last_term = 0.0;
    for (double s : sigma) {
        power *= q;
        prev_term = last_term;
        last_term = s * power;
        acc.add(last_term);
    }
    // geometric tail estimate from the observed term ratio
    double ratio = std::abs(t);
    if (prev_term != 0.0)
        ratio = std::min(0.999, std::abs(t) * std::max(1.0, std::abs(last_term / prev_term) / std::abs(t) / gamma));
    const double tail = std::abs(last_term) * ratio / (1.0 - ratio);
    if (!(tail <= tail_tol)) {
        std::ostringstream msg;
        msg << "series truncated at order " << sigma.size() << " leaves tail bound "
            << tail << " > " << tail_tol << " at t = " << t;
        throw ConvergenceError(msg.str());
    }
    return acc.value();
}

Profile::Profile(double alpha, double tolerance, int series_order)
    : alpha_(alpha), tol_(tolerance) {
    if (!(alpha > 0.0)) throw DomainError("profile exponent alpha must be positive");
    if (!(tolerance > 0.0)) throw DomainError("profile tolerance must be positive");

    if (alpha_ <= 1.0) {
        TaylorProfile tp;
        tp.alpha = alpha_;
        tp.gamma = gamma_alpha(alpha_, GammaRoute::digamma);
        tp.sigma = sigma_coeffs(alpha_, series_order);
        series_ = std::move(tp);
    }

    // Bracketing table: uniform up to 0.9, then geometric approach to 1.
    node_m_.push_back(0.0);
    for (int i = 1; i <= 18; ++i) node_m_.push_back(0.05 * i);
    for (int k = 4; k <= 48; ++k) node_m_.push_back(1.0 - std::ldexp(1.0, -k));

    node_smooth_.assign(node_m_.size(), 0.0);
    node_w_.assign(node_m_.size(), 0.0);
    auto r = [this](double s) { return smooth_integrand(s, alpha_); };
    for (size_t j = 1; j < node_m_.size(); ++j) {
        if (node_m_[j] <= 0.25) {
            node_w_[j] = head_series_w(node_m_[j]);
            node_smooth_[j] = node_w_[j] + std::log1p(-node_m_[j]) / alpha_;
        } else {
            const double lo = std::max(node_m_[j - 1], 0.25);
            const double base = node_m_[j - 1] <= 0.25
                                    ? head_series_w(0.25) + std::log1p(-0.25) / alpha_
                                    : node_smooth_[j - 1];
            node_smooth_[j] = base + num::integrate(r, lo, node_m_[j], 1e-14).value;
            node_w_[j] = node_smooth_[j] - std::log1p(-node_m_[j]) / alpha_;
        }
        if (!(node_w_[j] > node_w_[j - 1]))
            throw ConvergenceError("inverse table failed to come out strictly increasing");
    }
}

Profile Profile::for_dimension(int n, double tolerance, int series_order) {
    if (n < 1) throw DomainError("dimension must be a positive integer");
    Profile p(2.0 / static_cast<double>(n), tolerance, series_order);
    p.n_ = n;
    return p;
}

const TaylorProfile& Profile::series() const {
    if (!series_)
        throw DomainError("tail series is only available for alpha <= 1");
    return *series_;
}

double Profile::head_series_w(double m) const {
    // w(M) = sum_{j>=0} M^{1+j alpha}/(1+j alpha), geometric ratio M^alpha.
    const double ratio = std::pow(m, alpha_);
    double power = m;
    num::CompensatedSum acc;
    for (int j = 0; j < 200000; ++j) {
        const double denom = 1.0 + alpha_ * j;
        const double term = power / denom;
        acc.add(term);
        if (term < 1e-17 * (acc.value() + 1e-300)) break;
        power *= ratio;
    }
    return acc.value();
}

double Profile::smooth_prefix(double m) const {
    if (m <= 0.25) return head_series_w(m) + std::log1p(-m) / alpha_;
    const auto it = std::upper_bound(node_m_.begin(), node_m_.end(), m);
    const size_t j = static_cast<size_t>(it - node_m_.begin()) - 1;
    const double lo = std::max(node_m_[j], 0.25);
    const double base = node_m_[j] <= 0.25
                            ? head_series_w(0.25) + std::log1p(-0.25) / alpha_
                            : node_smooth_[j];
    if (m == node_m_[j]) return node_smooth_[j];
    auto r = [this](double s) { return smooth_integrand(s, alpha_); };
    return base + num::integrate(r, lo, m, 0.1 * tol_).value;
}

double Profile::w_of_m(double m) const {
    if (!(m >= 0.0 && m < 1.0))
        throw DomainError("w_of_m requires M in [0, 1)");
    if (m == 0.0) return 0.0;
    if (m <= 0.25) return head_series_w(m);
    return smooth_prefix(m) - std::log1p(-m) / alpha_;
}

double Profile::invert(double w) const {
    // bracket from the table
    size_t j = static_cast<size_t>(std::upper_bound(node_w_.begin(), node_w_.end(), w) -
                                   node_w_.begin());
    double lo, hi;
    if (j >= node_w_.size()) {
        lo = node_m_.back();
        hi = 1.0 - std::ldexp(1.0, -52);
        if (w_of_m(hi) <= w) return hi; // beyond double resolution of 1 - M
    } else {
        lo = node_m_[j - 1];
        hi = node_m_[j];
    }
    const double f_tol = std::max(0.5 * tol_, 1e-14);
    auto f = [this, w](double m) {
        return std::make_pair(w_of_m(m) - w, 1.0 / one_minus_pow(m, alpha_));
    };
    return num::newton_bracketed(f, lo, hi, 1e-16, f_tol).x;
}

double Profile::series_complement(double w, double tail_tol) const {
    const TaylorProfile& tp = series();
    const double t = std::exp(-alpha_ * w);
    return tp.phi_series(t, tail_tol);
}

double Profile::eval(double w, ProfileRoute route) const {
    if (!(w >= 0.0)) throw DomainError("profile argument w must be nonnegative");
    if (w == 0.0) return 0.0;
    switch (route) {
    case ProfileRoute::inverse:
        return invert(w);
    case ProfileRoute::series:
        return 1.0 - series_complement(w, tol_);
    case ProfileRoute::automatic:
    default:
        if (series_ && std::exp(-alpha_ * w) <= 0.45)
            return 1.0 - series_complement(w, tol_);
        return invert(w);
    }
}

double Profile::complement(double w, ProfileRoute route) const {
    if (!(w >= 0.0)) throw DomainError("profile argument w must be nonnegative");
    if (w == 0.0) return 1.0;
    switch (route) {
    case ProfileRoute::inverse:
        return 1.0 - invert(w);
    case ProfileRoute::series:
        return series_complement(w, tol_);
    case ProfileRoute::automatic:
    default:
        if (series_ && std::exp(-alpha_ * w) <= 0.45)
            return series_complement(w, tol_);
        return 1.0 - invert(w);
    }
}

double Profile::phi(double t) const {
    if (t > 1.0) throw DomainError("phi is defined for t <= 1");
    if (t == 0.0) return 0.0;
    constexpr double kSplit = 0.35;
    if (t > kSplit) return 1.0 - eval(-std::log(t) / alpha_);
    if (!series_)
        throw DomainError("phi for t <= 0 needs the tail series (alpha <= 1)");
    if (!(t > -1.0)) throw DomainError("phi series requires t in (-1, 1]");
    return series_->phi_series(t, tol_);
}

double profile_bound_q(int n, double w) {
    if (n < 1) throw DomainError("profile_bound_q requires n >= 1");
    if (!(w >= 0.0)) throw DomainError("profile_bound_q requires w >= 0");
    // (e^{2w/n} - 1)/(e^{2w/n} - (n-2)/n), written in e^{-2w/n} so that it
    // stays finite for large w.
    const double e = std::exp(-2.0 * w / static_cast<double>(n));
    const double c = static_cast<double>(n - 2) / static_cast<double>(n);
    return -std::expm1(-2.0 * w / static_cast<double>(n)) / (1.0 - c * e);
}

double t_n(int n, double xi) {
    if (n < 1) throw DomainError("t_n requires n >= 1");
    if (!(xi >= 0.0)) throw DomainError("t_n requires xi >= 0");
    if (xi == 0.0) return 0.0;
    if (n == 1) return xi;
    auto integrand = [n](double t) {
        return std::pow(std::tanh(t), n - 1);
    };
    // beyond t ~ 40 the integrand is 1 to double precision
    const double cut = 40.0;
    if (xi <= cut)
        return n * num::integrate(integrand, 0.0, xi, 1e-13).value;
    return n * (num::integrate(integrand, 0.0, cut, 1e-13).value + (xi - cut));
}

double t_n_inverse(int n, double w) {
    if (n < 1) throw DomainError("t_n_inverse requires n >= 1");
    if (!(w >= 0.0)) throw DomainError("t_n_inverse requires w >= 0");
    if (w == 0.0) return 0.0;
    if (n == 1) return w;
    double hi = 1.0;
    while (t_n(n, hi) < w) hi *= 2.0;
    auto f = [n, w](double xi) {
        const double th = std::tanh(xi);
        return std::make_pair(t_n(n, xi) - w, n * std::pow(th, n - 1));
    };
    const double f_tol = 1e-12 * std::max(1.0, w);
    return num::newton_bracketed(f, 0.0, hi, 1e-15, f_tol).x;
}

double profile_series_eval(int n, double x, int terms, double tail_tol) {
    if (n < 2) throw DomainError("profile_series_eval requires n >= 2");
    if (!(x >= 0.0)) throw DomainError("profile_series_eval requires x >= 0");
    TaylorProfile tp;
    tp.alpha = 2.0 / static_cast<double>(n);
    tp.gamma = gamma_alpha(tp.alpha, GammaRoute::digamma);
    tp.sigma = sigma_coeffs(tp.alpha, terms);
    return tp.phi_series(std::exp(-2.0 * x / static_cast<double>(n)), tail_tol);
}

double HPolynomial::operator()(double t) const {
    double acc = 0.0;
    for (size_t i = coeffs.size(); i-- > 0;) acc = acc * t + coeffs[i];
    return acc;
}

std::vector<HPolynomial> h_polynomials(double alpha, int k_max) {
    if (k_max < 0) throw DomainError("h_polynomials requires k_max >= 0");
    std::vector<HPolynomial> out;
    out.reserve(static_cast<size_t>(k_max) + 1);
    out.push_back({0, {-1.0}});
    for (int k = 0; k < k_max; ++k) {
        const auto& h = out.back().coeffs;
        std::vector<double> next(h.size() + 1, 0.0);
        const double a = static_cast<double>(k + 1) - 2.0 * alpha;
        const double b = -(static_cast<double>(k + 1) - alpha);
        // [(k+1-2a)t + b] H_k
        for (size_t i = 0; i < h.size(); ++i) {
            next[i + 1] += a * h[i];
            next[i] += b * h[i];
        }
        // + alpha t (1 - t) H_k'
        for (size_t i = 1; i < h.size(); ++i) {
            const double d = static_cast<double>(i) * h[i]; // coeff of t^{i-1} in H'
            next[i] += alpha * d;
            if (i + 1 < next.size()) next[i + 1] -= alpha * d;
        }
        out.push_back({k + 1, std::move(next)});
    }
    return out;
}

VerificationReport complete_monotonicity_check(const Profile& profile,
                                               std::span<const double> grid,
                                               int max_order, double step,
                                               double eval_tolerance) {
    if (grid.empty()) throw DomainError("monotonicity check requires a nonempty grid");
    if (!(step > 0.0)) throw DomainError("monotonicity check requires step > 0");
    if (max_order < 1) throw DomainError("monotonicity check requires max_order >= 1");

    VerificationReport report;
    report.name = "complete-monotonicity";
    report.params["alpha"] = std::to_string(profile.alpha());
    report.params["h"] = std::to_string(step);
    report.params["k_max"] = std::to_string(max_order);
    report.tolerance = eval_tolerance;

    double worst = std::numeric_limits<double>::infinity();
    double worst_x = 0.0;
    int worst_k = 0;
    std::vector<double> samples(static_cast<size_t>(max_order) + 1);
    for (double x : grid) {
        for (int j = 0; j <= max_order; ++j)
            samples[static_cast<size_t>(j)] = profile.complement(x + step * j);
        for (int k = 1; k <= max_order; ++k) {
            const double diff = num::forward_difference(
                std::span<const double>(samples.data(), static_cast<size_t>(k) + 1));
            const double signed_diff = (k % 2 == 0) ? diff : -diff;
            const double normalized = signed_diff / std::ldexp(1.0, k);
            ++report.samples;
            if (normalized < worst) {
                worst = normalized;
                worst_x = x;
                worst_k = k;
            }
        }
    }
    report.worst = worst;
    report.pass = worst >= -eval_tolerance;
    report.params["worst_x"] = std::to_string(worst_x);
    report.params["worst_k"] = std::to_string(worst_k);
    return report;
}

VerificationReport subadditivity_check(const Profile& profile,
                                       double max_argument, int grid_points,
                                       double rel_tolerance) {
    if (grid_points < 2) throw DomainError("subadditivity check requires >= 2 grid points");
    VerificationReport report;
    report.name = "subadditivity";
    report.params["alpha"] = std::to_string(profile.alpha());
    report.params["max_argument"] = std::to_string(max_argument);
    report.tolerance = rel_tolerance;

    const double dx = max_argument / (grid_points - 1);
    std::vector<double> tail(static_cast<size_t>(grid_points));
    std::vector<double> tail2(static_cast<size_t>(2 * grid_points - 1));
    for (int i = 0; i < grid_points; ++i) tail[static_cast<size_t>(i)] = profile.complement(dx * i);
    for (int i = 0; i < 2 * grid_points - 1; ++i)
        tail2[static_cast<size_t>(i)] = profile.complement(dx * i);

    double worst = std::numeric_limits<double>::infinity();
    for (int i = 0; i < grid_points; ++i) {
        for (int j = 0; j < grid_points; ++j) {
            const double lhs = tail[static_cast<size_t>(i)] * tail[static_cast<size_t>(j)];
            const double rhs = tail2[static_cast<size_t>(i + j)];
            const double rel = (rhs - lhs) / std::max(rhs, 1e-300);
            ++report.samples;
            worst = std::min(worst, rel);
        }
    }
    report.worst = worst;
    report.pass = worst >= -rel_tolerance;
    return report;
}

} // namespace xtransform
