#pragma once

#include <optional>
#include <span>
#include <vector>

#include "xtransform/report.hpp"

namespace xtransform {

enum class ProfileRoute {
    inverse,   // invert w(M) = int_0^M ds/(1 - s^alpha) by bracketed Newton
    series,    // exponential tail series 1 - F = sum sigma_k (gamma e^{-alpha w})^k
    automatic, // series once its truncation error beats the quadrature error
};

enum class GammaRoute { quadrature, digamma };

/// gamma_alpha = (1/alpha) exp(-int_0^1 (1 - x^{(1-alpha)/alpha})/(1-x) dx),
/// the coefficient of the leading exponential tail of 1 - F_alpha.
/// The quadrature route accepts alpha in [0, 1] and evaluates the integral
/// adaptively, using the finite endpoint limit (1-alpha)/alpha of the
/// integrand at x = 1. The digamma route exp(-Psi(1/alpha) - euler +
/// ln(1/alpha)) accepts any alpha > 0. At alpha = 0 both routes return the
/// continuum limit exp(-euler_mascheroni) = 0.5614594835...; see the note
/// in the implementation for the short derivation.
double gamma_alpha(double alpha, GammaRoute route = GammaRoute::digamma);

/// First `count` coefficients sigma_1..sigma_count of the normalized tail
/// series: sigma_1 = 1 and
///   sigma_k = 1/(k(k-1)) sum_{v=1}^{k-1} sigma_v sigma_{k-v} [(1+alpha)v - alpha k] v.
/// All positive for alpha in (0,1); identically zero past sigma_1 at alpha = 1.
std::vector<double> sigma_coeffs(double alpha, int count);

/// Cached tail-series data of one profile: gamma_alpha and sigma_1..sigma_K.
struct TaylorProfile {
    double alpha = 0.0;
    double gamma = 0.0;
    std::vector<double> sigma;

    int order() const { return static_cast<int>(sigma.size()); }

    /// phi_alpha(t) = sum_k sigma_k (gamma t)^k for |t| < 1. Throws
    /// ConvergenceError (reporting the tail bound) if the truncation tail
    /// cannot be certified below `tail_tol`.
    double phi_series(double t, double tail_tol) const;
};

/// Evaluator of the profile function F_alpha, the solution of
///   F' = 1 - F^alpha,  F(0) = 0,
/// with M_n = F_{2/n} for integer dimensions. The primary route inverts
/// w(M) = int_0^M ds/(1-s^alpha) (split into a smooth part plus the exact
/// logarithmic tail) with a bracketing table and safeguarded Newton; the
/// exponential series takes over for large arguments when alpha <= 1.
/// Immutable after construction; safe for concurrent reads.
class Profile {
public:
    explicit Profile(double alpha, double tolerance = 1e-12, int series_order = 200);
    static Profile for_dimension(int n, double tolerance = 1e-12, int series_order = 200);

    double alpha() const { return alpha_; }
    std::optional<int> dimension() const { return n_; }
    double tolerance() const { return tol_; }
    bool has_series() const { return series_.has_value(); }
    const TaylorProfile& series() const;

    /// F_alpha(w) for w >= 0.
    double eval(double w, ProfileRoute route = ProfileRoute::automatic) const;
    double operator()(double w) const { return eval(w); }

    /// 1 - F_alpha(w), accurate in the exponentially small tail whenever the
    /// series route applies.
    double complement(double w, ProfileRoute route = ProfileRoute::automatic) const;

    /// The increasing bijection w(M) = int_0^M ds/(1-s^alpha), M in [0,1).
    double w_of_m(double m) const;

    /// phi_alpha(t) = 1 - F_alpha(-ln(t)/alpha) for t in (0,1], extended by
    /// the Taylor series across t = 0 down to t > -1 (alpha <= 1 only).
    /// phi(0) = 0, phi(1) = 1, slope gamma_alpha at the origin.
    double phi(double t) const;

private:
    double alpha_;
    double tol_;
    std::optional<int> n_;
    std::optional<TaylorProfile> series_;
    std::vector<double> node_m_;       // monotone table of M values
    std::vector<double> node_smooth_;  // int_0^M of the smooth integrand
    std::vector<double> node_w_;       // w at the table nodes

    double smooth_prefix(double m) const;
    double head_series_w(double m) const;
    double invert(double w) const;
    double series_complement(double w, double tail_tol) const;
};

/// Q_n(w) = (e^{2w/n} - 1)/(e^{2w/n} - (n-2)/n), the explicit upper bound
/// of the profile function; coincides with M_1 and M_2 for n = 1, 2.
double profile_bound_q(int n, double w);

/// T_n(xi) = n int_0^xi tanh^{n-1} t dt (adaptive quadrature).
double t_n(int n, double xi);

/// The unique xi >= 0 with T_n(xi) = w.
double t_n_inverse(int n, double w);

/// Truncated tail series for 1 - M_n(x): sum_{k<=terms} sigma_k
/// (gamma_{2/n})^k e^{-2kx/n}. Throws ConvergenceError if the truncation
/// tail cannot be certified below `tail_tol`.
double profile_series_eval(int n, double x, int terms, double tail_tol = 1e-10);

/// Polynomial H_k of the closed-form derivative ladder
///   F^{(k+2)} = alpha t (1-t) H_k(t) / F^{k+1},  t = F^alpha,
/// generated by H_0 = -1 and
///   H_{k+1}(t) = [(k+1-2a)t - (k+1-a)] H_k(t) + a t(1-t) H_k'(t).
/// For alpha in (0,1], (-1)^{k+1} H_k >= 0 on [0,1).
struct HPolynomial {
    int k = 0;
    std::vector<double> coeffs; // ascending powers of t, degree <= k

    double operator()(double t) const;
};

std::vector<HPolynomial> h_polynomials(double alpha, int k_max);

/// Forward-difference test of complete monotonicity of 1 - F_alpha:
/// checks (-1)^k D_h^k (1-F)(x) >= -2^k * eval_tolerance for every grid
/// point and every order k <= max_order. The report's `worst` is the most
/// negative normalized value min (-1)^k D_h^k / 2^k; violations are
/// recorded in the report, never thrown.
VerificationReport complete_monotonicity_check(const Profile& profile,
                                               std::span<const double> grid,
                                               int max_order, double step,
                                               double eval_tolerance = 5e-11);

/// Grid test of the submultiplicative tail property
/// (1-F)(x)(1-F)(y) <= (1-F)(x+y) (1 + rel_tolerance) over
/// [0, max_argument]^2; `worst` is the most negative relative slack.
VerificationReport subadditivity_check(const Profile& profile,
                                       double max_argument, int grid_points,
                                       double rel_tolerance = 1e-9);

} // namespace xtransform
