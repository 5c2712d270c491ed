#pragma once

#include "newtloc/coefficients.hpp"

#include <string>
#include <vector>

namespace newtloc {

using Vec = std::vector<double>;

double dot(const Vec& a, const Vec& b);
double norm(const Vec& a);

enum class Family { colzani, main, s1_second, flat };

std::string family_name(Family f);
Family family_from_name(const std::string& name);

/// Parameters identifying one kernel instance. The pole distance is
/// a = 1 + eps for the colzani/main families, a = e^eps for the second
/// circle kernel, and the pole sits at eps * eta for the flat family.
struct KernelParams {
    int d = 3;
    int m = 1;
    double eps = 1.0;
    Family family = Family::main;

    KernelParams() = default;
    KernelParams(int d_, int m_, double eps_, Family f);

    double pole_radius() const;          // a (or eps for the flat family)
    double delta() const;                // 1 - a^{-2}
    void validate() const;               // throws std::domain_error
};

/// Poisson kernel for the ball of radius a > 1, restricted to the unit
/// sphere and written as a zonal function of t = x . eta:
///   P(a eta, x) = (1/(a omega_d)) (a^2 - 1) / (a^2 + 1 - 2 a t)^{d/2}.
double poisson_zonal(int d, double a, double t);

/// Alternating Poisson-kernel combination with poles at (1 + j eps) eta,
/// j = 1..m. Integrates to exactly 1 over the sphere.
double colzani_zonal(const KernelParams& params, double t);

/// The single-pole power kernel
///   ((d/2)_{m-1} / (2 m!)) a^{2m} delta^{2m-1} (a^2 + 1 - 2 a t)^{-d/2+1-m}.
double main_zonal(const KernelParams& params, double t);

/// Periodized Cauchy-type kernel on the circle, as a function of the
/// geodesic distance rho in [0, pi]:
///   (2^{2m-2}/m) sum_n eps^{-1} (1 + eps^{-2} (rho + 2 pi n)^2)^{-m}.
/// The lattice sum is truncated with an Euler-Maclaurin tail evaluation;
/// the result is accurate to tol (absolute).
double s1_series(const KernelParams& params, double rho, double tol = 1e-12);

/// Closed form of the flat-space kernel at a point of R^{d-1}, radial in
/// r = |x|:  (2^{2m-2} (d/2)_{m-1} / m!) eps^{2m-1} (r^2 + eps^2)^{-(2m+d-2)/2}.
double flat_closed_radial(const KernelParams& params, double r);
double flat_closed(const KernelParams& params, const Vec& x);  // x in R^{d-1}

/// A kernel as a linear combination of directional derivatives of the
/// Newtonian kernel at a single pole: weights[l] multiplies
/// (eta . grad)^l |x - a eta|^{2-d} for l >= 1.  weights[0] multiplies the
/// underived Newtonian kernel when d >= 3 and is an additive constant when
/// d = 2 (the flat family uses neither: weights[0] = 0).
struct ExpansionSpec {
    KernelParams params;
    Vec eta;                   // unit direction of the pole ray
    double pole_radius = 0.0;  // pole at pole_radius * eta
    std::vector<double> weights;
};

/// Expansion weights of the main-family kernel: w_l = q_l(delta) delta^{l-1}
/// a^l / (l! (d-2)) for d >= 3 (without the d-2 factor for d = 2), w_0 = q_0.
ExpansionSpec make_main_expansion(const KernelParams& params, Vec eta = {});

/// Expansion weights of the second circle kernel: w_l = Q_l(2 eps) (2 eps)^{l-1}
/// a^l / l!, constant w_0 = -(1/2) (2m-2)!/(m!(m-1)!).
ExpansionSpec make_s1_expansion(const KernelParams& params, Vec eta = {});

/// Expansion weights of the flat kernel; the pole ray direction is -e_d.
ExpansionSpec make_flat_expansion(const KernelParams& params);

/// Evaluates the expansion at any x != pole in R^d, using the Gegenbauer and
/// Chebyshev closed forms for the repeated directional derivatives.
double expansion_eval(const ExpansionSpec& spec, const Vec& x);

/// Convenience wrappers mirroring the closed-form entry points.
double s1_expansion(const KernelParams& params, const Vec& x);
double flat_expansion(const KernelParams& params, const Vec& x);

enum class ChargeKind { power, log };

/// Finite combination of shifted Newtonian kernels on the ray {r * eta}
/// plus a constant: the pure point-charge form of a kernel.
struct PointChargeConfig {
    int d = 3;
    Vec eta;
    ChargeKind kind = ChargeKind::power;
    double constant = 0.0;
    struct Term {
        double a;  // pole radius, != 1
        double b;  // weight
    };
    std::vector<Term> terms;  // radii strictly decreasing

    std::string to_json() const;
    static PointChargeConfig from_json(const std::string& text);
};

/// Replaces each directional derivative by the one-sided finite difference
/// with poles at (a - k t) eta, k = 0..l, sharing the step t across orders so
/// the result has exactly m+1 poles. Requires 0 < t < eps/m, which keeps all
/// poles outside the closed unit ball.
PointChargeConfig to_point_charges(const ExpansionSpec& spec, double t);

double eval_point_charges(const PointChargeConfig& config, const Vec& x);

/// Maps every pole a -> 1/a, adjusting weights (power kernels) or the
/// constant (log kernels) so that the two configurations coincide on the
/// unit sphere. Involution up to rounding.
PointChargeConfig invert_poles(const PointChargeConfig& config);

/// Uniform handle on one kernel instance for integration and sampling:
/// sphere families evaluate as functions of t = x . eta, the flat family as
/// a radial function on R^{d-1}. `scale` is the normalization multiplier;
/// `normalization` caches the integral of the scaled kernel once computed.
struct ZonalKernel {
    KernelParams params;
    double scale = 1.0;
    double normalization = 0.0;
    double series_tol = 1e-12;  // lattice-sum tolerance (s1_second family)

    static ZonalKernel make(const KernelParams& params);
    double operator()(double t) const;
    double radial(double r) const;
};

}  // namespace newtloc
