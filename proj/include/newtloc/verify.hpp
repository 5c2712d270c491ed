#pragma once

#include "newtloc/kernels.hpp"
#include "newtloc/polynomial.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace newtloc::verify {

/// Outcome of one numerical check: measured values against references with a
/// tolerance (or a boundedness criterion folded into `pass`).
struct CheckReport {
    std::string id;
    std::string params;
    std::vector<double> measured;
    std::vector<double> reference;
    double tol = 0.0;
    bool pass = false;
    double seconds = 0.0;
};

/// Recomputes the 10x10 ballot-number table by the closed form and by the
/// recursion and compares both against the stored reference.
CheckReport regen_table1();

/// Exact rational-polynomial regression of the q_l coefficient polynomials
/// and the kernel center values for m = 1..4 against their printed closed
/// forms, across enough integer dimensions to pin the polynomials in d.
CheckReport check_closed_form_q();

/// Closed form vs derivative expansion at quasi-uniform manifold points.
CheckReport check_equivalence(Family family, int d, int m, double eps, int n_points,
                              std::uint64_t seed);

/// Fitted localization constants c(eps) = sup |K| eps^{d-1} (1+rho/eps)^M
/// over a geometric rho-grid; passes when max/min <= 2 across the eps list.
CheckReport fit_localization_constant(Family family, int d, int m, int exponent,
                                      const std::vector<double>& eps_list);

/// The single m-th derivative of the Newtonian kernel, normalized to unit
/// integral, must blow up like eps^{-(m-1)}: confirms that localization
/// genuinely needs the full combination for m >= 2.
CheckReport check_negative_control(int d, int m, const std::vector<double>& eps_list);

/// Kernel value at the center: exact match of the closed-form polynomials for
/// m <= 4 plus the first-order-in-eps approach to (1/2)(2m-2)!/(m!(m-1)!).
CheckReport check_center_asymptotics(int d, int m, const std::vector<double>& eps_list);

/// Oscillatory-integral Fourier transform of the Cauchy-type profile against
/// the exponential-polynomial closed form.
CheckReport check_fourier_transform(int m, double eps, const std::vector<double>& v_list);

/// Convergence of the finite-difference point-charge reduction to the
/// derivative expansion; passes when the empirical order in t is >= 0.9.
CheckReport check_fd_reduction(int d, int m, double eps, const std::vector<double>& t_list);

/// Interior/exterior pole configurations coincide on the sphere.
CheckReport check_pole_inversion(int d, std::uint64_t seed);

/// Surface integral over omega_d equals the expansion's value at the origin.
CheckReport check_mean_value(int d, int m, double eps);

/// Discrete-Laplacian residual of the expansion decays at second order.
CheckReport check_harmonicity(int d, int m, double eps);

/// (eps + rho)/5 <= |x - a eta| <= 2 (eps + rho) on a dense (eps, rho) grid.
CheckReport check_distance_comparability();

/// q_l(delta(eps)) - Q_l(2 eps) = O(eps): first-order agreement of the two
/// circle-coefficient families.
CheckReport check_q_vs_Q_rate(int m);

/// Kernel integral against an analytic reference value.
CheckReport check_normalization(Family family, int d, int m, double eps, double reference,
                                double tol);

struct SuiteOptions {
    std::string filter;       // run only checks whose id starts with this
    std::uint64_t seed = 1;
    int threads = 0;          // 0 = automatic; LOCALIZE_THREADS caps it
};

/// The full catalog, filtered, run (possibly in parallel) and merged in id
/// order. Deterministic for a fixed seed.
std::vector<CheckReport> run_suite(const SuiteOptions& options);

/// JSON array of reports; timings are zeroed unless requested so that a
/// fixed-seed run is byte-reproducible.
std::string report_json(const std::vector<CheckReport>& reports, bool include_timings);

// --- building blocks shared with the test suites -------------------------

/// Deterministic quasi-uniform points on S^{d-1} (equispaced for d = 2).
std::vector<Vec> sphere_points(int d, int n, std::uint64_t seed);

/// 2 int_0^inf (1+s^2)^{-m} cos(w s) ds by half-period panel summation with
/// repeated averaging. Independent of the closed form it is checked against.
double fourier_transform_numeric(int m, double eps, double v);
double fourier_transform_closed(int m, double eps, double v);

/// Fitted localization constant for one kernel instance.
double localization_hat(Family family, int d, int m, int exponent, double eps);

/// Least-squares slope of y against x.
double lsq_slope(const std::vector<double>& x, const std::vector<double>& y);

/// a^{d-2} F(a eta, 0) as an exact polynomial in delta.
PolyRational center_polynomial(int d, int m);

}  // namespace newtloc::verify
