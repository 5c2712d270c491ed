#include "newtloc/verify.hpp"

#include "newtloc/quadrature.hpp"
#include "newtloc/special.hpp"

#include <json.hpp>

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <functional>
#include <numbers>
#include <sstream>
#include <thread>

namespace newtloc::verify {

using json = nlohmann::json;

namespace {

constexpr double kPi = std::numbers::pi;

// Reference ballot-number table, rows m = 1..10, columns l = 1..10.
constexpr long long kBallotReference[10][10] = {
    {1, 0, 0, 0, 0, 0, 0, 0, 0, 0},
    {1, 1, 0, 0, 0, 0, 0, 0, 0, 0},
    {2, 2, 1, 0, 0, 0, 0, 0, 0, 0},
    {5, 5, 3, 1, 0, 0, 0, 0, 0, 0},
    {14, 14, 9, 4, 1, 0, 0, 0, 0, 0},
    {42, 42, 28, 14, 5, 1, 0, 0, 0, 0},
    {132, 132, 90, 48, 20, 6, 1, 0, 0, 0},
    {429, 429, 297, 165, 75, 27, 7, 1, 0, 0},
    {1430, 1430, 1001, 572, 275, 110, 35, 8, 1, 0},
    {4862, 4862, 3432, 2002, 1001, 429, 154, 44, 9, 1}};

struct SplitMix64 {
    std::uint64_t state;
    explicit SplitMix64(std::uint64_t seed) : state(seed) {}
    std::uint64_t next() {
        std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }
    double uniform() { return (static_cast<double>(next() >> 11) + 0.5) * 0x1.0p-53; }
    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
    double gaussian() {
        const double u1 = uniform(), u2 = uniform();
        return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * kPi * u2);
    }
};

class Stopwatch {
public:
    Stopwatch() : start_(std::chrono::steady_clock::now()) {}
    double seconds() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
    }

private:
    std::chrono::steady_clock::time_point start_;
};

std::string fmt(double v) {
    std::ostringstream os;
    os << v;
    return os.str();
}

// Geometric grid eps * 2^{k/4} clipped to (0, hi), plus both endpoints.
std::vector<double> geometric_grid(double eps, double hi) {
    std::vector<double> g{0.0};
    for (int k = -16;; ++k) {
        const double r = eps * std::pow(2.0, k / 4.0);
        if (r >= hi) break;
        g.push_back(r);
    }
    g.push_back(hi);
    return g;
}

PolyRational closed_form_q(int m, int l, const Rational& d) {
    using P = PolyRational;
    const Rational one(1), two(2);
    switch (m) {
        case 1:
            if (l == 0) return P::constant(Rational(-1, 2));
            return P::constant(one);
        case 2:
            if (l == 0) return P({Rational(-1, 2), d / 8});
            if (l == 1) return P({one, -d / 2});
            return P::constant(one);
        case 3:
            if (l == 0) return P({Rational(-1), (d + 2) / 4, -d * (d + 2) / 48});
            if (l == 1) return P({two, -(d + 1), d * (d + 2) / 8});
            if (l == 2) return P({two, -(d + 2) / 2});
            return P::constant(one);
        case 4:
            if (l == 0)
                return P({Rational(-5, 2), Rational(5) * (d + 4) / 8, -(d + 2) * (d + 4) / 16,
                          d * (d + 2) * (d + 4) / 384});
            if (l == 1)
                return P({Rational(5), Rational(-5) * (d + 2) / 2,
                          (Rational(3) * d + 2) * (d + 4) / 8, -d * (d + 2) * (d + 4) / 48});
            if (l == 2) return P({Rational(5), -(Rational(3) * d + 10) / 2, (d + 2) * (d + 4) / 8});
            if (l == 3) return P({Rational(3), -(d + 4) / 2});
            return P::constant(one);
        default:
            throw std::domain_error("closed_form_q: only m <= 4 has a printed closed form");
    }
}

PolyRational closed_form_center(int m, const Rational& d) {
    using P = PolyRational;
    switch (m) {
        case 1: return P::constant(Rational(1, 2));
        case 2: return P({Rational(1, 2), (d - 4) / 8});
        case 3: return P({Rational(1), (d - 6) / 4, (d - 4) * (d - 6) / 48});
        case 4:
            return P({Rational(5, 2), Rational(5) * (d - 8) / 8, (d - 6) * (d - 8) / 16,
                      (d - 4) * (d - 6) * (d - 8) / 384});
        default:
            throw std::domain_error("closed_form_center: only m <= 4 has a printed closed form");
    }
}

double factorial_d(int n) {
    double f = 1.0;
    for (int i = 2; i <= n; ++i) f *= i;
    return f;
}

// Normalized |(eta.grad)^m Newtonian| on the sphere as a zonal function of
// rho; the integral has the closed mean-value form, so no quadrature needed.
double single_derivative_normalized(int d, int m, double eps, double rho) {
    const double a = 1.0 + eps;
    const double r = std::sqrt(a * a + 1.0 - 2.0 * a * std::cos(rho));
    const double cosg = std::min(1.0, std::max(-1.0, (a - std::cos(rho)) / r));
    if (d >= 3) {
        const double integral = surface_area(d) * factorial_d(m) *
                                to_double(binomial(m + d - 3, m)) * std::pow(a, 2.0 - d - m);
        const double v = factorial_d(m) * gegenbauer_c(m, Rational(d - 2, 2), cosg) *
                         std::pow(r, 2.0 - d - m);
        return v / integral;
    }
    const double integral = 2.0 * kPi * factorial_d(m - 1) * std::pow(a, -m);
    const double v = factorial_d(m - 1) * chebyshev_t(m, cosg) * std::pow(r, -m);
    return v / integral;
}

}  // namespace

double lsq_slope(const std::vector<double>& x, const std::vector<double>& y) {
    const std::size_t n = x.size();
    double mx = 0, my = 0;
    for (std::size_t i = 0; i < n; ++i) {
        mx += x[i];
        my += y[i];
    }
    mx /= n;
    my /= n;
    double sxx = 0, sxy = 0;
    for (std::size_t i = 0; i < n; ++i) {
        sxx += (x[i] - mx) * (x[i] - mx);
        sxy += (x[i] - mx) * (y[i] - my);
    }
    return sxy / sxx;
}

std::vector<Vec> sphere_points(int d, int n, std::uint64_t seed) {
    std::vector<Vec> pts;
    pts.reserve(n);
    if (d == 2) {
        for (int i = 0; i < n; ++i) {
            const double theta = 2.0 * kPi * i / n;
            pts.push_back({std::cos(theta), std::sin(theta)});
        }
        return pts;
    }
    SplitMix64 rng(seed);
    // Always include the poles of the zonal axis e_1.
    Vec plus(d, 0.0), minus(d, 0.0);
    plus[0] = 1.0;
    minus[0] = -1.0;
    pts.push_back(plus);
    pts.push_back(minus);
    while (static_cast<int>(pts.size()) < n) {
        Vec x(d);
        for (int i = 0; i < d; ++i) x[i] = rng.gaussian();
        const double r = norm(x);
        if (r < 1e-8) continue;
        for (int i = 0; i < d; ++i) x[i] /= r;
        pts.push_back(std::move(x));
    }
    return pts;
}

PolyRational center_polynomial(int d, int m) {
    const auto sol = solve_q(d, m);
    PolyRational acc = sol.q[0];
    for (int l = 1; l <= m; ++l) {
        const Rational c =
            Rational(factorial(l + d - 3)) / Rational(factorial(l) * factorial(d - 2));
        acc += PolyRational::monomial(c, l - 1) * sol.q[l];
    }
    return acc;
}

CheckReport regen_table1() {
    Stopwatch timer;
    CheckReport report;
    report.id = "table1";
    report.params = "l,m in 1..10";
    const auto recursive = ballot_table_recursive(10, 10);
    int mismatches = 0;
    for (int m = 1; m <= 10; ++m)
        for (int l = 1; l <= 10; ++l) {
            const BigInt want(kBallotReference[m - 1][l - 1]);
            if (ballot(l, m) != want) ++mismatches;
            if (recursive[m - 1][l - 1] != want) ++mismatches;
        }
    report.measured = {static_cast<double>(mismatches)};
    report.reference = {0.0};
    report.pass = (mismatches == 0);
    report.seconds = timer.seconds();
    return report;
}

CheckReport check_closed_form_q() {
    Stopwatch timer;
    CheckReport report;
    report.id = "closed_form_q";
    report.params = "m=1..4, d=2..10, exact";
    int mismatches = 0;
    for (int m = 1; m <= 4; ++m)
        for (int d = 2; d <= 10; ++d) {
            const Rational dr(d);
            const auto sol = solve_q(d, m);
            for (int l = 0; l <= m; ++l)
                if (sol.q[l] != closed_form_q(m, l, dr)) ++mismatches;
            if (center_polynomial(d, m) != closed_form_center(m, dr)) ++mismatches;
        }
    report.measured = {static_cast<double>(mismatches)};
    report.reference = {0.0};
    report.pass = (mismatches == 0);
    report.seconds = timer.seconds();
    return report;
}

CheckReport check_equivalence(Family family, int d, int m, double eps, int n_points,
                              std::uint64_t seed) {
    Stopwatch timer;
    CheckReport report;
    report.id = "equiv/" + family_name(family) + "/d=" + std::to_string(d) +
                "/m=" + std::to_string(m) + "/eps=" + fmt(eps);
    report.params = "n=" + std::to_string(n_points);
    report.tol = 1e-8;

    const KernelParams params(d, m, eps, family);
    double worst = 0.0;

    if (family == Family::main || family == Family::s1_second) {
        const ExpansionSpec spec = (family == Family::main) ? make_main_expansion(params)
                                                            : make_s1_expansion(params);
        for (const auto& x : sphere_points(d, n_points, seed)) {
            const double t = std::min(1.0, std::max(-1.0, dot(x, spec.eta)));
            const double closed = (family == Family::main)
                                      ? main_zonal(params, t)
                                      : s1_series(params, std::acos(t));
            const double expansion = expansion_eval(spec, x);
            worst = std::max(worst, std::abs(closed - expansion) / std::max(1.0, std::abs(closed)));
        }
    } else if (family == Family::flat) {
        const ExpansionSpec spec = make_flat_expansion(params);
        SplitMix64 rng(seed);
        for (int i = 0; i < n_points; ++i) {
            // radii spread geometrically around the peak width
            const double r = (i == 0) ? 0.0 : eps * std::pow(2.0, rng.uniform(-6.0, 6.0));
            Vec xflat(d - 1, 0.0);
            if (d == 2) {
                xflat[0] = (rng.uniform() < 0.5) ? -r : r;
            } else {
                double nn = 0.0;
                for (auto& c : xflat) {
                    c = rng.gaussian();
                    nn += c * c;
                }
                nn = std::sqrt(nn);
                for (auto& c : xflat) c *= r / (nn > 0 ? nn : 1.0);
            }
            Vec x(xflat);
            x.push_back(0.0);
            const double closed = flat_closed(params, xflat);
            const double expansion = expansion_eval(spec, x);
            worst = std::max(worst, std::abs(closed - expansion) / std::max(1.0, std::abs(closed)));
        }
    } else {
        throw std::domain_error("check_equivalence: no expansion form for this family");
    }

    report.measured = {worst};
    report.reference = {0.0};
    report.pass = worst <= report.tol;
    report.seconds = timer.seconds();
    return report;
}

double localization_hat(Family family, int d, int m, int exponent, double eps) {
    const KernelParams params(d, m, eps, family);
    const double hi = (family == Family::flat) ? 1e4 * eps : kPi;
    double hat = 0.0;
    for (double rho : geometric_grid(eps, hi)) {
        double value = 0.0;
        switch (family) {
            case Family::colzani: value = colzani_zonal(params, std::cos(rho)); break;
            case Family::main: value = main_zonal(params, std::cos(rho)); break;
            case Family::s1_second: value = s1_series(params, rho); break;
            case Family::flat: value = flat_closed_radial(params, rho); break;
        }
        hat = std::max(hat, std::abs(value) * std::pow(eps, d - 1) *
                                std::pow(1.0 + rho / eps, exponent));
    }
    return hat;
}

CheckReport fit_localization_constant(Family family, int d, int m, int exponent,
                                      const std::vector<double>& eps_list) {
    Stopwatch timer;
    CheckReport report;
    report.id = "localization/" + family_name(family) + "/d=" + std::to_string(d) +
                "/m=" + std::to_string(m);
    report.params = "exponent=" + std::to_string(exponent);
    report.tol = 2.0;

    for (double eps : eps_list)
        report.measured.push_back(localization_hat(family, d, m, exponent, eps));
    const auto [lo, hi] = std::minmax_element(report.measured.begin(), report.measured.end());
    const double ratio = *hi / *lo;
    report.reference = {ratio};
    report.pass = ratio <= report.tol;
    report.seconds = timer.seconds();
    return report;
}

CheckReport check_negative_control(int d, int m, const std::vector<double>& eps_list) {
    Stopwatch timer;
    CheckReport report;
    report.id = "localization_negative/d=" + std::to_string(d) + "/m=" + std::to_string(m);
    report.params = "expected growth 2^{m-1} per halving";
    report.tol = 1.0;  // |log2(ratio) - (m-1)| <= 1

    std::vector<double> hats;
    for (double eps : eps_list) {
        const double hi = kPi;
        double hat = 0.0;
        for (double rho : geometric_grid(eps, hi))
            hat = std::max(hat, single_derivative_normalized(d, m, eps, rho) *
                                    std::pow(eps, d - 1) *
                                    std::pow(1.0 + rho / eps, m + d - 2));
        hats.push_back(hat);
    }
    bool ok = true;
    for (std::size_t i = 0; i + 1 < hats.size(); ++i) {
        const double ratio = hats[i + 1] / hats[i];  // eps halves between entries
        report.measured.push_back(std::log2(ratio));
        report.reference.push_back(static_cast<double>(m - 1));
        if (std::abs(std::log2(ratio) - (m - 1)) > report.tol) ok = false;
    }
    report.pass = ok;
    report.seconds = timer.seconds();
    return report;
}

CheckReport check_center_asymptotics(int d, int m, const std::vector<double>& eps_list) {
    Stopwatch timer;
    CheckReport report;
    report.id = "center/d=" + std::to_string(d) + "/m=" + std::to_string(m);
    report.params = "order >= 0.9; exact for m <= 4";

    bool exact_ok = true;
    if (m <= 4) exact_ok = (center_polynomial(d, m) == closed_form_center(m, Rational(d)));

    const double limit = 0.5 * factorial_d(2 * m - 2) / (factorial_d(m) * factorial_d(m - 1));
    std::vector<double> logeps, logerr;
    double max_err = 0.0;
    for (double eps : eps_list) {
        const KernelParams params(d, m, eps, Family::main);
        const ExpansionSpec spec = make_main_expansion(params);
        const double value = expansion_eval(spec, Vec(d, 0.0));
        const double err = std::abs(value - limit);
        max_err = std::max(max_err, err);
        if (err > 1e-13) {
            logeps.push_back(std::log(eps));
            logerr.push_back(std::log(err));
        }
    }
    double slope = 2.0;  // vacuous when the error is identically ~0
    if (logeps.size() >= 2) slope = lsq_slope(logeps, logerr);
    report.measured = {slope, max_err};
    report.reference = {0.9, 0.0};
    report.tol = 0.9;
    report.pass = exact_ok && (max_err < 1e-13 || slope >= 0.9);
    report.seconds = timer.seconds();
    return report;
}

// --- Fourier transform oracle --------------------------------------------------

namespace {

// n-point Gauss-Legendre value of f on [lo, hi].
double gl_integrate(const std::function<double(double)>& f, double lo, double hi,
                    const QuadratureRule& rule) {
    const double c = 0.5 * (hi + lo), h = 0.5 * (hi - lo);
    double s = 0.0;
    for (int i = 0; i < rule.n; ++i) s += rule.weights[i] * f(c + h * rule.nodes[i]);
    return h * s;
}

}  // namespace

double fourier_transform_numeric(int m, double eps, double v) {
    const double w = std::abs(v) * eps / (2.0 * kPi);
    static const QuadratureRule rule = gauss_jacobi(48, 0.0);
    const auto profile = [m](double s) { return std::pow(1.0 + s * s, -m); };

    if (w < 1e-14) {
        // substitute s = tan(phi): 2 int_0^{pi/2} cos^{2m-2} phi dphi
        const auto g = [m](double phi) { return std::pow(std::cos(phi), 2 * m - 2); };
        return 2.0 * gl_integrate(g, 0.0, kPi / 2.0, rule);
    }

    const auto f = [&](double s) { return profile(s) * std::cos(w * s); };
    const double half = kPi / w;

    // Direct panels near the origin, then half-period panels whose
    // contributions alternate; repeated averaging of the partial sums
    // accelerates the alternating tail to near machine precision.
    const int direct = 8;
    double base = gl_integrate(f, 0.0, kPi / (2.0 * w), rule);
    for (int j = 1; j <= direct; ++j)
        base += gl_integrate(f, (2 * j - 1) * half / 2.0, (2 * j + 1) * half / 2.0, rule);

    const int tail_terms = 48;
    std::vector<double> partial;
    double s = 0.0;
    for (int j = direct + 1; j <= direct + tail_terms; ++j) {
        s += gl_integrate(f, (2 * j - 1) * half / 2.0, (2 * j + 1) * half / 2.0, rule);
        partial.push_back(s);
    }
    while (partial.size() > 1) {
        for (std::size_t i = 0; i + 1 < partial.size(); ++i)
            partial[i] = 0.5 * (partial[i] + partial[i + 1]);
        partial.pop_back();
    }
    return 2.0 * (base + partial.front());
}

double fourier_transform_closed(int m, double eps, double v) {
    const double w = std::abs(v) * eps / (2.0 * kPi);
    double s = 0.0;
    for (int k = 1; k <= m; ++k)
        s += kPi * to_double(coeff_beta(m - 1, k - 1)) * std::pow(w, k - 1);
    return std::exp(-w) * s;
}

CheckReport check_fourier_transform(int m, double eps, const std::vector<double>& v_list) {
    Stopwatch timer;
    CheckReport report;
    report.id = "fourier/m=" + std::to_string(m) + "/eps=" + fmt(eps);
    report.params = "v in {...}";
    report.tol = 1e-8;
    bool ok = true;
    for (double v : v_list) {
        const double numeric = fourier_transform_numeric(m, eps, v);
        const double closed = fourier_transform_closed(m, eps, v);
        report.measured.push_back(numeric);
        report.reference.push_back(closed);
        if (std::abs(numeric - closed) > report.tol) ok = false;
    }
    report.pass = ok;
    report.seconds = timer.seconds();
    return report;
}

CheckReport check_fd_reduction(int d, int m, double eps, const std::vector<double>& t_list) {
    Stopwatch timer;
    CheckReport report;
    report.id = "fd/d=" + std::to_string(d) + "/m=" + std::to_string(m) + "/eps=" + fmt(eps);
    report.params = "order >= 0.9 in t";
    report.tol = 0.9;

    const KernelParams params(d, m, eps, Family::main);
    const ExpansionSpec spec = make_main_expansion(params);

    // The configuration and the expansion share the axis eta, so the sup over
    // the sphere reduces to a sup over the polar angle.
    const int n_rho = 257;
    std::vector<Vec> pts;
    for (int i = 0; i < n_rho; ++i) {
        const double rho = kPi * i / (n_rho - 1);
        Vec x(d, 0.0);
        x[0] = std::cos(rho);
        x[1] = std::sin(rho);
        pts.push_back(std::move(x));
    }
    std::vector<double> expansion_vals;
    expansion_vals.reserve(pts.size());
    for (const auto& x : pts) expansion_vals.push_back(expansion_eval(spec, x));

    std::vector<double> logt, logerr;
    for (double t : t_list) {
        const auto config = to_point_charges(spec, t);
        double err = 0.0;
        for (std::size_t i = 0; i < pts.size(); ++i)
            err = std::max(err, std::abs(eval_point_charges(config, pts[i]) - expansion_vals[i]));
        report.measured.push_back(err);
        logt.push_back(std::log(t));
        logerr.push_back(std::log(err));
    }
    const double slope = lsq_slope(logt, logerr);
    report.reference = {slope};
    report.pass = slope >= report.tol;
    report.seconds = timer.seconds();
    return report;
}

CheckReport check_pole_inversion(int d, std::uint64_t seed) {
    Stopwatch timer;
    CheckReport report;
    report.id = "pole_inversion/d=" + std::to_string(d);
    report.params = "random 5-pole config";
    report.tol = 1e-12;

    SplitMix64 rng(seed);
    PointChargeConfig config;
    config.d = d;
    config.eta = Vec(d, 0.0);
    config.eta[0] = 1.0;
    config.kind = (d >= 3) ? ChargeKind::power : ChargeKind::log;
    config.constant = rng.uniform(-1.0, 1.0);
    std::vector<double> radii;
    for (int i = 0; i < 5; ++i) radii.push_back(rng.uniform(1.05, 3.0));
    std::sort(radii.rbegin(), radii.rend());
    for (double a : radii) config.terms.push_back({a, rng.uniform(-2.0, 2.0)});

    const auto inverted = invert_poles(config);
    const auto twice = invert_poles(inverted);

    double dev = 0.0, dev2 = 0.0;
    for (const auto& x : sphere_points(d, 256, seed + 1)) {
        const double base = eval_point_charges(config, x);
        dev = std::max(dev, std::abs(base - eval_point_charges(inverted, x)));
        dev2 = std::max(dev2, std::abs(base - eval_point_charges(twice, x)));
    }
    report.measured = {dev, dev2};
    report.reference = {0.0, 0.0};
    report.pass = dev <= 1e-12 && dev2 <= 1e-13;
    report.seconds = timer.seconds();
    return report;
}

CheckReport check_mean_value(int d, int m, double eps) {
    Stopwatch timer;
    CheckReport report;
    report.id = "mean_value/d=" + std::to_string(d) + "/m=" + std::to_string(m) +
                "/eps=" + fmt(eps);
    report.tol = 1e-10;

    const KernelParams params(d, m, eps, Family::main);
    const double average = zonal_integral(ZonalKernel::make(params)) / surface_area(d);
    const double center = expansion_eval(make_main_expansion(params), Vec(d, 0.0));
    report.measured = {average};
    report.reference = {center};
    report.pass = std::abs(average - center) <= report.tol * std::max(1.0, std::abs(center));
    report.seconds = timer.seconds();
    return report;
}

CheckReport check_harmonicity(int d, int m, double eps) {
    Stopwatch timer;
    CheckReport report;
    report.id = "harmonicity/d=" + std::to_string(d) + "/m=" + std::to_string(m) +
                "/eps=" + fmt(eps);
    report.params = "second-order stencil decay";
    report.tol = 1.8;

    const KernelParams params(d, m, eps, Family::main);
    const ExpansionSpec spec = make_main_expansion(params);
    SplitMix64 rng(7);
    std::vector<Vec> pts;
    for (int i = 0; i < 8; ++i) {
        Vec x(d);
        for (auto& c : x) c = rng.uniform(-0.4, 0.4);
        pts.push_back(std::move(x));
    }

    const std::vector<double> hs{0.02, 0.01, 0.005, 0.0025};
    std::vector<double> logh, logres;
    for (double h : hs) {
        double res = 0.0;
        for (const auto& x : pts) {
            double lap = 0.0;
            const double fx = expansion_eval(spec, x);
            for (int i = 0; i < d; ++i) {
                Vec xp = x, xm = x;
                xp[i] += h;
                xm[i] -= h;
                lap += expansion_eval(spec, xp) + expansion_eval(spec, xm) - 2.0 * fx;
            }
            res = std::max(res, std::abs(lap) / (h * h));
        }
        report.measured.push_back(res);
        logh.push_back(std::log(h));
        logres.push_back(std::log(res));
    }
    const double slope = lsq_slope(logh, logres);
    report.reference = {slope};
    report.pass = slope >= report.tol;
    report.seconds = timer.seconds();
    return report;
}

CheckReport check_distance_comparability() {
    Stopwatch timer;
    CheckReport report;
    report.id = "dist_compare";
    report.params = "100 x 101 grid in (eps, rho)";

    double lo = 1e9, hi = 0.0;
    for (int i = 1; i <= 100; ++i) {
        const double eps = i / 100.0;
        const double a = 1.0 + eps;
        for (int j = 0; j <= 100; ++j) {
            const double rho = kPi * j / 100.0;
            const double r = std::sqrt(a * a + 1.0 - 2.0 * a * std::cos(rho));
            const double ratio = r / (eps + rho);
            lo = std::min(lo, ratio);
            hi = std::max(hi, ratio);
        }
    }
    report.measured = {lo, hi};
    report.reference = {0.2, 2.0};
    report.pass = lo >= 0.2 && hi <= 2.0;
    report.seconds = timer.seconds();
    return report;
}

CheckReport check_q_vs_Q_rate(int m) {
    Stopwatch timer;
    CheckReport report;
    report.id = "q_vs_Q/m=" + std::to_string(m);
    report.params = "first-order agreement";
    report.tol = 0.9;

    const auto sol = solve_q(2, m);
    const auto Q = poly_Q(m);
    std::vector<double> logeps, logerr;
    double max_dev = 0.0;
    for (double eps : {0.02, 0.01, 0.005, 0.0025, 0.00125}) {
        const double a = 1.0 + eps;
        const double delta = 1.0 - 1.0 / (a * a);
        double dev = 0.0;
        for (int l = 1; l <= m; ++l)
            dev = std::max(dev, std::abs(sol.q[l].eval(delta) - Q[l - 1].eval(2.0 * eps)));
        max_dev = std::max(max_dev, dev);
        if (dev > 1e-15) {
            logeps.push_back(std::log(eps));
            logerr.push_back(std::log(dev));
        }
    }
    double slope = 1.0;
    if (logeps.size() >= 2) slope = lsq_slope(logeps, logerr);
    report.measured = {slope, max_dev};
    report.reference = {0.9, 0.0};
    report.pass = (max_dev < 1e-15) || slope >= 0.9;
    report.seconds = timer.seconds();
    return report;
}

CheckReport check_normalization(Family family, int d, int m, double eps, double reference,
                                double tol) {
    Stopwatch timer;
    CheckReport report;
    report.id = "normalization/" + family_name(family) + "/d=" + std::to_string(d) +
                "/m=" + std::to_string(m) + "/eps=" + fmt(eps);
    report.tol = tol;

    const auto kernel = ZonalKernel::make(KernelParams(d, m, eps, family));
    const double integral = kernel_integral(kernel);
    report.measured = {integral};
    report.reference = {reference};
    report.pass = std::abs(integral - reference) <= tol;
    report.seconds = timer.seconds();
    return report;
}

// --- suite ------------------------------------------------------------------

namespace {

struct Job {
    std::string id;
    std::function<CheckReport()> run;
};

}  // namespace

std::vector<CheckReport> run_suite(const SuiteOptions& options) {
    std::vector<Job> jobs;
    const std::uint64_t seed = options.seed;
    const std::vector<double> eps_loc{0.2, 0.1, 0.05, 0.025};
    auto add = [&jobs](std::string id, std::function<CheckReport()> fn) {
        jobs.push_back({std::move(id), std::move(fn)});
    };

    add("table1", [] { return regen_table1(); });
    add("closed_form_q", [] { return check_closed_form_q(); });
    add("dist_compare", [] { return check_distance_comparability(); });

    auto equiv_id = [](Family f, int d, int m, double eps) {
        return "equiv/" + family_name(f) + "/d=" + std::to_string(d) + "/m=" + std::to_string(m) +
               "/eps=" + fmt(eps);
    };
    for (int d = 2; d <= 5; ++d)
        for (int m = 1; m <= 5; ++m)
            for (double eps : {0.5, 0.1, 0.02})
                add(equiv_id(Family::main, d, m, eps),
                    [=] { return check_equivalence(Family::main, d, m, eps, 512, seed); });
    for (int m = 1; m <= 5; ++m)
        for (double eps : {0.5, 0.1})
            add(equiv_id(Family::s1_second, 2, m, eps),
                [=] { return check_equivalence(Family::s1_second, 2, m, eps, 512, seed); });
    for (int d = 2; d <= 5; ++d)
        for (int m = 1; m <= 4; ++m)
            for (double eps : {1.0, 0.1})
                add(equiv_id(Family::flat, d, m, eps),
                    [=] { return check_equivalence(Family::flat, d, m, eps, 512, seed); });

    auto norm_id = [](Family f, int d, int m, double eps) {
        return "normalization/" + family_name(f) + "/d=" + std::to_string(d) +
               "/m=" + std::to_string(m) + "/eps=" + fmt(eps);
    };
    for (int d = 2; d <= 4; ++d)
        for (int m = 1; m <= 3; ++m)
            for (double eps : {0.5, 0.1})
                add(norm_id(Family::colzani, d, m, eps),
                    [=] { return check_normalization(Family::colzani, d, m, eps, 1.0, 1e-10); });
    for (int m = 1; m <= 3; ++m)
        for (double eps : {0.5, 0.1}) {
            const double ref = kPi * factorial_d(2 * m - 2) / (factorial_d(m - 1) * factorial_d(m));
            add(norm_id(Family::s1_second, 2, m, eps),
                [=] { return check_normalization(Family::s1_second, 2, m, eps, ref, 1e-9); });
        }
    add(norm_id(Family::main, 3, 1, 1.0),
        [] { return check_normalization(Family::main, 3, 1, 1.0, kPi, 1e-10); });
    for (double eps : {1.0, 0.1})
        add(norm_id(Family::flat, 3, 1, eps),
            [=] { return check_normalization(Family::flat, 3, 1, eps, 2.0 * kPi, 1e-9); });

    auto loc_id = [](Family f, int d, int m) {
        return "localization/" + family_name(f) + "/d=" + std::to_string(d) +
               "/m=" + std::to_string(m);
    };
    for (int d = 2; d <= 4; ++d)
        for (int m = 1; m <= 4; ++m) {
            add(loc_id(Family::colzani, d, m), [=] {
                return fit_localization_constant(Family::colzani, d, m, m + d - 1, eps_loc);
            });
            add(loc_id(Family::main, d, m), [=] {
                return fit_localization_constant(Family::main, d, m, 2 * m + d - 2, eps_loc);
            });
            add(loc_id(Family::flat, d, m), [=] {
                return fit_localization_constant(Family::flat, d, m, 2 * m + d - 2, eps_loc);
            });
        }
    for (int m = 1; m <= 4; ++m)
        add(loc_id(Family::s1_second, 2, m),
            [=] { return fit_localization_constant(Family::s1_second, 2, m, 2 * m, eps_loc); });
    for (int m = 2; m <= 4; ++m)
        add("localization_negative/d=3/m=" + std::to_string(m),
            [=] { return check_negative_control(3, m, eps_loc); });

    const std::vector<double> eps_center{0.05, 0.025, 0.0125, 0.00625, 0.003125};
    for (int d = 2; d <= 5; ++d)
        for (int m = 1; m <= 4; ++m)
            add("center/d=" + std::to_string(d) + "/m=" + std::to_string(m),
                [=] { return check_center_asymptotics(d, m, eps_center); });

    for (int m = 1; m <= 4; ++m)
        for (double eps : {0.5, 0.1})
            add("fourier/m=" + std::to_string(m) + "/eps=" + fmt(eps),
                [=] { return check_fourier_transform(m, eps, {0.0, 2.0 * kPi, 4.0 * kPi}); });

    for (const auto& [d, m] : std::vector<std::pair<int, int>>{{3, 2}, {2, 2}, {4, 1}})
        add("fd/d=" + std::to_string(d) + "/m=" + std::to_string(m) + "/eps=0.5", [=] {
            const double eps = 0.5;
            return check_fd_reduction(d, m, eps, {eps / 4, eps / 8, eps / 16, eps / 32, eps / 64});
        });

    for (int d = 2; d <= 4; ++d)
        add("pole_inversion/d=" + std::to_string(d),
            [=] { return check_pole_inversion(d, seed + d); });

    for (const auto& [d, m, eps] : std::vector<std::tuple<int, int, double>>{
             {3, 1, 1.0}, {3, 2, 0.5}, {2, 2, 0.5}, {4, 3, 0.1}, {5, 1, 0.1}})
        add("mean_value/d=" + std::to_string(d) + "/m=" + std::to_string(m) + "/eps=" + fmt(eps),
            [=] { return check_mean_value(d, m, eps); });

    for (const auto& [d, m, eps] : std::vector<std::tuple<int, int, double>>{
             {3, 2, 0.5}, {2, 3, 0.5}, {4, 2, 0.1}})
        add("harmonicity/d=" + std::to_string(d) + "/m=" + std::to_string(m) + "/eps=" + fmt(eps),
            [=] { return check_harmonicity(d, m, eps); });

    for (int m = 2; m <= 5; ++m)
        add("q_vs_Q/m=" + std::to_string(m), [=] { return check_q_vs_Q_rate(m); });

    if (!options.filter.empty()) {
        std::erase_if(jobs, [&](const Job& j) { return j.id.rfind(options.filter, 0) != 0; });
    }

    int threads = options.threads;
    if (const char* env = std::getenv("LOCALIZE_THREADS")) {
        const int cap = std::atoi(env);
        if (cap > 0) threads = (threads > 0) ? std::min(threads, cap) : cap;
    }
    if (threads <= 0)
        threads = static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
    threads = std::min<int>(threads, std::max<int>(1, static_cast<int>(jobs.size())));

    std::vector<CheckReport> reports(jobs.size());
    std::atomic<std::size_t> cursor{0};
    auto worker = [&] {
        while (true) {
            const std::size_t i = cursor.fetch_add(1);
            if (i >= jobs.size()) break;
            reports[i] = jobs[i].run();
        }
    };
    std::vector<std::thread> pool;
    for (int i = 0; i < threads; ++i) pool.emplace_back(worker);
    for (auto& th : pool) th.join();

    std::sort(reports.begin(), reports.end(),
              [](const CheckReport& a, const CheckReport& b) { return a.id < b.id; });
    return reports;
}

std::string report_json(const std::vector<CheckReport>& reports, bool include_timings) {
    json arr = json::array();
    for (const auto& r : reports) {
        json j;
        j["id"] = r.id;
        j["params"] = r.params;
        j["measured"] = r.measured;
        j["reference"] = r.reference;
        j["tol"] = r.tol;
        j["pass"] = r.pass;
        j["seconds"] = include_timings ? r.seconds : 0.0;
        arr.push_back(j);
    }
    return arr.dump(2);
}

}  // namespace newtloc::verify
