#include "newtloc/kernels.hpp"

#include "newtloc/special.hpp"

#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace newtloc {

using json = nlohmann::json;

namespace {

constexpr double kPi = std::numbers::pi;

double factorial_d(int n) {
    double f = 1.0;
    for (int i = 2; i <= n; ++i) f *= i;
    return f;
}

double pochhammer_d(double u, int k) {
    double p = 1.0;
    for (int i = 0; i < k; ++i) p *= u + i;
    return p;
}

double clamp_unit(double t) { return std::min(1.0, std::max(-1.0, t)); }

}  // namespace

double dot(const Vec& a, const Vec& b) {
    double s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

double norm(const Vec& a) { return std::sqrt(dot(a, a)); }

std::string family_name(Family f) {
    switch (f) {
        case Family::colzani: return "colzani";
        case Family::main: return "main";
        case Family::s1_second: return "s1_second";
        case Family::flat: return "flat";
    }
    return "?";
}

Family family_from_name(const std::string& name) {
    if (name == "colzani") return Family::colzani;
    if (name == "main") return Family::main;
    if (name == "s1_second" || name == "s1") return Family::s1_second;
    if (name == "flat") return Family::flat;
    throw std::domain_error("unknown kernel family: " + name);
}

KernelParams::KernelParams(int d_, int m_, double eps_, Family f)
    : d(d_), m(m_), eps(eps_), family(f) {
    validate();
}

void KernelParams::validate() const {
    if (d < 2) throw std::domain_error("kernel params: d must be >= 2");
    if (m < 1) throw std::domain_error("kernel params: m must be >= 1");
    if (!(eps > 0)) throw std::domain_error("kernel params: eps must be positive");
    if (family != Family::flat && eps > 1.0)
        throw std::domain_error("kernel params: eps must be in (0,1] for sphere families");
    if (family == Family::s1_second && d != 2)
        throw std::domain_error("kernel params: the second circle kernel requires d = 2");
}

double KernelParams::pole_radius() const {
    switch (family) {
        case Family::s1_second: return std::exp(eps);
        case Family::flat: return eps;
        default: return 1.0 + eps;
    }
}

double KernelParams::delta() const {
    if (family == Family::flat) throw std::domain_error("delta: undefined for the flat family");
    const double a = pole_radius();
    return 1.0 - 1.0 / (a * a);
}

double poisson_zonal(int d, double a, double t) {
    if (!(a > 1.0)) throw std::domain_error("poisson_zonal: a must be > 1");
    const double q = a * a + 1.0 - 2.0 * a * t;
    return (a * a - 1.0) / (a * surface_area(d) * std::pow(q, d / 2.0));
}

double colzani_zonal(const KernelParams& params, double t) {
    params.validate();
    double sum = 0.0;
    double sign = 1.0;
    for (int j = 1; j <= params.m; ++j) {
        const double aj = 1.0 + j * params.eps;
        const double binom_mj = to_double(binomial(params.m, j));
        sum += sign * binom_mj * std::pow(aj, params.d - 1) * poisson_zonal(params.d, aj, t);
        sign = -sign;
    }
    return sum;
}

double main_zonal(const KernelParams& params, double t) {
    params.validate();
    const int d = params.d, m = params.m;
    const double a = params.pole_radius();
    const double delta = params.delta();
    const double pref =
        pochhammer_d(d / 2.0, m - 1) / (2.0 * factorial_d(m)) *
        std::pow(a, 2 * m) * std::pow(delta, 2 * m - 1);
    const double q = a * a + 1.0 - 2.0 * a * t;
    return pref * std::pow(q, -d / 2.0 + 1.0 - m);
}

// ---------------------------------------------------------------------------
// Periodized circle kernel: direct lattice sum plus Euler-Maclaurin tails.

namespace {

// I_m(u0) = int_{u0}^infty (1+u^2)^{-m} du by the standard reduction.
// atan(1/u0) instead of pi/2 - atan(u0): u0 is large here and the
// subtraction would cancel.
double tail_integral(int m, double u0) {
    double I = (u0 > 0.0) ? std::atan(1.0 / u0) : kPi / 2.0 - std::atan(u0);  // I_1
    for (int j = 1; j < m; ++j)
        I = ((2 * j - 1) * I - u0 * std::pow(1.0 + u0 * u0, -j)) / (2 * j);
    return I;
}

double h_val(int m, double u) { return std::pow(1.0 + u * u, -m); }

double h_d1(int m, double u) {
    const double w = 1.0 + u * u;
    return -2.0 * m * u * std::pow(w, -m - 1);
}

double h_d3(int m, double u) {
    const double w = 1.0 + u * u;
    return 12.0 * m * (m + 1.0) * u * std::pow(w, -m - 2) -
           8.0 * m * (m + 1.0) * (m + 2.0) * u * u * u * std::pow(w, -m - 3);
}

// sum_{n=N+1}^infty f(c + 2 pi n) with f(y) = eps^{-1} (1 + (y/eps)^2)^{-m}.
double em_tail(int m, double eps, double c, long N) {
    const double step = 2.0 * kPi / eps;
    const double u1 = (c + 2.0 * kPi * (N + 1)) / eps;
    double s = tail_integral(m, u1) / (2.0 * kPi);
    s += 0.5 / eps * h_val(m, u1);
    s -= step / (12.0 * eps) * h_d1(m, u1);
    s += step * step * step / (720.0 * eps) * h_d3(m, u1);
    return s;
}

double lattice_sum(int m, double eps, double rho, long N) {
    auto f = [&](double y) { return h_val(m, y / eps) / eps; };
    double s = f(rho);
    for (long n = 1; n <= N; ++n) s += f(rho + 2.0 * kPi * n) + f(2.0 * kPi * n - rho);
    return s + em_tail(m, eps, rho, N) + em_tail(m, eps, -rho, N);
}

}  // namespace

double s1_series(const KernelParams& params, double rho, double tol) {
    params.validate();
    if (params.family != Family::s1_second)
        throw std::domain_error("s1_series: family must be s1_second");
    if (!(rho >= 0.0 && rho <= kPi)) throw std::domain_error("s1_series: rho must be in [0,pi]");
    const int m = params.m;
    const double eps = params.eps;
    const double pref = std::pow(2.0, 2 * m - 2) / m;

    long N = 48;
    double prev = pref * lattice_sum(m, eps, rho, N);
    for (; N <= (1L << 20); ) {
        N *= 2;
        const double cur = pref * lattice_sum(m, eps, rho, N);
        if (std::abs(cur - prev) <= 0.25 * tol) return cur;
        prev = cur;
    }
    throw std::runtime_error("s1_series: lattice sum did not converge");
}

double flat_closed_radial(const KernelParams& params, double r) {
    params.validate();
    if (params.family != Family::flat)
        throw std::domain_error("flat_closed_radial: family must be flat");
    const int d = params.d, m = params.m;
    const double eps = params.eps;
    const double pref = std::pow(2.0, 2 * m - 2) * pochhammer_d(d / 2.0, m - 1) / factorial_d(m);
    return pref * std::pow(eps, 2 * m - 1) *
           std::pow(r * r + eps * eps, -(2.0 * m + d - 2.0) / 2.0);
}

double flat_closed(const KernelParams& params, const Vec& x) {
    if (static_cast<int>(x.size()) != params.d - 1)
        throw std::domain_error("flat_closed: x must lie in R^{d-1}");
    return flat_closed_radial(params, norm(x));
}

// ---------------------------------------------------------------------------
// Derivative expansions.

namespace {

Vec default_axis(int d) {
    Vec e(d, 0.0);
    e[0] = 1.0;
    return e;
}

void check_eta(const Vec& eta, int d) {
    if (static_cast<int>(eta.size()) != d)
        throw std::domain_error("expansion: eta must lie in R^d");
    if (std::abs(norm(eta) - 1.0) > 1e-12)
        throw std::domain_error("expansion: eta must be a unit vector");
}

}  // namespace

ExpansionSpec make_main_expansion(const KernelParams& params, Vec eta) {
    params.validate();
    if (params.family != Family::main)
        throw std::domain_error("make_main_expansion: family must be main");
    if (eta.empty()) eta = default_axis(params.d);
    check_eta(eta, params.d);

    const int d = params.d, m = params.m;
    const double a = params.pole_radius();
    const double delta = params.delta();
    const auto q = eval_q(solve_q(d, m), delta);

    ExpansionSpec spec;
    spec.params = params;
    spec.eta = std::move(eta);
    spec.pole_radius = a;
    spec.weights.assign(m + 1, 0.0);
    spec.weights[0] = q[0];
    for (int l = 1; l <= m; ++l) {
        double w = q[l] * std::pow(delta, l - 1) * std::pow(a, l) / factorial_d(l);
        if (d >= 3) w /= (d - 2);
        spec.weights[l] = w;
    }
    return spec;
}

ExpansionSpec make_s1_expansion(const KernelParams& params, Vec eta) {
    params.validate();
    if (params.family != Family::s1_second)
        throw std::domain_error("make_s1_expansion: family must be s1_second");
    if (eta.empty()) eta = default_axis(2);
    check_eta(eta, 2);

    const int m = params.m;
    const double eps = params.eps;
    const double a = params.pole_radius();  // e^eps
    const auto Q = poly_Q(m);

    ExpansionSpec spec;
    spec.params = params;
    spec.eta = std::move(eta);
    spec.pole_radius = a;
    spec.weights.assign(m + 1, 0.0);
    spec.weights[0] = -0.5 * factorial_d(2 * m - 2) / (factorial_d(m) * factorial_d(m - 1));
    for (int l = 1; l <= m; ++l)
        spec.weights[l] =
            Q[l - 1].eval(2.0 * eps) * std::pow(2.0 * eps, l - 1) * std::pow(a, l) / factorial_d(l);
    return spec;
}

ExpansionSpec make_flat_expansion(const KernelParams& params) {
    params.validate();
    if (params.family != Family::flat)
        throw std::domain_error("make_flat_expansion: family must be flat");

    const int d = params.d, m = params.m;
    const double eps = params.eps;

    ExpansionSpec spec;
    spec.params = params;
    spec.eta.assign(d, 0.0);
    spec.eta[d - 1] = -1.0;  // pole below the hyperplane x_d = 0
    spec.pole_radius = eps;
    spec.weights.assign(m + 1, 0.0);
    // With eta = -e_d the sign (-1)^l of d_d^l cancels against (eta.grad)^l.
    for (int l = 1; l <= m; ++l) {
        double w = std::pow(2.0, l - 1) * factorial_d(2 * m - l - 1) /
                   (factorial_d(l - 1) * factorial_d(m) * factorial_d(m - l));
        if (d >= 3) w /= (d - 2);
        spec.weights[l] = w * std::pow(eps, l - 1);
    }
    return spec;
}

double expansion_eval(const ExpansionSpec& spec, const Vec& x) {
    const int d = spec.params.d;
    const int m = spec.params.m;
    if (static_cast<int>(x.size()) != d) throw std::domain_error("expansion_eval: x must lie in R^d");

    Vec diff(d);  // pole - x
    for (int i = 0; i < d; ++i) diff[i] = spec.pole_radius * spec.eta[i] - x[i];
    const double r = norm(diff);
    if (r == 0.0) throw std::domain_error("expansion_eval: x coincides with the pole");
    const double cosg = clamp_unit(dot(diff, spec.eta) / r);

    double v;
    if (d >= 3) {
        v = spec.weights[0] * std::pow(r, 2 - d);
        const Rational mu(d - 2, 2);
        for (int l = 1; l <= m; ++l)
            v += spec.weights[l] * factorial_d(l) * gegenbauer_c(l, mu, cosg) *
                 std::pow(r, 2 - d - l);
    } else {
        v = spec.weights[0];
        for (int l = 1; l <= m; ++l)
            v += spec.weights[l] * factorial_d(l - 1) * chebyshev_t(l, cosg) * std::pow(r, -l);
    }
    return v;
}

double s1_expansion(const KernelParams& params, const Vec& x) {
    return expansion_eval(make_s1_expansion(params), x);
}

double flat_expansion(const KernelParams& params, const Vec& x) {
    return expansion_eval(make_flat_expansion(params), x);
}

// ---------------------------------------------------------------------------
// Point-charge configurations.

PointChargeConfig to_point_charges(const ExpansionSpec& spec, double t) {
    const int d = spec.params.d, m = spec.params.m;
    const double eps = spec.params.eps;
    if (!(t > 0.0)) throw std::domain_error("to_point_charges: step t must be positive");
    if (t >= eps / m)
        throw std::domain_error("to_point_charges: step t >= eps/m would move a pole inside the ball");

    const double a = spec.pole_radius;
    std::vector<double> b(m + 1, 0.0);
    for (int l = 1; l <= m; ++l) {
        const double wl = spec.weights[l] * std::pow(t, -l);
        for (int k = 0; k <= l; ++k) {
            double c = wl * to_double(binomial(l, k));
            if ((l - k) % 2 != 0) c = -c;
            b[k] += c;
        }
    }

    PointChargeConfig config;
    config.d = d;
    config.eta = spec.eta;
    config.kind = (d >= 3) ? ChargeKind::power : ChargeKind::log;
    if (d >= 3)
        b[0] += spec.weights[0];
    else
        config.constant = spec.weights[0];
    for (int k = 0; k <= m; ++k) config.terms.push_back({a - k * t, b[k]});
    return config;
}

double eval_point_charges(const PointChargeConfig& config, const Vec& x) {
    const int d = config.d;
    if (static_cast<int>(x.size()) != d)
        throw std::domain_error("eval_point_charges: x must lie in R^d");
    double v = config.constant;
    Vec diff(d);
    for (const auto& term : config.terms) {
        for (int i = 0; i < d; ++i) diff[i] = x[i] - term.a * config.eta[i];
        const double r = norm(diff);
        if (r == 0.0) throw std::domain_error("eval_point_charges: x coincides with a pole");
        v += (config.kind == ChargeKind::power) ? term.b * std::pow(r, 2 - d)
                                                : term.b * std::log(1.0 / r);
    }
    return v;
}

PointChargeConfig invert_poles(const PointChargeConfig& config) {
    PointChargeConfig out;
    out.d = config.d;
    out.eta = config.eta;
    out.kind = config.kind;
    out.constant = config.constant;
    for (const auto& term : config.terms) {
        if (term.a == 1.0) throw std::domain_error("invert_poles: pole on the unit sphere");
        PointChargeConfig::Term t;
        t.a = 1.0 / term.a;
        if (config.kind == ChargeKind::power) {
            t.b = term.b * std::pow(term.a, 2 - config.d);
        } else {
            t.b = term.b;
            out.constant += term.b * std::log(1.0 / term.a);
        }
        out.terms.push_back(t);
    }
    std::sort(out.terms.begin(), out.terms.end(),
              [](const auto& l, const auto& r) { return l.a > r.a; });
    return out;
}

std::string PointChargeConfig::to_json() const {
    json j;
    j["d"] = d;
    j["eta"] = eta;
    j["kind"] = (kind == ChargeKind::power) ? "power" : "log";
    j["constant"] = constant;
    json terms_j = json::array();
    for (const auto& term : terms) terms_j.push_back({{"a", term.a}, {"b", term.b}});
    j["terms"] = terms_j;
    return j.dump();
}

PointChargeConfig PointChargeConfig::from_json(const std::string& text) {
    json j = json::parse(text);
    PointChargeConfig config;
    config.d = j.at("d").get<int>();
    config.eta = j.at("eta").get<std::vector<double>>();
    const auto kind = j.at("kind").get<std::string>();
    if (kind == "power")
        config.kind = ChargeKind::power;
    else if (kind == "log")
        config.kind = ChargeKind::log;
    else
        throw std::domain_error("point charge config: unknown kind " + kind);
    config.constant = j.at("constant").get<double>();
    for (const auto& term : j.at("terms"))
        config.terms.push_back({term.at("a").get<double>(), term.at("b").get<double>()});
    return config;
}

ZonalKernel ZonalKernel::make(const KernelParams& params) {
    params.validate();
    ZonalKernel k;
    k.params = params;
    return k;
}

double ZonalKernel::operator()(double t) const {
    switch (params.family) {
        case Family::colzani: return scale * colzani_zonal(params, t);
        case Family::main: return scale * main_zonal(params, t);
        case Family::s1_second: return scale * s1_series(params, std::acos(clamp_unit(t)), series_tol);
        case Family::flat:
            throw std::domain_error("zonal evaluation: flat kernels live on R^{d-1}");
    }
    return 0.0;
}

double ZonalKernel::radial(double r) const {
    if (params.family != Family::flat)
        throw std::domain_error("radial evaluation: only for the flat family");
    return scale * flat_closed_radial(params, r);
}

}  // namespace newtloc
