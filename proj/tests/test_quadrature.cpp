#include "newtloc/quadrature.hpp"

#include "newtloc/special.hpp"

#include <doctest.h>

#include <cmath>
#include <numbers>

using namespace newtloc;

namespace {
constexpr double kPi = std::numbers::pi;

// int_{-1}^1 u^{2s} (1-u^2)^alpha du = Gamma(s+1/2) Gamma(alpha+1) / Gamma(s+alpha+3/2)
double even_moment(int s, double alpha) {
    return std::exp(std::lgamma(s + 0.5) + std::lgamma(alpha + 1.0) -
                    std::lgamma(s + alpha + 1.5));
}
}  // namespace

TEST_CASE("classical small rules") {
    const auto r1 = gauss_jacobi(1, 0.0);
    CHECK(r1.nodes[0] == doctest::Approx(0.0));
    CHECK(r1.weights[0] == doctest::Approx(2.0));

    const auto r2 = gauss_jacobi(2, 0.0);
    CHECK(r2.nodes[0] == doctest::Approx(-1.0 / std::sqrt(3.0)).epsilon(1e-14));
    CHECK(r2.nodes[1] == doctest::Approx(1.0 / std::sqrt(3.0)).epsilon(1e-14));
    CHECK(r2.weights[0] == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(r2.weights[1] == doctest::Approx(1.0).epsilon(1e-14));

    // int u^2 sqrt(1-u^2) du = pi/8 must already be exact at n = 2
    const auto rj = gauss_jacobi(2, 0.5);
    double s = 0.0;
    for (int i = 0; i < rj.n; ++i) s += rj.weights[i] * rj.nodes[i] * rj.nodes[i];
    CHECK(s == doctest::Approx(kPi / 8.0).epsilon(1e-13));

    CHECK_THROWS_AS(gauss_jacobi(0, 0.0), std::domain_error);
    CHECK_THROWS_AS(gauss_jacobi(4, -1.0), std::domain_error);
}

TEST_CASE("rule structure and moment exactness") {
    for (int n : {4, 16, 64})
        for (double alpha : {-0.5, 0.0, 0.5, 1.0}) {
            const auto rule = gauss_jacobi(n, alpha);
            REQUIRE(rule.nodes.size() == static_cast<std::size_t>(n));

            double wsum = 0.0;
            for (int i = 0; i < n; ++i) {
                CHECK(rule.weights[i] > 0.0);
                CHECK(rule.nodes[i] > -1.0);
                CHECK(rule.nodes[i] < 1.0);
                if (i > 0) CHECK(rule.nodes[i] > rule.nodes[i - 1]);
                wsum += rule.weights[i];
            }
            CHECK(std::abs(wsum - even_moment(0, alpha)) <= 1e-13 * even_moment(0, alpha));

            for (int degree = 0; degree <= 2 * n - 1; ++degree) {
                double s = 0.0;
                for (int i = 0; i < n; ++i) s += rule.weights[i] * std::pow(rule.nodes[i], degree);
                const double want = (degree % 2 == 1) ? 0.0 : even_moment(degree / 2, alpha);
                CHECK(std::abs(s - want) <= 1e-12 * std::max(1.0, std::abs(want)));
            }
        }
}

TEST_CASE("eigenvalue fallback agrees with the Newton route") {
    for (int n : {1, 2, 7, 64, 257})
        for (double alpha : {-0.5, 0.0, 0.5, 1.0}) {
            const auto newton = gauss_jacobi(n, alpha);
            const auto eigen = gauss_jacobi_eigen(n, alpha);
            for (int i = 0; i < n; ++i) {
                CHECK(std::abs(newton.nodes[i] - eigen.nodes[i]) <= 2e-13);
                CHECK(std::abs(newton.weights[i] - eigen.weights[i]) <=
                      2e-13 * std::max(1.0, newton.weights[i]));
            }
        }
}

TEST_CASE("poisson kernel zonal integral identity") {
    // omega_{d-1} int P(a eta, u) (1-u^2)^{(d-3)/2} du = a^{1-d}
    for (int d : {2, 3, 4, 5})
        for (double a : {1.2, 2.0}) {
            const auto rule = gauss_jacobi(256, (d - 3) / 2.0);
            double s = 0.0;
            for (int i = 0; i < rule.n; ++i)
                s += rule.weights[i] * poisson_zonal(d, a, rule.nodes[i]);
            s *= surface_area_subsphere(d);
            CHECK(s == doctest::Approx(std::pow(a, 1 - d)).epsilon(1e-11));
        }
}

TEST_CASE("colzani kernel integrates to one") {
    for (int d : {2, 3, 4})
        for (int m : {1, 2, 3})
            for (double eps : {1.0, 0.4, 0.1}) {
                const auto k = ZonalKernel::make(KernelParams(d, m, eps, Family::colzani));
                CHECK(std::abs(zonal_integral(k) - 1.0) <= 1e-10);
            }
}

TEST_CASE("main kernel integral reference value") {
    const auto k = ZonalKernel::make(KernelParams(3, 1, 1.0, Family::main));
    CHECK(std::abs(zonal_integral(k) - kPi) <= 1e-10);
    // analytic cross-check (a omega_d / 2) a^{1-d} for m = 1
    for (int d : {3, 4, 5})
        for (double eps : {0.5, 0.2}) {
            const auto k1 = ZonalKernel::make(KernelParams(d, 1, eps, Family::main));
            const double a = 1.0 + eps;
            const double want = 0.5 * a * surface_area(d) * std::pow(a, 1 - d);
            CHECK(zonal_integral(k1) == doctest::Approx(want).epsilon(1e-11));
        }
}

TEST_CASE("main kernel integral stays positive") {
    for (int d : {2, 3, 4, 5})
        for (int m : {1, 2, 3, 4})
            for (double eps : {0.8, 0.2, 0.05}) {
                const auto k = ZonalKernel::make(KernelParams(d, m, eps, Family::main));
                CHECK(zonal_integral(k) > 0.0);
            }
}

TEST_CASE("circle kernel integral closed form") {
    for (int m : {1, 2, 3})
        for (double eps : {0.5, 0.1}) {
            const auto k = ZonalKernel::make(KernelParams(2, m, eps, Family::s1_second));
            double ref = kPi;
            for (int i = 1; i <= 2 * m - 2; ++i) ref *= i;       // (2m-2)!
            for (int i = 1; i <= m - 1; ++i) ref /= i;           // /(m-1)!
            for (int i = 1; i <= m; ++i) ref /= i;               // /m!
            CHECK(std::abs(zonal_integral(k) - ref) <= 1e-9);
        }
}

TEST_CASE("flat integral") {
    for (double eps : {1.0, 0.5, 0.1}) {
        const auto k = ZonalKernel::make(KernelParams(3, 1, eps, Family::flat));
        CHECK(std::abs(flat_integral(k) - 2.0 * kPi) <= 1e-9);
    }
    // scale invariance in eps for fixed (d, m)
    for (int d : {2, 3, 5})
        for (int m : {1, 2, 4}) {
            const double ref =
                flat_integral(ZonalKernel::make(KernelParams(d, m, 1.0, Family::flat)));
            CHECK(ref > 0.0);
            for (double eps : {0.3, 0.07}) {
                const double v =
                    flat_integral(ZonalKernel::make(KernelParams(d, m, eps, Family::flat)));
                CHECK(std::abs(v - ref) <= 1e-9 * std::max(1.0, ref));
            }
        }
}

TEST_CASE("normalize_kernel") {
    const auto k = ZonalKernel::make(KernelParams(3, 1, 1.0, Family::main));
    const auto unit = normalize_kernel(k);
    CHECK(unit.scale == doctest::Approx(1.0 / kPi).epsilon(1e-10));
    CHECK(unit.normalization == doctest::Approx(1.0));
    CHECK(std::abs(zonal_integral(unit) - 1.0) <= 1e-10);

    const auto colz = normalize_kernel(ZonalKernel::make(KernelParams(3, 2, 0.5, Family::colzani)));
    CHECK(colz.scale == doctest::Approx(1.0).epsilon(1e-9));

    ZonalKernel flipped = k;
    flipped.scale = -1.0;
    CHECK_THROWS_AS(normalize_kernel(flipped), std::runtime_error);
}

TEST_CASE("family dispatch on integrals") {
    const auto flat = ZonalKernel::make(KernelParams(3, 1, 1.0, Family::flat));
    CHECK_THROWS_AS(zonal_integral(flat), std::domain_error);
    const auto main_k = ZonalKernel::make(KernelParams(3, 1, 1.0, Family::main));
    CHECK_THROWS_AS(flat_integral(main_k), std::domain_error);
    CHECK(kernel_integral(flat) == doctest::Approx(2.0 * kPi).epsilon(1e-9));
    CHECK(kernel_integral(main_k) == doctest::Approx(kPi).epsilon(1e-10));
}
