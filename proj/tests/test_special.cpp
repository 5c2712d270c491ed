#include "newtloc/polynomial.hpp"
#include "newtloc/special.hpp"

#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

using namespace newtloc;

namespace {

// Explicit hypergeometric-style sum for the ultraspherical polynomial,
// kept independent of the recurrence it cross-checks:
//   C_l^{(mu)}(t) = sum_s (-1)^s (mu)_{l-s} / (s! (l-2s)!) (2t)^{l-2s}.
// Evaluated exactly over rationals: the alternating terms cancel too hard
// for doubles near l = 12.
double gegenbauer_sum(unsigned l, const Rational& mu, const Rational& t) {
    if (l == 0) return 1.0;
    Rational acc = 0;
    for (unsigned s = 0; s <= l / 2; ++s) {
        Rational term = pochhammer(mu, l - s);
        term /= Rational(factorial(s) * factorial(l - 2 * s));
        Rational p = 1;
        for (unsigned i = 0; i < l - 2 * s; ++i) p *= 2 * t;
        term *= p;
        acc += (s % 2 == 0) ? term : -term;
    }
    return to_double(acc);
}

// T_l(t) = (l/2) sum_s (-1)^s (l-s-1)! / (s! (l-2s)!) (2t)^{l-2s}, l >= 1.
double chebyshev_sum(unsigned l, const Rational& t) {
    if (l == 0) return 1.0;
    Rational acc = 0;
    for (unsigned s = 0; s <= l / 2; ++s) {
        Rational term(factorial(l - s - 1), factorial(s) * factorial(l - 2 * s));
        Rational p = 1;
        for (unsigned i = 0; i < l - 2 * s; ++i) p *= 2 * t;
        term *= p;
        acc += (s % 2 == 0) ? term : -term;
    }
    return to_double(acc * Rational(l, 2));
}

// Falling factorial u(u-1)...(u-nu+1) as an exact polynomial in u.
PolyRational falling_factorial(unsigned nu) {
    PolyRational p = PolyRational::constant(Rational(1), "u");
    for (unsigned i = 0; i < nu; ++i)
        p = p * PolyRational({Rational(-static_cast<int>(i)), Rational(1)}, "u");
    return p;
}

}  // namespace

TEST_CASE("pochhammer") {
    CHECK(pochhammer(Rational(7, 3), 0) == Rational(1));
    CHECK(pochhammer(Rational(1), 4) == Rational(24));
    CHECK(pochhammer(Rational(3, 2), 2) == Rational(15, 4));
    CHECK(pochhammer(Rational(-2), 4) == Rational(0));
}

TEST_CASE("gegenbauer point values") {
    CHECK(gegenbauer_c(0, Rational(1), 0.3) == doctest::Approx(1.0));
    CHECK(gegenbauer_c(2, Rational(1), 1.0) == doctest::Approx(3.0));
    CHECK(gegenbauer_c(2, Rational(1), 0.0) == doctest::Approx(-1.0));
    // normalization C_l(1) = binom(l + 2 mu - 1, l)
    for (unsigned l = 1; l <= 8; ++l)
        CHECK(gegenbauer_c(l, Rational(3, 2), 1.0) ==
              doctest::Approx(to_double(binomial(l + 2, l))).epsilon(1e-12));
    CHECK_THROWS_AS(gegenbauer_c(2, Rational(0), 0.5), std::domain_error);
}

TEST_CASE("gegenbauer recurrence agrees with the explicit sum") {
    for (const auto& mu : {Rational(1, 2), Rational(1), Rational(3, 2), Rational(2)})
        for (unsigned l = 0; l <= 12; ++l)
            for (int i = 0; i <= 100; ++i) {
                const Rational t(i - 50, 50);
                const double rec = gegenbauer_c(l, mu, to_double(t));
                const double sum = gegenbauer_sum(l, mu, t);
                CHECK(std::abs(rec - sum) <= 1e-12 * std::max(1.0, std::abs(sum)));
            }
}

TEST_CASE("chebyshev point values and explicit sum") {
    CHECK(chebyshev_t(1, 0.7) == doctest::Approx(0.7));
    CHECK(chebyshev_t(5, 1.0) == doctest::Approx(1.0));
    CHECK(chebyshev_t(2, 0.5) == doctest::Approx(-0.5));
    for (unsigned l = 0; l <= 12; ++l)
        for (int i = 0; i <= 100; ++i) {
            const Rational t(i - 50, 50);
            const double rec = chebyshev_t(l, to_double(t));
            const double sum = chebyshev_sum(l, t);
            CHECK(std::abs(rec - sum) <= 1e-12 * std::max(1.0, std::abs(sum)));
        }
}

TEST_CASE("chebyshev is the small-mu limit of gegenbauer") {
    const Rational mu(1, 1000000);
    for (unsigned l = 1; l <= 8; ++l)
        for (double t : {-0.9, -0.3, 0.0, 0.4, 1.0}) {
            const double limit = 0.5 * l * gegenbauer_c(l, mu, t) / to_double(mu);
            CHECK(std::abs(limit - chebyshev_t(l, t)) <= 1e-4);
        }
}

TEST_CASE("stirling2") {
    CHECK(stirling2(4, 4) == 1);
    CHECK(stirling2(3, 0) == 0);
    CHECK(stirling2(0, 0) == 1);
    CHECK(stirling2(3, 2) == 3);
    CHECK_THROWS_AS(stirling2(2, 3), std::domain_error);
}

TEST_CASE("stirling2 falling-factorial expansion is an exact identity") {
    for (unsigned k = 0; k <= 10; ++k) {
        PolyRational rhs("u");
        for (unsigned nu = 0; nu <= k; ++nu)
            rhs += falling_factorial(nu) * Rational(stirling2(k, nu));
        CHECK(rhs == PolyRational::monomial(Rational(1), k, "u"));
    }
}

TEST_CASE("surface area") {
    const double pi = std::numbers::pi;
    CHECK(surface_area(2) == doctest::Approx(2 * pi).epsilon(1e-14));
    CHECK(surface_area(3) == doctest::Approx(4 * pi).epsilon(1e-14));
    CHECK(surface_area(4) == doctest::Approx(2 * pi * pi).epsilon(1e-14));
    CHECK(surface_area(5) == doctest::Approx(8.0 * pi * pi / 3.0).epsilon(1e-14));
    CHECK_THROWS_AS(surface_area(1), std::domain_error);
    CHECK(surface_area_subsphere(2) == doctest::Approx(2.0));
    CHECK(surface_area_subsphere(3) == doctest::Approx(2 * pi).epsilon(1e-14));
}

TEST_CASE("rational arithmetic is exact") {
    std::mt19937_64 gen(12345);
    std::uniform_int_distribution<long> num(-1000000, 1000000);
    std::uniform_int_distribution<long> den(1, 1000000);
    for (int i = 0; i < 200; ++i) {
        const Rational a(num(gen), den(gen));
        const Rational b(num(gen), den(gen));
        CHECK((a + b) - b == a);
        CHECK(denom(a) > 0);
        CHECK(gcd(abs(numer(a)), denom(a)) == 1);
    }
}

TEST_CASE("binomial and factorial") {
    CHECK(binomial(10, 3) == 120);
    CHECK(binomial(3, 7) == 0);
    CHECK(factorial(0) == 1);
    CHECK(factorial(12) == 479001600);
}
