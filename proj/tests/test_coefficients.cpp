#include "newtloc/coefficients.hpp"

#include <doctest.h>

#include <vector>

using namespace newtloc;

namespace {

// Row-by-row restatement of the triangular system, written independently of
// the solver: row 0 and rows nu = 1..m-1 must vanish identically in delta
// once the solved polynomials are substituted.
PolyRational system_row(const QSystemSolution& sol, int nu) {
    const int d = sol.d, m = sol.m;
    PolyRational acc("delta");
    if (nu == 0) {
        acc += sol.q[0];
        for (int l = 1; l <= m; ++l) {
            const Rational c =
                pochhammer(Rational(d, 2), l - 1) / (Rational(2) * Rational(factorial(l)));
            acc += PolyRational::monomial(c, l - 1) * sol.q[l];
        }
        return acc;
    }
    for (int l = 0; l <= m - nu; ++l) {
        PolyRational coef("delta");
        for (int k = std::max(0, l - nu); k <= l; ++k) {
            Rational term = Rational(binomial(nu, l - k)) *
                            pochhammer(Rational(d, 2) + nu - 1, k) / Rational(factorial(k));
            if ((l - k) % 2 != 0) term = -term;
            coef += PolyRational::monomial(term, k);
        }
        acc += coef * sol.q[nu + l];
    }
    return acc;
}

}  // namespace

TEST_CASE("ballot closed form") {
    CHECK(ballot(1, 5) == 14);
    CHECK(ballot(3, 7) == 90);
    CHECK(ballot(3, 8) == 297);
    for (int m = 1; m <= 10; ++m) CHECK(ballot(m, m) == 1);
    CHECK(ballot(5, 4) == 0);
    CHECK_THROWS_AS(ballot(0, 3), std::domain_error);
}

TEST_CASE("catalan column") {
    const long long catalan[] = {1, 1, 2, 5, 14, 42, 132, 429, 1430, 4862};
    for (int n = 0; n <= 9; ++n) CHECK(ballot(1, n + 1) == catalan[n]);
}

TEST_CASE("recursion agrees with the closed form") {
    const auto table = ballot_table_recursive(12, 12);
    for (int m = 1; m <= 12; ++m)
        for (int l = 1; l <= 12; ++l) CHECK(table[m - 1][l - 1] == ballot(l, m));
}

TEST_CASE("forward differences of the ballot rows") {
    // D^nu alpha_nu(m) = (-1)^nu delta_{nu,m}
    for (int m = 1; m <= 10; ++m)
        for (int nu = 1; nu <= m; ++nu) {
            BigInt acc = 0;
            for (int k = 0; k <= nu; ++k) {
                BigInt term = binomial(nu, k) * ballot(nu + k, m);
                if ((nu + k) % 2 != 0) term = -term;
                acc += term;
            }
            const BigInt want = (nu == m) ? ((nu % 2 == 0) ? 1 : -1) : 0;
            CHECK(acc == want);
        }
}

TEST_CASE("solve_q small orders") {
    const auto s1 = solve_q(5, 1);
    CHECK(s1.q[0] == PolyRational::constant(Rational(-1, 2)));
    CHECK(s1.q[1] == PolyRational::constant(Rational(1)));

    const auto s2 = solve_q(3, 2);
    CHECK(s2.q[0] == PolyRational({Rational(-1, 2), Rational(3, 8)}));
    CHECK(s2.q[1] == PolyRational({Rational(1), Rational(-3, 2)}));
    CHECK(s2.q[2] == PolyRational::constant(Rational(1)));

    const auto s3 = solve_q(3, 3);
    CHECK(s3.q[2] == PolyRational({Rational(2), Rational(-5, 2)}));
}

TEST_CASE("solve_q structural invariants") {
    for (int d = 2; d <= 6; ++d)
        for (int m = 1; m <= 8; ++m) {
            const auto sol = solve_q(d, m);
            CHECK(sol.q[m] == PolyRational::constant(Rational(1)));
            for (int l = 0; l <= m; ++l) CHECK(sol.q[l].degree() <= m - l);
            CHECK(sol.q[0].coeff(0) == -Rational(ballot(1, m)) / 2);
            CHECK(sol.q[0].coeff(m) == 0);  // q_0 has degree m-1
            for (int l = 1; l <= m; ++l) CHECK(sol.q[l].coeff(0) == Rational(ballot(l, m)));
        }
}

TEST_CASE("solved polynomials satisfy every system row exactly") {
    for (int d = 2; d <= 6; ++d)
        for (int m = 1; m <= 8; ++m) {
            const auto sol = solve_q(d, m);
            for (int nu = 0; nu <= m - 1; ++nu) CHECK(system_row(sol, nu).is_zero());
        }
}

TEST_CASE("alpha_{l,k} is a polynomial in d of degree at most k") {
    // The (k+1)-th forward difference in d of a degree-k polynomial vanishes.
    for (int m = 1; m <= 6; ++m) {
        std::vector<QSystemSolution> sols;
        for (int d = 2; d <= m + 4; ++d) sols.push_back(solve_q(d, m));
        for (int l = 0; l <= m; ++l)
            for (int k = 0; k <= m - l; ++k) {
                Rational diff = 0;
                for (int j = 0; j <= k + 1; ++j) {
                    Rational term = Rational(binomial(k + 1, j)) * sols[j].q[l].coeff(k);
                    if ((k + 1 - j) % 2 != 0) term = -term;
                    diff += term;
                }
                CHECK(diff == 0);
            }
    }
}

TEST_CASE("eval_q") {
    const auto s = solve_q(3, 2);
    const auto v0 = eval_q(s, 0.0);
    CHECK(v0[0] == doctest::Approx(-0.5));
    CHECK(v0[1] == doctest::Approx(1.0));
    CHECK(v0[2] == doctest::Approx(1.0));
    const auto v1 = eval_q(s, 0.1);
    CHECK(v1[0] == doctest::Approx(-0.4625).epsilon(1e-14));
    CHECK(v1[1] == doctest::Approx(0.85).epsilon(1e-14));
    CHECK(v1[2] == doctest::Approx(1.0));
    const auto m1 = eval_q(solve_q(5, 1), 0.5);
    CHECK(m1[0] == doctest::Approx(-0.5));
    CHECK(m1[1] == doctest::Approx(1.0));
    CHECK_THROWS_AS(eval_q(s, 1.0), std::domain_error);
    CHECK_THROWS_AS(eval_q(s, -0.01), std::domain_error);
}

TEST_CASE("coeff_A") {
    CHECK(coeff_A(0, 0) == 1);
    CHECK(coeff_A(1, 0) == -1);
    for (unsigned k = 0; k <= 8; ++k) CHECK(coeff_A(k, k) == factorial(k));
    CHECK_THROWS_AS(coeff_A(2, 3), std::domain_error);
}

TEST_CASE("coeff_A matches the power-series identity") {
    // sum_n n^{k-1} t^n = sum_l A_{k-1,l-1} (1-t)^{-l}; compare both sides
    // numerically at a few |t| < 1.
    for (unsigned k = 1; k <= 6; ++k)
        for (double t : {0.1, 0.35, -0.4}) {
            double lhs = 0.0;
            double tn = 1.0;
            for (int n = 0; n <= 400; ++n) {
                lhs += std::pow(static_cast<double>(n), static_cast<double>(k - 1)) * tn;
                tn *= t;
            }
            double rhs = 0.0;
            for (unsigned l = 1; l <= k; ++l)
                rhs += to_double(coeff_A(k - 1, l - 1)) * std::pow(1.0 - t, -static_cast<double>(l));
            CHECK(lhs == doctest::Approx(rhs).epsilon(1e-10));
        }
}

TEST_CASE("coeff_beta") {
    CHECK(coeff_beta(0, 0) == Rational(1));
    CHECK(coeff_beta(1, 0) == Rational(1, 2));
    CHECK(coeff_beta(1, 1) == Rational(1, 2));
    CHECK_THROWS_AS(coeff_beta(1, 2), std::domain_error);
}

TEST_CASE("poly_Q") {
    const auto q1 = poly_Q(1);
    CHECK(q1.size() == 1);
    CHECK(q1[0] == PolyRational::constant(Rational(1), "u"));
    for (int m = 1; m <= 8; ++m) {
        const auto Q = poly_Q(m);
        CHECK(Q[m - 1] == PolyRational::constant(Rational(1), "u"));
        for (int l = 1; l <= m; ++l) CHECK(Q[l - 1].coeff(0) == Rational(ballot(l, m)));
    }
}

TEST_CASE("json round trip") {
    for (int d : {2, 3, 5})
        for (int m : {1, 3, 6}) {
            const auto sol = solve_q(d, m);
            const auto back = QSystemSolution::from_json(sol.to_json());
            CHECK(back.d == sol.d);
            CHECK(back.m == sol.m);
            REQUIRE(back.q.size() == sol.q.size());
            for (std::size_t i = 0; i < sol.q.size(); ++i) CHECK(back.q[i] == sol.q[i]);
        }
    for (int m : {1, 2, 5}) {
        const auto set = make_s1_coefficients(m);
        const auto back = S1CoefficientSet::from_json(set.to_json());
        CHECK(back.m == set.m);
        CHECK(back.A == set.A);
        CHECK(back.beta == set.beta);
        REQUIRE(back.Q.size() == set.Q.size());
        for (std::size_t i = 0; i < set.Q.size(); ++i) CHECK(back.Q[i] == set.Q[i]);
    }
}
