#pragma once

#include "newtloc/polynomial.hpp"
#include "newtloc/rational.hpp"

#include <string>
#include <vector>

namespace newtloc {

/// Ballot number for 1 <= l <= m: l*(2m-l-1)! / (m!*(m-l)!); zero for l > m.
/// The l = 1 column gives the Catalan numbers.
BigInt ballot(int l, int m);

/// Same table built by the defining recursion instead of the closed form:
/// alpha_k(m) = delta_{k,m} for k >= m, alpha_k(m) = alpha_{k+1}(m) +
/// alpha_{k-1}(m-1) for k = m-1..2, alpha_1(m) = alpha_2(m).
/// Returns rows m = 1..m_max, each with entries l = 1..l_max.
std::vector<std::vector<BigInt>> ballot_table_recursive(int m_max, int l_max);

/// Exact solution of the triangular coefficient system for the sphere kernel:
/// the polynomials q_0..q_m in delta, for a given dimension d and order m.
struct QSystemSolution {
    int d = 0;
    int m = 0;
    std::vector<PolyRational> q;  // indices 0..m, polynomials in delta

    std::string to_json() const;
    static QSystemSolution from_json(const std::string& text);
};

/// Solves the unit upper-triangular system row by row (back-substitution
/// over exact rationals, delta kept as a polynomial indeterminate).
QSystemSolution solve_q(int d, int m);

/// Horner evaluation of every q_l at a concrete delta in [0,1).
std::vector<double> eval_q(const QSystemSolution& sol, double delta);

/// A_{k,l} = sum_{nu=l}^{k} (-1)^{nu-l} binom(nu,l) nu! S_{k,nu}, 0 <= l <= k.
BigInt coeff_A(unsigned k, unsigned l);

/// Rational part r of the Fourier-transform coefficient beta_{m,k} = pi * r:
/// r = (2m-k)! 2^k / (k! (m-k)! m! 2^{2m}), 0 <= k <= m.
Rational coeff_beta(unsigned m, unsigned k);

/// The explicit circle-kernel polynomials Q_1..Q_m in u:
/// Q_l(u) = sum_{k=l}^{m} [l (2m-k-1)!/(m!(m-k)!)] [A_{k-1,l-1}/(k-1)!] u^{k-l}.
/// Q_m is identically 1 and Q_l(0) equals the ballot number alpha_l(m).
std::vector<PolyRational> poly_Q(int m);

/// Everything the d = 2 second kernel needs: the A table, the beta rational
/// parts (beta_{m-1,k-1} for k = 1..m) and the polynomials Q_1..Q_m.
struct S1CoefficientSet {
    int m = 0;
    std::vector<std::vector<BigInt>> A;  // A[k][l], 0 <= l <= k <= m-1
    std::vector<Rational> beta;          // beta[k-1] = rational part of beta_{m-1,k-1}
    std::vector<PolyRational> Q;         // Q[l-1] = Q_l(u)

    std::string to_json() const;
    static S1CoefficientSet from_json(const std::string& text);
};

S1CoefficientSet make_s1_coefficients(int m);

}  // namespace newtloc
