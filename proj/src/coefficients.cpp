#include "newtloc/coefficients.hpp"

#include "newtloc/special.hpp"

#include <json.hpp>

#include <stdexcept>

namespace newtloc {

using json = nlohmann::json;

BigInt ballot(int l, int m) {
    if (l < 1) throw std::domain_error("ballot: l must be >= 1");
    if (m < 1) throw std::domain_error("ballot: m must be >= 1");
    if (l > m) return 0;
    BigInt v = factorial(2 * m - l - 1) * l;
    v /= factorial(m);
    v /= factorial(m - l);
    return v;
}

std::vector<std::vector<BigInt>> ballot_table_recursive(int m_max, int l_max) {
    if (m_max < 1 || l_max < 1) throw std::domain_error("ballot_table_recursive: bad bounds");
    // alpha[m][k], k up to max(l_max, m_max)+1 so the k >= m seed is present.
    const int kcap = std::max(l_max, m_max) + 1;
    std::vector<std::vector<BigInt>> alpha(m_max + 1, std::vector<BigInt>(kcap + 1, BigInt(0)));
    for (int m = 1; m <= m_max; ++m) {
        for (int k = m; k <= kcap; ++k) alpha[m][k] = (k == m) ? 1 : 0;
        for (int k = m - 1; k >= 2; --k) alpha[m][k] = alpha[m][k + 1] + alpha[m - 1][k - 1];
        if (m >= 2) alpha[m][1] = alpha[m][2];
    }
    std::vector<std::vector<BigInt>> rows(m_max);
    for (int m = 1; m <= m_max; ++m)
        rows[m - 1].assign(alpha[m].begin() + 1, alpha[m].begin() + 1 + l_max);
    return rows;
}

namespace {

// Coefficient multiplying q_{nu+l} in row nu+1 of the triangular system
// (rows nu = 1..m-1), as a polynomial in delta:
//   sum_{k=(l-nu)_+}^{l} (-1)^{l-k} binom(nu, l-k) (d/2+nu-1)_k delta^k / k!
PolyRational row_coefficient(int d, int nu, int l) {
    const Rational half_d_nu = Rational(d, 2) + nu - 1;
    std::vector<Rational> c(l + 1, Rational(0));
    const int k_lo = std::max(0, l - nu);
    for (int k = k_lo; k <= l; ++k) {
        Rational term = Rational(binomial(nu, l - k)) * pochhammer(half_d_nu, k);
        term /= Rational(factorial(k));
        if ((l - k) % 2 != 0) term = -term;
        c[k] = term;
    }
    return PolyRational(std::move(c));
}

json poly_to_json(const PolyRational& p) {
    json arr = json::array();
    for (const auto& coef : p.coefficients())
        arr.push_back(json::array({numer(coef).str(), denom(coef).str()}));
    return arr;
}

PolyRational poly_from_json(const json& arr, const std::string& var) {
    std::vector<Rational> c;
    for (const auto& pair : arr)
        c.push_back(rational_from_strings(pair.at(0).get<std::string>(),
                                          pair.at(1).get<std::string>()));
    return PolyRational(std::move(c), var);
}

}  // namespace

QSystemSolution solve_q(int d, int m) {
    if (d < 2) throw std::domain_error("solve_q: d must be >= 2");
    if (m < 1) throw std::domain_error("solve_q: m must be >= 1");

    QSystemSolution sol;
    sol.d = d;
    sol.m = m;
    sol.q.assign(m + 1, PolyRational("delta"));
    sol.q[m] = PolyRational::constant(1);

    // Rows nu = m-1 .. 1: the l = 0 coefficient is 1, so
    //   q_nu = - sum_{l=1}^{m-nu} coef(nu,l) * q_{nu+l}.
    for (int nu = m - 1; nu >= 1; --nu) {
        PolyRational acc("delta");
        for (int l = 1; l <= m - nu; ++l) acc += row_coefficient(d, nu, l) * sol.q[nu + l];
        sol.q[nu] = acc * Rational(-1);
    }

    // First row: q_0 = - sum_{l=1}^{m} (d/2)_{l-1} delta^{l-1} / (2 l!) q_l.
    PolyRational acc("delta");
    for (int l = 1; l <= m; ++l) {
        Rational c = pochhammer(Rational(d, 2), l - 1) / (Rational(2) * Rational(factorial(l)));
        acc += PolyRational::monomial(c, l - 1) * sol.q[l];
    }
    sol.q[0] = acc * Rational(-1);
    return sol;
}

std::vector<double> eval_q(const QSystemSolution& sol, double delta) {
    if (!(delta >= 0.0 && delta < 1.0)) throw std::domain_error("eval_q: delta must be in [0,1)");
    std::vector<double> out;
    out.reserve(sol.q.size());
    for (const auto& p : sol.q) out.push_back(p.eval(delta));
    return out;
}

BigInt coeff_A(unsigned k, unsigned l) {
    if (l > k) throw std::domain_error("coeff_A: l > k");
    BigInt acc = 0;
    for (unsigned nu = l; nu <= k; ++nu) {
        BigInt term = binomial(nu, l) * factorial(nu) * stirling2(k, nu);
        if ((nu - l) % 2 != 0) term = -term;
        acc += term;
    }
    return acc;
}

Rational coeff_beta(unsigned m, unsigned k) {
    if (k > m) throw std::domain_error("coeff_beta: k > m");
    Rational num(factorial(2 * m - k));
    num *= Rational(BigInt(1) << k);
    Rational den(factorial(k) * factorial(m - k) * factorial(m));
    den *= Rational(BigInt(1) << (2 * m));
    return num / den;
}

std::vector<PolyRational> poly_Q(int m) {
    if (m < 1) throw std::domain_error("poly_Q: m must be >= 1");
    std::vector<PolyRational> Q;
    Q.reserve(m);
    for (int l = 1; l <= m; ++l) {
        std::vector<Rational> c(m - l + 1, Rational(0));
        for (int k = l; k <= m; ++k) {
            Rational front = Rational(factorial(2 * m - k - 1) * l) /
                             Rational(factorial(m) * factorial(m - k));
            Rational a = Rational(coeff_A(k - 1, l - 1)) / Rational(factorial(k - 1));
            c[k - l] = front * a;
        }
        Q.emplace_back(std::move(c), "u");
    }
    return Q;
}

S1CoefficientSet make_s1_coefficients(int m) {
    if (m < 1) throw std::domain_error("make_s1_coefficients: m must be >= 1");
    S1CoefficientSet set;
    set.m = m;
    set.A.resize(m);
    for (int k = 0; k <= m - 1; ++k) {
        set.A[k].resize(k + 1);
        for (int l = 0; l <= k; ++l) set.A[k][l] = coeff_A(k, l);
    }
    set.beta.reserve(m);
    for (int k = 1; k <= m; ++k) set.beta.push_back(coeff_beta(m - 1, k - 1));
    set.Q = poly_Q(m);
    return set;
}

std::string QSystemSolution::to_json() const {
    json j;
    j["d"] = d;
    j["m"] = m;
    json qs = json::array();
    for (const auto& p : q) qs.push_back(poly_to_json(p));
    j["q"] = qs;
    return j.dump();
}

QSystemSolution QSystemSolution::from_json(const std::string& text) {
    json j = json::parse(text);
    QSystemSolution sol;
    sol.d = j.at("d").get<int>();
    sol.m = j.at("m").get<int>();
    for (const auto& arr : j.at("q")) sol.q.push_back(poly_from_json(arr, "delta"));
    return sol;
}

std::string S1CoefficientSet::to_json() const {
    json j;
    j["m"] = m;
    json a = json::array();
    for (const auto& row : A) {
        json r = json::array();
        for (const auto& v : row) r.push_back(v.str());
        a.push_back(r);
    }
    j["A"] = a;
    json b = json::array();
    for (const auto& r : beta) b.push_back(json::array({numer(r).str(), denom(r).str()}));
    j["beta"] = b;
    json qs = json::array();
    for (const auto& p : Q) qs.push_back(poly_to_json(p));
    j["Q"] = qs;
    return j.dump();
}

S1CoefficientSet S1CoefficientSet::from_json(const std::string& text) {
    json j = json::parse(text);
    S1CoefficientSet set;
    set.m = j.at("m").get<int>();
    for (const auto& row : j.at("A")) {
        std::vector<BigInt> r;
        for (const auto& v : row) r.push_back(bigint_from_string(v.get<std::string>()));
        set.A.push_back(std::move(r));
    }
    for (const auto& pair : j.at("beta"))
        set.beta.push_back(rational_from_strings(pair.at(0).get<std::string>(),
                                                 pair.at(1).get<std::string>()));
    for (const auto& arr : j.at("Q")) set.Q.push_back(poly_from_json(arr, "u"));
    return set;
}

}  // namespace newtloc
