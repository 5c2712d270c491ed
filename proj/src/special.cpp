#include "newtloc/special.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace newtloc {

double gegenbauer_c(unsigned l, const Rational& mu, double t) {
    if (mu <= 0) throw std::domain_error("gegenbauer_c: mu must be positive");
    const double m = to_double(mu);
    if (l == 0) return 1.0;
    double cm1 = 1.0;        // C_0
    double c = 2.0 * m * t;  // C_1
    for (unsigned k = 2; k <= l; ++k) {
        double next = (2.0 * t * (k + m - 1.0) * c - (k + 2.0 * m - 2.0) * cm1) / k;
        cm1 = c;
        c = next;
    }
    return c;
}

double chebyshev_t(unsigned l, double t) {
    if (l == 0) return 1.0;
    double cm1 = 1.0;
    double c = t;
    for (unsigned k = 2; k <= l; ++k) {
        double next = 2.0 * t * c - cm1;
        cm1 = c;
        c = next;
    }
    return c;
}

BigInt stirling2(unsigned k, unsigned nu) {
    if (nu > k) throw std::domain_error("stirling2: nu > k");
    // S_{k,nu} = nu*S_{k-1,nu} + S_{k-1,nu-1}, S_{0,0} = 1.
    std::vector<BigInt> row(k + 1, BigInt(0));
    row[0] = 1;
    for (unsigned i = 1; i <= k; ++i) {
        for (unsigned j = std::min(i, k); j >= 1; --j) row[j] = BigInt(j) * row[j] + row[j - 1];
        row[0] = 0;
    }
    return row[nu];
}

double surface_area(int d) {
    if (d < 2) throw std::domain_error("surface_area: d must be >= 2");
    const double pi = std::numbers::pi;
    if (d % 2 == 0) {
        // Gamma(d/2) = (d/2 - 1)!
        double g = 1.0;
        for (int i = 2; i <= d / 2 - 1; ++i) g *= i;
        return 2.0 * std::pow(pi, d / 2.0) / g;
    }
    // d = 2p+1: omega_d = 2 * pi^p * 4^p * p! / (2p)!
    const int p = (d - 1) / 2;
    double v = 2.0 * std::pow(pi, p) * std::pow(4.0, p);
    for (int i = 1; i <= p; ++i) v *= i;
    for (int i = 1; i <= 2 * p; ++i) v /= i;
    return v;
}

double surface_area_subsphere(int d) {
    if (d < 2) throw std::domain_error("surface_area_subsphere: d must be >= 2");
    if (d == 2) return 2.0;  // S^0 = {-1, +1}, counting measure
    return surface_area(d - 1);
}

}  // namespace newtloc
