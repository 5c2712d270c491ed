#pragma once

#include "newtloc/rational.hpp"

namespace newtloc {

/// Gegenbauer (ultraspherical) polynomial C_l^{(mu)}(t), mu > 0, normalized
/// so that C_l^{(mu)}(1) = binom(l + 2*mu - 1, l). Three-term recurrence.
double gegenbauer_c(unsigned l, const Rational& mu, double t);

/// Chebyshev polynomial of the first kind, T_l(1) = 1.
double chebyshev_t(unsigned l, double t);

/// Stirling number of the second kind S_{k,nu}: coefficients expanding u^k
/// in falling factorials. Requires nu <= k.
BigInt stirling2(unsigned k, unsigned nu);

/// Lebesgue measure of the unit sphere S^{d-1} in R^d, d >= 2.
/// Gamma(d/2) is evaluated in closed form (integer and half-integer cases).
double surface_area(int d);

/// Measure of S^{d-2} as a subset of R^{d-1}; equals 2 for d = 2
/// (the two-point sphere S^0). Used by the zonal integral reduction.
double surface_area_subsphere(int d);

}  // namespace newtloc
