#pragma once

#include "newtloc/kernels.hpp"

#include <vector>

namespace newtloc {

/// Gauss-Jacobi rule for the symmetric weight (1-u^2)^alpha on [-1,1]:
/// exact for polynomials of degree <= 2n-1. Nodes strictly increasing.
struct QuadratureRule {
    std::vector<double> nodes;
    std::vector<double> weights;
    double alpha = 0.0;
    int n = 0;
};

/// Nodes by Newton iteration on the orthonormal recurrence, falling back to
/// the tridiagonal eigenvalue method if the iteration misbehaves; weights
/// from the Christoffel function.
QuadratureRule gauss_jacobi(int n, double alpha);

/// The fallback path on its own (symmetric tridiagonal QL eigenvalues);
/// exposed so the two node routes can be cross-checked.
QuadratureRule gauss_jacobi_eigen(int n, double alpha);

/// Surface integral of a sphere-family kernel,
///   omega_{d-1} int_{-1}^{1} F(u) (1-u^2)^{(d-3)/2} du,
/// with node doubling until two successive estimates agree to 1e-11
/// relative (the convergence certificate).
double zonal_integral(const ZonalKernel& kernel);

/// Integral of a flat-family kernel over R^{d-1}, reduced to the radial
/// integral; panel quadrature on [0, 100 eps] plus an analytic power-series
/// tail. Same doubling certificate as zonal_integral.
double flat_integral(const ZonalKernel& kernel);

/// Integral over the kernel's own domain (dispatches on family).
double kernel_integral(const ZonalKernel& kernel);

/// Returns the kernel rescaled to unit integral; `normalization` of the
/// result is set to 1.
ZonalKernel normalize_kernel(const ZonalKernel& kernel);

}  // namespace newtloc
