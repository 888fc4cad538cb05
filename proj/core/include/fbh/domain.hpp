#pragma once

#include "fbh/types.hpp"

namespace fbh {

/// Throws DimensionMismatch unless n, m >= 1 and the point matches `sig`.
void check_dims(const DomainSig& sig, const Point& p);
void check_dims(const DomainSig& sig, const TangentVector& v);

/// rho(z, w) = |w|^2 - exp(-|z|^2). Negative inside, zero on the boundary.
double defining_value(const DomainSig& sig, const Point& p);

/// Strict interior test: rho(p) < -tol. Boundary points are never inside.
bool contains(const DomainSig& sig, const Point& p, double tol = 0.0);

/// Minkowski functional of D_{1,1}: the unique mu > 0 solving
///   |X|^2 / mu^2 + ln|Y|^2 - 2 ln mu = 0,
/// so that (X, Y) / mu lies on the boundary. Throws DegenerateDirection for
/// Y = 0 and NumericFailure if the solver does not converge.
double minkowski_functional(Complex x, Complex y, double tol = 1e-12);

/// |<w, beta> + exp(-|z|^2) <z, alpha>| at a boundary point; zero exactly for
/// vectors in the complex tangent space T^{1,0}_p. Throws NotOnBoundary when
/// |rho(p)| > boundary_tol.
double complex_tangent_residual(const DomainSig& sig, const Point& p,
                                const TangentVector& v,
                                double boundary_tol = 1e-10);

}  // namespace fbh
