#pragma once

#include <functional>
#include <string>
#include <vector>

#include "fbh/types.hpp"

namespace fbh::schwarz {

/// A holomorphic map F = (f, h): D_{1,1} -> D_{n,m}, holomorphic near
/// p = (0, 1) with F(p) = q = (0, ..., 0; 1, 0, ..., 0).
struct MapUnderTest {
  DomainSig target;
  std::function<Point(const Point&)> eval;
  /// Optional analytic Jacobian (rows: outputs, columns: (z, w)).
  std::function<CMatrix(const Point&)> jac;
  std::string label;
};

struct SchwarzReport {
  std::string label;
  DomainSig target;
  double lambda = 0.0;          ///< Re dh_1/dw(p)
  double lambda_imag = 0.0;     ///< Im dh_1/dw(p); zero for a qualifying map
  double lower_bound = 0.0;     ///< |1 - conj(h_1(0,0))|^2 / (1 - |h_1(0,0)|^2)
  double normal_residual = 0.0; ///< |conj(J)^T q^T - lambda p^T|
  double dh1_dz = 0.0;          ///< |dh_1/dz(p)|
  double tangential_norm = 0.0; ///< |dF/dz(p)| restricted to T^{1,0}_q
  double sqrt_lambda = 0.0;
  bool analytic_jacobian = false;
  bool pass_i = false;   ///< normal eigenvector with real lambda >= lower bound
  bool pass_ii = false;  ///< tangential operator norm <= sqrt(lambda)
};

/// p = (0, 1) in D_{1,1}.
Point boundary_point_p();
/// q = (0, ..., 0; 1, 0, ..., 0) in D_{n,m}.
Point boundary_point_q(DomainSig target);

/// Jacobian of `map` at `at`: the analytic one when supplied, otherwise
/// central differences along real and imaginary directions with step `step`.
/// Throws MapHypothesisViolation when the two directions disagree by more
/// than `holo_tol` (relative), i.e. the map is not holomorphic there.
CMatrix map_jacobian(const MapUnderTest& map, const Point& at,
                     double step = 1e-6, double holo_tol = 1e-6);

/// Audits both boundary Schwarz inequalities. Throws MapHypothesisViolation
/// when F(p) != q (to 1e-10) or the map is not holomorphic at p.
SchwarzReport audit(const MapUnderTest& map, double tol = 1e-8);

/// Maps into D_{n,m} known to satisfy the hypotheses: "embed", "rotation",
/// "squeeze t=0.5", "mobius c=0.1|0.3|0.5" and "embed+fixing-unitary".
std::vector<MapUnderTest> builtin_examples(DomainSig target);

/// Largest rho(F(x)) over a deterministic grid of interior points x of
/// D_{1,1}; negative when F maps the grid into the target domain.
double max_defining_value_on_grid(const MapUnderTest& map, int radial = 8,
                                  int angular = 12);

}  // namespace fbh::schwarz
