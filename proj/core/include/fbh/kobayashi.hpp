#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "fbh/automorphism.hpp"
#include "fbh/types.hpp"

namespace fbh {

/// Which closed-form case produced a metric value.
enum class Branch {
  zero_vector,        ///< (X, Y) = (0, 0)
  center_minkowski,   ///< b = 0, Y != 0: Minkowski functional
  center_degenerate,  ///< b = 0, Y = 0: the z-line is a copy of C
  x_zero,             ///< 0 < b < 1, X = 0
  v_small,            ///< 0 < b < 1, X != 0, v < 4b^2
  v_large_alpha,      ///< v >= 4b^2 and an alpha-root candidate is smallest
  v_large_beta,       ///< v >= 4b^2 and the v-small expression is smallest
};

std::string_view to_string(Branch branch);

struct MetricResult {
  double k = 0.0;
  double k_squared = 0.0;
  Branch branch = Branch::zero_vector;
  std::optional<double> v;     ///< |Y|^2 / |X|^2 when X != 0 and b > 0
  std::vector<double> alpha_roots;
  std::optional<double> beta;  ///< zero of g, reported whenever v is
  Automorphism reduction = Automorphism::identity({1, 1});
};

/// -(1 / (2 ln b)) (|X|^2 - |Y|^2 / (2 b^2 ln b)): the value realised by the
/// Blaschke-free candidate disks.
double tau_sq_v_small(double b, double x_abs2, double y_abs2);

/// |X|^2 / (alpha (1 - b^2 e^alpha)): the value realised by the Blaschke
/// candidate disks whose parameter solves the alpha equation.
double tau_sq_alpha(double b, double x_abs2, double alpha);

/// Kobayashi pseudometric of D_{1,1} at the normal-position base point (0, b).
/// Throws InvalidArgument for b outside [0, 1).
///
/// When v >= 4b^2 the alpha equation generally has two roots; the result is
/// the minimum over the v-small expression and every root expression, since
/// each is realised by a competing disk.
MetricResult metric_normal(double b, Complex x, Complex y);

/// Kobayashi pseudometric of D_{1,1} at an arbitrary interior point. The base
/// point is moved to (0, b) by an automorphism A and the vector is pushed
/// forward as v * J_A^T. Throws NotInterior / DimensionMismatch.
MetricResult metric(const Point& p, const TangentVector& v);

}  // namespace fbh
