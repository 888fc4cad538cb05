#include "fbh/kobayashi.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "fbh/domain.hpp"
#include "fbh/errors.hpp"
#include "fbh/rootsolve.hpp"

namespace fbh {

std::string_view to_string(Branch branch) {
  switch (branch) {
    case Branch::zero_vector: return "zero-vector";
    case Branch::center_minkowski: return "center-minkowski";
    case Branch::center_degenerate: return "center-degenerate";
    case Branch::x_zero: return "x-zero";
    case Branch::v_small: return "v-small";
    case Branch::v_large_alpha: return "v-large-alpha";
    case Branch::v_large_beta: return "v-large-beta";
  }
  return "unknown";
}

double tau_sq_v_small(double b, double x_abs2, double y_abs2) {
  const double lb = std::log(b);
  return -(x_abs2 - y_abs2 / (2.0 * b * b * lb)) / (2.0 * lb);
}

double tau_sq_alpha(double b, double x_abs2, double alpha) {
  return x_abs2 / (alpha * rootsolve::one_minus_b2et(b, alpha));
}

MetricResult metric_normal(double b, Complex x, Complex y) {
  if (!(b >= 0.0 && b < 1.0)) {
    throw InvalidArgument("metric_normal: b must lie in [0, 1), got " +
                          std::to_string(b));
  }
  MetricResult out;
  const double x2 = std::norm(x);
  const double y2 = std::norm(y);

  if (x2 == 0.0 && y2 == 0.0) {
    out.branch = Branch::zero_vector;
    return out;
  }

  if (b == 0.0) {
    if (y2 == 0.0) {
      out.branch = Branch::center_degenerate;
      return out;
    }
    out.branch = Branch::center_minkowski;
    out.k = minkowski_functional(x, y);
    out.k_squared = out.k * out.k;
    return out;
  }

  const double b2 = b * b;
  if (x2 == 0.0) {
    // The disk {0} x E sits inside D_{1,1}, which sits inside C x E.
    const double d = 1.0 - b2;
    out.branch = Branch::x_zero;
    out.k_squared = y2 / d + b2 * y2 / (d * d);
    out.k = std::sqrt(out.k_squared);
    return out;
  }

  const double v = y2 / x2;
  out.v = v;
  out.beta = rootsolve::solve_beta(b);
  const double small = tau_sq_v_small(b, x2, y2);
  if (v < 4.0 * b2) {
    out.branch = Branch::v_small;
    out.k_squared = small;
  } else {
    out.alpha_roots = rootsolve::solve_alpha_roots(b, v);
    double best_alpha = std::numeric_limits<double>::infinity();
    for (double alpha : out.alpha_roots) {
      best_alpha = std::min(best_alpha, tau_sq_alpha(b, x2, alpha));
    }
    if (best_alpha < small) {
      out.branch = Branch::v_large_alpha;
      out.k_squared = best_alpha;
    } else {
      out.branch = Branch::v_large_beta;
      out.k_squared = small;
    }
  }
  out.k = std::sqrt(out.k_squared);
  return out;
}

MetricResult metric(const Point& p, const TangentVector& v) {
  const DomainSig d11{1, 1};
  check_dims(d11, p);
  check_dims(d11, v);
  const NormalPosition normal = reduce_to_normal_position(p);
  const TangentVector pushed = normal.reduction.push_forward(p, v);
  MetricResult out = metric_normal(normal.b, pushed.dz(0), pushed.dw(0));
  out.reduction = normal.reduction;
  return out;
}

}  // namespace fbh
