#pragma once

#include <vector>

namespace fbh::rootsolve {

/// Right end of the admissible interval, -2 ln b.
double t_max(double b);

/// 1 - b^2 e^t, accurate near t_max where it vanishes.
double one_minus_b2et(double b, double t);

/// g(t) = -t(1 - b^2 e^t) e^t / (2 ln b)
///        + (b^2 t e^t + 1 - b^2 e^t)^2 / (4 b^2 ln^2 b) - e^t
/// on [0, -2 ln b]. Throws InvalidArgument outside the closed interval.
double g_function(double b, double t);

/// h(t) = (b^4 t^2 e^t + (1 - b^2 e^t)^2 e^{-t}) / (t (1 - b^2 e^t)) on the
/// open interval (0, -2 ln b); singular at both ends.
double h_function(double b, double t);

/// Minimiser of h, the unique solution of b^2 e^t (t + 1) = 1. h(t_star) = 2b^2.
double t_star(double b);

/// Interior minimiser of g (g decreases, then increases back to 0 at t_max).
double g_minimizer(double b);

/// The unique zero of g in (0, -2 ln b). g > 0 to its left and g < 0 to its
/// right. Throws NumericFailure if the bracket cannot be established.
double solve_beta(double b, double tol = 1e-12);

/// All solutions of h(alpha) = v - 2b^2 in (0, -2 ln b), ascending: one root
/// (t_star) at v = 4b^2, two above. Each root is refined until the last
/// Newton step is below tol relative. Throws NoRootBranch when v < 4b^2.
std::vector<double> solve_alpha_roots(double b, double v, double tol = 1e-12);

struct BranchData {
  double b = 0.0;
  double t_max = 0.0;
  double beta = 0.0;
  double t_star = 0.0;
  std::vector<double> alpha_roots;  ///< empty when v < 4b^2
};

BranchData branch_data(double b, double v, double tol = 1e-12);

}  // namespace fbh::rootsolve
