#include "fbh/rootsolve.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "fbh/detail/bracket.hpp"
#include "fbh/errors.hpp"

namespace fbh::rootsolve {

namespace {

// Rounding slack for arguments computed as -2 ln b by callers.
constexpr double kEndpointSlack = 1e-13;

void check_b(double b) {
  if (!(b > 0.0 && b < 1.0)) {
    throw InvalidArgument("b must lie in (0, 1), got " + std::to_string(b));
  }
}

// q(t) = b^2 t e^t / (1 - b^2 e^t) increases from 0 to +inf on
// [0, t_max), and h = b^2 (q + 1/q). Solving q(t) = q0 is equivalent to
// b^2 e^t (t + q0) - q0 = 0, which is smooth and increasing on [0, t_max].
// The equation is convex in t, so Newton converges to full relative
// precision even for roots near 0 (v large). `rel_tol` bounds the last step.
double solve_q(double b, double q0, double rel_tol) {
  const double b2 = b * b;
  auto f = [&](double t) { return b2 * std::exp(t) * (t + q0) - q0; };
  auto df = [&](double t) { return b2 * std::exp(t) * (t + q0 + 1.0); };
  return detail::safeguarded_newton(f, df, 0.0, t_max(b), 0.0,
                                    "solve_alpha_roots", rel_tol)
      .x;
}

}  // namespace

double t_max(double b) {
  check_b(b);
  return -2.0 * std::log(b);
}

double one_minus_b2et(double b, double t) {
  return -std::expm1(t + 2.0 * std::log(b));
}

double g_function(double b, double t) {
  const double tm = t_max(b);
  if (!(t >= -kEndpointSlack && t <= tm * (1.0 + kEndpointSlack))) {
    throw InvalidArgument("g_function: t outside [0, -2 ln b]");
  }
  const double lb = std::log(b);
  const double e = std::exp(t);
  const double om = one_minus_b2et(b, t);
  const double mixed = b * b * t * e + om;
  return -t * om * e / (2.0 * lb) + mixed * mixed / (4.0 * b * b * lb * lb) - e;
}

double h_function(double b, double t) {
  const double tm = t_max(b);
  if (!(t > 0.0 && t < tm)) {
    throw InvalidArgument("h_function: t must lie strictly inside (0, -2 ln b)");
  }
  const double e = std::exp(t);
  const double om = one_minus_b2et(b, t);
  if (!(om > 0.0)) {
    throw InvalidArgument("h_function: t too close to -2 ln b");
  }
  const double b2 = b * b;
  return (b2 * b2 * t * t * e + om * om / e) / (t * om);
}

double t_star(double b) {
  const double b2 = b * b;
  auto f = [&](double t) { return b2 * std::exp(t) * (t + 1.0) - 1.0; };
  return detail::bisect(f, 0.0, t_max(b), 0.0, "t_star").x;
}

double g_minimizer(double b) {
  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double lo = 0.0;
  double hi = t_max(b);
  double x1 = hi - inv_phi * (hi - lo);
  double x2 = lo + inv_phi * (hi - lo);
  double f1 = g_function(b, x1);
  double f2 = g_function(b, x2);
  for (int it = 0; it < detail::kMaxBisection && hi - lo > 1e-14 * t_max(b); ++it) {
    if (f1 < f2) {
      hi = x2;
      x2 = x1;
      f2 = f1;
      x1 = hi - inv_phi * (hi - lo);
      f1 = g_function(b, x1);
    } else {
      lo = x1;
      x1 = x2;
      f1 = f2;
      x2 = lo + inv_phi * (hi - lo);
      f2 = g_function(b, x2);
    }
  }
  return f1 < f2 ? x1 : x2;
}

double solve_beta(double b, double tol) {
  const double right = g_minimizer(b);
  if (!(g_function(b, right) < 0.0)) {
    throw NumericFailure("solve_beta: g is not negative at its minimiser");
  }
  if (!(g_function(b, 0.0) > 0.0)) {
    throw NumericFailure("solve_beta: g(0) is not positive");
  }
  auto g = [&](double t) { return g_function(b, t); };
  return detail::bisect(g, 0.0, right, tol, "solve_beta").x;
}

std::vector<double> solve_alpha_roots(double b, double v, double tol) {
  check_b(b);
  const double b2 = b * b;
  if (!(v >= 4.0 * b2)) {
    throw NoRootBranch("no alpha root: v = " + std::to_string(v) +
                       " is below 4b^2 = " + std::to_string(4.0 * b2));
  }
  // q + 1/q = s with s = v/b^2 - 2 >= 2.
  const double s = v / b2 - 2.0;
  const double disc = s * s - 4.0;
  if (disc <= 0.0) return {t_star(b)};
  const double root_disc = std::sqrt(disc);
  const double q_hi = 0.5 * (s + root_disc);
  const double q_lo = 2.0 / (s + root_disc);
  const double t_lo = solve_q(b, q_lo, tol);
  const double t_hi = solve_q(b, q_hi, tol);
  if (!(t_lo > 0.0 && t_hi < t_max(b))) {
    throw NumericFailure("solve_alpha_roots: root collapsed onto an endpoint");
  }
  if (t_lo >= t_hi) return {t_star(b)};
  return {t_lo, t_hi};
}

BranchData branch_data(double b, double v, double tol) {
  BranchData out;
  out.b = b;
  out.t_max = t_max(b);
  out.beta = solve_beta(b, tol);
  out.t_star = t_star(b);
  if (v >= 4.0 * b * b) out.alpha_roots = solve_alpha_roots(b, v, tol);
  return out;
}

}  // namespace fbh::rootsolve
