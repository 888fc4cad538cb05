#include "fbh/domain.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "fbh/detail/bracket.hpp"
#include "fbh/errors.hpp"

namespace fbh {

namespace {

void check_sig(const DomainSig& sig) {
  if (sig.n < 1 || sig.m < 1) {
    throw DimensionMismatch("domain signature needs n >= 1 and m >= 1, got (" +
                            std::to_string(sig.n) + ", " +
                            std::to_string(sig.m) + ")");
  }
}

}  // namespace

void check_dims(const DomainSig& sig, const Point& p) {
  check_sig(sig);
  if (p.z.size() != sig.n || p.w.size() != sig.m) {
    throw DimensionMismatch("point has dimensions (" +
                            std::to_string(p.z.size()) + ", " +
                            std::to_string(p.w.size()) + "), expected (" +
                            std::to_string(sig.n) + ", " +
                            std::to_string(sig.m) + ")");
  }
}

void check_dims(const DomainSig& sig, const TangentVector& v) {
  check_sig(sig);
  if (v.dz.size() != sig.n || v.dw.size() != sig.m) {
    throw DimensionMismatch("tangent vector has dimensions (" +
                            std::to_string(v.dz.size()) + ", " +
                            std::to_string(v.dw.size()) + "), expected (" +
                            std::to_string(sig.n) + ", " +
                            std::to_string(sig.m) + ")");
  }
}

double defining_value(const DomainSig& sig, const Point& p) {
  check_dims(sig, p);
  return p.w.squaredNorm() - std::exp(-p.z.squaredNorm());
}

bool contains(const DomainSig& sig, const Point& p, double tol) {
  return defining_value(sig, p) < -tol;
}

double minkowski_functional(Complex x, Complex y, double tol) {
  const double ay = std::abs(y);
  if (ay == 0.0) {
    throw DegenerateDirection(
        "Minkowski functional undefined for Y = 0; the metric vanishes there");
  }
  const double ax2 = std::norm(x);
  if (ax2 == 0.0) return ay;

  // In s = ln(mu) the equation reads |X|^2 e^{-2s} + 2 ln|Y| - 2s = 0, which
  // is strictly decreasing in s and equals |X|^2/|Y|^2 > 0 at mu = |Y|.
  // The upper end doubles up from max(|Y|, |X|).
  const double log_y = std::log(ay);
  auto f = [&](double s) { return ax2 * std::exp(-2.0 * s) + 2.0 * log_y - 2.0 * s; };
  auto df = [&](double s) { return -2.0 * ax2 * std::exp(-2.0 * s) - 2.0; };

  double lo = std::log(ay);
  double hi = std::log(std::max(ay, std::sqrt(ax2)));
  while (f(hi) > 0.0) {
    hi += std::log(2.0);
    if (hi > 800.0) throw NumericFailure("minkowski_functional: no upper bracket");
  }
  if (f(lo) < 0.0) {
    throw NumericFailure("minkowski_functional: lower bracket lost");
  }
  const auto root = detail::safeguarded_newton(f, df, lo, hi, tol,
                                               "minkowski_functional");
  return std::exp(root.x);
}

double complex_tangent_residual(const DomainSig& sig, const Point& p,
                                const TangentVector& v, double boundary_tol) {
  check_dims(sig, p);
  check_dims(sig, v);
  const double rho = defining_value(sig, p);
  if (std::abs(rho) > boundary_tol) {
    throw NotOnBoundary("complex_tangent_residual: |rho(p)| = " +
                        std::to_string(std::abs(rho)) + " exceeds tolerance");
  }
  // <w, beta> with the conjugate on w; same for z.
  const Complex w_part = (p.w.conjugate().array() * v.dw.array()).sum();
  const Complex z_part = (p.z.conjugate().array() * v.dz.array()).sum();
  return std::abs(w_part + std::exp(-p.z.squaredNorm()) * z_part);
}

}  // namespace fbh
