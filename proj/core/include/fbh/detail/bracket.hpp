#pragma once

#include <cmath>
#include <limits>
#include <string>

#include "fbh/errors.hpp"

namespace fbh::detail {

inline constexpr int kMaxBisection = 200;

struct RootEstimate {
  double x;
  double residual;
};

/// Bisection on [lo, hi] where f(lo) and f(hi) have opposite signs. Stops
/// when |f| <= tol or the bracket has collapsed to adjacent doubles.
template <typename F>
RootEstimate bisect(F&& f, double lo, double hi, double tol,
                    const char* what) {
  double flo = f(lo);
  const double fhi = f(hi);
  if (flo == 0.0) return {lo, 0.0};
  if (fhi == 0.0) return {hi, 0.0};
  if ((flo > 0.0) == (fhi > 0.0)) {
    throw NumericFailure(std::string(what) + ": root not bracketed");
  }
  for (int it = 0; it < kMaxBisection; ++it) {
    const double mid = 0.5 * (lo + hi);
    const double fm = f(mid);
    if (std::abs(fm) <= tol || mid <= lo || mid >= hi) {
      return {mid, std::abs(fm)};
    }
    if ((fm > 0.0) == (flo > 0.0)) {
      lo = mid;
      flo = fm;
    } else {
      hi = mid;
    }
  }
  throw NumericFailure(std::string(what) + ": bisection did not converge");
}

/// Newton steps kept inside a sign bracket; falls back to bisection whenever
/// the Newton iterate leaves the bracket. Stops on |f| <= tol, a collapsed
/// bracket, or a Newton step smaller than rel_step * |x|.
template <typename F, typename DF>
RootEstimate safeguarded_newton(
    F&& f, DF&& df, double lo, double hi, double tol, const char* what,
    double rel_step = 2.0 * std::numeric_limits<double>::epsilon()) {
  double flo = f(lo);
  const double fhi = f(hi);
  if ((flo > 0.0) == (fhi > 0.0)) {
    throw NumericFailure(std::string(what) + ": root not bracketed");
  }
  double x = 0.5 * (lo + hi);
  for (int it = 0; it < kMaxBisection; ++it) {
    const double fx = f(x);
    if (std::abs(fx) <= tol) return {x, std::abs(fx)};
    if ((fx > 0.0) == (flo > 0.0)) {
      lo = x;
      flo = fx;
    } else {
      hi = x;
    }
    if (!(lo < hi) || std::nextafter(lo, hi) >= hi) {
      return {x, std::abs(fx)};
    }
    const double d = df(x);
    double next = (d != 0.0) ? x - fx / d : lo - 1.0;
    if (!(next > lo && next < hi)) next = 0.5 * (lo + hi);
    if (std::abs(next - x) <= rel_step * std::abs(x)) {
      const double fn = f(next);
      return std::abs(fn) < std::abs(fx) ? RootEstimate{next, std::abs(fn)}
                                         : RootEstimate{x, std::abs(fx)};
    }
    x = next;
  }
  throw NumericFailure(std::string(what) + ": Newton iteration did not converge");
}

}  // namespace fbh::detail
