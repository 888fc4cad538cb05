#include "fbh/geodesic.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "fbh/domain.hpp"
#include "fbh/errors.hpp"
#include "fbh/kobayashi.hpp"
#include "fbh/random.hpp"
#include "fbh/rootsolve.hpp"

namespace fbh::geodesic {

namespace {

constexpr double kDenominatorGuard = 1e-14;
constexpr int kRejectionBudget = 100000;
constexpr Complex kI{0.0, 1.0};

// M^{r}(lambda) * (1 - conj(alpha) lambda) collapses to a linear function:
// lambda - alpha for r = 1 and 1 - conj(alpha) lambda for r = 0.
struct Linear {
  Complex value;
  Complex slope;
};

Linear linear_factor(bool r, Complex alpha, Complex lambda) {
  if (r) return {lambda - alpha, Complex(1.0, 0.0)};
  return {1.0 - std::conj(alpha) * lambda, -std::conj(alpha)};
}

void check_shape(const GeodesicParams& p) {
  const auto len = static_cast<Eigen::Index>(p.n) + 1;
  if (p.n < 1 || p.a.size() != len || p.alpha.size() != len ||
      static_cast<Eigen::Index>(p.r.size()) != len) {
    throw DimensionMismatch("geodesic parameters need n >= 1 and vectors of length n + 1");
  }
}

std::string fmt(double x) {
  std::ostringstream os;
  os.precision(3);
  os << x;
  return os.str();
}

}  // namespace

std::vector<std::string> validate(const GeodesicParams& params, double tol) {
  std::vector<std::string> out;
  const auto len = static_cast<Eigen::Index>(params.n) + 1;
  if (params.n < 1 || params.a.size() != len || params.alpha.size() != len ||
      static_cast<Eigen::Index>(params.r.size()) != len) {
    out.emplace_back("shape: n >= 1 and a, alpha, r of length n + 1");
    return out;
  }
  Complex weighted{0.0, 0.0};
  double mass = 0.0;
  for (Eigen::Index j = 0; j < len; ++j) {
    const std::string tag = "[" + std::to_string(j + 1) + "]";
    const double a2 = std::norm(params.a(j));
    const double al = std::abs(params.alpha(j));
    if (a2 == 0.0) out.push_back("a_j nonzero" + tag);
    if (params.r[j] > 1) out.push_back("r_j must be 0 or 1" + tag);
    if (al > 1.0 + tol) out.push_back("|alpha_j| <= 1" + tag);
    if (params.r[j] == 1 && !(al < 1.0)) out.push_back("r_j = 1 requires |alpha_j| < 1" + tag);
    weighted += a2 * params.alpha(j);
    mass += a2 * (1.0 + al * al);
  }
  if (!(std::abs(params.alpha0) < 1.0)) out.emplace_back("|alpha0| < 1");
  const double dev_a = std::abs(params.alpha0 - weighted);
  if (dev_a > tol) {
    out.push_back("constraint A: alpha0 = sum |a_j|^2 alpha_j (off by " + fmt(dev_a) + ")");
  }
  const double dev_b = std::abs(1.0 + std::norm(params.alpha0) - mass);
  if (dev_b > tol) {
    out.push_back("constraint B: 1 + |alpha0|^2 = sum |a_j|^2 (1 + |alpha_j|^2) (off by " +
                  fmt(dev_b) + ")");
  }
  if (params.blaschke && !(std::abs(params.blaschke->gamma) < 1.0)) {
    out.emplace_back("Blaschke zero |gamma| < 1");
  }
  return out;
}

Complex prescribed_gamma(const GeodesicParams& params) {
  check_shape(params);
  const Complex a = params.a(params.n);
  const Complex al = params.alpha(params.n);
  if (params.r[params.n] == 1) {
    return (params.alpha0 + std::conj(a)) / (1.0 + std::conj(a * al));
  }
  return (params.alpha0 - std::conj(a) * al) / (1.0 - std::conj(a));
}

DiskJet evaluate(const GeodesicParams& params, Complex lambda) {
  check_shape(params);
  const int n = params.n;
  const Complex a_w = params.a(n);
  const Linear lw = linear_factor(params.r[n] == 1, params.alpha(n), lambda);
  const Complex base = 1.0 - std::conj(params.alpha0) * lambda;
  const Complex dbase = -std::conj(params.alpha0);

  const Complex den = base - a_w * lw.value;
  const Complex dden = dbase - a_w * lw.slope;
  const Complex num = base + a_w * lw.value;
  const Complex dnum = dbase + a_w * lw.slope;
  if (std::abs(den) < kDenominatorGuard) {
    throw InvalidParameters("geodesic denominator vanishes at lambda");
  }
  const Complex den2 = den * den;

  DiskJet jet{Point{CVector(n), CVector(1)}, TangentVector{CVector(n), CVector(1)}};
  for (int j = 0; j < n; ++j) {
    const Linear lj = linear_factor(params.r[j] == 1, params.alpha(j), lambda);
    const Complex c = kI * params.a(j);
    jet.point.z(j) = c * lj.value / den;
    jet.derivative.dz(j) = c * (lj.slope * den - lj.value * dden) / den2;
  }

  const Complex e = std::exp(-0.5 * num / den);
  const Complex de = -0.5 * e * (dnum * den - num * dden) / den2;
  Complex blaschke{1.0, 0.0};
  Complex dblaschke{0.0, 0.0};
  if (params.blaschke) {
    const Complex g = params.blaschke->gamma;
    const Complex q = 1.0 - std::conj(g) * lambda;
    blaschke = (lambda - g) / q;
    dblaschke = (1.0 - std::norm(g)) / (q * q);
  }
  jet.point.w(0) = blaschke * e;
  jet.derivative.dw(0) = dblaschke * e + blaschke * de;
  return jet;
}

double boundary_residual(const GeodesicParams& params, double theta) {
  const DiskJet jet = evaluate(params, std::polar(1.0, theta));
  return std::abs(defining_value({params.n, 1}, jet.point));
}

std::string_view to_string(Family family) {
  switch (family) {
    case Family::A: return "A";
    case Family::B: return "B";
    case Family::C: return "C";
    case Family::D: return "D";
  }
  return "?";
}

std::optional<Family> family_from_string(std::string_view text) {
  if (text == "A" || text == "a") return Family::A;
  if (text == "B" || text == "b") return Family::B;
  if (text == "C" || text == "c") return Family::C;
  if (text == "D" || text == "d") return Family::D;
  return std::nullopt;
}

GeodesicParams to_params(const CandidateFamily& fam, GammaRule rule) {
  GeodesicParams p;
  p.n = 1;
  p.a = CVector(2);
  p.a << fam.a1, fam.a2;
  p.alpha = CVector(2);
  p.alpha << Complex(0.0, 0.0), fam.alpha2;
  const bool r2 = fam.family == Family::C || fam.family == Family::D;
  p.r = {1, static_cast<std::uint8_t>(r2 ? 1 : 0)};
  p.alpha0 = fam.alpha0;
  if (fam.family == Family::B || fam.family == Family::D) {
    if (rule == GammaRule::prescribed) {
      p.blaschke = BlaschkeFactor{prescribed_gamma(p)};
    } else {
      p.blaschke = BlaschkeFactor{(fam.alpha0 - std::conj(fam.a2) * fam.alpha2) /
                                  (1.0 - std::conj(fam.a2))};
    }
  }
  return p;
}

std::vector<std::string> validate(const CandidateFamily& fam, double tol) {
  std::vector<std::string> out = validate(to_params(fam), tol);
  const double a2 = std::norm(fam.a2);
  const double expected_a1 = (1.0 - a2) * (1.0 - a2 * std::norm(fam.alpha2));
  if (!(expected_a1 > 0.0)) {
    out.emplace_back("(1 - |a2|^2)(1 - |a2|^2 |alpha2|^2) > 0");
  } else if (std::abs(std::norm(fam.a1) - expected_a1) > tol) {
    out.emplace_back("|a1|^2 = (1 - |a2|^2)(1 - |a2|^2 |alpha2|^2)");
  }
  return out;
}

double tau_identity_residual(const CandidateFamily& fam, GammaRule rule) {
  const GeodesicParams params = to_params(fam, rule);
  if (auto v = validate(params); !v.empty()) {
    throw InvalidParameters("tau_identity_residual: " + v.front());
  }
  const DiskJet jet = evaluate(params, Complex(0.0, 0.0));
  const double b = std::abs(jet.point.w(0));
  if (!(b > 0.0 && b < 1.0)) {
    throw InvalidParameters("tau_identity_residual: |phi_2(0)| outside (0, 1)");
  }
  const double x2 = std::norm(jet.derivative.dz(0));
  const double y2 = std::norm(jet.derivative.dw(0));
  if (fam.family == Family::A || fam.family == Family::C) {
    return std::abs(1.0 - tau_sq_v_small(b, x2, y2));
  }
  const double v = y2 / x2;
  if (v < 4.0 * b * b) return std::numeric_limits<double>::infinity();
  double best = std::numeric_limits<double>::infinity();
  for (double alpha : rootsolve::solve_alpha_roots(b, v)) {
    best = std::min(best, std::abs(1.0 - tau_sq_alpha(b, x2, alpha)));
  }
  return best;
}

CandidateFamily make_family(Family family, Complex a2, Complex alpha2) {
  const double m2 = std::norm(a2);
  CandidateFamily fam;
  fam.family = family;
  fam.a2 = a2;
  fam.alpha2 = alpha2;
  fam.alpha0 = m2 * alpha2;
  fam.a1 = std::sqrt(std::max(0.0, (1.0 - m2) * (1.0 - m2 * std::norm(alpha2))));
  return fam;
}

CandidateFamily sample_family(Family family, std::uint64_t seed) {
  Rng rng(derive_seed(seed, 0xFA3111ULL, static_cast<std::uint64_t>(family)));
  for (int attempt = 0; attempt < kRejectionBudget; ++attempt) {
    const double a2 = rng.uniform(-0.95, 0.95);
    const Complex alpha2 = rng.in_disk(0.9);
    if (std::abs(a2) < 1e-3) continue;
    const CandidateFamily fam = make_family(family, a2, alpha2);
    const double b = std::abs(evaluate(to_params(fam), Complex(0.0, 0.0)).point.w(0));
    if (b > 0.05 && b < 0.95) return fam;
  }
  throw NumericFailure("sample_family: rejection budget exhausted");
}

GeodesicParams sample_admissible(std::uint64_t seed, int n) {
  if (n < 1) throw InvalidArgument("sample_admissible: n must be >= 1");
  Rng rng(derive_seed(seed, 0xAD3155ULL, static_cast<std::uint64_t>(n)));
  if (n == 1) {
    const auto family = static_cast<Family>(rng.next() % 4);
    return to_params(sample_family(family, rng.next()));
  }
  const int len = n + 1;
  for (int attempt = 0; attempt < kRejectionBudget; ++attempt) {
    GeodesicParams p;
    p.n = n;
    p.a = CVector(len);
    p.alpha = CVector(len);
    p.r.assign(len, 0);
    Complex weighted{0.0, 0.0};
    double mass = 0.0;
    for (int j = 0; j < len; ++j) {
      p.a(j) = rng.complex_normal();
      p.alpha(j) = rng.in_disk(0.9);
      p.r[j] = static_cast<std::uint8_t>(rng.next() & 1U);
      const double c2 = std::norm(p.a(j));
      weighted += c2 * p.alpha(j);
      mass += c2 * (1.0 + std::norm(p.alpha(j)));
    }
    // a = s c turns the two constraints into s^4 |P|^2 - s^2 Q + 1 = 0; the
    // smaller root keeps |alpha0| = s^2 |P| below 1.
    const double disc = mass * mass - 4.0 * std::norm(weighted);
    if (disc < 0.0) continue;
    const double s2 = 2.0 / (mass + std::sqrt(disc));
    p.a *= std::sqrt(s2);
    p.alpha0 = s2 * weighted;
    if (!(std::abs(p.alpha0) < 1.0 - 1e-9)) continue;
    if (rng.uniform() < 0.5) {
      const Complex gamma = prescribed_gamma(p);
      if (!(std::abs(gamma) < 1.0 - 1e-9)) continue;
      p.blaschke = BlaschkeFactor{gamma};
    }
    if (validate(p).empty()) return p;
  }
  throw NumericFailure("sample_admissible: rejection budget exhausted");
}

}  // namespace fbh::geodesic
