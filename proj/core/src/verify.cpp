#include "fbh/verify.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <functional>
#include <limits>
#include <thread>

#include "fbh/automorphism.hpp"
#include "fbh/domain.hpp"
#include "fbh/errors.hpp"
#include "fbh/geodesic.hpp"
#include "fbh/kobayashi.hpp"
#include "fbh/rootsolve.hpp"
#include "fbh/schwarz.hpp"

namespace fbh::verify {

namespace {

constexpr double kFdStep = 1e-6;
constexpr double kAttainTol = 1e-6;

constexpr std::uint64_t kSaltJacobian = 0x1AC0B1;
constexpr std::uint64_t kSaltInvariance = 0x1A7A21;
constexpr std::uint64_t kSaltDominance = 0xD0A1;
constexpr std::uint64_t kSaltPrecompose = 0xD0A2;
constexpr std::uint64_t kSaltBridge = 0xB21D;
constexpr std::uint64_t kSaltBoundary = 0xB0DE;

constexpr std::array<DomainSig, 4> kSigs{{{1, 1}, {2, 1}, {1, 2}, {2, 3}}};

using TrialFn = std::function<std::vector<TrialRecord>(int)>;

std::string fmt(const char* pattern, double x) {
  char buf[96];
  std::snprintf(buf, sizeof buf, pattern, x);
  return buf;
}

std::string sig_tag(const char* what, DomainSig sig) {
  return std::string(what) + "(" + std::to_string(sig.n) + "," +
         std::to_string(sig.m) + ")";
}

// Trial i always runs with its own derived streams, so striding the indices
// over threads and collecting into fixed slots gives the serial result.
std::vector<TrialRecord> run_trials(int trials, int workers, const TrialFn& fn) {
  std::vector<std::vector<TrialRecord>> slots(static_cast<std::size_t>(trials));
  auto body = [&](int i) {
    try {
      slots[i] = fn(i);
    } catch (const Error& e) {
      const double inf = std::numeric_limits<double>::infinity();
      slots[i] = {{i, "exception", inf, inf, false, e.what()}};
    }
  };
  const int nthreads = std::clamp(workers, 1, std::max(trials, 1));
  if (nthreads == 1) {
    for (int i = 0; i < trials; ++i) body(i);
  } else {
    std::vector<std::jthread> pool;
    for (int w = 0; w < nthreads; ++w) {
      pool.emplace_back([&, w] {
        for (int i = w; i < trials; i += nthreads) body(i);
      });
    }
  }
  std::vector<TrialRecord> out;
  for (auto& s : slots) {
    for (auto& r : s) out.push_back(std::move(r));
  }
  return out;
}

SuiteReport summarise(std::string name, const SuiteOptions& opts, double tol,
                      std::vector<TrialRecord> records) {
  SuiteReport rep;
  rep.suite = std::move(name);
  rep.trials = opts.trials;
  rep.seed = opts.seed;
  rep.tol = tol;
  for (const auto& r : records) {
    if (!r.ok) ++rep.failures;
    rep.worst_residual = std::max(rep.worst_residual, r.residual);
  }
  rep.details = std::move(records);
  return rep;
}

double pick_tol(const SuiteOptions& opts, double fallback) {
  return opts.tol > 0.0 ? opts.tol : fallback;
}

double relative_gap(const CMatrix& analytic, const CMatrix& numeric) {
  const double scale = std::max(1.0, analytic.cwiseAbs().maxCoeff());
  return (analytic - numeric).cwiseAbs().maxCoeff() / scale;
}

// Gap between an analytic Jacobian and central differences of `f` along the
// real and the imaginary direction of each input coordinate. A map that is
// not holomorphic fails at least one direction.
double fd_gap(const std::function<CVector(const CVector&)>& f, const CVector& at,
              const CMatrix& analytic) {
  double gap = 0.0;
  for (Complex dir : {Complex(1.0, 0.0), Complex(0.0, 1.0)}) {
    CMatrix fd(analytic.rows(), at.size());
    for (Eigen::Index j = 0; j < at.size(); ++j) {
      CVector plus = at;
      CVector minus = at;
      plus(j) += kFdStep * dir;
      minus(j) -= kFdStep * dir;
      fd.col(j) = ((f(plus) - f(minus)) / (2.0 * kFdStep * dir)).transpose();
    }
    gap = std::max(gap, relative_gap(analytic, fd));
  }
  return gap;
}

std::vector<TrialRecord> jacobian_trial(const SuiteOptions& opts, double tol, int i) {
  Rng rng(derive_seed(opts.seed, kSaltJacobian, static_cast<std::uint64_t>(i)));
  std::vector<TrialRecord> out;

  const DomainSig sig = kSigs[static_cast<std::size_t>(i) % kSigs.size()];
  const Automorphism aut = random_automorphism(sig, rng);
  const Point p = sample_interior(sig, rng);
  const double r_aut = fd_gap(
      [&](const CVector& x) { return aut.apply(Point::from_stacked(x, sig)).stacked(); },
      p.stacked(), aut.jacobian(p));
  out.push_back({i, sig_tag("automorphism", sig), r_aut, r_aut, r_aut <= tol, ""});

  const int n = 1 + i % 3;
  const geodesic::GeodesicParams params =
      geodesic::sample_admissible(rng.next(), n);
  const Complex lambda = rng.in_disk(0.9);
  CVector at(1);
  at(0) = lambda;
  const double r_geo = fd_gap(
      [&](const CVector& x) { return geodesic::evaluate(params, x(0)).point.stacked(); },
      at, geodesic::evaluate(params, lambda).derivative.stacked().transpose());
  out.push_back({i, "geodesic n=" + std::to_string(n), r_geo, r_geo, r_geo <= tol, ""});

  double r_sch = 0.0;
  const Point x = sample_interior({1, 1}, rng, 0.9);
  for (const auto& map : schwarz::builtin_examples(sig)) {
    r_sch = std::max(r_sch, fd_gap(
        [&](const CVector& y) { return map.eval(Point::from_stacked(y, {1, 1})).stacked(); },
        x.stacked(), map.jac(x)));
  }
  out.push_back({i, sig_tag("schwarz", sig), r_sch, r_sch, r_sch <= tol, ""});

  for (auto& r : out) {
    if (!r.ok) r.note = fmt("finite-difference gap %.3e", r.residual);
  }
  return out;
}

std::vector<TrialRecord> invariance_trial(const SuiteOptions& opts, double tol, int i) {
  Rng rng(derive_seed(opts.seed, kSaltInvariance, static_cast<std::uint64_t>(i)));
  const DomainSig sig{1, 1};
  const Point p = sample_interior(sig, rng);
  const TangentVector v = TangentVector::d11(rng.complex_normal(), rng.complex_normal());
  const Automorphism aut = random_automorphism(sig, rng);

  const MetricResult before = metric(p, v);
  const MetricResult after = metric(aut.apply(p), aut.push_forward(p, v));
  const double gap = std::abs(before.k - after.k) / std::max(before.k, 1e-12);
  TrialRecord rec{i, std::string(to_string(before.branch)), gap, before.k, gap <= tol, ""};
  if (!rec.ok) rec.note = fmt("K=%.17g", before.k) + fmt(" K(Ap)=%.17g", after.k);
  return {rec};
}

struct FamilyTally {
  int attained = 0;
  double max_k = -std::numeric_limits<double>::infinity();
  double max_precomposed = -std::numeric_limits<double>::infinity();
};

constexpr std::array<geodesic::Family, 4> kFamilies{
    geodesic::Family::A, geodesic::Family::B, geodesic::Family::C, geodesic::Family::D};

std::vector<TrialRecord> dominance_trial(const SuiteOptions& opts, double tol, int i) {
  std::vector<TrialRecord> out;
  for (auto family : kFamilies) {
    const auto salt = static_cast<std::uint64_t>(family);
    const auto idx = static_cast<std::uint64_t>(i);
    const geodesic::CandidateFamily fam =
        geodesic::sample_family(family, derive_seed(opts.seed, kSaltDominance, idx));
    const geodesic::GeodesicParams params = geodesic::to_params(fam);
    Rng rng(derive_seed(opts.seed, kSaltPrecompose ^ salt, idx));
    const Complex c = rng.in_disk(0.9);

    const geodesic::DiskJet at0 = geodesic::evaluate(params, 0.0);
    const double k0 = metric(at0.point, at0.derivative).k;
    const geodesic::DiskJet atc = geodesic::evaluate(params, c);
    const double kc = metric(atc.point, atc.derivative).k * (1.0 - std::norm(c));

    const bool dominated = k0 <= 1.0 + tol;
    const bool attained = std::abs(k0 - 1.0) <= kAttainTol;
    const std::string name(geodesic::to_string(family));
    TrialRecord disk{i, "family " + name, std::abs(k0 - 1.0), k0, dominated && attained, ""};
    if (!dominated) {
      disk.note = fmt("dominance K=%.17g", k0);
    } else if (!attained) {
      disk.note = fmt("attainment K=%.17g", k0);
    }
    out.push_back(std::move(disk));
    out.push_back({i, "precomposed " + name, std::max(0.0, kc - 1.0), kc, kc <= 1.0 + tol,
                   kc <= 1.0 + tol ? "" : fmt("(1-|c|^2)K=%.17g", kc)});
  }
  return out;
}

std::vector<TrialRecord> bridge_trial(const SuiteOptions& opts, double tol, int i) {
  Rng rng(derive_seed(opts.seed, kSaltBridge, static_cast<std::uint64_t>(i)));
  const double b = rng.uniform(0.05, 0.95);
  const double tmax = rootsolve::t_max(b);
  const double t = tmax * rng.uniform(1e-6, 1.0 - 1e-6);
  const double g = rootsolve::g_function(b, t);
  const double v = rootsolve::h_function(b, t) + 2.0 * b * b;
  const double diff = tau_sq_v_small(b, 1.0, v) - tau_sq_alpha(b, 1.0, t);
  const double rhs = diff * t * rootsolve::one_minus_b2et(b, t) * std::exp(t);
  const double r = std::abs(g - rhs) / (1.0 + std::abs(g));
  TrialRecord rec{i, "bridge", r, g, r <= tol, ""};
  if (!rec.ok) rec.note = fmt("b=%.17g", b) + fmt(" t=%.17g", t);
  return {rec};
}

std::vector<TrialRecord> boundary_trial(const SuiteOptions& opts, double tol, int i) {
  const int n = 1 + i % 3;
  const geodesic::GeodesicParams params = geodesic::sample_admissible(
      derive_seed(opts.seed, kSaltBoundary, static_cast<std::uint64_t>(i)), n);
  double worst = 0.0;
  for (int k = 0; k < 256; ++k) {
    worst = std::max(worst, geodesic::boundary_residual(
                                params, 2.0 * std::numbers::pi * k / 256.0));
  }
  std::string kind = "n=" + std::to_string(n);
  if (params.blaschke) kind += " blaschke";
  return {{i, kind, worst, worst, worst <= tol, worst <= tol ? "" : fmt("max |rho|=%.3e", worst)}};
}

double k_squared_at_v(double b, double v) {
  return metric_normal(b, 1.0, std::sqrt(v)).k_squared;
}

}  // namespace

Point sample_interior(DomainSig sig, Rng& rng, double fill) {
  Point p{CVector(sig.n), CVector(sig.m)};
  for (int j = 0; j < sig.n; ++j) p.z(j) = rng.complex_normal(1.0 / std::sqrt(2.0 * sig.n));
  CVector dir(sig.m);
  for (int j = 0; j < sig.m; ++j) dir(j) = rng.complex_normal();
  const double bound = std::exp(-0.5 * p.z.squaredNorm());
  p.w = dir.normalized() * (fill * bound * rng.uniform());
  return p;
}

SuiteReport check_jacobians(const SuiteOptions& opts) {
  const double tol = pick_tol(opts, 1e-6);
  return summarise("jacobians", opts, tol,
                   run_trials(opts.trials, opts.workers,
                              [&](int i) { return jacobian_trial(opts, tol, i); }));
}

SuiteReport check_invariance(const SuiteOptions& opts) {
  const double tol = pick_tol(opts, 1e-8);
  return summarise("invariance", opts, tol,
                   run_trials(opts.trials, opts.workers,
                              [&](int i) { return invariance_trial(opts, tol, i); }));
}

SuiteReport check_dominance_attainment(const SuiteOptions& opts) {
  const double tol = pick_tol(opts, 1e-8);
  SuiteReport rep = summarise(
      "dominance", opts, tol,
      run_trials(opts.trials, opts.workers,
                 [&](int i) { return dominance_trial(opts, tol, i); }));

  std::array<FamilyTally, 4> tally;
  for (const auto& r : rep.details) {
    for (std::size_t f = 0; f < kFamilies.size(); ++f) {
      const std::string name(geodesic::to_string(kFamilies[f]));
      if (r.kind == "family " + name) {
        if (r.residual <= kAttainTol) ++tally[f].attained;
        tally[f].max_k = std::max(tally[f].max_k, r.value);
      } else if (r.kind == "precomposed " + name) {
        tally[f].max_precomposed = std::max(tally[f].max_precomposed, r.value);
      }
    }
  }
  for (std::size_t f = 0; f < kFamilies.size(); ++f) {
    const std::string name(geodesic::to_string(kFamilies[f]));
    rep.stats.emplace_back("attained_" + name, tally[f].attained);
    rep.stats.emplace_back("attainment_rate_" + name,
                           opts.trials > 0 ? double(tally[f].attained) / opts.trials : 0.0);
    rep.stats.emplace_back("max_K_" + name, tally[f].max_k);
    rep.stats.emplace_back("max_precomposed_" + name, tally[f].max_precomposed);
  }
  return rep;
}

SuiteReport check_bridge_identity(const SuiteOptions& opts) {
  const double tol = pick_tol(opts, 1e-9);
  return summarise("bridge", opts, tol,
                   run_trials(opts.trials, opts.workers,
                              [&](int i) { return bridge_trial(opts, tol, i); }));
}

SuiteReport check_boundary(const SuiteOptions& opts) {
  const double tol = pick_tol(opts, 1e-9);
  return summarise("boundary", opts, tol,
                   run_trials(opts.trials, opts.workers,
                              [&](int i) { return boundary_trial(opts, tol, i); }));
}

SuiteReport probe_seams(std::span<const double> b_grid) {
  constexpr std::array<double, 4> kOffsets{1e-2, 1e-4, 1e-6, 1e-8};
  std::vector<TrialRecord> records;
  int index = 0;
  auto sweep = [&](double b, double v0, const std::string& kind) {
    TrialRecord rec{index++, kind, 0.0, 0.0, true, ""};
    for (double d : kOffsets) {
      const double jump = std::abs(k_squared_at_v(b, v0 * (1.0 + d)) -
                                   k_squared_at_v(b, v0 * (1.0 - d)));
      rec.note += (rec.note.empty() ? "" : " ") + fmt("%.3e", jump);
      rec.residual = jump;
      rec.value = v0;
    }
    records.push_back(std::move(rec));
  };
  for (double b : b_grid) {
    sweep(b, 4.0 * b * b, fmt("v=4b^2 b=%g", b));
    const double beta = rootsolve::solve_beta(b);
    sweep(b, rootsolve::h_function(b, beta) + 2.0 * b * b, fmt("alpha=beta b=%g", b));
  }
  for (double b : {1e-2, 1e-4, 1e-8}) {
    const double k2 = metric_normal(b, 1.0, 0.0).k_squared;
    records.push_back({index++, fmt("b->0 b=%g", b), k2, k2, true, ""});
  }
  SuiteOptions opts;
  opts.seed = 0;
  opts.trials = static_cast<int>(records.size());
  return summarise("seams", opts, 0.0, std::move(records));
}

std::vector<std::string_view> suite_names() {
  return {"jacobians", "invariance", "dominance", "bridge", "boundary", "seams"};
}

std::vector<SuiteReport> run_suite(std::string_view name, const SuiteOptions& opts) {
  static constexpr std::array<double, 3> kSeamGrid{0.2, 0.5, 0.8};
  auto one = [&](std::string_view s) -> SuiteReport {
    if (s == "jacobians") return check_jacobians(opts);
    if (s == "invariance") return check_invariance(opts);
    if (s == "dominance") return check_dominance_attainment(opts);
    if (s == "bridge") return check_bridge_identity(opts);
    if (s == "boundary") return check_boundary(opts);
    if (s == "seams") return probe_seams(kSeamGrid);
    throw InvalidArgument("unknown suite '" + std::string(s) + "'");
  };
  std::vector<SuiteReport> out;
  if (name == "all") {
    for (auto s : suite_names()) out.push_back(one(s));
  } else {
    out.push_back(one(name));
  }
  return out;
}

}  // namespace fbh::verify
