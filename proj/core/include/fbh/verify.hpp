#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "fbh/random.hpp"
#include "fbh/types.hpp"

namespace fbh::verify {

struct SuiteOptions {
  std::uint64_t seed = 42;
  int trials = 1000;
  double tol = 0.0;  ///< 0 selects the suite's own default
  int workers = 1;
};

struct TrialRecord {
  int index = 0;
  std::string kind;   ///< what was checked, e.g. "automorphism(2,1)" or "family B"
  double residual = 0.0;
  double value = 0.0;  ///< the quantity checked, e.g. K for a candidate disk
  bool ok = true;
  std::string note;   ///< short diagnostic for failing or informational rows
};

/// Outcome of one suite. A pure function of (suite, seed, trials, tol);
/// the worker count only changes how trials are scheduled.
struct SuiteReport {
  std::string suite;
  int trials = 0;
  int failures = 0;
  double worst_residual = 0.0;
  std::uint64_t seed = 0;
  double tol = 0.0;
  std::vector<TrialRecord> details;
  /// Named summary figures in a fixed order.
  std::vector<std::pair<std::string, double>> stats;
};

/// Analytic Jacobians (automorphisms of D_{n,m} for several signatures,
/// geodesic derivatives, Schwarz built-ins) against central differences with
/// step 1e-6. Residual is max |J - J_fd| / max(1, max |J|). Default tol 1e-6.
SuiteReport check_jacobians(const SuiteOptions& opts);

/// |K(p, v) - K(A p, v J_A^T)| / max(K, 1e-12) over random p, v and A.
/// Default tol 1e-8.
SuiteReport check_invariance(const SuiteOptions& opts);

/// For each sampled candidate disk phi of the four families:
///   (a) K(phi(0), phi'(0)) <= 1 + tol,
///   (b) |K(phi(0), phi'(0)) - 1| <= 1e-6,
///   (c) (1 - |c|^2) K(phi(c), phi'(c)) <= 1 + tol for random |c| <= 0.9.
/// Each trial covers all four families; a failure of any of (a)-(c) is
/// counted. Per-family attainment counts are reported in `stats`.
/// Default tol 1e-8.
SuiteReport check_dominance_attainment(const SuiteOptions& opts);

/// |g(t) - (tau_A^2 - tau_B^2) t (1 - b^2 e^t) e^t| / (1 + |g(t)|) over
/// random b in (0.05, 0.95), t in (0, -2 ln b), with |X| = 1 and
/// |Y|^2 = h(t) + 2b^2. Default tol 1e-9.
SuiteReport check_bridge_identity(const SuiteOptions& opts);

/// max over 256 boundary angles of |rho(phi(e^{i theta}))| for sampled
/// admissible parameters in D_{n,1}, n = 1..3, with and without Blaschke
/// factors. Default tol 1e-9.
SuiteReport check_boundary(const SuiteOptions& opts);

/// Jump estimates of K^2 across v = 4b^2 and across the alpha = beta seam for
/// each b in `b_grid`, from one-sided samples at shrinking offsets.
/// Informational: never records failures.
SuiteReport probe_seams(std::span<const double> b_grid);

/// Suite names accepted by run_suite, in the order "all" runs them.
std::vector<std::string_view> suite_names();

/// Runs one suite by name, or every suite for "all". Throws InvalidArgument
/// for an unknown name.
std::vector<SuiteReport> run_suite(std::string_view name,
                                   const SuiteOptions& opts);

/// Interior point of D_{n,m} with |rho| bounded away from zero: z Gaussian,
/// |w| a uniform fraction (at most `fill`) of exp(-|z|^2 / 2).
Point sample_interior(DomainSig sig, Rng& rng, double fill = 0.95);

}  // namespace fbh::verify
