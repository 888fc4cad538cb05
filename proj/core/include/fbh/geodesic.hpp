#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "fbh/types.hpp"

namespace fbh::geodesic {

struct BlaschkeFactor {
  Complex gamma;  ///< zero of (lambda - gamma) / (1 - conj(gamma) lambda)
};

/// Parameters of an extremal-disk candidate of D_{n,1}:
///
///   phi_j(lambda) = M_j(lambda)^{r_j} i a_j (1 - conj(alpha_j) lambda) / Den,
///   phi_{n+1}     = B(lambda) exp(-Num / (2 Den)),
///
/// with M_j the Moebius map vanishing at alpha_j and
///   Den, Num = (1 - conj(alpha_0) lambda) -+ M_{n+1}^{r_{n+1}} a_{n+1} (1 - conj(alpha_{n+1}) lambda).
/// Index n (zero-based) is the w-coordinate.
struct GeodesicParams {
  int n = 1;
  CVector a;                    ///< length n + 1, entries nonzero
  CVector alpha;                ///< length n + 1, |alpha_j| <= 1
  std::vector<std::uint8_t> r;  ///< length n + 1, bits
  Complex alpha0{0.0, 0.0};     ///< |alpha0| < 1
  std::optional<BlaschkeFactor> blaschke;
};

/// Human-readable constraint violations; empty iff the parameters are
/// admissible (ranges plus alpha0 = sum |a_j|^2 alpha_j and
/// 1 + |alpha0|^2 = sum |a_j|^2 (1 + |alpha_j|^2), both to `tol`).
std::vector<std::string> validate(const GeodesicParams& params,
                                  double tol = 1e-12);

/// Zero of the Blaschke factor prescribed for the given r_{n+1}:
///   r = 1: (alpha0 + conj(a)) / (1 + conj(a alpha)),
///   r = 0: (alpha0 - conj(a) alpha) / (1 - conj(a)),
/// with a = a_{n+1}, alpha = alpha_{n+1}.
Complex prescribed_gamma(const GeodesicParams& params);

struct DiskJet {
  Point point;               ///< phi(lambda), a point of D_{n,1}
  TangentVector derivative;  ///< phi'(lambda)
};

/// phi(lambda) and its exact derivative for |lambda| <= 1. Throws
/// InvalidParameters when |Den(lambda)| < 1e-14.
DiskJet evaluate(const GeodesicParams& params, Complex lambda);

/// |rho(phi(e^{i theta}))|; vanishes for admissible parameters.
double boundary_residual(const GeodesicParams& params, double theta);

/// The four candidate shapes in D_{1,1} with phi(0) = (0, .):
///   A: r = (1, 0), no Blaschke factor    B: r = (1, 0), Blaschke factor
///   C: r = (1, 1), no Blaschke factor    D: r = (1, 1), Blaschke factor
enum class Family { A, B, C, D };

std::string_view to_string(Family family);
std::optional<Family> family_from_string(std::string_view text);

struct CandidateFamily {
  Family family = Family::A;
  Complex a1;
  Complex a2;
  Complex alpha0;
  Complex alpha2;
};

/// Which Blaschke zero to use for the families with a factor. `prescribed`
/// follows the r_{n+1} rule of prescribed_gamma; `r0_formula` always uses the
/// r = 0 expression (alpha0 - conj(a2) alpha2) / (1 - conj(a2)).
enum class GammaRule { prescribed, r0_formula };

GeodesicParams to_params(const CandidateFamily& fam,
                         GammaRule rule = GammaRule::prescribed);

/// Constraint violations of a family draw, including
/// |a1|^2 = (1 - |a2|^2)(1 - |a2|^2 |alpha2|^2).
std::vector<std::string> validate(const CandidateFamily& fam,
                                  double tol = 1e-12);

/// Distance of the normalised candidate from its closed-form tau^2 identity.
/// With b = |phi_2(0)|, |X| = |phi_1'(0)|, |Y| = |phi_2'(0)| this is
///   A, C: |1 - tau_sq_v_small(b, |X|^2, |Y|^2)|
///   B, D: min over alpha roots of |1 - tau_sq_alpha(b, |X|^2, alpha)|
/// (+inf when v < 4b^2 leaves no root). Throws InvalidParameters for an
/// inadmissible family.
double tau_identity_residual(const CandidateFamily& fam,
                             GammaRule rule = GammaRule::prescribed);

/// Completes (a2, alpha2) to a family member: alpha0 = |a2|^2 alpha2 and
/// a1 = sqrt((1 - |a2|^2)(1 - |a2|^2 |alpha2|^2)). Admissibility still needs
/// |a2| < 1, a2 != 0 and |alpha2| < 1; see validate.
CandidateFamily make_family(Family family, Complex a2, Complex alpha2);

/// Family draw with a2 real in (-0.95, 0.95) \ {0}, |alpha2| <= 0.9, and
/// b = |phi_2(0)| rejected unless in (0.05, 0.95). Deterministic in `seed`.
/// Throws NumericFailure when the rejection budget runs out.
CandidateFamily sample_family(Family family, std::uint64_t seed);

/// Admissible parameters for D_{n,1}. For n = 1 this is a family draw (the
/// family itself chosen by the seed); for n >= 2, directions c_j and
/// alpha_j are drawn and a_j = s c_j with s^2 the admissible root of
/// s^4 |P|^2 - s^2 Q + 1 = 0. Some draws carry the prescribed Blaschke factor.
GeodesicParams sample_admissible(std::uint64_t seed, int n);

}  // namespace fbh::geodesic
