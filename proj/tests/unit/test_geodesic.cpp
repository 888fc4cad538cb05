#include <cmath>
#include <numbers>

#include "doctest.h"
#include "fbh/domain.hpp"
#include "fbh/errors.hpp"
#include "fbh/geodesic.hpp"
#include "fbh/random.hpp"
#include "oracle_values.hpp"

using namespace fbh;
using namespace fbh::geodesic;

namespace {

GeodesicParams family_a_example() {
  return to_params(make_family(Family::A, 0.3, 0.0));
}

double max_boundary_residual(const GeodesicParams& p) {
  double worst = 0.0;
  for (int k = 0; k < 256; ++k) {
    worst = std::max(worst, boundary_residual(p, 2.0 * std::numbers::pi * k / 256.0));
  }
  return worst;
}

}  // namespace

TEST_CASE("family A worked example") {
  const GeodesicParams p = family_a_example();
  CHECK(validate(p).empty());
  const DiskJet jet = evaluate(p, 0.0);
  CHECK(std::abs(jet.point.z(0)) < 1e-15);
  CHECK(jet.point.w(0).real() == doctest::Approx(oracle::kFamilyA_b).epsilon(1e-14));
  CHECK(std::abs(jet.point.w(0).imag()) < 1e-15);
  CHECK(std::abs(jet.derivative.dz(0)) == doctest::Approx(oracle::kFamilyA_x).epsilon(1e-14));
  CHECK(std::abs(jet.derivative.dz(0).real()) < 1e-15);
  CHECK(max_boundary_residual(p) < 1e-12);
}

TEST_CASE("validation reports each violated constraint") {
  GeodesicParams p = family_a_example();
  p.a(0) = 0.0;
  CHECK_FALSE(validate(p).empty());

  p = family_a_example();
  p.alpha0 = 0.5;
  const auto problems = validate(p);
  CHECK(problems.size() >= 1);

  p = family_a_example();
  p.blaschke = BlaschkeFactor{Complex(1.5, 0.0)};
  CHECK_FALSE(validate(p).empty());

  CHECK_FALSE(validate(make_family(Family::C, 0.0, 0.2)).empty());
  CHECK_FALSE(validate(make_family(Family::C, 0.5, 1.2)).empty());
  CHECK(validate(make_family(Family::D, Complex(0.3, 0.4), Complex(-0.2, 0.5))).empty());
}

TEST_CASE("Blaschke zero for each r") {
  GeodesicParams p = to_params(make_family(Family::D, Complex(0.3, -0.2), Complex(0.1, 0.4)));
  const Complex a = p.a(1);
  const Complex al = p.alpha(1);
  CHECK(std::abs(prescribed_gamma(p) - (p.alpha0 + std::conj(a)) / (1.0 + std::conj(a * al))) < 1e-15);
  p.r[1] = 0;
  CHECK(std::abs(prescribed_gamma(p) - (p.alpha0 - std::conj(a) * al) / (1.0 - std::conj(a))) < 1e-15);
}

TEST_CASE("boundary property for sampled parameters") {
  int with_factor = 0;
  for (std::uint64_t seed = 0; seed < 300; ++seed) {
    const GeodesicParams p = sample_admissible(seed, 1 + static_cast<int>(seed % 3));
    CHECK(validate(p, 1e-10).empty());
    CHECK(max_boundary_residual(p) <= 1e-9);
    if (p.blaschke) ++with_factor;
  }
  CHECK(with_factor > 50);
  CHECK(with_factor < 250);
}

TEST_CASE("interior points lie in the domain") {
  Rng rng(41);
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const GeodesicParams p = sample_admissible(seed, 2);
    const Point x = evaluate(p, rng.in_disk(0.95)).point;
    CHECK(contains({2, 1}, x));
  }
}

TEST_CASE("derivative matches central differences") {
  Rng rng(42);
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const GeodesicParams p = sample_admissible(seed, 1 + static_cast<int>(seed % 3));
    const Complex lambda = rng.in_disk(0.9);
    const double h = 1e-6;
    const CVector fd = (evaluate(p, lambda + h).point.stacked() -
                        evaluate(p, lambda - h).point.stacked()) / (2.0 * h);
    const CVector exact = evaluate(p, lambda).derivative.stacked();
    CHECK((fd - exact).cwiseAbs().maxCoeff() <= 1e-6 * std::max(1.0, exact.cwiseAbs().maxCoeff()));
  }
}

TEST_CASE("vanishing denominator is rejected") {
  GeodesicParams p;
  p.n = 1;
  p.a = CVector::Ones(2);
  p.alpha = CVector::Zero(2);
  p.r = {0, 0};
  CHECK_THROWS_AS(evaluate(p, 0.3), InvalidParameters);
}

TEST_CASE("tau identities of the four families") {
  double worst_r0_on_d = 0.0;
  for (std::uint64_t seed = 0; seed < 300; ++seed) {
    for (Family f : {Family::A, Family::B, Family::C, Family::D}) {
      const CandidateFamily fam = sample_family(f, seed);
      CHECK(validate(fam).empty());
      CHECK(tau_identity_residual(fam) <= 1e-9);
    }
    worst_r0_on_d = std::max(worst_r0_on_d,
                             tau_identity_residual(sample_family(Family::D, seed), GammaRule::r0_formula));
  }
  CHECK(worst_r0_on_d > 1e-3);
}

TEST_CASE("family names and sampler determinism") {
  for (Family f : {Family::A, Family::B, Family::C, Family::D}) {
    CHECK(family_from_string(to_string(f)) == f);
    const CandidateFamily x = sample_family(f, 99);
    const CandidateFamily y = sample_family(f, 99);
    CHECK(x.a2 == y.a2);
    CHECK(x.alpha2 == y.alpha2);
  }
  CHECK_FALSE(family_from_string("E"));
}
