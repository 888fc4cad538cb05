#include <array>
#include <cmath>
#include <sstream>

#include "doctest.h"
#include "fbh/errors.hpp"
#include "fbh/schwarz.hpp"
#include "oracle_values.hpp"

using namespace fbh;
using namespace fbh::schwarz;

namespace {

constexpr std::array<DomainSig, 4> kTargets{{{1, 1}, {2, 1}, {1, 2}, {2, 3}}};

const MapUnderTest& find(const std::vector<MapUnderTest>& maps, const std::string& label) {
  for (const auto& m : maps) {
    if (m.label == label) return m;
  }
  FAIL("missing built-in " << label);
  return maps.front();
}

}  // namespace

TEST_CASE("every built-in passes both inequalities") {
  for (DomainSig target : kTargets) {
    const auto maps = builtin_examples(target);
    CHECK(maps.size() == 7);
    for (const auto& map : maps) {
      CAPTURE(map.label);
      const SchwarzReport r = audit(map);
      CHECK(r.pass_i);
      CHECK(r.pass_ii);
      CHECK(std::abs(r.lambda_imag) <= 1e-10);
      CHECK(r.dh1_dz <= 1e-10);
      CHECK(r.normal_residual <= 1e-10);
      CHECK(r.lambda >= r.lower_bound - 1e-10);
      CHECK(r.tangential_norm <= r.sqrt_lambda + 1e-8);
      CHECK(max_defining_value_on_grid(map) < 0.0);
    }
  }
}

TEST_CASE("sharp cases") {
  const auto maps = builtin_examples({2, 3});
  const SchwarzReport embed = audit(find(maps, "embed"));
  CHECK(embed.lambda == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(std::abs(embed.lambda - embed.lower_bound) <= 1e-10);
  CHECK(embed.tangential_norm == doctest::Approx(1.0).epsilon(1e-15));

  const SchwarzReport mob = audit(find(maps, "mobius c=0.3"));
  CHECK(std::abs(mob.lambda - oracle::kMobius_lambda) <= 1e-12);
  CHECK(std::abs(mob.lambda - mob.lower_bound) <= 1e-10);
  CHECK(mob.tangential_norm == 0.0);

  for (double c : {0.1, 0.5}) {
    std::ostringstream label;
    label << "mobius c=" << c;
    const SchwarzReport r = audit(find(maps, label.str()));
    CHECK(r.lambda == doctest::Approx((1.0 - c) / (1.0 + c)).epsilon(1e-14));
  }
}

TEST_CASE("finite-difference Jacobian agrees with the analytic one") {
  for (DomainSig target : kTargets) {
    for (MapUnderTest map : builtin_examples(target)) {
      const SchwarzReport exact = audit(map);
      map.jac = nullptr;
      const SchwarzReport numeric = audit(map);
      CHECK_FALSE(numeric.analytic_jacobian);
      CHECK(numeric.lambda == doctest::Approx(exact.lambda).epsilon(1e-8));
      CHECK(numeric.tangential_norm == doctest::Approx(exact.tangential_norm).epsilon(1e-8));
    }
  }
}

TEST_CASE("hypothesis violations") {
  const DomainSig target{1, 1};
  MapUnderTest not_holo{target,
                        [](const Point& x) { return Point::d11(std::conj(x.z(0)), x.w(0)); },
                        nullptr, "conjugate"};
  CHECK_THROWS_AS(audit(not_holo), MapHypothesisViolation);

  MapUnderTest misses_q{target,
                        [](const Point& x) { return Point::d11(x.z(0), 0.5 * x.w(0)); },
                        nullptr, "half"};
  CHECK_THROWS_AS(audit(misses_q), MapHypothesisViolation);
}

TEST_CASE("boundary points") {
  CHECK(boundary_point_p().w(0) == Complex(1.0, 0.0));
  const Point q = boundary_point_q({2, 3});
  CHECK(q.z.squaredNorm() == 0.0);
  CHECK(q.w(0) == Complex(1.0, 0.0));
  CHECK(q.w.squaredNorm() == 1.0);
}
