#include <cmath>

#include "doctest.h"
#include "fbh/detail/bracket.hpp"
#include "fbh/errors.hpp"
#include "fbh/random.hpp"
#include "fbh/rootsolve.hpp"
#include "oracle_values.hpp"

using namespace fbh;
using namespace fbh::rootsolve;

TEST_CASE("g at the left end equals its closed form") {
  const double b = 0.5;
  const double lb = std::log(b);
  const double closed = std::pow(1.0 - b * b, 2) / (4.0 * b * b * lb * lb) - 1.0;
  CHECK(g_function(b, 0.0) == doctest::Approx(closed).epsilon(1e-14));
  CHECK(g_function(b, 0.0) == doctest::Approx(oracle::kG_half_0).epsilon(1e-14));
  CHECK(g_function(b, 0.7) == doctest::Approx(oracle::kG_half_07).epsilon(1e-12));
}

TEST_CASE("g vanishes at the right end") {
  Rng rng(21);
  for (int i = 0; i < 1000; ++i) {
    const double b = rng.uniform(0.01, 0.99);
    CHECK(std::abs(g_function(b, t_max(b))) <= 1e-10);
  }
}

TEST_CASE("g has exactly one interior sign change") {
  Rng rng(22);
  for (int i = 0; i < 50; ++i) {
    const double b = rng.uniform(0.05, 0.95);
    const double tm = t_max(b);
    int changes = 0;
    double prev = g_function(b, 0.0);
    for (int k = 1; k < 4095; ++k) {
      const double cur = g_function(b, tm * k / 4095.0);
      if ((cur < 0.0) != (prev < 0.0)) ++changes;
      prev = cur;
    }
    CHECK(changes == 1);
  }
}

TEST_CASE("beta") {
  const double beta = solve_beta(0.5);
  CHECK(beta == doctest::Approx(oracle::kBeta_half).epsilon(1e-10));
  CHECK(beta > 0.59);
  CHECK(beta < 0.60);
  CHECK(std::abs(g_function(0.5, beta)) <= 1e-10);
  CHECK(g_function(0.5, 0.5 * beta) > 0.0);
  CHECK(g_function(0.5, 0.5 * (beta + t_max(0.5))) < 0.0);
  CHECK(g_minimizer(0.5) > beta);
}

TEST_CASE("h and its minimiser") {
  CHECK(h_function(0.5, 0.7) == doctest::Approx(oracle::kH_half_07).epsilon(1e-13));
  CHECK(h_function(0.5, 0.9) == doctest::Approx(oracle::kH_half_09).epsilon(1e-13));
  const double ts = t_star(0.5);
  CHECK(ts == doctest::Approx(oracle::kTStar_half).epsilon(1e-13));
  CHECK(h_function(0.5, ts) == doctest::Approx(0.5).epsilon(1e-13));
  CHECK(h_function(0.5, ts - 0.1) > 0.5);
  CHECK(h_function(0.5, ts + 0.1) > 0.5);
  CHECK_THROWS_AS(h_function(0.5, 0.0), InvalidArgument);
  CHECK_THROWS_AS(h_function(0.5, t_max(0.5)), InvalidArgument);
}

TEST_CASE("alpha roots") {
  const auto two = solve_alpha_roots(0.5, oracle::kV_at_07);
  REQUIRE(two.size() == 2);
  CHECK(two[0] == doctest::Approx(0.7).epsilon(1e-12));
  CHECK(two[1] == doctest::Approx(oracle::kAlphaRoot2).epsilon(1e-12));

  const auto one = solve_alpha_roots(0.5, 1.0);
  REQUIRE(one.size() == 1);
  CHECK(one[0] == doctest::Approx(oracle::kTStar_half).epsilon(1e-12));

  CHECK_THROWS_AS(solve_alpha_roots(0.5, 0.99), NoRootBranch);
}

TEST_CASE("alpha roots solve the h equation over a range of b and v") {
  Rng rng(23);
  for (int i = 0; i < 500; ++i) {
    const double b = rng.uniform(0.05, 0.95);
    const double v = 4.0 * b * b * (1.0 + std::pow(10.0, rng.uniform(-6.0, 3.0)));
    for (double t : solve_alpha_roots(b, v)) {
      CHECK(t > 0.0);
      CHECK(t < t_max(b));
      CHECK(h_function(b, t) + 2.0 * b * b == doctest::Approx(v).epsilon(1e-9));
    }
  }
}

TEST_CASE("argument validation") {
  CHECK_THROWS_AS(t_max(0.0), InvalidArgument);
  CHECK_THROWS_AS(t_max(1.0), InvalidArgument);
  CHECK_THROWS_AS(g_function(0.5, -0.1), InvalidArgument);
  CHECK_THROWS_AS(g_function(0.5, t_max(0.5) + 0.1), InvalidArgument);
  const BranchData d = branch_data(0.5, 0.5);
  CHECK(d.alpha_roots.empty());
  CHECK(d.beta == doctest::Approx(oracle::kBeta_half).epsilon(1e-10));
}

TEST_CASE("bracketed solvers") {
  auto f = [](double x) { return x * x * x - 2.0; };
  auto df = [](double x) { return 3.0 * x * x; };
  const double root = std::cbrt(2.0);
  CHECK(detail::bisect(f, 0.0, 2.0, 1e-14, "cube").x == doctest::Approx(root).epsilon(1e-13));
  CHECK(detail::safeguarded_newton(f, df, 0.0, 2.0, 0.0, "cube").x ==
        doctest::Approx(root).epsilon(1e-15));
  CHECK_THROWS_AS(detail::bisect(f, 2.0, 3.0, 1e-14, "cube"), NumericFailure);
  CHECK_THROWS_AS(detail::safeguarded_newton(f, df, 2.0, 3.0, 1e-14, "cube"), NumericFailure);
}
