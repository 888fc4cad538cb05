#include <array>
#include <cmath>

#include "doctest.h"
#include "fbh/automorphism.hpp"
#include "fbh/domain.hpp"
#include "fbh/errors.hpp"
#include "fbh/verify.hpp"
#include "oracle_values.hpp"

using namespace fbh;

namespace {

constexpr std::array<DomainSig, 4> kSigs{{{1, 1}, {2, 1}, {1, 2}, {2, 3}}};

double gap(const CVector& a, const CVector& b) { return (a - b).cwiseAbs().maxCoeff(); }

}  // namespace

TEST_CASE("identity and unitarity checks") {
  const Automorphism id = Automorphism::identity({2, 3});
  Rng rng(1);
  const Point p = verify::sample_interior({2, 3}, rng);
  CHECK(gap(id.apply(p).stacked(), p.stacked()) == 0.0);
  CHECK((id.jacobian(p) - CMatrix::Identity(5, 5)).cwiseAbs().maxCoeff() == 0.0);

  CMatrix bad = CMatrix::Identity(1, 1) * 1.1;
  CHECK_THROWS_AS(Automorphism::rotation(bad, CMatrix::Identity(1, 1)), InvalidArgument);
  CHECK_THROWS_AS(Automorphism(CMatrix::Identity(2, 2), CMatrix::Identity(1, 1), CVector::Zero(1)),
                  InvalidArgument);
}

TEST_CASE("automorphisms preserve the domain and its boundary") {
  Rng rng(11);
  for (int i = 0; i < 100; ++i) {
    const DomainSig sig = kSigs[i % 4];
    const Automorphism a = random_automorphism(sig, rng);
    const Point p = verify::sample_interior(sig, rng);
    CHECK(contains(sig, a.apply(p)));
    // Scaling w onto the boundary commutes with the automorphism.
    Point edge = p;
    edge.w = p.w.normalized() * std::exp(-0.5 * p.z.squaredNorm());
    CHECK(std::abs(defining_value(sig, a.apply(edge))) < 1e-12 * std::max(1.0, a.apply(edge).w.squaredNorm()));
  }
}

TEST_CASE("composition and inverse") {
  Rng rng(12);
  for (int i = 0; i < 100; ++i) {
    const DomainSig sig = kSigs[i % 4];
    const Automorphism a = random_automorphism(sig, rng);
    const Automorphism b = random_automorphism(sig, rng);
    const Point p = verify::sample_interior(sig, rng);
    const Point direct = a.apply(b.apply(p));
    CHECK(gap(compose(a, b).apply(p).stacked(), direct.stacked()) < 1e-12 * (1.0 + direct.stacked().norm()));
    CHECK(gap(a.inverse().apply(a.apply(p)).stacked(), p.stacked()) < 1e-12);
  }
}

TEST_CASE("two translations compose with a unimodular phase") {
  CVector a(2), b(2);
  a << Complex(0.4, 0.1), Complex(-0.2, 0.3);
  b << Complex(0.1, -0.5), Complex(0.6, 0.2);
  const Automorphism c = compose(Automorphism::translation(b, 1), Automorphism::translation(a, 1));
  CHECK(gap(c.a(), a + b) < 1e-15);
  CHECK((c.u() - CMatrix::Identity(2, 2)).cwiseAbs().maxCoeff() < 1e-15);
  const double im = (a * b.adjoint())(0, 0).imag();
  CHECK(std::abs(c.v()(0, 0) - std::polar(1.0, -im)) < 1e-15);
}

TEST_CASE("normal position") {
  const NormalPosition np = reduce_to_normal_position(Point::d11(1.0, 0.2));
  CHECK(np.b == doctest::Approx(oracle::kReduce_b).epsilon(1e-14));
  const Point moved = np.reduction.apply(Point::d11(1.0, 0.2));
  CHECK(std::abs(moved.z(0)) < 1e-15);
  CHECK(std::abs(moved.w(0) - np.b) < 1e-15);

  CHECK_THROWS_AS(reduce_to_normal_position(Point::d11(0.0, 1.0)), NotInterior);
  Point two{CVector::Zero(2), CVector::Zero(1)};
  CHECK_THROWS_AS(reduce_to_normal_position(Point{CVector::Zero(1), CVector::Zero(2)}), DimensionMismatch);
  CHECK_NOTHROW(reduce_to_normal_position(two));
}

TEST_CASE("push-forward is v J^T and matches finite differences") {
  Rng rng(13);
  for (int i = 0; i < 40; ++i) {
    const DomainSig sig = kSigs[i % 4];
    const Automorphism a = random_automorphism(sig, rng);
    const Point p = verify::sample_interior(sig, rng);
    CVector v(sig.total());
    for (int k = 0; k < sig.total(); ++k) v(k) = rng.complex_normal();
    const TangentVector tv = TangentVector::from_stacked(v, sig);
    const CVector pushed = a.push_forward(p, tv).stacked();
    CHECK(gap(pushed, v * a.jacobian(p).transpose()) < 1e-14);

    const double h = 1e-6;
    const CVector fd = (a.apply(Point::from_stacked(p.stacked() + h * v, sig)).stacked() -
                        a.apply(Point::from_stacked(p.stacked() - h * v, sig)).stacked()) /
                       (2.0 * h);
    CHECK(gap(fd, pushed) < 1e-6 * (1.0 + pushed.norm()));
  }
}

TEST_CASE("random unitaries are unitary") {
  Rng rng(14);
  for (int dim : {1, 2, 3, 5}) {
    const CMatrix u = random_unitary(dim, rng);
    CHECK((u * u.adjoint() - CMatrix::Identity(dim, dim)).cwiseAbs().maxCoeff() < 1e-13);
  }
}
