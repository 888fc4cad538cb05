#include "fbh/automorphism.hpp"

#include <cmath>
#include <string>

#include "fbh/domain.hpp"
#include "fbh/errors.hpp"

namespace fbh {

namespace {

constexpr double kUnitaryTol = 1e-12;

void require_unitary(const CMatrix& m, const char* name) {
  if (m.rows() != m.cols() || m.rows() < 1) {
    throw InvalidArgument(std::string(name) + " must be a nonempty square matrix");
  }
  const CMatrix defect = m * m.adjoint() - CMatrix::Identity(m.rows(), m.cols());
  if (defect.cwiseAbs().maxCoeff() > kUnitaryTol) {
    throw InvalidArgument(std::string(name) + " is not unitary");
  }
}

// <x, y> = sum_j x_j conj(y_j)
Complex inner(const CVector& x, const CVector& y) {
  return (x.array() * y.array().conjugate()).sum();
}

}  // namespace

Automorphism::Automorphism(CMatrix u, CMatrix v, CVector a)
    : u_(std::move(u)), v_(std::move(v)), a_(std::move(a)) {
  require_unitary(u_, "U");
  require_unitary(v_, "V");
  if (a_.size() != u_.rows()) {
    throw DimensionMismatch("translation length " + std::to_string(a_.size()) +
                            " does not match U of size " +
                            std::to_string(u_.rows()));
  }
}

Automorphism Automorphism::identity(DomainSig sig) {
  return {CMatrix::Identity(sig.n, sig.n), CMatrix::Identity(sig.m, sig.m),
          CVector::Zero(sig.n)};
}

Automorphism Automorphism::translation(const CVector& a, int m) {
  const auto n = static_cast<int>(a.size());
  return {CMatrix::Identity(n, n), CMatrix::Identity(m, m), a};
}

Automorphism Automorphism::rotation(const CMatrix& u, const CMatrix& v) {
  return {u, v, CVector::Zero(u.rows())};
}

Point Automorphism::apply(const Point& p) const {
  check_dims(sig(), p);
  const Complex scale = std::exp(inner(p.z, a_) - 0.5 * a_.squaredNorm());
  return {(p.z - a_) * u_, scale * (p.w * v_)};
}

CMatrix Automorphism::jacobian(const Point& p) const {
  check_dims(sig(), p);
  const int n = sig().n;
  const int m = sig().m;
  const Complex scale = std::exp(inner(p.z, a_) - 0.5 * a_.squaredNorm());
  const CVector wv = p.w * v_;

  CMatrix jac = CMatrix::Zero(n + m, n + m);
  // z' = (z - a) U, so dz'_i/dz_j = U_{ji}.
  jac.topLeftCorner(n, n) = u_.transpose();
  // w'_k = scale * (wV)_k with d scale / dz_j = conj(a_j) * scale.
  jac.bottomLeftCorner(m, n) = scale * (wv.transpose() * a_.conjugate());
  jac.bottomRightCorner(m, m) = scale * v_.transpose();
  return jac;
}

TangentVector Automorphism::push_forward(const Point& p,
                                         const TangentVector& v) const {
  check_dims(sig(), v);
  const CVector out = v.stacked() * jacobian(p).transpose();
  return TangentVector::from_stacked(out, sig());
}

Automorphism Automorphism::inverse() const {
  // z = z' U* + a and the w factor becomes exp(<z', -aU> - |aU|^2 / 2).
  return {u_.adjoint(), v_.adjoint(), -(a_ * u_)};
}

Automorphism compose(const Automorphism& outer, const Automorphism& inner_map) {
  if (!(outer.sig() == inner_map.sig())) {
    throw DimensionMismatch("compose: automorphisms act on different domains");
  }
  // outer o inner: translation a2 + a1 U2*, rotation U2 U1, and the leftover
  // phase exp(-i Im<a2, a1 U2*>) goes into V.
  const CVector shifted = outer.a() * inner_map.u().adjoint();
  const Complex cross = inner(inner_map.a(), shifted);
  const Complex phase = std::exp(Complex(0.0, -cross.imag()));
  return {inner_map.u() * outer.u(), phase * (inner_map.v() * outer.v()),
          inner_map.a() + shifted};
}

NormalPosition reduce_to_normal_position(const Point& p) {
  const DomainSig sig = p.sig();
  if (sig.m != 1) {
    throw DimensionMismatch("reduce_to_normal_position needs m = 1");
  }
  if (!contains(sig, p)) {
    throw NotInterior("reduce_to_normal_position: point is not interior");
  }
  const Automorphism shift = Automorphism::translation(p.z, 1);
  const Complex w1 = shift.apply(p).w(0);
  const double b = std::abs(w1);
  CMatrix phase = CMatrix::Identity(1, 1);
  if (b > 0.0) phase(0, 0) = std::conj(w1) / b;
  const auto rot = Automorphism::rotation(CMatrix::Identity(sig.n, sig.n), phase);
  return {compose(rot, shift), b};
}

CMatrix random_unitary(int dim, Rng& rng) {
  CMatrix g(dim, dim);
  for (int i = 0; i < dim; ++i) {
    for (int j = 0; j < dim; ++j) g(i, j) = rng.complex_normal();
  }
  Eigen::HouseholderQR<CMatrix> qr(g);
  CMatrix q = qr.householderQ();
  const CMatrix r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (int j = 0; j < dim; ++j) {
    const double mag = std::abs(r(j, j));
    if (mag > 0.0) q.col(j) *= r(j, j) / mag;
  }
  return q;
}

Automorphism random_automorphism(DomainSig sig, Rng& rng,
                                 double translation_scale) {
  CVector a(sig.n);
  for (int j = 0; j < sig.n; ++j) a(j) = rng.complex_normal(translation_scale);
  return {random_unitary(sig.n, rng), random_unitary(sig.m, rng), a};
}

}  // namespace fbh
