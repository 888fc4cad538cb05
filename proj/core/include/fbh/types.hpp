#pragma once

#include <complex>
#include <cstddef>

#include <Eigen/Dense>

namespace fbh {

using Complex = std::complex<double>;

/// Points and tangent vectors are row vectors, matching the convention that
/// a linear map acts as `v * J^T`.
using CVector = Eigen::Matrix<Complex, 1, Eigen::Dynamic>;
using CMatrix = Eigen::Matrix<Complex, Eigen::Dynamic, Eigen::Dynamic>;

/// Dimensions (n, m) of D_{n,m} = {(z, w) in C^n x C^m : |w|^2 < exp(-|z|^2)}.
struct DomainSig {
  int n = 1;
  int m = 1;

  int total() const { return n + m; }
  bool operator==(const DomainSig&) const = default;
};

struct Point {
  CVector z;
  CVector w;

  DomainSig sig() const {
    return {static_cast<int>(z.size()), static_cast<int>(w.size())};
  }
  /// (z, w) concatenated into one row vector of length n + m.
  CVector stacked() const;
  static Point from_stacked(const CVector& v, DomainSig sig);
  /// Convenience for D_{1,1}.
  static Point d11(Complex z, Complex w);
};

struct TangentVector {
  CVector dz;
  CVector dw;

  DomainSig sig() const {
    return {static_cast<int>(dz.size()), static_cast<int>(dw.size())};
  }
  CVector stacked() const;
  static TangentVector from_stacked(const CVector& v, DomainSig sig);
  static TangentVector d11(Complex dz, Complex dw);
};

inline CVector Point::stacked() const {
  CVector out(z.size() + w.size());
  out << z, w;
  return out;
}

inline Point Point::from_stacked(const CVector& v, DomainSig sig) {
  return {v.head(sig.n), v.tail(sig.m)};
}

inline Point Point::d11(Complex z, Complex w) {
  Point p{CVector(1), CVector(1)};
  p.z(0) = z;
  p.w(0) = w;
  return p;
}

inline CVector TangentVector::stacked() const {
  CVector out(dz.size() + dw.size());
  out << dz, dw;
  return out;
}

inline TangentVector TangentVector::from_stacked(const CVector& v,
                                                 DomainSig sig) {
  return {v.head(sig.n), v.tail(sig.m)};
}

inline TangentVector TangentVector::d11(Complex dz, Complex dw) {
  TangentVector t{CVector(1), CVector(1)};
  t.dz(0) = dz;
  t.dw(0) = dw;
  return t;
}

}  // namespace fbh
