#pragma once

#include "fbh/random.hpp"
#include "fbh/types.hpp"

namespace fbh {

/// Element of Aut(D_{n,m}) in normal form
///
///   (z, w) -> ((z - a) U, exp(<z, a> - |a|^2 / 2) w V),
///
/// i.e. a translation followed by unitary rotations of the two blocks.
/// Composition re-normalises into this order; the scalar phase produced by
/// composing two translations is absorbed into V.
class Automorphism {
 public:
  /// Throws InvalidArgument unless U, V are unitary to 1e-12 and sizes agree.
  Automorphism(CMatrix u, CMatrix v, CVector a);

  static Automorphism identity(DomainSig sig);
  static Automorphism translation(const CVector& a, int m);
  static Automorphism rotation(const CMatrix& u, const CMatrix& v);

  DomainSig sig() const {
    return {static_cast<int>(u_.rows()), static_cast<int>(v_.rows())};
  }
  const CMatrix& u() const { return u_; }
  const CMatrix& v() const { return v_; }
  const CVector& a() const { return a_; }

  Point apply(const Point& p) const;

  /// Holomorphic Jacobian J_{ij} = dF_i / dzeta_j with zeta = (z, w); rows
  /// are outputs. Tangent vectors push forward as v * J^T.
  CMatrix jacobian(const Point& p) const;

  TangentVector push_forward(const Point& p, const TangentVector& v) const;

  Automorphism inverse() const;

 private:
  CMatrix u_;
  CMatrix v_;
  CVector a_;
};

/// The element acting as `outer(inner(p))`.
Automorphism compose(const Automorphism& outer, const Automorphism& inner);

struct NormalPosition {
  Automorphism reduction;
  double b;  ///< reduction.apply(p) == (0, b), 0 <= b < 1
};

/// Moves an interior point of D_{n,1} to (0, b) with b real and nonnegative,
/// by the translation a = z0 followed by a phase rotation of w. Throws
/// NotInterior for points outside the open domain.
NormalPosition reduce_to_normal_position(const Point& p);

/// Haar-ish random unitary from the QR factorisation of a complex Gaussian
/// matrix, with the diagonal phases of R fixed.
CMatrix random_unitary(int dim, Rng& rng);

/// Random normal-form element with translation entries ~ N(0, scale^2).
Automorphism random_automorphism(DomainSig sig, Rng& rng,
                                 double translation_scale = 1.0);

}  // namespace fbh
