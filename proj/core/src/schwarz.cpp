#include "fbh/schwarz.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "fbh/automorphism.hpp"
#include "fbh/domain.hpp"
#include "fbh/errors.hpp"

namespace fbh::schwarz {

namespace {

constexpr Complex kI{0.0, 1.0};

Point embed_point(DomainSig target, Complex z, Complex w) {
  Point out{CVector::Zero(target.n), CVector::Zero(target.m)};
  out.z(0) = z;
  out.w(0) = w;
  return out;
}

// Jacobian of (z, w) -> (s z e_1, t(w) e_1) with s constant and t' given.
CMatrix embed_jacobian(DomainSig target, Complex dz_scale, Complex dw_scale) {
  CMatrix jac = CMatrix::Zero(target.total(), 2);
  jac(0, 0) = dz_scale;
  jac(target.n, 1) = dw_scale;
  return jac;
}

std::string mobius_label(double c) {
  std::ostringstream os;
  os << "mobius c=" << c;
  return os.str();
}

// A unitary of C^k built from plane rotations; deterministic.
CMatrix fixed_unitary(int k, double angle) {
  CMatrix u = CMatrix::Identity(k, k);
  for (int j = 0; j + 1 < k; ++j) {
    CMatrix g = CMatrix::Identity(k, k);
    const double c = std::cos(angle * (j + 1));
    const double s = std::sin(angle * (j + 1));
    g(j, j) = c;
    g(j, j + 1) = -s * kI;
    g(j + 1, j) = -s * kI;
    g(j + 1, j + 1) = c;
    u = u * g;
  }
  if (k == 1) u(0, 0) = std::polar(1.0, angle);
  return u;
}

}  // namespace

Point boundary_point_p() { return Point::d11(0.0, 1.0); }

Point boundary_point_q(DomainSig target) {
  return embed_point(target, 0.0, 1.0);
}

CMatrix map_jacobian(const MapUnderTest& map, const Point& at, double step,
                     double holo_tol) {
  if (map.jac) return map.jac(at);
  const CVector base = at.stacked();
  const DomainSig src{1, 1};
  CMatrix jac(map.target.total(), 2);
  for (int j = 0; j < 2; ++j) {
    auto diff = [&](Complex dir) {
      CVector plus = base;
      CVector minus = base;
      plus(j) += step * dir;
      minus(j) -= step * dir;
      const CVector fp = map.eval(Point::from_stacked(plus, src)).stacked();
      const CVector fm = map.eval(Point::from_stacked(minus, src)).stacked();
      return CVector((fp - fm) / (2.0 * step * dir));
    };
    const CVector along_re = diff(Complex(1.0, 0.0));
    const CVector along_im = diff(kI);
    const double scale = std::max(1.0, along_re.cwiseAbs().maxCoeff());
    if ((along_re - along_im).cwiseAbs().maxCoeff() > holo_tol * scale) {
      throw MapHypothesisViolation("map '" + map.label +
                                   "' is not holomorphic at the evaluation point");
    }
    jac.col(j) = (0.5 * (along_re + along_im)).transpose();
  }
  return jac;
}

SchwarzReport audit(const MapUnderTest& map, double tol) {
  const DomainSig target = map.target;
  const Point p = boundary_point_p();
  const Point q = boundary_point_q(target);

  const Point fp = map.eval(p);
  check_dims(target, fp);
  const double miss = (fp.stacked() - q.stacked()).cwiseAbs().maxCoeff();
  if (miss > 1e-10) {
    throw MapHypothesisViolation("map '" + map.label + "' does not send p to q");
  }

  const CMatrix jac = map_jacobian(map, p);
  const int h1 = target.n;  // row of h_1
  const Complex dh1_dw = jac(h1, 1);
  const Complex dh1_dz = jac(h1, 0);

  SchwarzReport rep;
  rep.label = map.label;
  rep.target = target;
  rep.analytic_jacobian = static_cast<bool>(map.jac);
  rep.lambda = dh1_dw.real();
  rep.lambda_imag = dh1_dw.imag();
  rep.dh1_dz = std::abs(dh1_dz);

  // conj(J)^T q^T picks out conj(row h_1); compare with lambda (0, 1)^T.
  CVector normal = jac.row(h1).conjugate();
  normal(1) -= rep.lambda;
  rep.normal_residual = normal.norm();

  const Complex h1_center = map.eval(Point::d11(0.0, 0.0)).w(0);
  rep.lower_bound = std::norm(1.0 - std::conj(h1_center)) / (1.0 - std::norm(h1_center));

  // T^{1,0}_p of D_{1,1} is spanned by (1, 0); its image is the z-column.
  // Components in T^{1,0}_q are all but h_1.
  CVector tangential = jac.col(0).transpose();
  tangential(h1) = 0.0;
  rep.tangential_norm = tangential.norm();
  rep.sqrt_lambda = rep.lambda > 0.0 ? std::sqrt(rep.lambda) : 0.0;

  rep.pass_i = rep.normal_residual <= tol && std::abs(rep.lambda_imag) <= tol &&
               rep.lambda >= rep.lower_bound - tol;
  rep.pass_ii = rep.lambda > 0.0 && rep.tangential_norm <= rep.sqrt_lambda + tol;
  return rep;
}

std::vector<MapUnderTest> builtin_examples(DomainSig target) {
  std::vector<MapUnderTest> out;

  out.push_back({target,
                 [target](const Point& x) { return embed_point(target, x.z(0), x.w(0)); },
                 [target](const Point&) { return embed_jacobian(target, 1.0, 1.0); },
                 "embed"});

  const Complex spin = std::polar(1.0, 0.7);
  out.push_back({target,
                 [target, spin](const Point& x) {
                   return embed_point(target, spin * x.z(0), x.w(0));
                 },
                 [target, spin](const Point&) { return embed_jacobian(target, spin, 1.0); },
                 "rotation"});

  // |t z| <= |z| keeps |w|^2 < exp(-|z|^2) <= exp(-|t z|^2).
  const double squeeze = 0.5;
  out.push_back({target,
                 [target, squeeze](const Point& x) {
                   return embed_point(target, squeeze * x.z(0), x.w(0));
                 },
                 [target, squeeze](const Point&) {
                   return embed_jacobian(target, squeeze, 1.0);
                 },
                 "squeeze t=0.5"});

  for (double c : {0.1, 0.3, 0.5}) {
    out.push_back({target,
                   [target, c](const Point& x) {
                     return embed_point(target, 0.0, (x.w(0) + c) / (1.0 + c * x.w(0)));
                   },
                   [target, c](const Point& x) {
                     const Complex d = 1.0 + c * x.w(0);
                     return embed_jacobian(target, 0.0, (1.0 - c * c) / (d * d));
                   },
                   mobius_label(c)});
  }

  // Embed followed by an automorphism of D_{n,m} fixing q: a z-rotation and a
  // w-rotation acting only on w_2..w_m.
  CMatrix wrot = CMatrix::Identity(target.m, target.m);
  if (target.m > 1) {
    wrot.bottomRightCorner(target.m - 1, target.m - 1) = fixed_unitary(target.m - 1, 0.4);
  }
  const Automorphism fix_q = Automorphism::rotation(fixed_unitary(target.n, 0.9), wrot);
  out.push_back({target,
                 [target, fix_q](const Point& x) {
                   return fix_q.apply(embed_point(target, x.z(0), x.w(0)));
                 },
                 [target, fix_q](const Point& x) {
                   const Point inner = embed_point(target, x.z(0), x.w(0));
                   return CMatrix(fix_q.jacobian(inner) * embed_jacobian(target, 1.0, 1.0));
                 },
                 "embed+fixing-unitary"});
  return out;
}

double max_defining_value_on_grid(const MapUnderTest& map, int radial,
                                  int angular) {
  double worst = -std::numeric_limits<double>::infinity();
  const DomainSig src{1, 1};
  for (int i = 0; i < radial; ++i) {
    const double zr = 2.5 * i / radial;
    const double wmax = std::exp(-0.5 * zr * zr);
    for (int j = 1; j <= radial; ++j) {
      const double wr = wmax * j / (radial + 1.0);
      for (int k = 0; k < angular; ++k) {
        const double th = 2.0 * std::numbers::pi * k / angular;
        const Point x = Point::d11(std::polar(zr, th), std::polar(wr, 1.3 * th));
        if (!contains(src, x)) continue;
        worst = std::max(worst, defining_value(map.target, map.eval(x)));
      }
    }
  }
  return worst;
}

}  // namespace fbh::schwarz
