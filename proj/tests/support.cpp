#include "support.hpp"

namespace tmrat::testing {

namespace {

Element det3(const Element& a, const Element& b, const Element& c, const Element& d, const Element& e,
             const Element& f, const Element& g, const Element& h, const Element& i) {
  return a * (e * i - f * h) - b * (d * i - f * g) + c * (d * h - e * g);
}

// (x - y) for affine points. An infinite point appears in exactly one
// numerator and one denominator factor, so those cancel to 1; two equal
// infinite points give 0 like any other coincidence.
Element diff(const ProjPoint& x, const ProjPoint& y) {
  if (x.is_infinity() && y.is_infinity()) return x.field().zero();
  if (x.is_infinity() || y.is_infinity()) return x.field().one();
  return x.value() - y.value();
}

}  // namespace

Element sylvester_resultant(const std::array<Element, 6>& c) {
  // Rows: (a b c 0) (0 a b c) (d e f 0) (0 d e f); cofactor expansion down
  // the first column.
  const Element& a = c[0];
  const Element& b = c[1];
  const Element& cc = c[2];
  const Element& d = c[3];
  const Element& e = c[4];
  const Element& f = c[5];
  const Element z = a.field().zero();
  const Element m0 = det3(a, b, cc, e, f, z, d, e, f);
  const Element m2 = det3(b, cc, z, a, b, cc, d, e, f);
  return a * m0 + d * m2;
}

CrossRatioTriple cross_ratio_oracle(const TotalMarking& m) {
  const Field& F = m.field();
  std::array<ProjPoint, 3> out{ProjPoint::infinity(F), ProjPoint::infinity(F), ProjPoint::infinity(F)};
  for (std::size_t i = 0; i < 3; ++i) {
    const ProjPoint& wj = m.p((i + 1) % 3);
    const ProjPoint& wk = m.p((i + 2) % 3);
    out[i] = ProjPoint(diff(wj, m.q(0)) * diff(wk, m.q(1)), diff(wj, m.q(1)) * diff(wk, m.q(0)));
  }
  return CrossRatioTriple{out};
}

bool w_equation_oracle(const CrossRatioTriple& r) {
  return r[0].x() * r[1].x() * r[2].x() == r[0].y() * r[1].y() * r[2].y();
}

Element derivative_oracle(const std::array<Element, 6>& c, const ProjPoint& p) {
  if (p.is_infinity()) {
    // psi(z) = 1/phi(1/z) = (f z^2 + e z + d)/(c z^2 + b z + a) fixes 0.
    return derivative_oracle({c[5], c[4], c[3], c[2], c[1], c[0]}, ProjPoint::affine(p.field().zero()));
  }
  const Element& z = p.value();
  const Element two = z.field().from_int(2);
  const Element n = c[0] * z * z + c[1] * z + c[2];
  const Element dn = two * c[0] * z + c[1];
  const Element d = c[3] * z * z + c[4] * z + c[5];
  const Element dd = two * c[3] * z + c[4];
  return (dn * d - n * dd) / (d * d);
}

Element critical_discriminant_oracle(const std::array<Element, 6>& c) {
  const Element A = c[0] * c[4] - c[1] * c[3];
  const Element B = c[0].field().from_int(2) * (c[0] * c[5] - c[2] * c[3]);
  const Element C = c[1] * c[5] - c[2] * c[4];
  return B * B - c[0].field().from_int(4) * A * C;
}

}  // namespace tmrat::testing
