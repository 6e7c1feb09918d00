#include "quadmaps/invariants.hpp"

#include <array>

#include "quadmaps/poly.hpp"

namespace quadmaps {

using RPoly = Poly<Rational>;

QuadMap critical_point_normal_form(const Rational& a, const Rational& b, const Rational& c, const Rational& d) {
  return QuadMap({a, 0, b}, {c, 0, d});
}

QuadMap fixed_point_normal_form(const Rational& l1, const Rational& l2) { return QuadMap({1, l1, 0}, {0, l2, 1}); }

CubicForm<Rational> fixed_point_form(const QuadMap& phi) {
  const auto& a = phi.a();
  const auto& b = phi.b();
  CubicForm<Rational> f{-b.c0, a.c0 - b.c1, a.c1 - b.c2, a.c2};
  if (f.is_zero()) throw DomainError("fixed-point form vanishes identically");
  return f;
}

Rational multiplier(const QuadMap& phi, const Point& p) {
  if (!(evaluate(phi, p) == p)) throw DomainError("point not fixed");
  const auto& a = phi.a();
  const auto& b = phi.b();
  if (p.is_infinity()) {
    // psi(w) = B(1, w) / A(1, w); psi(0) = 0 forces b0 = 0, so psi'(0) = b1 / a0.
    return b.c1 / a.c0;
  }
  const Rational& z = p.x();
  const Rational av = a(z, 1), bv = b(z, 1);
  const Rational da = Rational(2) * a.c0 * z + a.c1;
  const Rational db = Rational(2) * b.c0 * z + b.c1;
  return (da * bv - av * db) / (bv * bv);
}

namespace {

// Trace of multiplication by g on Q[z]/(f), deg f = 3, basis 1, z, z^2.
Rational trace_mod(const RPoly& g, const RPoly& f) {
  Rational t;
  RPoly basis({Rational(1)});
  const RPoly z({Rational(0), Rational(1)});
  for (int j = 0; j < 3; ++j) {
    const RPoly prod = (g * basis) % f;
    if (prod.degree() >= j) t += prod[static_cast<std::size_t>(j)];
    basis = basis * z;
  }
  return t;
}

MilnorPoint sigma_from_traces(const QuadMap& phi) {
  const auto& a = phi.a();
  const auto& b = phi.b();
  const auto fix = fixed_point_form(phi);
  const RPoly f({fix.c3, fix.c2, fix.c1, fix.c0});
  const RPoly pa({a.c2, a.c1, a.c0});
  const RPoly pb({b.c2, b.c1, b.c0});
  // lambda(z) = (A'B - AB') / B^2; B is a unit mod f since Res(A, B) != 0.
  const RPoly num = pa.derivative() * pb - pa * pb.derivative();
  const RPoly binv = inverse_mod(pb, f);
  const RPoly lambda = (num * ((binv * binv) % f)) % f;
  const RPoly lambda2 = (lambda * lambda) % f;
  const RPoly lambda3 = (lambda2 * lambda) % f;
  const Rational p1 = trace_mod(lambda, f), p2 = trace_mod(lambda2, f), p3 = trace_mod(lambda3, f);
  return {p1, (p1 * p1 - p2) / Rational(2), (p1 * p1 * p1 - Rational(3) * p1 * p2 + Rational(2) * p3) / Rational(6)};
}

}  // namespace

MilnorPoint sigma_invariants(const QuadMap& phi) {
  if (!phi.b().c0.is_zero()) return sigma_from_traces(phi);
  // A fixed point at infinity drops deg F(z,1); shear (X:Y) -> (X : kX + Y)
  // until none of the fixed points is sent to infinity.
  for (long k = 1;; ++k) {
    const QuadMap psi = conjugate(phi, Mobius(1, 0, k, 1));
    if (!psi.b().c0.is_zero()) return sigma_from_traces(psi);
  }
}

std::pair<CpnfInvariants, MilnorPoint> cpnf_invariants(const Rational& a, const Rational& b, const Rational& c,
                                                       const Rational& d) {
  const Rational det = a * d - b * c;
  if (det.is_zero()) throw DomainError("degenerate critical normal form");
  const CpnfInvariants inv{a * d / det, (a * a * a * b + c * d * d * d) / (det * det)};
  const Rational s1 = Rational(8) * inv.A - Rational(6);
  const Rational s2 = Rational(8) * inv.A * inv.A - Rational(20) * inv.A + Rational(4) * inv.Sigma + Rational(12);
  return {inv, MilnorPoint{s1, s2, s1 - Rational(2)}};
}

std::string to_json(const MilnorPoint& m) {
  return R"({"sigma1": ")" + m.sigma1.str() + R"(", "sigma2": ")" + m.sigma2.str() + R"(", "sigma3": ")" +
         m.sigma3.str() + "\"}";
}

}  // namespace quadmaps
