#pragma once

// Binary forms, points of P^1, Mobius transformations and quadratic
// rational maps (points of Rat_2).

#include <array>
#include <string>
#include <string_view>

#include "quadmaps/exactnum.hpp"

namespace quadmaps {

/// c0 X^2 + c1 XY + c2 Y^2. The zero form is allowed.
template <class F>
struct QuadForm {
  F c0, c1, c2;

  F operator()(const F& x, const F& y) const { return c0 * x * x + c1 * x * y + c2 * y * y; }
  bool is_zero() const { return quadmaps::is_zero(c0) && quadmaps::is_zero(c1) && quadmaps::is_zero(c2); }
  friend bool operator==(const QuadForm&, const QuadForm&) = default;
};

/// c0 X^3 + c1 X^2 Y + c2 X Y^2 + c3 Y^3.
template <class F>
struct CubicForm {
  F c0, c1, c2, c3;
  F operator()(const F& x, const F& y) const {
    return c0 * x * x * x + c1 * x * x * y + c2 * x * y * y + c3 * y * y * y;
  }
  bool is_zero() const {
    return quadmaps::is_zero(c0) && quadmaps::is_zero(c1) && quadmaps::is_zero(c2) && quadmaps::is_zero(c3);
  }
  friend bool operator==(const CubicForm&, const CubicForm&) = default;
};

/// An unchecked pair of quadratic forms (A, B); used for reductions, which
/// may be degenerate.
template <class F>
struct FormPair {
  QuadForm<F> a, b;
  friend bool operator==(const FormPair&, const FormPair&) = default;
};

/// A point of P^1 in canonical form: (x:1) if finite, else (1:0).
template <class F>
class ProjPoint {
 public:
  ProjPoint(F x, F y) : x_(std::move(x)), y_(std::move(y)) {
    if (quadmaps::is_zero(x_) && quadmaps::is_zero(y_)) throw DomainError("(0:0) is not a projective point");
    if (!quadmaps::is_zero(y_)) {
      x_ = x_ / y_;
      y_ = one_like(y_);
    } else {
      x_ = one_like(x_);
    }
  }

  const F& x() const { return x_; }
  const F& y() const { return y_; }
  bool is_infinity() const { return quadmaps::is_zero(y_); }
  std::string str() const { return to_string(x_) + ":" + to_string(y_); }

  friend bool operator==(const ProjPoint&, const ProjPoint&) = default;

 private:
  F x_, y_;
};

using Point = ProjPoint<Rational>;

inline bool operator<(const Point& p, const Point& q) {
  if (p.is_infinity() != q.is_infinity()) return q.is_infinity();
  return p.x() < q.x();
}

/// Parses "x:y" with rational coordinates.
Point parse_point(std::string_view text);

/// The 4x4 Sylvester determinant
///   | a0 a1 a2 0  |
///   | 0  a0 a1 a2 |
///   | b0 b1 b2 0  |
///   | 0  b0 b1 b2 |
/// expanded by cofactors along the first column.
template <class F>
F resultant(const FormPair<F>& m) {
  const auto& [a0, a1, a2] = m.a;
  const auto& [b0, b1, b2] = m.b;
  const F z = zero_like(a0);
  const auto det3 = [](const F& m00, const F& m01, const F& m02, const F& m10, const F& m11, const F& m12,
                       const F& m20, const F& m21, const F& m22) {
    return m00 * (m11 * m22 - m12 * m21) - m01 * (m10 * m22 - m12 * m20) + m02 * (m10 * m21 - m11 * m20);
  };
  // Column 0 is (a0, 0, b0, 0); the minors drop row 0 or row 2.
  const F m_row0 = det3(a0, a1, a2,   //
                        b1, b2, z,    //
                        b0, b1, b2);
  const F m_row2 = det3(a1, a2, z,    //
                        a0, a1, a2,   //
                        b0, b1, b2);
  return a0 * m_row0 + b0 * m_row2;
}

/// A point Q is a root of a nonzero form G; returns its multiplicity (0 if
/// G(Q) != 0). Characteristic independent: uses synthetic division.
template <class F>
int root_multiplicity(const QuadForm<F>& g, const ProjPoint<F>& p) {
  if (g.is_zero()) throw DomainError("multiplicity in the zero form");
  if (!quadmaps::is_zero(g(p.x(), p.y()))) return 0;
  if (p.is_infinity()) {
    // G(1, w) = c0 + c1 w + c2 w^2 vanishes at w = 0.
    return quadmaps::is_zero(g.c1) ? 2 : 1;
  }
  // g(z) = c0 z^2 + c1 z + c2 = (z - x)(c0 z + c1 + c0 x).
  if (quadmaps::is_zero(g.c0)) return 1;
  return quadmaps::is_zero(g.c0 * p.x() + g.c1 + g.c0 * p.x()) ? 2 : 1;
}

template <class F>
ProjPoint<F> evaluate(const FormPair<F>& m, const ProjPoint<F>& p) {
  return ProjPoint<F>(m.a(p.x(), p.y()), m.b(p.x(), p.y()));
}

/// Local degree e(P) in {1, 2}: with phi(P) = (u:v) and G = vA - uB, the
/// multiplicity of P as a root of G. Valid in every characteristic.
template <class F>
int local_degree(const FormPair<F>& m, const ProjPoint<F>& p) {
  const auto q = evaluate(m, p);
  const QuadForm<F> g{q.y() * m.a.c0 - q.x() * m.b.c0, q.y() * m.a.c1 - q.x() * m.b.c1,
                      q.y() * m.a.c2 - q.x() * m.b.c2};
  return root_multiplicity(g, p);
}

/// W = A_X B_Y - A_Y B_X. Identically zero in characteristic 2; use
/// local_degree there.
template <class F>
QuadForm<F> wronskian(const FormPair<F>& m) {
  const auto& [a0, a1, a2] = m.a;
  const auto& [b0, b1, b2] = m.b;
  const F two = one_like(a0) + one_like(a0);
  // A_X = 2a0 X + a1 Y, A_Y = a1 X + 2a2 Y, and likewise for B.
  const F ax_x = two * a0, ax_y = a1, ay_x = a1, ay_y = two * a2;
  const F bx_x = two * b0, bx_y = b1, by_x = b1, by_y = two * b2;
  return QuadForm<F>{ax_x * by_x - ay_x * bx_x,                        //
                     ax_x * by_y + ax_y * by_x - ay_x * bx_y - ay_y * bx_x,  //
                     ax_y * by_y - ay_y * bx_y};
}

/// Discriminant c1^2 - 4 c0 c2.
template <class F>
F discriminant(const QuadForm<F>& g) {
  const F four = one_like(g.c0) + one_like(g.c0) + one_like(g.c0) + one_like(g.c0);
  return g.c1 * g.c1 - four * g.c0 * g.c2;
}

/// An element of PGL_2(Q): (X:Y) -> (alpha X + beta Y : gamma X + delta Y).
class Mobius {
 public:
  /// Throws DomainError("singular matrix") when alpha delta - beta gamma == 0.
  Mobius(Rational alpha, Rational beta, Rational gamma, Rational delta);

  static Mobius identity();
  static Mobius swap();
  /// (X:Y) -> (s X : Y).
  static Mobius diagonal(const Rational& s);
  /// Matrix whose columns are representatives of p1 and p2, so that
  /// (1:0) -> p1 and (0:1) -> p2.
  static Mobius from_columns(const Point& p1, const Point& p2);
  /// Parses "alpha,beta;gamma,delta".
  static Mobius parse(std::string_view text);

  const Rational& alpha() const { return alpha_; }
  const Rational& beta() const { return beta_; }
  const Rational& gamma() const { return gamma_; }
  const Rational& delta() const { return delta_; }
  Rational det() const { return alpha_ * delta_ - beta_ * gamma_; }

  Point apply(const Point& p) const;
  /// The adjugate matrix, which represents the inverse in PGL_2.
  Mobius inverse() const;
  /// (this o g)(P) = this(g(P)).
  Mobius compose(const Mobius& g) const;

  std::string str() const;

  /// Equality as elements of PGL_2 (matrices up to scaling).
  bool projectively_equal(const Mobius& o) const;
  friend bool operator==(const Mobius&, const Mobius&) = default;

 private:
  Rational alpha_, beta_, gamma_, delta_;
};

/// A quadratic rational map over Q: a pair of forms with nonzero resultant.
class QuadMap {
 public:
  /// Throws DomainError("degenerate map") when Res(A, B) == 0.
  QuadMap(QuadForm<Rational> a, QuadForm<Rational> b);
  /// From (a0, a1, a2, b0, b1, b2).
  static QuadMap from_coefficients(const std::array<Rational, 6>& c);

  const QuadForm<Rational>& a() const { return forms_.a; }
  const QuadForm<Rational>& b() const { return forms_.b; }
  const FormPair<Rational>& forms() const { return forms_; }
  std::array<Rational, 6> coefficients() const;

  /// "a0,a1,a2;b0,b1,b2"
  std::string str() const;

  friend bool operator==(const QuadMap&, const QuadMap&) = default;

 private:
  FormPair<Rational> forms_;
};

/// Parses "a0,a1,a2;b0,b1,b2". ParseError on malformed text, DomainError
/// ("degenerate map") when the resultant vanishes.
QuadMap parse_map(std::string_view text);

Rational resultant(const QuadMap& phi);
Point evaluate(const QuadMap& phi, const Point& p);
int local_degree(const QuadMap& phi, const Point& p);
QuadForm<Rational> wronskian(const QuadMap& phi);

/// Integer coefficients with gcd 1, first nonzero of (a0..b2) positive.
QuadMap normalize_primitive(const QuadMap& phi);

/// True iff the coefficient vectors agree up to a nonzero scalar.
bool projectively_equal(const QuadMap& phi, const QuadMap& psi);

/// A(alpha X + beta Y, gamma X + delta Y).
QuadForm<Rational> substitute(const QuadForm<Rational>& q, const Mobius& f);

/// adj(M) o (A, B) o M with no normalization.
FormPair<Rational> conjugate_unnormalized(const QuadMap& phi, const Mobius& f);

/// phi^f = f^{-1} o phi o f, computed with the adjugate of f and returned
/// primitive-normalized. Before normalization the resultant scales by
/// det(f)^6: det^2 from conjugation, and det^4 because the adjugate is
/// det(f) times the inverse and Res is of bidegree (2, 2).
QuadMap conjugate(const QuadMap& phi, const Mobius& f);

/// The same conjugation with the true inverse matrix and no normalization;
/// Res(phi^f) = det(f)^2 Res(phi).
QuadMap conjugate_exact(const QuadMap& phi, const Mobius& f);

}  // namespace quadmaps
