#pragma once

// Independent reference computations used by the unit and acceptance tests.
// Nothing here calls the library routine it is meant to check.

#include <array>
#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include "quadmaps/quadmaps.hpp"

namespace oracle {

using quadmaps::Fp;
using quadmaps::Integer;
using quadmaps::Mobius;
using quadmaps::Point;
using quadmaps::QuadMap;
using quadmaps::Rational;

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  long integer(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(gen_); }
  long nonzero(long lo, long hi) {
    for (;;)
      if (const long v = integer(lo, hi); v != 0) return v;
  }
  Rational rational(long h) { return Rational(Integer(integer(-h, h)), Integer(integer(1, h))); }
  Rational nonzero_rational(long h) { return Rational(Integer(nonzero(-h, h)), Integer(integer(1, h))); }
  bool coin() { return integer(0, 1) == 1; }

  QuadMap integer_map(long h) {
    for (;;) {
      std::array<Rational, 6> c;
      for (auto& x : c) x = Rational(integer(-h, h));
      if (sylvester(c) != 0) return QuadMap::from_coefficients(c);
    }
  }

  QuadMap rational_map(long h) {
    for (;;) {
      std::array<Rational, 6> c;
      for (auto& x : c) x = rational(h);
      if (sylvester(c) != 0) return QuadMap::from_coefficients(c);
    }
  }

  Mobius mobius(long h) {
    for (;;) {
      const Rational a = rational(h), b = rational(h), c = rational(h), d = rational(h);
      if (a * d - b * c != 0) return Mobius(a, b, c, d);
    }
  }

  Point point(long h) {
    if (integer(0, 9) == 0) return Point(1, 0);
    return Point(rational(h), 1);
  }

  // Sylvester determinant of the coefficient vector (a0, a1, a2, b0, b1, b2).
  static Rational sylvester(const std::array<Rational, 6>& c);

 private:
  std::mt19937_64 gen_;
};

// 4x4 Sylvester determinant by fraction-exact Gaussian elimination.
inline Rational Rng::sylvester(const std::array<Rational, 6>& c) {
  std::array<std::array<Rational, 4>, 4> m{{
      {c[0], c[1], c[2], 0},
      {0, c[0], c[1], c[2]},
      {c[3], c[4], c[5], 0},
      {0, c[3], c[4], c[5]},
  }};
  Rational det = 1;
  for (int col = 0; col < 4; ++col) {
    int piv = col;
    while (piv < 4 && m[piv][col] == 0) ++piv;
    if (piv == 4) return 0;
    if (piv != col) {
      std::swap(m[piv], m[col]);
      det = -det;
    }
    det *= m[col][col];
    for (int r = col + 1; r < 4; ++r) {
      const Rational f = m[r][col] / m[col][col];
      for (int k = col; k < 4; ++k) m[r][k] -= f * m[col][k];
    }
  }
  return det;
}

inline Rational sylvester(const QuadMap& phi) { return Rng::sylvester(phi.coefficients()); }

// Mobius action on points straight from the matrix entries.
inline Point apply(const Rational& al, const Rational& be, const Rational& ga, const Rational& de, const Point& p) {
  return Point(al * p.x() + be * p.y(), ga * p.x() + de * p.y());
}

// f^{-1}(phi(f(P))), with f^{-1} taken from the adjugate.
inline Point conjugate_point(const QuadMap& phi, const Mobius& f, const Point& p) {
  const Point q = apply(f.alpha(), f.beta(), f.gamma(), f.delta(), p);
  const auto c = phi.coefficients();
  const Rational x = q.x(), y = q.y();
  const Point r(c[0] * x * x + c[1] * x * y + c[2] * y * y, c[3] * x * x + c[4] * x * y + c[5] * y * y);
  return apply(f.delta(), -f.beta(), -f.gamma(), f.alpha(), r);
}

// Arithmetic in F_{p^2} = F_p[t]/(t^2 - n) for odd p, F_2[t]/(t^2 + t + 1).
struct Fp2 {
  std::uint64_t p, x, y;  // x + y t
};

inline std::uint64_t nonresidue(std::uint64_t p) {
  for (std::uint64_t n = 2;; ++n) {
    bool square = false;
    for (std::uint64_t s = 0; s < p; ++s)
      if (s * s % p == n % p) square = true;
    if (!square) return n;
  }
}

inline Fp2 mul(const Fp2& a, const Fp2& b, std::uint64_t n) {
  const std::uint64_t p = a.p;
  const std::uint64_t xy = (a.x * b.y + a.y * b.x) % p, yy = a.y * b.y % p;
  if (p == 2) return {p, (a.x * b.x + yy) % p, (xy + yy) % p};
  return {p, (a.x * b.x + yy * n) % p, xy};
}

inline Fp2 add(const Fp2& a, const Fp2& b) { return {a.p, (a.x + b.x) % a.p, (a.y + b.y) % a.p}; }

inline bool is_zero(const Fp2& a) { return a.x == 0 && a.y == 0; }

// Brute force over all p^2 + 1 points of P^1(F_{p^2}).
inline bool forms_share_root_fp2(const quadmaps::FormPair<Fp>& m) {
  const std::uint64_t p = m.a.c0.modulus();
  const std::uint64_t n = p == 2 ? 0 : nonresidue(p);
  const auto c = [&](const Fp& v) { return Fp2{p, v.value(), 0}; };
  const auto form = [&](const quadmaps::QuadForm<Fp>& f, const Fp2& x, const Fp2& y) {
    return add(add(mul(c(f.c0), mul(x, x, n), n), mul(c(f.c1), mul(x, y, n), n)), mul(c(f.c2), mul(y, y, n), n));
  };
  const Fp2 one{p, 1, 0}, zero{p, 0, 0};
  if (is_zero(form(m.a, one, zero)) && is_zero(form(m.b, one, zero))) return true;
  for (std::uint64_t x = 0; x < p; ++x)
    for (std::uint64_t y = 0; y < p; ++y) {
      const Fp2 z{p, x, y};
      if (is_zero(form(m.a, z, one)) && is_zero(form(m.b, z, one))) return true;
    }
  return false;
}

// Does some diagonal rescaling (p^k X : Y), |k| <= 6, give the normal-form
// triple a model with degree-2 reduction in which (1:0) and (0:1) stay
// distinct, keep their fixed/2-cycle structure and remain unramified?
template <class NormalForm>
bool scaling_search_good(const NormalForm& nf, const Integer& p, bool cycle) {
  const auto prime = static_cast<std::uint64_t>(p.get_ui());
  const QuadMap phi = nf.to_map();
  Rational alpha = quadmaps::pow(Rational(p), -6);
  for (int k = -6; k <= 6; ++k, alpha *= Rational(p)) {
    const Mobius f(alpha, 0, 0, 1);
    const QuadMap psi = quadmaps::conjugate(phi, f);
    const auto red = quadmaps::reduce_map(psi, prime);
    if (red.degree != 2) continue;
    const auto p1 = quadmaps::reduce_point(f.inverse().apply(Point(1, 0)), prime);
    const auto p2 = quadmaps::reduce_point(f.inverse().apply(Point(0, 1)), prime);
    if (p1 == p2) continue;
    const auto q1 = quadmaps::evaluate(red.forms, p1), q2 = quadmaps::evaluate(red.forms, p2);
    if (cycle ? !(q1 == p2 && q2 == p1) : !(q1 == p1 && q2 == p2)) continue;
    if (quadmaps::local_degree(red.forms, p1) != 1 || quadmaps::local_degree(red.forms, p2) != 1) continue;
    return true;
  }
  return false;
}

// Multipliers of the fixed-point normal form: l1, l2 and l3 = (2 - l1 - l2)/(1 - l1 l2).
inline quadmaps::MilnorPoint fpnf_sigma(const Rational& l1, const Rational& l2) {
  const Rational l3 = (Rational(2) - l1 - l2) / (Rational(1) - l1 * l2);
  return {l1 + l2 + l3, l1 * l2 + l1 * l3 + l2 * l3, l1 * l2 * l3};
}

// All x with x and 1 - x both of the form +-2^a 3^b ..., |exponents| <= bound,
// by direct search over pairs; used only for tiny S.
inline std::vector<std::pair<Rational, Rational>> unit_pairs(const std::vector<long>& S, long bound) {
  std::vector<Rational> units;
  std::vector<long> e(S.size(), -bound);
  for (;;) {
    Rational v = 1;
    for (std::size_t i = 0; i < S.size(); ++i) v *= quadmaps::pow(Rational(S[i]), e[i]);
    units.push_back(v);
    units.push_back(-v);
    std::size_t i = 0;
    while (i < e.size() && e[i] == bound) e[i++] = -bound;
    if (i == e.size()) break;
    ++e[i];
  }
  std::vector<std::pair<Rational, Rational>> out;
  for (const auto& x : units)
    for (const auto& y : units)
      if (x + y == 1) out.emplace_back(x, y);
  return out;
}

}  // namespace oracle
