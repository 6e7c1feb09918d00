#pragma once

// Quadratic maps with two marked rational points: a pair of distinct
// unramified fixed points, or an unramified 2-cycle. Normal forms,
// u-invariants and per-prime good reduction of the structured triple.

#include <cstdint>
#include <string>
#include <utility>

#include "quadmaps/projmap.hpp"

namespace quadmaps {

/// (phi, P1, P2) with P1 != P2 distinct unramified fixed points of phi.
class FixedPairTriple {
 public:
  const QuadMap& map() const { return map_; }
  const Point& p1() const { return p1_; }
  const Point& p2() const { return p2_; }
  /// "a0,a1,a2;b0,b1,b2;P1=x:y;P2=x:y"
  std::string str() const;
  friend bool operator==(const FixedPairTriple&, const FixedPairTriple&) = default;

 private:
  friend FixedPairTriple validate_fixed_pair(const QuadMap&, const Point&, const Point&);
  FixedPairTriple(QuadMap m, Point p1, Point p2) : map_(std::move(m)), p1_(std::move(p1)), p2_(std::move(p2)) {}
  QuadMap map_;
  Point p1_, p2_;
};

/// (phi, P1, P2) with phi(P1) = P2, phi(P2) = P1, both unramified.
class TwoCycleTriple {
 public:
  const QuadMap& map() const { return map_; }
  const Point& p1() const { return p1_; }
  const Point& p2() const { return p2_; }
  std::string str() const;
  friend bool operator==(const TwoCycleTriple&, const TwoCycleTriple&) = default;

 private:
  friend TwoCycleTriple validate_two_cycle(const QuadMap&, const Point&, const Point&);
  TwoCycleTriple(QuadMap m, Point p1, Point p2) : map_(std::move(m)), p1_(std::move(p1)), p2_(std::move(p2)) {}
  QuadMap map_;
  Point p1_, p2_;
};

/// (X^2 + aXY : bXY + cY^2) marked at ((1:0), (0:1)); c(c - ab) != 0.
struct FixedPairNormalForm {
  Rational a, b, c;

  /// Throws DomainError when the resultant c(c - ab) vanishes.
  void validate() const;
  QuadMap to_map() const;
  std::string str() const;  // "a,b,c"
  friend bool operator==(const FixedPairNormalForm&, const FixedPairNormalForm&) = default;
};

/// (aXY + bY^2 : X^2 + cXY) marked at ((1:0), (0:1)); Res = b(b - ac) != 0.
struct TwoCycleNormalForm {
  Rational a, b, c;

  void validate() const;
  QuadMap to_map() const;
  std::string str() const;
  friend bool operator==(const TwoCycleNormalForm&, const TwoCycleNormalForm&) = default;
};

/// Errors name the failed clause: "points equal", "P1 not fixed",
/// "P2 not fixed", "P1 ramified", "P2 ramified".
FixedPairTriple validate_fixed_pair(const QuadMap& phi, const Point& p1, const Point& p2);

/// Errors: "points equal", "not a 2-cycle", "P1 ramified", "P2 ramified".
TwoCycleTriple validate_two_cycle(const QuadMap& phi, const Point& p1, const Point& p2);

/// Phi^f = (phi^f, f^{-1}(P1), f^{-1}(P2)).
FixedPairTriple conjugate_triple(const FixedPairTriple& t, const Mobius& f);
TwoCycleTriple conjugate_triple(const TwoCycleTriple& t, const Mobius& f);

template <class NormalForm>
struct NormalFormResult {
  NormalForm form;
  /// Sends (1:0) to P1 and (0:1) to P2; the input conjugated by it is the
  /// normal-form triple.
  Mobius transform;
};

NormalFormResult<FixedPairNormalForm> fixed_pair_normal_form(const FixedPairTriple& t);
NormalFormResult<TwoCycleNormalForm> two_cycle_normal_form(const TwoCycleTriple& t);

/// The normal-form triple ((X^2+aXY : bXY+cY^2), (1:0), (0:1)).
FixedPairTriple to_triple(const FixedPairNormalForm& nf);
TwoCycleTriple to_triple(const TwoCycleNormalForm& nf);

/// ab/c: invariant under the residual diagonal automorphisms.
Rational u_invariant(const FixedPairNormalForm& nf);

/// ac/b for 2-cycle normal forms.
Rational cycle_invariant(const TwoCycleNormalForm& nf);

/// Good reduction of the structured triple at p.
///
/// The automorphisms fixing both marked points are the diagonal maps
/// f = (alpha X : Y). They act on fixed-pair normal forms by
/// (a, b, c) -> (a/alpha, b, c/alpha), so with alpha = p^t the triple has
/// good reduction iff v(b) = 0 and v(a) = v(c) = v(c - ab).
bool triple_good_at(const FixedPairNormalForm& nf, const Integer& p);

/// On 2-cycle normal forms the diagonal action is
/// (a, b, c) -> (a/alpha^2, b/alpha^3, c/alpha), so good reduction holds iff
/// there is t with v(c) = t, v(a) = 2t, v(b) = 3t and v(b - ac) = 3t.
bool cycle_good_at(const TwoCycleNormalForm& nf, const Integer& p);

/// The diagonal conjugate of a normal form by (alpha X : Y), in closed form.
FixedPairNormalForm diagonal_conjugate(const FixedPairNormalForm& nf, const Rational& alpha);
TwoCycleNormalForm diagonal_conjugate(const TwoCycleNormalForm& nf, const Rational& alpha);

/// Parses "a,b,c".
FixedPairNormalForm parse_fixed_pair_normal_form(std::string_view text);
TwoCycleNormalForm parse_two_cycle_normal_form(std::string_view text);

}  // namespace quadmaps
