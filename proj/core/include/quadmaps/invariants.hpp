#pragma once

// Fixed points, multipliers and the Milnor coordinates (sigma1, sigma2) of
// a conjugacy class of quadratic maps.

#include <string>
#include <utility>

#include "quadmaps/projmap.hpp"

namespace quadmaps {

/// Elementary symmetric functions of the three fixed-point multipliers.
/// For every quadratic map sigma3 == sigma1 - 2.
struct MilnorPoint {
  Rational sigma1, sigma2, sigma3;
  friend bool operator==(const MilnorPoint&, const MilnorPoint&) = default;
};

/// The PGL_2-invariants of a critical-point normal form
/// (aX^2 + bY^2 : cX^2 + dY^2): A = ad/(ad-bc), Sigma = (a^3 b + c d^3)/(ad-bc)^2.
struct CpnfInvariants {
  Rational A, Sigma;
  friend bool operator==(const CpnfInvariants&, const CpnfInvariants&) = default;
};

/// (aX^2 + bY^2 : cX^2 + dY^2), critical points (1:0) and (0:1).
QuadMap critical_point_normal_form(const Rational& a, const Rational& b, const Rational& c, const Rational& d);

/// (X^2 + l1 XY : l2 XY + Y^2): fixed points (0:1), (1:0) with multipliers
/// l1, l2 and a third fixed point (1-l1 : 1-l2).
QuadMap fixed_point_normal_form(const Rational& l1, const Rational& l2);

/// F = Y A - X B, whose projective roots are the fixed points.
CubicForm<Rational> fixed_point_form(const QuadMap& phi);

/// Derivative of phi at a rational fixed point, in the chart where the
/// point is finite (w = Y/X at (1:0)). DomainError if p is not fixed.
Rational multiplier(const QuadMap& phi, const Point& p);

/// Exact (sigma1, sigma2, sigma3) without extracting fixed points: traces of
/// the multiplier function acting on Q[z]/(F(z,1)).
MilnorPoint sigma_invariants(const QuadMap& phi);

/// Milnor's closed forms on a critical-point normal form:
/// sigma1 = 8A - 6, sigma2 = 8A^2 - 20A + 4 Sigma + 12.
/// DomainError("degenerate critical normal form") when ad - bc == 0.
std::pair<CpnfInvariants, MilnorPoint> cpnf_invariants(const Rational& a, const Rational& b, const Rational& c,
                                                       const Rational& d);

/// {"sigma1": "...", "sigma2": "...", "sigma3": "..."}
std::string to_json(const MilnorPoint& m);

}  // namespace quadmaps
