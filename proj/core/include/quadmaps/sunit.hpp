#pragma once

// S-units of Q, a bounded exhaustive solver for the unit equation x + y = 1,
// and the finite covering check for S-unit normal forms.

#include <cstddef>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "quadmaps/exactnum.hpp"
#include "quadmaps/structures.hpp"

namespace quadmaps {

/// sign * prod p^{e_p} over the primes of S.
class SUnit {
 public:
  SUnit(int sign, std::map<Integer, long> exponents);
  /// Factors q over S; DomainError if q is not an S-unit.
  static SUnit from_rational(const Rational& q, const PrimeSet& S);

  int sign() const { return sign_; }
  const std::map<Integer, long>& exponents() const { return exponents_; }
  Rational value() const;

 private:
  int sign_;
  std::map<Integer, long> exponents_;
};

/// All x = ±prod p^{e_p}, |e_p| <= bound, whose partner 1 - x is an S-unit,
/// then closed under the six-fold symmetry. Every member is a genuine
/// solution; completeness is only up to the bound.
struct UnitEquationSolutionSet {
  PrimeSet S;
  long bound;
  /// Sorted by (x, y).
  std::vector<std::pair<Rational, Rational>> solutions;
};

/// Every S-unit ±prod p^{e_p} with |e_p| <= bound, in lexicographic order of
/// exponent vectors, then sign (+ before -).
std::vector<Rational> s_units_up_to(const PrimeSet& S, long bound);

UnitEquationSolutionSet solve_unit_equation(const PrimeSet& S, long bound);

/// Sorted distinct y-coordinates of solve_unit_equation(S, bound).
std::vector<Rational> covering_set(const PrimeSet& S, long bound);

struct CoveringViolation {
  std::string kind;  // "fixed" or "cycle"
  Rational a, b, c, u;
};

struct CoveringReport {
  PrimeSet S;
  long coeff_bound;
  long eq_bound;
  std::vector<Rational> covering;
  std::size_t fixed_enumerated = 0;  // S-unit (a, b, c) triples examined
  std::size_t fixed_good = 0;        // of those, with c(c - ab) an S-unit
  std::vector<Rational> fixed_u_values;
  std::size_t cycle_enumerated = 0;
  std::size_t cycle_good = 0;
  std::vector<Rational> cycle_u_values;
  std::vector<CoveringViolation> violations;

  bool ok() const { return violations.empty(); }
};

/// Enumerates all normal forms of both kinds with S-unit coefficients of
/// exponent at most coeff_bound and S-unit resultant, and checks that each
/// u-invariant lies in covering_set(S, eq_bound).
CoveringReport covering_check(const PrimeSet& S, long coeff_bound, long eq_bound);

}  // namespace quadmaps
