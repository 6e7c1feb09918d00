#pragma once

// Reduction of points and maps modulo a prime, good-reduction certificates
// and bad-prime enumeration.

#include <cstdint>
#include <string>

#include "quadmaps/projmap.hpp"

namespace quadmaps {

/// A map reduced modulo p. degree is 2 iff the reduced resultant is nonzero;
/// otherwise it is the degree left after cancelling the common factor.
struct ReducedMap {
  FormPair<Fp> forms;
  std::uint64_t prime;
  int degree;

  /// "a0,a1,a2;b0,b1,b2 mod p; degree=d"
  std::string str() const;
  friend bool operator==(const ReducedMap&, const ReducedMap&) = default;
};

/// Scales P so both coordinates are p-integral with one a p-unit, then reduces.
ProjPoint<Fp> reduce_point(const Point& p, std::uint64_t prime);

/// Primitive-normalizes phi and reduces each coefficient.
ReducedMap reduce_map(const QuadMap& phi, std::uint64_t prime);

/// Degree (0, 1 or 2) of the map defined by two forms over F_p, i.e.
/// 2 minus the degree of their common factor. The forms must not both vanish.
int map_degree(const FormPair<Fp>& forms);

/// Explicit-representative certificate: p does not divide the resultant of
/// normalize_primitive(phi). This is sufficient for good reduction; it does
/// not search the PGL_2(Q)-orbit for a better model.
bool is_good_at(const QuadMap& phi, std::uint64_t prime);

/// Primes dividing the resultant of normalize_primitive(phi).
PrimeSet bad_primes(const QuadMap& phi);

}  // namespace quadmaps
