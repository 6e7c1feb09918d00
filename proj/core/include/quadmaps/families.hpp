#pragma once

// Explicit good-reduction witness families and checks of their Milnor
// coordinates.

#include <cstdint>
#include <vector>

#include "quadmaps/invariants.hpp"
#include "quadmaps/reduction.hpp"

namespace quadmaps {

/// phi_{n,N} = (p^n X^2 + Y^2 : (p^{2N} - 1) X^2 + p^{2N-n} Y^2), n = 0..N-1.
/// Each member has ad - bc = 1, hence Res = 1.
std::vector<QuadMap> cpnf_family(const Integer& p, long N);

/// sigma1 = 8p^{2N} - 6,
/// sigma2 = 8p^{4N} - 20p^{2N} + 4(p^{3n} + (p^{2N} - 1) p^{6N-3n}) + 12.
MilnorPoint family_sigma_closed(const Integer& p, long N, long n);

/// phi_{alpha,beta} = (X^2 + alpha XY : ((1 - beta)/alpha) XY + Y^2), whose
/// resultant is beta.
QuadMap fpnf_map(const Rational& alpha, const Rational& beta);

struct DensityRow {
  long n;
  QuadMap map;
  MilnorPoint sigma;         // trace algorithm
  MilnorPoint sigma_closed;  // closed form
  PrimeSet bad_primes;
};

struct DensityReport {
  Integer p;
  long N;
  Rational sigma1;  // 8p^{2N} - 6
  std::vector<DensityRow> rows;
};

/// Computes sigma for every member of cpnf_family(p, N) and checks: constant
/// sigma1 = 8p^{2N} - 6, pairwise distinct sigma2, no bad primes, and
/// agreement of the trace algorithm with the closed form. Throws
/// VerificationError naming the first failed check.
DensityReport density_witness(const Integer& p, long N);

struct LineReport {
  Rational alpha, z;
  QuadMap map;
  MilnorPoint sigma;
  Rational lhs;       // 2 sigma1 - sigma2 (alpha = 1) or 2 sigma1 + sigma2 (alpha = -1)
  Rational expected;  // 3 or 1
};

/// Checks that sigma(fpnf_map(alpha, z)) lies on 2s1 - s2 = 3 (alpha = 1) or
/// 2s1 + s2 = 1 (alpha = -1). DomainError for other alpha or z = 0;
/// VerificationError if the relation fails.
LineReport line_membership(const Rational& alpha, const Rational& z);

}  // namespace quadmaps
