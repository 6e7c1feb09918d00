#include "quadmaps/families.hpp"

#include <set>

namespace quadmaps {

namespace {

void require_family_params(const Integer& p, long N) {
  if (!is_prime(p)) throw DomainError(p.get_str() + " is not prime");
  if (N < 1) throw DomainError("N must be at least 1");
}

}  // namespace

std::vector<QuadMap> cpnf_family(const Integer& p, long N) {
  require_family_params(p, N);
  const auto uN = static_cast<unsigned long>(N);
  const Integer p2N = ipow(p, 2 * uN);
  std::vector<QuadMap> maps;
  for (unsigned long n = 0; n < uN; ++n) {
    const Integer a = ipow(p, n), b = 1, c = p2N - 1, d = ipow(p, 2 * uN - n);
    if (a * d - b * c != 1) throw VerificationError("family member with ad - bc != 1");
    maps.push_back(critical_point_normal_form(a, b, c, d));
  }
  return maps;
}

MilnorPoint family_sigma_closed(const Integer& p, long N, long n) {
  require_family_params(p, N);
  if (n < 0 || n >= N) throw DomainError("n out of range 0..N-1");
  const auto uN = static_cast<unsigned long>(N), un = static_cast<unsigned long>(n);
  const Integer p2N = ipow(p, 2 * uN);
  const Integer s1 = 8 * p2N - 6;
  const Integer s2 =
      8 * ipow(p, 4 * uN) - 20 * p2N + 4 * (ipow(p, 3 * un) + (p2N - 1) * ipow(p, 6 * uN - 3 * un)) + 12;
  return {s1, s2, Integer(s1 - 2)};
}

QuadMap fpnf_map(const Rational& alpha, const Rational& beta) {
  if (alpha.is_zero() || beta.is_zero()) throw DomainError("alpha and beta must be nonzero");
  QuadMap phi = fixed_point_normal_form(alpha, (Rational(1) - beta) / alpha);
  if (resultant(phi) != beta) throw VerificationError("Res(phi_{alpha,beta}) != beta");
  return phi;
}

DensityReport density_witness(const Integer& p, long N) {
  const auto maps = cpnf_family(p, N);
  DensityReport report{p, N, Rational(Integer(8 * ipow(p, 2 * static_cast<unsigned long>(N)) - 6)), {}};
  std::set<Rational> sigma2s;
  for (long n = 0; n < N; ++n) {
    const auto& phi = maps[static_cast<std::size_t>(n)];
    DensityRow row{n, phi, sigma_invariants(phi), family_sigma_closed(p, N, n), bad_primes(phi)};
    const std::string where = " at n=" + std::to_string(n);
    if (row.sigma.sigma1 != report.sigma1) throw VerificationError("sigma1 not constant" + where);
    if (!(row.sigma == row.sigma_closed)) throw VerificationError("trace and closed form disagree" + where);
    if (!row.bad_primes.empty()) throw VerificationError("member has bad primes" + where);
    if (!sigma2s.insert(row.sigma.sigma2).second) throw VerificationError("repeated sigma2" + where);
    report.rows.push_back(std::move(row));
  }
  return report;
}

LineReport line_membership(const Rational& alpha, const Rational& z) {
  if (alpha != Rational(1) && alpha != Rational(-1)) throw DomainError("alpha must be 1 or -1");
  if (z.is_zero()) throw DomainError("z must be nonzero");
  QuadMap phi = fpnf_map(alpha, z);
  const MilnorPoint s = sigma_invariants(phi);
  const bool plus = alpha == Rational(1);
  Rational lhs = plus ? Rational(2) * s.sigma1 - s.sigma2 : Rational(2) * s.sigma1 + s.sigma2;
  Rational expected = plus ? Rational(3) : Rational(1);
  if (lhs != expected) throw VerificationError("sigma point off the expected line");
  return {alpha, z, std::move(phi), s, std::move(lhs), std::move(expected)};
}

}  // namespace quadmaps
