#include "quadmaps/reduction.hpp"

#include <algorithm>
#include <limits>

#include "quadmaps/poly.hpp"

namespace quadmaps {

std::string ReducedMap::str() const {
  const auto& [a, b] = forms;
  return to_string(a.c0) + "," + to_string(a.c1) + "," + to_string(a.c2) + ";" + to_string(b.c0) + "," +
         to_string(b.c1) + "," + to_string(b.c2) + " mod " + std::to_string(prime) +
         "; degree=" + std::to_string(degree);
}

ProjPoint<Fp> reduce_point(const Point& p, std::uint64_t prime) {
  require_prime(prime);
  const Integer P(static_cast<unsigned long>(prime));
  long shift = std::numeric_limits<long>::max();
  for (const auto* c : {&p.x(), &p.y()})
    if (!c->is_zero()) shift = std::min(shift, valuation(*c, P));
  const Rational scale = pow(Rational(P), -shift);
  return ProjPoint<Fp>(reduce_mod_p(p.x() * scale, prime), reduce_mod_p(p.y() * scale, prime));
}

namespace {

// Order of vanishing of a form along Y, i.e. multiplicity of the root (1:0).
int y_order(const QuadForm<Fp>& q) {
  if (!q.c0.is_zero()) return 0;
  if (!q.c1.is_zero()) return 1;
  return 2;
}

}  // namespace

int map_degree(const FormPair<Fp>& forms) {
  const auto& [a, b] = forms;
  if (a.is_zero() && b.is_zero()) throw DomainError("both reduced forms vanish");
  if (a.is_zero() || b.is_zero()) return 0;
  // gcd of binary forms = Y^min(ord) * gcd of the dehomogenized parts.
  const Poly<Fp> pa({a.c2, a.c1, a.c0}), pb({b.c2, b.c1, b.c0});
  const int common = std::min(y_order(a), y_order(b)) + gcd(pa, pb).degree();
  return 2 - common;
}

ReducedMap reduce_map(const QuadMap& phi, std::uint64_t prime) {
  require_prime(prime);
  const auto c = normalize_primitive(phi).coefficients();
  const auto r = [&](std::size_t i) { return reduce_mod_p(c[i], prime); };
  FormPair<Fp> forms{{r(0), r(1), r(2)}, {r(3), r(4), r(5)}};
  const int degree = resultant(forms).is_zero() ? map_degree(forms) : 2;
  return {std::move(forms), prime, degree};
}

bool is_good_at(const QuadMap& phi, std::uint64_t prime) {
  require_prime(prime);
  const Integer res = resultant(normalize_primitive(phi)).num();
  return !mpz_divisible_ui_p(res.get_mpz_t(), prime);
}

PrimeSet bad_primes(const QuadMap& phi) {
  const Integer res = resultant(normalize_primitive(phi)).num();
  std::vector<Integer> primes;
  for (const auto& pp : factorize(res)) primes.push_back(pp.prime);
  return PrimeSet(std::move(primes));
}

}  // namespace quadmaps
