#include "quadmaps/sunit.hpp"

#include <algorithm>
#include <set>

namespace quadmaps {

SUnit::SUnit(int sign, std::map<Integer, long> exponents) : sign_(sign), exponents_(std::move(exponents)) {
  if (sign != 1 && sign != -1) throw DomainError("S-unit sign must be +1 or -1");
  for (const auto& [p, e] : exponents_)
    if (!is_prime(p)) throw DomainError(p.get_str() + " is not prime");
}

SUnit SUnit::from_rational(const Rational& q, const PrimeSet& S) {
  if (!is_s_unit(q, S)) throw DomainError(q.str() + " is not an S-unit");
  std::map<Integer, long> e;
  for (const auto& p : S) e[p] = valuation(q, p);
  return {q.sign(), std::move(e)};
}

Rational SUnit::value() const {
  Rational v(sign_);
  for (const auto& [p, e] : exponents_) v *= pow(Rational(p), e);
  return v;
}

std::vector<Rational> s_units_up_to(const PrimeSet& S, long bound) {
  if (bound < 0) throw DomainError("bound must be non-negative");
  const auto& primes = S.primes();
  std::vector<Rational> out;
  std::vector<long> e(primes.size(), -bound);
  std::vector<std::vector<Rational>> powers(primes.size());
  for (std::size_t i = 0; i < primes.size(); ++i)
    for (long k = -bound; k <= bound; ++k) powers[i].push_back(pow(Rational(primes[i]), k));
  while (true) {
    Rational v(1);
    for (std::size_t i = 0; i < primes.size(); ++i) v *= powers[i][static_cast<std::size_t>(e[i] + bound)];
    out.push_back(v);
    out.push_back(-v);
    // Odometer increment, last prime fastest.
    std::size_t i = primes.size();
    while (i > 0 && e[i - 1] == bound) {
      e[i - 1] = -bound;
      --i;
    }
    if (i == 0) break;
    ++e[i - 1];
  }
  return out;
}

namespace {

// Orbit of a solution under the group generated by (x,y) -> (y,x) and
// (x,y) -> (1/x, -y/x).
std::vector<std::pair<Rational, Rational>> orbit(const Rational& x, const Rational& y) {
  return {{x, y},
          {y, x},
          {x.inverse(), -y / x},
          {-y / x, x.inverse()},
          {y.inverse(), -x / y},
          {-x / y, y.inverse()}};
}

}  // namespace

UnitEquationSolutionSet solve_unit_equation(const PrimeSet& S, long bound) {
  std::set<std::pair<Rational, Rational>> found;
  for (const auto& x : s_units_up_to(S, bound)) {
    const Rational y = Rational(1) - x;
    if (!is_s_unit(y, S)) continue;
    for (auto& s : orbit(x, y)) found.insert(std::move(s));
  }
  return {S, bound, {found.begin(), found.end()}};
}

std::vector<Rational> covering_set(const PrimeSet& S, long bound) {
  std::set<Rational> ys;
  for (const auto& [x, y] : solve_unit_equation(S, bound).solutions) ys.insert(y);
  return {ys.begin(), ys.end()};
}

CoveringReport covering_check(const PrimeSet& S, long coeff_bound, long eq_bound) {
  CoveringReport report;
  report.S = S;
  report.coeff_bound = coeff_bound;
  report.eq_bound = eq_bound;
  report.covering = covering_set(S, eq_bound);
  const auto units = s_units_up_to(S, coeff_bound);
  const auto covered = [&](const Rational& u) {
    return std::binary_search(report.covering.begin(), report.covering.end(), u);
  };
  std::set<Rational> fixed_hits, cycle_hits;
  for (const auto& a : units) {
    for (const auto& b : units) {
      const Rational ab = a * b;
      for (const auto& c : units) {
        ++report.fixed_enumerated;
        ++report.cycle_enumerated;
        // Fixed pair (X^2 + aXY : bXY + cY^2), Res = c(c - ab).
        if (is_s_unit(c - ab, S)) {
          ++report.fixed_good;
          const Rational u = u_invariant({a, b, c});
          fixed_hits.insert(u);
          if (!covered(u)) report.violations.push_back({"fixed", a, b, c, u});
        }
        // 2-cycle (aXY + bY^2 : X^2 + cXY), Res = b(b - ac).
        const Rational ac = a * c;
        if (is_s_unit(b - ac, S)) {
          ++report.cycle_good;
          const Rational u = cycle_invariant({a, b, c});
          cycle_hits.insert(u);
          if (!covered(u)) report.violations.push_back({"cycle", a, b, c, u});
        }
      }
    }
  }
  report.fixed_u_values.assign(fixed_hits.begin(), fixed_hits.end());
  report.cycle_u_values.assign(cycle_hits.begin(), cycle_hits.end());
  return report;
}

}  // namespace quadmaps
