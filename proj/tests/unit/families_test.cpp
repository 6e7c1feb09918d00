#include <doctest.h>

#include "oracles.hpp"
#include "quadmaps/families.hpp"
#include "quadmaps/invariants.hpp"
#include "quadmaps/reduction.hpp"

using namespace quadmaps;

TEST_CASE("cpnf family members") {
  CHECK(cpnf_family(Integer(2), 1) == std::vector<QuadMap>{critical_point_normal_form(1, 1, 3, 4)});
  CHECK(cpnf_family(Integer(2), 2) ==
        std::vector<QuadMap>{critical_point_normal_form(1, 1, 15, 16), critical_point_normal_form(2, 1, 15, 8)});
  CHECK(cpnf_family(Integer(3), 1) == std::vector<QuadMap>{critical_point_normal_form(1, 1, 8, 9)});
  for (const auto& phi : cpnf_family(Integer(5), 4)) CHECK(resultant(phi) == 1);
  CHECK_THROWS_AS(cpnf_family(Integer(4), 1), DomainError);
  CHECK_THROWS_AS(cpnf_family(Integer(2), 0), DomainError);
}

TEST_CASE("closed sigma formula") {
  CHECK(family_sigma_closed(Integer(2), 1, 0) == MilnorPoint{26, 832, 24});
  const auto a = family_sigma_closed(Integer(2), 2, 0), b = family_sigma_closed(Integer(2), 2, 1);
  CHECK(a.sigma1 == 122);
  CHECK(a.sigma2 == 247504);
  CHECK(b.sigma1 == 122);
  CHECK(b.sigma2 == 32492);
  CHECK(family_sigma_closed(Integer(3), 1, 0).sigma1 == 66);
  for (long p : {2, 3, 5, 7})
    for (long N = 1; N <= 4; ++N) {
      const auto maps = cpnf_family(Integer(p), N);
      for (long n = 0; n < N; ++n) {
        CHECK(family_sigma_closed(Integer(p), N, n) == sigma_invariants(maps[static_cast<std::size_t>(n)]));
        const Integer pp(p);
        const Rational w = pow(Rational(p), 3 * n) + (pow(Rational(p), 2 * N) - 1) * pow(Rational(p), 6 * N - 3 * n);
        CHECK(valuation(w, pp) == 3 * n);
      }
    }
}

TEST_CASE("fixed-point family") {
  CHECK(fpnf_map(1, 1) == parse_map("1,1,0;0,0,1"));
  const auto s = sigma_invariants(fpnf_map(1, 1));
  CHECK(s.sigma1 == 2);
  CHECK(s.sigma2 == 1);
  const auto t = sigma_invariants(fpnf_map(-1, 2));
  CHECK(t.sigma1 == 1);
  CHECK(t.sigma2 == -1);
  CHECK(resultant(fpnf_map(2, 3)) == 3);
  CHECK_THROWS_AS(fpnf_map(0, 1), DomainError);
  CHECK_THROWS_AS(fpnf_map(1, 0), DomainError);
  const PrimeSet S{2, 3, 5};
  const auto units = s_units_up_to(S, 2);
  for (std::size_t i = 0; i < units.size(); i += 7)
    for (std::size_t j = 0; j < units.size(); j += 5) {
      const QuadMap phi = fpnf_map(units[i], units[j]);
      CHECK(resultant(phi) == units[j]);
      for (const auto& p : bad_primes(phi)) CHECK(S.contains(p));
    }
}

TEST_CASE("density witness") {
  const auto r = density_witness(Integer(2), 5);
  CHECK(r.rows.size() == 5);
  CHECK(r.sigma1 == 8186);
  for (std::size_t i = 0; i < r.rows.size(); ++i) {
    CHECK(r.rows[i].sigma == r.rows[i].sigma_closed);
    CHECK(r.rows[i].bad_primes.size() == 0);
    for (std::size_t j = 0; j < i; ++j) CHECK(r.rows[i].sigma.sigma2 != r.rows[j].sigma.sigma2);
  }
  CHECK(density_witness(Integer(2), 1).rows.size() == 1);
  const auto t = density_witness(Integer(3), 3);
  CHECK(t.rows.size() == 3);
  CHECK(t.sigma1 == 5826);
}

TEST_CASE("lines in the moduli plane") {
  CHECK(line_membership(1, 1).sigma == MilnorPoint{2, 1, 0});
  CHECK(line_membership(-1, 2).sigma == MilnorPoint{1, -1, -1});
  const auto r = line_membership(1, 5);
  CHECK(r.sigma.sigma1 == -2);
  CHECK(r.sigma.sigma2 == -7);
  CHECK(r.lhs == 3);
  for (const Rational& z : {Rational(1), Rational(2), Rational(3), Rational(5), Rational(-1), Rational(1, 2),
                            Rational(-2), Rational(7, 3)}) {
    CHECK(line_membership(1, z).lhs == 3);
    CHECK(line_membership(-1, z).lhs == 1);
    CHECK(line_membership(1, z).sigma.sigma1 == 3 - z);
    CHECK(line_membership(-1, z).sigma.sigma1 == -3 + z + 4 / z);
  }
  CHECK_THROWS_AS(line_membership(2, 1), DomainError);
  CHECK_THROWS_AS(line_membership(1, 0), DomainError);
}
