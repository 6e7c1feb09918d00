#include <doctest.h>

#include "oracles.hpp"
#include "quadmaps/invariants.hpp"

using namespace quadmaps;

TEST_CASE("fixed-point form") {
  const auto f = fixed_point_form(fixed_point_normal_form(2, 3));
  CHECK(f == CubicForm<Rational>{0, -2, 1, 0});
  CHECK(fixed_point_form(parse_map("1,0,0;0,0,1")) == CubicForm<Rational>{0, 1, -1, 0});
  CHECK(fixed_point_form(critical_point_normal_form(1, 1, 3, 4)) == CubicForm<Rational>{-3, 1, -4, 1});
  const QuadMap fp = fixed_point_normal_form(2, 3);
  for (const Point& p : {Point(1, 0), Point(0, 1), Point(1, 2)}) CHECK(evaluate(fp, p) == p);
}

TEST_CASE("multipliers") {
  const QuadMap fp = fixed_point_normal_form(2, 3);
  CHECK(multiplier(fp, Point(0, 1)) == 2);
  CHECK(multiplier(fp, Point(1, 0)) == 3);
  CHECK(multiplier(fp, Point(1, 2)) == Rational(3, 5));
  CHECK(multiplier(parse_map("1,0,0;0,0,1"), Point(1, 1)) == 2);
  CHECK_THROWS_WITH_AS(multiplier(fp, Point(1, 1)), "point not fixed", DomainError);
}

TEST_CASE("sigma examples") {
  CHECK(sigma_invariants(fixed_point_normal_form(2, 3)) == MilnorPoint{Rational(28, 5), 9, Rational(18, 5)});
  CHECK(sigma_invariants(parse_map("1,0,0;0,0,1")) == MilnorPoint{2, 0, 0});
  const auto s = sigma_invariants(critical_point_normal_form(1, 1, 3, 4));
  CHECK(s.sigma1 == 26);
  CHECK(s.sigma2 == 832);
  CHECK(to_json(s) == R"({"sigma1": "26", "sigma2": "832", "sigma3": "24"})");
}

TEST_CASE("cpnf invariants") {
  const auto [i1, m1] = cpnf_invariants(1, 1, 3, 4);
  CHECK(i1 == CpnfInvariants{4, 193});
  CHECK(m1.sigma1 == 26);
  CHECK(m1.sigma2 == 832);
  const auto [i2, m2] = cpnf_invariants(1, 1, 1, 2);
  CHECK(i2 == CpnfInvariants{2, 9});
  CHECK(m2 == MilnorPoint{10, 40, 8});
  CHECK(m2 == sigma_invariants(critical_point_normal_form(1, 1, 1, 2)));
  const auto [i3, m3] = cpnf_invariants(1, 0, 0, 1);
  CHECK(i3 == CpnfInvariants{1, 0});
  CHECK(m3 == MilnorPoint{2, 0, 0});
  CHECK_THROWS_AS(cpnf_invariants(1, 2, 2, 4), DomainError);
}

TEST_CASE("sigma via multipliers at rational fixed points") {
  // Maps with three rational fixed points 0, 1, infinity, built from their multipliers.
  oracle::Rng rng(31);
  for (int i = 0; i < 100; ++i) {
    const Rational l1 = rng.rational(9), l2 = rng.rational(9);
    if (l1 * l2 == 1) continue;
    CHECK(sigma_invariants(fixed_point_normal_form(l1, l2)) == oracle::fpnf_sigma(l1, l2));
    const QuadMap fp = fixed_point_normal_form(l1, l2);
    CHECK(multiplier(fp, Point(0, 1)) == l1);
    CHECK(multiplier(fp, Point(1, 0)) == l2);
  }
}

TEST_CASE("sigma is a conjugacy invariant") {
  oracle::Rng rng(32);
  for (int i = 0; i < 200; ++i) {
    const QuadMap phi = rng.rational_map(5);
    const auto s = sigma_invariants(phi);
    CHECK(sigma_invariants(conjugate(phi, rng.mobius(5))) == s);
    CHECK(s.sigma3 == s.sigma1 - 2);
  }
}

TEST_CASE("fixed point at infinity takes the shear path") {
  // (X^2 + XY : 2Y^2) fixes infinity, so b0 = 0.
  const QuadMap phi = parse_map("1,1,0;0,0,2");
  const auto s = sigma_invariants(phi);
  // Fixed points: infinity (multiplier 0), z = 0 (multiplier 1/2), z = 1 (multiplier 3/2).
  CHECK(s == MilnorPoint{2, Rational(3, 4), 0});
}
