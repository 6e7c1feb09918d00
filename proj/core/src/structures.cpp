#include "quadmaps/structures.hpp"

namespace quadmaps {

namespace {

std::string triple_str(const QuadMap& m, const Point& p1, const Point& p2) {
  return m.str() + ";P1=" + p1.str() + ";P2=" + p2.str();
}

std::array<Rational, 3> parse_abc(std::string_view text) {
  std::array<Rational, 3> out;
  std::size_t start = 0;
  for (std::size_t i = 0; i < 3; ++i) {
    const auto comma = text.find(',', start);
    if ((i < 2) == (comma == std::string_view::npos))
      throw ParseError("malformed normal form: '" + std::string(text) + "'");
    out[i] = Rational::parse(text.substr(start, (i < 2 ? comma : text.size()) - start));
    start = comma + 1;
  }
  return out;
}

long val(const Rational& q, const Integer& p) { return valuation(q, p); }

}  // namespace

std::string FixedPairTriple::str() const { return triple_str(map_, p1_, p2_); }
std::string TwoCycleTriple::str() const { return triple_str(map_, p1_, p2_); }

void FixedPairNormalForm::validate() const {
  if ((c * (c - a * b)).is_zero()) throw DomainError("degenerate map");
}
QuadMap FixedPairNormalForm::to_map() const { return QuadMap({1, a, 0}, {0, b, c}); }
std::string FixedPairNormalForm::str() const { return a.str() + "," + b.str() + "," + c.str(); }

void TwoCycleNormalForm::validate() const {
  if ((b * (b - a * c)).is_zero()) throw DomainError("degenerate map");
}
QuadMap TwoCycleNormalForm::to_map() const { return QuadMap({0, a, b}, {1, c, 0}); }
std::string TwoCycleNormalForm::str() const { return a.str() + "," + b.str() + "," + c.str(); }

FixedPairTriple validate_fixed_pair(const QuadMap& phi, const Point& p1, const Point& p2) {
  if (p1 == p2) throw DomainError("points equal");
  if (!(evaluate(phi, p1) == p1)) throw DomainError("P1 not fixed");
  if (!(evaluate(phi, p2) == p2)) throw DomainError("P2 not fixed");
  if (local_degree(phi, p1) != 1) throw DomainError("P1 ramified");
  if (local_degree(phi, p2) != 1) throw DomainError("P2 ramified");
  return {phi, p1, p2};
}

TwoCycleTriple validate_two_cycle(const QuadMap& phi, const Point& p1, const Point& p2) {
  if (p1 == p2) throw DomainError("points equal");
  if (!(evaluate(phi, p1) == p2) || !(evaluate(phi, p2) == p1)) throw DomainError("not a 2-cycle");
  if (local_degree(phi, p1) != 1) throw DomainError("P1 ramified");
  if (local_degree(phi, p2) != 1) throw DomainError("P2 ramified");
  return {phi, p1, p2};
}

FixedPairTriple conjugate_triple(const FixedPairTriple& t, const Mobius& f) {
  const Mobius inv = f.inverse();
  return validate_fixed_pair(conjugate(t.map(), f), inv.apply(t.p1()), inv.apply(t.p2()));
}

TwoCycleTriple conjugate_triple(const TwoCycleTriple& t, const Mobius& f) {
  const Mobius inv = f.inverse();
  return validate_two_cycle(conjugate(t.map(), f), inv.apply(t.p1()), inv.apply(t.p2()));
}

NormalFormResult<FixedPairNormalForm> fixed_pair_normal_form(const FixedPairTriple& t) {
  const Mobius f = Mobius::from_columns(t.p1(), t.p2());
  const QuadMap psi = conjugate(t.map(), f);
  // psi fixes (1:0) and (0:1): psi = (c0 X^2 + c1 XY : d1 XY + d2 Y^2).
  const auto& [c0, c1, c2] = psi.a();
  const auto& [d0, d1, d2] = psi.b();
  if (!c2.is_zero() || !d0.is_zero()) throw VerificationError("normal form conjugate does not fix (1:0), (0:1)");
  FixedPairNormalForm nf{c1 / c0, d1 / c0, d2 / c0};
  if (nf.a.is_zero() || nf.b.is_zero() || nf.c.is_zero())
    throw VerificationError("unramified fixed pair produced a zero normal-form coefficient");
  return {nf, f};
}

NormalFormResult<TwoCycleNormalForm> two_cycle_normal_form(const TwoCycleTriple& t) {
  const Mobius f = Mobius::from_columns(t.p1(), t.p2());
  const QuadMap psi = conjugate(t.map(), f);
  // psi swaps (1:0) and (0:1): psi = (c1 XY + c2 Y^2 : d0 X^2 + d1 XY).
  const auto& [c0, c1, c2] = psi.a();
  const auto& [d0, d1, d2] = psi.b();
  if (!c0.is_zero() || !d2.is_zero()) throw VerificationError("normal form conjugate does not swap (1:0), (0:1)");
  TwoCycleNormalForm nf{c1 / d0, c2 / d0, d1 / d0};
  if (nf.a.is_zero() || nf.b.is_zero() || nf.c.is_zero())
    throw VerificationError("unramified 2-cycle produced a zero normal-form coefficient");
  return {nf, f};
}

FixedPairTriple to_triple(const FixedPairNormalForm& nf) {
  nf.validate();
  return validate_fixed_pair(nf.to_map(), Point(1, 0), Point(0, 1));
}

TwoCycleTriple to_triple(const TwoCycleNormalForm& nf) {
  nf.validate();
  return validate_two_cycle(nf.to_map(), Point(1, 0), Point(0, 1));
}

Rational u_invariant(const FixedPairNormalForm& nf) { return nf.a * nf.b / nf.c; }

Rational cycle_invariant(const TwoCycleNormalForm& nf) { return nf.a * nf.c / nf.b; }

bool triple_good_at(const FixedPairNormalForm& nf, const Integer& p) {
  nf.validate();
  if (nf.a.is_zero() || nf.b.is_zero()) return false;
  const long t = val(nf.a, p);
  return val(nf.b, p) == 0 && val(nf.c, p) == t && val(nf.c - nf.a * nf.b, p) == t;
}

bool cycle_good_at(const TwoCycleNormalForm& nf, const Integer& p) {
  nf.validate();
  if (nf.a.is_zero() || nf.c.is_zero()) return false;
  const long t = val(nf.c, p);
  return val(nf.a, p) == 2 * t && val(nf.b, p) == 3 * t && val(nf.b - nf.a * nf.c, p) == 3 * t;
}

FixedPairNormalForm diagonal_conjugate(const FixedPairNormalForm& nf, const Rational& alpha) {
  return {nf.a / alpha, nf.b, nf.c / alpha};
}

TwoCycleNormalForm diagonal_conjugate(const TwoCycleNormalForm& nf, const Rational& alpha) {
  return {nf.a / (alpha * alpha), nf.b / (alpha * alpha * alpha), nf.c / alpha};
}

FixedPairNormalForm parse_fixed_pair_normal_form(std::string_view text) {
  const auto v = parse_abc(text);
  FixedPairNormalForm nf{v[0], v[1], v[2]};
  nf.validate();
  return nf;
}

TwoCycleNormalForm parse_two_cycle_normal_form(std::string_view text) {
  const auto v = parse_abc(text);
  TwoCycleNormalForm nf{v[0], v[1], v[2]};
  nf.validate();
  return nf;
}

}  // namespace quadmaps
