#include "quadmaps/projmap.hpp"

#include <sstream>
#include <vector>

namespace quadmaps {

namespace {

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  while (true) {
    const auto pos = s.find(sep, start);
    if (pos == std::string_view::npos) {
      parts.push_back(s.substr(start));
      return parts;
    }
    parts.push_back(s.substr(start, pos - start));
    start = pos + 1;
  }
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
  while (!s.empty() && s.back() == ' ') s.remove_suffix(1);
  return s;
}

template <std::size_t N>
std::array<Rational, N> parse_list(std::string_view s, const char* what) {
  const auto parts = split(s, ',');
  if (parts.size() != N) throw ParseError(std::string("malformed ") + what + ": '" + std::string(s) + "'");
  std::array<Rational, N> out;
  for (std::size_t i = 0; i < N; ++i) out[i] = Rational::parse(trim(parts[i]));
  return out;
}

bool proportional(const std::array<Rational, 6>& u, const std::array<Rational, 6>& v) {
  for (std::size_t i = 0; i < 6; ++i)
    for (std::size_t j = i + 1; j < 6; ++j)
      if (u[i] * v[j] != u[j] * v[i]) return false;
  // Both vectors are nonzero for valid maps, so vanishing minors suffice.
  return true;
}

}  // namespace

Point parse_point(std::string_view text) {
  const auto parts = split(text, ':');
  if (parts.size() != 2) throw ParseError("malformed point: '" + std::string(text) + "'");
  const auto x = Rational::parse(trim(parts[0]));
  const auto y = Rational::parse(trim(parts[1]));
  if (x.is_zero() && y.is_zero()) throw ParseError("(0:0) is not a projective point");
  return Point(x, y);
}

// ---------------------------------------------------------------- Mobius

Mobius::Mobius(Rational alpha, Rational beta, Rational gamma, Rational delta)
    : alpha_(std::move(alpha)), beta_(std::move(beta)), gamma_(std::move(gamma)), delta_(std::move(delta)) {
  if (det().is_zero()) throw DomainError("singular matrix");
}

Mobius Mobius::identity() { return {1, 0, 0, 1}; }
Mobius Mobius::swap() { return {0, 1, 1, 0}; }
Mobius Mobius::diagonal(const Rational& s) { return {s, 0, 0, 1}; }

Mobius Mobius::from_columns(const Point& p1, const Point& p2) { return {p1.x(), p2.x(), p1.y(), p2.y()}; }

Mobius Mobius::parse(std::string_view text) {
  const auto rows = split(text, ';');
  if (rows.size() != 2) throw ParseError("malformed matrix: '" + std::string(text) + "'");
  const auto r0 = parse_list<2>(rows[0], "matrix");
  const auto r1 = parse_list<2>(rows[1], "matrix");
  return {r0[0], r0[1], r1[0], r1[1]};
}

Point Mobius::apply(const Point& p) const {
  return Point(alpha_ * p.x() + beta_ * p.y(), gamma_ * p.x() + delta_ * p.y());
}

Mobius Mobius::inverse() const { return {delta_, -beta_, -gamma_, alpha_}; }

Mobius Mobius::compose(const Mobius& g) const {
  return {alpha_ * g.alpha_ + beta_ * g.gamma_, alpha_ * g.beta_ + beta_ * g.delta_,
          gamma_ * g.alpha_ + delta_ * g.gamma_, gamma_ * g.beta_ + delta_ * g.delta_};
}

std::string Mobius::str() const {
  return alpha_.str() + "," + beta_.str() + ";" + gamma_.str() + "," + delta_.str();
}

bool Mobius::projectively_equal(const Mobius& o) const {
  const std::array<Rational, 4> u{alpha_, beta_, gamma_, delta_}, v{o.alpha_, o.beta_, o.gamma_, o.delta_};
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = i + 1; j < 4; ++j)
      if (u[i] * v[j] != u[j] * v[i]) return false;
  return true;
}

// --------------------------------------------------------------- QuadMap

QuadMap::QuadMap(QuadForm<Rational> a, QuadForm<Rational> b) : forms_{std::move(a), std::move(b)} {
  if (quadmaps::resultant(forms_).is_zero()) throw DomainError("degenerate map");
}

QuadMap QuadMap::from_coefficients(const std::array<Rational, 6>& c) {
  return QuadMap({c[0], c[1], c[2]}, {c[3], c[4], c[5]});
}

std::array<Rational, 6> QuadMap::coefficients() const {
  return {forms_.a.c0, forms_.a.c1, forms_.a.c2, forms_.b.c0, forms_.b.c1, forms_.b.c2};
}

std::string QuadMap::str() const {
  const auto c = coefficients();
  std::ostringstream os;
  os << c[0] << ',' << c[1] << ',' << c[2] << ';' << c[3] << ',' << c[4] << ',' << c[5];
  return os.str();
}

QuadMap parse_map(std::string_view text) {
  const auto forms = split(text, ';');
  if (forms.size() != 2) throw ParseError("malformed map: '" + std::string(text) + "'");
  const auto a = parse_list<3>(forms[0], "map");
  const auto b = parse_list<3>(forms[1], "map");
  return QuadMap({a[0], a[1], a[2]}, {b[0], b[1], b[2]});
}

Rational resultant(const QuadMap& phi) { return resultant(phi.forms()); }
Point evaluate(const QuadMap& phi, const Point& p) { return evaluate(phi.forms(), p); }
int local_degree(const QuadMap& phi, const Point& p) { return local_degree(phi.forms(), p); }
QuadForm<Rational> wronskian(const QuadMap& phi) { return wronskian(phi.forms()); }

QuadMap normalize_primitive(const QuadMap& phi) {
  auto c = phi.coefficients();
  Integer l = 1;
  for (const auto& x : c) l = lcm(l, x.den());
  Integer g = 0;
  for (const auto& x : c) g = gcd(g, Integer(x.num() * (l / x.den())));
  Rational scale(l, g);
  for (const auto& x : c) {
    if (!x.is_zero()) {
      if (x.sign() < 0) scale = -scale;
      break;
    }
  }
  for (auto& x : c) x *= scale;
  return QuadMap::from_coefficients(c);
}

bool projectively_equal(const QuadMap& phi, const QuadMap& psi) {
  return proportional(phi.coefficients(), psi.coefficients());
}

QuadForm<Rational> substitute(const QuadForm<Rational>& q, const Mobius& f) {
  const auto& al = f.alpha();
  const auto& be = f.beta();
  const auto& ga = f.gamma();
  const auto& de = f.delta();
  return {q.c0 * al * al + q.c1 * al * ga + q.c2 * ga * ga,
          Rational(2) * al * be * q.c0 + (al * de + be * ga) * q.c1 + Rational(2) * ga * de * q.c2,
          q.c0 * be * be + q.c1 * be * de + q.c2 * de * de};
}

FormPair<Rational> conjugate_unnormalized(const QuadMap& phi, const Mobius& f) {
  const auto a = substitute(phi.a(), f);
  const auto b = substitute(phi.b(), f);
  const auto lin = [](const Rational& s, const QuadForm<Rational>& p, const Rational& t,
                      const QuadForm<Rational>& q) {
    return QuadForm<Rational>{s * p.c0 + t * q.c0, s * p.c1 + t * q.c1, s * p.c2 + t * q.c2};
  };
  return {lin(f.delta(), a, -f.beta(), b), lin(-f.gamma(), a, f.alpha(), b)};
}

QuadMap conjugate(const QuadMap& phi, const Mobius& f) {
  auto cd = conjugate_unnormalized(phi, f);
  return normalize_primitive(QuadMap(std::move(cd.a), std::move(cd.b)));
}

QuadMap conjugate_exact(const QuadMap& phi, const Mobius& f) {
  auto cd = conjugate_unnormalized(phi, f);
  const Rational inv = f.det().inverse();
  for (auto* q : {&cd.a, &cd.b}) {
    q->c0 *= inv;
    q->c1 *= inv;
    q->c2 *= inv;
  }
  return QuadMap(std::move(cd.a), std::move(cd.b));
}

}  // namespace quadmaps
