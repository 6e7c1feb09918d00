#include "cli.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "quadmaps/quadmaps.hpp"

namespace quadmaps::cli {

namespace {

using Json = nlohmann::ordered_json;

constexpr long kDefaultMaxN = 16;

struct UsageError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

Json primes_json(const PrimeSet& s) {
  Json arr = Json::array();
  for (const auto& p : s) arr.push_back(p.get_str());
  return arr;
}

Json rationals_json(const std::vector<Rational>& v) {
  Json arr = Json::array();
  for (const auto& q : v) arr.push_back(q.str());
  return arr;
}

long parse_long(const std::string& text, const char* flag) {
  const Rational q = Rational::parse(text);
  if (!q.is_integer() || !q.num().fits_slong_p())
    throw UsageError(std::string(flag) + " expects an integer, got '" + text + "'");
  return q.num().get_si();
}

std::uint64_t parse_prime(const std::string& text, const char* flag) {
  const long p = parse_long(text, flag);
  if (p < 2) throw DomainError(text + " is not prime");
  require_prime(static_cast<std::uint64_t>(p));
  return static_cast<std::uint64_t>(p);
}

std::string csv_field(const Json& v) {
  std::string s;
  if (v.is_string())
    s = v.get<std::string>();
  else if (v.is_array()) {
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ";" : "") + csv_field(v[i]);
  } else
    s = v.dump();
  if (s.find_first_of(",\"\n") != std::string::npos) {
    std::string q = "\"";
    for (char c : s) q += (c == '"') ? std::string("\"\"") : std::string(1, c);
    return q + "\"";
  }
  return s;
}

// A table when the payload carries a list of records, else key,value lines.
std::string to_csv(const Json& j) {
  std::ostringstream os;
  for (const auto& [key, value] : j.items()) {
    if (!value.is_array() || value.empty() || !(value[0].is_object() || value[0].is_array())) continue;
    if (value[0].is_object()) {
      std::vector<std::string> cols;
      for (const auto& [k, _] : value[0].items()) cols.push_back(k);
      for (std::size_t i = 0; i < cols.size(); ++i) os << (i ? "," : "") << cols[i];
      os << "\n";
      for (const auto& row : value) {
        for (std::size_t i = 0; i < cols.size(); ++i) os << (i ? "," : "") << csv_field(row[cols[i]]);
        os << "\n";
      }
    } else {
      os << "x,y\n";
      for (const auto& row : value) os << csv_field(row[0]) << "," << csv_field(row[1]) << "\n";
    }
    return os.str();
  }
  os << "key,value\n";
  for (const auto& [key, value] : j.items()) {
    if (value.is_object()) {
      for (const auto& [k, v] : value.items()) os << key << "." << k << "," << csv_field(v) << "\n";
    } else {
      os << key << "," << csv_field(value) << "\n";
    }
  }
  return os.str();
}

// Primes at which a structured normal form could fail the valuation test.
std::vector<Integer> candidate_primes(std::initializer_list<Rational> values) {
  std::set<Integer> ps;
  for (const auto& q : values) {
    if (q.is_zero()) continue;
    for (const auto& pp : factorize(q.num())) ps.insert(pp.prime);
    for (const auto& pp : factorize(q.den())) ps.insert(pp.prime);
  }
  return {ps.begin(), ps.end()};
}

struct Options {
  std::string format = "json";
  std::string map, pgl, prime, outside_s, p1, p2, kind, p, n_param, alpha, beta, s, bound, coeff_bound, eq_bound;
  std::string max_n = std::to_string(kDefaultMaxN);
  bool outside_s_given = false;
};

Json cmd_invariants(const Options& o) {
  const QuadMap phi = parse_map(o.map);
  const auto sigma = sigma_invariants(phi);
  const auto fix = fixed_point_form(phi);
  Json j;
  j["map"] = phi.str();
  j["resultant"] = resultant(phi).str();
  j["sigma1"] = sigma.sigma1.str();
  j["sigma2"] = sigma.sigma2.str();
  j["sigma3"] = sigma.sigma3.str();
  j["fixed_point_form"] = fix.c0.str() + "," + fix.c1.str() + "," + fix.c2.str() + "," + fix.c3.str();
  return j;
}

Json cmd_conjugate(const Options& o) {
  const QuadMap phi = parse_map(o.map);
  const Mobius f = Mobius::parse(o.pgl);
  const QuadMap psi = conjugate(phi, f);
  Json j;
  j["map"] = phi.str();
  j["pgl"] = f.str();
  j["conjugate"] = psi.str();
  j["resultant"] = resultant(psi).str();
  return j;
}

Json cmd_reduce(const Options& o) {
  const QuadMap phi = parse_map(o.map);
  const auto p = parse_prime(o.prime, "--prime");
  const auto r = reduce_map(phi, p);
  Json j;
  j["map"] = phi.str();
  j["prime"] = p;
  j["reduced"] = r.str();
  j["degree"] = r.degree;
  j["good"] = is_good_at(phi, p);
  return j;
}

Json cmd_good_reduction(const Options& o) {
  const QuadMap phi = parse_map(o.map);
  const QuadMap norm = normalize_primitive(phi);
  const PrimeSet bad = bad_primes(phi);
  Json j;
  j["map"] = phi.str();
  j["normalized"] = norm.str();
  j["resultant"] = resultant(norm).str();
  j["bad_primes"] = primes_json(bad);
  if (o.outside_s_given) {
    const PrimeSet S = PrimeSet::parse(o.outside_s);
    j["S"] = primes_json(S);
    j["good_outside_S"] = std::all_of(bad.begin(), bad.end(), [&](const Integer& q) { return S.contains(q); });
  }
  return j;
}

template <class NormalForm>
Json structured_report(const std::string& triple, const NormalForm& nf, const Mobius& f, const Rational& u,
                       const std::vector<Integer>& bad, const Options& o) {
  Json j;
  j["triple"] = triple;
  j["normal_form"] = nf.str();
  j["transform"] = f.str();
  j["u"] = u.str();
  j["one_minus_u"] = (Rational(1) - u).str();
  j["bad_primes"] = primes_json(PrimeSet(bad));
  if (o.outside_s_given) {
    const PrimeSet S = PrimeSet::parse(o.outside_s);
    const bool good = std::all_of(bad.begin(), bad.end(), [&](const Integer& q) { return S.contains(q); });
    j["S"] = primes_json(S);
    j["good_outside_S"] = good;
    j["unit_equation_solution"] = is_s_unit(u, S) && is_s_unit(Rational(1) - u, S);
  }
  return j;
}

Json cmd_classify_fixed(const Options& o) {
  const QuadMap phi = parse_map(o.map);
  const auto t = validate_fixed_pair(phi, parse_point(o.p1), parse_point(o.p2));
  const auto [nf, f] = fixed_pair_normal_form(t);
  std::vector<Integer> bad;
  for (const auto& q : candidate_primes({nf.a, nf.b, nf.c, nf.c - nf.a * nf.b}))
    if (!triple_good_at(nf, q)) bad.push_back(q);
  return structured_report(t.str(), nf, f, u_invariant(nf), bad, o);
}

Json cmd_classify_cycle(const Options& o) {
  const QuadMap phi = parse_map(o.map);
  const auto t = validate_two_cycle(phi, parse_point(o.p1), parse_point(o.p2));
  const auto [nf, f] = two_cycle_normal_form(t);
  std::vector<Integer> bad;
  for (const auto& q : candidate_primes({nf.a, nf.b, nf.c, nf.b - nf.a * nf.c}))
    if (!cycle_good_at(nf, q)) bad.push_back(q);
  return structured_report(t.str(), nf, f, cycle_invariant(nf), bad, o);
}

long checked_n(const Options& o) {
  const long N = parse_long(o.n_param, "--N");
  const long ceiling = parse_long(o.max_n, "--max-N");
  if (N > ceiling) throw DomainError("N exceeds the ceiling " + std::to_string(ceiling) + " (see --max-N)");
  return N;
}

Json cmd_family(const Options& o) {
  Json j;
  if (o.kind == "cpnf") {
    if (o.p.empty() || o.n_param.empty()) throw UsageError("--kind cpnf requires --p and --N");
    const long p = parse_long(o.p, "--p");
    const long N = checked_n(o);
    const auto maps = cpnf_family(Integer(p), N);
    j["kind"] = "cpnf";
    j["p"] = p;
    j["N"] = N;
    Json rows = Json::array();
    for (std::size_t n = 0; n < maps.size(); ++n) {
      const auto s = sigma_invariants(maps[n]);
      rows.push_back({{"n", n},
                      {"map", maps[n].str()},
                      {"resultant", resultant(maps[n]).str()},
                      {"sigma1", s.sigma1.str()},
                      {"sigma2", s.sigma2.str()}});
    }
    j["maps"] = rows;
  } else if (o.kind == "fpnf") {
    if (o.alpha.empty() || o.beta.empty()) throw UsageError("--kind fpnf requires --alpha and --beta");
    const Rational alpha = Rational::parse(o.alpha), beta = Rational::parse(o.beta);
    const QuadMap phi = fpnf_map(alpha, beta);
    const auto s = sigma_invariants(phi);
    j["kind"] = "fpnf";
    j["alpha"] = alpha.str();
    j["beta"] = beta.str();
    j["map"] = phi.str();
    j["resultant"] = resultant(phi).str();
    j["sigma1"] = s.sigma1.str();
    j["sigma2"] = s.sigma2.str();
    j["sigma3"] = s.sigma3.str();
  } else {
    throw UsageError("--kind must be cpnf or fpnf");
  }
  return j;
}

Json cmd_density_witness(const Options& o) {
  const long p = parse_long(o.p, "--p");
  const long N = checked_n(o);
  const auto report = density_witness(Integer(p), N);
  Json j;
  j["p"] = p;
  j["N"] = N;
  j["sigma1"] = report.sigma1.str();
  Json rows = Json::array();
  for (const auto& r : report.rows)
    rows.push_back({{"n", r.n}, {"sigma2", r.sigma.sigma2.str()}, {"bad_primes", primes_json(r.bad_primes)}});
  j["rows"] = rows;
  return j;
}

Json cmd_sunit_solve(const Options& o) {
  const PrimeSet S = PrimeSet::parse(o.s);
  const long bound = parse_long(o.bound, "--bound");
  if (bound < 0) throw UsageError("--bound must be non-negative");
  const auto sols = solve_unit_equation(S, bound);
  Json j;
  j["S"] = primes_json(S);
  j["bound"] = bound;
  Json arr = Json::array();
  for (const auto& [x, y] : sols.solutions) arr.push_back(Json::array({x.str(), y.str()}));
  j["solutions"] = arr;
  j["u_values"] = rationals_json(covering_set(S, bound));
  return j;
}

Json cmd_covering_check(const Options& o, bool& failed) {
  const PrimeSet S = PrimeSet::parse(o.s);
  const long cb = parse_long(o.coeff_bound, "--coeff-bound");
  const long eb = parse_long(o.eq_bound, "--eq-bound");
  if (cb < 0 || eb < 0) throw UsageError("bounds must be non-negative");
  const auto r = covering_check(S, cb, eb);
  Json j;
  j["S"] = primes_json(S);
  j["coeff_bound"] = cb;
  j["eq_bound"] = eb;
  j["covering_set"] = rationals_json(r.covering);
  j["fixed"] = {{"enumerated", r.fixed_enumerated},
                {"good", r.fixed_good},
                {"u_values", rationals_json(r.fixed_u_values)}};
  j["cycle"] = {{"enumerated", r.cycle_enumerated},
                {"good", r.cycle_good},
                {"u_values", rationals_json(r.cycle_u_values)}};
  Json v = Json::array();
  for (const auto& x : r.violations)
    v.push_back({{"kind", x.kind}, {"a", x.a.str()}, {"b", x.b.str()}, {"c", x.c.str()}, {"u", x.u.str()}});
  j["violations"] = v;
  j["ok"] = r.ok();
  failed = !r.ok();
  return j;
}

void emit_error(std::ostream& err, const std::string& msg) { err << Json{{"error", msg}}.dump() << "\n"; }

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact arithmetic for quadratic rational maps on P^1 over Q", "quadmaps"};
  app.require_subcommand(1);
  app.fallthrough();
  Options o;
  app.add_option("--format", o.format, "Output format")->check(CLI::IsMember({"json", "csv"}));

  auto* inv = app.add_subcommand("invariants", "Resultant, fixed-point form and Milnor coordinates of a map");
  inv->add_option("--map", o.map, "a0,a1,a2;b0,b1,b2")->required();

  auto* conj = app.add_subcommand("conjugate", "Conjugate a map by an element of PGL_2(Q)");
  conj->add_option("--map", o.map)->required();
  conj->add_option("--pgl", o.pgl, "alpha,beta;gamma,delta")->required();

  auto* red = app.add_subcommand("reduce", "Reduce a map modulo a prime");
  red->add_option("--map", o.map)->required();
  red->add_option("--prime", o.prime)->required();

  auto* good = app.add_subcommand("good-reduction", "Bad primes of the primitive model of a map");
  good->add_option("--map", o.map)->required();
  auto* good_s = good->add_option("--outside-S", o.outside_s, "Comma-separated primes, e.g. 2,3");

  auto* cf = app.add_subcommand("classify-fixed", "Normal form and good reduction of a fixed-pair triple");
  cf->add_option("--map", o.map)->required();
  cf->add_option("--p1", o.p1, "x:y")->required();
  cf->add_option("--p2", o.p2, "x:y")->required();
  auto* cf_s = cf->add_option("--outside-S", o.outside_s);

  auto* cc = app.add_subcommand("classify-cycle", "Normal form and good reduction of a 2-cycle triple");
  cc->add_option("--map", o.map)->required();
  cc->add_option("--p1", o.p1)->required();
  cc->add_option("--p2", o.p2)->required();
  auto* cc_s = cc->add_option("--outside-S", o.outside_s);

  auto* fam = app.add_subcommand("family", "Witness families: cpnf (phi_{n,N}) or fpnf (phi_{alpha,beta})");
  fam->add_option("--kind", o.kind)->required()->check(CLI::IsMember({"cpnf", "fpnf"}));
  fam->add_option("--p", o.p);
  fam->add_option("--N", o.n_param);
  fam->add_option("--alpha", o.alpha);
  fam->add_option("--beta", o.beta);
  fam->add_option("--max-N", o.max_n, "Ceiling on N");

  auto* dw = app.add_subcommand("density-witness", "Verify the phi_{n,N} family on the line sigma1 = 8p^{2N}-6");
  dw->add_option("--p", o.p)->required();
  dw->add_option("--N", o.n_param)->required();
  dw->add_option("--max-N", o.max_n, "Ceiling on N");

  auto* su = app.add_subcommand("sunit-solve", "Bounded search for solutions of x + y = 1 in S-units");
  su->add_option("--S", o.s, "Comma-separated primes (empty for none)")->required();
  su->add_option("--bound", o.bound)->required();

  auto* cov = app.add_subcommand("covering-check", "Check u-invariants of S-unit normal forms against x + y = 1");
  cov->add_option("--S", o.s)->required();
  cov->add_option("--coeff-bound", o.coeff_bound)->required();
  cov->add_option("--eq-bound", o.eq_bound)->required();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    emit_error(err, e.what());
    return kUsageError;
  }
  o.outside_s_given = good_s->count() + cf_s->count() + cc_s->count() > 0;

  bool failed = false;
  try {
    Json result;
    if (inv->parsed())
      result = cmd_invariants(o);
    else if (conj->parsed())
      result = cmd_conjugate(o);
    else if (red->parsed())
      result = cmd_reduce(o);
    else if (good->parsed())
      result = cmd_good_reduction(o);
    else if (cf->parsed())
      result = cmd_classify_fixed(o);
    else if (cc->parsed())
      result = cmd_classify_cycle(o);
    else if (fam->parsed())
      result = cmd_family(o);
    else if (dw->parsed())
      result = cmd_density_witness(o);
    else if (su->parsed())
      result = cmd_sunit_solve(o);
    else
      result = cmd_covering_check(o, failed);
    out << (o.format == "csv" ? to_csv(result) : result.dump(2) + "\n");
  } catch (const ParseError& e) {
    emit_error(err, e.what());
    return kUsageError;
  } catch (const UsageError& e) {
    emit_error(err, e.what());
    return kUsageError;
  } catch (const DomainError& e) {
    emit_error(err, e.what());
    return kDomainError;
  } catch (const VerificationError& e) {
    emit_error(err, e.what());
    return kDomainError;
  }
  if (failed) {
    emit_error(err, "covering check found violations");
    return kDomainError;
  }
  return kOk;
}

}  // namespace quadmaps::cli
