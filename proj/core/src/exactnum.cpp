#include "quadmaps/exactnum.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace quadmaps {

namespace {

__extension__ using i128 = __int128;
__extension__ using u128 = unsigned __int128;

bool parse_integer(std::string_view s, Integer& out) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  for (std::size_t j = i; j < s.size(); ++j)
    if (!std::isdigit(static_cast<unsigned char>(s[j]))) return false;
  std::string digits(s[0] == '+' ? s.substr(1) : s);
  return out.set_str(digits, 10) == 0;
}

}  // namespace

Rational::Rational(const Integer& n, const Integer& d) {
  if (d == 0) throw DomainError("zero denominator");
  value_ = mpq_class(n, d);
  value_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
  const auto slash = text.find('/');
  Integer n;
  if (slash == std::string_view::npos) {
    if (!parse_integer(text, n)) throw ParseError("malformed rational: '" + std::string(text) + "'");
    return Rational(n);
  }
  Integer d;
  const auto den_text = text.substr(slash + 1);
  if (!parse_integer(text.substr(0, slash), n) || den_text.empty() || den_text[0] == '-' ||
      den_text[0] == '+' || !parse_integer(den_text, d))
    throw ParseError("malformed rational: '" + std::string(text) + "'");
  if (d == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
  return Rational(n, d);
}

Rational Rational::inverse() const {
  if (is_zero()) throw DomainError("inverse of zero");
  mpq_class r;
  mpq_inv(r.get_mpq_t(), value_.get_mpq_t());
  return Rational(std::move(r));
}

Rational Rational::abs() const { return Rational(mpq_class(::abs(value_))); }

std::string Rational::str() const { return value_.get_str(10); }

Rational Rational::operator-() const { return Rational(mpq_class(-value_)); }

Rational& Rational::operator+=(const Rational& o) {
  value_ += o.value_;
  return *this;
}
Rational& Rational::operator-=(const Rational& o) {
  value_ -= o.value_;
  return *this;
}
Rational& Rational::operator*=(const Rational& o) {
  value_ *= o.value_;
  return *this;
}
Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw DomainError("division by zero");
  value_ /= o.value_;
  return *this;
}

std::ostream& operator<<(std::ostream& os, const Rational& q) { return os << q.str(); }

Integer ipow(const Integer& base, unsigned long e) {
  Integer r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
  return r;
}

Rational pow(const Rational& q, long e) {
  if (e < 0) return pow(q.inverse(), -e);
  const auto ue = static_cast<unsigned long>(e);
  return Rational(ipow(q.num(), ue), ipow(q.den(), ue));
}

// ---------------------------------------------------------------- F_p

Fp::Fp(std::int64_t value, std::uint64_t modulus) : p_(modulus) {
  if (modulus < 2) throw DomainError("invalid field modulus");
  const auto m = static_cast<i128>(modulus);
  auto r = static_cast<i128>(value) % m;
  if (r < 0) r += m;
  r_ = static_cast<std::uint64_t>(r);
}

Fp Fp::from_residue(std::uint64_t residue, std::uint64_t modulus) {
  Fp x(0, modulus);
  x.r_ = residue % modulus;
  return x;
}

void Fp::require_same_field(const Fp& o) const {
  if (p_ != o.p_) throw DomainError("mixed prime fields");
}

Fp Fp::operator-() const { return from_residue(r_ == 0 ? 0 : p_ - r_, p_); }

Fp& Fp::operator+=(const Fp& o) {
  require_same_field(o);
  r_ = static_cast<std::uint64_t>((static_cast<u128>(r_) + o.r_) % p_);
  return *this;
}
Fp& Fp::operator-=(const Fp& o) { return *this += -o; }
Fp& Fp::operator*=(const Fp& o) {
  require_same_field(o);
  r_ = static_cast<std::uint64_t>((static_cast<u128>(r_) * o.r_) % p_);
  return *this;
}
Fp& Fp::operator/=(const Fp& o) { return *this *= o.inverse(); }

Fp Fp::inverse() const {
  if (r_ == 0) throw DomainError("inverse of zero in F_p");
  // Extended Euclid on signed 128-bit values.
  i128 a = r_, b = p_, x0 = 1, x1 = 0;
  while (b != 0) {
    const i128 q = a / b;
    a -= q * b;
    std::swap(a, b);
    x0 -= q * x1;
    std::swap(x0, x1);
  }
  if (a != 1) throw DomainError("non-invertible residue: modulus is not prime");
  const auto m = static_cast<i128>(p_);
  x0 %= m;
  if (x0 < 0) x0 += m;
  return from_residue(static_cast<std::uint64_t>(x0), p_);
}

std::string Fp::str() const { return std::to_string(r_) + " mod " + std::to_string(p_); }

std::ostream& operator<<(std::ostream& os, const Fp& x) { return os << x.str(); }

// --------------------------------------------------------- primes

bool is_prime(const Integer& n) {
  if (n < 2) return false;
  return mpz_probab_prime_p(n.get_mpz_t(), 40) > 0;
}

void require_prime(std::uint64_t p) {
  if (!is_prime(Integer(static_cast<unsigned long>(p))))
    throw DomainError(std::to_string(p) + " is not prime");
}

namespace {

constexpr unsigned long kTrialLimit = 1'000'000;

// Brent's variant of Pollard rho with deterministic seeds c = 1, 2, ...
Integer pollard_brent(const Integer& n) {
  if (n % 2 == 0) return 2;
  for (unsigned long c = 1;; ++c) {
    Integer y = 2, x, ys, q = 1, g = 1;
    unsigned long r = 1;
    constexpr unsigned long m = 128;
    auto f = [&](const Integer& v) -> Integer { return Integer((v * v + c) % n); };
    do {
      x = y;
      for (unsigned long i = 0; i < r; ++i) y = f(y);
      unsigned long k = 0;
      do {
        ys = y;
        for (unsigned long i = 0; i < std::min(m, r - k); ++i) {
          y = f(y);
          q = Integer((q * ::abs(x - y)) % n);
        }
        g = gcd(q, n);
        k += m;
      } while (k < r && g == 1);
      r *= 2;
    } while (g == 1);
    if (g == n) {
      do {
        ys = f(ys);
        g = gcd(Integer(::abs(x - ys)), n);
      } while (g == 1);
    }
    if (g != n) return g;
  }
}

void split(const Integer& n, std::vector<Integer>& out) {
  if (n == 1) return;
  if (is_prime(n)) {
    out.push_back(n);
    return;
  }
  const Integer d = pollard_brent(n);
  split(d, out);
  split(Integer(n / d), out);
}

}  // namespace

std::vector<PrimePower> factorize(const Integer& n) {
  if (n == 0) throw DomainError("cannot factor zero");
  Integer m = ::abs(n);
  std::vector<PrimePower> result;
  auto take = [&](unsigned long p) {
    unsigned long e = 0;
    while (mpz_divisible_ui_p(m.get_mpz_t(), p)) {
      mpz_divexact_ui(m.get_mpz_t(), m.get_mpz_t(), p);
      ++e;
    }
    if (e > 0) result.push_back({Integer(p), e});
  };
  take(2);
  for (unsigned long p = 3; p <= kTrialLimit && Integer(p) * p <= m; p += 2) take(p);
  if (m == 1) return result;
  if (Integer(kTrialLimit) * kTrialLimit >= m) {
    // No factor below the trial limit and m < limit^2: m is prime.
    result.push_back({m, 1});
    return result;
  }
  std::vector<Integer> large;
  split(m, large);
  std::sort(large.begin(), large.end());
  for (const auto& p : large) {
    if (!result.empty() && result.back().prime == p)
      ++result.back().exponent;
    else
      result.push_back({p, 1});
  }
  return result;
}

// ------------------------------------------------------- PrimeSet

PrimeSet::PrimeSet(std::vector<Integer> primes) : primes_(std::move(primes)) {
  for (const auto& p : primes_)
    if (!is_prime(p)) throw DomainError(p.get_str() + " is not prime");
  std::sort(primes_.begin(), primes_.end());
  primes_.erase(std::unique(primes_.begin(), primes_.end()), primes_.end());
}

PrimeSet::PrimeSet(std::initializer_list<long> primes)
    : PrimeSet([&] {
        std::vector<Integer> v;
        for (long p : primes) v.emplace_back(p);
        return v;
      }()) {}

PrimeSet PrimeSet::parse(std::string_view text) {
  std::vector<Integer> primes;
  if (text.empty() || text == "none") return PrimeSet{};
  std::size_t start = 0;
  while (start <= text.size()) {
    auto comma = text.find(',', start);
    if (comma == std::string_view::npos) comma = text.size();
    Integer p;
    if (!parse_integer(text.substr(start, comma - start), p))
      throw ParseError("malformed prime list: '" + std::string(text) + "'");
    primes.push_back(p);
    start = comma + 1;
  }
  return PrimeSet(std::move(primes));
}

bool PrimeSet::contains(const Integer& p) const {
  return std::binary_search(primes_.begin(), primes_.end(), p);
}

std::string PrimeSet::str() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < primes_.size(); ++i) os << (i ? "," : "") << primes_[i].get_str();
  return os.str();
}

// ------------------------------------------------------ valuations

long valuation(const Rational& q, const Integer& p) {
  if (q.is_zero()) throw DomainError("valuation of zero undefined");
  if (p < 2) throw DomainError("valuation requires a prime");
  Integer rest;
  const Integer n = q.num(), d = q.den();
  const auto vn = mpz_remove(rest.get_mpz_t(), n.get_mpz_t(), p.get_mpz_t());
  const auto vd = mpz_remove(rest.get_mpz_t(), d.get_mpz_t(), p.get_mpz_t());
  return static_cast<long>(vn) - static_cast<long>(vd);
}

bool is_s_unit(const Rational& q, const PrimeSet& S) {
  if (q.is_zero()) return false;
  Integer n = ::abs(q.num()), d = q.den();
  for (const auto& p : S) {
    mpz_remove(n.get_mpz_t(), n.get_mpz_t(), p.get_mpz_t());
    mpz_remove(d.get_mpz_t(), d.get_mpz_t(), p.get_mpz_t());
  }
  return n == 1 && d == 1;
}

Fp reduce_mod_p(const Rational& q, std::uint64_t p) {
  require_prime(p);
  const Integer P(static_cast<unsigned long>(p));
  if (!q.is_zero() && valuation(q, P) < 0) throw DomainError("not p-integral");
  const Integer n = q.num() % P, d = q.den() % P;
  const auto to_fp = [p](const Integer& r) {
    Integer rr = r;
    if (rr < 0) rr += Integer(static_cast<unsigned long>(p));
    return Fp::from_residue(rr.get_ui(), p);
  };
  return to_fp(n) / to_fp(d);
}

}  // namespace quadmaps
