#pragma once

// Exact rational arithmetic, p-adic valuations, S-unit predicates and
// prime-field elements. Everything else in the library is built on these.

#include <compare>
#include <concepts>
#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "quadmaps/errors.hpp"

namespace quadmaps {

using Integer = mpz_class;

/// A rational number, always stored in lowest terms with positive denominator.
/// Equality is structural.
class Rational {
 public:
  Rational() = default;

  template <std::signed_integral T>
  Rational(T v) : value_(static_cast<long>(v)) {}  // NOLINT(google-explicit-constructor)

  template <std::unsigned_integral T>
  Rational(T v) : value_(static_cast<unsigned long>(v)) {}  // NOLINT(google-explicit-constructor)

  Rational(const Integer& n) : value_(n) {}  // NOLINT(google-explicit-constructor)

  /// n/d; throws DomainError when d == 0.
  Rational(const Integer& n, const Integer& d);

  /// Parses "n" or "n/d" (optional leading '-'). Non-canonical input such
  /// as "4/6" is accepted and reduced.
  static Rational parse(std::string_view text);

  Integer num() const { return value_.get_num(); }
  Integer den() const { return value_.get_den(); }

  bool is_zero() const { return sgn(value_) == 0; }
  int sign() const { return sgn(value_); }
  bool is_integer() const { return value_.get_den() == 1; }

  Rational inverse() const;
  Rational abs() const;

  /// Canonical "n" or "n/d".
  std::string str() const;

  const mpq_class& raw() const { return value_; }

  Rational operator-() const;
  Rational& operator+=(const Rational& o);
  Rational& operator-=(const Rational& o);
  Rational& operator*=(const Rational& o);
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) { return cmp(a.value_, b.value_) == 0; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const int c = cmp(a.value_, b.value_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

 private:
  explicit Rational(mpq_class v) : value_(std::move(v)) {}
  mpq_class value_;
};

std::ostream& operator<<(std::ostream& os, const Rational& q);

/// q^e for any integer e; 0^e with e < 0 throws.
Rational pow(const Rational& q, long e);
Integer ipow(const Integer& base, unsigned long e);

/// An element of the prime field F_p. The modulus is not re-checked for
/// primality here; public entry points that accept a prime validate it.
class Fp {
 public:
  Fp(std::int64_t value, std::uint64_t modulus);
  static Fp from_residue(std::uint64_t residue, std::uint64_t modulus);

  std::uint64_t value() const { return r_; }
  std::uint64_t modulus() const { return p_; }
  bool is_zero() const { return r_ == 0; }

  Fp inverse() const;
  std::string str() const;  // "r mod p"

  Fp operator-() const;
  Fp& operator+=(const Fp& o);
  Fp& operator-=(const Fp& o);
  Fp& operator*=(const Fp& o);
  Fp& operator/=(const Fp& o);

  friend Fp operator+(Fp a, const Fp& b) { return a += b; }
  friend Fp operator-(Fp a, const Fp& b) { return a -= b; }
  friend Fp operator*(Fp a, const Fp& b) { return a *= b; }
  friend Fp operator/(Fp a, const Fp& b) { return a /= b; }
  friend bool operator==(const Fp& a, const Fp& b) { return a.r_ == b.r_ && a.p_ == b.p_; }

 private:
  void require_same_field(const Fp& o) const;
  std::uint64_t r_;
  std::uint64_t p_;
};

std::ostream& operator<<(std::ostream& os, const Fp& x);

// Field-generic helpers so form code can be written once for Q and F_p.
inline bool is_zero(const Rational& x) { return x.is_zero(); }
inline bool is_zero(const Fp& x) { return x.is_zero(); }
inline Rational zero_like(const Rational&) { return Rational{}; }
inline Fp zero_like(const Fp& x) { return Fp::from_residue(0, x.modulus()); }
inline Rational one_like(const Rational&) { return Rational{1}; }
inline Fp one_like(const Fp& x) { return Fp::from_residue(1, x.modulus()); }
inline std::string to_string(const Rational& x) { return x.str(); }
inline std::string to_string(const Fp& x) { return std::to_string(x.value()); }

bool is_prime(const Integer& n);

struct PrimePower {
  Integer prime;
  unsigned long exponent;
  friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

/// Factorization of |n| in increasing prime order; n must be nonzero.
/// Trial division up to 10^6, then Pollard-rho (Brent) on the cofactor.
std::vector<PrimePower> factorize(const Integer& n);

/// A finite sorted set of distinct rational primes.
class PrimeSet {
 public:
  PrimeSet() = default;
  /// Sorts and deduplicates; throws DomainError on a non-prime entry.
  explicit PrimeSet(std::vector<Integer> primes);
  PrimeSet(std::initializer_list<long> primes);

  /// "2,3" or "" for the empty set.
  static PrimeSet parse(std::string_view text);

  bool contains(const Integer& p) const;
  std::size_t size() const { return primes_.size(); }
  bool empty() const { return primes_.empty(); }
  auto begin() const { return primes_.begin(); }
  auto end() const { return primes_.end(); }
  const std::vector<Integer>& primes() const { return primes_; }
  std::string str() const;

  friend bool operator==(const PrimeSet&, const PrimeSet&) = default;

 private:
  std::vector<Integer> primes_;
};

/// v_p(q); throws DomainError("valuation of zero undefined") for q == 0.
long valuation(const Rational& q, const Integer& p);

/// True iff q != 0 and v_p(q) == 0 for all primes p outside S.
bool is_s_unit(const Rational& q, const PrimeSet& S);

/// Image of a p-integral rational in F_p; throws DomainError("not p-integral").
Fp reduce_mod_p(const Rational& q, std::uint64_t p);

/// Validates that p is a prime fitting the F_p representation.
void require_prime(std::uint64_t p);

}  // namespace quadmaps
