#pragma once

// Dense univariate polynomials over Q or F_p. The zero polynomial has no
// coefficients; fresh field constants are taken from existing coefficients
// so the same code serves both fields.

#include <cstddef>
#include <utility>
#include <vector>

#include "quadmaps/exactnum.hpp"

namespace quadmaps {

template <class F>
class Poly {
 public:
  Poly() = default;
  /// Coefficients from low to high degree; trailing zeros are dropped.
  explicit Poly(std::vector<F> coeffs) : c_(std::move(coeffs)) { trim(); }

  bool is_zero() const { return c_.empty(); }
  /// Degree; -1 for the zero polynomial.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  const F& operator[](std::size_t i) const { return c_[i]; }
  const F& lead() const { return c_.back(); }
  const std::vector<F>& coeffs() const { return c_; }

  F eval(const F& x) const {
    F acc = zero_like(x);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
  }

  Poly derivative() const {
    if (c_.size() <= 1) return {};
    std::vector<F> d;
    d.reserve(c_.size() - 1);
    F k = one_like(c_[0]);
    for (std::size_t i = 1; i < c_.size(); ++i) {
      d.push_back(c_[i] * k);
      k = k + one_like(k);
    }
    return Poly(std::move(d));
  }

  Poly monic() const {
    if (is_zero()) return {};
    std::vector<F> m = c_;
    const F inv = one_like(lead()) / lead();
    for (auto& x : m) x = x * inv;
    return Poly(std::move(m));
  }

  friend Poly operator+(const Poly& a, const Poly& b) {
    if (a.c_.size() < b.c_.size()) return b + a;
    std::vector<F> r = a.c_;
    for (std::size_t i = 0; i < b.c_.size(); ++i) r[i] = r[i] + b.c_[i];
    return Poly(std::move(r));
  }
  Poly operator-() const {
    std::vector<F> r = c_;
    for (auto& x : r) x = -x;
    return Poly(std::move(r));
  }
  friend Poly operator-(const Poly& a, const Poly& b) { return a + (-b); }
  friend Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<F> r(a.c_.size() + b.c_.size() - 1, zero_like(a.c_[0]));
    for (std::size_t i = 0; i < a.c_.size(); ++i)
      for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] = r[i + j] + a.c_[i] * b.c_[j];
    return Poly(std::move(r));
  }
  friend Poly operator*(const F& s, const Poly& a) {
    std::vector<F> r = a.c_;
    for (auto& x : r) x = s * x;
    return Poly(std::move(r));
  }

  /// Euclidean division; throws DomainError for a zero divisor.
  friend std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b) {
    if (b.is_zero()) throw DomainError("polynomial division by zero");
    if (a.degree() < b.degree()) return {Poly{}, a};
    std::vector<F> rem = a.c_;
    std::vector<F> quo(a.c_.size() - b.c_.size() + 1, zero_like(b.lead()));
    const F inv = one_like(b.lead()) / b.lead();
    for (std::size_t k = quo.size(); k-- > 0;) {
      const F q = rem[k + b.c_.size() - 1] * inv;
      quo[k] = q;
      for (std::size_t j = 0; j < b.c_.size(); ++j) rem[k + j] = rem[k + j] - q * b.c_[j];
    }
    rem.resize(b.c_.size() - 1, zero_like(b.lead()));
    return {Poly(std::move(quo)), Poly(std::move(rem))};
  }
  friend Poly operator%(const Poly& a, const Poly& b) { return divmod(a, b).second; }

  friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }

 private:
  void trim() {
    while (!c_.empty() && quadmaps::is_zero(c_.back())) c_.pop_back();
  }
  std::vector<F> c_;
};

/// Monic gcd (zero iff both inputs are zero).
template <class F>
Poly<F> gcd(Poly<F> a, Poly<F> b) {
  while (!b.is_zero()) {
    auto r = a % b;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

/// Inverse of a modulo m; throws DomainError when gcd(a, m) != 1.
template <class F>
Poly<F> inverse_mod(const Poly<F>& a, const Poly<F>& m) {
  Poly<F> r0 = m, r1 = a % m, s0, s1;
  if (r1.is_zero()) throw DomainError("polynomial not invertible");
  s1 = Poly<F>({one_like(r1.lead())});
  while (!r1.is_zero()) {
    auto [q, r] = divmod(r0, r1);
    r0 = std::move(r1);
    r1 = std::move(r);
    Poly<F> s = s0 - q * s1;
    s0 = std::move(s1);
    s1 = std::move(s);
  }
  if (r0.degree() != 0) throw DomainError("polynomial not invertible");
  return ((one_like(r0.lead()) / r0.lead()) * s0) % m;
}

}  // namespace quadmaps
