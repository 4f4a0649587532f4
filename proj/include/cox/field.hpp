#pragma once

#include <cstdint>
#include <string>

#include <gmpxx.h>

#include "cox/error.hpp"

namespace cox {

// Deterministic primality by trial division; enough for p < 2^31.
inline bool is_prime_u32(uint32_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (uint64_t d = 3; d * d <= n; d += 2)
    if (n % d == 0) return false;
  return true;
}

// Prime field F_p for an odd prime p < 2^31. Elements are canonical
// representatives in [0, p).
class FpField {
public:
  using Elem = uint32_t;

  explicit FpField(uint32_t p) : p_(p) {
    if (!is_prime_u32(p)) fail("invalid-params", "modulus " + std::to_string(p) + " is not prime");
    if (p == 2) fail("invalid-params", "F_2 is not supported (need odd characteristic)");
  }

  uint32_t characteristic() const { return p_; }

  Elem zero() const { return 0; }
  Elem one() const { return 1; }
  bool is_zero(Elem a) const { return a == 0; }
  bool is_one(Elem a) const { return a == 1; }

  Elem add(Elem a, Elem b) const {
    uint32_t s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  Elem sub(Elem a, Elem b) const { return a >= b ? a - b : a + p_ - b; }
  Elem neg(Elem a) const { return a == 0 ? 0 : p_ - a; }
  Elem mul(Elem a, Elem b) const {
    return static_cast<Elem>((static_cast<uint64_t>(a) * b) % p_);
  }
  Elem inv(Elem a) const {
    if (a == 0) fail("zero-divisor-input", "inverse of 0 in F_p");
    // extended Euclid
    int64_t t = 0, nt = 1, r = p_, nr = a;
    while (nr != 0) {
      int64_t q = r / nr;
      int64_t tmp = t - q * nt; t = nt; nt = tmp;
      tmp = r - q * nr; r = nr; nr = tmp;
    }
    if (t < 0) t += p_;
    return static_cast<Elem>(t);
  }
  Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }

  Elem from_int(long long v) const {
    long long m = v % static_cast<long long>(p_);
    if (m < 0) m += p_;
    return static_cast<Elem>(m);
  }
  // a/b literals; rejects denominators divisible by p.
  Elem from_fraction(long long num, long long den) const {
    if (den % static_cast<long long>(p_) == 0)
      fail("coefficient-not-in-field",
           "denominator " + std::to_string(den) + " vanishes in F_" + std::to_string(p_));
    return div(from_int(num), from_int(den));
  }

  // Symmetric representative: elements above p/2 print negated.
  std::string to_string(Elem a) const {
    if (a > p_ / 2) return "-" + std::to_string(p_ - a);
    return std::to_string(a);
  }
  bool print_negative(Elem a) const { return a > p_ / 2; }
  // |a| for printing after the sign has been emitted separately.
  std::string to_string_abs(Elem a) const {
    return std::to_string(a > p_ / 2 ? p_ - a : a);
  }

  bool operator==(const FpField& o) const { return p_ == o.p_; }
  bool operator!=(const FpField& o) const { return p_ != o.p_; }

  std::string name() const { return "F" + std::to_string(p_); }

private:
  uint32_t p_;
};

// Exact rationals via GMP. mpq_class keeps values canonical (reduced,
// positive denominator) as long as arithmetic goes through operators.
class QField {
public:
  using Elem = mpq_class;

  uint32_t characteristic() const { return 0; }

  Elem zero() const { return Elem(0); }
  Elem one() const { return Elem(1); }
  bool is_zero(const Elem& a) const { return sgn(a) == 0; }
  bool is_one(const Elem& a) const { return a == 1; }

  Elem add(const Elem& a, const Elem& b) const { return a + b; }
  Elem sub(const Elem& a, const Elem& b) const { return a - b; }
  Elem neg(const Elem& a) const { return -a; }
  Elem mul(const Elem& a, const Elem& b) const { return a * b; }
  Elem inv(const Elem& a) const {
    if (sgn(a) == 0) fail("zero-divisor-input", "inverse of 0 in Q");
    return 1 / a;
  }
  Elem div(const Elem& a, const Elem& b) const { return a / inv_guard(b); }

  Elem from_int(long long v) const { return Elem(static_cast<long>(v)); }
  Elem from_fraction(long long num, long long den) const {
    if (den == 0) fail("coefficient-not-in-field", "zero denominator");
    Elem q(static_cast<long>(num), static_cast<long>(den));
    q.canonicalize();
    return q;
  }

  std::string to_string(const Elem& a) const { return a.get_str(); }
  bool print_negative(const Elem& a) const { return sgn(a) < 0; }
  std::string to_string_abs(const Elem& a) const { return Elem(abs(a)).get_str(); }

  bool operator==(const QField&) const { return true; }
  bool operator!=(const QField&) const { return false; }

  std::string name() const { return "Q"; }

private:
  const Elem& inv_guard(const Elem& b) const {
    if (sgn(b) == 0) fail("zero-divisor-input", "division by 0 in Q");
    return b;
  }
};

}  // namespace cox
