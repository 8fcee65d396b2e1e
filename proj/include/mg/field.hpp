#pragma once

// Coefficient fields for the sheaf-theoretic layer: the rationals, and
// prime fields F_p with p odd (GKM theory needs 2 invertible, so
// characteristic 2 is rejected outright).

#include "mg/rational.hpp"

#include <cstdint>
#include <stdexcept>

namespace mg {

struct RationalField {
  using Elem = Rat;
  Elem zero() const { return Rat(0); }
  Elem one() const { return Rat(1); }
  Elem from_int(long n) const { return Rat(n); }
  Elem from_rat(const Rat& r) const { return r; }
  Elem add(const Elem& a, const Elem& b) const { return a + b; }
  Elem sub(const Elem& a, const Elem& b) const { return a - b; }
  Elem mul(const Elem& a, const Elem& b) const { return a * b; }
  Elem neg(const Elem& a) const { return -a; }
  Elem div(const Elem& a, const Elem& b) const {
    if (b == 0) throw std::domain_error("division by zero");
    return a / b;
  }
  Elem inv(const Elem& a) const { return div(one(), a); }
  bool is_zero(const Elem& a) const { return a == 0; }
  bool eq(const Elem& a, const Elem& b) const { return a == b; }
  long characteristic() const { return 0; }
};

struct PrimeField {
  long p;

  explicit PrimeField(long p_) : p(p_) {
    if (p < 3) throw std::invalid_argument("PrimeField: need an odd prime (characteristic 2 is not GKM-admissible)");
    for (long d = 2; d * d <= p; ++d)
      if (p % d == 0) throw std::invalid_argument("PrimeField: modulus is not prime");
  }

  using Elem = long;
  Elem norm(long v) const {
    v %= p;
    if (v < 0) v += p;
    return v;
  }
  Elem zero() const { return 0; }
  Elem one() const { return 1; }
  Elem from_int(long n) const { return norm(n); }
  Elem from_rat(const Rat& r) const {
    long num = norm(to_long(numerator(r) % p));
    long den = norm(to_long(denominator(r) % p));
    return mul(num, inv(den));
  }
  Elem add(Elem a, Elem b) const { return (a + b) % p; }
  Elem sub(Elem a, Elem b) const { return norm(a - b); }
  Elem mul(Elem a, Elem b) const { return (a * b) % p; }
  Elem neg(Elem a) const { return norm(-a); }
  Elem inv(Elem a) const {
    if (a == 0) throw std::domain_error("division by zero");
    // extended Euclid
    long t = 0, newt = 1, r = p, newr = a;
    while (newr != 0) {
      long q = r / newr;
      long tmp = t - q * newt; t = newt; newt = tmp;
      tmp = r - q * newr; r = newr; newr = tmp;
    }
    return norm(t);
  }
  Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }
  bool is_zero(Elem a) const { return a == 0; }
  bool eq(Elem a, Elem b) const { return a == b; }
  long characteristic() const { return p; }
};

}  // namespace mg
