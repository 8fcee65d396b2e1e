#pragma once

// Exact rational scalars used throughout the library.  All geometry
// (alcove points, bilinear forms, labels) is done over Q; no floating
// point anywhere.

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace mg {

using BigInt = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline Rat make_rat(long num, long den = 1) {
  if (den == 0) throw std::invalid_argument("make_rat: zero denominator");
  return Rat(BigInt(num), BigInt(den));
}

// Canonical form "p" or "p/q" with q > 1, used by the JSON codec.
inline std::string rat_to_string(const Rat& r) {
  BigInt num = numerator(r);
  BigInt den = denominator(r);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

inline Rat rat_from_string(const std::string& s) {
  auto slash = s.find('/');
  if (slash == std::string::npos) return Rat(BigInt(s));
  BigInt num(s.substr(0, slash));
  BigInt den(s.substr(slash + 1));
  if (den == 0) throw std::invalid_argument("rat_from_string: zero denominator");
  return Rat(num, den);
}

// Largest integer <= r.
inline BigInt rat_floor(const Rat& r) {
  BigInt q = numerator(r) / denominator(r);
  if (q * denominator(r) > numerator(r)) --q;  // fix truncation toward zero
  return q;
}

inline BigInt rat_ceil(const Rat& r) { return -rat_floor(-r); }

inline bool is_integer(const Rat& r) { return denominator(r) == 1; }

inline long to_long(const BigInt& b) { return static_cast<long>(b); }

inline int sign_of(const Rat& r) {
  if (r > 0) return 1;
  if (r < 0) return -1;
  return 0;
}

}  // namespace mg
