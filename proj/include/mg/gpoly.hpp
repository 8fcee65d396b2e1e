#pragma once

// Multivariate polynomials over an abstract field, graded by total
// degree.  Used for stalks and section spaces: a symmetric algebra on
// the affinized coroot lattice, with variables x_0..x_{r-1} (simple
// coroots) and x_r (the central element c).  The module grading doubles
// the polynomial degree: every variable sits in module degree 2.

#include "mg/linalg.hpp"

#include <map>
#include <vector>

namespace mg {

using Mono = std::vector<int>;  // exponent vector

inline int mono_degree(const Mono& m) {
  int d = 0;
  for (int e : m) d += e;
  return d;
}

// All monomials of the given total degree, in a fixed (lexicographic)
// order shared by every coordinate computation.
inline const std::vector<Mono>& monomials_of_degree(int nvars, int deg) {
  static std::map<std::pair<int, int>, std::vector<Mono>> cache;
  auto key = std::make_pair(nvars, deg);
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;
  std::vector<Mono> out;
  if (deg >= 0 && nvars > 0) {
    Mono m(nvars, 0);
    // enumerate exponent vectors summing to deg, lexicographically
    auto rec = [&](auto&& self, int var, int rem) -> void {
      if (var == nvars - 1) {
        m[var] = rem;
        out.push_back(m);
        return;
      }
      for (int e = rem; e >= 0; --e) {
        m[var] = e;
        self(self, var + 1, rem - e);
      }
      m[var] = 0;
    };
    rec(rec, 0, deg);
  }
  return cache.emplace(key, std::move(out)).first->second;
}

inline int monomial_index(int nvars, const Mono& m) {
  const auto& all = monomials_of_degree(nvars, mono_degree(m));
  for (std::size_t i = 0; i < all.size(); ++i)
    if (all[i] == m) return static_cast<int>(i);
  return -1;
}

template <class K>
struct Poly {
  std::map<Mono, typename K::Elem> terms;  // nonzero terms only

  bool is_zero() const { return terms.empty(); }
  int degree() const {  // max total degree, -1 for zero
    int d = -1;
    for (const auto& [m, c] : terms) d = std::max(d, mono_degree(m));
    return d;
  }
};

template <class K>
void poly_add_term(const K& k, Poly<K>& p, const Mono& m, const typename K::Elem& c) {
  if (k.is_zero(c)) return;
  auto it = p.terms.find(m);
  if (it == p.terms.end()) {
    p.terms.emplace(m, c);
  } else {
    it->second = k.add(it->second, c);
    if (k.is_zero(it->second)) p.terms.erase(it);
  }
}

template <class K>
Poly<K> poly_zero(const K&) { return Poly<K>{}; }

template <class K>
Poly<K> poly_const(const K& k, int nvars, const typename K::Elem& c) {
  Poly<K> p;
  poly_add_term(k, p, Mono(nvars, 0), c);
  return p;
}

template <class K>
Poly<K> poly_var(const K& k, int nvars, int v) {
  Poly<K> p;
  Mono m(nvars, 0);
  m[v] = 1;
  poly_add_term(k, p, m, k.one());
  return p;
}

// Degree-1 polynomial from a coefficient vector over the variables.
template <class K>
Poly<K> poly_linear(const K& k, const std::vector<typename K::Elem>& coeffs) {
  Poly<K> p;
  int nvars = static_cast<int>(coeffs.size());
  for (int v = 0; v < nvars; ++v) {
    Mono m(nvars, 0);
    m[v] = 1;
    poly_add_term(k, p, m, coeffs[v]);
  }
  return p;
}

template <class K>
Poly<K> poly_add(const K& k, const Poly<K>& a, const Poly<K>& b) {
  Poly<K> out = a;
  for (const auto& [m, c] : b.terms) poly_add_term(k, out, m, c);
  return out;
}

template <class K>
Poly<K> poly_neg(const K& k, const Poly<K>& a) {
  Poly<K> out;
  for (const auto& [m, c] : a.terms) out.terms.emplace(m, k.neg(c));
  return out;
}

template <class K>
Poly<K> poly_sub(const K& k, const Poly<K>& a, const Poly<K>& b) {
  return poly_add(k, a, poly_neg(k, b));
}

template <class K>
Poly<K> poly_scale(const K& k, const Poly<K>& a, const typename K::Elem& s) {
  Poly<K> out;
  if (k.is_zero(s)) return out;
  for (const auto& [m, c] : a.terms) {
    auto cs = k.mul(c, s);
    if (!k.is_zero(cs)) out.terms.emplace(m, cs);
  }
  return out;
}

template <class K>
Poly<K> poly_mul(const K& k, const Poly<K>& a, const Poly<K>& b) {
  Poly<K> out;
  for (const auto& [ma, ca] : a.terms)
    for (const auto& [mb, cb] : b.terms) {
      Mono m(ma.size());
      for (std::size_t i = 0; i < m.size(); ++i) m[i] = ma[i] + mb[i];
      poly_add_term(k, out, m, k.mul(ca, cb));
    }
  return out;
}

template <class K>
Poly<K> poly_pow(const K& k, const Poly<K>& a, int e) {
  Poly<K> out = poly_const(k, a.terms.empty() ? 0 : static_cast<int>(a.terms.begin()->first.size()), k.one());
  for (int i = 0; i < e; ++i) out = poly_mul(k, out, a);
  return out;
}

template <class K>
bool poly_eq(const K& k, const Poly<K>& a, const Poly<K>& b) {
  return poly_sub(k, a, b).is_zero();
}

// Substitute variable v by the given polynomial (same variable count).
template <class K>
Poly<K> poly_subst_var(const K& k, const Poly<K>& p, int v, const Poly<K>& repl) {
  Poly<K> out;
  for (const auto& [m, c] : p.terms) {
    Mono base = m;
    int e = base[v];
    base[v] = 0;
    Poly<K> term;
    poly_add_term(k, term, base, c);
    for (int i = 0; i < e; ++i) term = poly_mul(k, term, repl);
    out = poly_add(k, out, term);
  }
  return out;
}

// Homogeneous component of degree d.
template <class K>
Poly<K> poly_component(const K&, const Poly<K>& p, int d) {
  Poly<K> out;
  for (const auto& [m, c] : p.terms)
    if (mono_degree(m) == d) out.terms.emplace(m, c);
  return out;
}

// Coordinates of a homogeneous polynomial of degree d over nvars.
template <class K>
Vec<K> poly_coords(const K& k, const Poly<K>& p, int nvars, int d) {
  const auto& monos = monomials_of_degree(nvars, d);
  Vec<K> out(monos.size(), k.zero());
  for (const auto& [m, c] : p.terms) {
    int idx = monomial_index(nvars, m);
    if (mono_degree(m) != d || idx < 0) continue;  // caller guarantees homogeneity
    out[idx] = c;
  }
  return out;
}

template <class K>
Poly<K> poly_from_coords(const K& k, const Vec<K>& coords, int nvars, int d) {
  const auto& monos = monomials_of_degree(nvars, d);
  Poly<K> p;
  for (std::size_t i = 0; i < coords.size(); ++i) poly_add_term(k, p, monos[i], coords[i]);
  return p;
}

// Exact division a / b; returns false if b does not divide a.
template <class K>
bool poly_divide(const K& k, const Poly<K>& a, const Poly<K>& b, Poly<K>& quot) {
  quot = Poly<K>{};
  if (b.is_zero()) return a.is_zero();
  Poly<K> rem = a;
  // leading term of b under the map ordering (largest key)
  auto lead = std::prev(b.terms.end());
  while (!rem.is_zero()) {
    auto rl = std::prev(rem.terms.end());
    Mono q(rl->first.size());
    for (std::size_t i = 0; i < q.size(); ++i) {
      q[i] = rl->first[i] - lead->first[i];
      if (q[i] < 0) return false;
    }
    auto coeff = k.div(rl->second, lead->second);
    Poly<K> qterm;
    poly_add_term(k, qterm, q, coeff);
    quot = poly_add(k, quot, qterm);
    rem = poly_sub(k, rem, poly_mul(k, qterm, b));
  }
  return true;
}

}  // namespace mg
