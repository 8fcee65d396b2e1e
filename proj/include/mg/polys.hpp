#pragma once

// Kazhdan-Lusztig polynomials: the classical recursion on a Weyl-group
// ball, the parabolic polynomials via the canonical basis of the
// quotient Hecke module, generic polynomials via stabilization under
// dominant translation, and graded-rank Laurent polynomials.

#include "mg/graphs.hpp"
#include "mg/weyl.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace mg {

// Polynomial in q with integer coefficients, trailing zeros stripped.
using QPoly = std::vector<long>;

inline void qp_trim(QPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

inline QPoly qp_one() { return {1}; }

inline bool qp_is_zero(const QPoly& p) { return p.empty(); }

inline long qp_coeff(const QPoly& p, long k) {
  if (k < 0 || k >= static_cast<long>(p.size())) return 0;
  return p[k];
}

inline long qp_degree(const QPoly& p) { return static_cast<long>(p.size()) - 1; }

// a += c * q^k * b
inline void qp_add_scaled(QPoly& a, const QPoly& b, long c, long k) {
  if (c == 0) return;
  if (a.size() < b.size() + k) a.resize(b.size() + k, 0);
  for (std::size_t i = 0; i < b.size(); ++i) a[i + k] += c * b[i];
  qp_trim(a);
}

inline std::string qp_to_string(const QPoly& p) {
  if (p.empty()) return "0";
  std::string out;
  for (std::size_t i = 0; i < p.size(); ++i) {
    long c = p[i];
    if (c == 0) continue;
    if (!out.empty()) out += c > 0 ? "+" : "";
    if (i == 0)
      out += std::to_string(c);
    else {
      if (c == -1)
        out += "-";
      else if (c != 1)
        out += std::to_string(c);
      out += "q";
      if (i > 1) out += "^" + std::to_string(i);
    }
  }
  return out.empty() ? "0" : out;
}

// Laurent polynomial in v (the graded Hecke parameter), exponent -> coefficient.
using LPoly = std::map<long, long>;

inline void lp_add_scaled(LPoly& a, const LPoly& b, long c, long shift) {
  if (c == 0) return;
  for (const auto& [e, x] : b) {
    long& slot = a[e + shift];
    slot += c * x;
    if (slot == 0) a.erase(e + shift);
  }
}

inline long lp_coeff(const LPoly& p, long e) {
  auto it = p.find(e);
  return it == p.end() ? 0 : it->second;
}

// ---------------------------------------------------------------------------
// Classical Kazhdan-Lusztig recursion, memoized per table.

class KLTable {
 public:
  KLTable(const FiniteRootSystem& rs, const WeylBall& ball) : rs_(rs), ball_(ball) {}

  const QPoly& p(const AffWeylElt& x, const AffWeylElt& y) {
    auto key = std::make_pair(x, y);
    auto it = memo_.find(key);
    if (it != memo_.end()) return it->second;
    if (length(rs_, y) > ball_.radius) throw std::invalid_argument("KLTable: ball too small for recursion");
    QPoly out;
    if (!bruhat_leq(ball_, x, y)) {
      // zero
    } else if (x == y) {
      out = qp_one();
    } else {
      // left descent s of y, v = s y
      int s = -1;
      for (int i = 0; i <= rs_.rank && s < 0; ++i)
        if (length(rs_, compose(simple_reflection(rs_, i), y)) < length(rs_, y)) s = i;
      AffWeylElt se = simple_reflection(rs_, s);
      AffWeylElt v = compose(se, y);
      AffWeylElt sx = compose(se, x);
      long c = length(rs_, sx) < length(rs_, x) ? 1 : 0;
      qp_add_scaled(out, p(sx, v), 1, 1 - c);
      qp_add_scaled(out, p(x, v), 1, c);
      long lv = length(rs_, v), ly = length(rs_, y);
      for (const auto& z : ball_.elems) {
        if (!bruhat_leq(ball_, x, z) || !bruhat_leq(ball_, z, v)) continue;
        if (length(rs_, compose(se, z)) >= length(rs_, z)) continue;
        long lz = length(rs_, z);
        if ((lv - lz) % 2 == 0) continue;
        long mu = qp_coeff(p(z, v), (lv - lz - 1) / 2);
        if (mu != 0) qp_add_scaled(out, p(x, z), -mu, (ly - lz) / 2);
      }
    }
    return memo_[key] = out;
  }

 private:
  const FiniteRootSystem& rs_;
  const WeylBall& ball_;
  std::map<std::pair<AffWeylElt, AffWeylElt>, QPoly> memo_;
};

inline QPoly kl_regular(const FiniteRootSystem& rs, const WeylBall& ball, const AffWeylElt& x,
                        const AffWeylElt& y) {
  KLTable t(rs, ball);
  return t.p(x, y);
}

// ---------------------------------------------------------------------------
// Parabolic polynomials via the canonical basis of the quotient module
// over the minimal representatives of W_J \ W (no left descent in J).
// Wall rule: m_x Hbar_s = (v + v^{-1}) m_x when xs leaves the minimal
// representatives, so that the polynomials agree with regular KL values
// through the lifting identity P^J_{x,w} = P_{ux, w_J w}, u in W_J.

class ParabolicKLTable {
 public:
  ParabolicKLTable(const FiniteRootSystem& rs, const std::vector<int>& J) : rs_(rs) {
    for (int j : J) {
      if (j < 1 || j > rs.rank) throw std::invalid_argument("ParabolicKLTable: J must consist of finite generators");
      jgens_.push_back(simple_reflection(rs, j));
    }
  }

  bool min_rep(const AffWeylElt& x) const {
    long lx = length(rs_, x);
    for (const auto& sj : jgens_)
      if (length(rs_, compose(sj, x)) < lx) return false;
    return true;
  }

  // Coordinates of the canonical basis element for w on the standard basis.
  const std::map<AffWeylElt, LPoly>& canonical(const AffWeylElt& w) {
    auto it = canon_.find(w);
    if (it != canon_.end()) return it->second;
    if (!min_rep(w)) throw std::invalid_argument("ParabolicKLTable: not a minimal representative");
    std::map<AffWeylElt, LPoly> coords;
    if (is_aff_identity(w)) {
      coords[w] = {{0, 1}};
      return canon_[w] = coords;
    }
    auto word = reduced_word(rs_, w);
    int s = word.back();
    AffWeylElt prev = compose(w, simple_reflection(rs_, s));
    coords = multiply(canonical(prev), s);
    // subtract lower canonical elements to make all off-top entries lie in vZ[v]
    std::vector<AffWeylElt> keys;
    for (const auto& [x, p] : coords)
      if (!(x == w)) keys.push_back(x);
    std::sort(keys.begin(), keys.end(), [&](const AffWeylElt& a, const AffWeylElt& b) {
      long la = length(rs_, a), lb = length(rs_, b);
      return la != lb ? la > lb : a < b;
    });
    for (const auto& x : keys) {
      long mu = lp_coeff(coords[x], 0);
      if (mu == 0) continue;
      for (const auto& [z, p] : canonical(x)) {
        lp_add_scaled(coords[z], p, -mu, 0);
        if (coords[z].empty()) coords.erase(z);
      }
    }
    // self-checks of the canonical-basis normalization
    if (!(coords.count(w) && coords[w] == LPoly{{0, 1}}))
      throw std::logic_error("ParabolicKLTable: top coefficient is not 1");
    for (const auto& [x, p] : coords)
      if (!(x == w))
        for (const auto& [e, cc] : p)
          if (e <= 0) throw std::logic_error("ParabolicKLTable: lower coefficient not in vZ[v]");
    return canon_[w] = coords;
  }

 private:
  std::map<AffWeylElt, LPoly> multiply(const std::map<AffWeylElt, LPoly>& coords, int s) {
    std::map<AffWeylElt, LPoly> out;
    AffWeylElt se = simple_reflection(rs_, s);
    for (const auto& [x, p] : coords) {
      AffWeylElt xs = compose(x, se);
      if (length(rs_, xs) > length(rs_, x)) {
        if (min_rep(xs)) {
          lp_add_scaled(out[xs], p, 1, 0);
          lp_add_scaled(out[x], p, 1, 1);
        } else {
          lp_add_scaled(out[x], p, 1, 1);
          lp_add_scaled(out[x], p, 1, -1);
        }
      } else {
        lp_add_scaled(out[xs], p, 1, 0);
        lp_add_scaled(out[x], p, 1, -1);
      }
    }
    for (auto it = out.begin(); it != out.end();)
      it = it->second.empty() ? out.erase(it) : std::next(it);
    return out;
  }

  const FiniteRootSystem& rs_;
  std::vector<AffWeylElt> jgens_;
  std::map<AffWeylElt, std::map<AffWeylElt, LPoly>> canon_;
};

// P^J_{A,B} extracted from the canonical-basis coordinate
// m_{A,B} = v^{l(B)-l(A)} P(v^{-2}).
inline QPoly kl_parabolic(const FiniteRootSystem& rs, const WeylBall& ball, const std::vector<int>& J,
                          const AffWeylElt& A, const AffWeylElt& B) {
  if (length(rs, B) > ball.radius) throw std::invalid_argument("kl_parabolic: ball too small");
  ParabolicKLTable t(rs, J);
  if (!t.min_rep(A) || !t.min_rep(B)) throw std::invalid_argument("kl_parabolic: not minimal representatives");
  if (!bruhat_leq(ball, A, B)) return {};
  const auto& coords = t.canonical(B);
  auto it = coords.find(A);
  if (it == coords.end()) return {};
  long gap = length(rs, B) - length(rs, A);
  QPoly out;
  for (const auto& [e, c] : it->second) {
    long twok = gap - e;
    if (twok < 0 || twok % 2 != 0) throw std::logic_error("kl_parabolic: exponent outside the KL range");
    qp_add_scaled(out, {c}, 1, twok / 2);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Generic polynomials: the stabilized parabolic polynomial of the pair
// (A, B) of dominant alcoves under translation by multiples of rhov.
// Stabilization requires both two consecutive equal values and the
// find_m0 certificate for the interval.

struct GenericPolyResult {
  std::optional<QPoly> poly;
  long witness_m = -1;
  FindM0Result cert;
};

inline GenericPolyResult generic_poly(const FiniteRootSystem& rs, const AffWeylElt& A, const AffWeylElt& B,
                                      long m_max) {
  GenericPolyResult out;
  if (!alcove_dominant(rs, A) || !alcove_dominant(rs, B))
    throw std::invalid_argument("generic_poly: alcoves must be dominant");
  out.cert = find_m0(rs, A, B, m_max);
  if (!out.cert.m0) return out;
  std::vector<int> J;
  for (int i = 1; i <= rs.rank; ++i) J.push_back(i);
  std::optional<QPoly> prev;
  for (long m = *out.cert.m0; m <= m_max; ++m) {
    WeightVec mu = wv_scale(rs.rho_coweight, Rat(m));
    AffWeylElt Am = translate_alcove(rs, A, mu);
    AffWeylElt Bm = translate_alcove(rs, B, mu);
    WeylBall ball = build_weyl_ball(rs, length(rs, Bm));
    QPoly pm = kl_parabolic(rs, ball, J, Am, Bm);
    if (prev && *prev == pm) {
      out.poly = pm;
      out.witness_m = m - 1;
      return out;
    }
    prev = pm;
  }
  return out;
}

// ---------------------------------------------------------------------------
// Graded ranks: rk(+S{l_1} ... +S{l_n}) = sum q^{-l_i/2} with the
// doubled grading (one power of q per grading shift of 2).

using GradedRank = std::map<long, long>;  // q-exponent -> multiplicity

inline GradedRank graded_rank(const std::vector<long>& shifts) {
  GradedRank out;
  for (long l : shifts) {
    if (l % 2 != 0) throw std::invalid_argument("graded_rank: shifts must be even in the doubled grading");
    ++out[-l / 2];
  }
  return out;
}

inline GradedRank gr_from_qpoly(const QPoly& p) {
  GradedRank out;
  for (std::size_t i = 0; i < p.size(); ++i)
    if (p[i] != 0) out[static_cast<long>(i)] = p[i];
  return out;
}

inline std::string gr_to_string(const GradedRank& g) {
  std::string out;
  for (const auto& [e, c] : g) {
    if (c == 0) continue;
    if (!out.empty() && c > 0) out += "+";
    if (e == 0) {
      out += std::to_string(c);
      continue;
    }
    if (c == -1)
      out += "-";
    else if (c != 1)
      out += std::to_string(c);
    out += "q";
    if (e != 1) out += "^" + std::to_string(e);
  }
  return out.empty() ? "0" : out;
}

}  // namespace mg
