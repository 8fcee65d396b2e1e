#pragma once

// Finite root systems of types A1 and A2 (simply laced, so coroots are
// identified with roots via the normalization (alpha,alpha) = 2), plus
// affine (real) roots alpha + n*delta and their coroots in the
// affinized lattice Qv + Z c.  Weight-space vectors are written in
// simple-root coordinates over exact rationals.

#include "mg/rational.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace mg {

using WeightVec = std::vector<Rat>;  // simple-root coordinates

inline WeightVec wv_add(const WeightVec& a, const WeightVec& b) {
  WeightVec out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
  return out;
}

inline WeightVec wv_sub(const WeightVec& a, const WeightVec& b) {
  WeightVec out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
  return out;
}

inline WeightVec wv_scale(const WeightVec& a, const Rat& s) {
  WeightVec out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] * s;
  return out;
}

inline bool wv_is_zero(const WeightVec& a) {
  for (const auto& x : a)
    if (x != 0) return false;
  return true;
}

// A real affine root alpha + n*delta with alpha a finite root.
struct AffineRoot {
  WeightVec finite;
  long level = 0;  // coefficient of delta
};

// Element of the affinized coroot lattice Qv + Z c (over Q for
// intermediate arithmetic); this is the edge-label type.
struct AffineCorootVec {
  WeightVec finite;  // simple-coroot coordinates (= simple-root, simply laced)
  Rat c;

  bool operator==(const AffineCorootVec& o) const { return finite == o.finite && c == o.c; }
};

inline AffineCorootVec acv_add(const AffineCorootVec& a, const AffineCorootVec& b) {
  return {wv_add(a.finite, b.finite), a.c + b.c};
}

inline AffineCorootVec acv_scale(const AffineCorootVec& a, const Rat& s) {
  return {wv_scale(a.finite, s), a.c * s};
}

inline AffineCorootVec acv_neg(const AffineCorootVec& a) { return acv_scale(a, Rat(-1)); }

struct FiniteRootSystem {
  std::string name;  // "A1" or "A2"
  int rank = 0;
  std::vector<std::vector<Rat>> gram;        // (alpha_i, alpha_j)
  std::vector<WeightVec> simple_roots;       // unit coordinate vectors
  std::vector<WeightVec> positive_roots;
  WeightVec highest_root;
  std::vector<std::vector<std::vector<long>>> simple_refl;  // matrices on root basis, one per simple
  std::vector<std::vector<long>> highest_refl; // matrix of s_theta
  std::vector<WeightVec> fund_coweights;       // fundamental coweights
  std::vector<WeightVec> omega_reps;           // coset representatives of Xv/Qv, first is 0
  WeightVec rho_coweight;                      // half sum of positive coroots
  WeightVec interior_point;                    // interior point of the fundamental alcove
  std::vector<WeightVec> alcove_vertices;      // vertices of the fundamental alcove
  std::vector<WeightVec> wall_points;          // facet centroid of the s_i wall, i = 0..rank

  // Bilinear form.
  Rat form(const WeightVec& a, const WeightVec& b) const {
    Rat out = 0;
    for (int i = 0; i < rank; ++i)
      for (int j = 0; j < rank; ++j) out += a[i] * gram[i][j] * b[j];
    return out;
  }

  // <lambda, alphav> for a finite root alpha; simply laced so this is (lambda, alpha).
  Rat pairing(const WeightVec& lambda, const WeightVec& alpha) const { return form(lambda, alpha); }
};

inline std::vector<std::vector<long>> reflection_matrix(const FiniteRootSystem& rs, const WeightVec& alpha) {
  // s_alpha(e_j) = e_j - <e_j, alphav> alpha on the root basis
  std::vector<std::vector<long>> m(rs.rank, std::vector<long>(rs.rank, 0));
  for (int j = 0; j < rs.rank; ++j) {
    WeightVec e(rs.rank, Rat(0));
    e[j] = 1;
    Rat pair = rs.pairing(e, alpha);
    WeightVec img = wv_sub(e, wv_scale(alpha, pair));
    for (int i = 0; i < rs.rank; ++i) {
      if (!is_integer(img[i])) throw std::logic_error("reflection matrix not integral");
      m[i][j] = to_long(numerator(img[i]));
    }
  }
  return m;
}

inline FiniteRootSystem build_root_system(const std::string& name) {
  FiniteRootSystem rs;
  rs.name = name;
  if (name == "A1") {
    rs.rank = 1;
    rs.gram = {{Rat(2)}};
    rs.simple_roots = {{Rat(1)}};
    rs.positive_roots = {{Rat(1)}};
    rs.highest_root = {Rat(1)};
    rs.fund_coweights = {{Rat(1, 2)}};
    rs.omega_reps = {{Rat(0)}, {Rat(1, 2)}};
    rs.rho_coweight = {Rat(1, 2)};
    rs.alcove_vertices = {{Rat(0)}, {Rat(1, 2)}};
    rs.interior_point = {Rat(1, 4)};
    // walls: s_1 wall is the point 0, s_0 wall is the point alpha/2
    rs.wall_points = {{Rat(1, 2)}, {Rat(0)}};
  } else if (name == "A2") {
    rs.rank = 2;
    rs.gram = {{Rat(2), Rat(-1)}, {Rat(-1), Rat(2)}};
    rs.simple_roots = {{Rat(1), Rat(0)}, {Rat(0), Rat(1)}};
    rs.positive_roots = {{Rat(1), Rat(0)}, {Rat(0), Rat(1)}, {Rat(1), Rat(1)}};
    rs.highest_root = {Rat(1), Rat(1)};
    rs.fund_coweights = {{Rat(2, 3), Rat(1, 3)}, {Rat(1, 3), Rat(2, 3)}};
    rs.omega_reps = {{Rat(0), Rat(0)}, {Rat(2, 3), Rat(1, 3)}, {Rat(1, 3), Rat(2, 3)}};
    rs.rho_coweight = {Rat(1), Rat(1)};
    rs.alcove_vertices = {{Rat(0), Rat(0)}, rs.fund_coweights[0], rs.fund_coweights[1]};
    // centroid of the simplex {0, w1, w2}
    rs.interior_point = {Rat(1, 3), Rat(1, 3)};
    // wall i = fixed hyperplane of s_i: s_0 wall = segment [w1,w2],
    // s_1 wall = [0,w2], s_2 wall = [0,w1]; store facet centroids.
    rs.wall_points = {wv_scale(wv_add(rs.fund_coweights[0], rs.fund_coweights[1]), Rat(1, 2)),
                      wv_scale(rs.fund_coweights[1], Rat(1, 2)),
                      wv_scale(rs.fund_coweights[0], Rat(1, 2))};
  } else {
    throw std::invalid_argument("build_root_system: unsupported type " + name);
  }
  for (const auto& alpha : rs.simple_roots) rs.simple_refl.push_back(reflection_matrix(rs, alpha));
  rs.highest_refl = reflection_matrix(rs, rs.highest_root);
  return rs;
}

inline bool finite_root_positive(const FiniteRootSystem& rs, const WeightVec& alpha) {
  for (int i = 0; i < rs.rank; ++i) {
    if (alpha[i] > 0) return true;
    if (alpha[i] < 0) return false;
  }
  return false;
}

inline bool is_finite_root(const FiniteRootSystem& rs, const WeightVec& alpha) {
  for (const auto& r : rs.positive_roots)
    if (alpha == r || alpha == wv_scale(r, Rat(-1))) return true;
  return false;
}

inline bool affine_root_positive(const FiniteRootSystem& rs, const AffineRoot& a) {
  if (a.level != 0) return a.level > 0;
  return finite_root_positive(rs, a.finite);
}

// Coroot of alpha + n delta, namely alphav + (2n/(alpha,alpha)) c.
inline AffineCorootVec affine_coroot(const FiniteRootSystem& rs, const AffineRoot& a) {
  Rat len = rs.form(a.finite, a.finite);
  return {wv_scale(a.finite, Rat(2) / len), Rat(2 * a.level) / len};
}

// s_{alpha+n delta}(lambda) = s_alpha(lambda) - n alphav.
inline WeightVec affine_reflect(const FiniteRootSystem& rs, const AffineRoot& a, const WeightVec& lambda) {
  Rat len = rs.form(a.finite, a.finite);
  WeightVec coroot = wv_scale(a.finite, Rat(2) / len);
  WeightVec out = wv_sub(lambda, wv_scale(a.finite, rs.pairing(lambda, coroot)));
  return wv_sub(out, wv_scale(coroot, Rat(a.level)));
}

// Is lambda in the coroot lattice Qv (integer simple-root coordinates)?
inline bool in_coroot_lattice(const FiniteRootSystem& rs, const WeightVec& v) {
  for (int i = 0; i < rs.rank; ++i)
    if (!is_integer(v[i])) return false;
  return true;
}

// Is lambda in the coweight lattice Xv, i.e. (lambda, alpha_i) integral?
inline bool in_coweight_lattice(const FiniteRootSystem& rs, const WeightVec& v) {
  for (const auto& alpha : rs.simple_roots)
    if (!is_integer(rs.pairing(v, alpha))) return false;
  return true;
}

// Representative of v + Qv among the stored Omega representatives.
inline WeightVec omega_class(const FiniteRootSystem& rs, const WeightVec& v) {
  for (const auto& rep : rs.omega_reps)
    if (in_coroot_lattice(rs, wv_sub(v, rep))) return rep;
  throw std::invalid_argument("omega_class: vector is not in the coweight lattice");
}

}  // namespace mg
