#pragma once

// The affine Weyl group W_aff = W x Qv in the semidirect-product model:
// an element is T_lambda * w acting by mu |-> w(mu) + lambda.  Both the
// translation part (coroot-lattice coordinates) and the finite part
// (an integer matrix on the root basis) are exact.
//
// Alcoves are identified with group elements via x <-> x(A+), where A+
// is the fundamental alcove.  Length is the number of reflection
// hyperplanes separating A+ from x(A+); Bruhat order is computed by
// cover closure inside a finite ball; the generic order is generated by
// A < As whenever A lies in the negative half-space of the shared wall.

#include "mg/field.hpp"
#include "mg/linalg.hpp"
#include "mg/roots.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <vector>

namespace mg {

using FinMat = std::vector<std::vector<long>>;  // integer matrix on root basis

inline FinMat fin_identity(int rank) {
  FinMat m(rank, std::vector<long>(rank, 0));
  for (int i = 0; i < rank; ++i) m[i][i] = 1;
  return m;
}

inline FinMat fin_mul(const FinMat& a, const FinMat& b) {
  int n = static_cast<int>(a.size());
  FinMat out(n, std::vector<long>(n, 0));
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n; ++k)
      for (int j = 0; j < n; ++j) out[i][j] += a[i][k] * b[k][j];
  return out;
}

inline FinMat fin_inverse(const FinMat& a) {
  int n = static_cast<int>(a.size());
  if (n == 1) {
    if (a[0][0] != 1 && a[0][0] != -1) throw std::logic_error("fin_inverse: not unimodular");
    return a;
  }
  if (n == 2) {
    long det = a[0][0] * a[1][1] - a[0][1] * a[1][0];
    if (det != 1 && det != -1) throw std::logic_error("fin_inverse: not unimodular");
    FinMat out = {{a[1][1] / det, -a[0][1] / det}, {-a[1][0] / det, a[0][0] / det}};
    return out;
  }
  throw std::logic_error("fin_inverse: unsupported rank");
}

inline std::vector<long> fin_apply(const FinMat& m, const std::vector<long>& v) {
  int n = static_cast<int>(m.size());
  std::vector<long> out(n, 0);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) out[i] += m[i][j] * v[j];
  return out;
}

inline WeightVec fin_apply_rat(const FinMat& m, const WeightVec& v) {
  int n = static_cast<int>(m.size());
  WeightVec out(n, Rat(0));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) out[i] += Rat(m[i][j]) * v[j];
  return out;
}

struct AffWeylElt {
  std::vector<long> tr;  // translation lambda in coroot-lattice coordinates
  FinMat mat;            // finite part w

  bool operator==(const AffWeylElt& o) const { return tr == o.tr && mat == o.mat; }
  bool operator<(const AffWeylElt& o) const {
    if (tr != o.tr) return tr < o.tr;
    return mat < o.mat;
  }
};

inline AffWeylElt aff_identity(int rank) {
  return {std::vector<long>(rank, 0), fin_identity(rank)};
}

inline bool is_aff_identity(const AffWeylElt& x) {
  int rank = static_cast<int>(x.tr.size());
  return x == aff_identity(rank);
}

// (T_a u)(T_b v) = T_{a + u(b)} uv
inline AffWeylElt compose(const AffWeylElt& a, const AffWeylElt& b) {
  std::vector<long> tr = fin_apply(a.mat, b.tr);
  for (std::size_t i = 0; i < tr.size(); ++i) tr[i] += a.tr[i];
  return {tr, fin_mul(a.mat, b.mat)};
}

inline AffWeylElt inverse(const AffWeylElt& x) {
  FinMat w = fin_inverse(x.mat);
  std::vector<long> tr = fin_apply(w, x.tr);
  for (auto& t : tr) t = -t;
  return {tr, w};
}

inline WeightVec apply_affine(const AffWeylElt& x, const WeightVec& v) {
  WeightVec out = fin_apply_rat(x.mat, v);
  for (std::size_t i = 0; i < out.size(); ++i) out[i] += Rat(x.tr[i]);
  return out;
}

inline AffWeylElt translation_elt(const std::vector<long>& lambda, int rank) {
  return {lambda, fin_identity(rank)};
}

inline bool is_translation(const AffWeylElt& x) {
  return x.mat == fin_identity(static_cast<int>(x.tr.size()));
}

// Generators: index 0 is the affine reflection s_0 = T_{thetav} s_theta,
// indices 1..rank are the finite simple reflections.
inline AffWeylElt simple_reflection(const FiniteRootSystem& rs, int i) {
  if (i == 0) {
    std::vector<long> tr(rs.rank);
    for (int j = 0; j < rs.rank; ++j) tr[j] = to_long(numerator(rs.highest_root[j]));
    return {tr, rs.highest_refl};
  }
  return {std::vector<long>(rs.rank, 0), rs.simple_refl[i - 1]};
}

// s_{alpha + n delta} as a group element, T_{-n alphav} s_alpha.
inline AffWeylElt reflection_elt(const FiniteRootSystem& rs, const AffineRoot& a) {
  FinMat m = reflection_matrix(rs, a.finite);
  Rat len = rs.form(a.finite, a.finite);
  WeightVec coroot = wv_scale(a.finite, Rat(2) / len);
  std::vector<long> tr(rs.rank);
  for (int j = 0; j < rs.rank; ++j) {
    Rat t = -Rat(a.level) * coroot[j];
    if (!is_integer(t)) throw std::logic_error("reflection_elt: non-integral translation");
    tr[j] = to_long(numerator(t));
  }
  return {tr, m};
}

// If x is an affine reflection, return its positive real root.
inline std::optional<AffineRoot> reflection_root(const FiniteRootSystem& rs, const AffWeylElt& x) {
  for (const auto& alpha : rs.positive_roots) {
    if (x.mat != reflection_matrix(rs, alpha)) continue;
    // x.tr must equal -n alphav
    Rat len = rs.form(alpha, alpha);
    WeightVec coroot = wv_scale(alpha, Rat(2) / len);
    std::optional<Rat> n;
    bool ok = true;
    for (int j = 0; j < rs.rank; ++j) {
      if (coroot[j] == 0) {
        if (x.tr[j] != 0) { ok = false; break; }
        continue;
      }
      Rat cand = -Rat(x.tr[j]) / coroot[j];
      if (n && *n != cand) { ok = false; break; }
      n = cand;
    }
    if (!ok || !n || !is_integer(*n)) continue;
    long lev = to_long(numerator(*n));
    AffineRoot root{alpha, lev};
    if (!affine_root_positive(rs, root)) root = {wv_scale(alpha, Rat(-1)), -lev};
    return root;
  }
  return std::nullopt;
}

// Number of integers strictly between two rationals.
inline long integers_strictly_between(const Rat& a, const Rat& b) {
  const Rat& lo = std::min(a, b);
  const Rat& hi = std::max(a, b);
  BigInt count = rat_ceil(hi) - rat_floor(lo) - 1;
  if (count < 0) count = 0;
  return to_long(count);
}

// Length = number of hyperplanes H_{alpha,n} separating A+ from x(A+).
inline long length(const FiniteRootSystem& rs, const AffWeylElt& x) {
  WeightVec p = rs.interior_point;
  WeightVec q = apply_affine(x, p);
  long total = 0;
  for (const auto& alpha : rs.positive_roots)
    total += integers_strictly_between(rs.pairing(p, alpha), rs.pairing(q, alpha));
  return total;
}

// Reduced word (generator indices, leftmost first) by right-descent peeling.
inline std::vector<int> reduced_word(const FiniteRootSystem& rs, AffWeylElt x) {
  std::vector<int> rev;
  long len = length(rs, x);
  while (len > 0) {
    bool found = false;
    for (int i = 0; i <= rs.rank; ++i) {
      AffWeylElt y = compose(x, simple_reflection(rs, i));
      long ly = length(rs, y);
      if (ly == len - 1) {
        rev.push_back(i);
        x = y;
        len = ly;
        found = true;
        break;
      }
    }
    if (!found) throw std::logic_error("reduced_word: no descent found");
  }
  std::reverse(rev.begin(), rev.end());
  return rev;
}

inline AffWeylElt from_word(const FiniteRootSystem& rs, const std::vector<int>& word) {
  AffWeylElt x = aff_identity(rs.rank);
  for (int i : word) x = compose(x, simple_reflection(rs, i));
  return x;
}

// ---------------------------------------------------------------------------
// Finite ball with Bruhat structure.

struct WeylBall {
  const FiniteRootSystem* rs = nullptr;
  long radius = 0;
  std::vector<AffWeylElt> elems;  // sorted by (length, element)
  std::map<AffWeylElt, int> index;
  std::vector<long> len;
  std::vector<std::vector<int>> cover_up;    // Bruhat covers x -> y, l(y) = l(x)+1
  std::vector<std::vector<int>> cover_down;
  std::vector<std::vector<bool>> leq;        // Bruhat reachability within the ball
};

inline WeylBall build_weyl_ball(const FiniteRootSystem& rs, long radius) {
  WeylBall b;
  b.rs = &rs;
  b.radius = radius;
  std::set<AffWeylElt> seen;
  std::vector<AffWeylElt> queue = {aff_identity(rs.rank)};
  seen.insert(queue[0]);
  for (std::size_t head = 0; head < queue.size(); ++head) {
    AffWeylElt x = queue[head];
    for (int i = 0; i <= rs.rank; ++i) {
      AffWeylElt y = compose(x, simple_reflection(rs, i));
      if (seen.count(y)) continue;
      if (length(rs, y) > radius) continue;
      seen.insert(y);
      queue.push_back(y);
    }
  }
  b.elems.assign(seen.begin(), seen.end());
  std::stable_sort(b.elems.begin(), b.elems.end(), [&](const AffWeylElt& u, const AffWeylElt& v) {
    long lu = length(rs, u), lv = length(rs, v);
    if (lu != lv) return lu < lv;
    return u < v;
  });
  int n = static_cast<int>(b.elems.size());
  b.len.resize(n);
  for (int i = 0; i < n; ++i) {
    b.index[b.elems[i]] = i;
    b.len[i] = length(rs, b.elems[i]);
  }
  b.cover_up.assign(n, {});
  b.cover_down.assign(n, {});
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (b.len[j] != b.len[i] + 1) continue;
      AffWeylElt t = compose(b.elems[j], inverse(b.elems[i]));
      if (reflection_root(rs, t)) {
        b.cover_up[i].push_back(j);
        b.cover_down[j].push_back(i);
      }
    }
  }
  b.leq.assign(n, std::vector<bool>(n, false));
  for (int i = 0; i < n; ++i) b.leq[i][i] = true;
  // propagate upward by length
  for (int j = 0; j < n; ++j)
    for (int d : b.cover_down[j])
      for (int i = 0; i < n; ++i)
        if (b.leq[i][d]) b.leq[i][j] = true;
  return b;
}

inline int ball_index(const WeylBall& b, const AffWeylElt& x) {
  auto it = b.index.find(x);
  if (it == b.index.end()) throw std::out_of_range("ball_index: element outside the ball");
  return it->second;
}

inline bool bruhat_leq(const WeylBall& b, const AffWeylElt& x, const AffWeylElt& y) {
  return b.leq[ball_index(b, x)][ball_index(b, y)];
}

// Independent oracle: the subword property along a fixed reduced word of y.
inline bool bruhat_leq_subword(const FiniteRootSystem& rs, const AffWeylElt& x, const AffWeylElt& y) {
  std::vector<int> wy = reduced_word(rs, y);
  std::set<AffWeylElt> reach = {aff_identity(rs.rank)};
  for (int s : wy) {
    std::set<AffWeylElt> next = reach;
    for (const auto& z : reach) next.insert(compose(z, simple_reflection(rs, s)));
    reach.swap(next);
  }
  return reach.count(x) > 0;
}

// ---------------------------------------------------------------------------
// Alcove geometry.

// Is q in the closure/interior of the fundamental alcove?
inline bool in_fundamental_alcove(const FiniteRootSystem& rs, const WeightVec& q, bool strict = true) {
  for (const auto& alpha : rs.simple_roots) {
    Rat v = rs.pairing(q, alpha);
    if (strict ? v <= 0 : v < 0) return false;
  }
  Rat h = rs.pairing(q, rs.highest_root);
  if (strict ? h >= 1 : h > 1) return false;
  return true;
}

// The unique x with q in x(A+); q must be interior to some alcove.
inline AffWeylElt locate_alcove(const FiniteRootSystem& rs, const WeightVec& q) {
  AffWeylElt x = aff_identity(rs.rank);
  for (int guard = 0; guard < 100000; ++guard) {
    WeightVec z = apply_affine(inverse(x), q);
    bool moved = false;
    for (int i = 1; i <= rs.rank; ++i) {
      if (rs.pairing(z, rs.simple_roots[i - 1]) < 0) {
        x = compose(x, simple_reflection(rs, i));
        moved = true;
        break;
      }
    }
    if (!moved && rs.pairing(z, rs.highest_root) > 1) {
      x = compose(x, simple_reflection(rs, 0));
      moved = true;
    }
    if (!moved) {
      if (!in_fundamental_alcove(rs, z)) throw std::invalid_argument("locate_alcove: point lies on a wall");
      return x;
    }
  }
  throw std::logic_error("locate_alcove: did not converge");
}

inline WeightVec alcove_point(const FiniteRootSystem& rs, const AffWeylElt& x) {
  return apply_affine(x, rs.interior_point);
}

// Centroid (vertex average) of the alcove x(A+).
inline WeightVec alcove_centroid(const FiniteRootSystem& rs, const AffWeylElt& x) {
  WeightVec sum(rs.rank, Rat(0));
  for (const auto& v : rs.alcove_vertices) sum = wv_add(sum, apply_affine(x, v));
  return wv_scale(sum, Rat(1, static_cast<long>(rs.alcove_vertices.size())));
}

// Is the alcove x(A+) dominant (inside the fundamental chamber)?
inline bool alcove_dominant(const FiniteRootSystem& rs, const AffWeylElt& x) {
  WeightVec p = alcove_point(rs, x);
  for (const auto& alpha : rs.simple_roots)
    if (rs.pairing(p, alpha) < 0) return false;
  return true;
}

// The alcove x(A+) + mu for mu in the coweight lattice, as a group element.
inline AffWeylElt translate_alcove(const FiniteRootSystem& rs, const AffWeylElt& x, const WeightVec& mu) {
  if (!in_coweight_lattice(rs, mu))
    throw std::invalid_argument("translate_alcove: mu is not in the coweight lattice");
  return locate_alcove(rs, wv_add(alcove_point(rs, x), mu));
}

// The unique wall (as a positive root and level) between two adjacent alcoves.
inline AffineRoot wall_between(const FiniteRootSystem& rs, const AffWeylElt& x, const AffWeylElt& y) {
  WeightVec p = alcove_point(rs, x), q = alcove_point(rs, y);
  for (const auto& alpha : rs.positive_roots) {
    Rat a = rs.pairing(p, alpha), b = rs.pairing(q, alpha);
    Rat lo = std::min(a, b), hi = std::max(a, b);
    BigInt f = rat_floor(lo) + 1;
    if (Rat(f) > lo && Rat(f) < hi && rat_ceil(hi) - rat_floor(lo) == 2) {
      // hyperplane (lambda, alpha) = f, i.e. H_{alpha, -f}
      long n = -to_long(f);
      AffineRoot root{alpha, n};
      if (!affine_root_positive(rs, root)) root = {wv_scale(alpha, Rat(-1)), -n};
      return root;
    }
  }
  throw std::invalid_argument("wall_between: alcoves are not adjacent");
}

// ---------------------------------------------------------------------------
// Generic (periodic) order on alcoves, closed within a caller-supplied ball.
//
// Generated by A < r_H(A) over every wall H of the affine arrangement
// (not only the walls bounding A) whenever A lies in H^-, the half
// space away from the translates of the dominant chamber.  Restricting
// the generators to adjacent crossings would give the strictly weaker
// periodic analogue of the weak order.

struct GenericOrderBall {
  const FiniteRootSystem* rs = nullptr;
  WeylBall ball;
  std::vector<std::vector<int>> succ;  // generating relations A -> r_H(A)
  std::vector<std::vector<bool>> leq;  // reachability
};

inline GenericOrderBall build_generic_order(const FiniteRootSystem& rs, long radius) {
  GenericOrderBall g;
  g.rs = &rs;
  g.ball = build_weyl_ball(rs, radius);
  int n = static_cast<int>(g.ball.elems.size());
  g.succ.assign(n, {});
  for (int i = 0; i < n; ++i) {
    const AffWeylElt& x = g.ball.elems[i];
    WeightVec p = alcove_point(rs, x);
    for (int j = 0; j < n; ++j) {
      if (j == i) continue;
      auto root = reflection_root(rs, compose(g.ball.elems[j], inverse(x)));
      if (!root) continue;
      // normalize the wall to a positive finite root alpha with
      // H = {(lambda, alpha) = -n}; H^- = {(lambda, alpha) + n < 0}
      WeightVec alpha = root->finite;
      long lev = root->level;
      if (!finite_root_positive(rs, alpha)) {
        alpha = wv_scale(alpha, Rat(-1));
        lev = -lev;
      }
      Rat side = rs.pairing(p, alpha) + lev;
      if (side < 0) g.succ[i].push_back(j);
    }
  }
  g.leq.assign(n, std::vector<bool>(n, false));
  // transitive closure (forward DFS from each node)
  for (int i = 0; i < n; ++i) {
    std::vector<int> stack = {i};
    g.leq[i][i] = true;
    while (!stack.empty()) {
      int u = stack.back();
      stack.pop_back();
      for (int v : g.succ[u])
        if (!g.leq[i][v]) {
          g.leq[i][v] = true;
          stack.push_back(v);
        }
    }
  }
  return g;
}

enum class OrderAnswer { Yes, NotWithinBall };

inline OrderAnswer generic_leq(const GenericOrderBall& g, const AffWeylElt& x, const AffWeylElt& y) {
  auto ix = g.ball.index.find(x), iy = g.ball.index.find(y);
  if (ix == g.ball.index.end() || iy == g.ball.index.end()) return OrderAnswer::NotWithinBall;
  return g.leq[ix->second][iy->second] ? OrderAnswer::Yes : OrderAnswer::NotWithinBall;
}

// Certifying path of generating steps from x to y, if one exists in the ball.
inline std::optional<std::vector<AffWeylElt>> generic_leq_path(const GenericOrderBall& g, const AffWeylElt& x,
                                                               const AffWeylElt& y) {
  auto ix = g.ball.index.find(x), iy = g.ball.index.find(y);
  if (ix == g.ball.index.end() || iy == g.ball.index.end()) return std::nullopt;
  std::vector<int> prev(g.ball.elems.size(), -1);
  std::vector<int> stack = {ix->second};
  std::vector<bool> vis(g.ball.elems.size(), false);
  vis[ix->second] = true;
  while (!stack.empty()) {
    int u = stack.back();
    stack.pop_back();
    if (u == iy->second) break;
    for (int v : g.succ[u])
      if (!vis[v]) {
        vis[v] = true;
        prev[v] = u;
        stack.push_back(v);
      }
  }
  if (!vis[iy->second]) return std::nullopt;
  std::vector<AffWeylElt> path;
  for (int u = iy->second; u != -1; u = prev[u]) path.push_back(g.ball.elems[u]);
  std::reverse(path.begin(), path.end());
  return path;
}

// ---------------------------------------------------------------------------
// Extended group: decomposition T_mu = omega T_gamma and the induced
// wall renumbering sigma_mu, which depends only on mu + Qv.

struct ExtendedElt {
  WeightVec omega;      // fixed coset representative of mu + Qv
  AffWeylElt body;      // pure translation T_gamma, gamma = mu - omega in Qv
};

inline ExtendedElt decompose_extended(const FiniteRootSystem& rs, const WeightVec& mu) {
  WeightVec rep = omega_class(rs, mu);
  WeightVec gamma = wv_sub(mu, rep);
  std::vector<long> g(rs.rank);
  for (int i = 0; i < rs.rank; ++i) g[i] = to_long(numerator(gamma[i]));
  return {rep, translation_elt(g, rs.rank)};
}

struct SigmaMu {
  std::vector<int> perm;                 // on generator indices 0..rank
  std::vector<std::vector<Rat>> matrix;  // on label coordinates (coroot coords, c)
};

// Track the s-walls of A+ under translation by mu: the i-wall lands on
// the sigma(i)-wall of the translated alcove.  The lattice map permutes
// the affine simple coroots accordingly.
inline SigmaMu sigma_mu(const FiniteRootSystem& rs, const WeightVec& mu) {
  if (!in_coweight_lattice(rs, mu))
    throw std::invalid_argument("sigma_mu: mu is not in the coweight lattice");
  AffWeylElt xp = locate_alcove(rs, wv_add(rs.interior_point, mu));
  AffWeylElt inv = inverse(xp);
  SigmaMu out;
  out.perm.assign(rs.rank + 1, -1);
  for (int i = 0; i <= rs.rank; ++i) {
    WeightVec img = apply_affine(inv, wv_add(rs.wall_points[i], mu));
    for (int j = 0; j <= rs.rank; ++j)
      if (img == rs.wall_points[j]) {
        out.perm[i] = j;
        break;
      }
    if (out.perm[i] < 0) throw std::logic_error("sigma_mu: wall image is not a wall of A+");
  }
  // Affine simple coroots in (coroot coords, c): av_i = e_i for i>=1,
  // av_0 = -thetav + c.  Build the matrix sending av_i to av_{perm(i)}.
  int d = rs.rank + 1;
  RationalField Q;
  auto coroot_vec = [&](int i) {
    std::vector<Rat> v(d, Rat(0));
    if (i == 0) {
      for (int j = 0; j < rs.rank; ++j) v[j] = -rs.highest_root[j];
      v[rs.rank] = 1;
    } else {
      v[i - 1] = 1;
    }
    return v;
  };
  // matrix = [images] * [basis]^{-1}: solve basis^T X^T = images^T columnwise
  Mat<RationalField> basis(d, Vec<RationalField>(d));
  Mat<RationalField> images(d, Vec<RationalField>(d));
  for (int i = 0; i <= rs.rank; ++i) {
    auto b = coroot_vec(i);
    auto im = coroot_vec(out.perm[i]);
    for (int r = 0; r < d; ++r) {
      basis[r][i] = b[r];
      images[r][i] = im[r];
    }
  }
  out.matrix.assign(d, std::vector<Rat>(d, Rat(0)));
  for (int r = 0; r < d; ++r) {
    // Row r of the matrix satisfies row_r * B = (r-th coordinates of the
    // images), with B the column matrix of the av_i; solve B^T u = rhs.
    Mat<RationalField> m(d, Vec<RationalField>(d));
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j) m[i][j] = basis[j][i];
    Vec<RationalField> rhs(d);
    for (int i = 0; i < d; ++i) rhs[i] = images[r][i];
    auto sol = solve(Q, m, rhs);
    if (!sol) throw std::logic_error("sigma_mu: singular basis");
    for (int j = 0; j < d; ++j) out.matrix[r][j] = (*sol)[j];
  }
  return out;
}

inline AffineCorootVec apply_sigma(const FiniteRootSystem& rs, const SigmaMu& s, const AffineCorootVec& v) {
  int d = rs.rank + 1;
  std::vector<Rat> in(d);
  for (int i = 0; i < rs.rank; ++i) in[i] = v.finite[i];
  in[rs.rank] = v.c;
  AffineCorootVec out;
  out.finite.assign(rs.rank, Rat(0));
  out.c = 0;
  for (int r = 0; r < d; ++r) {
    Rat acc = 0;
    for (int j = 0; j < d; ++j) acc += s.matrix[r][j] * in[j];
    if (r < rs.rank)
      out.finite[r] = acc;
    else
      out.c = acc;
  }
  return out;
}

// ---------------------------------------------------------------------------
// Parabolic quotients by a subset J of the finite simple reflections.

inline std::vector<AffWeylElt> subgroup_elements(const FiniteRootSystem& rs, const std::vector<int>& J) {
  std::set<AffWeylElt> elems = {aff_identity(rs.rank)};
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<AffWeylElt> cur(elems.begin(), elems.end());
    for (const auto& x : cur)
      for (int i : J) {
        AffWeylElt y = compose(x, simple_reflection(rs, i));
        if (elems.insert(y).second) grew = true;
      }
  }
  return {elems.begin(), elems.end()};
}

// Minimal-length representative of x<J> (right coset quotient).
inline AffWeylElt min_coset_rep(const FiniteRootSystem& rs, const AffWeylElt& x, const std::vector<AffWeylElt>& wj) {
  AffWeylElt best = x;
  long best_len = length(rs, x);
  for (const auto& u : wj) {
    AffWeylElt y = compose(x, u);
    long ly = length(rs, y);
    if (ly < best_len) {
      best = y;
      best_len = ly;
    }
  }
  return best;
}

}  // namespace mg
