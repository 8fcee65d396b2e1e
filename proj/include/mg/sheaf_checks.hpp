#pragma once

// Verification routines built on the sheaf layer:
//   - the left translation/right translation automorphisms of the
//     structure algebra and the two invariant-subring decompositions,
//   - the explicit even/odd section families on the rank-one stable
//     graph and the resulting flabbiness mechanism,
//   - the finite-interval suite for the rank-one parabolic graph
//     (injectivity of top restriction, section-space dimensions,
//     Vandermonde independence, the distinguished degree-one section,
//     the monomial basis, and triviality of all BMP stalks).

#include "mg/sheaf_functors.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <sstream>
#include <string>
#include <vector>

namespace mg {

// ---------------------------------------------------------------------------
// Rank-one lattice helpers: dominant alcoves of the affine Weyl group of
// A1 correspond to lattice points n alpha via x^{-1}(0) = n alphav.  The
// enumeration by length e, s0, s0s1, s0s1s0, ... visits
// 0, alpha, -alpha, 2alpha, -2alpha, ...

inline long a1_lattice_point(const FiniteRootSystem& rs, const AffWeylElt& x) {
  if (rs.rank != 1) throw std::invalid_argument("a1_lattice_point: rank-one only");
  return inverse(x).tr[0];
}

// Minimal representative of index h in the length enumeration (word
// s0 s1 s0 ... with h letters).
inline AffWeylElt a1_min_rep_by_index(const FiniteRootSystem& rs, int h) {
  std::vector<int> word;
  for (int i = 0; i < h; ++i) word.push_back(i % 2 == 0 ? 0 : 1);
  return from_word(rs, word);
}

// Index in the enumeration of the lattice point p.
inline int a1_index_of_lattice(long p) {
  if (p == 0) return 0;
  return p > 0 ? static_cast<int>(2 * p - 1) : static_cast<int>(-2 * p);
}

// ---------------------------------------------------------------------------
// Structure algebra automorphisms and invariants.
//
// On a vertex set closed under both left and right multiplication by
// the simple reflection s, the structure algebra Z of the regular graph
// carries two automorphisms: the right translation (z_x) -> (z_{xs})
// and the twisted left translation (z_x) -> (tau_s(z_{sx})), with tau_s
// the substitution induced by the reflection.  Z decomposes as
//   Z = Z^s (+) c^s Z^s        with c^s_x = x(alphav_s), and
//   Z = {}^s Z (+) abar_s Z^s  with abar_s the constant section alphav_s,
// where Z^s and {}^s Z are the respective fixed subalgebras.

struct SigmaReport {
  bool ok = true;
  std::string detail;
  std::map<long, long> dim_z;      // degree -> dim of the structure algebra slice
  std::map<long, long> dim_right;  // degree -> dim of the right-invariant slice
  std::map<long, long> dim_left;   // degree -> dim of the left-invariant slice
};

template <class K>
SigmaReport sigma_invariants_check(const K& k, const FiniteRootSystem& rs, int s_idx, long d_max,
                                   long radius = 3) {
  SigmaReport rep;
  auto fail = [&](const std::string& why) {
    rep.ok = false;
    if (!rep.detail.empty()) rep.detail += "; ";
    rep.detail += why;
  };
  AffWeylElt s = simple_reflection(rs, s_idx);
  WeylBall ambient = build_weyl_ball(rs, radius + 2);
  WeylBall small = build_weyl_ball(rs, radius);
  std::vector<AffWeylElt> elems;
  auto add_unique = [&](const AffWeylElt& x) {
    for (const auto& y : elems)
      if (y == x) return;
    elems.push_back(x);
  };
  for (const auto& x : small.elems) {
    add_unique(x);
    add_unique(compose(x, s));
    add_unique(compose(s, x));
    add_unique(compose(s, compose(x, s)));
  }
  MomentGraph g = regular_graph_on(rs, ambient, elems);
  Sheaf<K> z = structure_sheaf(k, g);
  std::vector<int> all;
  for (const auto& v : g.verts) all.push_back(v.id);
  int nvars = z.nvars;
  std::vector<int> right_of(g.verts.size()), left_of(g.verts.size());
  for (const auto& v : g.verts) {
    right_of[v.id] = g.vertex_index(compose(v.elt, s));
    left_of[v.id] = g.vertex_index(compose(s, v.elt));
    if (right_of[v.id] < 0 || left_of[v.id] < 0)
      throw std::logic_error("sigma_invariants_check: vertex set not closed under translation");
  }
  LatticeAuto tau = coroot_action_matrix(rs, s);
  auto root0 = reflection_root(rs, s);
  if (!root0) throw std::logic_error("sigma_invariants_check: simple reflection has no root");
  AffineCorootVec alpha_s = affine_coroot(rs, *root0);

  // per-vertex multipliers for the two complements
  std::vector<Poly<K>> cs(g.verts.size());
  Poly<K> abar = label_poly(k, rs, alpha_s);
  for (const auto& v : g.verts)
    cs[v.id] = label_poly(k, rs, apply_auto(rs, coroot_action_matrix(rs, v.elt), alpha_s));

  auto block_poly = [&](const Vec<K>& row, const std::vector<long>& off, int x, long d) {
    Vec<K> sub(row.begin() + off[x], row.begin() + off[x + 1]);
    return poly_from_coords(k, sub, nvars, static_cast<int>(d / 2));
  };
  auto apply_perm = [&](const Vec<K>& row, const std::vector<long>& off, long d, bool left) {
    Vec<K> out = zero_vec(k, row.size());
    for (const auto& v : g.verts) {
      int srcv = left ? left_of[v.id] : right_of[v.id];
      Poly<K> p = block_poly(row, off, srcv, d);
      if (left) p = poly_apply_auto(k, tau, nvars, p);
      Vec<K> coords = poly_coords(k, p, nvars, static_cast<int>(d / 2));
      for (std::size_t t = 0; t < coords.size(); ++t) out[off[v.id] + t] = coords[t];
    }
    return out;
  };
  auto mult_tuple = [&](const Vec<K>& row, const std::vector<long>& off_lo,
                        const std::vector<long>& off_hi, long d, const std::vector<Poly<K>>& mults) {
    Vec<K> out = zero_vec(k, off_hi.back());
    for (const auto& v : g.verts) {
      Poly<K> p = poly_mul(k, block_poly(row, off_lo, v.id, d), mults[v.id]);
      Vec<K> coords = poly_coords(k, p, nvars, static_cast<int>(d / 2) + 1);
      for (std::size_t t = 0; t < coords.size(); ++t) out[off_hi[v.id] + t] = coords[t];
    }
    return out;
  };

  std::map<long, Mat<K>> sec, fixed_right, fixed_left;
  for (long d = 0; d <= d_max; d += 2) {
    sec[d] = section_basis(k, z, all, d);
    auto off = subset_offsets(z, all, d);
    for (int pass = 0; pass < 2; ++pass) {
      bool left = pass == 1;
      // matrix of the automorphism in the section basis
      Mat<K> m;
      for (const auto& row : sec[d]) {
        Vec<K> img = apply_perm(row, off, d, left);
        if (!in_span(k, sec[d], img)) {
          fail("automorphism does not preserve the structure algebra");
          return rep;
        }
        m.push_back(detail::coords_in_rowspace(k, sec[d], img));
      }
      // involution
      for (std::size_t i = 0; i < m.size(); ++i) {
        Vec<K> sq = zero_vec(k, m.size());
        for (std::size_t l = 0; l < m.size(); ++l)
          for (std::size_t j = 0; j < m.size(); ++j) sq[j] = k.add(sq[j], k.mul(m[i][l], m[l][j]));
        for (std::size_t j = 0; j < m.size(); ++j)
          if (!k.eq(sq[j], i == j ? k.one() : k.zero())) {
            fail("automorphism is not an involution");
            return rep;
          }
      }
      // fixed space: coefficient vectors with c M = c
      Mat<K> constraints;
      for (std::size_t jcol = 0; jcol < m.size(); ++jcol) {
        Vec<K> rowv = zero_vec(k, m.size());
        for (std::size_t irow = 0; irow < m.size(); ++irow) rowv[irow] = m[irow][jcol];
        rowv[jcol] = k.sub(rowv[jcol], k.one());
        constraints.push_back(std::move(rowv));
      }
      Mat<K> coeffs = constraints.empty() ? Mat<K>{} : nullspace(k, constraints, m.size());
      Mat<K> fixed;
      for (const auto& cf : coeffs) {
        Vec<K> v = zero_vec(k, off.back());
        for (std::size_t i = 0; i < cf.size(); ++i)
          for (std::size_t t = 0; t < v.size(); ++t) v[t] = k.add(v[t], k.mul(cf[i], sec[d][i][t]));
        fixed.push_back(std::move(v));
      }
      (left ? fixed_left : fixed_right)[d] = std::move(fixed);
    }
    rep.dim_z[d] = static_cast<long>(sec[d].size());
    rep.dim_right[d] = static_cast<long>(fixed_right[d].size());
    rep.dim_left[d] = static_cast<long>(fixed_left[d].size());
  }

  // decompositions, degree by degree
  for (long d = 0; d <= d_max; d += 2) {
    auto off = subset_offsets(z, all, d);
    for (int pass = 0; pass < 2; ++pass) {
      bool left = pass == 1;
      const Mat<K>& inv_part = left ? fixed_left.at(d) : fixed_right.at(d);
      Mat<K> combined = inv_part;
      long prod_dim = 0;
      if (d >= 2) {
        auto off_lo = subset_offsets(z, all, d - 2);
        // first complement multiplies the right-invariants; the second
        // multiplies the left-invariants (the constant section abar_s is
        // anti-invariant, so abar_s times a left-invariant is exactly an
        // anti-invariant, giving the complement of the fixed subalgebra).
        // The graded dimensions of the two invariant subrings agree, so
        // the dimension bookkeeping is unchanged.
        const Mat<K>& lower = left ? fixed_left.at(d - 2) : fixed_right.at(d - 2);
        for (const auto& row : lower) {
          Vec<K> prod = left ? mult_tuple(row, off_lo, off, d - 2, std::vector<Poly<K>>(g.verts.size(), abar))
                             : mult_tuple(row, off_lo, off, d - 2, cs);
          if (!in_span(k, sec.at(d), prod)) {
            fail("complement is not contained in the structure algebra");
            return rep;
          }
          combined.push_back(prod);
          ++prod_dim;
        }
      }
      long want = static_cast<long>(sec.at(d).size());
      if (static_cast<long>(inv_part.size()) + prod_dim != want ||
          static_cast<long>(span_dim(k, combined)) != want) {
        std::ostringstream os;
        os << (left ? "left" : "right") << " decomposition fails at degree " << d << " ("
           << inv_part.size() << "+" << prod_dim << " vs " << want << ")";
        fail(os.str());
      }
    }
  }
  return rep;
}

// ---------------------------------------------------------------------------
// Even and odd section families on the rank-one stable graph.

template <class K>
Poly<K> a1_linear(const K& k, long alpha_coeff, long c_coeff) {
  std::vector<typename K::Elem> coeffs = {k.from_rat(Rat(alpha_coeff)), k.from_rat(Rat(c_coeff))};
  return poly_linear(k, coeffs);
}

// The even section of degree 2r with top parameter n, component at the
// lattice point h.
template <class K>
Poly<K> even_section_component(const K& k, long r, long n, long h) {
  long an = n < 0 ? -n : n;
  long ah = h < 0 ? -h : h;
  if (r == 0) return poly_const(k, 2, k.one());
  if (ah >= an - r + 1 && ah <= an) return poly_zero(k);
  Poly<K> p = poly_const(k, 2, k.one());
  if (h > 0) {
    for (long i = 0; i < r; ++i) {
      p = poly_mul(k, p, a1_linear(k, 1, an - h - i));
      p = poly_scale(k, p, k.from_rat(Rat(an - h - i)));
    }
  } else {
    for (long i = 0; i < r; ++i) {
      p = poly_mul(k, p, a1_linear(k, -1, an + h - i));
      p = poly_scale(k, p, k.from_rat(Rat(an + h - i)));
    }
  }
  return p;
}

// The odd section of degree 2r with top parameter n, component at h.
template <class K>
Poly<K> odd_section_component(const K& k, long r, long n, long h) {
  long an = n < 0 ? -n : n;
  long ah = h < 0 ? -h : h;
  if (ah >= an - r + 2 && ah <= an) return poly_zero(k);
  Poly<K> p = poly_const(k, 2, k.one());
  if (h > 0) {
    for (long i = 0; i < r; ++i) {
      p = poly_mul(k, p, a1_linear(k, 1, an - h - i));
      p = poly_scale(k, p, k.from_rat(Rat(an - h - i + 1)));
    }
  } else {
    for (long i = 0; i < r; ++i) {
      p = poly_mul(k, p, a1_linear(k, -1, an + h - i + 1));
      p = poly_scale(k, p, k.from_rat(Rat(an + h - i)));
    }
  }
  return p;
}

// Check a tuple of polynomials, indexed by lattice point, against the
// edge congruences of a rank-one graph whose labels are proportional to
// -alpha + (h+k)c.
template <class K>
bool a1_tuple_is_section(const K& k, const MomentGraph& g, const std::map<long, Poly<K>>& tuple) {
  for (const auto& e : g.edges) {
    long h = a1_lattice_point(g.rs, g.verts[e.from].elt);
    long kk = a1_lattice_point(g.rs, g.verts[e.to].elt);
    auto ith = tuple.find(h);
    auto itk = tuple.find(kk);
    if (ith == tuple.end() || itk == tuple.end()) continue;
    Poly<K> diff = poly_sub(k, ith->second, itk->second);
    if (diff.is_zero()) continue;
    Poly<K> quot;
    if (!poly_divide(k, diff, label_poly(k, g.rs, e.label), quot)) return false;
  }
  return true;
}

struct SubgenericReport {
  bool ok = true;
  std::string detail;
};

// The even/odd families are sections of the stable interval, and every
// section over the interval is an S-combination of the families with
// top parameter equal to the interval top.
template <class K>
SubgenericReport subgeneric_sections_check(const K& k, const FiniteRootSystem& rs, long m, long n,
                                           long r_max) {
  SubgenericReport rep;
  auto fail = [&](const std::string& why) {
    rep.ok = false;
    if (!rep.detail.empty()) rep.detail += "; ";
    rep.detail += why;
  };
  int bi = a1_index_of_lattice(m), ti = a1_index_of_lattice(n);
  if (bi > ti) throw std::invalid_argument("subgeneric_sections_check: empty interval");
  WeylBall ball = build_weyl_ball(rs, ti + 2);
  MomentGraph g = stable_graph(rs, ball, a1_min_rep_by_index(rs, bi), a1_min_rep_by_index(rs, ti));
  std::vector<long> lattice;
  for (const auto& v : g.verts) lattice.push_back(a1_lattice_point(rs, v.elt));
  std::vector<int> all;
  for (const auto& v : g.verts) all.push_back(v.id);
  Sheaf<K> a = structure_sheaf(k, g);

  // collect the families restricted to the interval, per degree
  std::map<long, std::vector<std::map<long, Poly<K>>>> family;  // r -> tuples
  for (long r = 0; r <= r_max; ++r) {
    std::map<long, Poly<K>> ez, oz;
    for (long h : lattice) {
      ez[h] = even_section_component(k, r, n, h);
      if (r >= 1) oz[h] = odd_section_component(k, r, n, h);
    }
    if (!a1_tuple_is_section(k, g, ez)) fail("even family fails an edge congruence at degree " + std::to_string(2 * r));
    family[r].push_back(ez);
    if (r >= 1) {
      if (!a1_tuple_is_section(k, g, oz)) fail("odd family fails an edge congruence at degree " + std::to_string(2 * r));
      family[r].push_back(oz);
    }
  }

  // spanning: every section of the interval is an S-combination
  for (long r = 0; r <= r_max; ++r) {
    long d = 2 * r;
    Mat<K> sec = section_basis(k, a, all, d);
    auto off = subset_offsets(a, all, d);
    Mat<K> products;
    for (long t = 0; t <= r; ++t)
      for (const auto& tup : family[t]) {
        const auto& monos = monomials_of_degree(2, static_cast<int>(r - t));
        for (const auto& mono : monos) {
          Poly<K> mp;
          poly_add_term(k, mp, mono, k.one());
          Vec<K> row = zero_vec(k, off.back());
          for (const auto& v : g.verts) {
            Poly<K> p = poly_mul(k, tup.at(a1_lattice_point(rs, v.elt)), mp);
            Vec<K> coords = poly_coords(k, p, 2, static_cast<int>(r));
            for (std::size_t tt = 0; tt < coords.size(); ++tt) row[off[v.id] + tt] = coords[tt];
          }
          if (!in_span(k, sec, row)) {
            fail("family product is not a section at degree " + std::to_string(d));
            continue;
          }
          products.push_back(std::move(row));
        }
      }
    if (span_dim(k, products) != sec.size())
      fail("families do not span the sections at degree " + std::to_string(d));
  }
  return rep;
}

// ---------------------------------------------------------------------------
// Finite-interval suite on the rank-one parabolic (complete) graph.

struct IntervalSuiteReport {
  bool gkm = true;
  bool stalks_trivial = true;     // every BMP stalk is free of rank one in degree zero
  bool top_restriction = true;    // sections are determined by their top r+1 components
  bool section_dims = true;       // dim of the degree-2r slice is C(r+2,2)
  bool vandermonde = true;        // images of the constant monomial sections have the right rank
  bool degree_one_kernel = true;  // the distinguished section exists with zero image at the bottom
  bool monomial_basis = true;     // monomials in the three degree-one sections form a basis
  std::string detail;

  bool ok() const {
    return gkm && stalks_trivial && top_restriction && section_dims && vandermonde &&
           degree_one_kernel && monomial_basis;
  }
};

template <class K>
IntervalSuiteReport a1_interval_suite(const K& k, const FiniteRootSystem& rs, int j_idx, int i_idx) {
  IntervalSuiteReport rep;
  auto fail = [&](bool IntervalSuiteReport::* flag, const std::string& why) {
    rep.*flag = false;
    if (!rep.detail.empty()) rep.detail += "; ";
    rep.detail += why;
  };
  if (j_idx >= i_idx) throw std::invalid_argument("a1_interval_suite: need j < i");
  int gap = i_idx - j_idx;
  WeylBall ball = build_weyl_ball(rs, i_idx + 2);
  MomentGraph g = parabolic_graph_alcoves(rs, ball, a1_min_rep_by_index(rs, j_idx),
                                          a1_min_rep_by_index(rs, i_idx));
  if (static_cast<int>(g.verts.size()) != gap + 1)
    throw std::logic_error("a1_interval_suite: unexpected interval size");
  auto gkm = is_gkm(g, k.characteristic());
  if (!gkm.ok) {
    fail(&IntervalSuiteReport::gkm, "the pair violates the GKM condition");
    return rep;
  }
  long d_max = 2 * gap + 2;
  int top = -1, bottom = -1;
  long hi = -1, lo = std::numeric_limits<long>::max();
  for (const auto& v : g.verts) {
    if (v.order_rank > hi) {
      hi = v.order_rank;
      top = v.id;
    }
    if (v.order_rank < lo) {
      lo = v.order_rank;
      bottom = v.id;
    }
  }
  Sheaf<K> b = bmp_construct(k, g, top, d_max);
  for (const auto& v : g.verts)
    if (b.stalks[v.id] != std::vector<long>{0})
      fail(&IntervalSuiteReport::stalks_trivial, "BMP stalk is not free of rank one at vertex " + std::to_string(v.id));

  std::vector<int> interval;  // everything above the bottom vertex
  for (const auto& v : g.verts)
    if (v.id != bottom) interval.push_back(v.id);
  std::vector<int> by_rank = interval;  // descending order rank
  std::sort(by_rank.begin(), by_rank.end(),
            [&](int a, int bb) { return g.verts[a].order_rank > g.verts[bb].order_rank; });

  for (long r = 0; r < gap; ++r) {
    long d = 2 * r;
    Mat<K> sec = section_basis(k, b, interval, d);
    // top restriction injective
    std::vector<int> tops(by_rank.begin(), by_rank.begin() + std::min<std::size_t>(r + 1, by_rank.size()));
    std::sort(tops.begin(), tops.end());
    Mat<K> proj;
    for (const auto& row : sec) proj.push_back(restrict_row(k, b, interval, row, tops, d));
    if (span_dim(k, proj) != sec.size())
      fail(&IntervalSuiteReport::top_restriction, "top restriction not injective at degree " + std::to_string(d));
    if (static_cast<long>(sec.size()) != (r + 2) * (r + 1) / 2)
      fail(&IntervalSuiteReport::section_dims, "section dimension mismatch at degree " + std::to_string(d));
  }

  // edges at the bottom vertex and their scalar parameters
  struct BottomEdge {
    int e;
    typename K::Elem nval;  // alpha == nval * c modulo the label
  };
  std::vector<BottomEdge> delta;
  for (int e : g.edges_at(bottom)) {
    const auto& lab = g.edges[e].label;
    auto a_coeff = k.from_rat(lab.finite[0]);
    auto c_coeff = k.from_rat(lab.c);
    if (k.is_zero(a_coeff)) throw std::logic_error("a1_interval_suite: label without alpha part");
    delta.push_back({e, k.neg(k.div(c_coeff, a_coeff))});
  }
  for (std::size_t a = 0; a < delta.size(); ++a)
    for (std::size_t bb = a + 1; bb < delta.size(); ++bb)
      if (k.eq(delta[a].nval, delta[bb].nval))
        fail(&IntervalSuiteReport::vandermonde, "coincident edge parameters at the bottom vertex");

  // Vandermonde rank of the images of the constant monomial sections
  for (long t = 0; t <= gap + 1; ++t) {
    Mat<K> rows;
    for (long l = 0; l <= t; ++l) {
      Vec<K> row;
      for (const auto& de : delta) {
        auto val = k.one();
        for (long q = 0; q < l; ++q) val = k.mul(val, de.nval);
        row.push_back(val);
      }
      rows.push_back(std::move(row));
    }
    long want = std::min<long>(t + 1, gap);
    if (static_cast<long>(rank(k, rows)) != want)
      fail(&IntervalSuiteReport::vandermonde, "monomial image rank mismatch at degree " + std::to_string(2 * t));
  }

  // the distinguished degree-one section: components (r - s) l(bottom, v)
  long rlat = a1_lattice_point(rs, g.verts[bottom].elt);
  std::map<long, Poly<K>> m0;
  std::map<int, Poly<K>> m0_by_vertex;
  for (const auto& v : g.verts) {
    long s = a1_lattice_point(rs, v.elt);
    Poly<K> comp = poly_scale(k, a1_linear(k, -1, rlat + s), k.from_rat(Rat(rlat - s)));
    m0[s] = comp;
    m0_by_vertex[v.id] = comp;
    if (v.id != bottom && comp.is_zero())
      fail(&IntervalSuiteReport::degree_one_kernel, "distinguished section vanishes at vertex " + std::to_string(v.id));
  }
  if (!a1_tuple_is_section(k, g, m0))
    fail(&IntervalSuiteReport::degree_one_kernel, "distinguished section fails an edge congruence");
  for (const auto& de : delta) {
    int other = g.edges[de.e].from == bottom ? g.edges[de.e].to : g.edges[de.e].from;
    Poly<K> quot;
    if (!poly_divide(k, m0_by_vertex[other], label_poly(k, rs, g.edges[de.e].label), quot))
      fail(&IntervalSuiteReport::degree_one_kernel, "distinguished section has nonzero bottom image");
  }

  // monomials in the three degree-one sections form a basis
  Poly<K> ma = poly_var(k, 2, 0), mc = poly_var(k, 2, 1);
  for (long r = 1; r < gap; ++r) {
    long d = 2 * r;
    Mat<K> sec = section_basis(k, b, interval, d);
    auto off = subset_offsets(b, interval, d);
    Mat<K> rows;
    for (long l = 0; l <= r; ++l)
      for (long h = 0; l + h <= r; ++h) {
        long kk = r - l - h;
        Vec<K> row = zero_vec(k, off.back());
        for (std::size_t vi = 0; vi < interval.size(); ++vi) {
          Poly<K> p = poly_const(k, 2, k.one());
          for (long q = 0; q < l; ++q) p = poly_mul(k, p, ma);
          for (long q = 0; q < h; ++q) p = poly_mul(k, p, mc);
          for (long q = 0; q < kk; ++q) p = poly_mul(k, p, m0_by_vertex[interval[vi]]);
          Vec<K> coords = poly_coords(k, p, 2, static_cast<int>(r));
          for (std::size_t t = 0; t < coords.size(); ++t) row[off[vi] + t] = coords[t];
        }
        if (!in_span(k, sec, row)) {
          fail(&IntervalSuiteReport::monomial_basis, "monomial is not a section at degree " + std::to_string(d));
          continue;
        }
        rows.push_back(std::move(row));
      }
    if (static_cast<long>(span_dim(k, rows)) != (r + 2) * (r + 1) / 2)
      fail(&IntervalSuiteReport::monomial_basis, "monomials are dependent at degree " + std::to_string(d));
  }
  return rep;
}

}  // namespace mg
