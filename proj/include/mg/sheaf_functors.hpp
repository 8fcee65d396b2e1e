#pragma once

// Functors between sheaf categories on moment graphs: inverse image
// (pullback), direct image (pushforward), extension by zero along
// inclusions, Hom spaces and the adjunction between the two, and the
// five-functor decomposition of the stabilization functor.
//
// Free-based sheaves (Sheaf<K>) are closed under pullback, extension by
// zero and reorientation/restriction; pushforward produces stalks that
// are section spaces, so it lands in the purely degree-wise
// representation DegreeSheaf<K>, where every graded piece is a plain
// vector space with variable-action matrices.  Twist tags are consumed
// exactly here: they determine the variable-action matrices.

#include "mg/sheaves.hpp"

#include <array>
#include <map>
#include <optional>
#include <stdexcept>
#include <vector>

namespace mg {

// ---------------------------------------------------------------------------
// Small graph/morphism helpers.

inline MomentGraph point_graph(const FiniteRootSystem& rs) {
  MomentGraph g;
  g.type = rs.name;
  g.kind = "point";
  g.rs = rs;
  g.verts.push_back({0, aff_identity(rs.rank), 0});
  g.leq = {{true}};
  return g;
}

// The projection to the point with identity twists.
inline MGMorphism morphism_to_point(const MomentGraph& g, const MomentGraph& pt) {
  MGMorphism f;
  f.src = &g;
  f.dst = &pt;
  f.vmap.assign(g.verts.size(), 0);
  f.twists.assign(g.verts.size(), identity_auto(g.rs.rank));
  derive_edge_map(f);  // everything collapses
  return f;
}

// Inverse of an isomorphism of moment graphs (inverse vertex map,
// matrix-inverse twists).
inline MGMorphism invert_iso(const MGMorphism& f) {
  MGMorphism g;
  g.src = f.dst;
  g.dst = f.src;
  g.vmap.assign(f.dst->verts.size(), -1);
  g.twists.assign(f.dst->verts.size(), LatticeAuto{});
  for (std::size_t x = 0; x < f.vmap.size(); ++x) {
    if (g.vmap[f.vmap[x]] >= 0) throw std::invalid_argument("invert_iso: vertex map is not injective");
    g.vmap[f.vmap[x]] = static_cast<int>(x);
    g.twists[f.vmap[x]] = auto_inverse(f.twists[x]);
  }
  for (int v : g.vmap)
    if (v < 0) throw std::invalid_argument("invert_iso: vertex map is not surjective");
  if (!derive_edge_map(g)) throw std::invalid_argument("invert_iso: edge image missing");
  return g;
}

// Regular graph on an arbitrary subset of group elements: edges x -> y
// whenever y x^{-1} is a reflection, labelled by the coroot of its
// positive root, ordered and oriented by the Bruhat order of the
// ambient ball.
inline MomentGraph regular_graph_on(const FiniteRootSystem& rs, const WeylBall& ball,
                                    std::vector<AffWeylElt> elems) {
  std::sort(elems.begin(), elems.end(), [&](const AffWeylElt& a, const AffWeylElt& b) {
    long la = length(rs, a), lb = length(rs, b);
    if (la != lb) return la < lb;
    return reduced_word(rs, a) < reduced_word(rs, b);
  });
  MomentGraph g;
  g.type = rs.name;
  g.kind = "regular";
  g.rs = rs;
  for (std::size_t i = 0; i < elems.size(); ++i)
    g.verts.push_back({static_cast<int>(i), elems[i], length(rs, elems[i])});
  int n = static_cast<int>(g.verts.size());
  g.leq.assign(n, std::vector<bool>(n, false));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) g.leq[i][j] = bruhat_leq(ball, g.verts[i].elt, g.verts[j].elt);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (i == j || !g.leq[i][j]) continue;
      auto root = reflection_root(rs, compose(g.verts[j].elt, inverse(g.verts[i].elt)));
      if (root) g.edges.push_back({i, j, affine_coroot(rs, *root), EdgeClass::Unclassified});
    }
  return g;
}

// ---------------------------------------------------------------------------
// Data transport between graphs with the same vertex elements
// (restriction to a full subgraph, or reorientation by another order).
// Vertices are matched by group element, edges by their endpoint pair;
// restriction maps are swapped on edges whose orientation flips.
// With invert_elts the target vertex v is matched to the source vertex
// inverse(v): quotients of a regular graph onto an alcove graph live on
// inverses, so the section of such a quotient over a dominant alcove v
// is the regular vertex v^{-1}.

template <class K>
Sheaf<K> transport_sheaf(const K& k, const Sheaf<K>& f, const MomentGraph& target,
                         bool invert_elts = false) {
  Sheaf<K> out;
  out.g = &target;
  out.nvars = f.nvars;
  out.truncation_risk = f.truncation_risk;
  out.gkm_ok = f.gkm_ok;
  out.stalks.assign(target.verts.size(), {});
  out.twists.assign(target.verts.size(), std::nullopt);
  std::vector<int> back(target.verts.size(), -1);  // target vertex -> source vertex
  for (const auto& v : target.verts) {
    int s = f.g->vertex_index(invert_elts ? inverse(v.elt) : v.elt);
    if (s < 0) throw std::invalid_argument("transport_sheaf: vertex missing in source graph");
    back[v.id] = s;
    out.stalks[v.id] = f.stalks[s];
    out.twists[v.id] = f.twists[s];
  }
  out.edges.resize(target.edges.size());
  for (std::size_t e = 0; e < target.edges.size(); ++e) {
    int a = back[target.edges[e].from], b = back[target.edges[e].to];
    int match = -1;
    bool flipped = false;
    for (std::size_t e2 = 0; e2 < f.g->edges.size(); ++e2) {
      const auto& se = f.g->edges[e2];
      if (se.from == a && se.to == b) {
        match = static_cast<int>(e2);
        flipped = false;
        break;
      }
      if (se.from == b && se.to == a) {
        match = static_cast<int>(e2);
        flipped = true;
        break;
      }
    }
    if (match < 0) throw std::invalid_argument("transport_sheaf: edge missing in source graph");
    out.edges[e] = f.edges[match];
    if (flipped) std::swap(out.edges[e].rho_from, out.edges[e].rho_to);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Extension by zero along an inclusion (injective direct image): stalks
// and edge modules are carried onto their images, everything else is
// the zero module.

template <class K>
Sheaf<K> extend_by_zero(const K& k, const MGMorphism& f, const Sheaf<K>& src) {
  if (src.g != f.src) throw std::invalid_argument("extend_by_zero: sheaf lives on the wrong graph");
  std::vector<int> hit(f.dst->verts.size(), 0);
  for (int v : f.vmap) ++hit[v];
  for (int h : hit)
    if (h > 1) throw std::invalid_argument("extend_by_zero: morphism is not injective");
  Sheaf<K> out;
  out.g = f.dst;
  out.nvars = src.nvars;
  out.truncation_risk = src.truncation_risk;
  out.gkm_ok = src.gkm_ok;
  out.stalks.assign(f.dst->verts.size(), {});
  out.twists.assign(f.dst->verts.size(), std::nullopt);
  out.edges.resize(f.dst->edges.size());
  for (std::size_t x = 0; x < f.vmap.size(); ++x) {
    out.stalks[f.vmap[x]] = src.stalks[x];
    out.twists[f.vmap[x]] = src.twists[x];
  }
  for (std::size_t e = 0; e < f.emap.size(); ++e) {
    if (f.emap[e] < 0) throw std::invalid_argument("extend_by_zero: collapsed edge under an inclusion");
    const auto& sd = f.dst->edges[f.emap[e]];
    bool flipped = f.vmap[src.g->edges[e].from] != sd.from;
    out.edges[f.emap[e]] = src.edges[e];
    if (flipped) std::swap(out.edges[f.emap[e]].rho_from, out.edges[f.emap[e]].rho_to);
  }
  (void)k;
  return out;
}

// ---------------------------------------------------------------------------
// Pullback f^*: stalks are copied from the image vertex with the action
// twisted by the local automorphism; edges either copy the image edge
// module or, when collapsed, become the stalk modulo the (twisted)
// label, with canonical quotient maps.

namespace detail {
inline std::optional<LatticeAuto> combine_tags(const std::optional<LatticeAuto>& outer,
                                               const LatticeAuto& inner, int rank) {
  LatticeAuto m = outer ? auto_compose(*outer, inner) : inner;
  if (m == identity_auto(rank)) return std::nullopt;
  return m;
}
}  // namespace detail

template <class K>
Sheaf<K> pullback(const K& k, const MGMorphism& f, const Sheaf<K>& h) {
  if (h.g != f.dst) throw std::invalid_argument("pullback: sheaf lives on the wrong graph");
  const auto& rs = f.src->rs;
  Sheaf<K> out;
  out.g = f.src;
  out.nvars = h.nvars;
  out.truncation_risk = h.truncation_risk;
  out.gkm_ok = h.gkm_ok;
  out.stalks.assign(f.src->verts.size(), {});
  out.twists.assign(f.src->verts.size(), std::nullopt);
  for (std::size_t x = 0; x < f.vmap.size(); ++x) {
    out.stalks[x] = h.stalks[f.vmap[x]];
    out.twists[x] = detail::combine_tags(h.twists[f.vmap[x]], f.twists[x], rs.rank);
  }
  out.edges.resize(f.src->edges.size());
  for (std::size_t e = 0; e < f.src->edges.size(); ++e) {
    int x = f.src->edges[e].from;
    int y = f.src->edges[e].to;
    auto& oe = out.edges[e];
    if (f.emap[e] < 0) {
      // collapsed edge: stalk at the image modulo the twisted label
      if (f.vmap[x] != f.vmap[y]) throw std::invalid_argument("pullback: missing edge image");
      const auto& gdeg = h.stalks[f.vmap[x]];
      if (gdeg.empty()) continue;  // zero stalk: zero edge module
      LatticeAuto tw = out.twists[x] ? *out.twists[x] : identity_auto(rs.rank);
      AffineCorootVec lab = apply_auto(rs, tw, f.src->edges[e].label);
      oe.gdeg = gdeg;
      oe.ring = make_edge_ring(k, label_poly(k, rs, lab), out.nvars);
      oe.rho_from.assign(gdeg.size(), std::vector<Poly<K>>(gdeg.size(), poly_zero(k)));
      for (std::size_t i = 0; i < gdeg.size(); ++i) oe.rho_from[i][i] = poly_const(k, out.nvars, k.one());
      oe.rho_to = oe.rho_from;
      oe.twist = out.twists[x];
    } else {
      const auto& he = h.edges[f.emap[e]];
      if (!he.present()) continue;  // zero module upstairs
      bool flipped = f.vmap[x] != h.g->edges[f.emap[e]].from;
      oe = he;
      if (flipped) std::swap(oe.rho_from, oe.rho_to);
      oe.twist = detail::combine_tags(he.twist, f.twists[x], rs.rank);
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Degree-wise sheaves: every graded piece is a plain vector space, with
// explicit variable-action matrices (this is where twist tags are
// finally consumed) and restriction matrices.

template <class K>
struct DSMod {
  std::map<long, long> dims;                 // even degree -> dimension
  std::vector<std::map<long, Mat<K>>> act;   // per variable: degree -> slice_d -> slice_{d+2}

  long dim(long d) const {
    auto it = dims.find(d);
    return it == dims.end() ? 0 : it->second;
  }
};

template <class K>
struct DegreeSheaf {
  const MomentGraph* g = nullptr;
  int nvars = 0;
  long d_max = 0;
  std::vector<DSMod<K>> stalk;                                  // per vertex
  std::vector<DSMod<K>> edge;                                   // per edge
  std::vector<std::array<std::map<long, Mat<K>>, 2>> rho;       // per edge: {from, to} -> degree -> matrix
};

namespace detail {

// Effective linear form of variable v under an optional twist tag.
template <class K>
Poly<K> twisted_var(const K& k, int nvars, const std::optional<LatticeAuto>& tag, int v) {
  if (!tag) return poly_var(k, nvars, v);
  return auto_var_poly(k, *tag, nvars, v);
}

// Multiplication by a linear form on a free-module slice.
template <class K>
Mat<K> free_mult_matrix(const K& k, int nvars, const std::vector<long>& gdeg, long d, const Poly<K>& lin) {
  auto lo = free_slice_offsets(nvars, gdeg, d);
  auto hi = free_slice_offsets(nvars, gdeg, d + 2);
  Mat<K> m(hi.back(), zero_vec(k, lo.back()));
  for (std::size_t j = 0; j < gdeg.size(); ++j) {
    long pj = (d - gdeg[j]) / 2;
    if (pj < 0 || (d - gdeg[j]) % 2 != 0) continue;
    const auto& monos = monomials_of_degree(nvars, static_cast<int>(pj));
    for (std::size_t mi = 0; mi < monos.size(); ++mi) {
      Poly<K> mono;
      poly_add_term(k, mono, monos[mi], k.one());
      Vec<K> coords = poly_coords(k, poly_mul(k, lin, mono), nvars, static_cast<int>(pj) + 1);
      for (std::size_t t = 0; t < coords.size(); ++t) m[hi[j] + t][lo[j] + mi] = coords[t];
    }
  }
  return m;
}

// Multiplication by (the reduction of) a linear form on an edge-module
// slice.
template <class K>
Mat<K> edge_mult_matrix(const K& k, const EdgeRing<K>& er, const std::vector<long>& gdeg, long d,
                        const Poly<K>& lin) {
  int nv = er.nvars - 1;
  Poly<K> red = edge_reduce(k, er, lin);
  auto lo = free_slice_offsets(nv, gdeg, d);
  auto hi = free_slice_offsets(nv, gdeg, d + 2);
  Mat<K> m(hi.back(), zero_vec(k, lo.back()));
  for (std::size_t j = 0; j < gdeg.size(); ++j) {
    long pj = (d - gdeg[j]) / 2;
    if (pj < 0 || (d - gdeg[j]) % 2 != 0) continue;
    const auto& monos = monomials_of_degree(nv, static_cast<int>(pj));
    for (std::size_t mi = 0; mi < monos.size(); ++mi) {
      Poly<K> mono;
      poly_add_term(k, mono, mono_insert(monos[mi], er.pivot), k.one());
      Poly<K> prod = edge_reduce(k, er, poly_mul(k, red, mono));
      Vec<K> coords = edge_coords(k, er, prod, static_cast<int>(pj) + 1);
      for (std::size_t t = 0; t < coords.size(); ++t) m[hi[j] + t][lo[j] + mi] = coords[t];
    }
  }
  return m;
}

}  // namespace detail

template <class K>
DegreeSheaf<K> to_degree_sheaf(const K& k, const Sheaf<K>& f, long d_max) {
  DegreeSheaf<K> out;
  out.g = f.g;
  out.nvars = f.nvars;
  out.d_max = d_max;
  out.stalk.resize(f.g->verts.size());
  out.edge.resize(f.g->edges.size());
  out.rho.resize(f.g->edges.size());
  for (const auto& v : f.g->verts) {
    auto& m = out.stalk[v.id];
    m.act.resize(f.nvars);
    for (long d = 0; d <= d_max; d += 2) {
      m.dims[d] = f.stalk_dim(v.id, d);
      for (int var = 0; var < f.nvars; ++var)
        if (d + 2 <= d_max)
          m.act[var][d] = detail::free_mult_matrix(
              k, f.nvars, f.stalks[v.id], d, detail::twisted_var(k, f.nvars, f.twists[v.id], var));
    }
  }
  for (std::size_t e = 0; e < f.g->edges.size(); ++e) {
    auto& m = out.edge[e];
    m.act.resize(f.nvars);
    for (long d = 0; d <= d_max; d += 2) {
      m.dims[d] = f.edge_dim(static_cast<int>(e), d);
      if (!f.edges[e].present()) continue;
      for (int var = 0; var < f.nvars; ++var)
        if (d + 2 <= d_max)
          m.act[var][d] = detail::edge_mult_matrix(
              k, f.edges[e].ring, f.edges[e].gdeg, d,
              detail::twisted_var(k, f.nvars, f.edges[e].twist, var));
      out.rho[e][0][d] = rho_matrix(k, f, static_cast<int>(e), true, d);
      out.rho[e][1][d] = rho_matrix(k, f, static_cast<int>(e), false, d);
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Pushforward f_*: stalks become section spaces over the fibers (plain
// componentwise action), edge modules become direct sums over preimage
// edges with the action twisted by the inverse local automorphism, and
// the restriction maps factor through the inclusion of the section
// space followed by the summed restrictions.

namespace detail {

// Express v in the row space of `rows` (throws if impossible).
template <class K>
Vec<K> coords_in_rowspace(const K& k, const Mat<K>& rows, const Vec<K>& v) {
  if (rows.empty()) {
    for (const auto& c : v)
      if (!k.is_zero(c)) throw std::logic_error("coords_in_rowspace: vector outside the span");
    return {};
  }
  Mat<K> cols(rows[0].size(), zero_vec(k, rows.size()));
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < rows[i].size(); ++j) cols[j][i] = rows[i][j];
  auto sol = solve(k, cols, v);
  if (!sol) throw std::logic_error("coords_in_rowspace: vector outside the span");
  return *sol;
}

// Multiply a stalk-slice coordinate block by a linear form.
template <class K>
Vec<K> stalk_block_mult(const K& k, const Sheaf<K>& f, int x, const Vec<K>& block, long d,
                        const Poly<K>& lin) {
  auto lo = free_slice_offsets(f.nvars, f.stalks[x], d);
  auto hi = free_slice_offsets(f.nvars, f.stalks[x], d + 2);
  Vec<K> out = zero_vec(k, hi.back());
  for (std::size_t j = 0; j < f.stalks[x].size(); ++j) {
    long pj = (d - f.stalks[x][j]) / 2;
    if (pj < 0 || (d - f.stalks[x][j]) % 2 != 0) continue;
    Vec<K> sub(block.begin() + lo[j], block.begin() + lo[j + 1]);
    Poly<K> p = poly_from_coords(k, sub, f.nvars, static_cast<int>(pj));
    Vec<K> coords = poly_coords(k, poly_mul(k, lin, p), f.nvars, static_cast<int>(pj) + 1);
    for (std::size_t t = 0; t < coords.size(); ++t) out[hi[j] + t] = coords[t];
  }
  return out;
}

}  // namespace detail

template <class K>
DegreeSheaf<K> pushforward(const K& k, const MGMorphism& f, const Sheaf<K>& src, long d_max) {
  if (src.g != f.src) throw std::invalid_argument("pushforward: sheaf lives on the wrong graph");
  const auto& rs = f.src->rs;
  DegreeSheaf<K> out;
  out.g = f.dst;
  out.nvars = src.nvars;
  out.d_max = d_max;
  out.stalk.resize(f.dst->verts.size());
  out.edge.resize(f.dst->edges.size());
  out.rho.resize(f.dst->edges.size());

  std::vector<std::vector<int>> fiber(f.dst->verts.size());
  for (std::size_t x = 0; x < f.vmap.size(); ++x) fiber[f.vmap[x]].push_back(static_cast<int>(x));
  std::vector<std::map<long, Mat<K>>> bases(f.dst->verts.size());

  for (const auto& u : f.dst->verts) {
    auto& m = out.stalk[u.id];
    m.act.resize(src.nvars);
    for (long d = 0; d <= d_max; d += 2) {
      bases[u.id][d] = section_basis(k, src, fiber[u.id], d);
      m.dims[d] = static_cast<long>(bases[u.id][d].size());
    }
    for (long d = 0; d + 2 <= d_max; d += 2) {
      auto off_lo = subset_offsets(src, fiber[u.id], d);
      for (int var = 0; var < src.nvars; ++var) {
        Mat<K> act;
        for (const auto& row : bases[u.id][d]) {
          // componentwise action through each stalk's own structure
          auto off_hi = subset_offsets(src, fiber[u.id], d + 2);
          Vec<K> prod = zero_vec(k, off_hi.back());
          for (std::size_t i = 0; i < fiber[u.id].size(); ++i) {
            int x = fiber[u.id][i];
            Vec<K> block(row.begin() + off_lo[i], row.begin() + off_lo[i + 1]);
            Poly<K> lin = detail::twisted_var(k, src.nvars, src.twists[x], var);
            Vec<K> b2 = detail::stalk_block_mult(k, src, x, block, d, lin);
            for (std::size_t t = 0; t < b2.size(); ++t) prod[off_hi[i] + t] = b2[t];
          }
          act.push_back(detail::coords_in_rowspace(k, bases[u.id][d + 2], prod));
        }
        // rows currently hold coordinates per input basis vector: transpose
        Mat<K> tr(out.stalk[u.id].dim(d + 2), zero_vec(k, act.size()));
        for (std::size_t i = 0; i < act.size(); ++i)
          for (std::size_t j = 0; j < act[i].size(); ++j) tr[j][i] = act[i][j];
        m.act[var][d] = std::move(tr);
      }
    }
  }

  std::vector<std::vector<int>> pre(f.dst->edges.size());
  for (std::size_t e = 0; e < f.emap.size(); ++e)
    if (f.emap[e] >= 0 && src.edges[e].present()) pre[f.emap[e]].push_back(static_cast<int>(e));

  for (std::size_t F = 0; F < f.dst->edges.size(); ++F) {
    auto& m = out.edge[F];
    m.act.resize(src.nvars);
    auto block_offsets = [&](long d) {
      std::vector<long> off(pre[F].size() + 1, 0);
      for (std::size_t i = 0; i < pre[F].size(); ++i) off[i + 1] = off[i] + src.edge_dim(pre[F][i], d);
      return off;
    };
    for (long d = 0; d <= d_max; d += 2) m.dims[d] = block_offsets(d).back();
    for (long d = 0; d + 2 <= d_max; d += 2) {
      auto lo = block_offsets(d);
      auto hi = block_offsets(d + 2);
      for (int var = 0; var < src.nvars; ++var) {
        Mat<K> act(hi.back(), zero_vec(k, lo.back()));
        for (std::size_t i = 0; i < pre[F].size(); ++i) {
          int e = pre[F][i];
          int x = src.g->edges[e].from;
          LatticeAuto inv = auto_inverse(f.twists[x]);
          std::optional<LatticeAuto> tag =
              detail::combine_tags(src.edges[e].twist, inv, rs.rank);
          Mat<K> blk = detail::edge_mult_matrix(k, src.edges[e].ring, src.edges[e].gdeg, d,
                                                detail::twisted_var(k, src.nvars, tag, var));
          for (std::size_t r = 0; r < blk.size(); ++r)
            for (std::size_t c = 0; c < blk[r].size(); ++c) act[hi[i] + r][lo[i] + c] = blk[r][c];
        }
        m.act[var][d] = std::move(act);
      }
    }
    // restriction maps at the two endpoints of the target edge
    for (int side = 0; side < 2; ++side) {
      int u = side == 0 ? f.dst->edges[F].from : f.dst->edges[F].to;
      for (long d = 0; d <= d_max; d += 2) {
        auto eoff = block_offsets(d);
        const Mat<K>& basis = bases[u][d];
        auto soff = subset_offsets(src, fiber[u], d);
        std::map<int, std::size_t> pos;
        for (std::size_t i = 0; i < fiber[u].size(); ++i) pos[fiber[u][i]] = i;
        Mat<K> rho(eoff.back(), zero_vec(k, basis.size()));
        for (std::size_t bi = 0; bi < basis.size(); ++bi) {
          for (std::size_t i = 0; i < pre[F].size(); ++i) {
            int e = pre[F][i];
            // the endpoint of e lying in the fiber of u
            int x = f.vmap[src.g->edges[e].from] == u ? src.g->edges[e].from : src.g->edges[e].to;
            bool from_side = x == src.g->edges[e].from;
            if (f.vmap[x] != u) throw std::logic_error("pushforward: edge does not meet the fiber");
            Mat<K> rm = rho_matrix(k, src, e, from_side, d);
            std::size_t xi = pos.at(x);
            Vec<K> block(basis[bi].begin() + soff[xi], basis[bi].begin() + soff[xi + 1]);
            Vec<K> img = mat_apply(k, rm, block);
            for (std::size_t t = 0; t < img.size(); ++t) rho[eoff[i] + t][bi] = img[t];
          }
        }
        out.rho[F][side][d] = std::move(rho);
      }
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Hom spaces of degree sheaves: dimension of the space of degree-t
// morphisms (per-vertex and per-edge maps commuting with the variable
// actions and with the restriction maps), computed inside the degree
// window [0, d_max].

template <class K>
long hom_dim(const K& k, const DegreeSheaf<K>& a, const DegreeSheaf<K>& b, long t) {
  if (a.g->verts.size() != b.g->verts.size() || a.g->edges.size() != b.g->edges.size())
    throw std::invalid_argument("hom_dim: sheaves live on different graphs");
  long d_max = std::min(a.d_max, b.d_max);
  // unknown layout: per module (vertices then edges), per degree
  struct Block {
    bool is_edge;
    int idx;
    long d;
    long rows, cols;  // rows = dim_B(d+t), cols = dim_A(d)
    long offset;
  };
  std::vector<Block> blocks;
  long total = 0;
  auto adim = [&](bool is_edge, int i, long d) {
    return is_edge ? a.edge[i].dim(d) : a.stalk[i].dim(d);
  };
  auto bdim = [&](bool is_edge, int i, long d) {
    return is_edge ? b.edge[i].dim(d) : b.stalk[i].dim(d);
  };
  std::map<std::tuple<bool, int, long>, std::size_t> lookup;
  for (int pass = 0; pass < 2; ++pass) {
    bool is_edge = pass == 1;
    int count = static_cast<int>(is_edge ? a.g->edges.size() : a.g->verts.size());
    for (int i = 0; i < count; ++i)
      for (long d = 0; d <= d_max; d += 2) {
        if (d + t < 0 || d + t > d_max) continue;
        long r = bdim(is_edge, i, d + t), c = adim(is_edge, i, d);
        if (r == 0 || c == 0) continue;
        lookup[{is_edge, i, d}] = blocks.size();
        blocks.push_back({is_edge, i, d, r, c, total});
        total += r * c;
      }
  }
  auto entry = [&](const Block& bl, long r, long c) { return bl.offset + r * bl.cols + c; };
  Mat<K> constraints;
  auto block_at = [&](bool is_edge, int i, long d) -> const Block* {
    auto it = lookup.find({is_edge, i, d});
    return it == lookup.end() ? nullptr : &blocks[it->second];
  };
  auto act_mat = [&](const DegreeSheaf<K>& s, bool is_edge, int i, int var, long d) -> const Mat<K>* {
    const auto& mod = is_edge ? s.edge[i] : s.stalk[i];
    auto it = mod.act[var].find(d);
    return it == mod.act[var].end() ? nullptr : &it->second;
  };
  // commutation with the variable actions
  for (int pass = 0; pass < 2; ++pass) {
    bool is_edge = pass == 1;
    int count = static_cast<int>(is_edge ? a.g->edges.size() : a.g->verts.size());
    for (int i = 0; i < count; ++i)
      for (long d = 0; d + 2 <= d_max; d += 2) {
        if (d + t < 0 || d + t + 2 > d_max) continue;
        const Block* lo = block_at(is_edge, i, d);
        const Block* hi = block_at(is_edge, i, d + 2);
        long rows_out = bdim(is_edge, i, d + t + 2);
        long cols_in = adim(is_edge, i, d);
        if (rows_out == 0 || cols_in == 0) continue;
        for (int var = 0; var < a.nvars; ++var) {
          const Mat<K>* aact = act_mat(a, is_edge, i, var, d);
          const Mat<K>* bact = act_mat(b, is_edge, i, var, d + t);
          for (long r = 0; r < rows_out; ++r)
            for (long c = 0; c < cols_in; ++c) {
              Vec<K> row = zero_vec(k, total);
              bool nonzero = false;
              if (hi && aact)
                for (long l = 0; l < hi->cols; ++l) {
                  const auto& coef = (*aact)[l][c];
                  if (k.is_zero(coef)) continue;
                  row[entry(*hi, r, l)] = k.add(row[entry(*hi, r, l)], coef);
                  nonzero = true;
                }
              if (lo && bact)
                for (long l = 0; l < lo->rows; ++l) {
                  const auto& coef = (*bact)[r][l];
                  if (k.is_zero(coef)) continue;
                  row[entry(*lo, l, c)] = k.sub(row[entry(*lo, l, c)], coef);
                  nonzero = true;
                }
              if (nonzero) constraints.push_back(std::move(row));
            }
        }
      }
  }
  // commutation with the restriction maps at both endpoints
  for (std::size_t e = 0; e < a.g->edges.size(); ++e)
    for (int side = 0; side < 2; ++side) {
      int v = side == 0 ? a.g->edges[e].from : a.g->edges[e].to;
      for (long d = 0; d <= d_max; d += 2) {
        if (d + t < 0 || d + t > d_max) continue;
        const Block* bv = block_at(false, v, d);
        const Block* be = block_at(true, static_cast<int>(e), d);
        long rows_out = b.edge[e].dim(d + t);
        long cols_in = a.stalk[v].dim(d);
        if (rows_out == 0 || cols_in == 0) continue;
        auto ita = a.rho[e][side].find(d);
        auto itb = b.rho[e][side].find(d + t);
        const Mat<K>* ra = ita == a.rho[e][side].end() ? nullptr : &ita->second;
        const Mat<K>* rb = itb == b.rho[e][side].end() ? nullptr : &itb->second;
        for (long r = 0; r < rows_out; ++r)
          for (long c = 0; c < cols_in; ++c) {
            Vec<K> row = zero_vec(k, total);
            bool nonzero = false;
            if (be && ra)
              for (long l = 0; l < be->cols; ++l) {
                const auto& coef = (*ra)[l][c];
                if (k.is_zero(coef)) continue;
                row[entry(*be, r, l)] = k.add(row[entry(*be, r, l)], coef);
                nonzero = true;
              }
            if (bv && rb)
              for (long l = 0; l < bv->rows; ++l) {
                const auto& coef = (*rb)[r][l];
                if (k.is_zero(coef)) continue;
                row[entry(*bv, l, c)] = k.sub(row[entry(*bv, l, c)], coef);
                nonzero = true;
              }
            if (nonzero) constraints.push_back(std::move(row));
          }
      }
    }
  if (total == 0) return 0;
  if (constraints.empty()) return total;
  return static_cast<long>(nullspace(k, constraints, total).size());
}

// Compare Hom(f^* H, F) with Hom(H, f_* F) degree by degree.
struct AdjunctionReport {
  bool ok = true;
  std::map<long, std::pair<long, long>> dims;  // t -> (pullback side, pushforward side)
};

template <class K>
AdjunctionReport adjunction_check(const K& k, const MGMorphism& f, const Sheaf<K>& fsh,
                                  const Sheaf<K>& h, long d_max, const std::vector<long>& ts) {
  auto left_a = to_degree_sheaf(k, pullback(k, f, h), d_max);
  auto left_b = to_degree_sheaf(k, fsh, d_max);
  auto right_a = to_degree_sheaf(k, h, d_max);
  auto right_b = pushforward(k, f, fsh, d_max);
  AdjunctionReport rep;
  for (long t : ts) {
    long l = hom_dim(k, left_a, left_b, t);
    long r = hom_dim(k, right_a, right_b, t);
    rep.dims[t] = {l, r};
    if (l != r) rep.ok = false;
  }
  return rep;
}

// ---------------------------------------------------------------------------
// The stabilization functor as the composite of five functors:
// extension by zero into the full parabolic interval, pullback along
// the quotient from the regular graph, reorientation by the generic
// order, restriction to the periodically-ordered interval, and pullback
// along (the inverse of) the isomorphism between the stable and
// periodic restrictions.

struct StabCompareEntry {
  AffWeylElt elt;
  std::vector<long> composite;  // sorted generator degrees from the five-functor composite
  std::vector<long> direct;     // sorted generator degrees of the BMP sheaf on the stable graph
};

struct StabCompareResult {
  bool ok = true;
  bool truncation_risk = false;
  std::vector<StabCompareEntry> entries;
};

// Apply the five-functor composite to the BMP sheaf on the parabolic
// interval [bottom, top] and compare its stalk degrees, vertex by
// vertex, with the BMP sheaf built directly on the stable graph of the
// same interval.
template <class K>
StabCompareResult stab_composite_vs_direct(const K& k, const FiniteRootSystem& rs,
                                           const AffWeylElt& bottom, const AffWeylElt& top,
                                           long d_max) {
  std::vector<int> allJ;
  for (int jj = 1; jj <= rs.rank; ++jj) allJ.push_back(jj);
  auto wj = subgroup_elements(rs, allJ);
  long wf_len = 0;
  for (const auto& u : wj) wf_len = std::max(wf_len, length(rs, u));
  long rad = length(rs, top) + wf_len + 1;
  WeylBall ball = build_weyl_ball(rs, rad);
  MomentGraph par_i = parabolic_graph_alcoves(rs, ball, bottom, top);
  MomentGraph stab_i = stable_graph(rs, ball, bottom, top);

  int w = -1;
  long best = -1;
  for (const auto& v : par_i.verts)
    if (length(rs, v.elt) > best) {
      best = length(rs, v.elt);
      w = v.id;
    }
  Sheaf<K> b = bmp_construct(k, par_i, w, d_max);

  // stage 1: extension by zero into the full parabolic interval [e, top]
  MomentGraph par_big = parabolic_graph_alcoves(rs, ball, aff_identity(rs.rank), top);
  MGMorphism i;
  i.src = &par_i;
  i.dst = &par_big;
  i.twists.assign(par_i.verts.size(), identity_auto(rs.rank));
  i.vmap.resize(par_i.verts.size());
  for (const auto& v : par_i.verts) {
    int t = par_big.vertex_index(v.elt);
    if (t < 0) throw std::invalid_argument("stab_composite_vs_direct: interval not inside [e, top]");
    i.vmap[v.id] = t;
  }
  if (!derive_edge_map(i)) throw std::invalid_argument("stab_composite_vs_direct: missing edge image");
  Sheaf<K> s1 = extend_by_zero(k, i, b);

  // stage 2: pullback along the quotient from the regular graph on the
  // full preimage of [e, top] (union of the finite-group cosets)
  std::vector<AffWeylElt> lifts;
  for (const auto& x : ball.elems)
    if (par_big.vertex_index(min_left_coset_rep(rs, inverse(x), wj)) >= 0) lifts.push_back(x);
  MomentGraph reg = regular_graph_on(rs, ball, lifts);
  MGMorphism q = quotient_map_par(reg, par_big);
  Sheaf<K> s2 = pullback(k, q, s1);

  // stages 3+4: reorientation by the generic order and restriction to
  // the interval (neither changes the underlying data, so both are one
  // transport onto the periodically-ordered interval graph)
  auto gb = build_generic_order(rs, rad);
  MomentGraph per_i = periodic_graph(rs, gb, bottom, top);
  for (const auto& v : per_i.verts)
    if (par_i.vertex_index(v.elt) < 0)
      throw std::invalid_argument("stab_composite_vs_direct: generic interval differs from the parabolic one");
  Sheaf<K> s3 = transport_sheaf(k, s2, per_i, /*invert_elts=*/true);

  // stage 5: pullback along the inverse of the periodic-to-stable
  // isomorphism
  MGMorphism opp = invert_iso(opp_iso(per_i, stab_i));
  Sheaf<K> composite = pullback(k, opp, s3);

  // direct construction on the stable graph
  int ws = -1;
  best = -1;
  for (const auto& v : stab_i.verts)
    if (v.order_rank > best) {
      best = v.order_rank;
      ws = v.id;
    }
  Sheaf<K> direct = bmp_construct(k, stab_i, ws, d_max);

  StabCompareResult out;
  out.truncation_risk = b.truncation_risk || direct.truncation_risk;
  for (const auto& v : stab_i.verts) {
    StabCompareEntry ent;
    ent.elt = v.elt;
    ent.composite = composite.stalks[v.id];
    ent.direct = direct.stalks[v.id];
    std::sort(ent.composite.begin(), ent.composite.end());
    std::sort(ent.direct.begin(), ent.direct.end());
    if (ent.composite != ent.direct) out.ok = false;
    out.entries.push_back(std::move(ent));
  }
  return out;
}

}  // namespace mg
