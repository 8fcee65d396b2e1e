#pragma once

// Moment graphs over the affinized coroot lattice Qv + Zc: regular and
// parabolic Bruhat graphs, the periodic graph (same labelled graph,
// reoriented by the generic order), and the stable graph (dominant
// alcoves, right-reflection edges only), together with edge
// classification, translation stabilization (find_m0), the GKM
// condition, and labelled-graph morphisms.

#include "mg/roots.hpp"
#include "mg/weyl.hpp"

#include <map>
#include <optional>
#include <set>
#include <string>
#include <tuple>
#include <vector>

namespace mg {

enum class EdgeClass { Unclassified, Stable, NonStable, Other };

inline std::string edge_class_name(EdgeClass c) {
  switch (c) {
    case EdgeClass::Stable: return "stable";
    case EdgeClass::NonStable: return "non-stable";
    case EdgeClass::Other: return "other";
    default: return "unclassified";
  }
}

struct MGVertex {
  int id = 0;
  AffWeylElt elt;       // regular: group element; alcove kinds: dominant alcove
  long order_rank = 0;  // length (Bruhat kinds) or rank in a linear extension
};

struct MGEdge {
  int from = 0, to = 0;          // oriented upward in the graph's order
  AffineCorootVec label;         // coroot of the positive affine root
  EdgeClass cls = EdgeClass::Unclassified;
};

struct MomentGraph {
  std::string type;  // "A1" or "A2"
  std::string kind;  // "regular", "parabolic", "periodic", "stable"
  FiniteRootSystem rs;
  std::vector<MGVertex> verts;
  std::vector<MGEdge> edges;
  std::vector<std::vector<bool>> leq;  // partial order on vertex ids

  int vertex_index(const AffWeylElt& x) const {
    for (const auto& v : verts)
      if (v.elt == x) return v.id;
    return -1;
  }

  std::vector<int> edges_at(int v) const {
    std::vector<int> out;
    for (std::size_t e = 0; e < edges.size(); ++e)
      if (edges[e].from == v || edges[e].to == v) out.push_back(static_cast<int>(e));
    return out;
  }

  // Transitive reduction of the order (cover pairs), for serialization.
  std::vector<std::pair<int, int>> cover_pairs() const {
    std::vector<std::pair<int, int>> out;
    int n = static_cast<int>(verts.size());
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        if (i == j || !leq[i][j]) continue;
        bool cover = true;
        for (int k = 0; k < n && cover; ++k)
          if (k != i && k != j && leq[i][k] && leq[k][j]) cover = false;
        if (cover) out.emplace_back(i, j);
      }
    return out;
  }
};

// Label of the edge pair {x, y}: the coroot of the positive affine root
// alpha with s_alpha = y^{-1} u x for some u in the finite subgroup
// (u = e for the regular graph).  Returns nothing if no reflection
// links the pair; throws if two distinct hyperplanes do.
inline std::optional<AffineCorootVec> linking_label(const FiniteRootSystem& rs, const AffWeylElt& x,
                                                    const AffWeylElt& y,
                                                    const std::vector<AffWeylElt>& finite_subgroup) {
  std::optional<AffineRoot> found;
  for (const auto& u : finite_subgroup) {
    AffWeylElt t = compose(inverse(y), compose(u, x));
    auto root = reflection_root(rs, t);
    if (!root) continue;
    if (found && !(found->finite == root->finite && found->level == root->level))
      throw std::logic_error("linking_label: ambiguous edge label");
    found = root;
  }
  if (!found) return std::nullopt;
  return affine_coroot(rs, *found);
}

namespace detail {
inline void fill_order_from_ball(MomentGraph& g, const WeylBall& ball) {
  int n = static_cast<int>(g.verts.size());
  g.leq.assign(n, std::vector<bool>(n, false));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) g.leq[i][j] = bruhat_leq(ball, g.verts[i].elt, g.verts[j].elt);
}
}  // namespace detail

// Regular Bruhat graph on the interval [bottom, top]: all group
// elements between them, edges x -> y for y = t x with t a reflection,
// labelled by the coroot of the positive root of t.
inline MomentGraph bruhat_graph(const FiniteRootSystem& rs, const WeylBall& ball, const AffWeylElt& bottom,
                                const AffWeylElt& top) {
  MomentGraph g;
  g.type = rs.name;
  g.kind = "regular";
  g.rs = rs;
  for (const auto& z : ball.elems)
    if (bruhat_leq(ball, bottom, z) && bruhat_leq(ball, z, top))
      g.verts.push_back({static_cast<int>(g.verts.size()), z, length(rs, z)});
  detail::fill_order_from_ball(g, ball);
  int n = static_cast<int>(g.verts.size());
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (g.verts[i].order_rank >= g.verts[j].order_rank || !g.leq[i][j]) continue;
      auto root = reflection_root(rs, compose(g.verts[j].elt, inverse(g.verts[i].elt)));
      if (root) g.edges.push_back({i, j, affine_coroot(rs, *root), EdgeClass::Unclassified});
    }
  return g;
}

// Parabolic Bruhat graph in the alcove picture: vertices are the
// dominant alcoves in the Bruhat interval [bottom, top] of minimal
// coset representatives; x and y are joined when some u in the finite
// Weyl group makes y^{-1} u x a reflection.
inline MomentGraph parabolic_graph_alcoves(const FiniteRootSystem& rs, const WeylBall& ball,
                                           const AffWeylElt& bottom, const AffWeylElt& top) {
  std::vector<int> allJ;
  for (int i = 1; i <= rs.rank; ++i) allJ.push_back(i);
  auto wj = subgroup_elements(rs, allJ);
  MomentGraph g;
  g.type = rs.name;
  g.kind = "parabolic";
  g.rs = rs;
  for (const auto& z : ball.elems) {
    if (!alcove_dominant(rs, z)) continue;
    if (bruhat_leq(ball, bottom, z) && bruhat_leq(ball, z, top))
      g.verts.push_back({static_cast<int>(g.verts.size()), z, length(rs, z)});
  }
  detail::fill_order_from_ball(g, ball);
  int n = static_cast<int>(g.verts.size());
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (g.verts[i].order_rank >= g.verts[j].order_rank || !g.leq[i][j]) continue;
      auto label = linking_label(rs, g.verts[i].elt, g.verts[j].elt, wj);
      if (label) g.edges.push_back({i, j, *label, EdgeClass::Unclassified});
    }
  return g;
}

// Stable moment graph: dominant alcoves in [bottom, top], edges only
// between x and x s_alpha (right reflections), label alphav.
inline MomentGraph stable_graph(const FiniteRootSystem& rs, const WeylBall& ball, const AffWeylElt& bottom,
                                const AffWeylElt& top) {
  MomentGraph g = parabolic_graph_alcoves(rs, ball, bottom, top);
  g.kind = "stable";
  std::vector<MGEdge> kept;
  for (const auto& e : g.edges) {
    AffWeylElt t = compose(inverse(g.verts[e.from].elt), g.verts[e.to].elt);
    auto root = reflection_root(rs, t);
    if (!root) continue;
    MGEdge edge = e;
    edge.label = affine_coroot(rs, *root);
    edge.cls = EdgeClass::Stable;
    kept.push_back(edge);
  }
  g.edges = kept;
  return g;
}

// Periodic graph: the alcoves in the generic-order interval
// [bottom, top], with the regular graph's reflection edges (and left
// reflection labels) reoriented by the generic order.
inline MomentGraph periodic_graph(const FiniteRootSystem& rs, const GenericOrderBall& gb, const AffWeylElt& bottom,
                                  const AffWeylElt& top) {
  MomentGraph g;
  g.type = rs.name;
  g.kind = "periodic";
  g.rs = rs;
  for (const auto& z : gb.ball.elems)
    if (generic_leq(gb, bottom, z) == OrderAnswer::Yes && generic_leq(gb, z, top) == OrderAnswer::Yes)
      g.verts.push_back({static_cast<int>(g.verts.size()), z, 0});
  int n = static_cast<int>(g.verts.size());
  g.leq.assign(n, std::vector<bool>(n, false));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      g.leq[i][j] = generic_leq(gb, g.verts[i].elt, g.verts[j].elt) == OrderAnswer::Yes;
  // order_rank: longest chain below, a linear extension of the generic order
  for (int i = 0; i < n; ++i) {
    long r = 0;
    for (int j = 0; j < n; ++j)
      if (j != i && g.leq[j][i]) ++r;
    g.verts[i].order_rank = r;
  }
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (i == j || !g.leq[i][j] || g.leq[j][i]) continue;
      auto root = reflection_root(rs, compose(g.verts[j].elt, inverse(g.verts[i].elt)));
      if (root) g.edges.push_back({i, j, affine_coroot(rs, *root), EdgeClass::Unclassified});
    }
  return g;
}

// Classify the edges of a parabolic (alcove picture) graph:
//   stable:     y = x s_alpha for a reflection s_alpha;
//   non-stable: y = x + a alphav as alcoves, a nonzero integer;
//   other:      neither (happens near the chamber walls).
// If y = T_{a alphav} x for a positive root alpha and a nonzero
// integer a, return (alpha, a).
inline std::optional<std::pair<WeightVec, long>> translation_edge_data(const FiniteRootSystem& rs,
                                                                      const AffWeylElt& x, const AffWeylElt& y) {
  AffWeylElt t = compose(y, inverse(x));
  if (!is_translation(t)) return std::nullopt;
  for (const auto& alpha : rs.positive_roots) {
    // t.tr must be an integer multiple of alphav (= alpha coords)
    std::optional<Rat> a;
    bool ok = true;
    for (int i = 0; i < rs.rank; ++i) {
      if (alpha[i] == 0) {
        if (t.tr[i] != 0) { ok = false; break; }
        continue;
      }
      Rat cand = Rat(t.tr[i]) / alpha[i];
      if (a && *a != cand) { ok = false; break; }
      a = cand;
    }
    if (ok && a && *a != 0 && is_integer(*a)) return std::make_pair(alpha, to_long(numerator(*a)));
  }
  return std::nullopt;
}

inline void classify_edges(MomentGraph& g) {
  for (auto& e : g.edges) {
    const AffWeylElt& x = g.verts[e.from].elt;
    const AffWeylElt& y = g.verts[e.to].elt;
    if (reflection_root(g.rs, compose(inverse(x), y))) {
      e.cls = EdgeClass::Stable;
      continue;
    }
    e.cls = translation_edge_data(g.rs, x, y) ? EdgeClass::NonStable : EdgeClass::Other;
  }
}

inline bool acv_eq_up_to_sign(const AffineCorootVec& a, const AffineCorootVec& b) {
  return a == b || a == acv_neg(b);
}

struct LabelTranslationReport {
  bool ok = true;
  std::string reason;
};

// Check the label bookkeeping of a classified parabolic interval under
// translation by mu.  With sigma = sigma_mu:
//   stable edge x --- x s_beta:    translated label = sigma(label);
//   non-stable edge x --- T_{a alphav} x: translated label is, up to the
//     sign normalization, sigma(label) + (mu, alpha) c.  (The coweight
//     part of mu beyond the coroot lattice enters through sigma's c
//     column and through (mu, alpha) in matching halves, so the full
//     pairing appears here, not just its integral part.)
// Also checks the closed form of the non-stable labels themselves: for
// x = T_{x0} w and the edge x --- T_{n alphav} x with n > 0, the label
// is up to sign wi(alphav) + ((alpha, x0) + n) c with wi = w^{-1}, and
// the positively normalized representative is a positive affine coroot.
inline LabelTranslationReport verify_label_translation(const MomentGraph& g, const MomentGraph& gt,
                                                       const WeightVec& mu) {
  const auto& rs = g.rs;
  auto sm = sigma_mu(rs, mu);
  for (const auto& e : g.edges) {
    const AffWeylElt& x = g.verts[e.from].elt;
    const AffWeylElt& y = g.verts[e.to].elt;
    int fi = gt.vertex_index(translate_alcove(rs, x, mu));
    int ti = gt.vertex_index(translate_alcove(rs, y, mu));
    if (fi < 0 || ti < 0) return {false, "translated vertex missing"};
    const MGEdge* et = nullptr;
    for (const auto& e2 : gt.edges)
      if ((e2.from == fi && e2.to == ti) || (e2.from == ti && e2.to == fi)) et = &e2;
    if (!et) return {false, "translated edge missing"};
    AffineCorootVec sl = apply_sigma(rs, sm, e.label);
    if (e.cls == EdgeClass::Stable) {
      if (!(et->label == sl)) return {false, "stable label does not translate by sigma_mu"};
      continue;
    }
    if (e.cls != EdgeClass::NonStable) return {false, "interval has an unclassified or other edge"};
    auto td = translation_edge_data(rs, x, y);
    if (!td) return {false, "non-stable edge without translation data"};
    const WeightVec& alpha = td->first;
    Rat shift = rs.form(mu, alpha);
    AffineCorootVec c_term{WeightVec(rs.rank, Rat(0)), shift};
    bool match = acv_eq_up_to_sign(et->label, acv_add(sl, c_term)) ||
                 acv_eq_up_to_sign(et->label, acv_add(acv_neg(sl), c_term));
    if (!match) return {false, "non-stable label misses the (mu, alpha) c correction"};
    // closed form of the label at the untranslated edge
    const AffWeylElt& base = td->second > 0 ? x : y;
    long n = td->second > 0 ? td->second : -td->second;
    WeightVec x0(rs.rank);
    for (int i = 0; i < rs.rank; ++i) x0[i] = Rat(base.tr[i]);
    WeightVec wi_alpha = fin_apply_rat(fin_inverse(base.mat), alpha);
    AffineCorootVec closed{wi_alpha, rs.form(alpha, x0) + n};
    if (!acv_eq_up_to_sign(e.label, closed)) return {false, "non-stable label closed form mismatch"};
    AffineRoot pos{e.label.finite, to_long(numerator(e.label.c))};
    if (!affine_root_positive(rs, pos)) return {false, "label normalization is not the positive root"};
  }
  return {true, ""};
}

inline long count_edges_of_class(const MomentGraph& g, EdgeClass c) {
  long n = 0;
  for (const auto& e : g.edges)
    if (e.cls == c) ++n;
  return n;
}

// ---------------------------------------------------------------------------
// Translation stabilization: the least m such that the interval
// translated by m rhov has no "other" edges and its oriented unlabeled
// graph is invariant under further rhov translations up to m_max.

struct FindM0Result {
  std::optional<long> m0;
  std::vector<MomentGraph> graphs;  // classified graphs for m = 0..m_max
};

// The interval translated by m rhov: vertices are the translates of the
// alcoves of the base Bruhat interval (translation does not preserve
// Bruhat intervals, so the vertex set is moved, not recomputed), edges
// are the linking-reflection pairs, oriented from shorter to longer
// element, and the order is the reachability order of the edges.
inline MomentGraph translated_parabolic_interval(const FiniteRootSystem& rs, const AffWeylElt& bottom,
                                                 const AffWeylElt& top, long m) {
  WeylBall base_ball = build_weyl_ball(rs, length(rs, top));
  MomentGraph base = parabolic_graph_alcoves(rs, base_ball, bottom, top);
  if (m == 0) {
    classify_edges(base);
    return base;
  }
  WeightVec mu = wv_scale(rs.rho_coweight, Rat(m));
  std::vector<int> allJ;
  for (int i = 1; i <= rs.rank; ++i) allJ.push_back(i);
  auto wj = subgroup_elements(rs, allJ);
  MomentGraph g;
  g.type = rs.name;
  g.kind = "parabolic";
  g.rs = rs;
  for (const auto& v : base.verts) {
    AffWeylElt z = translate_alcove(rs, v.elt, mu);
    g.verts.push_back({v.id, z, length(rs, z)});
  }
  int n = static_cast<int>(g.verts.size());
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const auto& vi = g.verts[i];
      const auto& vj = g.verts[j];
      bool up = vi.order_rank < vj.order_rank ||
                (vi.order_rank == vj.order_rank && std::tie(vi.elt.tr, vi.elt.mat) < std::tie(vj.elt.tr, vj.elt.mat));
      if (!up) continue;
      auto label = linking_label(rs, vi.elt, vj.elt, wj);
      if (label) g.edges.push_back({i, j, *label, EdgeClass::Unclassified});
    }
  g.leq.assign(n, std::vector<bool>(n, false));
  for (int i = 0; i < n; ++i) g.leq[i][i] = true;
  for (const auto& e : g.edges) g.leq[e.from][e.to] = true;
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (g.leq[i][k] && g.leq[k][j]) g.leq[i][j] = true;
  classify_edges(g);
  return g;
}

// Oriented-unlabeled-graph match of g2 against g1 translated by mu.
inline bool translation_matches(const FiniteRootSystem& rs, const MomentGraph& g1, const MomentGraph& g2,
                                const WeightVec& mu) {
  if (g1.verts.size() != g2.verts.size() || g1.edges.size() != g2.edges.size()) return false;
  std::map<int, int> vmap;
  for (const auto& v : g1.verts) {
    int target = g2.vertex_index(translate_alcove(rs, v.elt, mu));
    if (target < 0) return false;
    vmap[v.id] = target;
  }
  std::set<std::pair<int, int>> e2;
  for (const auto& e : g2.edges) e2.insert({e.from, e.to});
  for (const auto& e : g1.edges)
    if (!e2.count({vmap[e.from], vmap[e.to]})) return false;
  return true;
}

inline FindM0Result find_m0(const FiniteRootSystem& rs, const AffWeylElt& bottom, const AffWeylElt& top,
                            long m_max) {
  FindM0Result out;
  for (long m = 0; m <= m_max; ++m) out.graphs.push_back(translated_parabolic_interval(rs, bottom, top, m));
  for (long m = 0; m <= m_max; ++m) {
    if (count_edges_of_class(out.graphs[m], EdgeClass::Other) != 0) continue;
    bool stable_from_here = true;
    for (long mm = m + 1; mm <= m_max && stable_from_here; ++mm)
      stable_from_here = translation_matches(rs, out.graphs[m], out.graphs[mm],
                                             wv_scale(rs.rho_coweight, Rat(mm - m)));
    if (stable_from_here) {
      out.m0 = m;
      return out;
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// GKM condition: edge labels at every vertex pairwise non-proportional
// over the coefficient field (characteristic 0 or an odd prime p).

struct GKMReport {
  bool ok = true;
  int vertex = -1;
  int edge1 = -1, edge2 = -1;
};

inline bool labels_proportional_mod(const FiniteRootSystem& rs, const AffineCorootVec& a, const AffineCorootVec& b,
                                    long p) {
  // collect coordinates; for p > 0 reduce integers mod p
  int d = rs.rank + 1;
  std::vector<Rat> u(d), v(d);
  for (int i = 0; i < rs.rank; ++i) {
    u[i] = a.finite[i];
    v[i] = b.finite[i];
  }
  u[rs.rank] = a.c;
  v[rs.rank] = b.c;
  auto red = [&](const Rat& r) -> long {
    if (!is_integer(r)) throw std::logic_error("labels_proportional_mod: non-integral label");
    long val = to_long(numerator(r)) % p;
    return val < 0 ? val + p : val;
  };
  if (p == 0) {
    // rank of the 2 x d matrix over Q
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j)
        if (u[i] * v[j] - u[j] * v[i] != 0) return false;
    return true;
  }
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j)
      if ((red(u[i]) * red(v[j]) - red(u[j]) * red(v[i])) % p != 0) return false;
  return true;
}

inline GKMReport is_gkm(const MomentGraph& g, long characteristic) {
  if (characteristic == 2) throw std::invalid_argument("is_gkm: characteristic 2 is not admissible");
  GKMReport rep;
  for (const auto& v : g.verts) {
    auto inc = g.edges_at(v.id);
    for (std::size_t a = 0; a < inc.size(); ++a)
      for (std::size_t b = a + 1; b < inc.size(); ++b)
        if (labels_proportional_mod(g.rs, g.edges[inc[a]].label, g.edges[inc[b]].label, characteristic)) {
          rep.ok = false;
          rep.vertex = v.id;
          rep.edge1 = inc[a];
          rep.edge2 = inc[b];
          return rep;
        }
  }
  return rep;
}

// ---------------------------------------------------------------------------
// Morphisms of moment graphs.  Twists are stored as tags: one lattice
// automorphism (matrix on label coordinates) per source vertex, applied
// on demand and never baked into the data.

using LatticeAuto = std::vector<std::vector<Rat>>;  // (rank+1) x (rank+1)

inline LatticeAuto identity_auto(int rank) {
  LatticeAuto m(rank + 1, std::vector<Rat>(rank + 1, Rat(0)));
  for (int i = 0; i <= rank; ++i) m[i][i] = 1;
  return m;
}

inline AffineCorootVec apply_auto(const FiniteRootSystem& rs, const LatticeAuto& m, const AffineCorootVec& v) {
  int d = rs.rank + 1;
  std::vector<Rat> in(d);
  for (int i = 0; i < rs.rank; ++i) in[i] = v.finite[i];
  in[rs.rank] = v.c;
  AffineCorootVec out;
  out.finite.assign(rs.rank, Rat(0));
  for (int r = 0; r < d; ++r) {
    Rat acc = 0;
    for (int j = 0; j < d; ++j) acc += m[r][j] * in[j];
    if (r < rs.rank)
      out.finite[r] = acc;
    else
      out.c = acc;
  }
  return out;
}

// Is b a nonzero rational multiple of a?
inline bool proportional_labels(const AffineCorootVec& a, const AffineCorootVec& b) {
  std::vector<Rat> u(a.finite), v(b.finite);
  u.push_back(a.c);
  v.push_back(b.c);
  bool a_zero = true, b_zero = true;
  for (const auto& x : u) a_zero = a_zero && x == 0;
  for (const auto& x : v) b_zero = b_zero && x == 0;
  if (a_zero || b_zero) return false;
  for (std::size_t i = 0; i < u.size(); ++i)
    for (std::size_t j = 0; j < u.size(); ++j)
      if (u[i] * v[j] - u[j] * v[i] != 0) return false;
  return true;
}

struct MGMorphism {
  const MomentGraph* src = nullptr;
  const MomentGraph* dst = nullptr;
  std::vector<int> vmap;          // source vertex -> target vertex
  std::vector<int> emap;          // source edge -> target edge, or -1 if collapsed
  std::vector<LatticeAuto> twists;  // per source vertex
};

// Derive the edge map from the vertex map (edges either land on target
// edges or collapse onto a vertex); fails if an image pair is neither.
inline bool derive_edge_map(MGMorphism& f) {
  f.emap.assign(f.src->edges.size(), -1);
  for (std::size_t e = 0; e < f.src->edges.size(); ++e) {
    int a = f.vmap[f.src->edges[e].from];
    int b = f.vmap[f.src->edges[e].to];
    if (a == b) continue;  // collapsed
    bool found = false;
    for (std::size_t e2 = 0; e2 < f.dst->edges.size(); ++e2) {
      const auto& d = f.dst->edges[e2];
      if ((d.from == a && d.to == b) || (d.from == b && d.to == a)) {
        f.emap[e] = static_cast<int>(e2);
        found = true;
        break;
      }
    }
    if (!found) return false;
  }
  return true;
}

struct MorphismReport {
  bool ok = true;
  std::string reason;
};

inline MorphismReport check_morphism(const MGMorphism& f) {
  const auto& rs = f.src->rs;
  // order preservation
  int n = static_cast<int>(f.src->verts.size());
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (f.src->leq[i][j] && !f.dst->leq[f.vmap[i]][f.vmap[j]])
        return {false, "order not preserved"};
  for (std::size_t e = 0; e < f.src->edges.size(); ++e) {
    const auto& edge = f.src->edges[e];
    const auto& tw_x = f.twists[edge.from];
    const auto& tw_y = f.twists[edge.to];
    if (f.emap[e] < 0) continue;  // collapsed edge: no label condition
    const auto& lab2 = f.dst->edges[f.emap[e]].label;
    // MORPH2a: twisted label is a unit multiple of the target label
    if (!proportional_labels(apply_auto(rs, tw_x, edge.label), lab2))
      return {false, "label condition fails (source twist)"};
    // MORPH2b: the two endpoint twists agree modulo the target label:
    // (tw_x - tw_y)(basis vector) must be a multiple of lab2
    for (int bvec = 0; bvec <= rs.rank; ++bvec) {
      AffineCorootVec basis;
      basis.finite.assign(rs.rank, Rat(0));
      basis.c = 0;
      if (bvec < rs.rank)
        basis.finite[bvec] = 1;
      else
        basis.c = 1;
      AffineCorootVec diff = acv_add(apply_auto(rs, tw_x, basis), acv_neg(apply_auto(rs, tw_y, basis)));
      bool zero = diff.c == 0 && wv_is_zero(diff.finite);
      if (!zero && !proportional_labels(diff, lab2))
        return {false, "endpoint twists disagree modulo the edge label"};
    }
  }
  return {true, ""};
}

// ISO1 + ISO2 on top of morphism validity.
inline bool check_iso(const MGMorphism& f) {
  auto rep = check_morphism(f);
  if (!rep.ok) return false;
  std::vector<int> hit(f.dst->verts.size(), 0);
  for (int v : f.vmap) ++hit[v];
  for (int h : hit)
    if (h != 1) return false;
  std::vector<int> ehit(f.dst->edges.size(), 0);
  for (int e : f.emap)
    if (e >= 0) ++ehit[e];
  for (int h : ehit)
    if (h != 1) return false;
  return true;
}

// Translation isomorphism of stable graphs: x -> x + mu with the wall
// renumbering sigma_mu as the twist at every vertex.
inline MGMorphism stable_translation_iso(const MomentGraph& src, const MomentGraph& dst, const WeightVec& mu) {
  const auto& rs = src.rs;
  MGMorphism f;
  f.src = &src;
  f.dst = &dst;
  auto sm = sigma_mu(rs, mu);
  f.twists.assign(src.verts.size(), sm.matrix);
  f.vmap.resize(src.verts.size());
  for (const auto& v : src.verts) {
    int target = dst.vertex_index(translate_alcove(rs, v.elt, mu));
    if (target < 0) throw std::invalid_argument("stable_translation_iso: target graph is not the translate");
    f.vmap[v.id] = target;
  }
  if (!derive_edge_map(f)) throw std::invalid_argument("stable_translation_iso: edge image missing");
  return f;
}

// Inclusion of the stable graph into the classified parabolic graph on
// the same vertex set (identity twists).
inline MGMorphism inclusion_g(const MomentGraph& stab, const MomentGraph& par) {
  MGMorphism f;
  f.src = &stab;
  f.dst = &par;
  f.twists.assign(stab.verts.size(), identity_auto(stab.rs.rank));
  f.vmap.resize(stab.verts.size());
  for (const auto& v : stab.verts) {
    int t = par.vertex_index(v.elt);
    if (t < 0) throw std::invalid_argument("inclusion_g: vertex missing in parabolic graph");
    f.vmap[v.id] = t;
  }
  if (!derive_edge_map(f)) throw std::invalid_argument("inclusion_g: stable edge missing in parabolic graph");
  return f;
}

inline AffWeylElt min_left_coset_rep(const FiniteRootSystem& rs, const AffWeylElt& x,
                                     const std::vector<AffWeylElt>& wj) {
  AffWeylElt best = x;
  long best_len = length(rs, x);
  for (const auto& u : wj) {
    AffWeylElt y = compose(u, x);
    long ly = length(rs, y);
    if (ly < best_len) {
      best = y;
      best_len = ly;
    }
  }
  return best;
}

// Quotient morphism from a regular interval onto the parabolic alcove
// graph, with identity twists.  The regular graph carries left
// reflection labels; the parabolic alcove picture lives on inverses, so
// x is sent to the dominant alcove representing the coset W x^{-1},
// which makes the linking reflection (hence the label) the same on
// both sides.
inline MGMorphism quotient_map_par(const MomentGraph& reg, const MomentGraph& par) {
  const auto& rs = reg.rs;
  std::vector<int> allJ;
  for (int i = 1; i <= rs.rank; ++i) allJ.push_back(i);
  auto wj = subgroup_elements(rs, allJ);
  MGMorphism f;
  f.src = &reg;
  f.dst = &par;
  f.twists.assign(reg.verts.size(), identity_auto(rs.rank));
  f.vmap.resize(reg.verts.size());
  for (const auto& v : reg.verts) {
    int t = par.vertex_index(min_left_coset_rep(rs, inverse(v.elt), wj));
    if (t < 0) throw std::invalid_argument("quotient_map_par: image vertex missing");
    f.vmap[v.id] = t;
  }
  if (!derive_edge_map(f)) throw std::invalid_argument("quotient_map_par: image edge missing");
  return f;
}

// Isomorphism from the periodic graph onto the stable graph on the same
// dominant alcoves, with twist lambda -> x^{-1}(lambda) at the vertex x
// (the affine Weyl group acts on the affinized lattice by transport of
// real roots: T_mu v sends alphav + n c to (v alpha)v + (n - (v alpha, mu)) c).
// Periodic labels are the left reflection roots x(alphav), stable labels
// the right ones alphav, so the twist carries one onto the other.
inline LatticeAuto coroot_action_matrix(const FiniteRootSystem& rs, const AffWeylElt& z) {
  int d = rs.rank + 1;
  LatticeAuto m(d, std::vector<Rat>(d, Rat(0)));
  WeightVec z0(rs.rank);
  for (int i = 0; i < rs.rank; ++i) z0[i] = Rat(z.tr[i]);
  for (int j = 0; j < rs.rank; ++j) {
    WeightVec e(rs.rank, Rat(0));
    e[j] = 1;
    WeightVec img = fin_apply_rat(z.mat, e);
    for (int i = 0; i < rs.rank; ++i) m[i][j] = img[i];
    m[rs.rank][j] = -rs.form(img, z0);
  }
  m[rs.rank][rs.rank] = 1;  // c is fixed
  return m;
}

inline MGMorphism opp_iso(const MomentGraph& per, const MomentGraph& stab) {
  MGMorphism f;
  f.src = &per;
  f.dst = &stab;
  f.vmap.resize(per.verts.size());
  f.twists.resize(per.verts.size());
  for (const auto& v : per.verts) {
    int t = stab.vertex_index(v.elt);
    if (t < 0) throw std::invalid_argument("opp_iso: vertex missing in stable graph");
    f.vmap[v.id] = t;
    f.twists[v.id] = coroot_action_matrix(per.rs, inverse(v.elt));
  }
  if (!derive_edge_map(f)) throw std::invalid_argument("opp_iso: edge image missing");
  return f;
}

}  // namespace mg
