#include <catch2/catch_amalgamated.hpp>

#include "mg/graphs.hpp"
#include "mg/graphs_io.hpp"

using namespace mg;

namespace {

AffineCorootVec acv(std::vector<long> fin, long c) {
  AffineCorootVec out;
  for (long v : fin) out.finite.push_back(Rat(v));
  out.c = Rat(c);
  return out;
}

// Basic well-formedness: no multiple edges, edges go strictly up in the
// order, labels nonzero.
void check_moment_graph_axioms(const MomentGraph& g) {
  std::set<std::pair<int, int>> seen;
  for (const auto& e : g.edges) {
    CHECK(seen.insert({std::min(e.from, e.to), std::max(e.from, e.to)}).second);
    CHECK(g.leq[e.from][e.to]);
    CHECK_FALSE(g.leq[e.to][e.from]);
    CHECK_FALSE((wv_is_zero(e.label.finite) && e.label.c == 0));
  }
}

const MGEdge* find_edge(const MomentGraph& g, const AffWeylElt& x, const AffWeylElt& y) {
  int a = g.vertex_index(x), b = g.vertex_index(y);
  for (const auto& e : g.edges)
    if ((e.from == a && e.to == b) || (e.from == b && e.to == a)) return &e;
  return nullptr;
}

// Lattice point of the parabolic vertex in the coroot-lattice
// description: x(A+) corresponds to x^{-1}(0).
long a1_lattice_value(const FiniteRootSystem& rs, const AffWeylElt& x) {
  WeightVec zero = {Rat(0)};
  WeightVec img = apply_affine(inverse(x), zero);
  REQUIRE(is_integer(img[0]));
  return to_long(numerator(img[0]));
}

}  // namespace

TEST_CASE("regular graph on [e, s1s0s1] reproduces the worked example") {
  auto rs = build_root_system("A1");
  auto ball = build_weyl_ball(rs, 4);
  auto g = bruhat_graph(rs, ball, aff_identity(1), from_word(rs, {1, 0, 1}));
  check_moment_graph_axioms(g);
  CHECK(g.verts.size() == 6);
  CHECK(g.edges.size() == 9);
  // labels of the positive-root normalization of the left reflection
  auto expect = [&](std::vector<int> wx, std::vector<int> wy, std::vector<long> fin, long c) {
    const MGEdge* e = find_edge(g, from_word(rs, wx), from_word(rs, wy));
    REQUIRE(e != nullptr);
    CHECK(e->label == acv(fin, c));
  };
  expect({}, {1}, {1}, 0);
  expect({}, {0}, {-1}, 1);
  expect({}, {1, 0, 1}, {1}, 1);
  expect({1}, {1, 0}, {1}, 1);
  expect({1}, {0, 1}, {-1}, 1);
  expect({0}, {1, 0}, {1}, 0);
  expect({0}, {0, 1}, {-1}, 2);
  expect({1, 0}, {1, 0, 1}, {1}, 2);
  expect({0, 1}, {1, 0, 1}, {1}, 0);
  // no edge between elements of even length difference
  CHECK(find_edge(g, aff_identity(1), from_word(rs, {1, 0})) == nullptr);
}

TEST_CASE("regular graph edges agree with a brute-force reflection sweep") {
  for (auto name : {"A1", "A2"}) {
    auto rs = build_root_system(name);
    auto ball = build_weyl_ball(rs, 4);
    AffWeylElt top = name == std::string("A1") ? from_word(rs, {0, 1, 0, 1}) : from_word(rs, {0, 1, 2, 1});
    auto g = bruhat_graph(rs, ball, aff_identity(rs.rank), top);
    check_moment_graph_axioms(g);
    long count = 0;
    for (const auto& u : g.verts)
      for (const auto& v : g.verts) {
        if (u.order_rank >= v.order_rank) continue;
        if (!bruhat_leq(ball, u.elt, v.elt)) continue;
        auto root = reflection_root(rs, compose(v.elt, inverse(u.elt)));
        if (!root) continue;
        ++count;
        const MGEdge* e = find_edge(g, u.elt, v.elt);
        REQUIRE(e != nullptr);
        CHECK(e->label == affine_coroot(rs, *root));
      }
    CHECK(count == static_cast<long>(g.edges.size()));
  }
}

TEST_CASE("parabolic interval [0, -2a] matches the closed label formula") {
  auto rs = build_root_system("A1");
  auto ball = build_weyl_ball(rs, 5);
  auto g = parabolic_graph_alcoves(rs, ball, aff_identity(1), from_word(rs, {0, 1, 0, 1}));
  check_moment_graph_axioms(g);
  REQUIRE(g.verts.size() == 5);
  CHECK(g.edges.size() == 10);  // fully connected on five vertices
  std::set<long> values;
  for (const auto& v : g.verts) values.insert(a1_lattice_value(rs, v.elt));
  CHECK(values == std::set<long>({-2, -1, 0, 1, 2}));
  for (const auto& e : g.edges) {
    long n = a1_lattice_value(rs, g.verts[e.from].elt);
    long m = a1_lattice_value(rs, g.verts[e.to].elt);
    // positive normalization of -alpha + (n+m)c
    AffineCorootVec want = (n + m > 0) ? acv({-1}, n + m) : acv({1}, -(n + m));
    CHECK(e.label == want);
  }
  // order: |n| < |m|, or n = -m > 0
  for (const auto& u : g.verts)
    for (const auto& v : g.verts) {
      long n = a1_lattice_value(rs, u.elt), m = a1_lattice_value(rs, v.elt);
      bool lt = std::abs(n) < std::abs(m) || (n == -m && n > 0);
      CHECK(g.leq[u.id][v.id] == (lt || u.id == v.id));
    }
}

TEST_CASE("A2 parabolic interval with an edge that is neither stable nor non-stable") {
  auto rs = build_root_system("A2");
  auto ball = build_weyl_ball(rs, 4);
  AffWeylElt top = from_word(rs, {0, 1, 2, 1});
  auto g = parabolic_graph_alcoves(rs, ball, aff_identity(2), top);
  check_moment_graph_axioms(g);
  CHECK(g.verts.size() == 7);
  CHECK(g.edges.size() == 15);
  classify_edges(g);
  const MGEdge* e = find_edge(g, aff_identity(2), from_word(rs, {0, 1}));
  REQUIRE(e != nullptr);
  CHECK(e->cls == EdgeClass::Other);
  CHECK(count_edges_of_class(g, EdgeClass::Other) >= 1);
  // translating the interval by rhov = alphav + betav removes them
  auto g1 = translated_parabolic_interval(rs, aff_identity(2), top, 1);
  CHECK(g1.verts.size() == 7);
  CHECK(count_edges_of_class(g1, EdgeClass::Other) == 0);
}

TEST_CASE("classification is exhaustive and exclusive on A1") {
  auto rs = build_root_system("A1");
  auto ball = build_weyl_ball(rs, 6);
  auto g = parabolic_graph_alcoves(rs, ball, aff_identity(1), from_word(rs, {0, 1, 0, 1, 0, 1}));
  classify_edges(g);
  CHECK(count_edges_of_class(g, EdgeClass::Other) == 0);
  CHECK(count_edges_of_class(g, EdgeClass::Unclassified) == 0);
  for (const auto& e : g.edges) {
    const auto& x = g.verts[e.from].elt;
    const auto& y = g.verts[e.to].elt;
    bool refl = reflection_root(rs, compose(inverse(x), y)).has_value();
    bool transl = translation_edge_data(rs, x, y).has_value();
    CHECK(refl != transl);  // never both, never neither
  }
}

TEST_CASE("find_m0 is zero on A1 and positive on the A2 example") {
  auto rs1 = build_root_system("A1");
  auto r1 = find_m0(rs1, aff_identity(1), from_word(rs1, {0, 1, 0, 1}), 2);
  REQUIRE(r1.m0.has_value());
  CHECK(*r1.m0 == 0);

  auto rs2 = build_root_system("A2");
  auto r2 = find_m0(rs2, aff_identity(2), from_word(rs2, {0, 1, 2, 1}), 2);
  REQUIRE(r2.m0.has_value());
  CHECK(*r2.m0 >= 1);
}

TEST_CASE("GKM condition over Q and over F3") {
  auto rs = build_root_system("A1");
  auto ball = build_weyl_ball(rs, 8);
  auto g = parabolic_graph_alcoves(rs, ball, aff_identity(1), from_word(rs, {0, 1, 0, 1, 0, 1, 0, 1}));
  CHECK(is_gkm(g, 0).ok);
  auto rep = is_gkm(g, 3);
  REQUIRE_FALSE(rep.ok);
  // witness: two labels at a common vertex congruent mod 3
  const auto& l1 = g.edges[rep.edge1].label;
  const auto& l2 = g.edges[rep.edge2].label;
  CHECK(labels_proportional_mod(rs, l1, l2, 3));
  CHECK_FALSE(labels_proportional_mod(rs, l1, l2, 0));
  CHECK_THROWS(is_gkm(g, 2));
  // the single vertex graph is vacuously GKM
  auto triv = parabolic_graph_alcoves(rs, ball, aff_identity(1), aff_identity(1));
  CHECK(triv.verts.size() == 1);
  CHECK(triv.edges.empty());
  CHECK(is_gkm(triv, 3).ok);
}

TEST_CASE("identity morphism is an isomorphism; collapse or missing preimage is not") {
  auto rs = build_root_system("A1");
  auto ball = build_weyl_ball(rs, 4);
  auto g = parabolic_graph_alcoves(rs, ball, aff_identity(1), from_word(rs, {0, 1, 0}));
  MGMorphism id;
  id.src = &g;
  id.dst = &g;
  for (const auto& v : g.verts) id.vmap.push_back(v.id);
  id.twists.assign(g.verts.size(), identity_auto(1));
  REQUIRE(derive_edge_map(id));
  CHECK(check_morphism(id).ok);
  CHECK(check_iso(id));

  // two vertices collapsing onto one
  MomentGraph pair;
  pair.type = "A1";
  pair.kind = "regular";
  pair.rs = rs;
  pair.verts = {{0, aff_identity(1), 0}, {1, simple_reflection(rs, 1), 1}};
  pair.leq = {{true, true}, {false, true}};
  MomentGraph point = pair;
  point.verts = {{0, aff_identity(1), 0}};
  point.leq = {{true}};
  MGMorphism collapse;
  collapse.src = &pair;
  collapse.dst = &point;
  collapse.vmap = {0, 0};
  collapse.twists.assign(2, identity_auto(1));
  REQUIRE(derive_edge_map(collapse));
  CHECK(check_morphism(collapse).ok);
  CHECK_FALSE(check_iso(collapse));

  // bijective on vertices but an edge of the target has no preimage
  MomentGraph pair_edge = pair;
  pair_edge.edges = {{0, 1, acv({1}, 0), EdgeClass::Unclassified}};
  MGMorphism missing;
  missing.src = &pair;
  missing.dst = &pair_edge;
  missing.vmap = {0, 1};
  missing.twists.assign(2, identity_auto(1));
  REQUIRE(derive_edge_map(missing));
  CHECK(check_morphism(missing).ok);
  CHECK_FALSE(check_iso(missing));
}

TEST_CASE("stable graph on [0, -2a] follows the sign rule") {
  auto rs = build_root_system("A1");
  auto ball = build_weyl_ball(rs, 5);
  auto g = stable_graph(rs, ball, aff_identity(1), from_word(rs, {0, 1, 0, 1}));
  check_moment_graph_axioms(g);
  CHECK(g.verts.size() == 5);
  CHECK(g.edges.size() == 6);
  auto sgn = [](long n) { return n > 0 ? 1 : -1; };  // zero counts as negative
  for (const auto& u : g.verts)
    for (const auto& v : g.verts) {
      if (u.id >= v.id) continue;
      long n = a1_lattice_value(rs, u.elt), m = a1_lattice_value(rs, v.elt);
      bool want = sgn(n) == -sgn(m);
      CHECK((find_edge(g, u.elt, v.elt) != nullptr) == want);
    }
  for (const auto& e : g.edges) {
    CHECK(e.cls == EdgeClass::Stable);
    // the label is the coroot of the positive root of the right reflection
    auto root = reflection_root(rs, compose(inverse(g.verts[e.from].elt), g.verts[e.to].elt));
    REQUIRE(root.has_value());
    CHECK(e.label == affine_coroot(rs, *root));
  }
}

TEST_CASE("periodic window equals the stable graph up to the per-vertex twist") {
  auto rs = build_root_system("A1");
  auto gb = build_generic_order(rs, 6);
  auto per = periodic_graph(rs, gb, aff_identity(1), from_word(rs, {0, 1, 0, 1}));
  check_moment_graph_axioms(per);
  CHECK(per.verts.size() == 5);
  CHECK(per.edges.size() == 6);
  auto ball = build_weyl_ball(rs, 5);
  auto stab = stable_graph(rs, ball, aff_identity(1), from_word(rs, {0, 1, 0, 1}));
  // same labels up to sign as the regular construction on the same pairs
  for (const auto& e : per.edges) {
    const MGEdge* es = find_edge(stab, per.verts[e.from].elt, per.verts[e.to].elt);
    REQUIRE(es != nullptr);
  }
  auto f = opp_iso(per, stab);
  CHECK(check_morphism(f).ok);
  CHECK(check_iso(f));
}

TEST_CASE("periodic example edge of the alcove line") {
  auto rs = build_root_system("A1");
  auto gb = build_generic_order(rs, 6);
  // the window from s1s0s1 A+ rightwards to s0s1 A+
  auto per = periodic_graph(rs, gb, from_word(rs, {1, 0, 1}), from_word(rs, {0, 1}));
  CHECK(per.verts.size() == 6);
  // every edge points rightward on the line
  for (const auto& e : per.edges) {
    Rat a = rs.pairing(alcove_point(rs, per.verts[e.from].elt), rs.simple_roots[0]);
    Rat b = rs.pairing(alcove_point(rs, per.verts[e.to].elt), rs.simple_roots[0]);
    CHECK(a < b);
  }
  // the adjacent step s1s0s1 A+ -> s1s0 A+ carries the level two label
  const MGEdge* e = find_edge(per, from_word(rs, {1, 0, 1}), from_word(rs, {1, 0}));
  REQUIRE(e != nullptr);
  CHECK(e->from == per.vertex_index(from_word(rs, {1, 0, 1})));
  CHECK(e->label == acv({1}, 2));
}

TEST_CASE("stable translation isomorphism with sigma twists") {
  auto rs = build_root_system("A1");
  auto ball = build_weyl_ball(rs, 5);
  auto src = stable_graph(rs, ball, aff_identity(1), from_word(rs, {0, 1, 0, 1}));

  SECTION("coroot translation: identity twists, labels unchanged") {
    WeightVec mu = {Rat(1)};
    AffWeylElt b = translate_alcove(rs, aff_identity(1), mu);
    AffWeylElt t = translate_alcove(rs, from_word(rs, {0, 1, 0, 1}), mu);
    auto ball2 = build_weyl_ball(rs, length(rs, t));
    auto dst = stable_graph(rs, ball2, b, t);
    auto f = stable_translation_iso(src, dst, mu);
    CHECK(check_morphism(f).ok);
    CHECK(check_iso(f));
    for (std::size_t e = 0; e < src.edges.size(); ++e)
      CHECK(dst.edges[f.emap[e]].label == src.edges[e].label);
  }

  SECTION("fundamental coweight: labels move by sigma exactly") {
    WeightVec mu = {make_rat(1, 2)};
    AffWeylElt b = translate_alcove(rs, aff_identity(1), mu);
    AffWeylElt t = translate_alcove(rs, from_word(rs, {0, 1, 0, 1}), mu);
    auto ball2 = build_weyl_ball(rs, length(rs, t));
    auto dst = stable_graph(rs, ball2, b, t);
    auto f = stable_translation_iso(src, dst, mu);
    CHECK(check_morphism(f).ok);
    CHECK(check_iso(f));
    auto sm = sigma_mu(rs, mu);
    for (std::size_t e = 0; e < src.edges.size(); ++e)
      CHECK(dst.edges[f.emap[e]].label == apply_sigma(rs, sm, src.edges[e].label));
  }
}

TEST_CASE("label translation lemma on parabolic intervals") {
  SECTION("A1, coroot and fundamental coweight shifts") {
    auto rs = build_root_system("A1");
    AffWeylElt top = from_word(rs, {0, 1, 0, 1});
    auto g = translated_parabolic_interval(rs, aff_identity(1), top, 0);
    for (WeightVec mu : {WeightVec{Rat(1)}, WeightVec{make_rat(1, 2)}, WeightVec{make_rat(5, 2)}}) {
      AffWeylElt b = translate_alcove(rs, aff_identity(1), mu);
      AffWeylElt t = translate_alcove(rs, top, mu);
      auto ball = build_weyl_ball(rs, length(rs, t));
      auto gt = parabolic_graph_alcoves(rs, ball, b, t);
      classify_edges(gt);
      auto rep = verify_label_translation(g, gt, mu);
      INFO(rep.reason);
      CHECK(rep.ok);
    }
  }
  SECTION("A2, starting from a translated interval without other edges") {
    auto rs = build_root_system("A2");
    AffWeylElt top = from_word(rs, {0, 1, 2, 1});
    auto g = translated_parabolic_interval(rs, aff_identity(2), top, 1);
    REQUIRE(count_edges_of_class(g, EdgeClass::Other) == 0);
    AffWeylElt b1 = translate_alcove(rs, aff_identity(2), rs.rho_coweight);
    AffWeylElt t1 = translate_alcove(rs, top, rs.rho_coweight);
    for (WeightVec mu : {rs.rho_coweight, rs.fund_coweights[0], rs.fund_coweights[1]}) {
      AffWeylElt b = translate_alcove(rs, b1, mu);
      AffWeylElt t = translate_alcove(rs, t1, mu);
      auto ball = build_weyl_ball(rs, length(rs, t));
      auto gt = parabolic_graph_alcoves(rs, ball, b, t);
      classify_edges(gt);
      auto rep = verify_label_translation(g, gt, mu);
      INFO(rep.reason);
      CHECK(rep.ok);
    }
  }
}

TEST_CASE("quotient and inclusion morphisms") {
  auto rs = build_root_system("A1");
  auto ball = build_weyl_ball(rs, 5);
  auto reg = bruhat_graph(rs, ball, aff_identity(1), from_word(rs, {1, 0, 1, 0}));
  auto par = parabolic_graph_alcoves(rs, ball, aff_identity(1), from_word(rs, {0, 1, 0, 1}));
  auto p = quotient_map_par(reg, par);
  CHECK(check_morphism(p).ok);
  // e maps to e, and every parabolic vertex is hit
  CHECK(p.vmap[reg.vertex_index(aff_identity(1))] == par.vertex_index(aff_identity(1)));
  std::set<int> hit(p.vmap.begin(), p.vmap.end());
  CHECK(hit.size() == par.verts.size());

  auto stab = stable_graph(rs, ball, aff_identity(1), from_word(rs, {0, 1, 0, 1}));
  classify_edges(par);
  auto inc = inclusion_g(stab, par);
  CHECK(check_morphism(inc).ok);
  for (std::size_t e = 0; e < stab.edges.size(); ++e) {
    REQUIRE(inc.emap[e] >= 0);
    CHECK(par.edges[inc.emap[e]].label == stab.edges[e].label);
    CHECK(par.edges[inc.emap[e]].cls == EdgeClass::Stable);
  }
}

TEST_CASE("JSON round-trip is byte exact and DOT export is annotated") {
  auto rs = build_root_system("A2");
  auto ball = build_weyl_ball(rs, 4);
  auto g = parabolic_graph_alcoves(rs, ball, aff_identity(2), from_word(rs, {0, 1, 2, 1}));
  classify_edges(g);
  std::string s = graph_to_json_string(g);
  auto g2 = graph_from_json_string(s);
  CHECK(graph_to_json_string(g2) == s);
  CHECK(g2.verts.size() == g.verts.size());
  for (const auto& v : g.verts) CHECK(g2.verts[v.id].elt == v.elt);
  for (int i = 0; i < static_cast<int>(g.verts.size()); ++i) CHECK(g2.leq[i] == g.leq[i]);

  std::string dot = graph_to_dot(g);
  CHECK(dot.find("digraph") != std::string::npos);
  CHECK(dot.find("style=dotted") != std::string::npos);  // the "other" edge
  CHECK(dot.find("c\"") != std::string::npos);

  // single stable vertex round-trips too
  auto one = stable_graph(rs, ball, aff_identity(2), aff_identity(2));
  CHECK(one.verts.size() == 1);
  CHECK(one.edges.empty());
  auto one2 = graph_from_json_string(graph_to_json_string(one));
  CHECK(graph_to_json_string(one2) == graph_to_json_string(one));
}

TEST_CASE("pretty labels") {
  auto rs1 = build_root_system("A1");
  CHECK(pretty_label(rs1, acv({-1}, 2)) == "-a+2c");
  CHECK(pretty_label(rs1, acv({1}, 0)) == "a");
  auto rs2 = build_root_system("A2");
  CHECK(pretty_label(rs2, acv({1, 1}, -3)) == "a+b-3c");
  CHECK(pretty_label(rs2, acv({0, 0}, 1)) == "c");
}
