#pragma once

// Serialization of moment graphs: a JSON format with bit-exact
// round-trip, and DOT export with edge-class styling for quick
// inspection.

#include "mg/graphs.hpp"

#include <nlohmann/json.hpp>

#include <sstream>
#include <string>
#include <vector>

namespace mg {

using Json = nlohmann::ordered_json;

inline std::vector<std::string> lattice_basis_names(const FiniteRootSystem& rs) {
  if (rs.rank == 1) return {"alphav", "c"};
  return {"alphav", "betav", "c"};
}

inline std::string word_to_string(const std::vector<int>& w) {
  if (w.empty()) return "e";
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) out += '.';
    out += 's';
    out += std::to_string(w[i]);
  }
  return out;
}

inline std::vector<int> word_from_string(const std::string& s) {
  if (s == "e") return {};
  std::vector<int> out;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, '.')) {
    if (tok.size() < 2 || tok[0] != 's') throw std::invalid_argument("bad word token: " + tok);
    out.push_back(std::stoi(tok.substr(1)));
  }
  return out;
}

// Reduced word of the finite part in the finite generators s1..s_rank.
inline std::vector<int> finite_word(const FiniteRootSystem& rs, const FinMat& m) {
  std::vector<std::pair<FinMat, std::vector<int>>> frontier = {{fin_identity(rs.rank), {}}};
  std::set<FinMat> seen = {fin_identity(rs.rank)};
  while (!frontier.empty()) {
    std::vector<std::pair<FinMat, std::vector<int>>> next;
    for (const auto& [mat, w] : frontier) {
      if (mat == m) return w;
      for (int i = 1; i <= rs.rank; ++i) {
        FinMat y = fin_mul(mat, rs.simple_refl[i - 1]);
        if (seen.insert(y).second) {
          auto w2 = w;
          w2.push_back(i);
          next.push_back({y, w2});
        }
      }
    }
    frontier.swap(next);
  }
  throw std::logic_error("finite_word: matrix is not in the finite Weyl group");
}

inline Json label_to_json(const FiniteRootSystem& rs, const AffineCorootVec& l) {
  Json out = Json::array();
  for (int i = 0; i < rs.rank; ++i) out.push_back(rat_to_string(l.finite[i]));
  out.push_back(rat_to_string(l.c));
  return out;
}

inline AffineCorootVec label_from_json(const FiniteRootSystem& rs, const Json& j) {
  AffineCorootVec out;
  out.finite.assign(rs.rank, Rat(0));
  for (int i = 0; i < rs.rank; ++i) out.finite[i] = rat_from_string(j.at(i).get<std::string>());
  out.c = rat_from_string(j.at(rs.rank).get<std::string>());
  return out;
}

inline EdgeClass edge_class_from_name(const std::string& s) {
  if (s == "stable") return EdgeClass::Stable;
  if (s == "non-stable") return EdgeClass::NonStable;
  if (s == "other") return EdgeClass::Other;
  return EdgeClass::Unclassified;
}

inline Json graph_to_json(const MomentGraph& g) {
  Json out;
  out["type"] = g.type;
  out["kind"] = g.kind;
  out["lattice_basis"] = lattice_basis_names(g.rs);
  Json verts = Json::array();
  for (const auto& v : g.verts) {
    Json jv;
    jv["id"] = v.id;
    jv["word"] = word_to_string(reduced_word(g.rs, v.elt));
    Json tr = Json::array();
    for (long t : v.elt.tr) tr.push_back(rat_to_string(Rat(t)));
    jv["translation"] = tr;
    jv["finite_word"] = word_to_string(finite_word(g.rs, v.elt.mat));
    jv["order_rank"] = v.order_rank;
    verts.push_back(jv);
  }
  out["vertices"] = verts;
  Json order = Json::array();
  for (auto [lo, hi] : g.cover_pairs()) order.push_back(Json::array({lo, hi}));
  out["order"] = order;
  Json edges = Json::array();
  for (const auto& e : g.edges) {
    Json je;
    je["from"] = e.from;
    je["to"] = e.to;
    je["label"] = label_to_json(g.rs, e.label);
    je["class"] = edge_class_name(e.cls);
    edges.push_back(je);
  }
  out["edges"] = edges;
  return out;
}

inline std::string graph_to_json_string(const MomentGraph& g) { return graph_to_json(g).dump(2) + "\n"; }

inline MomentGraph graph_from_json(const Json& j) {
  MomentGraph g;
  g.type = j.at("type").get<std::string>();
  g.kind = j.at("kind").get<std::string>();
  g.rs = build_root_system(g.type);
  for (const auto& jv : j.at("vertices")) {
    MGVertex v;
    v.id = jv.at("id").get<int>();
    std::vector<long> tr;
    for (const auto& t : jv.at("translation")) tr.push_back(to_long(numerator(rat_from_string(t.get<std::string>()))));
    AffWeylElt fin = aff_identity(g.rs.rank);
    for (int i : word_from_string(jv.at("finite_word").get<std::string>())) fin = compose(fin, simple_reflection(g.rs, i));
    v.elt = {tr, fin.mat};
    v.order_rank = jv.at("order_rank").get<long>();
    g.verts.push_back(v);
  }
  int n = static_cast<int>(g.verts.size());
  g.leq.assign(n, std::vector<bool>(n, false));
  for (int i = 0; i < n; ++i) g.leq[i][i] = true;
  for (const auto& p : j.at("order")) g.leq[p.at(0).get<int>()][p.at(1).get<int>()] = true;
  // transitive closure of the stored cover pairs
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i)
      for (int jj = 0; jj < n; ++jj)
        if (g.leq[i][k] && g.leq[k][jj]) g.leq[i][jj] = true;
  for (const auto& je : j.at("edges")) {
    MGEdge e;
    e.from = je.at("from").get<int>();
    e.to = je.at("to").get<int>();
    e.label = label_from_json(g.rs, je.at("label"));
    e.cls = edge_class_from_name(je.at("class").get<std::string>());
    g.edges.push_back(e);
  }
  return g;
}

inline MomentGraph graph_from_json_string(const std::string& s) { return graph_from_json(Json::parse(s)); }

// Human-readable label like "-a+2c" (A1) or "a+b-3c" (A2).
inline std::string pretty_label(const FiniteRootSystem& rs, const AffineCorootVec& l) {
  std::vector<std::string> names;
  if (rs.rank == 1)
    names = {"a"};
  else
    names = {"a", "b"};
  names.push_back("c");
  std::vector<Rat> coords(l.finite);
  coords.push_back(l.c);
  std::string out;
  for (std::size_t i = 0; i < coords.size(); ++i) {
    const Rat& v = coords[i];
    if (v == 0) continue;
    if (v > 0 && !out.empty()) out += '+';
    if (v == -1)
      out += '-';
    else if (v != 1)
      out += rat_to_string(v);
    out += names[i];
  }
  return out.empty() ? "0" : out;
}

inline std::string graph_to_dot(const MomentGraph& g) {
  std::string out = "digraph G {\n  rankdir=BT;\n  node [shape=box, fontname=\"monospace\"];\n";
  for (const auto& v : g.verts) {
    out += "  v" + std::to_string(v.id) + " [label=\"" + word_to_string(reduced_word(g.rs, v.elt)) + "\"];\n";
  }
  for (const auto& e : g.edges) {
    std::string attrs;
    switch (e.cls) {
      case EdgeClass::Stable: attrs = "style=solid"; break;
      case EdgeClass::NonStable: attrs = "style=dashed"; break;
      case EdgeClass::Other: attrs = "style=dotted, color=red"; break;
      default: attrs = "style=solid, color=gray"; break;
    }
    out += "  v" + std::to_string(e.from) + " -> v" + std::to_string(e.to) + " [label=\"" +
           pretty_label(g.rs, e.label) + "\", " + attrs + "];\n";
  }
  out += "}\n";
  return out;
}

}  // namespace mg
