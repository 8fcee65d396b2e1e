#pragma once

// Deterministic serialization of sheaves: a JSON dump with per-vertex
// shift multisets, per-edge modules (shifts, annihilating label,
// restriction matrices as polynomial strings), and CSV rank tables.

#include "mg/graphs_io.hpp"
#include "mg/polys.hpp"
#include "mg/sheaves.hpp"

#include <string>
#include <vector>

namespace mg {

template <class K>
std::string elem_to_string(const K&, const typename K::Elem& e) {
  if constexpr (std::is_same_v<typename K::Elem, Rat>) {
    return rat_to_string(e);
  } else {
    return std::to_string(e);
  }
}

inline std::vector<std::string> poly_var_names(int nvars) {
  std::vector<std::string> names;
  if (nvars == 2)
    names = {"a", "c"};
  else if (nvars == 3)
    names = {"a", "b", "c"};
  else
    for (int i = 0; i < nvars; ++i) names.push_back("x" + std::to_string(i));
  return names;
}

// Deterministic text form: terms in the fixed monomial order per degree,
// degrees ascending.
template <class K>
std::string poly_to_string(const K& k, const Poly<K>& p, int nvars) {
  if (p.is_zero()) return "0";
  auto names = poly_var_names(nvars);
  // bucket by degree, then use the shared lexicographic monomial order
  std::map<int, std::vector<std::pair<Mono, typename K::Elem>>> by_deg;
  for (const auto& [m, c] : p.terms) by_deg[mono_degree(m)].push_back({m, c});
  std::string out;
  for (auto& [deg, terms] : by_deg) {
    const auto& order = monomials_of_degree(nvars, deg);
    for (const auto& mono : order) {
      for (const auto& [m, c] : terms) {
        if (m != mono) continue;
        std::string cs = elem_to_string(k, c);
        bool neg = !cs.empty() && cs[0] == '-';
        if (!out.empty()) out += neg ? " - " : " + ";
        else if (neg)
          out += "-";
        if (neg) cs = cs.substr(1);
        std::string vars;
        for (int v = 0; v < nvars; ++v) {
          if (m[v] == 0) continue;
          if (!vars.empty()) vars += "*";
          vars += names[v];
          if (m[v] > 1) vars += "^" + std::to_string(m[v]);
        }
        if (vars.empty()) {
          out += cs;
        } else {
          if (cs != "1") out += cs + "*";
          out += vars;
        }
      }
    }
  }
  return out;
}

inline Json auto_to_json(const LatticeAuto& m) {
  Json rows = Json::array();
  for (const auto& r : m) {
    Json row = Json::array();
    for (const auto& v : r) row.push_back(rat_to_string(v));
    rows.push_back(row);
  }
  return rows;
}

template <class K>
Json sheaf_to_json(const K& k, const Sheaf<K>& f) {
  Json out;
  out["graph_kind"] = f.g->kind;
  out["type"] = f.g->type;
  out["nvars"] = f.nvars;
  out["truncation_risk"] = f.truncation_risk;
  Json stalks = Json::array();
  for (std::size_t x = 0; x < f.stalks.size(); ++x) {
    Json jx;
    jx["vertex"] = static_cast<int>(x);
    jx["word"] = word_to_string(reduced_word(f.g->rs, f.g->verts[x].elt));
    Json shifts = Json::array();
    for (long s : f.stalks[x]) shifts.push_back(s);
    jx["shifts"] = shifts;
    jx["rank"] = gr_to_string(sheaf_stalk_rank(f, static_cast<int>(x)));
    if (f.twists[x]) jx["twist"] = auto_to_json(*f.twists[x]);
    stalks.push_back(jx);
  }
  out["stalks"] = stalks;
  Json edges = Json::array();
  for (std::size_t e = 0; e < f.edges.size(); ++e) {
    const auto& se = f.edges[e];
    Json je;
    je["from"] = f.g->edges[e].from;
    je["to"] = f.g->edges[e].to;
    je["annihilator"] = pretty_label(f.g->rs, f.g->edges[e].label);
    Json shifts = Json::array();
    if (se.present())
      for (long s : se.gdeg) shifts.push_back(s);
    je["shifts"] = shifts;
    auto mat_json = [&](const std::vector<std::vector<Poly<K>>>& m) {
      Json rows = Json::array();
      for (const auto& r : m) {
        Json row = Json::array();
        for (const auto& p : r) row.push_back(poly_to_string(k, p, f.nvars));
        rows.push_back(row);
      }
      return rows;
    };
    je["rho_from"] = mat_json(se.rho_from);
    je["rho_to"] = mat_json(se.rho_to);
    if (se.twist) je["twist"] = auto_to_json(*se.twist);
    edges.push_back(je);
  }
  out["edges"] = edges;
  return out;
}

template <class K>
std::string sheaf_to_json_string(const K& k, const Sheaf<K>& f) {
  return sheaf_to_json(k, f).dump(2) + "\n";
}

// CSV table of graded stalk ranks: one row per vertex of the sheaf.
template <class K>
std::string rank_table_csv(const K&, const Sheaf<K>& f, const std::string& top_word) {
  std::string out = "w,x,rank\n";
  for (std::size_t x = 0; x < f.stalks.size(); ++x) {
    out += top_word + "," + word_to_string(reduced_word(f.g->rs, f.g->verts[x].elt)) + "," +
           gr_to_string(sheaf_stalk_rank(f, static_cast<int>(x))) + "\n";
  }
  return out;
}

// CSV table of Kazhdan-Lusztig polynomials against a fixed top element.
inline std::string kl_table_csv(const FiniteRootSystem& rs, const WeylBall& ball,
                                const std::vector<AffWeylElt>& xs, const AffWeylElt& w,
                                bool parabolic, const std::vector<int>& J) {
  std::string out = "w,x,polynomial\n";
  std::string ws = word_to_string(reduced_word(rs, w));
  for (const auto& x : xs) {
    QPoly p = parabolic ? kl_parabolic(rs, ball, J, x, w) : kl_regular(rs, ball, x, w);
    out += ws + "," + word_to_string(reduced_word(rs, x)) + "," + qp_to_string(p) + "\n";
  }
  return out;
}

}  // namespace mg
