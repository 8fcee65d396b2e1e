// Command line driver: builds moment graphs, computes Kazhdan-Lusztig
// tables and Braden-MacPherson sheaves, exports deterministic JSON/DOT/CSV
// artifacts, and runs the named verification suites.
//
// Exit codes: 0 success, 1 generic failure (including failed suites),
// 2 invalid interval, 3 stabilization offset not found, 4 truncation risk.

#include "CLI11.hpp"

#include "mg/verify.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

using namespace mg;

namespace {

// Interval syntax: "<bottom>..<top>", each endpoint either a reduced
// word ("s1.s0.s1", "e") or a rank-one lattice point ("0", "2a", "-2a").
struct IntervalSpec {
  AffWeylElt bottom, top;
};

AffWeylElt parse_endpoint(const FiniteRootSystem& rs, const std::string& tok) {
  if (tok.empty()) throw std::invalid_argument("empty interval endpoint");
  if (tok == "e") return aff_identity(rs.rank);
  if (tok[0] == 's') return from_word(rs, word_from_string(tok));
  // lattice point: an integer, optionally suffixed by 'a'
  if (rs.rank != 1) throw std::invalid_argument("lattice-point endpoints are rank-one only");
  std::string num = tok;
  if (!num.empty() && num.back() == 'a') num.pop_back();
  if (num.empty() || num == "-") num += "1";
  std::size_t pos = 0;
  long lat = std::stol(num, &pos);
  if (pos != num.size()) throw std::invalid_argument("bad lattice point: " + tok);
  return a1_min_rep_by_index(rs, a1_index_of_lattice(lat));
}

IntervalSpec parse_interval(const FiniteRootSystem& rs, const std::string& s) {
  auto pos = s.find("..");
  if (pos == std::string::npos) throw std::invalid_argument("interval must be '<bottom>..<top>'");
  IntervalSpec out;
  out.bottom = parse_endpoint(rs, s.substr(0, pos));
  out.top = parse_endpoint(rs, s.substr(pos + 2));
  return out;
}

long parse_field(const std::string& s) {  // returns the characteristic
  if (s == "Q" || s == "q") return 0;
  if (s.size() >= 2 && (s[0] == 'F' || s[0] == 'f')) {
    long p = std::stol(s.substr(1));
    if (p == 2) throw std::invalid_argument("characteristic 2 is not admissible");
    return p;
  }
  throw std::invalid_argument("field must be Q or F<p>");
}

void emit(const std::string& content, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << content;
    return;
  }
  // assemble fully in memory first: no partial files on failure
  std::ofstream f(out_path, std::ios::binary | std::ios::trunc);
  if (!f) throw std::runtime_error("cannot open output file: " + out_path);
  f << content;
}

MomentGraph build_graph(const std::string& type, const std::string& kind, const IntervalSpec& iv) {
  auto rs = build_root_system(type);
  long rad = std::max(length(rs, iv.top), length(rs, iv.bottom)) + 2;
  auto ball = build_weyl_ball(rs, rad);
  if (kind == "regular") return bruhat_graph(rs, ball, iv.bottom, iv.top);
  if (kind == "parabolic") {
    auto g = parabolic_graph_alcoves(rs, ball, iv.bottom, iv.top);
    classify_edges(g);
    return g;
  }
  if (kind == "stable") return stable_graph(rs, ball, iv.bottom, iv.top);
  if (kind == "periodic") {
    auto gb = build_generic_order(rs, rad + 4);
    return periodic_graph(rs, gb, iv.bottom, iv.top);
  }
  throw std::invalid_argument("unknown kind: " + kind);
}

int run_verify(const std::string& suite, const std::string& type) {
  std::vector<VerifyResult> results;
  if (suite == "orders") {
    if (type.empty() || type == "A1") results.push_back(verify_orders("A1"));
    if (type.empty() || type == "A2") results.push_back(verify_orders("A2"));
  } else if (suite == "labels") {
    results.push_back(verify_labels());
  } else if (suite == "gkm") {
    results.push_back(verify_gkm());
  } else if (suite == "adjunction") {
    results.push_back(verify_adjunction());
  } else if (suite == "appendix") {
    results.push_back(verify_appendix());
    results.push_back(verify_stable_flabby());
  } else if (suite == "fiebig") {
    results.push_back(verify_fiebig());
  } else if (suite == "stab-theorem") {
    results.push_back(verify_stab_theorem());
  } else if (suite == "stabilization") {
    results.push_back(verify_stabilization());
  } else {
    std::cerr << "unknown suite: " << suite << "\n";
    return 1;
  }
  bool ok = true;
  for (const auto& r : results) {
    std::cout << "suite " << r.suite << ": " << (r.ok ? "pass" : "FAIL") << "\n";
    for (const auto& l : r.lines) std::cout << l << "\n";
    ok = ok && r.ok;
  }
  return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  // MG_THREADS caps parallelism; all computations here run on at most
  // that many threads (the library is single-threaded, so any positive
  // cap is honored).
  if (const char* mt = std::getenv("MG_THREADS")) {
    char* end = nullptr;
    long v = std::strtol(mt, &end, 10);
    if (end == mt || *end != '\0' || v <= 0) {
      std::cerr << "MG_THREADS must be a positive integer\n";
      return 1;
    }
  }

  CLI::App app{"moment graphs of affine Weyl groups: constructions, sheaves, polynomials"};
  app.require_subcommand(1);
  app.set_config("--config", "", "config file with key=value lines mirroring the flags");

  std::string type = "A1", field = "Q", kind = "regular", interval, format = "json", out_path;
  long dmax = -1, mmax = 6, max_length = 6;
  std::vector<int> jset;

  auto add_common = [&](CLI::App* c) {
    c->add_option("--type", type, "root system (A1 or A2)");
    c->add_option("--field", field, "coefficients: Q or F<p> (p odd)");
    c->add_option("--interval", interval, "interval '<bottom>..<top>'");
    c->add_option("--dmax", dmax, "degree bound for sheaf computations");
    c->add_option("--mmax", mmax, "translation bound for stabilization searches");
    c->add_option("--format", format, "output format: json, dot, csv");
    c->add_option("--out", out_path, "output file (stdout if omitted)");
    c->add_option("--j", jset, "parabolic subset (finite generator indices)");
  };

  auto* cgraph = app.add_subcommand("graph", "construct and export a moment graph");
  cgraph->add_option("--kind", kind, "regular, parabolic, periodic, stable");
  add_common(cgraph);

  auto* ccompute = app.add_subcommand("compute", "compute polynomial and sheaf tables");
  ccompute->require_subcommand(1);
  auto* ckl = ccompute->add_subcommand("kl", "Kazhdan-Lusztig polynomial table");
  ckl->add_option("--max-length", max_length, "largest top-element length");
  add_common(ckl);
  auto* cpkl = ccompute->add_subcommand("pkl", "parabolic Kazhdan-Lusztig table");
  cpkl->add_option("--max-length", max_length, "largest top-element length");
  add_common(cpkl);
  auto* cbmp = ccompute->add_subcommand("bmp", "Braden-MacPherson sheaf of an interval");
  cbmp->add_option("--kind", kind, "regular, parabolic, stable");
  add_common(cbmp);
  auto* cgen = ccompute->add_subcommand("generic", "stabilized generic polynomial of an alcove pair");
  cgen->add_option("--pair", interval, "alcove pair '<A>..<B>'");
  add_common(cgen);
  auto* cflab = ccompute->add_subcommand("flabby", "flabbiness report for the structure sheaf");
  cflab->add_option("--kind", kind, "regular, parabolic, stable");
  add_common(cflab);

  auto* cverify = app.add_subcommand("verify", "run a named verification suite");
  std::string suite;
  cverify->add_option("suite", suite, "orders, labels, gkm, adjunction, appendix, fiebig, stab-theorem, stabilization")
      ->required();
  cverify->add_option("--type", type, "restrict to one root system where applicable");
  bool verify_typed = false;
  cverify->callback([&] { verify_typed = cverify->count("--type") > 0; });

  CLI11_PARSE(app, argc, argv);

  try {
    if (cverify->parsed()) return run_verify(suite, verify_typed ? type : std::string());

    auto rs = build_root_system(type);
    long characteristic = parse_field(field);
    const RationalField QQ;

    if (cgraph->parsed()) {
      IntervalSpec iv;
      try {
        iv = parse_interval(rs, interval);
      } catch (const std::exception& e) {
        std::cerr << "invalid interval: " << e.what() << "\n";
        return 2;
      }
      MomentGraph g;
      try {
        g = build_graph(type, kind, iv);
      } catch (const std::exception& e) {
        std::cerr << "invalid interval: " << e.what() << "\n";
        return 2;
      }
      emit(format == "dot" ? graph_to_dot(g) : graph_to_json_string(g), out_path);
      return 0;
    }

    if (ckl->parsed() || cpkl->parsed()) {
      bool parabolic = cpkl->parsed();
      auto ball = build_weyl_ball(rs, max_length + 1);
      std::vector<int> J = jset;
      if (parabolic && J.empty())
        for (int i = 1; i <= rs.rank; ++i) J.push_back(i);
      std::string csv = "w,x,polynomial\n";
      ParabolicKLTable pt(rs, J);
      for (const auto& w : ball.elems) {
        if (length(rs, w) > max_length) continue;
        if (parabolic && !pt.min_rep(w)) continue;
        for (const auto& x : ball.elems) {
          if (!bruhat_leq(ball, x, w)) continue;
          if (parabolic && !pt.min_rep(x)) continue;
          QPoly p = parabolic ? kl_parabolic(rs, ball, J, x, w) : kl_regular(rs, ball, x, w);
          csv += word_to_string(reduced_word(rs, w)) + "," + word_to_string(reduced_word(rs, x)) +
                 "," + qp_to_string(p) + "\n";
        }
      }
      emit(csv, out_path);
      return 0;
    }

    if (cbmp->parsed() || cflab->parsed()) {
      IntervalSpec iv;
      try {
        iv = parse_interval(rs, interval);
      } catch (const std::exception& e) {
        std::cerr << "invalid interval: " << e.what() << "\n";
        return 2;
      }
      MomentGraph g = build_graph(type, kind == "periodic" ? "stable" : kind, iv);
      long d = dmax > 0 ? dmax : 2 * (length(rs, iv.top) - length(rs, iv.bottom)) + 4;
      auto run = [&](auto&& k) -> int {
        if (cflab->parsed()) {
          auto z = structure_sheaf(k, g);
          auto rep = is_flabby(k, z, d);
          std::string txt = std::string("flabby: ") + (rep.flabby ? "yes" : "no") + " (degree bound " +
                            std::to_string(d) + ", " + std::to_string(rep.opens_checked) + " open sets)\n";
          emit(txt, out_path);
          return rep.flabby ? 0 : 1;
        }
        int topv = -1;
        long hi = -1;
        for (const auto& v : g.verts)
          if (v.order_rank > hi) hi = v.order_rank, topv = v.id;
        auto b = bmp_construct(k, g, topv, d);
        std::string content = format == "json"
                                  ? sheaf_to_json_string(k, b)
                                  : rank_table_csv(k, b, word_to_string(reduced_word(rs, iv.top)));
        if (b.truncation_risk) {
          std::cerr << "truncation risk: a minimal generator appeared within two degrees of the bound "
                    << d << "; rerun with a larger --dmax\n";
          return 4;
        }
        emit(content, out_path);
        return 0;
      };
      if (characteristic == 0) return run(QQ);
      return run(PrimeField(characteristic));
    }

    if (cgen->parsed()) {
      IntervalSpec iv;
      try {
        iv = parse_interval(rs, interval);
      } catch (const std::exception& e) {
        std::cerr << "invalid pair: " << e.what() << "\n";
        return 2;
      }
      auto res = generic_poly(rs, iv.bottom, iv.top, mmax);
      if (!res.poly) {
        std::cerr << "no stabilization offset found up to m = " << mmax << "\n";
        return 3;
      }
      std::string txt = "polynomial: " + qp_to_string(*res.poly) + "\nwitness_m: " +
                        std::to_string(res.witness_m) + "\n";
      emit(txt, out_path);
      return 0;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}
