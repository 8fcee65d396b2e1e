#include <catch2/catch_amalgamated.hpp>

#include "mg/roots.hpp"

using namespace mg;

TEST_CASE("A1 root system data") {
  auto rs = build_root_system("A1");
  CHECK(rs.rank == 1);
  CHECK(rs.form(rs.simple_roots[0], rs.simple_roots[0]) == 2);
  CHECK(rs.pairing(rs.fund_coweights[0], rs.simple_roots[0]) == 1);
  CHECK(rs.positive_roots.size() == 1);
}

TEST_CASE("A2 root system data") {
  auto rs = build_root_system("A2");
  CHECK(rs.rank == 2);
  // Cartan pairings <alpha_i, alphav_j>
  CHECK(rs.pairing(rs.simple_roots[0], rs.simple_roots[1]) == -1);
  CHECK(rs.form(rs.highest_root, rs.highest_root) == 2);
  // theta = alpha + beta, <omega_i, alphav_j> = delta_ij
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      CHECK(rs.pairing(rs.fund_coweights[i], rs.simple_roots[j]) == ((i == j) ? 1 : 0));
  CHECK(rs.positive_roots.size() == 3);
  // interior point lies in the fundamental alcove
  for (const auto& alpha : rs.simple_roots) CHECK(rs.pairing(rs.interior_point, alpha) > 0);
  CHECK(rs.pairing(rs.interior_point, rs.highest_root) < 1);
}

TEST_CASE("affine coroot formula (alpha + n delta)v = alphav + n c for simply laced") {
  auto rs = build_root_system("A2");
  AffineRoot r{rs.positive_roots[2], 3};  // theta + 3 delta
  auto cv = affine_coroot(rs, r);
  CHECK(cv.finite == rs.highest_root);
  CHECK(cv.c == 3);
  // negative root
  AffineRoot neg{wv_scale(rs.simple_roots[0], Rat(-1)), 2};
  auto cvn = affine_coroot(rs, neg);
  CHECK(cvn.finite[0] == -1);
  CHECK(cvn.c == 2);
}

TEST_CASE("affine reflection formula") {
  auto rs = build_root_system("A1");
  // s_{alpha + n delta}(lambda) = s_alpha(lambda) - n alphav
  AffineRoot r{rs.simple_roots[0], 2};
  WeightVec lam = {make_rat(3, 1)};
  auto img = affine_reflect(rs, r, lam);
  CHECK(img[0] == -5);  // -3 - 2
  // reflection fixes its hyperplane (lambda, alpha) = -n
  WeightVec fix = {make_rat(-1, 1)};  // (fix, alpha) = -2
  CHECK(affine_reflect(rs, r, fix) == fix);
}

TEST_CASE("affine root positivity") {
  auto rs = build_root_system("A1");
  CHECK(affine_root_positive(rs, {rs.simple_roots[0], 0}));
  CHECK_FALSE(affine_root_positive(rs, {wv_scale(rs.simple_roots[0], Rat(-1)), 0}));
  CHECK(affine_root_positive(rs, {wv_scale(rs.simple_roots[0], Rat(-1)), 1}));
  CHECK_FALSE(affine_root_positive(rs, {rs.simple_roots[0], -1}));
}

TEST_CASE("lattice membership and Omega classes") {
  auto rs1 = build_root_system("A1");
  WeightVec half = {make_rat(1, 2)};
  CHECK(in_coweight_lattice(rs1, half));
  CHECK_FALSE(in_coroot_lattice(rs1, half));
  CHECK(omega_class(rs1, half) == rs1.omega_reps[1]);
  CHECK(omega_class(rs1, {Rat(3)}) == rs1.omega_reps[0]);

  auto rs2 = build_root_system("A2");
  CHECK(in_coroot_lattice(rs2, rs2.rho_coweight));  // rhov = alphav + betav in A2
  CHECK(omega_class(rs2, rs2.fund_coweights[0]) == rs2.omega_reps[1]);
  CHECK(omega_class(rs2, wv_add(rs2.fund_coweights[0], rs2.fund_coweights[0])) == rs2.omega_reps[2]);
}
