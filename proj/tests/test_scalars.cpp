#include <catch2/catch_amalgamated.hpp>

#include "mg/field.hpp"
#include "mg/gpoly.hpp"
#include "mg/linalg.hpp"
#include "mg/rational.hpp"

using namespace mg;

TEST_CASE("rational parsing and formatting round-trip") {
  CHECK(rat_to_string(make_rat(3, 6)) == "1/2");
  CHECK(rat_to_string(make_rat(-4, 2)) == "-2");
  CHECK(rat_from_string("7/3") == make_rat(7, 3));
  CHECK(rat_from_string("-5") == make_rat(-5));
  CHECK(rat_to_string(rat_from_string("-22/7")) == "-22/7");
  CHECK_THROWS(rat_from_string("1/0"));
}

TEST_CASE("floor and ceiling on negatives") {
  CHECK(rat_floor(make_rat(-3, 2)) == -2);
  CHECK(rat_ceil(make_rat(-3, 2)) == -1);
  CHECK(rat_floor(make_rat(4, 2)) == 2);
  CHECK(rat_ceil(make_rat(4, 2)) == 2);
}

TEST_CASE("prime field arithmetic") {
  PrimeField f5(5);
  CHECK(f5.add(3, 4) == 2);
  CHECK(f5.mul(f5.inv(3), 3) == 1);
  CHECK(f5.from_rat(make_rat(1, 2)) == 3);  // 1/2 = 3 mod 5
  CHECK_THROWS(PrimeField(2));              // characteristic 2 rejected
  CHECK_THROWS(PrimeField(9));              // not prime
}

TEST_CASE("rref, rank, nullspace over Q") {
  RationalField Q;
  Mat<RationalField> m = {{Rat(1), Rat(2), Rat(3)}, {Rat(2), Rat(4), Rat(6)}, {Rat(1), Rat(0), Rat(1)}};
  CHECK(rank(Q, m) == 2);
  auto ns = nullspace(Q, m, 3);
  REQUIRE(ns.size() == 1);
  // verify the kernel vector
  for (const auto& row : m) {
    Rat acc = 0;
    for (int j = 0; j < 3; ++j) acc += row[j] * ns[0][j];
    CHECK(acc == 0);
  }
}

TEST_CASE("solve consistent and inconsistent systems") {
  RationalField Q;
  Mat<RationalField> m = {{Rat(1), Rat(1)}, {Rat(1), Rat(-1)}};
  auto x = solve(Q, m, {Rat(3), Rat(1)});
  REQUIRE(x.has_value());
  CHECK((*x)[0] == 2);
  CHECK((*x)[1] == 1);
  Mat<RationalField> sing = {{Rat(1), Rat(1)}, {Rat(2), Rat(2)}};
  CHECK_FALSE(solve(Q, sing, {Rat(0), Rat(1)}).has_value());
  CHECK(in_span(Q, m, {Rat(5), Rat(7)}));
}

TEST_CASE("polynomial arithmetic and slices") {
  RationalField Q;
  // (x0 + x1)^2 = x0^2 + 2 x0 x1 + x1^2
  auto p = poly_add(Q, poly_var(Q, 2, 0), poly_var(Q, 2, 1));
  auto sq = poly_mul(Q, p, p);
  CHECK(sq.degree() == 2);
  auto coords = poly_coords(Q, sq, 2, 2);
  REQUIRE(coords.size() == 3);
  Rat sum = 0;
  for (auto& c : coords) sum += c;
  CHECK(sum == 4);
  CHECK(poly_eq(Q, poly_from_coords(Q, coords, 2, 2), sq));

  // substitution: set x0 = -x1 kills x0 + x1
  auto repl = poly_neg(Q, poly_var(Q, 2, 1));
  CHECK(poly_subst_var(Q, p, 0, repl).is_zero());

  // exact division
  Poly<RationalField> quot;
  REQUIRE(poly_divide(Q, sq, p, quot));
  CHECK(poly_eq(Q, quot, p));
  CHECK_FALSE(poly_divide(Q, poly_var(Q, 2, 0), p, quot));
}

TEST_CASE("monomial enumeration is deterministic and complete") {
  const auto& m2 = monomials_of_degree(3, 2);
  CHECK(m2.size() == 6);
  for (const auto& m : m2) CHECK(mono_degree(m) == 2);
  for (std::size_t i = 0; i < m2.size(); ++i) CHECK(monomial_index(3, m2[i]) == static_cast<int>(i));
}
