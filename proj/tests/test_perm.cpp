#include <doctest.h>

#include "pifit/perm.hpp"

using namespace pifit;

TEST_SUITE_BEGIN("perm");

TEST_CASE("cycle parsing basics") {
  Perm t = parse_perm("(1 2)", 4);
  CHECK(t[0] == 1);
  CHECK(t[1] == 0);
  CHECK(t[2] == 2);
  CHECK(t[3] == 3);

  Perm id = parse_perm("()", 3);
  CHECK(id.is_identity());
  CHECK(id.degree() == 3);

  Perm four = parse_perm("(1 2 3 4)", 4);
  Perm p = four;
  for (int i = 0; i < 3; ++i) p = p.then(four);
  CHECK(p.is_identity());
  CHECK(four.order() == 4);
}

TEST_CASE("multi-cycle input and formatting") {
  Perm p = parse_perm("(1 2)(3 4 5)", 5);
  CHECK(p.order() == 6);
  CHECK(p.to_cycles() == "(1 2)(3 4 5)");
  CHECK(parse_perm(p.to_cycles(), 5) == p);
  CHECK(Perm::identity(4).to_cycles() == "()");
}

TEST_CASE("parse errors") {
  CHECK_THROWS_AS(parse_perm("(1 5)", 4), ParseError);   // point exceeds degree
  CHECK_THROWS_AS(parse_perm("(1 2)(2 3)", 4), ParseError);  // repeated point
  CHECK_THROWS_AS(parse_perm("(1 2", 4), ParseError);
  CHECK_THROWS_AS(parse_perm("1 2", 4), ParseError);
  CHECK_THROWS_AS(parse_perm("(0 1)", 4), ParseError);
  CHECK_THROWS_AS(parse_perm("", 4), ParseError);
}

TEST_CASE("compose and inverse") {
  Perm a = parse_perm("(1 2 3)", 5);
  Perm b = parse_perm("(3 4 5)", 5);
  CHECK(a.then(a.inverse()).is_identity());
  CHECK(b.inverse().then(b).is_identity());
  // composition applies left operand first
  Perm ab = a.then(b);
  CHECK(ab[0] == 1);  // point 1 -> 2 under a, fixed by b
  CHECK(ab[1] == 3);  // point 2 -> 3 under a, -> 4 under b
}

TEST_CASE("image-vector constructor validates bijection") {
  CHECK_THROWS_AS(Perm(std::vector<Point>{0, 0, 1}), DomainError);
  CHECK_THROWS_AS(Perm(std::vector<Point>{0, 3}), DomainError);
}

TEST_SUITE_END();
