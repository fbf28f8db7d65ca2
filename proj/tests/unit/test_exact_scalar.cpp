#include "doctest.h"
#include "hopflab/parse.hpp"
#include "hopflab/ratfunc.hpp"
#include "hopflab/roots.hpp"
#include "hopflab/surd.hpp"

using namespace hopf;

TEST_CASE("rational normal form") {
  CHECK(Rational(2, 4) == Rational(1, 2));
  CHECK(Rational(2, 4).str() == "1/2");
  CHECK_THROWS_AS(Rational(1, 0), DomainError);
  CHECK(Rational::parse("-6/4") == Rational(-3, 2));
  CHECK(Rational::parse("1.25") == Rational(5, 4));
}

TEST_CASE("radical normal form") {
  auto s8 = parse_radical("sqrt(8)");
  CHECK(s8 == parse_radical("2*sqrt(2)"));
  CHECK(s8.str() == "2*sqrt(2)");
  auto a = parse_radical("sqrt(2)*sqrt(3)-sqrt(6)");
  CHECK(a.is_zero());
  CHECK(parse_radical("sqrt(5+2*sqrt(6))") == parse_radical("sqrt(2)+sqrt(3)"));
  CHECK_THROWS_AS(parse_radical("1/0"), DomainError);
  CHECK_THROWS_AS(parse_radical("sqrt(-2)"), DomainError);
}

TEST_CASE("radical signs") {
  CHECK(sign(parse_radical("sqrt(2)+sqrt(3)-3")) == 1);
  CHECK(sign(parse_radical("1-sqrt(2)")) == -1);
  auto n = parse_radical("sqrt(sqrt(6)+sqrt(7))");
  CHECK(sign(n * n - parse_radical("sqrt(6)+sqrt(7)")) == 0);
  CHECK(to_double(n) == doctest::Approx(2.2572640638).epsilon(1e-6));
  auto inv = RadicalScalar(1) / n;
  CHECK((inv * n) == RadicalScalar(1));
}

TEST_CASE("rational function normal form") {
  auto t = RatFunc::variable(Var::t);
  auto q = (t * t - RatFunc(1)) / (t - RatFunc(1));
  CHECK(q == t + RatFunc(1));
  CHECK(q.den().degree() == 0);
  CHECK_THROWS_AS(RatFunc::variable(Var::t) + RatFunc::variable(Var::kappa2), DomainError);
}

TEST_CASE("real root isolation") {
  QPoly x = QPoly::x();
  QPoly p = (x.scaled(Rational(2)) - QPoly(Rational(3))) * (x - QPoly(Rational(1))) * (x - QPoly(Rational(1)));
  auto rs = isolate_real_roots(p);
  REQUIRE(rs.size() == 2);
  CHECK(rs[0].multiplicity == 2);
  CHECK(rs[1].multiplicity == 1);
  auto rr = rational_roots(p);
  REQUIRE(rr.size() == 2);
  CHECK(rr[0] == Rational(1));
  CHECK(rr[1] == Rational(3, 2));
  CHECK(isolate_real_roots(p, Domain::open(Rational(5), Rational(2))).empty());
}
