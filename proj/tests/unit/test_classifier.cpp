#include <algorithm>

#include "doctest.h"
#include "hopflab/classifier.hpp"
#include "hopflab/parse.hpp"

using namespace hopf;

namespace {

using RS = RadicalScalar;
RS R(const char* s) { return parse_radical(s); }

std::vector<std::string> exacts(const ClassificationEntry& e) {
  std::vector<std::string> v;
  for (auto& x : e.eigenvalues) v.push_back(x.exact);
  return v;
}

bool has(const std::vector<RS>& v, const RS& x) {
  return std::any_of(v.begin(), v.end(), [&](const RS& y) { return y == x; });
}

}  // namespace

TEST_CASE("geodesic spheres in the projective space") {
  auto es = a1_classify(SpaceForm(1, 2));
  REQUIRE(es.size() == 3);
  CHECK(es[0].is_range);
  CHECK(es[0].param == "t > 0, t != 1/5");
  CHECK(es[0].type == 2);
  CHECK(es[1].param == "1/5");
  CHECK(es[1].type == 1);
  CHECK(exacts(es[1]) == std::vector<std::string>{"48/5"});
  CHECK(es[2].param == "1/2");
  CHECK(es[2].type == 2);
  CHECK(es[2].mass_symmetric);

  auto e = classify(concrete_spec(Family::A1, SpaceForm(1, 3), RS(2)));
  CHECK(e.type == 2);
  CHECK(exacts(e) == std::vector<std::string>{"33/2", "36"});
  CHECK_FALSE(e.mass_symmetric);

  for (int m = 2; m <= 6; ++m) {
    auto v = a1_classify(SpaceForm(1, m));
    REQUIRE(v.size() == 3);
    CHECK(v[1].param == RS(Rational(1, 2 * m + 1)).str());
    CHECK(v[2].param == RS(Rational(1, m)).str());
  }
}

TEST_CASE("geodesic spheres and tubes in the hyperbolic space") {
  auto e = classify(concrete_spec(Family::A1, SpaceForm(-1, 2), RS(4)));
  CHECK(e.type == 2);
  for (auto& x : e.eigenvalues) CHECK(*x.decimal > 0);
  for (int m = 2; m <= 6; ++m) {
    auto v = a1_classify(SpaceForm(-1, m));
    // two ranges and one harmonic point on the tube branch
    REQUIRE(v.size() == 3);
    CHECK(v[0].family == "A1'");
    CHECK(v[1].family == "A1''");
    CHECK(v[2].family == "A1''");
    CHECK(v[2].verdict == "null 2-type");
    CHECK(v[2].param == RS(Rational(1, 2 * m - 1)).str());
    for (auto& x : v)
      if (x.is_range) CHECK_FALSE(x.mass_symmetric);
  }
  CHECK_THROWS_AS(classify(concrete_spec(Family::A1, SpaceForm(-1, 2), R("1/2"))), DomainError);
}

TEST_CASE("A2 two-type radii") {
  auto r = a2_two_type_solve(SpaceForm(1, 3), 1);
  REQUIRE(r.solutions.size() == 3);
  CHECK(r.c_matches_b_swapped);
  for (auto& s : r.solutions) {
    if (s.which == 'a') {
      CHECK(s.t == RS(1));
      CHECK(has(s.eigenvalues, RS(16)));
      CHECK(has(s.eigenvalues, RS(12)));
      CHECK(s.mass_symmetric);
    } else if (s.which == 'b') {
      CHECK(s.t == R("3/5"));
      CHECK(has(s.eigenvalues, R("64/3")));
      CHECK(has(s.eigenvalues, R("64/5")));
      CHECK_FALSE(s.mass_symmetric);
    } else {
      CHECK(s.t == R("5/3"));
    }
  }
  auto r4 = a2_two_type_solve(SpaceForm(1, 4), 1);
  CHECK(std::any_of(r4.solutions.begin(), r4.solutions.end(),
                    [](const A2Solution& s) { return s.which == 'a' && s.t == R("2/3"); }));
  for (int m = 3; m <= 6; ++m)
    for (int k = 1; k <= m - 2; ++k) {
      CHECK(a2_two_type_solve(SpaceForm(-1, m), k).solutions.empty());
      auto cp = a2_two_type_solve(SpaceForm(1, m), k);
      CHECK(cp.solutions.size() == 3);
      CHECK(cp.c_matches_b_swapped);
    }
  CHECK_THROWS_AS(a2_two_type_solve(SpaceForm(1, 3), 2), DomainError);
}

TEST_CASE("A2 consistency of the two-type conditions") {
  for (int c : {1, -1})
    for (int m = 3; m <= 5; ++m)
      for (int k = 1; k <= m - 2; ++k) {
        auto r = a2_consistency(SpaceForm(c, m), k);
        CHECK(r.cross_matches);
        CHECK(r.pq_matches);
        if (c == 1) CHECK(r.vanishes_at_solutions);
      }
}

TEST_CASE("class-B two-type tubes") {
  auto r = b_two_type_solve(SpaceForm(1, 2));
  CHECK(r.forms_agree);
  REQUIRE(r.entries.size() == 2);
  CHECK(r.entries[0].param == "8");
  CHECK(exacts(r.entries[0]) == std::vector<std::string>{"6", "12"});
  CHECK(r.entries[0].radius.find("cot r = sqrt(2) + sqrt(3)") != std::string::npos);
  CHECK(r.entries[1].param == (RS(2) * R("sqrt(7)") - RS(2)).str());
  CHECK(r.entries[1].radius.find("cot r = sqrt(sqrt(7) + sqrt(6))") != std::string::npos);
  for (auto& e : r.entries) CHECK(e.mass_symmetric);
  for (int m = 2; m <= 8; ++m) {
    CHECK(b_two_type_solve(SpaceForm(1, m)).forms_agree);
    auto h = b_two_type_solve(SpaceForm(-1, m));
    CHECK(h.forms_agree);
    CHECK(h.roots.empty());
  }
}

TEST_CASE("class-B three-type cubic") {
  auto a = b_three_type(SpaceForm(1, 2), RS(4));
  CHECK(a.roots_ok);
  CHECK(a.lambda_u == RS(8));
  CHECK(a.lambda_v == RS(20) + RS(4) * R("sqrt(7)"));
  CHECK(a.lambda_w == RS(20) - RS(4) * R("sqrt(7)"));
  CHECK(a.entry.type == 3);
  CHECK(a.entry.mass_symmetric);
  CHECK_FALSE(a.degenerate);

  auto h = b_three_type(SpaceForm(-1, 2), R("64/25"));
  CHECK(h.lambda_u == R("9/4"));
  CHECK(h.entry.type == 3);

  for (int m = 2; m <= 6; ++m) {
    auto at = b_three_type(SpaceForm(1, m), RS(4 * m));
    CHECK(at.factorization_ok);
    CHECK(at.entry.type == 2);
    auto deg = b_three_type(SpaceForm(1, m), RS(2) * (adjoin_sqrt(RS(2 * m * m - 1)) - RS(1)));
    CHECK(deg.degenerate);
    CHECK(deg.entry.type == 2);
  }
  CHECK_THROWS_AS(b_three_type(SpaceForm(-1, 2), RS(5)), DomainError);
}

TEST_CASE("classes C, D, E are not of 2-type") {
  const RatFunc s = RatFunc::variable(Var::kappa2);
  const RatFunc expected = RatFunc(-2) - RatFunc(8) / s;
  for (auto [fam, m] : std::vector<std::pair<Family, int>>{
           {Family::C, 5}, {Family::C, 7}, {Family::D, 9}, {Family::E, 15}}) {
    auto ex = cde_exclude(fam, m);
    CHECK(ex.f_is_minus_kappa);
    CHECK(ex.witness == expected);
    CHECK(ex.positive_roots == 0);
    CHECK(ex.excluded());
  }
  auto ex = cde_exclude(Family::C, 5);
  using CP = CondPoly<SymbolicScalar>;
  auto sp = spectrum(symbolic_spec(Family::C, SpaceForm(1, 5)));
  const CP k(sp.kappa), p = CP::var(Unknown::p), f = CP::var(Unknown::f), f2 = CP::var(Unknown::f2);
  const int n = 9;
  CHECK(ex.p_from_pair13 == p - (CP(2) * f2 + f * f + CP(2) * k * f + CP(2) * k * k + CP(2 * (n + 5))));
  CHECK(ex.fp_from_pair13 == f * p - (f * f2 + CP(3 * n + 13) * f + CP(4) * k));
  CHECK(ex.fp_from_pair24 == f * p - (f * f2 + CP(3 * n + 5) * f - CP(4) * k));
  const SymbolicScalar kv = sp.kappa;
  CHECK(ex.second_relation == CP(kv + SymbolicScalar(2) / kv) * f + k * k - CP(SymbolicScalar(8) / (kv * kv)));
  CHECK_THROWS_AS(cde_exclude(Family::C, 6), DomainError);
  CHECK_THROWS_AS(cde_exclude(Family::D, 7), DomainError);
  CHECK_THROWS_AS(cde_exclude(Family::E, 9), DomainError);
}

TEST_CASE("horosphere") {
  for (int m = 2; m <= 4; ++m) {
    auto e = horosphere_exclude(m);
    CHECK_FALSE(e.type.has_value());
    CHECK(e.verdict == "not finite type within module");
  }
}

TEST_CASE("theorem reports") {
  for (int m = 2; m <= 5; ++m) {
    auto t1 = theorem_report("T1", m);
    REQUIRE(t1.entries.size() == static_cast<size_t>(1 + 2 * (m - 2) + 2));
    CHECK(t1.entries.front().anchor == "T1.i");
    CHECK(t1.entries.front().param == "t > 0, t != 1/" + std::to_string(2 * m + 1));
    int ii = 0, iii = 0;
    for (auto& e : t1.entries) {
      CHECK(!e.verified_by.empty());
      ii += e.anchor == "T1.ii";
      iii += e.anchor == "T1.iii";
      if (e.anchor != "T1.i") CHECK(e.type == 2);
    }
    CHECK(ii == m - 2);
    CHECK(iii == m - 2);
    CHECK(t1.entries[t1.entries.size() - 2].anchor == "T1.iv");
    CHECK(t1.entries.back().anchor == "T1.v");

    auto t2 = theorem_report("T2", m);
    REQUIRE(t2.entries.size() == 2);
    CHECK(t2.entries[0].family == "A1'");
    CHECK(t2.entries[1].family == "A1''");
  }
  auto t3 = theorem_report("T3", 2);
  REQUIRE(t3.entries.size() == 1);
  CHECK(t3.entries[0].family == "B");
  CHECK(t3.entries[0].type == 3);
  auto& notes = t3.entries[0].notes;
  REQUIRE(notes.size() == 2);
  CHECK(notes[0].find("sqrt(2) + sqrt(3)") != std::string::npos);
  CHECK(notes[1].find("sqrt(sqrt(6) + sqrt(7))") != std::string::npos);
  auto t4 = theorem_report("T4", 2);
  REQUIRE(t4.entries.size() == 1);
  CHECK(t4.entries[0].space == "CH");
  CHECK(t4.entries[0].type == 3);
  CHECK_THROWS_AS(theorem_report("T3", 3), DomainError);
  CHECK_THROWS_AS(theorem_report("T9", 3), DomainError);

  auto c1 = theorem_report("C1", 3);
  int cp = 0;
  for (auto& e : c1.entries) {
    CHECK(e.mass_symmetric);
    cp += e.space == "CP";
  }
  CHECK(cp == 4);  // A1 at t = 1/3, A2 case (a), two class-B tubes
}

TEST_CASE("stability endpoints") {
  auto a = stability_remark_check(3, 1);
  CHECK(a.t_b == Rational(3, 5));
  CHECK(a.t_c == Rational(5, 3));
  auto b = stability_remark_check(4, 1);
  CHECK(b.t_b == Rational(3, 7));
  CHECK(b.t_c == Rational(1));
  auto c = stability_remark_check(4, 2);
  CHECK(c.t_b == Rational(1));
  CHECK(c.t_c == Rational(7, 3));
  for (int m = 3; m <= 7; ++m)
    for (int k = 1; k <= m - 2; ++k) {
      auto r = stability_remark_check(m, k);
      CHECK(r.c_is_swapped_b);
      CHECK(r.endpoints_match);
      CHECK(r.ordered);
    }
}

TEST_CASE("entry JSON") {
  auto e = classify(concrete_spec(Family::B, SpaceForm(1, 2), RS(8)));
  auto j = to_json(e);
  CHECK(j["type"] == 2);
  CHECK(j["paper_anchor"] == "T1.iv");
  CHECK(j["eigenvalues"][0]["exact"] == "6");
  CHECK(j["eigenvalues"][0]["decimal"] == 6.0);
  CHECK(j["verified_by"].size() == 2);
}
