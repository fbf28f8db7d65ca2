#include "doctest.h"
#include "hopflab/condpoly.hpp"
#include "hopflab/parse.hpp"
#include "hopflab/tangent.hpp"

using namespace hopf;

namespace {

RadicalScalar R(const char* s) { return parse_radical(s); }

SymbolicScalar pw(const SymbolicScalar& x, int e) {
  SymbolicScalar r(1);
  for (int i = 0; i < e; ++i) r = r * x;
  return r;
}

}  // namespace

TEST_CASE("A1 model matrices") {
  auto spec = concrete_spec(Family::A1, SpaceForm(1, 2), R("4"));
  auto tm = build_matrices(spec);
  REQUIRE(tm.n == 3);
  CHECK(tm.A(0, 0) == R("3/2"));
  CHECK(tm.A(1, 1) == R("2"));
  CHECK(tm.A(2, 2) == R("2"));
  CHECK(tm.Sm(2, 1) == R("1"));
  CHECK(tm.Sm(1, 2) == R("-1"));
  CHECK(structure_defects(tm).empty());
  CHECK(is_zero_matrix(Mat<RadicalScalar>(tm.A * tm.Sm - tm.Sm * tm.A)));
}

TEST_CASE("B model swaps the D-blocks") {
  auto spec = concrete_spec(Family::B, SpaceForm(1, 2), R("4"));
  auto tm = build_matrices(spec);
  CHECK(tm.A(0, 0) == R("2"));
  CHECK(tm.A(1, 1) == R("sqrt(2)-1"));
  CHECK(tm.A(2, 2) == R("-sqrt(2)-1"));
  CHECK(tm.Sm(2, 1) == R("1"));
  CHECK(structure_defects(tm).empty());
  CHECK_FALSE(is_zero_matrix(Mat<RadicalScalar>(tm.A * tm.Sm - tm.Sm * tm.A)));
}

TEST_CASE("every catalog model satisfies the structure identities") {
  for (int c : {1, -1})
    for (int m : {2, 3, 5}) {
      SpaceForm sf(c, m);
      for (auto& row : catalog_rows(sf)) {
        auto spec = symbolic_spec(row.family, sf, row.k);
        auto tm = build_matrices(spec);
        CHECK(structure_defects(tm).empty());
        CHECK(trace_identities(tm).ok());
        for (auto& b : tm.spectrum.blocks) {
          // 2 mu mu* = 2c + kappa (mu + mu*) with mu* the curvature on S(V_mu)
          auto ms = b.partner >= 0 ? tm.spectrum.blocks[b.partner].value : b.value;
          CHECK(SymbolicScalar(2) * b.value * ms == SymbolicScalar(2 * c) + tm.spectrum.kappa * (b.value + ms));
        }
      }
    }
}

TEST_CASE("odd J-invariant multiplicity is rejected") {
  PrincipalSpectrum<Rational> sp;
  sp.kappa = RadicalScalar(1);
  PrincipalBlock<Rational> b;
  b.name = "x";
  b.value = RadicalScalar(2);
  b.multiplicity = 3;
  sp.blocks.push_back(b);
  CHECK_THROWS_AS(build_matrices(sp, 1, Family::A1), DomainError);
}

TEST_CASE("trace identities at A1 t=4") {
  auto tm = build_matrices(concrete_spec(Family::A1, SpaceForm(1, 2), R("4")));
  auto tr = trace_identities(tm);
  CHECK(tr.sas == R("-4"));
  CHECK(tr.ok());
}

TEST_CASE("two-type conditions for A1 at t=4") {
  auto spec = concrete_spec(Family::A1, SpaceForm(1, 2), R("4"));
  // p, q from the A1 closed forms with mu = 2, n = 3
  RadicalScalar p = R("225/4"), q = R("650");
  auto r = check_E_conditions(spec, p, q);
  CHECK(r.all_zero());
  CHECK(r.e4 == "0");
  auto solved = solve_pq(spec);
  REQUIRE(solved);
  CHECK(solved->first == p);
  CHECK(solved->second == q);
  auto bumped = check_E_conditions(spec, p, q + RadicalScalar(1));
  CHECK(bumped.e1 == RadicalScalar(1));
}

TEST_CASE("two-type conditions for symbolic A1 match the closed forms") {
  for (int c : {1, -1}) {
    SpaceForm sf(c, 3);
    auto spec = symbolic_spec(Family::A1, sf, 0);
    auto sp = spectrum(spec);
    const int n = sf.n();
    SymbolicScalar mu = sp.blocks[0].value, C(c), N(n);
    SymbolicScalar mu2 = mu * mu;
    SymbolicScalar p = (mu2 + C) * (SymbolicScalar(3 * n + 2) + C / mu2);
    SymbolicScalar q = SymbolicScalar(2 * (n + 1)) *
                       (N * mu2 * mu2 + SymbolicScalar(c * (2 * n + 1)) * mu2 + C / mu2 + SymbolicScalar(n + 2));
    CHECK(check_E_conditions(spec, p, q).all_zero());
  }
}

TEST_CASE("two-type conditions are affine in p") {
  auto spec = concrete_spec(Family::B, SpaceForm(1, 3), R("8"));
  auto r0 = check_E_conditions(spec, R("1"), R("2"));
  auto r1 = check_E_conditions(spec, R("3"), R("2"));
  auto sp = spectrum(spec);
  RadicalScalar f = power_trace(sp, 1);
  CHECK(r0.e1 - r1.e1 == RadicalScalar(2) * (RadicalScalar(2 * (5 + 1)) + sp.kappa * f));
  CHECK(r0.e4 == "not checkable");
}

TEST_CASE("q-free condition is the difference of the first two") {
  using P = CondPoly<SymbolicScalar>;
  auto spec = symbolic_spec(Family::B, SpaceForm(-1, 3), 0);
  auto sp = spectrum(spec);
  const int c = -1, n = 5;
  P p = P::var(Unknown::p), q = P::var(Unknown::q), f = P::var(Unknown::f), f2 = P::var(Unknown::f2);
  P k(sp.kappa);
  for (auto& b : sp.blocks) {
    P mu(b.value), ms(mu_star(b.value, sp.kappa, c));
    P lhs = e2_residual<P>(p, q, f, f2, k, mu, ms, c, n) - e1_residual<P>(p, q, f, f2, k, c, n);
    CHECK(lhs == q_free_residual<P>(p, f, f2, k, mu, ms, c, n));
    CHECK(lhs.degree_in(Unknown::q) == 0);
  }
}

TEST_CASE("class-A covariant derivative") {
  auto tm = build_matrices(symbolic_spec(Family::A1, SpaceForm(1, 3), 0));
  auto X = tm.basis(1);
  Vec<SymbolicScalar> SX = tm.Sm * X;
  auto r = class_a_nabla_A(tm, X, SX);
  CHECK(r == tm.basis(0) * SymbolicScalar(-1));
  CHECK(class_a_nabla_A(tm, X, tm.basis(0)) == SX * SymbolicScalar(-1));
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> d(-5, 5);
  for (int trial = 0; trial < 5; ++trial) {
    Vec<SymbolicScalar> a(tm.n), b(tm.n);
    for (int i = 0; i < tm.n; ++i) {
      a(i) = SymbolicScalar(d(rng));
      b(i) = SymbolicScalar(d(rng));
    }
    CHECK(is_zero_matrix(codazzi_defect(tm, a, b)));
  }
  auto tb = build_matrices(concrete_spec(Family::B, SpaceForm(1, 2), R("4")));
  CHECK_THROWS_AS(class_a_nabla_A(tb, tb.basis(1), tb.basis(2)), DomainError);
}

TEST_CASE("quartic identity checks") {
  for (int c : {1, -1}) {
    auto spec = symbolic_spec(Family::A1, SpaceForm(c, 3), 0);
    auto rep = quartic_identity_checks(spec);
    REQUIRE(rep.commutator_trace_zero);
    CHECK(*rep.commutator_trace_zero);
    REQUIRE(rep.B_matches_expected);
    CHECK(*rep.B_matches_expected);
    CHECK(rep.hyperbolic_guard_ok.has_value() == (c == -1));
  }
  auto rb = quartic_identity_checks(concrete_spec(Family::B, SpaceForm(1, 2), R("4")));
  CHECK_FALSE(rb.commutator_trace_zero);
  CHECK_FALSE(rb.residual);
  CHECK(rb.note.find("out of scope") != std::string::npos);
}

TEST_CASE("norm of nabla A from the spectrum") {
  for (int c : {1, -1})
    for (int m : {2, 3, 4}) {
      SpaceForm sf(c, m);
      auto spec = symbolic_spec(Family::A1, sf, 0);
      auto val = nabla_A_norm_from_spectrum(spec);
      CHECK(val == nabla_A_frobenius(build_matrices(spec)));
      CHECK(val == SymbolicScalar(2 * (sf.n() - 1)));
    }
  auto a0 = concrete_spec(Family::A0, SpaceForm(-1, 2), R("1"));
  CHECK(nabla_A_norm_from_spectrum(a0) == RadicalScalar(4));
  CHECK(nabla_A_frobenius(build_matrices(a0)) == RadicalScalar(4));
  auto b = nabla_A_norm_from_spectrum(concrete_spec(Family::B, SpaceForm(1, 2), R("8")));
  CHECK(b.is_rational());
  CHECK(sign(b) >= 0);
}
