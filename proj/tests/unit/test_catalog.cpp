#include <random>

#include "doctest.h"
#include "hopflab/catalog.hpp"
#include "hopflab/errors.hpp"
#include "hopflab/parse.hpp"

using namespace hopf;

namespace {

RadicalScalar R(const char* s) { return parse_radical(s); }

template <class F>
void check_structure(const ModelSpec<F>& spec) {
  auto sp = spectrum(spec);
  const int c = spec.sf.c;
  CHECK(sp.dimension() == spec.sf.n());
  for (auto& b : sp.blocks) {
    CHECK(b.multiplicity > 0);
    if (b.j_action == JAction::Invariant) CHECK(b.multiplicity % 2 == 0);
    if ((sp.kappa * sp.kappa + Surd<F>(4 * c)).is_zero()) {
      // horosphere: 2 nu = kappa, so mu* has no value
      CHECK((Surd<F>(2) * b.value - sp.kappa).is_zero());
      CHECK_THROWS_AS(mu_star(b.value, sp.kappa, c), DomainError);
      continue;
    }
    // Hopf relation 2 mu mu* = 2c + kappa (mu + mu*)
    auto ms = mu_star(b.value, sp.kappa, c);
    CHECK(Surd<F>(2) * b.value * ms == Surd<F>(2 * c) + sp.kappa * (b.value + ms));
    if (b.j_action == JAction::Swapped) {
      CHECK(ms == sp.blocks[b.partner].value);
      CHECK(sp.blocks[b.partner].multiplicity == b.multiplicity);
    } else {
      CHECK(ms == b.value);
    }
  }
}

}  // namespace

TEST_CASE("A1 spectrum at t=4") {
  auto sp = spectrum(concrete_spec(Family::A1, SpaceForm(1, 2), R("4")));
  CHECK(sp.kappa == R("3/2"));
  REQUIRE(sp.blocks.size() == 1);
  CHECK(sp.blocks[0].value == R("2"));
  CHECK(sp.blocks[0].multiplicity == 2);
  CHECK(mu_star(sp.blocks[0].value, sp.kappa, 1) == R("2"));
  // f = n mu - c/mu
  CHECK(power_trace(sp, 1) == R("11/2"));
}

TEST_CASE("horosphere spectrum and traces") {
  auto sp = spectrum(concrete_spec(Family::A0, SpaceForm(-1, 3), R("1")));
  CHECK(sp.kappa == R("2"));
  REQUIRE(sp.blocks.size() == 1);
  CHECK(sp.blocks[0].value == R("1"));
  CHECK(sp.blocks[0].multiplicity == 4);

  auto sp2 = spectrum(concrete_spec(Family::A0, SpaceForm(-1, 2), R("1")));
  CHECK(power_trace(sp2, 1) == R("4"));
  CHECK(power_trace(sp2, 2) == R("6"));
  CHECK_THROWS_AS(spectrum(concrete_spec(Family::A0, SpaceForm(1, 2), R("1"))), DomainError);
}

TEST_CASE("B spectrum at kappa = 2") {
  auto sp = spectrum(concrete_spec(Family::B, SpaceForm(1, 2), R("4")));
  CHECK(sp.kappa == R("2"));
  REQUIRE(sp.blocks.size() == 2);
  CHECK(sp.blocks[0].value == R("sqrt(2) - 1"));
  CHECK(sp.blocks[1].value == R("-(sqrt(2) + 1)"));
  CHECK(sp.blocks[0].multiplicity == 1);
  CHECK(sp.blocks[0].value * sp.blocks[1].value == R("-1"));
  CHECK(mu_star(sp.blocks[0].value, sp.kappa, 1) == sp.blocks[1].value);
}

TEST_CASE("B relations hold symbolically in kappa^2") {
  for (int c : {1, -1})
    for (int m = 2; m <= 4; ++m) {
      auto spec = symbolic_spec(Family::B, SpaceForm(c, m));
      auto sp = spectrum(spec);
      auto& mu2 = sp.blocks[0].value;
      auto& mu4 = sp.blocks[1].value;
      CHECK(mu2 * mu4 == SymbolicScalar(-c));
      CHECK(mu2 + mu4 == SymbolicScalar(-4 * c) / sp.kappa);
      auto k2 = parse_symbolic("kappa2");
      CHECK(power_trace(sp, 2) == k2 + SymbolicScalar(16 * (m - 1)) / k2 + SymbolicScalar(2 * c * (m - 1)));
    }
}

TEST_CASE("every catalog model satisfies the spectral invariants") {
  for (int c : {1, -1})
    for (int m : {2, 3, 4, 5, 9, 15}) {
      SpaceForm sf(c, m);
      for (auto& row : catalog_rows(sf)) {
        CAPTURE(row.name);
        CAPTURE(m);
        check_structure(symbolic_spec(row.family, sf, row.k));
        RadicalScalar p = row.family == Family::A1tube ? R("1/3")
                          : (c == -1 && row.family != Family::B) ? R("5/2")
                                                                 : R("7/5");
        check_structure(concrete_spec(row.family, sf, p, row.k));
      }
    }
}

TEST_CASE("mu star is an involution") {
  std::mt19937_64 rng(42);
  std::uniform_int_distribution<int> d(-30, 30);
  for (int c : {1, -1})
    for (int i = 0; i < 200; ++i) {
      RadicalScalar mu(Rational(d(rng), 7)), kappa(Rational(d(rng), 5));
      if ((RadicalScalar(2) * mu - kappa).is_zero()) continue;
      RadicalScalar ms = mu_star(mu, kappa, c);
      // 2 mu* - kappa = (kappa^2 + 4c)/(2 mu - kappa)
      if ((kappa * kappa + RadicalScalar(4 * c)).is_zero())
        CHECK_THROWS_AS(mu_star(ms, kappa, c), DomainError);
      else
        CHECK(mu_star(ms, kappa, c) == mu);
    }
  CHECK_THROWS_AS(mu_star(R("1"), R("2"), 1), DomainError);
}

TEST_CASE("parameter conversions") {
  auto a = param_conversions(concrete_spec(Family::A1, SpaceForm(1, 2), R("1")));
  CHECK(a.r1sq == R("1/2"));
  CHECK(a.r2sq == R("1/2"));
  auto b = param_conversions(concrete_spec(Family::A1, SpaceForm(-1, 2), R("4")));
  CHECK(b.r1sq == R("4/3"));
  CHECK(b.r2sq == R("1/3"));
  CHECK(b.r1sq - b.r2sq == R("1"));
  for (int m = 3; m <= 6; ++m)
    for (int k = 1; k <= m - 2; ++k) {
      int K = 2 * k + 1, L = 2 * (m - 1 - k) + 1;
      auto p = param_conversions(
          concrete_spec(Family::A2, SpaceForm(1, m), RadicalScalar(Rational(K + 1, L + 1)), k));
      CHECK(p.r1sq == RadicalScalar(Rational(K + 1, 2 * m + 2)));
    }
  CHECK_THROWS_AS(param_conversions(concrete_spec(Family::B, SpaceForm(1, 2), R("4"))), DomainError);
}

TEST_CASE("family constraints") {
  auto c4 = family_constraints(concrete_spec(Family::C, SpaceForm(1, 4), R("1")));
  CHECK_FALSE(c4.valid);
  CHECK(c4.dimension_rule == "m = 2k+1 >= 5");
  CHECK(family_constraints(concrete_spec(Family::C, SpaceForm(1, 5), R("1"))).valid);
  CHECK_FALSE(family_constraints(concrete_spec(Family::D, SpaceForm(1, 7), R("1"))).valid);
  CHECK_FALSE(family_constraints(concrete_spec(Family::C, SpaceForm(-1, 5), R("1"))).valid);

  auto bh = family_constraints(concrete_spec(Family::B, SpaceForm(-1, 3), R("1")));
  CHECK(bh.valid);
  CHECK(bh.range == "0 < kappa^2 < 4");
  CHECK_FALSE(family_constraints(concrete_spec(Family::B, SpaceForm(-1, 3), R("4"))).valid);
  auto coin = family_constraints(concrete_spec(Family::B, SpaceForm(-1, 3), R("3")));
  CHECK(coin.valid);
  REQUIRE(coin.flags.size() == 1);
  auto csp = spectrum(concrete_spec(Family::B, SpaceForm(-1, 3), R("3")));
  CHECK(csp.coincidence);
  CHECK(csp.blocks.size() == 2);

  auto a2 = family_constraints(concrete_spec(Family::A2, SpaceForm(1, 3), R("2"), 0));
  CHECK_FALSE(a2.valid);
  REQUIRE(a2.flags.size() == 1);
  CHECK(a2.flags[0] == "degenerates to A1");
  CHECK_THROWS_AS(spectrum(concrete_spec(Family::A1, SpaceForm(-1, 2), R("1/2"))), DomainError);
}
