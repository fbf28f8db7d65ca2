#include <cmath>
#include <functional>

#include "doctest.h"
#include "hopflab/block.hpp"
#include "hopflab/parse.hpp"

using namespace hopf;

namespace {

using RS = RadicalScalar;
using SS = SymbolicScalar;
RS R(const char* s) { return parse_radical(s); }

double eval(const MPoly<RS>& p, const std::vector<double>& x) {
  double s = 0;
  for (auto& [e, c] : p.terms()) {
    double term = to_double(c);
    for (size_t i = 0; i < e.size(); ++i) term *= std::pow(x[i], e[i]);
    s += term;
  }
  return s;
}

// Laplace-Beltrami (positive convention) of f o X at the chart point th, by central differences
// on the metric pulled back through the embedding X.
double chart_laplacian(const std::function<std::vector<double>(const std::vector<double>&)>& X,
                       const std::function<double(const std::vector<double>&)>& f, std::vector<double> th) {
  const int d = static_cast<int>(th.size());
  const double h = 1e-3;
  auto jac = [&](const std::vector<double>& u) {
    std::vector<std::vector<double>> J(d);
    for (int a = 0; a < d; ++a) {
      auto p = u, q = u;
      p[a] += h;
      q[a] -= h;
      auto xp = X(p), xq = X(q);
      for (size_t i = 0; i < xp.size(); ++i) J[a].push_back((xp[i] - xq[i]) / (2 * h));
    }
    return J;
  };
  // flux_a = sqrt(g) g^{ab} d_b f
  auto flux = [&](const std::vector<double>& u) {
    auto J = jac(u);
    std::vector<std::vector<double>> g(d, std::vector<double>(d));
    for (int a = 0; a < d; ++a)
      for (int b = 0; b < d; ++b)
        for (size_t i = 0; i < J[a].size(); ++i) g[a][b] += J[a][i] * J[b][i];
    std::vector<double> df(d);
    for (int a = 0; a < d; ++a) {
      auto p = u, q = u;
      p[a] += h;
      q[a] -= h;
      df[a] = (f(X(p)) - f(X(q))) / (2 * h);
    }
    // chart metrics used here are diagonal
    double det = 1;
    for (int a = 0; a < d; ++a) det *= g[a][a];
    std::vector<double> out(d);
    for (int a = 0; a < d; ++a) out[a] = std::sqrt(det) * df[a] / g[a][a];
    return std::pair{out, std::sqrt(det)};
  };
  double div = 0;
  for (int a = 0; a < d; ++a) {
    auto p = th, q = th;
    p[a] += h;
    q[a] -= h;
    div += (flux(p).first[a] - flux(q).first[a]) / (2 * h);
  }
  return -div / flux(th).second;
}

}  // namespace

TEST_CASE("factor Laplacian agrees with chart differentiation on round spheres") {
  // S^1 and S^3 of squared radius 2 in R^2, R^4
  for (int pairs : {1, 2}) {
    const int nv = 2 * pairs;
    QuadricFactor<RS> f;
    f.first = 0;
    f.pairs = pairs;
    f.eps.assign(pairs, 1);
    f.rho2 = RS(2);
    ProductQuadric<RS> q;
    q.nv = nv;
    q.factors = {f};
    const double r = std::sqrt(2.0);
    std::function<std::vector<double>(const std::vector<double>&)> X;
    std::vector<double> th;
    if (pairs == 1) {
      X = [&](const std::vector<double>& u) { return std::vector<double>{r * std::cos(u[0]), r * std::sin(u[0])}; };
      th = {0.7};
    } else {
      X = [&](const std::vector<double>& u) {
        const double s0 = std::sin(u[0]), s1 = std::sin(u[1]);
        return std::vector<double>{r * std::cos(u[0]), r * s0 * std::cos(u[1]), r * s0 * s1 * std::cos(u[2]),
                                   r * s0 * s1 * std::sin(u[2])};
      };
      th = {0.9, 1.1, 0.4};
    }
    using P = MPoly<RS>;
    std::vector<P> tests = {P::var(nv, 0), P::var(nv, nv - 1), P::var(nv, 0) * P::var(nv, nv - 1),
                            P::var(nv, 0) * P::var(nv, 0) + P::constant(nv, RS(3)) * P::var(nv, 1)};
    for (auto& poly : tests) {
      auto lap = factor_laplacian(poly, f);
      auto x = X(th);
      const double expect = chart_laplacian(X, [&](const std::vector<double>& y) { return eval(poly, y); }, th);
      CHECK(eval(lap, x) == doctest::Approx(expect).epsilon(1e-4));
    }
  }
}

TEST_CASE("quadric reduction and the circle guard") {
  auto bm = block_model<Rational>(1, 1, 1, RS(1));
  const int nv = bm.quadric.nv;
  using P = MPoly<RS>;
  // |z|^2 reduces to r1^2
  P z2 = P::var(nv, 0) * P::var(nv, 0) + P::var(nv, 1) * P::var(nv, 1) + P::var(nv, 2) * P::var(nv, 2) +
         P::var(nv, 3) * P::var(nv, 3);
  CHECK(reduce(z2, bm.quadric) == P::constant(nv, bm.r1sq));
  CHECK_THROWS_AS(product_laplacian(P::var(nv, 0), bm.quadric), DomainError);
  auto e = bm.entry(0, 2);
  CHECK_NOTHROW(product_laplacian(e.re, bm.quadric));
}

TEST_CASE("iterated Laplacian closed forms against the polynomial engine") {
  for (int c : {1, -1})
    for (int k = 0; k <= 3; ++k)
      for (int l = 0; l <= 3 && k + l <= 4; ++l) {
        auto bm = block_model<Rational>(k, l, c, R("7/2"));
        auto rep = block_oracle_check(bm, 3);
        INFO("c=" << c << " k=" << k << " l=" << l);
        CHECK(rep.checked == 3 * (k + l + 2) * (k + l + 2));
        CHECK(rep.ok());
      }
  auto t = symbolic_spec(Family::A1, SpaceForm(1, 2)).param;
  for (int c : {1, -1}) {
    auto rep = block_oracle_check(block_model<RatFunc>(1, 1, c, t), 3);
    CHECK(rep.ok());
  }
}

TEST_CASE("block cubic and its roots") {
  auto t = symbolic_spec(Family::A1, SpaceForm(1, 2)).param;
  for (int c : {1, -1})
    for (int k = 0; k <= 2; ++k)
      for (int l = 0; l <= 2; ++l) {
        auto rep = a2_type_analysis<RatFunc>(k, l, c, t);
        CHECK(rep.cubic_ok);
        CHECK(rep.root_relations_ok);
        CHECK(rep.components[1].vanishes == (k == 0));
        CHECK(rep.components[2].vanishes == (l == 0));
      }
}

TEST_CASE("A2 verdicts at special radii") {
  auto a = a2_type_analysis<Rational>(1, 1, 1, RS(1));
  CHECK(a.type == 2);
  CHECK(a.eigenvalues == std::vector<RS>{RS(12), RS(16)});
  CHECK(a.mass_symmetric);
  CHECK(a.coincidences == std::vector<std::string>{"v=w"});

  auto b = a2_type_analysis<Rational>(1, 1, 1, R("3/5"));
  CHECK(b.type == 2);
  CHECK(b.eigenvalues == std::vector<RS>{R("64/5"), R("64/3")});
  CHECK_FALSE(b.mass_symmetric);

  auto nul = a2_type_analysis<Rational>(2, 1, -1, R("5/3"));
  CHECK(nul.null_type);
  CHECK(nul.type == 3);
  CHECK(nul.eigenvalues == std::vector<RS>{R("-24/5"), RS(0), R("16/3")});
  CHECK(nul.verdict == "null 3-type");

  auto generic = a2_type_analysis<Rational>(1, 2, 1, RS(2));
  CHECK(generic.type == 3);
  CHECK_FALSE(generic.mass_symmetric);

  // k = 0 is the geodesic sphere; its z-block is constant
  auto sph = a2_type_analysis<Rational>(0, 1, 1, R("1/5"));
  CHECK(sph.components[1].vanishes);
  CHECK(sph.type == 1);
  CHECK(sph.eigenvalues == std::vector<RS>{R("48/5")});
}

TEST_CASE("mass symmetry exactly at t = (K+1)/(L+1) for c = 1") {
  for (int k = 0; k <= 3; ++k)
    for (int l = 0; l <= 3; ++l) {
      const int K = 2 * k + 1, L = 2 * l + 1;
      auto at = a2_type_analysis<Rational>(k, l, 1, RS(Rational(K + 1, L + 1)));
      CHECK(at.center_is_standard);
      auto off = a2_type_analysis<Rational>(k, l, 1, RS(Rational(K + 2, L + 1)));
      CHECK_FALSE(off.center_is_standard);
    }
}

TEST_CASE("frame and block engines agree on geodesic spheres and tubes") {
  for (int m = 2; m <= 4; ++m) {
    for (const char* t : {"4", "1/5", "2"}) {
      auto cc = cross_check_frame_vs_block(concrete_spec(Family::A1, SpaceForm(1, m), R(t)));
      INFO(cc.detail);
      CHECK(cc.agree);
    }
    for (const char* t : {"4", "3/2"}) {
      auto cc = cross_check_frame_vs_block(concrete_spec(Family::A1, SpaceForm(-1, m), R(t)));
      INFO(cc.detail);
      CHECK(cc.agree);
    }
    for (const char* t : {"1/4", "2/3"}) {
      auto cc = cross_check_frame_vs_block(concrete_spec(Family::A1tube, SpaceForm(-1, m), R(t)));
      INFO(cc.detail);
      CHECK(cc.agree);
    }
    for (int c : {1, -1}) {
      auto cc = cross_check_frame_vs_block(symbolic_spec(Family::A1, SpaceForm(c, m)));
      INFO(cc.detail);
      CHECK(cc.agree);
    }
  }
  CHECK_THROWS_AS(cross_check_frame_vs_block(concrete_spec(Family::B, SpaceForm(1, 2), RS(8))), DomainError);
}

TEST_CASE("tube about the hyperbolic hyperplane has a harmonic component at tanh^2 r = 1/(2m-1)") {
  for (int m = 2; m <= 5; ++m) {
    auto cc = cross_check_frame_vs_block(concrete_spec(Family::A1tube, SpaceForm(-1, m), RS(Rational(1, 2 * m - 1))));
    INFO(cc.detail);
    CHECK(cc.agree);
    CHECK(cc.null_type);
    CHECK(cc.type == 2);
    CHECK(cc.verdict == "null 2-type");
    CHECK(cc.eigenvalues.back() == RS(0));
  }
}
