#include "hopflab/catalog.hpp"

#include <algorithm>

namespace hopf {

std::string family_name(Family f, int c) {
  switch (f) {
    case Family::A0: return "A0";
    case Family::A1: return c == 1 ? "A1" : "A1'";
    case Family::A1tube: return "A1''";
    case Family::A2: return "A2";
    case Family::B: return "B";
    case Family::C: return "C";
    case Family::D: return "D";
    case Family::E: return "E";
  }
  return "?";
}

Family parse_family(const std::string& s) {
  if (s == "A0") return Family::A0;
  if (s == "A1" || s == "A1'" || s == "A1prime") return Family::A1;
  if (s == "A1''" || s == "A1tube" || s == "A1dprime") return Family::A1tube;
  if (s == "A2") return Family::A2;
  if (s == "B") return Family::B;
  if (s == "C") return Family::C;
  if (s == "D") return Family::D;
  if (s == "E") return Family::E;
  throw UsageError("unknown family '" + s + "'");
}

bool is_class_A(Family f) {
  return f == Family::A0 || f == Family::A1 || f == Family::A1tube || f == Family::A2;
}

namespace {

bool uses_t(Family f) { return is_class_A(f); }

}  // namespace

SymbolicSpec symbolic_spec(Family f, const SpaceForm& sf, int k) {
  SymbolicSpec s;
  s.family = f;
  s.sf = sf;
  s.k = k;
  s.symbolic = true;
  if (f == Family::A0)
    s.param = SymbolicScalar(1);
  else
    s.param = SymbolicScalar(RatFunc::variable(uses_t(f) ? Var::t : Var::kappa2));
  return s;
}

ConcreteSpec concrete_spec(Family f, const SpaceForm& sf, const RadicalScalar& param, int k) {
  ConcreteSpec s;
  s.family = f;
  s.sf = sf;
  s.k = k;
  s.param = f == Family::A0 ? RadicalScalar(1) : param;
  return s;
}

template <class F>
ValidityReport family_constraints(const ModelSpec<F>& spec) {
  ValidityReport r;
  const int c = spec.sf.c, m = spec.sf.m;
  auto fail = [&](const std::string& msg) {
    r.valid = false;
    if (r.message.empty()) r.message = msg;
  };
  switch (spec.family) {
    case Family::A0:
      r.range = "none (horosphere)";
      r.dimension_rule = "m >= 2";
      if (c != -1) fail("A0 exists only in CH^m");
      break;
    case Family::A1:
      r.range = c == 1 ? "t > 0" : "t > 1";
      r.dimension_rule = "m >= 2";
      break;
    case Family::A1tube:
      r.range = "0 < t < 1";
      r.dimension_rule = "m >= 2";
      if (c != -1) fail("A1'' exists only in CH^m");
      break;
    case Family::A2:
      r.range = c == 1 ? "t > 0" : "t > 1";
      r.dimension_rule = "1 <= k <= m-2";
      if (spec.k == 0 || spec.l() == 0) {
        r.flags.push_back("degenerates to A1");
        fail("A2 with k = 0 or l = 0 degenerates to A1");
      } else if (spec.k < 0 || spec.l() < 0) {
        fail("A2 needs 1 <= k <= m-2");
      }
      break;
    case Family::B:
      r.range = c == 1 ? "kappa^2 > 0" : "0 < kappa^2 < 4";
      r.dimension_rule = "m >= 2";
      break;
    case Family::C:
      r.range = "kappa^2 > 0";
      r.dimension_rule = "m = 2k+1 >= 5";
      if (c != 1) fail("C exists only in CP^m");
      if (m < 5 || m % 2 == 0) fail("C needs m = 2k+1 >= 5");
      break;
    case Family::D:
      r.range = "kappa^2 > 0";
      r.dimension_rule = "m = 9";
      if (c != 1) fail("D exists only in CP^m");
      if (m != 9) fail("D needs m = 9");
      break;
    case Family::E:
      r.range = "kappa^2 > 0";
      r.dimension_rule = "m = 15";
      if (c != 1) fail("E exists only in CP^m");
      if (m != 15) fail("E needs m = 15");
      break;
  }
  if constexpr (std::is_same_v<F, Rational>) {
    if (r.valid && spec.family != Family::A0) {
      const RadicalScalar& p = spec.param;
      bool ok = sign(p) > 0;
      if (spec.family == Family::A1 && c == -1) ok = ok && p > RadicalScalar(1);
      if (spec.family == Family::A2 && c == -1) ok = ok && p > RadicalScalar(1);
      if (spec.family == Family::A1tube) ok = ok && p < RadicalScalar(1);
      if (spec.family == Family::B && c == -1) ok = ok && p < RadicalScalar(4);
      if (!ok) fail("parameter " + p.str() + " outside " + r.range);
      if (spec.family == Family::B && c == -1 && p == RadicalScalar(3))
        r.flags.push_back("coincidence mu = kappa = sqrt(3)");
    }
  }
  return r;
}

template <class F>
Surd<F> mu_star(const Surd<F>& mu, const Surd<F>& kappa, int c) {
  Surd<F> d = Surd<F>(2) * mu - kappa;
  if (d.is_zero()) throw DomainError("mu* undefined (2 mu = kappa)");
  return (kappa * mu + Surd<F>(2 * c)) / d;
}

template <class F>
PrincipalSpectrum<F> spectrum(const ModelSpec<F>& spec) {
  auto v = family_constraints(spec);
  if (!v.valid) throw DomainError(v.message);
  using S = Surd<F>;
  const int c = spec.sf.c, m = spec.sf.m;
  PrincipalSpectrum<F> sp;
  auto block = [](std::string name, S val, int mult) {
    PrincipalBlock<F> b;
    b.name = std::move(name);
    b.value = std::move(val);
    b.multiplicity = mult;
    return b;
  };
  switch (spec.family) {
    case Family::A0:
      sp.kappa = S(2);
      sp.blocks.push_back(block("nu", S(1), 2 * m - 2));
      break;
    case Family::A1:
    case Family::A1tube: {
      S mu = adjoin_sqrt(spec.param);
      sp.kappa = mu - S(c) / mu;
      sp.blocks.push_back(block("mu", mu, 2 * (m - 1)));
      break;
    }
    case Family::A2: {
      S mu1 = adjoin_sqrt(spec.param);
      S mu3 = S(-c) / mu1;
      sp.kappa = mu1 + mu3;
      sp.blocks.push_back(block("mu1", mu1, 2 * spec.l()));
      sp.blocks.push_back(block("mu3", mu3, 2 * spec.k));
      break;
    }
    case Family::B:
    case Family::C:
    case Family::D:
    case Family::E: {
      S kappa = adjoin_sqrt(spec.param);
      S root = adjoin_sqrt(in_tower_of(S(4) + S(c) * spec.param, kappa));
      S mu2 = (S(-2 * c) + root) / kappa;
      S mu4 = (S(-2 * c) - root) / kappa;
      sp.kappa = kappa;
      int m13 = 0, m24 = m - 1;
      if (spec.family == Family::C) {
        m13 = m - 3;
        m24 = 2;
      } else if (spec.family == Family::D) {
        m13 = 4;
        m24 = 4;
      } else if (spec.family == Family::E) {
        m13 = 8;
        m24 = 6;
      }
      if (m13 > 0) {
        // mu1 = cot r is the positive root of x^2 - kappa x - 1
        S mu1 = (kappa + adjoin_sqrt(in_tower_of(spec.param + S(4), kappa))) / S(2);
        sp.blocks.push_back(block("mu1", mu1, m13));
        sp.blocks.push_back(block("mu3", S(-c) / mu1, m13));
      }
      auto b2 = block("mu2", mu2, m24), b4 = block("mu4", mu4, m24);
      b2.j_action = b4.j_action = JAction::Swapped;
      int i2 = static_cast<int>(sp.blocks.size());
      b2.partner = i2 + 1;
      b4.partner = i2;
      sp.blocks.push_back(b2);
      sp.blocks.push_back(b4);
      for (auto& b : sp.blocks)
        if (b.value == sp.kappa) sp.coincidence = true;
      if (sp.coincidence) sp.note = "a D-curvature coincides with kappa; blocks kept separate";
      break;
    }
  }
  if (sp.dimension() != spec.sf.n()) throw InternalMismatch("spectrum multiplicities do not sum to n");
  return sp;
}

template <class F>
Surd<F> power_trace(const PrincipalSpectrum<F>& sp, int k) {
  auto pw = [](const Surd<F>& x, int e) {
    Surd<F> r(1);
    for (int i = 0; i < e; ++i) r = r * x;
    return r;
  };
  Surd<F> s = pw(sp.kappa, k);
  for (auto& b : sp.blocks) s = s + Surd<F>(b.multiplicity) * pw(b.value, k);
  return s;
}

template <class F>
ParamConversions<F> param_conversions(const ModelSpec<F>& spec) {
  if (!is_class_A(spec.family)) throw DomainError("parameter conversions apply to the A-family");
  using S = Surd<F>;
  ParamConversions<F> pc;
  pc.t = spec.param;
  S tc = pc.t + S(spec.sf.c);
  if (tc.is_zero()) throw DomainError("t + c = 0");
  pc.r1sq = pc.t / tc;
  pc.r2sq = S(1) / tc;
  S mu = adjoin_sqrt(pc.t);
  pc.kappa = mu - S(spec.sf.c) / mu;
  return pc;
}

std::vector<CatalogRow> catalog_rows(const SpaceForm& sf) {
  std::vector<CatalogRow> rows;
  const int c = sf.c, m = sf.m;
  if (c == -1) rows.push_back({Family::A0, 0, "A0", "-", "horosphere"});
  rows.push_back({Family::A1, 0, family_name(Family::A1, c), "t", c == 1 ? "t > 0" : "t > 1"});
  if (c == -1) rows.push_back({Family::A1tube, 0, "A1''", "t", "0 < t < 1"});
  for (int k = 1; k <= m - 2; ++k)
    rows.push_back({Family::A2, k, "A2 (k=" + std::to_string(k) + ")", "t", c == 1 ? "t > 0" : "t > 1"});
  rows.push_back({Family::B, 0, "B", "kappa2", c == 1 ? "kappa^2 > 0" : "0 < kappa^2 < 4"});
  if (c == 1) {
    if (m >= 5 && m % 2 == 1) rows.push_back({Family::C, 0, "C", "kappa2", "kappa^2 > 0"});
    if (m == 9) rows.push_back({Family::D, 0, "D", "kappa2", "kappa^2 > 0"});
    if (m == 15) rows.push_back({Family::E, 0, "E", "kappa2", "kappa^2 > 0"});
  }
  return rows;
}

#define HOPF_INSTANTIATE(F)                                                        \
  template ValidityReport family_constraints<F>(const ModelSpec<F>&);              \
  template PrincipalSpectrum<F> spectrum<F>(const ModelSpec<F>&);                  \
  template Surd<F> mu_star<F>(const Surd<F>&, const Surd<F>&, int);                \
  template Surd<F> power_trace<F>(const PrincipalSpectrum<F>&, int);               \
  template ParamConversions<F> param_conversions<F>(const ModelSpec<F>&);
HOPF_INSTANTIATE(Rational)
HOPF_INSTANTIATE(RatFunc)
#undef HOPF_INSTANTIATE

}  // namespace hopf
