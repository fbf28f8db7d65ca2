#include "hopflab/classifier.hpp"

#include <algorithm>

#include "hopflab/block.hpp"
#include "hopflab/delta.hpp"

namespace hopf {

namespace {

using RS = RadicalScalar;
using SS = SymbolicScalar;

std::string space_name(int c) { return c == 1 ? "CP" : "CH"; }
std::string num(long v) { return std::to_string(v); }

EigenOut eig_out(const RS& x) { return {x.str(), to_double(x)}; }
EigenOut eig_out(const SS& x) { return {x.compacted().str(), std::nullopt}; }

RatFunc as_ratfunc(const SS& x) {
  auto r = x.compacted().base_value();
  if (!r) throw InternalMismatch("expected a rational function, got " + x.str());
  return *r;
}

// Exact roots of the numerator inside the domain.
std::vector<RS> roots_in(const QPoly& p, const Domain& dom) {
  std::vector<RS> out;
  if (p.is_zero_poly()) throw InternalMismatch("condition vanishes identically");
  for (auto& r : exact_real_roots(p, dom)) {
    if (!r.value) throw InternalMismatch("root of " + p.str() + " not expressible exactly");
    out.push_back(*r.value);
  }
  return out;
}

bool same_set(std::vector<RS> a, std::vector<RS> b) {
  if (a.size() != b.size()) return false;
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  for (size_t i = 0; i < a.size(); ++i)
    if (!(a[i] == b[i])) return false;
  return true;
}

bool same_set_sym(const std::vector<SS>& a, const std::vector<SS>& b) {
  if (a.size() != b.size()) return false;
  for (auto& x : a) {
    bool hit = false;
    for (auto& y : b) hit = hit || x.compacted() == y.compacted();
    if (!hit) return false;
  }
  return true;
}

std::string radius_of(Family fam, int c, const RS& p) {
  const std::string v = p.str();
  switch (fam) {
    case Family::A0: return "horosphere";
    case Family::A1tube: return "tanh^2 r = " + v;
    case Family::A1:
    case Family::A2: return (c == 1 ? "cot^2 r = " : "coth^2 r = ") + v;
    default: return (c == 1 ? "2 cot 2r = kappa, kappa^2 = " : "2 tanh 2r = kappa, kappa^2 = ") + v;
  }
}

std::string radius_range(Family fam, int c) {
  switch (fam) {
    case Family::A0: return "horosphere";
    case Family::A1tube: return "tanh^2 r = t, any r > 0";
    case Family::A1:
    case Family::A2: return c == 1 ? "cot^2 r = t, 0 < r < pi/2" : "coth^2 r = t, any r > 0";
    default: return c == 1 ? "2 cot 2r = kappa, 0 < r < pi/4" : "2 tanh 2r = kappa, any r > 0";
  }
}

// cot^2 r from kappa = cot r - tan r equals the target exactly.
bool cot2_matches(const RS& kappa2, const RS& cot2) {
  RS d = RS(2) * cot2 - kappa2 - RS(2);
  return sign(d) >= 0 && d * d == kappa2 * (kappa2 + RS(4));
}

ClassificationEntry base_entry(Family fam, const SpaceForm& sf, int k) {
  ClassificationEntry e;
  e.family = family_name(fam, sf.c);
  e.space = space_name(sf.c);
  e.m = sf.m;
  e.k = k;
  e.param_name = (fam == Family::A0) ? "" : (fam == Family::A1 || fam == Family::A1tube || fam == Family::A2) ? "t"
                                                                                                                : "kappa2";
  return e;
}

void fill_from_frame(ClassificationEntry& e, const TypeReport<Rational>& tr) {
  e.type = tr.type;
  e.verdict = tr.verdict;
  e.mass_symmetric = tr.mass_symmetric;
  e.eigenvalues.clear();
  for (auto& x : tr.eigenvalues) e.eigenvalues.push_back(eig_out(x));
  if (!tr.witness.empty() && !tr.type) e.notes.push_back(tr.witness);
}

std::vector<RS> b_cubic_roots(int c, int n, const RS& s) {
  const RS C(c), N(n);
  RS lu = RS(2) * C * (N - RS(1)) * (s + RS(4) * C) / s;
  RS disc = (s + RS(4) * C) * (s * s * s - RS(12) * C * s * s + RS(64) * C * (N + RS(1)) * (N + RS(1)));
  RS root = adjoin_sqrt(disc);
  RS base = (s + RS(4) * C) * (s + RS(4) * C * (N + RS(1)));
  return {lu, (base + root) / (RS(2) * s), (base - root) / (RS(2) * s)};
}

std::string anchor_for_b(int c, int m, bool two_type, const RS& s) {
  if (two_type) return s == RS(4 * m) ? "T1.iv" : "T1.v";
  if (m == 2) return c == 1 ? "T3" : "T4";
  return "B.3type";
}

}  // namespace

nlohmann::json to_json(const ClassificationEntry& e) {
  nlohmann::json j;
  j["family"] = e.family;
  j["space"] = e.space;
  j["m"] = e.m;
  if (e.family == "A2") j["k"] = e.k;
  if (!e.param_name.empty()) {
    j["param_name"] = e.param_name;
    j["param"] = e.param;
  }
  j["is_range"] = e.is_range;
  j["radius"] = e.radius;
  j["type"] = e.type ? nlohmann::json(*e.type) : nlohmann::json(nullptr);
  j["verdict"] = e.verdict;
  auto ev = nlohmann::json::array();
  for (auto& x : e.eigenvalues) {
    nlohmann::json o;
    o["exact"] = x.exact;
    o["decimal"] = x.decimal ? nlohmann::json(*x.decimal) : nlohmann::json(nullptr);
    ev.push_back(o);
  }
  j["eigenvalues"] = ev;
  j["mass_symmetric"] = e.mass_symmetric;
  j["paper_anchor"] = e.anchor;
  j["verified_by"] = e.verified_by;
  j["notes"] = e.notes;
  return j;
}

ClassificationEntry classify(const ConcreteSpec& spec) {
  const auto& sf = spec.sf;
  const int c = sf.c, m = sf.m, n = sf.n();
  auto e = base_entry(spec.family, sf, spec.k);
  e.param = spec.family == Family::A0 ? "" : spec.param.str();
  e.radius = radius_of(spec.family, c, spec.param);
  spectrum(spec);  // range and dimension checks
  switch (spec.family) {
    case Family::A0: {
      auto tr = chen_type_evidence(build_frame_module(spec));
      fill_from_frame(e, tr);
      e.verified_by = {"frame"};
      e.anchor = "A0.horosphere";
      break;
    }
    case Family::A1:
    case Family::A1tube: {
      auto tr = chen_type_evidence(build_frame_module(spec));
      auto cc = cross_check_frame_vs_block(spec);
      if (!cc.agree) throw InternalMismatch("frame and block engines disagree: " + cc.detail);
      e.type = cc.type;
      e.verdict = cc.verdict;
      e.mass_symmetric = cc.mass_symmetric;
      for (auto& x : cc.eigenvalues) e.eigenvalues.push_back(eig_out(x));
      e.verified_by = {"frame", "block"};
      if (c == 1)
        e.anchor = cc.type == 1 ? "L2.one-type" : (cc.mass_symmetric ? "C1" : "T1.i");
      else
        e.anchor = "T2";
      if (cc.null_type) e.notes.push_back("one eigenfunction is harmonic and nonconstant");
      break;
    }
    case Family::A2: {
      auto rep = a2_type_analysis<Rational>(spec.k, spec.l(), c, spec.param);
      if (!rep.cubic_ok || !rep.root_relations_ok) throw InternalMismatch("block cubic fails for A2");
      e.type = rep.type;
      e.verdict = rep.verdict;
      e.mass_symmetric = rep.mass_symmetric;
      for (auto& x : rep.eigenvalues) e.eigenvalues.push_back(eig_out(x));
      e.verified_by = {"block"};
      const int K = spec.K(), L = spec.L();
      if (c == 1 && rep.type == 2)
        e.anchor = spec.param == RS(Rational(K + 1, L + 1)) ? "T1.ii" : "T1.iii";
      else
        e.anchor = rep.null_type ? "A2.null" : "A2.3type";
      for (auto& s : rep.coincidences) e.notes.push_back("eigenvalue coincidence " + s);
      break;
    }
    case Family::B: {
      auto tr = chen_type_evidence(build_frame_module(spec));
      fill_from_frame(e, tr);
      e.verified_by = {"frame"};
      if (!tr.type) throw InternalMismatch("class-B model without a finite type: " + tr.witness);
      // the cubic must annihilate v and its roots must be the closed forms
      auto cu = b_type_cubic(spec);
      if (!is_zero_matrix(FrameVec<Rational>(cubic_residual(build_frame_module(spec), cu))))
        throw InternalMismatch("class-B cubic does not annihilate the position vector");
      auto roots = b_cubic_roots(c, n, spec.param);
      for (auto& x : tr.eigenvalues) {
        bool hit = false;
        for (auto& y : roots) hit = hit || x == y;
        if (!hit) throw InternalMismatch("class-B eigenvalue " + x.str() + " is not a root of the cubic");
      }
      e.verified_by.push_back("cubic");
      e.anchor = anchor_for_b(c, m, *tr.type == 2, spec.param);
      if (c == 1 && spec.param == RS(4 * m)) e.radius += ", cot r = sqrt(" + num(m) + ") + sqrt(" + num(m + 1) + ")";
      if (c == 1 && *tr.type == 2 && !(spec.param == RS(4 * m))) {
        RS target = adjoin_sqrt(RS(2 * m * m - 1)) + adjoin_sqrt(RS(2 * m * m - 2));
        if (cot2_matches(spec.param, target))
          e.radius += ", cot r = sqrt(sqrt(" + num(2 * m * m - 1) + ") + sqrt(" + num(2 * m * m - 2) + "))";
      }
      break;
    }
    case Family::C:
    case Family::D:
    case Family::E: {
      auto ex = cde_exclude(spec.family, m);
      if (!ex.excluded()) throw InternalMismatch("class C/D/E exclusion did not close");
      e.verdict = "not of 2-type";
      e.verified_by = {"elimination"};
      e.anchor = "CDE.excluded";
      e.notes.push_back("two-type conditions force f = -kappa and then " + ex.witness.str() +
                        " = 0, which has no positive root");
      e.notes.push_back("higher type not determined");
      break;
    }
  }
  return e;
}

ClassificationEntry classify_symbolic(const SymbolicSpec& spec) {
  const auto& sf = spec.sf;
  const int c = sf.c;
  auto e = base_entry(spec.family, sf, spec.k);
  auto vr = family_constraints(spec);
  if (!vr.valid) throw DomainError(vr.message);
  e.is_range = true;
  e.param = vr.range;
  e.radius = radius_range(spec.family, c);
  switch (spec.family) {
    case Family::A2: {
      auto rep = a2_type_analysis<RatFunc>(spec.k, spec.l(), c, spec.param);
      if (!rep.cubic_ok || !rep.root_relations_ok) throw InternalMismatch("block cubic fails for A2");
      e.type = rep.type;
      e.verdict = "generic " + rep.verdict;
      for (auto& x : rep.eigenvalues) e.eigenvalues.push_back(eig_out(x));
      e.mass_symmetric = false;
      e.verified_by = {"block"};
      e.anchor = "A2.3type";
      break;
    }
    case Family::C:
    case Family::D:
    case Family::E: {
      auto ex = cde_exclude(spec.family, sf.m);
      if (!ex.excluded()) throw InternalMismatch("class C/D/E exclusion did not close");
      e.verdict = "not of 2-type";
      e.verified_by = {"elimination"};
      e.anchor = "CDE.excluded";
      break;
    }
    default: {
      auto tr = chen_type_evidence(build_frame_module(spec));
      e.type = tr.type;
      e.verdict = tr.type ? "generic " + tr.verdict : tr.verdict;
      e.mass_symmetric = tr.mass_symmetric;
      for (auto& x : tr.eigenvalues) e.eigenvalues.push_back(eig_out(x));
      e.verified_by = {"frame"};
      if (spec.family == Family::A1 || spec.family == Family::A1tube) {
        auto cc = cross_check_frame_vs_block(spec);
        if (!cc.agree) throw InternalMismatch("frame and block engines disagree: " + cc.detail);
        e.verified_by.push_back("block");
        e.anchor = c == 1 ? "T1.i" : "T2";
      } else if (spec.family == Family::B) {
        e.anchor = sf.m == 2 ? (c == 1 ? "T3" : "T4") : "B.3type";
      } else {
        e.anchor = "A0.horosphere";
      }
      if (!tr.type && !tr.witness.empty()) e.notes.push_back(tr.witness);
    }
  }
  return e;
}

std::vector<ClassificationEntry> a1_classify(const SpaceForm& sf) {
  const int c = sf.c, m = sf.m, n = sf.n();
  std::vector<ClassificationEntry> out;
  std::vector<Family> fams = {Family::A1};
  if (c == -1) fams.push_back(Family::A1tube);
  for (Family fam : fams) {
    auto spec = symbolic_spec(fam, sf);
    const SS t = spec.param, C(c), N(n);
    auto generic = classify_symbolic(spec);
    auto tr = chen_type_evidence(build_frame_module(spec));
    // closed forms of the two eigenvalues
    SS lu = SS(2) * (N + SS(1)) * (t + C), lv = (t + C) * (N * t + C) / t;
    if (!same_set_sym(tr.eigenvalues, {lu, lv})) throw InternalMismatch("A1 eigenvalues differ from closed forms");
    const Domain dom = fam == Family::A1tube ? Domain::open(Rational(0), Rational(1))
                                             : (c == 1 ? Domain::positive() : Domain{Rational(1), std::nullopt});
    auto one_type = roots_in(as_ratfunc(lu - lv).num(), dom);
    // mass symmetry: both constant blocks of the center equal I/(m+1)
    auto bm = fam == Family::A1 ? a2_type_analysis<RatFunc>(0, m - 1, c, t)
                                : a2_type_analysis<RatFunc>(m - 1, 0, c, SS(1) / t);
    const SS std_center = SS(Rational(1, m + 1));
    std::vector<RS> ms_points;
    for (auto& x : roots_in(as_ratfunc(bm.x0_a - std_center).num(), dom)) {
      auto d = as_ratfunc(bm.x0_d - std_center).num();
      if (d.eval<RS>(x).is_zero()) ms_points.push_back(x);
    }
    std::vector<RS> null_points;
    for (auto& lam : {lu, lv})
      for (auto& x : roots_in(as_ratfunc(lam).num(), dom)) null_points.push_back(x);

    std::string excl;
    for (auto& x : one_type) excl += ", t != " + x.str();
    generic.param += excl;
    generic.verdict = "2-type";
    out.push_back(generic);
    auto point = [&](const RS& x, const std::string& note) {
      auto e = classify(concrete_spec(fam, sf, x));
      e.notes.push_back(note);
      out.push_back(e);
    };
    for (auto& x : one_type) point(x, "the two eigenvalues coincide");
    for (auto& x : ms_points) point(x, "center of mass is I/(m+1)");
    for (auto& x : null_points) point(x, "an eigenvalue vanishes");
  }
  return out;
}

A2SolveReport a2_two_type_solve(const SpaceForm& sf, int k) {
  const int c = sf.c, m = sf.m;
  if (k < 1 || k > m - 2) throw DomainError("A2 needs 1 <= k <= m-2");
  const int l = m - 1 - k, K = 2 * k + 1, L = 2 * l + 1;
  A2SolveReport rep;
  rep.m = m;
  rep.k = k;
  rep.c = c;
  const Rational C(c);
  QPoly lin(std::vector<Rational>{-C * Rational(K + 1), Rational(L + 1)});
  QPoly quad(std::vector<Rational>{Rational(K * (K + 2)), Rational(-2 * c * (L * K + K + L + 2)),
                                   Rational(L * (L + 2))});
  rep.condition = lin * quad;
  const Domain dom = c == 1 ? Domain::positive() : Domain{Rational(1), std::nullopt};
  for (auto& t : roots_in(rep.condition, dom)) {
    A2Solution s;
    s.t = t;
    if (t == RS(Rational(K + 1, L + 1)))
      s.which = 'a';
    else if (t == RS(Rational(K, L + 2)))
      s.which = 'b';
    else if (t == RS(Rational(K + 2, L)))
      s.which = 'c';
    else
      throw InternalMismatch("unexpected 2-type root " + t.str());
    const RS mu1sq = t, mu3sq = RS(1) / t;
    RS lu = RS((L + 1) * (L + 2)) * mu1sq + RS((K + 1) * (K + 2)) * mu3sq - RS(L + K + 2 * L * K);
    RS lv = RS(L) * mu1sq + RS(K) * mu3sq + RS(L + K);
    s.eigenvalues = {lu, lv};
    auto br = a2_type_analysis<Rational>(k, l, c, t);
    if (br.type != 2 || !same_set(br.eigenvalues, s.eigenvalues))
      throw InternalMismatch("block engine does not confirm the 2-type root t = " + t.str());
    s.mass_symmetric = br.mass_symmetric;
    if (s.mass_symmetric != (s.which == 'a')) throw InternalMismatch("mass symmetry of A2 2-type roots");
    rep.solutions.push_back(s);
  }
  if (c == 1) {
    // case (c) at k is case (b) at m-1-k with the complementary radius
    const int k2 = m - 1 - k, K2 = 2 * k2 + 1, L2 = 2 * (m - 1 - k2) + 1;
    const Rational tb2(K2, L2 + 2), tc(K + 2, L);
    bool ok = tc * tb2 == Rational(1);
    auto a = a2_type_analysis<Rational>(k, l, 1, RS(tc));
    auto b = a2_type_analysis<Rational>(k2, m - 1 - k2, 1, RS(tb2));
    rep.c_matches_b_swapped = ok && same_set(a.eigenvalues, b.eigenvalues);
  }
  return rep;
}

A2Consistency a2_consistency(const SpaceForm& sf, int k) {
  using CP = CondPoly<SS>;
  const int c = sf.c, n = sf.n();
  auto spec = symbolic_spec(Family::A2, sf, k);
  auto sp = spectrum(spec);
  const SS kappa = sp.kappa, mu1 = sp.blocks[0].value, mu3 = sp.blocks[1].value;
  const CP p = CP::var(Unknown::p), f = CP::var(Unknown::f), f2 = CP::var(Unknown::f2), K(kappa), C(c);
  auto qf = [&](const SS& mu) { return q_free_residual<CP>(p, f, f2, K, CP(mu), CP(mu_star(mu, kappa, c)), c, n); };
  auto e3 = [&](const SS& mu) { return e3_residual<CP>(p, f, f2, K, CP(mu), CP(mu_star(mu, kappa, c)), c, n); };
  A2Consistency rep;
  rep.closed_form = f * (f2 + f * f) + CP(2) * K * f * (f + K) - C * CP(n + 3) * f - CP(4) * C * K;
  // the p-coefficient of the q-free condition at mu1 is -(2c - f mu3), and symmetrically
  rep.from_cross = qf(mu1) * (CP(2 * c) - f * CP(mu1)) - qf(mu3) * (CP(2 * c) - f * CP(mu3));
  auto p_rel = (e3(mu1) - e3(mu3)) / (SS(-2) * (mu1 - mu3));    // p - (...)
  auto fp_rel = (qf(mu1) - qf(mu3)) / (-(mu1 - mu3));           // f p - (...)
  rep.from_pq = fp_rel - f * p_rel;
  rep.cross_matches = rep.from_cross.degree_in(Unknown::p) == 0 && proportional(rep.from_cross, rep.closed_form);
  rep.pq_matches = rep.from_pq.degree_in(Unknown::p) == 0 && proportional(rep.from_pq, rep.closed_form);
  rep.vanishes_at_solutions = true;
  for (auto& s : a2_two_type_solve(sf, k).solutions) {
    auto cs = concrete_spec(Family::A2, sf, s.t, k);
    auto csp = spectrum(cs);
    const RS fk = power_trace(csp, 1), f2k = power_trace(csp, 2), kk = csp.kappa;
    RS v = fk * (f2k + fk * fk) + RS(2) * kk * fk * (fk + kk) - RS(c * (n + 3)) * fk - RS(4 * c) * kk;
    rep.vanishes_at_solutions = rep.vanishes_at_solutions && v.is_zero();
  }
  return rep;
}

BTwoTypeReport b_two_type_solve(const SpaceForm& sf) {
  const int c = sf.c, m = sf.m, n = sf.n();
  BTwoTypeReport rep;
  rep.m = m;
  rep.c = c;
  auto Q = [](long v) { return Rational(v); };
  rep.compat = QPoly(std::vector<Rational>{Q(32L * c * m * (m * m - 1)), Q(-8L * (m * m + 2 * m - 1)),
                                           Q(-4L * c * (m - 1)), Q(1)});
  rep.compat_n = QPoly(std::vector<Rational>{Q(4L * c * (n - 1) * (n + 1) * (n + 3)), Q(-2L * (n * n + 6 * n + 1)),
                                             Q(-2L * c * (n - 1)), Q(1)});
  rep.factored = QPoly(std::vector<Rational>{Q(-2L * c * (n + 1)), Q(1)}) *
                 QPoly(std::vector<Rational>{Q(-2L * (n - 1) * (n + 3)), Q(4L * c), Q(1)});
  rep.forms_agree = rep.compat == rep.compat_n && rep.compat == rep.factored;
  const Domain dom = c == 1 ? Domain::positive() : Domain::open(Rational(0), Rational(4));
  rep.roots = roots_in(rep.factored, dom);
  for (auto& s : rep.roots) {
    auto e = classify(concrete_spec(Family::B, sf, s));
    if (e.type != 2 || !e.mass_symmetric) throw InternalMismatch("class-B root " + s.str() + " is not 2-type");
    std::vector<RS> expect;
    if (s == RS(4 * m)) {
      expect = {RS(4 * m) - RS(Rational(4, m)), RS(4 * (m + 1))};
    } else {
      RS w = adjoin_sqrt(RS(2 * (n * n + 2 * n - 1)));
      expect = {RS(Rational(2, n + 3)) * (RS(2) * w + RS((n + 1) * (n + 1))),
                RS(Rational(n + 3, n - 1)) * (w + RS(2 * n))};
    }
    auto tr = chen_type_evidence(build_frame_module(concrete_spec(Family::B, sf, s)));
    if (!same_set(tr.eigenvalues, expect)) throw InternalMismatch("class-B 2-type eigenvalues differ from closed forms");
    rep.entries.push_back(e);
  }
  std::sort(rep.entries.begin(), rep.entries.end(),
            [](const ClassificationEntry& a, const ClassificationEntry& b) { return a.anchor < b.anchor; });
  return rep;
}

BThreeTypeReport b_three_type(const SpaceForm& sf, const RadicalScalar& kappa2) {
  const int c = sf.c, m = sf.m, n = sf.n();
  auto spec = concrete_spec(Family::B, sf, kappa2);
  spectrum(spec);
  BThreeTypeReport rep;
  rep.kappa2 = kappa2;
  const RS s = kappa2, C(c), N(n), s4 = s + RS(4) * C;
  rep.p = -(s4 * (s + RS(2) * C * (RS(3) * N + RS(1))) / s);
  rep.q = RS(4) * s4 *
          (C * (N + RS(1)) * s * s + (RS(3) * N * N + RS(6) * N - RS(1)) * s + RS(8) * C * (N * N - RS(1))) / (s * s);
  rep.r = -(RS(4) * (N - RS(1)) * (N + RS(3)) * s4 * s4 * (s + RS(2) * C * (N + RS(1))) / (s * s));
  auto cu = b_type_cubic(spec);
  if (!(cu.p == rep.p && cu.q == rep.q && cu.r == rep.r))
    throw InternalMismatch("class-B cubic coefficients differ between frame module and closed forms");
  auto roots = b_cubic_roots(c, n, s);
  rep.lambda_u = roots[0];
  rep.lambda_v = roots[1];
  rep.lambda_w = roots[2];
  rep.roots_ok = true;
  for (auto& x : roots) rep.roots_ok = rep.roots_ok && (x * x * x + rep.p * x * x + rep.q * x + rep.r).is_zero();
  rep.degenerate = c == 1 && rep.lambda_u == rep.lambda_w;
  if (s == RS(4 * m) && c == 1) {
    const RS M(m);
    QPoly lhs(std::vector<Rational>{Rational(-8 * (m + 1)), Rational(1)});
    QPoly quad(std::vector<Rational>{Rational(16L * (m - 1) * (m + 1) * (m + 1), m),
                                     Rational(-4L * (m + 1) * (2 * m - 1), m), Rational(1)});
    auto prod = lhs * quad;
    rep.factorization_ok = RS(prod.coeff(2)) == rep.p && RS(prod.coeff(1)) == rep.q && RS(prod.coeff(0)) == rep.r;
  }
  rep.entry = classify(spec);
  return rep;
}

CDEExclusion cde_exclude(Family family, int m) {
  using CP = CondPoly<SS>;
  if (family == Family::C && !(m >= 5 && m % 2 == 1)) throw DomainError("class C needs odd m >= 5");
  if (family == Family::D && m != 9) throw DomainError("class D needs m = 9");
  if (family == Family::E && m != 15) throw DomainError("class E needs m = 15");
  if (family != Family::C && family != Family::D && family != Family::E)
    throw DomainError("exclusion applies to classes C, D, E");
  const int c = 1, n = 2 * m - 1;
  auto spec = symbolic_spec(family, SpaceForm(c, m));
  auto sp = spectrum(spec);
  auto find = [&](const std::string& name) {
    for (auto& b : sp.blocks)
      if (b.name == name) return b.value;
    throw InternalMismatch("missing principal curvature " + name);
  };
  const SS kappa = sp.kappa, mu1 = find("mu1"), mu3 = find("mu3"), mu2 = find("mu2"), mu4 = find("mu4");
  const CP p = CP::var(Unknown::p), f = CP::var(Unknown::f), f2 = CP::var(Unknown::f2), K(kappa);
  auto e3 = [&](const SS& mu) {
    return e3_residual<CP>(p, f, f2, K, CP(mu), CP(mu_star(mu, kappa, c)), c, n);
  };
  auto qf = [&](const SS& mu) {
    return q_free_residual<CP>(p, f, f2, K, CP(mu), CP(mu_star(mu, kappa, c)), c, n);
  };
  CDEExclusion ex;
  ex.family = family;
  ex.m = m;
  // normalized so that p (resp. f p) has coefficient 1
  ex.p_from_pair13 = (e3(mu1) - e3(mu3)) / (SS(-2) * (mu1 - mu3));
  ex.p_from_pair24 = (e3(mu2) - e3(mu4)) / (SS(-2) * (mu2 - mu4));
  ex.fp_from_pair13 = (qf(mu1) - qf(mu3)) / (-(mu1 - mu3));
  ex.fp_from_pair24 = (qf(mu2) - qf(mu4)) / (-(mu2 - mu4));
  auto lin = ex.fp_from_pair13 - ex.fp_from_pair24;
  if (lin.degree_in(Unknown::p) > 0 || lin.degree_in(Unknown::f2) > 0 || lin.degree_in(Unknown::f) != 1 ||
      lin.degree_in(Unknown::q) > 0)
    throw InternalMismatch("f p relations do not reduce to a linear equation in f: " + lin.str());
  SS a = lin.coeff({0, 0, 1, 0}), b = lin.coeff({0, 0, 0, 0});
  ex.f_value = (-b / a).compacted();
  ex.f_is_minus_kappa = ex.f_value == -kappa;
  ex.second_relation = (ex.p_from_pair24 - ex.p_from_pair13) / SS(4);
  if (ex.second_relation.degree_in(Unknown::p) > 0 || ex.second_relation.degree_in(Unknown::f2) > 0)
    throw InternalMismatch("p relations do not eliminate p and f2");
  auto at = ex.second_relation.substitute(Unknown::f, ex.f_value).constant_value();
  if (!at) throw InternalMismatch("second relation does not close at f = -kappa");
  ex.witness = as_ratfunc(*at);
  ex.positive_roots = ex.witness.is_zero() ? -1 : count_real_roots(ex.witness.num(), Domain::positive());
  return ex;
}

ClassificationEntry horosphere_exclude(int m) {
  SpaceForm sf(-1, m);
  auto dm = build_frame_module(symbolic_spec(Family::A0, sf));
  auto l2 = FrameVec<RatFunc>(dm.L * dm.L * dm.v);
  auto l3 = FrameVec<RatFunc>(dm.L * l2);
  if (!is_zero_matrix(l3) || is_zero_matrix(l2)) throw InternalMismatch("horosphere is not nilpotent of order 3");
  auto e = classify(concrete_spec(Family::A0, sf, RS(1)));
  if (e.type) throw InternalMismatch("horosphere reported with a finite type");
  e.notes.push_back("L^3 v = 0 and L^2 v != 0");
  return e;
}

TheoremReport theorem_report(const std::string& id, int m) {
  TheoremReport rep;
  rep.id = id;
  rep.m = m;
  rep.banner = "complete relative to the standard lists of Hopf hypersurfaces with constant principal curvatures";
  auto need_m2 = [&] {
    if (m != 2) throw DomainError(id + " is stated for m = 2");
  };
  auto cde_notes = [&](const SpaceForm& sf) {
    for (auto& row : catalog_rows(sf))
      if (row.family == Family::C || row.family == Family::D || row.family == Family::E) {
        auto ex = cde_exclude(row.family, sf.m);
        if (!ex.excluded()) throw InternalMismatch("class " + row.name + " not excluded");
        rep.notes.push_back("class " + row.name + " excluded: f = -kappa and " + ex.witness.str() + " != 0");
      }
  };
  if (id == "T1") {
    SpaceForm sf(1, m);
    for (auto& e : a1_classify(sf))
      if (e.is_range) rep.entries.push_back(e);
    for (int k = 1; k <= m - 2; ++k)
      for (auto& s : a2_two_type_solve(sf, k).solutions)
        if (s.which == 'a') rep.entries.push_back(classify(concrete_spec(Family::A2, sf, s.t, k)));
    for (int k = 1; k <= m - 2; ++k) {
      auto sol = a2_two_type_solve(sf, k);
      if (!sol.c_matches_b_swapped) throw InternalMismatch("case (c) is not the swapped case (b)");
      for (auto& s : sol.solutions)
        if (s.which == 'b') {
          auto e = classify(concrete_spec(Family::A2, sf, s.t, k));
          e.notes.push_back("same hypersurface as k = " + num(m - 1 - k) + " at t = " + (RS(1) / s.t).str() +
                            " (complementary radius)");
          rep.entries.push_back(e);
        }
    }
    auto b = b_two_type_solve(sf);
    if (!b.forms_agree) throw InternalMismatch("class-B compatibility forms disagree");
    for (auto& e : b.entries) rep.entries.push_back(e);
    cde_notes(sf);
    rep.notes.push_back("A1 at t = 1/" + num(2 * m + 1) + " is of 1-type");
  } else if (id == "T2") {
    SpaceForm sf(-1, m);
    for (auto& e : a1_classify(sf)) {
      if (!e.is_range) continue;
      if (e.family == "A1''")
        e.notes.push_back("null 2-type at t = 1/" + num(2 * m - 1) + ": an eigenvalue vanishes there");
      rep.entries.push_back(e);
    }
    for (int k = 1; k <= m - 2; ++k)
      if (!a2_two_type_solve(sf, k).solutions.empty()) throw InternalMismatch("hyperbolic A2 2-type root");
    if (!b_two_type_solve(sf).roots.empty()) throw InternalMismatch("hyperbolic class-B 2-type root");
    rep.notes.push_back("A2: no 2-type radius; B: no 2-type radius in 0 < kappa^2 < 4");
    rep.notes.push_back("A0: " + horosphere_exclude(m).verdict);
  } else if (id == "T3" || id == "T4") {
    need_m2();
    const int c = id == "T3" ? 1 : -1;
    SpaceForm sf(c, 2);
    auto e = classify_symbolic(symbolic_spec(Family::B, sf));
    if (e.type != 3 || !e.mass_symmetric) throw InternalMismatch("class B is not generically mass-symmetric 3-type");
    e.verdict = "3-type, mass-symmetric";
    // a concrete member through the cubic
    auto sample = b_three_type(sf, RS(Rational(1, 2)));
    if (!sample.roots_ok || sample.entry.type != 3) throw InternalMismatch("class-B sample is not 3-type");
    e.verified_by.push_back("cubic");
    if (c == 1) {
      for (auto& x : b_two_type_solve(sf).entries) {
        const bool first = x.anchor == "T1.iv";
        e.notes.push_back(std::string("excluded radius: cot r = ") +
                          (first ? "sqrt(2) + sqrt(3)" : "sqrt(sqrt(6) + sqrt(7))") + " (kappa^2 = " + x.param +
                          ", 2-type)");
      }
      // the degenerate kappa^2 of the cubic is the second excluded radius
      auto deg = b_three_type(sf, RS(2) * adjoin_sqrt(RS(7)) - RS(2));
      if (!deg.degenerate) throw InternalMismatch("cubic does not degenerate at the second excluded radius");
    } else {
      // (tr A)^2 = 4 never happens on this family
      auto sp = spectrum(symbolic_spec(Family::B, sf));
      SS f = power_trace(sp, 1);
      auto g = as_ratfunc(f * f - SS(4));
      if (count_real_roots(g.num(), Domain::open(Rational(0), Rational(4))) != 0)
        throw InternalMismatch("(tr A)^2 = 4 occurs in class B");
      e.notes.push_back("(tr A)^2 != 4 on the whole family; the case (tr A)^2 = 4 is out of scope");
      rep.notes.push_back("A0: " + horosphere_exclude(2).verdict + "; A1', A1'': 2-type; A2: needs m >= 3");
    }
    rep.entries.push_back(e);
  } else if (id == "C1") {
    SpaceForm cp(1, m), ch(-1, m);
    for (auto& e : a1_classify(cp))
      if (!e.is_range && e.mass_symmetric && e.type == 2) rep.entries.push_back(e);
    for (int k = 1; k <= m - 2; ++k)
      for (auto& s : a2_two_type_solve(cp, k).solutions)
        if (s.mass_symmetric) rep.entries.push_back(classify(concrete_spec(Family::A2, cp, s.t, k)));
    for (auto& e : b_two_type_solve(cp).entries) rep.entries.push_back(e);
    for (auto& e : a1_classify(ch))
      if (!e.is_range && e.mass_symmetric && e.type == 2) {
        e.notes.push_back("null 2-type in CH^m: mass-symmetric by choice of center");
        rep.entries.push_back(e);
      }
    rep.notes.push_back("CH^m: no 2-type entry with center I/(m+1)");
  } else if (id == "C2-note") {
    for (int c : {1, -1}) {
      SpaceForm sf(c, m);
      auto sp = spectrum(symbolic_spec(Family::B, sf));
      SS f = power_trace(sp, 1);
      auto g = as_ratfunc(f * f + SS(4 * c));
      const Domain dom = c == 1 ? Domain::positive() : Domain::open(Rational(0), Rational(4));
      const int hits = count_real_roots(g.num(), dom);
      rep.notes.push_back(space_name(c) + ": class B has (tr A)^2 + 4c " +
                          (hits == 0 ? "nonzero on the whole family" : "vanishing at " + num(hits) + " radii"));
    }
  } else {
    throw DomainError("unknown report id " + id);
  }
  return rep;
}

StabilityReport stability_remark_check(int m, int k) {
  if (k < 1 || k > m - 2) throw DomainError("needs 1 <= k <= m-2");
  StabilityReport rep;
  rep.m = m;
  rep.k = k;
  auto sol = a2_two_type_solve(SpaceForm(1, m), k);
  for (auto& s : sol.solutions) {
    auto q = s.t.rational_value();
    if (!q) throw InternalMismatch("A2 2-type parameter is not rational");
    if (s.which == 'b') rep.t_b = *q;
    if (s.which == 'c') rep.t_c = *q;
  }
  rep.c_is_swapped_b = sol.c_matches_b_swapped;
  rep.endpoints_match =
      rep.t_b == Rational(2 * k + 1, 2 * (m - k) + 1) && rep.t_c == Rational(2 * k + 3, 2 * (m - k) - 1);
  rep.ordered = rep.t_b < rep.t_c;
  return rep;
}

}  // namespace hopf
