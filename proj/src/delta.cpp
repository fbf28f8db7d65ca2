#include "hopflab/delta.hpp"

#include <algorithm>
#include <cstdio>

#include "hopflab/specialize.hpp"

namespace hopf {

template <class F>
std::string frame_str(const FrameVec<F>& v) {
  std::string out;
  for (int i = 0; i < 3; ++i) {
    if (v(i).is_zero()) continue;
    if (!out.empty()) out += " + ";
    out += "(" + v(i).str() + ")*" + frame_label(i);
  }
  return out.empty() ? "0" : out;
}

template <class F>
DeltaModule<F> build_frame_module(const ModelSpec<F>& spec, FramePath path) {
  using S = Surd<F>;
  const Family fam = spec.family;
  if (fam == Family::A2 || fam == Family::C || fam == Family::D || fam == Family::E)
    throw DomainError(
        "per-block Laplacian action is not determined by the frame fields; use the block engine (A2) or the "
        "classifier (C/D/E)");
  if (path == FramePath::ClassB && fam != Family::B) throw DomainError("class-B frame columns need family B");
  auto sp = spectrum(spec);
  DeltaModule<F> dm;
  dm.spec = spec;
  dm.c = spec.sf.c;
  dm.m = spec.sf.m;
  dm.n = spec.sf.n();
  dm.path = path;
  const int c = dm.c, n = dm.n, m = dm.m;
  const S C(c), N(n);
  dm.kappa = sp.kappa;
  // traces do not see the D-curvature radicals; compacting keeps every entry in kappa's tower
  dm.f = power_trace(sp, 1).compacted();
  dm.f2 = power_trace(sp, 2).compacted();
  const S &k = dm.kappa, &f = dm.f, &f2 = dm.f2;
  if (fam == Family::B) {
    dm.alpha1 = S(-2 * c) / k;
    dm.alpha2 = S(8) / (k * k) + C;
  } else {
    dm.alpha1 = sp.blocks.front().value;
    dm.alpha2 = dm.alpha1 * dm.alpha1;
  }
  const S &a1 = dm.alpha1, &a2 = dm.alpha2;
  dm.L = zeros<S>(3, 3);
  if (path == FramePath::Generic) {
    dm.L.col(XI) = frame_vec<F>(f2 + S(c * (n - 1)), S(2) * k - f, S(2) * a1);
    dm.L.col(SXX) = frame_vec<F>(S(4 * c) * k, S(4 * c) + S(2) * f2 - S(2) * k * k, S(2 * c) - S(2) * a2);
    dm.L.col(SB) = frame_vec<F>(S(2 * c * (n + 3)) * f - S(8 * c) * k, S(2 * c * (n - 1)) + S(4) * k * k - S(4) * f2,
                                S(2 * c * (n + 1)) + S(4) * a2);
  } else {
    S k2 = k * k;
    dm.L.col(XI) = frame_vec<F>(f2 + S(c * (n - 1)), S(2) * k - f, S(-4 * c) / k);
    dm.L.col(SXX) = frame_vec<F>(S(4 * c) * k, S(2) * (S(8 * (n - 1)) / k2 + S(c * (n + 1))), S(-16) / k2);
    dm.L.col(SB) = frame_vec<F>(S(2 * c) * (S(n - 1) * k - S(2 * c * (n - 1) * (n + 3)) / k),
                                S(-2) * (S(16 * (n - 1)) / k2 + S(c * (n - 1))), S(2) * (S(16) / k2 + S(c * (n + 3))));
  }
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) dm.L(i, j) = dm.L(i, j).compacted();
  dm.gram = zeros<S>(3, 3);
  dm.gram(XI, XI) = S(1);
  dm.gram(SXX, SXX) = S(4 * c);
  dm.gram(SXX, SB) = dm.gram(SB, SXX) = S(2 * c * (n - 1));
  dm.gram(SB, SB) = S(2 * c * (n - 1) * (n + 1));
  dm.x_pairing = frame_vec<F>(S(0), S(-1), S(-(n - 1)));
  dm.v = frame_vec<F>(S(0), S(Rational(-c, 2 * (m + 1))), S(Rational(-c, 4 * (m + 1))));
  (void)N;
  return dm;
}

template <class F>
std::vector<IterateCheck<F>> verify_iterates(const DeltaModule<F>& dm) {
  using S = Surd<F>;
  std::vector<IterateCheck<F>> out;
  const int c = dm.c, n = dm.n;
  const S C(c), N(n);
  const S &k = dm.kappa, &f = dm.f, &f2 = dm.f2;
  FrameVec<F> v1 = dm.L * dm.v, v2 = dm.L * v1, v3 = dm.L * v2;
  out.push_back({"laplacian", FrameVec<F>(v1 - frame_vec<F>(-f, S(-1), S(-1)))});
  out.push_back({"laplacian2_constant_f",
                 FrameVec<F>(v2 - frame_vec<F>(S(4 * c) * k - f * (f2 + S(c * (3 * n + 5))),
                                               S(2 * c) + S(2) * f2 + f * f - S(2 * c * (n + 2)) - S(2) * f * k -
                                                   S(2) * k * k,
                                               S(-2 * c * (n + 2)) - S(2) * f * dm.alpha1 - S(2) * dm.alpha2))});
  switch (dm.spec.family) {
    case Family::A1:
    case Family::A1tube: {
      const S& mu = dm.alpha1;
      S mu2 = mu * mu, mu3 = mu2 * mu;
      S xi = -(S(n * n) * mu3 + S(c * (3 * n * n + 2 * n - 4)) * mu - S(2 * n - 1) / mu - C / mu3);
      S sxx = S(n * n - 2) * mu2 - S(2 * c * n) - S(1) / mu2;
      S sb = S(-2 * (n + 1)) * (mu2 + C);
      out.push_back({"laplacian2_a1", FrameVec<F>(v2 - frame_vec<F>(xi, sxx, sb))});
      break;
    }
    case Family::A0:
      out.push_back({"laplacian3_vanishes", v3});
      break;
    case Family::B: {
      S k2 = k * k, k3 = k2 * k, k4 = k2 * k2, k5 = k4 * k;
      out.push_back({"laplacian_b", FrameVec<F>(v1 - frame_vec<F>(S(2 * c * (n - 1)) / k - k, S(-1), S(-1)))});
      out.push_back(
          {"laplacian2_b",
           FrameVec<F>(v2 - frame_vec<F>(S(16 * c * (n - 1) * (n - 1)) / k3 + S(8 * n * (n - 1)) / k -
                                             S(2 * c * (n + 1)) * k - k3,
                                         S(4 * (n - 1) * (n + 3)) / k2 - S(4 * c) - k2,
                                         S(-2 * (n + 1)) * (S(4) / k2 + C)))});
      long nn = n;
      S xi3 = S(128 * c * (nn - 1) * (nn - 1) * (nn - 1)) / k5 + S(128 * (nn - 1) * (nn * nn + 1)) / k3 +
              S(8 * c * (nn - 1) * (3 * nn * nn + 2 * nn + 3)) / k - S(16 * nn) * k - S(4 * c * (nn + 1)) * k3 - k5;
      S sxx3 = S(32 * (nn - 1) * (nn + 3) * (3 * nn + 1)) / k4 + S(8 * c * (nn - 1) * (3 * nn * nn + 14 * nn + 3)) / k2 +
               S(8 * (nn * nn - 4 * nn + 1)) - S(2 * c * (3 * nn + 1)) * k2 - k4;
      S sb3 = -(S(128 * (nn + 1) * (nn + 1)) / k4 + S(48 * c * (nn + 1) * (nn + 1)) / k2 + S(4 * (nn - 1) * (nn + 3)) -
                S(4 * c) * k2);
      out.push_back({"laplacian3_b", FrameVec<F>(v3 - frame_vec<F>(xi3, sxx3, sb3))});
      auto other = build_frame_module(dm.spec, dm.path == FramePath::Generic ? FramePath::ClassB : FramePath::Generic);
      for (int j = 0; j < 3; ++j)
        out.push_back({std::string("class_b_column_") + frame_label(j), FrameVec<F>(dm.L.col(j) - other.L.col(j))});
      break;
    }
    default:
      break;
  }
  (void)N;
  return out;
}

template <class F>
SPoly<F> minimal_polynomial(const Mat<Surd<F>>& L, const FrameVec<F>& v) {
  using S = Surd<F>;
  if (is_zero_matrix(v)) return SPoly<F>(S(1));
  std::vector<FrameVec<F>> K{v};
  for (int k = 1; k <= L.rows(); ++k) {
    FrameVec<F> w = L * K.back();
    Mat<S> M(L.rows(), k);
    for (int j = 0; j < k; ++j) M.col(j) = K[j];
    if (auto a = solve<S>(M, w)) {
      std::vector<S> coeffs(k + 1);
      for (int j = 0; j < k; ++j) coeffs[j] = (-(*a)(j)).compacted();
      coeffs[k] = S(1);
      return SPoly<F>(std::move(coeffs));
    }
    K.push_back(w);
  }
  throw InternalMismatch("Krylov sequence did not close");
}

template <class F>
std::vector<FrameVec<F>> eigencomponents(const Mat<Surd<F>>& L, const FrameVec<F>& v,
                                         const std::vector<Surd<F>>& roots, int zmult) {
  using S = Surd<F>;
  std::vector<FrameVec<F>> out;
  for (size_t i = 0; i < roots.size(); ++i) {
    FrameVec<F> w = v;
    S den(1);
    for (int z = 0; z < zmult; ++z) {
      w = L * w;
      den = den * roots[i];
    }
    for (size_t j = 0; j < roots.size(); ++j) {
      if (j == i) continue;
      S d = roots[i] - roots[j];
      if (d.is_zero()) throw DomainError("repeated eigenvalue in the projector");
      w = L * w - w * roots[j];
      den = den * d;
    }
    S inv = S(1) / den;
    for (int r = 0; r < w.size(); ++r) w(r) = w(r) * inv;
    out.push_back(w);
  }
  return out;
}

namespace {

template <class F>
std::string param_string(const ModelSpec<F>& spec) {
  if (spec.family == Family::A0) return "-";
  return spec.param.str();
}

template <class F>
RootSet<F> find_roots(const DeltaModule<F>& dm, const SPoly<F>& g);

template <>
RootSet<RatFunc> find_roots(const DeltaModule<RatFunc>& dm, const SPoly<RatFunc>& g) {
  SymbolicScalar context = dm.kappa;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      if (dm.L(i, j).depth() > context.depth()) context = dm.L(i, j);
  return exact_roots(g, context);
}

template <>
RootSet<Rational> find_roots(const DeltaModule<Rational>& dm, const SPoly<Rational>& g) {
  auto rs = exact_roots(g);
  if (rs.complete() || dm.spec.family == Family::A0) return rs;
  // irreducible factors: try the symbolic roots specialized at this parameter
  auto sym = build_frame_module(symbolic_spec(dm.spec.family, dm.spec.sf, dm.spec.k));
  auto srep = chen_type_evidence(sym);
  std::vector<RadicalScalar> cands;
  for (auto& e : srep.eigenvalues) {
    try {
      cands.push_back(specialize(e, dm.spec.param));
    } catch (const DomainError&) {
    }
  }
  return exact_roots(g, cands);
}

}  // namespace

template <class F>
TypeReport<F> chen_type_evidence(const DeltaModule<F>& dm) {
  using S = Surd<F>;
  TypeReport<F> rep;
  rep.family = family_name(dm.spec.family, dm.c);
  rep.space = dm.spec.sf.space();
  rep.m = dm.m;
  rep.param = param_string(dm.spec);
  rep.min_poly = minimal_polynomial<F>(dm.L, dm.v);
  rep.residual = zero_vec<S>(3);
  const auto& co = rep.min_poly.coeffs();
  int z = 0;
  while (z < static_cast<int>(co.size()) && co[z].is_zero()) ++z;
  rep.zero_multiplicity = z;
  SPoly<F> g(std::vector<S>(co.begin() + z, co.end()));
  if (z >= 2) {
    rep.verdict = "not finite type within module";
    rep.witness = "t^" + std::to_string(z) + " divides the minimal polynomial; nilpotent part of order " +
                  std::to_string(z);
    return rep;
  }
  auto rs = find_roots(dm, g);
  for (size_t i = 0; i < rs.roots.size(); ++i)
    if (rs.multiplicity[i] > 1) {
      rep.verdict = "not finite type within module";
      rep.witness = "repeated root " + rs.roots[i].str();
      return rep;
    }
  if (rs.complex_count > 0) {
    rep.verdict = "not finite type within module";
    rep.witness = std::to_string(rs.complex_count) + " non-real roots";
    return rep;
  }
  if (!rs.complete()) {
    rep.verdict = "unresolved";
    rep.witness = std::to_string(rs.unresolved) + " roots not expressible by the root finder";
    return rep;
  }
  rep.eigenvalues = rs.roots;
  if constexpr (std::is_same_v<F, Rational>) {
    std::sort(rep.eigenvalues.begin(), rep.eigenvalues.end(),
              [](const S& a, const S& b) { return a < b; });
    rep.reality_certified = true;
  }
  rep.components = eigencomponents<F>(dm.L, dm.v, rep.eigenvalues, z);
  FrameVec<F> w = dm.v;
  for (size_t i = 0; i < rep.components.size(); ++i) {
    const auto& x = rep.components[i];
    if (!is_zero_matrix(FrameVec<F>(dm.L * x - x * rep.eigenvalues[i])))
      throw InternalMismatch("component is not an eigenvector");
    w = w - x;
  }
  if (!is_zero_matrix(FrameVec<F>(dm.L * w))) throw InternalMismatch("kernel residual not annihilated");
  rep.residual = w;
  rep.mass_symmetric = is_zero_matrix(w);
  rep.type = static_cast<int>(rep.eigenvalues.size());
  rep.verdict = std::to_string(*rep.type) + "-type" + (rep.mass_symmetric ? ", mass-symmetric" : "");
  if (!rep.mass_symmetric)
    rep.witness = "kernel residual " + frame_str<F>(w) + " is a constant candidate; constancy is decided by the block engine";
  return rep;
}

template <class F>
Cubic<F> b_type_cubic(const ModelSpec<F>& spec) {
  using S = Surd<F>;
  if (spec.family != Family::B) throw DomainError("the class-B cubic needs family B");
  const int c = spec.sf.c, n = spec.sf.n();
  const S& s = spec.param;
  S s4 = s + S(4 * c);
  Cubic<F> cu;
  cu.p = -s4 * (s + S(2 * c * (3 * n + 1))) / s;
  cu.q = S(4) * s4 * (S(c * (n + 1)) * s * s + S(3 * n * n + 6 * n - 1) * s + S(8 * c * (n * n - 1))) / (s * s);
  cu.r = S(-4 * (n - 1) * (n + 3)) * s4 * s4 * (s + S(2 * c * (n + 1))) / (s * s);
  return cu;
}

template <class F>
FrameVec<F> cubic_residual(const DeltaModule<F>& dm, const Cubic<F>& cu) {
  FrameVec<F> v1 = dm.L * dm.v, v2 = dm.L * v1, v3 = dm.L * v2;
  return v3 + v2 * cu.p + v1 * cu.q + dm.v * cu.r;
}

template <class F>
CenterOfMass<F> center_of_mass_A1(const ModelSpec<F>& spec) {
  using S = Surd<F>;
  if (spec.family != Family::A1 && spec.family != Family::A1tube)
    throw DomainError("center of mass closed form applies to A1");
  auto dm = build_frame_module(spec);
  auto rep = chen_type_evidence(dm);
  if (!rep.type) throw InternalMismatch("A1 model without finite type");
  CenterOfMass<F> cm;
  cm.residual = rep.residual;
  cm.annihilated = is_zero_matrix(FrameVec<F>(dm.L * rep.residual));
  const int c = dm.c, m = dm.m;
  const S& mu = dm.alpha1;
  S mu2 = mu * mu, pc = mu2 + S(c);
  S factor = (S(m) * mu2 - S(c)) / (S(m) * pc * pc);
  cm.expected = (frame_vec<F>(mu, S(Rational(1, 2)), S(0)) + dm.v * pc) * factor;
  return cm;
}

template <class F>
InnerProductReport<F> inner_product_identities(const DeltaModule<F>& dm) {
  using S = Surd<F>;
  InnerProductReport<F> r;
  FrameVec<F> v1 = dm.L * dm.v, v2 = dm.L * v1;
  r.lap_x = dm.x_pairing.dot(v1);
  r.lap_x_expected = S(dm.n);
  r.lap2_x = dm.x_pairing.dot(v2);
  r.lap2_x_expected = dm.f * dm.f + S(2 * dm.c * (dm.n * dm.n + 2 * dm.n - 1));
  r.v_norm = frame_inner(dm, dm.v, dm.v);
  r.v_norm_expected = S(Rational(dm.c * dm.m, 2 * (dm.m + 1)));
  r.gram_det = determinant(dm.gram);
  return r;
}

namespace {

template <class F>
nlohmann::json json_impl(const TypeReport<F>& r) {
  nlohmann::json j;
  j["family"] = r.family;
  j["space"] = r.space;
  j["m"] = r.m;
  j["param"] = r.param;
  j["min_poly"] = r.min_poly.str("t");
  nlohmann::json ev = nlohmann::json::array();
  for (auto& e : r.eigenvalues) {
    nlohmann::json x;
    x["exact"] = e.str();
    if constexpr (std::is_same_v<F, Rational>) {
      char buf[64];
      std::snprintf(buf, sizeof buf, "%.15g", to_double(e));
      x["decimal"] = buf;
    } else {
      x["decimal"] = nullptr;
    }
    ev.push_back(x);
  }
  j["eigenvalues"] = ev;
  j["type"] = r.type ? nlohmann::json(*r.type) : nlohmann::json(nullptr);
  j["mass_symmetric"] = r.mass_symmetric;
  j["residual"] = frame_str<F>(r.residual);
  j["verdict"] = r.verdict;
  if (!r.witness.empty()) j["witness"] = r.witness;
  return j;
}

}  // namespace

nlohmann::json to_json(const TypeReport<Rational>& r) { return json_impl(r); }
nlohmann::json to_json(const TypeReport<RatFunc>& r) { return json_impl(r); }

#define HOPF_INSTANTIATE(F)                                                                                   \
  template std::string frame_str<F>(const FrameVec<F>&);                                                      \
  template DeltaModule<F> build_frame_module<F>(const ModelSpec<F>&, FramePath);                              \
  template std::vector<IterateCheck<F>> verify_iterates<F>(const DeltaModule<F>&);                            \
  template SPoly<F> minimal_polynomial<F>(const Mat<Surd<F>>&, const FrameVec<F>&);                           \
  template std::vector<FrameVec<F>> eigencomponents<F>(const Mat<Surd<F>>&, const FrameVec<F>&,               \
                                                       const std::vector<Surd<F>>&, int);                     \
  template TypeReport<F> chen_type_evidence<F>(const DeltaModule<F>&);                                        \
  template Cubic<F> b_type_cubic<F>(const ModelSpec<F>&);                                                     \
  template FrameVec<F> cubic_residual<F>(const DeltaModule<F>&, const Cubic<F>&);                             \
  template CenterOfMass<F> center_of_mass_A1<F>(const ModelSpec<F>&);                                         \
  template InnerProductReport<F> inner_product_identities<F>(const DeltaModule<F>&);
HOPF_INSTANTIATE(Rational)
HOPF_INSTANTIATE(RatFunc)
#undef HOPF_INSTANTIATE

}  // namespace hopf
