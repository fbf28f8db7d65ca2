#include "hopflab/tangent.hpp"

#include "hopflab/condpoly.hpp"

namespace hopf {

template <class F>
TangentModel<F> build_matrices(const PrincipalSpectrum<F>& sp, int c, Family family) {
  using S = Surd<F>;
  TangentModel<F> tm;
  tm.n = sp.dimension();
  tm.c = c;
  tm.family = family;
  tm.spectrum = sp;
  tm.A = zeros<S>(tm.n, tm.n);
  tm.Sm = zeros<S>(tm.n, tm.n);
  tm.block_of.assign(tm.n, -1);
  tm.A(0, 0) = sp.kappa;

  std::vector<int> start(sp.blocks.size());
  int idx = 1;
  for (size_t b = 0; b < sp.blocks.size(); ++b) {
    start[b] = idx;
    for (int i = 0; i < sp.blocks[b].multiplicity; ++i) {
      tm.A(idx, idx) = sp.blocks[b].value;
      tm.block_of[idx] = static_cast<int>(b);
      ++idx;
    }
  }
  for (size_t b = 0; b < sp.blocks.size(); ++b) {
    const auto& blk = sp.blocks[b];
    int s0 = start[b];
    if (blk.j_action == JAction::Invariant) {
      if (blk.multiplicity % 2 != 0)
        throw DomainError("odd multiplicity " + std::to_string(blk.multiplicity) + " in J-invariant block " +
                          blk.name);
      for (int i = 0; i < blk.multiplicity; i += 2) {
        tm.Sm(s0 + i + 1, s0 + i) = S(1);
        tm.Sm(s0 + i, s0 + i + 1) = S(-1);
      }
    } else {
      if (blk.partner < 0 || blk.partner >= static_cast<int>(sp.blocks.size()))
        throw DomainError("swapped block " + blk.name + " without partner");
      const auto& other = sp.blocks[blk.partner];
      if (other.multiplicity != blk.multiplicity || other.partner != static_cast<int>(b))
        throw DomainError("inconsistent swap pattern at block " + blk.name);
      if (static_cast<int>(b) > blk.partner) continue;
      int t0 = start[blk.partner];
      for (int i = 0; i < blk.multiplicity; ++i) {
        tm.Sm(t0 + i, s0 + i) = S(1);
        tm.Sm(s0 + i, t0 + i) = S(-1);
      }
    }
  }
  return tm;
}

template <class F>
TangentModel<F> build_matrices(const ModelSpec<F>& spec) {
  return build_matrices(spectrum(spec), spec.sf.c, spec.family);
}

template <class F>
std::vector<std::string> structure_defects(const TangentModel<F>& tm) {
  using S = Surd<F>;
  std::vector<std::string> out;
  const int n = tm.n;
  Mat<S> UU = zeros<S>(n, n);
  UU(0, 0) = S(1);
  if (!is_zero_matrix(tm.Sm.col(0))) out.push_back("SU != 0");
  if (!is_zero_matrix(Mat<S>(tm.Sm * tm.Sm + identity<S>(n) - UU))) out.push_back("S^2 != -Id + U(x)U");
  if (!is_zero_matrix(Mat<S>(tm.Sm + tm.Sm.transpose()))) out.push_back("S not skew");
  if (!is_zero_matrix(Mat<S>(tm.A - tm.A.transpose()))) out.push_back("A not symmetric");
  Vec<S> AU = tm.A.col(0);
  AU(0) = AU(0) - tm.spectrum.kappa;
  if (!is_zero_matrix(AU)) out.push_back("AU != kappa U");
  return out;
}

template <class F>
TraceReport<F> trace_identities(const TangentModel<F>& tm) {
  using S = Surd<F>;
  TraceReport<F> r;
  const Mat<S>& A = tm.A;
  const Mat<S>& Sm = tm.Sm;
  Mat<S> SA = Sm * A;
  r.sas = trace(Mat<S>(Sm * A * Sm));
  r.sa2s = trace(Mat<S>(Sm * A * A * Sm));
  r.sasa = trace(Mat<S>(SA * SA));
  S f = trace(A), f2 = trace(Mat<S>(A * A));
  const S& k = tm.spectrum.kappa;
  r.sas_closed = k - f;
  r.sa2s_closed = k * k - f2;
  r.sasa_closed = k * k - k * f - S((tm.n - 1) * tm.c);
  return r;
}

template <class F>
Surd<F> matrix_power_trace(const TangentModel<F>& tm, int k) {
  Mat<Surd<F>> P = identity<Surd<F>>(tm.n);
  for (int i = 0; i < k; ++i) P = P * tm.A;
  return trace(P);
}

template <class F>
bool EResiduals<F>::all_zero() const {
  if (!e1.is_zero()) return false;
  for (auto& [mu, r] : e2)
    if (!r.is_zero()) return false;
  for (auto& [mu, r] : e3)
    if (!r.is_zero()) return false;
  return e4 == "0" || e4 == "not checkable";
}

namespace {

template <class F>
Mat<Surd<F>> d_projector(int n) {
  Mat<Surd<F>> P = identity<Surd<F>>(n);
  P(0, 0) = Surd<F>(0);
  return P;
}

// Fourth condition over X, Y, Z in D, as a matrix identity per basis vector X.
template <class F>
bool fourth_condition_zero(const TangentModel<F>& tm) {
  using S = Surd<F>;
  S f = trace(tm.A);
  Mat<S> St = tm.Sm.transpose();
  for (int x = 1; x < tm.n; ++x) {
    Mat<S> N = nabla_A_matrix(tm, tm.basis(x));
    Mat<S> N2 = N * tm.A + tm.A * N;
    Mat<S> E = Mat<S>(N + St * N * tm.Sm) * f + N2 + St * N2 * tm.Sm;
    if (!is_zero_matrix(E.bottomRightCorner(tm.n - 1, tm.n - 1))) return false;
  }
  return true;
}

}  // namespace

template <class F>
EResiduals<F> check_E_conditions(const ModelSpec<F>& spec, const Surd<F>& p, const Surd<F>& q) {
  using S = Surd<F>;
  auto sp = spectrum(spec);
  const int c = spec.sf.c, n = spec.sf.n();
  S f = power_trace(sp, 1), f2 = power_trace(sp, 2);
  EResiduals<F> r;
  r.e1 = e1_residual<S>(p, q, f, f2, sp.kappa, c, n);
  for (auto& b : sp.blocks) {
    S ms = mu_star(b.value, sp.kappa, c);
    r.e2.emplace_back(b.value, e2_residual<S>(p, q, f, f2, sp.kappa, b.value, ms, c, n));
    r.e3.emplace_back(b.value, e3_residual<S>(p, f, f2, sp.kappa, b.value, ms, c, n));
  }
  if (is_class_A(spec.family))
    r.e4 = fourth_condition_zero(build_matrices(sp, c, spec.family)) ? "0" : "nonzero";
  else
    r.e4 = "not checkable";
  return r;
}

template <class F>
std::optional<std::pair<Surd<F>, Surd<F>>> solve_pq(const ModelSpec<F>& spec) {
  using S = Surd<F>;
  auto sp = spectrum(spec);
  const int c = spec.sf.c, n = spec.sf.n();
  S f = power_trace(sp, 1), f2 = power_trace(sp, 2);
  // the third condition at the first D-curvature whose p-coefficient does not vanish
  for (auto& b : sp.blocks) {
    const S& mu = b.value;
    S ms = mu_star(mu, sp.kappa, c);
    S c3 = e3_residual<S>(S(1), f, f2, sp.kappa, mu, ms, c, n) - e3_residual<S>(S(0), f, f2, sp.kappa, mu, ms, c, n);
    if (c3.is_zero()) continue;
    S p = -e3_residual<S>(S(0), f, f2, sp.kappa, mu, ms, c, n) / c3;
    S q = -e1_residual<S>(p, S(0), f, f2, sp.kappa, c, n);
    return std::make_pair(p, q);
  }
  return std::nullopt;
}

template <class F>
Vec<Surd<F>> class_a_nabla_A(const TangentModel<F>& tm, const Vec<Surd<F>>& X, const Vec<Surd<F>>& Y) {
  if (!tm.class_a()) throw DomainError("nabla A unavailable for family " + family_name(tm.family, tm.c));
  using S = Surd<F>;
  Vec<S> SX = tm.Sm * X;
  S sxy = SX.dot(Y);
  Vec<S> out = SX * Y(0);
  out(0) = out(0) + sxy;
  return out * S(-tm.c);
}

template <class F>
Mat<Surd<F>> nabla_A_matrix(const TangentModel<F>& tm, const Vec<Surd<F>>& X) {
  Mat<Surd<F>> N(tm.n, tm.n);
  for (int j = 0; j < tm.n; ++j) N.col(j) = class_a_nabla_A(tm, X, tm.basis(j));
  return N;
}

template <class F>
Vec<Surd<F>> codazzi_defect(const TangentModel<F>& tm, const Vec<Surd<F>>& X, const Vec<Surd<F>>& Y) {
  using S = Surd<F>;
  Vec<S> SX = tm.Sm * X, SY = tm.Sm * Y;
  Vec<S> rhs = SY * X(0) - SX * Y(0);
  rhs(0) = rhs(0) - S(2) * SX.dot(Y);
  return class_a_nabla_A(tm, X, Y) - class_a_nabla_A(tm, Y, X) - rhs * S(tm.c);
}

template <class F>
QuarticIdentityConstants<F> quartic_identity_constants(const ModelSpec<F>& spec, const Surd<F>& p,
                                                       const Surd<F>& q, const Surd<F>& r) {
  using S = Surd<F>;
  auto sp = spectrum(spec);
  const int c = spec.sf.c, n = spec.sf.n();
  S f = power_trace(sp, 1), f2 = power_trace(sp, 2);
  const S& k = sp.kappa;
  QuarticIdentityConstants<F> out;
  out.a = p / S(2) + S(2) * (S(c) + f2);
  out.b = p * f / S(2) + S(c) * f * (S(c) * f2 + S(n + 7));
  out.d = S(n * n * n + 6 * n * n + 10 * n + 7) + S(c * (5 * n + 19)) * f * f / S(4) + f * f * f2 / S(4) +
          S(c) * f2 - S(2 * c) * k * f - S(c) * k * k + p / S(4) * (S(2 * c * (n + 1) * (n + 3)) + f * f) +
          q * S(n + 2) / S(4) + S(c) * r / S(8);
  return out;
}

template <class F>
QuarticIdentityReport<F> quartic_identity_checks(const ModelSpec<F>& spec, const std::optional<Surd<F>>& a,
                                                 const std::optional<Surd<F>>& b,
                                                 const std::optional<Surd<F>>& d) {
  using S = Surd<F>;
  QuarticIdentityReport<F> rep;
  auto tm = build_matrices(spec);
  const int n = tm.n, c = tm.c;
  S f = trace(tm.A);
  if (c == -1) rep.hyperbolic_guard_ok = !(f * f - S(4)).is_zero();
  if (!tm.class_a()) {
    rep.note = "commutator and quartic identity checks out of scope: nabla A unknown for this family";
    return rep;
  }
  Mat<S> comm = tm.A * tm.Sm - tm.Sm * tm.A;
  bool ok = true;
  Mat<S> B = zeros<S>(n, n);
  for (int j = 0; j < n; ++j) {
    Mat<S> N = nabla_A_matrix(tm, tm.basis(j));
    if (j > 0 && !trace(Mat<S>(N * comm)).is_zero()) ok = false;
    B = B + N * N;
  }
  rep.commutator_trace_zero = ok;
  Mat<S> expected = d_projector<F>(n);
  expected(0, 0) = S(n - 1);
  rep.B = B;
  rep.B_matches_expected = is_zero_matrix(Mat<S>(B - expected));
  if (a && b && d) {
    const Mat<S>& A = tm.A;
    const Mat<S>& Sm = tm.Sm;
    Mat<S> A2 = A * A, A4 = A2 * A2, SA = Sm * A, AS = A * Sm;
    Mat<S> rhs = A4 - Sm * A4 * Sm + (A2 - Sm * A2 * Sm) * (*a) + (A - Sm * A * Sm) * (*b) -
                 (SA * SA + AS * AS) * S(4 * c) + identity<S>(n) * (*d);
    Mat<S> res = (B - Sm * B * Sm - rhs) * d_projector<F>(n);
    rep.residual = res;
  }
  return rep;
}

template <class F>
Surd<F> nabla_A_norm_from_spectrum(const ModelSpec<F>& spec) {
  using S = Surd<F>;
  auto sp = spectrum(spec);
  const int c = spec.sf.c, n = spec.sf.n();
  S f = power_trace(sp, 1), f2 = power_trace(sp, 2), f3 = power_trace(sp, 3);
  const S& k = sp.kappa;
  S sasa = k * k - k * f - S((n - 1) * c);
  return S(6 * c) * k * k - S(3 * c) * f * k - S(6 * c) * sasa + S(c) * f * f + (f2 - S(c * (n + 3))) * f2 -
         f * f3;
}

template <class F>
Surd<F> nabla_A_frobenius(const TangentModel<F>& tm) {
  using S = Surd<F>;
  S s(0);
  for (int j = 0; j < tm.n; ++j) {
    Mat<S> N = nabla_A_matrix(tm, tm.basis(j));
    for (int a = 0; a < tm.n; ++a)
      for (int b = 0; b < tm.n; ++b) s = s + N(a, b) * N(a, b);
  }
  return s;
}

#define HOPF_INSTANTIATE(F)                                                                                    \
  template struct EResiduals<F>;                                                                               \
  template TangentModel<F> build_matrices<F>(const PrincipalSpectrum<F>&, int, Family);                        \
  template TangentModel<F> build_matrices<F>(const ModelSpec<F>&);                                             \
  template std::vector<std::string> structure_defects<F>(const TangentModel<F>&);                              \
  template TraceReport<F> trace_identities<F>(const TangentModel<F>&);                                         \
  template Surd<F> matrix_power_trace<F>(const TangentModel<F>&, int);                                         \
  template EResiduals<F> check_E_conditions<F>(const ModelSpec<F>&, const Surd<F>&, const Surd<F>&);           \
  template std::optional<std::pair<Surd<F>, Surd<F>>> solve_pq<F>(const ModelSpec<F>&);                       \
  template Vec<Surd<F>> class_a_nabla_A<F>(const TangentModel<F>&, const Vec<Surd<F>>&, const Vec<Surd<F>>&);  \
  template Mat<Surd<F>> nabla_A_matrix<F>(const TangentModel<F>&, const Vec<Surd<F>>&);                        \
  template Vec<Surd<F>> codazzi_defect<F>(const TangentModel<F>&, const Vec<Surd<F>>&, const Vec<Surd<F>>&);   \
  template QuarticIdentityConstants<F> quartic_identity_constants<F>(const ModelSpec<F>&, const Surd<F>&,      \
                                                                     const Surd<F>&, const Surd<F>&);          \
  template QuarticIdentityReport<F> quartic_identity_checks<F>(                                                \
      const ModelSpec<F>&, const std::optional<Surd<F>>&, const std::optional<Surd<F>>&,                       \
      const std::optional<Surd<F>>&);                                                                          \
  template Surd<F> nabla_A_norm_from_spectrum<F>(const ModelSpec<F>&);                                         \
  template Surd<F> nabla_A_frobenius<F>(const TangentModel<F>&);
HOPF_INSTANTIATE(Rational)
HOPF_INSTANTIATE(RatFunc)
#undef HOPF_INSTANTIATE

}  // namespace hopf
