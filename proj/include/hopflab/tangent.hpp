#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hopflab/catalog.hpp"
#include "hopflab/linalg.hpp"

namespace hopf {

// Matrix model of the tangent space. Basis index 0 is U; the remaining indices run
// through the spectrum blocks in order.
template <class F>
struct TangentModel {
  using S = Surd<F>;
  int n = 0;
  int c = 1;
  Family family = Family::A1;
  Mat<S> A;
  Mat<S> Sm;  // structure tensor
  int u = 0;
  std::vector<int> block_of;  // -1 for U
  PrincipalSpectrum<F> spectrum;

  Vec<S> basis(int i) const {
    Vec<S> e = zero_vec<S>(n);
    e(i) = S(1);
    return e;
  }
  bool class_a() const { return is_class_A(family); }
};

template <class F>
TangentModel<F> build_matrices(const PrincipalSpectrum<F>& sp, int c, Family family);
template <class F>
TangentModel<F> build_matrices(const ModelSpec<F>& spec);

// Checks of SU = 0, S^2 = -Id + U(x)U, AU = kappa U, symmetry of A and skewness of S.
template <class F>
std::vector<std::string> structure_defects(const TangentModel<F>& tm);

template <class F>
struct TraceReport {
  Surd<F> sas, sa2s, sasa;                    // from the matrices
  Surd<F> sas_closed, sa2s_closed, sasa_closed;  // kappa - f, kappa^2 - f2, kappa^2 - kappa f - (n-1)c
  bool ok() const { return sas == sas_closed && sa2s == sa2s_closed && sasa == sasa_closed; }
};
template <class F>
TraceReport<F> trace_identities(const TangentModel<F>& tm);

template <class F>
Surd<F> matrix_power_trace(const TangentModel<F>& tm, int k);

template <class F>
struct EResiduals {
  Surd<F> e1;
  std::vector<std::pair<Surd<F>, Surd<F>>> e2, e3;  // (mu, residual)
  std::string e4;                                   // "0" for class A, otherwise "not checkable"
  bool all_zero() const;
};

// Residuals of the two-type conditions at given (p, q); the fourth is evaluated with the
// class-A covariant derivative and only reported for other families.
template <class F>
EResiduals<F> check_E_conditions(const ModelSpec<F>& spec, const Surd<F>& p, const Surd<F>& q);

// (p, q) from the third condition at the first D-curvature that determines p, then the first condition.
template <class F>
std::optional<std::pair<Surd<F>, Surd<F>>> solve_pq(const ModelSpec<F>& spec);

// (nabla_X A) Y for class A: -c [<SX, Y> U + <U, Y> SX]
template <class F>
Vec<Surd<F>> class_a_nabla_A(const TangentModel<F>& tm, const Vec<Surd<F>>& X, const Vec<Surd<F>>& Y);
// Matrix of Y -> (nabla_X A) Y.
template <class F>
Mat<Surd<F>> nabla_A_matrix(const TangentModel<F>& tm, const Vec<Surd<F>>& X);

// (nabla_X A)Y - (nabla_Y A)X - c[<X,U>SY - <Y,U>SX - 2<SX,Y>U]
template <class F>
Vec<Surd<F>> codazzi_defect(const TangentModel<F>& tm, const Vec<Surd<F>>& X, const Vec<Surd<F>>& Y);

template <class F>
struct QuarticIdentityReport {
  bool trace_const = true;                    // tr A^k constant: true for catalog models
  std::optional<bool> commutator_trace_zero;  // tr((nabla_X A)[A, S]) = 0 on D, class A only
  std::optional<Mat<Surd<F>>> B;               // sum_j (nabla_{e_j} A)^2
  std::optional<bool> B_matches_expected;      // B = proj_D + (n-1) U(x)U
  std::optional<Mat<Surd<F>>> residual;        // quartic shape identity on D, for the given a, b, d
  std::optional<bool> hyperbolic_guard_ok;     // (tr A)^2 != 4 when c = -1
  std::string note;
};
template <class F>
QuarticIdentityReport<F> quartic_identity_checks(const ModelSpec<F>& spec, const std::optional<Surd<F>>& a = std::nullopt,
                              const std::optional<Surd<F>>& b = std::nullopt,
                              const std::optional<Surd<F>>& d = std::nullopt);

// The constants a, b, d of the quartic-shape identity from p, q, r.
template <class F>
struct QuarticIdentityConstants {
  Surd<F> a, b, d;
};
template <class F>
QuarticIdentityConstants<F> quartic_identity_constants(const ModelSpec<F>& spec, const Surd<F>& p, const Surd<F>& q,
                                    const Surd<F>& r);

// |nabla A|^2 from the spectrum for constant principal curvatures.
template <class F>
Surd<F> nabla_A_norm_from_spectrum(const ModelSpec<F>& spec);
// Frobenius norm of the class-A covariant derivative summed over the basis.
template <class F>
Surd<F> nabla_A_frobenius(const TangentModel<F>& tm);

}  // namespace hopf
