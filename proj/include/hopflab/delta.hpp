#pragma once

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "hopflab/catalog.hpp"
#include "hopflab/linalg.hpp"
#include "hopflab/polyroots.hpp"

namespace hopf {

// Frame basis: xi, sigma(xi, xi), and the sum of sigma(e, e) over D.
enum FrameIndex { XI = 0, SXX = 1, SB = 2 };
inline const char* frame_label(int i) {
  static const char* names[3] = {"XI", "SXX", "SB"};
  return names[i];
}

template <class F>
using FrameVec = Vec<Surd<F>>;

template <class F>
FrameVec<F> frame_vec(const Surd<F>& xi, const Surd<F>& sxx, const Surd<F>& sb) {
  FrameVec<F> v(3);
  v << xi, sxx, sb;
  return v;
}

template <class F>
std::string frame_str(const FrameVec<F>& v);

// How the column of the D-sum is obtained: from the generic constant-curvature formulas,
// or (class B only) transcribed from the closed class-B expressions.
enum class FramePath { Generic, ClassB };

template <class F>
struct DeltaModule {
  ModelSpec<F> spec;
  int c = 1, m = 2, n = 3;
  Surd<F> kappa, f, f2;
  // sum over D of sigma(A e, e) = alpha1 SB and of sigma(A e, A e) = alpha2 SB
  Surd<F> alpha1, alpha2;
  Mat<Surd<F>> L;      // columns are the Laplacians of the basis fields
  Mat<Surd<F>> gram;   // inner products of the basis fields
  FrameVec<F> x_pairing;  // <basis, x>
  FrameVec<F> v;          // frame part of x - I/(m+1)
  FramePath path = FramePath::Generic;
};

// A0, A1, A1'' and B only.
template <class F>
DeltaModule<F> build_frame_module(const ModelSpec<F>& spec, FramePath path = FramePath::Generic);

template <class F>
FrameVec<F> frame_expand_x(const DeltaModule<F>& dm) {
  return dm.v;
}

template <class F>
Surd<F> frame_inner(const DeltaModule<F>& dm, const FrameVec<F>& a, const FrameVec<F>& b) {
  return a.dot(dm.gram * b);
}

template <class F>
struct IterateCheck {
  std::string name;
  FrameVec<F> residual;
  bool ok() const { return is_zero_matrix(residual); }
};

// Powers of L applied to the position vector against the closed-form expansions.
template <class F>
std::vector<IterateCheck<F>> verify_iterates(const DeltaModule<F>& dm);

// Monic minimal polynomial of L on the cyclic span of v (1 for v = 0).
template <class F>
SPoly<F> minimal_polynomial(const Mat<Surd<F>>& L, const FrameVec<F>& v);

// Lagrange-projector components of v for distinct nonzero roots; zmult is the power of
// t in the minimal polynomial. The kernel part is v minus their sum.
template <class F>
std::vector<FrameVec<F>> eigencomponents(const Mat<Surd<F>>& L, const FrameVec<F>& v,
                                         const std::vector<Surd<F>>& roots, int zmult);

template <class F>
struct TypeReport {
  std::string family, space;
  int m = 2;
  std::string param;
  SPoly<F> min_poly;
  int zero_multiplicity = 0;
  std::vector<Surd<F>> eigenvalues;  // distinct nonzero roots
  std::vector<FrameVec<F>> components;
  FrameVec<F> residual;  // kernel part: the constant candidate
  std::optional<int> type;
  bool mass_symmetric = false;
  bool reality_certified = false;
  std::string verdict;
  std::string witness;
};

template <class F>
TypeReport<F> chen_type_evidence(const DeltaModule<F>& dm);

// p, q, r of the class-B cubic t^3 + p t^2 + q t + r.
template <class F>
struct Cubic {
  Surd<F> p, q, r;
};
template <class F>
Cubic<F> b_type_cubic(const ModelSpec<F>& spec);

// L^3 v + p L^2 v + q L v + r v
template <class F>
FrameVec<F> cubic_residual(const DeltaModule<F>& dm, const Cubic<F>& cu);

template <class F>
struct CenterOfMass {
  FrameVec<F> residual;  // kernel part from the eigen-decomposition
  FrameVec<F> expected;  // closed form for A1
  bool annihilated = false;
  bool matches() const { return is_zero_matrix(FrameVec<F>(residual - expected)); }
};
template <class F>
CenterOfMass<F> center_of_mass_A1(const ModelSpec<F>& spec);

template <class F>
struct InnerProductReport {
  Surd<F> lap_x, lap_x_expected;    // <Lx, x> and n
  Surd<F> lap2_x, lap2_x_expected;  // <L^2 x, x> and f^2 + 2c(n^2 + 2n - 1)
  Surd<F> v_norm, v_norm_expected;  // <v, v> and cm/(2(m+1))
  Surd<F> gram_det;
  bool ok() const {
    return lap_x == lap_x_expected && lap2_x == lap2_x_expected && v_norm == v_norm_expected &&
           !gram_det.is_zero();
  }
};
template <class F>
InnerProductReport<F> inner_product_identities(const DeltaModule<F>& dm);

nlohmann::json to_json(const TypeReport<Rational>& r);
nlohmann::json to_json(const TypeReport<RatFunc>& r);

}  // namespace hopf
