#pragma once

#include <cmath>
#include <random>
#include <string>
#include <vector>

#include "hopflab/linalg.hpp"

namespace hopf {

struct SpaceForm {
  int c = 1;
  int m = 2;

  SpaceForm() = default;
  SpaceForm(int c_, int m_) : c(c_), m(m_) {
    if (c != 1 && c != -1) throw DomainError("c must be +1 or -1");
    if (m < 2) throw DomainError("m must be at least 2");
  }
  int n() const { return 2 * m - 1; }
  // Real dimension of the space of Psi-Hermitian matrices.
  int N() const { return (m + 1) * (m + 1); }
  // Sign pattern of Psi_c: entry 0 carries c.
  int eps(int j) const { return j == 0 ? c : 1; }
  std::string space() const { return c == 1 ? "cp" : "ch"; }
};

template <class T>
using CVec = Vec<Gauss<T>>;
template <class T>
using HermitianPoint = Mat<Gauss<T>>;

// Psi_c(z, w) = c conj(z0) w0 + sum conj(zj) wj
template <class T>
Gauss<T> psi(const CVec<T>& z, const CVec<T>& w, const SpaceForm& sf) {
  Gauss<T> acc(T(0));
  for (Eigen::Index j = 0; j < z.size(); ++j) {
    Gauss<T> p = z(j).conj() * w(j);
    acc = acc + (sf.eps(static_cast<int>(j)) == 1 ? p : -p);
  }
  return acc;
}

template <class T>
bool near_value(const T& a, const T& b, double tol) {
  if constexpr (std::is_floating_point_v<T>) {
    return std::abs(a - b) <= tol;
  } else {
    (void)tol;
    return a == b;
  }
}

// Entry (i,j) = z_i conj(z_j) times 1 in column 0 and c elsewhere.
template <class T>
HermitianPoint<T> embed_point(const CVec<T>& z, const SpaceForm& sf, double tol = 1e-12) {
  if (z.size() != sf.m + 1) throw DomainError("point has wrong dimension");
  Gauss<T> q = psi<T>(z, z, sf);
  if (!near_value<T>(q.re, T(sf.c), tol) || !near_value<T>(q.im, T(0), tol))
    throw DomainError("not on quadric N^{2m+1}");
  HermitianPoint<T> P(sf.m + 1, sf.m + 1);
  for (int i = 0; i <= sf.m; ++i)
    for (int j = 0; j <= sf.m; ++j) {
      Gauss<T> e = z(i) * z(j).conj();
      P(i, j) = (j == 0 || sf.c == 1) ? e : -e;
    }
  return P;
}

// Projector of the line through w (c Psi(w,w) > 0), using a rational rescaling.
template <class T>
HermitianPoint<T> embed_line(const CVec<T>& w, const SpaceForm& sf) {
  Gauss<T> q = psi<T>(w, w, sf);
  T lam = sf.c == 1 ? q.re : -q.re;
  if (!(lam > T(0))) throw DomainError("line is not of the right causal type");
  HermitianPoint<T> P(sf.m + 1, sf.m + 1);
  for (int i = 0; i <= sf.m; ++i)
    for (int j = 0; j <= sf.m; ++j) {
      Gauss<T> e = w(i) * w(j).conj();
      e = Gauss<T>(e.re / lam, e.im / lam);
      P(i, j) = (j == 0 || sf.c == 1) ? e : -e;
    }
  return P;
}

template <class T>
Gauss<T> mtrace(const HermitianPoint<T>& A) {
  Gauss<T> t(T(0));
  for (Eigen::Index i = 0; i < A.rows(); ++i) t = t + A(i, i);
  return t;
}

// (c/2) tr(AB); the imaginary part vanishes for Psi-Hermitian inputs.
template <class T>
T trace_metric(const HermitianPoint<T>& A, const HermitianPoint<T>& B, int c) {
  if (A.rows() != B.rows() || A.cols() != B.cols()) throw DomainError("shape mismatch");
  Gauss<T> t(T(0));
  for (Eigen::Index i = 0; i < A.rows(); ++i)
    for (Eigen::Index k = 0; k < A.cols(); ++k) t = t + A(i, k) * B(k, i);
  return T(c) * t.re / T(2);
}

template <class T>
HermitianPoint<T> identity_point(int m) {
  HermitianPoint<T> I = HermitianPoint<T>::Constant(m + 1, m + 1, Gauss<T>(T(0)));
  for (int i = 0; i <= m; ++i) I(i, i) = Gauss<T>(T(1));
  return I;
}

template <class T>
T hyperquadric_residual(const HermitianPoint<T>& P, const SpaceForm& sf) {
  HermitianPoint<T> I = identity_point<T>(sf.m);
  HermitianPoint<T> D = P;
  for (int i = 0; i <= sf.m; ++i) D(i, i) = D(i, i) - Gauss<T>(T(1) / T(sf.m + 1));
  return trace_metric<T>(D, D, sf.c) - T(sf.c * sf.m) / T(2 * (sf.m + 1));
}

// Psi-adjoint G^{-1} P^* G with G = diag(c, 1, ..., 1).
template <class T>
HermitianPoint<T> psi_adjoint(const HermitianPoint<T>& P, const SpaceForm& sf) {
  HermitianPoint<T> R(P.rows(), P.cols());
  for (Eigen::Index i = 0; i < P.rows(); ++i)
    for (Eigen::Index j = 0; j < P.cols(); ++j) {
      Gauss<T> v = P(j, i).conj();
      int s = sf.eps(static_cast<int>(i)) * sf.eps(static_cast<int>(j));
      R(i, j) = s == 1 ? v : -v;
    }
  return R;
}

template <class T>
HermitianPoint<T> mat_mul(const HermitianPoint<T>& A, const HermitianPoint<T>& B) {
  HermitianPoint<T> C = HermitianPoint<T>::Constant(A.rows(), B.cols(), Gauss<T>(T(0)));
  for (Eigen::Index i = 0; i < A.rows(); ++i)
    for (Eigen::Index k = 0; k < A.cols(); ++k)
      for (Eigen::Index j = 0; j < B.cols(); ++j) C(i, j) = C(i, j) + A(i, k) * B(k, j);
  return C;
}

struct ProjectorCheck {
  bool idempotent = false;
  bool unit_trace = false;
  bool hermitian = false;
  bool on_hyperquadric = false;
  double max_error = 0;  // float path only
  bool ok() const { return idempotent && unit_trace && hermitian && on_hyperquadric; }
};

ProjectorCheck check_projector(const HermitianPoint<Rational>& P, const SpaceForm& sf);
ProjectorCheck check_projector(const HermitianPoint<double>& P, const SpaceForm& sf, double tol);

// Random integer Gaussian vector w with c Psi(w,w) > 0.
CVec<Rational> sample_exact_line(const SpaceForm& sf, std::mt19937_64& rng);
// Random float point with Psi(z,z) = c.
CVec<double> sample_float_point(const SpaceForm& sf, std::mt19937_64& rng);

struct EmbeddingSuiteResult {
  int samples = 0;
  int failures = 0;
  double max_float_error = 0;
  std::string first_failure;
};
EmbeddingSuiteResult run_embedding_suite(const SpaceForm& sf, int samples, unsigned long seed);

// Tangent frame of CQ^m at a point: index 0 = xi, 1 = U = -J xi, then pairs (e_i, J e_i).
// Vectors are coordinate columns over this orthonormal frame.
class TangentFrame {
 public:
  explicit TangentFrame(const SpaceForm& sf);
  int dim() const { return 2 * sf_.m; }
  const SpaceForm& sf() const { return sf_; }
  const Mat<Rational>& J() const { return J_; }
  Vec<Rational> basis(int i) const;
  Vec<Rational> xi() const { return basis(0); }
  Vec<Rational> U() const { return basis(1); }
  // D vectors e_1, Je_1, e_2, Je_2, ...
  std::vector<Vec<Rational>> D() const;

 private:
  SpaceForm sf_;
  Mat<Rational> J_;
};

Rational dot(const Vec<Rational>& a, const Vec<Rational>& b);

// <sigma(X,Y), sigma(V,W)> for the second fundamental form of the projector embedding.
Rational sigma_pair(const TangentFrame& fr, const Vec<Rational>& X, const Vec<Rational>& Y,
                    const Vec<Rational>& V, const Vec<Rational>& W);
// <A_{sigma(X,Y)} V, W> from the shape-operator formula; must agree with sigma_pair.
Rational shape_pairing(const TangentFrame& fr, const Vec<Rational>& X, const Vec<Rational>& Y,
                     const Vec<Rational>& V, const Vec<Rational>& W);

// Ambient elements spanned by sigma(X,Y), the position x and the identity I; tangent xi is
// orthogonal to all of them.
struct AmbientTerm {
  enum Kind { Sigma, Position, Identity, Tangent } kind;
  Vec<Rational> X, Y;  // for Sigma: the pair; for Tangent: X
};
Rational ambient_pair(const TangentFrame& fr, const AmbientTerm& a, const AmbientTerm& b);

// Symmetric table of ambient pairings over labeled terms.
struct SigmaGram {
  std::vector<std::string> labels;
  Mat<Rational> table;
};
SigmaGram sigma_gram(const TangentFrame& fr, const std::vector<std::pair<std::string, AmbientTerm>>& terms);

}  // namespace hopf
