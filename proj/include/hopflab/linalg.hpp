#pragma once

#include <Eigen/Core>
#include <optional>
#include <vector>

#include "hopflab/gauss.hpp"
#include "hopflab/ratfunc.hpp"
#include "hopflab/surd.hpp"

namespace hopf::detail {

template <class T>
struct ExactNumTraits {
  using Real = T;
  using NonInteger = T;
  using Nested = T;
  using Literal = T;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 10,
    AddCost = 20,
    MulCost = 40
  };
  static T epsilon() { return T(0); }
  static T dummy_precision() { return T(0); }
  static T highest() { return T(0); }
  static T lowest() { return T(0); }
  static int digits10() { return 0; }
};

}  // namespace hopf::detail

namespace Eigen {
template <>
struct NumTraits<hopf::Rational> : hopf::detail::ExactNumTraits<hopf::Rational> {};
template <>
struct NumTraits<hopf::RatFunc> : hopf::detail::ExactNumTraits<hopf::RatFunc> {};
template <class F>
struct NumTraits<hopf::Surd<F>> : hopf::detail::ExactNumTraits<hopf::Surd<F>> {};
template <class T>
struct NumTraits<hopf::Gauss<T>> : hopf::detail::ExactNumTraits<hopf::Gauss<T>> {};
}  // namespace Eigen

namespace hopf {

template <class S>
using Mat = Eigen::Matrix<S, Eigen::Dynamic, Eigen::Dynamic>;
template <class S>
using Vec = Eigen::Matrix<S, Eigen::Dynamic, 1>;

template <class Derived>
bool is_zero_matrix(const Eigen::MatrixBase<Derived>& m) {
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j)
      if (!is_zero(m(i, j))) return false;
  return true;
}

template <class S>
Mat<S> identity(Eigen::Index n) {
  Mat<S> I = Mat<S>::Constant(n, n, S(0));
  for (Eigen::Index i = 0; i < n; ++i) I(i, i) = S(1);
  return I;
}

template <class S>
Mat<S> zeros(Eigen::Index r, Eigen::Index c) {
  return Mat<S>::Constant(r, c, S(0));
}

template <class S>
Vec<S> zero_vec(Eigen::Index n) {
  return Vec<S>::Constant(n, S(0));
}

template <class S>
S trace(const Mat<S>& m) {
  S t(0);
  for (Eigen::Index i = 0; i < m.rows(); ++i) t = t + m(i, i);
  return t;
}

template <class S>
struct Echelon {
  Mat<S> R;                 // reduced row echelon form
  std::vector<Eigen::Index> pivots;  // pivot column of each nonzero row
};

// Exact reduced row echelon form; pivots are the first nonzero entries.
template <class S>
Echelon<S> rref(Mat<S> A) {
  Echelon<S> e;
  Eigen::Index r = 0;
  for (Eigen::Index c = 0; c < A.cols() && r < A.rows(); ++c) {
    Eigen::Index p = r;
    while (p < A.rows() && is_zero(A(p, c))) ++p;
    if (p == A.rows()) continue;
    if (p != r) A.row(p).swap(A.row(r));
    S inv = S(1) / A(r, c);
    for (Eigen::Index j = c; j < A.cols(); ++j) A(r, j) = A(r, j) * inv;
    for (Eigen::Index i = 0; i < A.rows(); ++i) {
      if (i == r || is_zero(A(i, c))) continue;
      S f = A(i, c);
      for (Eigen::Index j = c; j < A.cols(); ++j) A(i, j) = A(i, j) - f * A(r, j);
    }
    e.pivots.push_back(c);
    ++r;
  }
  e.R = std::move(A);
  return e;
}

template <class S>
Eigen::Index rank(const Mat<S>& A) {
  return static_cast<Eigen::Index>(rref(A).pivots.size());
}

// One solution of A x = b, or nothing when inconsistent.
template <class S>
std::optional<Vec<S>> solve(const Mat<S>& A, const Vec<S>& b) {
  Mat<S> aug(A.rows(), A.cols() + 1);
  aug.leftCols(A.cols()) = A;
  aug.col(A.cols()) = b;
  auto e = rref(aug);
  Vec<S> x = zero_vec<S>(A.cols());
  for (size_t k = 0; k < e.pivots.size(); ++k) {
    if (e.pivots[k] == A.cols()) return std::nullopt;
    x(e.pivots[k]) = e.R(static_cast<Eigen::Index>(k), A.cols());
  }
  return x;
}

// Basis of the right null space, as columns.
template <class S>
Mat<S> nullspace(const Mat<S>& A) {
  auto e = rref(A);
  std::vector<Eigen::Index> free;
  for (Eigen::Index c = 0, k = 0; c < A.cols(); ++c) {
    if (k < static_cast<Eigen::Index>(e.pivots.size()) && e.pivots[k] == c)
      ++k;
    else
      free.push_back(c);
  }
  Mat<S> N = zeros<S>(A.cols(), static_cast<Eigen::Index>(free.size()));
  for (size_t f = 0; f < free.size(); ++f) {
    N(free[f], static_cast<Eigen::Index>(f)) = S(1);
    for (size_t k = 0; k < e.pivots.size(); ++k)
      N(e.pivots[k], static_cast<Eigen::Index>(f)) = -e.R(static_cast<Eigen::Index>(k), free[f]);
  }
  return N;
}

template <class S>
S determinant(Mat<S> A) {
  S det(1);
  Eigen::Index n = A.rows();
  for (Eigen::Index c = 0; c < n; ++c) {
    Eigen::Index p = c;
    while (p < n && is_zero(A(p, c))) ++p;
    if (p == n) return S(0);
    if (p != c) {
      A.row(p).swap(A.row(c));
      det = -det;
    }
    det = det * A(c, c);
    S inv = S(1) / A(c, c);
    for (Eigen::Index i = c + 1; i < n; ++i) {
      if (is_zero(A(i, c))) continue;
      S f = A(i, c) * inv;
      for (Eigen::Index j = c; j < n; ++j) A(i, j) = A(i, j) - f * A(c, j);
    }
  }
  return det;
}

}  // namespace hopf
