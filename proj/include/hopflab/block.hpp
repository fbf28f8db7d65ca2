#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "hopflab/catalog.hpp"
#include "hopflab/surd.hpp"

namespace hopf {

// Sparse real polynomial in nv variables with scalar coefficients.
template <class S>
class MPoly {
 public:
  using Exp = std::vector<int>;

  MPoly() = default;
  explicit MPoly(int nv) : nv_(nv) {}
  static MPoly constant(int nv, const S& c) {
    MPoly p(nv);
    p.add(Exp(nv, 0), c);
    return p;
  }
  static MPoly var(int nv, int i) {
    MPoly p(nv);
    Exp e(nv, 0);
    e[i] = 1;
    p.add(e, S(1));
    return p;
  }

  int nv() const { return nv_; }
  const std::map<Exp, S>& terms() const { return t_; }
  bool is_zero() const { return t_.empty(); }
  int total_degree() const {
    int d = 0;
    for (auto& [e, c] : t_) {
      int s = 0;
      for (int x : e) s += x;
      d = std::max(d, s);
    }
    return d;
  }

  void add(const Exp& e, const S& c) {
    if (c.is_zero()) return;
    auto it = t_.find(e);
    if (it == t_.end()) {
      t_.emplace(e, c);
      return;
    }
    it->second = it->second + c;
    if (it->second.is_zero()) t_.erase(it);
  }

  friend MPoly operator+(MPoly a, const MPoly& b) {
    for (auto& [e, c] : b.t_) a.add(e, c);
    return a;
  }
  friend MPoly operator-(const MPoly& a) {
    MPoly r(a.nv_);
    for (auto& [e, c] : a.t_) r.t_.emplace(e, -c);
    return r;
  }
  friend MPoly operator-(const MPoly& a, const MPoly& b) { return a + (-b); }
  friend MPoly operator*(const MPoly& a, const MPoly& b) {
    MPoly r(std::max(a.nv_, b.nv_));
    for (auto& [ea, ca] : a.t_)
      for (auto& [eb, cb] : b.t_) {
        Exp e(ea);
        for (size_t i = 0; i < e.size(); ++i) e[i] += eb[i];
        r.add(e, ca * cb);
      }
    return r;
  }
  friend MPoly operator*(const MPoly& a, const S& s) {
    MPoly r(a.nv_);
    for (auto& [e, c] : a.t_) r.add(e, c * s);
    return r;
  }
  friend bool operator==(const MPoly& a, const MPoly& b) { return (a - b).is_zero(); }

  MPoly derivative(int i) const {
    MPoly r(nv_);
    for (auto& [e, c] : t_) {
      if (e[i] == 0) continue;
      Exp f(e);
      f[i] -= 1;
      r.add(f, c * S(e[i]));
    }
    return r;
  }

  std::string str() const;

 private:
  int nv_ = 0;
  std::map<Exp, S> t_;
};

// One factor of the product of quadrics: pairs (x_j, y_j) starting at variable `first`
// with sum_j eps_j (x_j^2 + y_j^2) = rho2.
template <class S>
struct QuadricFactor {
  int first = 0;
  int pairs = 1;
  std::vector<int> eps;
  S rho2;
  int dim() const { return 2 * pairs - 1; }
  bool owns(int v) const { return v >= first && v < first + 2 * pairs; }
};

template <class S>
struct ProductQuadric {
  int nv = 0;
  std::vector<QuadricFactor<S>> factors;
};

// Canonical form modulo the quadric relations: the square of the last y-variable of each
// factor is eliminated.
template <class S>
MPoly<S> reduce(const MPoly<S>& p, const ProductQuadric<S>& q);

// Laplace-Beltrami operator (positive spectrum convention) of one factor on a polynomial:
// -box F_d + d(d + N - 1) F_d / rho2 on each part F_d homogeneous of degree d in that factor.
template <class S>
MPoly<S> factor_laplacian(const MPoly<S>& p, const QuadricFactor<S>& f);

// Infinitesimal action of the diagonal circle: sum over pairs of -y d/dx + x d/dy.
template <class S>
MPoly<S> circle_generator(const MPoly<S>& p, const ProductQuadric<S>& q);

// Sum of the factor Laplacians, reduced; throws DomainError("not a basic function") on
// circle-variant input.
template <class S>
MPoly<S> product_laplacian(const MPoly<S>& p, const ProductQuadric<S>& q);

// Complex-valued polynomial as a pair of real ones.
template <class S>
struct CPoly {
  MPoly<S> re, im;
};

template <class F>
struct BlockModel {
  int k = 0, l = 0, c = 1;
  Surd<F> t, r1sq, r2sq;
  ProductQuadric<Surd<F>> quadric;
  int K() const { return 2 * k + 1; }
  int L() const { return 2 * l + 1; }
  int m() const { return k + l + 1; }
  // matrix entries of the embedding, indices 0..m
  CPoly<Surd<F>> entry(int row, int col) const;
  // which block an index pair falls in: 'a', 'b', 'c', 'd'
  char block_of(int row, int col) const;
};

template <class F>
BlockModel<F> block_model(int k, int l, int c, const Surd<F>& t);

// Closed-form coefficients of the s-th iterated Laplacian: each block is coef * entry + constant * identity.
template <class F>
struct BlockRep {
  int s = 1;
  Surd<F> a_coef, a_const, b_coef, d_coef, d_const;
};
template <class F>
BlockRep<F> delta_power_blocks(const BlockModel<F>& bm, int s);

template <class F>
struct OracleReport {
  int checked = 0;
  std::vector<std::string> mismatches;
  bool ok() const { return mismatches.empty(); }
};
// Compare s-fold product_laplacian of every entry against the closed forms, s = 1..smax.
template <class F>
OracleReport<F> block_oracle_check(const BlockModel<F>& bm, int smax = 3);

template <class F>
struct BlockComponent {
  std::string name;  // "u" (off-diagonal), "v" (z-block), "w" (w-block)
  Surd<F> eigenvalue;
  bool vanishes = false;
};

template <class F>
struct A2TypeReport {
  int k = 0, l = 0, c = 1;
  Surd<F> t, r1sq, r2sq;
  Surd<F> p, q, r;
  Surd<F> x0_a, x0_d;  // constant blocks of the center of mass
  std::vector<BlockComponent<F>> components;
  bool cubic_ok = false;       // Laplacian cubic holds slot by slot
  bool root_relations_ok = false;
  std::vector<Surd<F>> eigenvalues;  // distinct, of the nonvanishing components
  int type = 0;
  bool null_type = false;
  bool center_is_standard = false;  // x0 = I/(m+1)
  bool mass_symmetric = false;
  std::vector<std::string> coincidences;
  std::string verdict;
};

template <class F>
A2TypeReport<F> a2_type_analysis(int k, int l, int c, const Surd<F>& t);

template <class F>
struct FrameBlockCrossCheck {
  bool agree = false;
  std::string detail;
  // combined verdict: nonzero spectrum from both engines, constancy of the kernel part from the block engine
  int type = 0;
  bool null_type = false;
  bool mass_symmetric = false;
  std::vector<Surd<F>> eigenvalues;
  std::string verdict;
};
// A1 and A1'' through both engines: nonzero eigenvalues and center of mass must agree exactly.
template <class F>
FrameBlockCrossCheck<F> cross_check_frame_vs_block(const ModelSpec<F>& spec);

}  // namespace hopf
