#include "hopflab/embedding.hpp"

#include <algorithm>
#include <sstream>

namespace hopf {

ProjectorCheck check_projector(const HermitianPoint<Rational>& P, const SpaceForm& sf) {
  ProjectorCheck r;
  auto P2 = mat_mul<Rational>(P, P);
  r.idempotent = true;
  for (Eigen::Index i = 0; i < P.rows(); ++i)
    for (Eigen::Index j = 0; j < P.cols(); ++j)
      if (!(P2(i, j) == P(i, j))) r.idempotent = false;
  Gauss<Rational> tr = mtrace<Rational>(P);
  r.unit_trace = tr.re == Rational(1) && tr.im.is_zero();
  auto adj = psi_adjoint<Rational>(P, sf);
  r.hermitian = true;
  for (Eigen::Index i = 0; i < P.rows(); ++i)
    for (Eigen::Index j = 0; j < P.cols(); ++j)
      if (!(adj(i, j) == P(i, j))) r.hermitian = false;
  r.on_hyperquadric = hyperquadric_residual<Rational>(P, sf).is_zero();
  return r;
}

ProjectorCheck check_projector(const HermitianPoint<double>& P, const SpaceForm& sf, double tol) {
  ProjectorCheck r;
  double e_idem = 0, e_herm = 0;
  auto P2 = mat_mul<double>(P, P);
  auto adj = psi_adjoint<double>(P, sf);
  for (Eigen::Index i = 0; i < P.rows(); ++i)
    for (Eigen::Index j = 0; j < P.cols(); ++j) {
      e_idem = std::max({e_idem, std::abs(P2(i, j).re - P(i, j).re), std::abs(P2(i, j).im - P(i, j).im)});
      e_herm = std::max({e_herm, std::abs(adj(i, j).re - P(i, j).re), std::abs(adj(i, j).im - P(i, j).im)});
    }
  Gauss<double> tr = mtrace<double>(P);
  double e_tr = std::max(std::abs(tr.re - 1.0), std::abs(tr.im));
  double e_hq = std::abs(hyperquadric_residual<double>(P, sf));
  r.idempotent = e_idem < tol;
  r.hermitian = e_herm < tol;
  r.unit_trace = e_tr < tol;
  r.on_hyperquadric = e_hq < tol;
  r.max_error = std::max({e_idem, e_herm, e_tr, e_hq});
  return r;
}

CVec<Rational> sample_exact_line(const SpaceForm& sf, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> d(-9, 9);
  while (true) {
    CVec<Rational> w(sf.m + 1);
    for (int j = 0; j <= sf.m; ++j) w(j) = Gauss<Rational>(Rational(d(rng)), Rational(d(rng)));
    if (sf.c == -1) {
      // make the first coordinate dominate so that the line is timelike
      Rational s(0);
      for (int j = 1; j <= sf.m; ++j) s += w(j).norm2();
      w(0) = Gauss<Rational>(w(0).re + Rational(d(rng) >= 0 ? 1 : -1) * (s + 1), w(0).im);
    }
    Gauss<Rational> q = psi<Rational>(w, w, sf);
    Rational lam = sf.c == 1 ? q.re : -q.re;
    if (lam.sign() > 0) return w;
  }
}

CVec<double> sample_float_point(const SpaceForm& sf, std::mt19937_64& rng) {
  std::normal_distribution<double> g(0.0, 1.0);
  CVec<double> z(sf.m + 1);
  double norm = 0;
  for (int j = 0; j <= sf.m; ++j) {
    z(j) = Gauss<double>(g(rng), g(rng));
    if (sf.c == 1 || j > 0) norm += z(j).norm2();
  }
  if (sf.c == 1) {
    double s = 1.0 / std::sqrt(norm);
    for (int j = 0; j <= sf.m; ++j) z(j) = Gauss<double>(z(j).re * s, z(j).im * s);
    return z;
  }
  // cosh(d) times a unit phase in slot 0, sinh(d) times a unit vector elsewhere; d bounded keeps
  // the entries of P of moderate size
  std::uniform_real_distribution<double> dist(0.0, 1.5);
  double d = dist(rng);
  double a = std::hypot(z(0).re, z(0).im), s = std::sinh(d) / std::sqrt(norm);
  z(0) = Gauss<double>(z(0).re / a * std::cosh(d), z(0).im / a * std::cosh(d));
  for (int j = 1; j <= sf.m; ++j) z(j) = Gauss<double>(z(j).re * s, z(j).im * s);
  return z;
}

EmbeddingSuiteResult run_embedding_suite(const SpaceForm& sf, int samples, unsigned long seed) {
  EmbeddingSuiteResult res;
  std::mt19937_64 rng(seed * 1000003ULL + static_cast<unsigned long>(sf.m * 2 + (sf.c > 0)));
  // unit-modulus Gaussian rational (3+4i)/5 for the S^1 check
  Gauss<Rational> phase(Rational(3, 5), Rational(4, 5));
  for (int s = 0; s < samples; ++s) {
    ++res.samples;
    auto w = sample_exact_line(sf, rng);
    auto P = embed_line<Rational>(w, sf);
    auto chk = check_projector(P, sf);
    CVec<Rational> w2 = w;
    for (Eigen::Index j = 0; j < w2.size(); ++j) w2(j) = w2(j) * phase;
    auto P2 = embed_line<Rational>(w2, sf);
    bool s1 = true;
    for (Eigen::Index i = 0; i < P.rows(); ++i)
      for (Eigen::Index j = 0; j < P.cols(); ++j)
        if (!(P(i, j) == P2(i, j))) s1 = false;
    auto z = sample_float_point(sf, rng);
    auto Pf = embed_point<double>(z, sf, 1e-9);
    auto fchk = check_projector(Pf, sf, 1e-12);
    res.max_float_error = std::max(res.max_float_error, fchk.max_error);
    if (!chk.ok() || !s1 || !fchk.ok()) {
      ++res.failures;
      if (res.first_failure.empty()) {
        std::ostringstream os;
        os << "c=" << sf.c << " m=" << sf.m << " sample " << s << ": exact idempotent=" << chk.idempotent
           << " trace=" << chk.unit_trace << " hermitian=" << chk.hermitian
           << " hyperquadric=" << chk.on_hyperquadric << " S1=" << s1 << " float_error=" << fchk.max_error;
        res.first_failure = os.str();
      }
    }
  }
  return res;
}

TangentFrame::TangentFrame(const SpaceForm& sf) : sf_(sf) {
  int d = 2 * sf.m;
  J_ = zeros<Rational>(d, d);
  // J xi = -U, J U = xi
  J_(1, 0) = Rational(-1);
  J_(0, 1) = Rational(1);
  for (int p = 2; p < d; p += 2) {
    J_(p + 1, p) = Rational(1);
    J_(p, p + 1) = Rational(-1);
  }
}

Vec<Rational> TangentFrame::basis(int i) const {
  Vec<Rational> v = zero_vec<Rational>(dim());
  v(i) = Rational(1);
  return v;
}

std::vector<Vec<Rational>> TangentFrame::D() const {
  std::vector<Vec<Rational>> out;
  for (int i = 2; i < dim(); ++i) out.push_back(basis(i));
  return out;
}

Rational dot(const Vec<Rational>& a, const Vec<Rational>& b) {
  Rational s(0);
  for (Eigen::Index i = 0; i < a.size(); ++i) s += a(i) * b(i);
  return s;
}

Rational sigma_pair(const TangentFrame& fr, const Vec<Rational>& X, const Vec<Rational>& Y,
                    const Vec<Rational>& V, const Vec<Rational>& W) {
  Vec<Rational> JX = fr.J() * X, JY = fr.J() * Y;
  Rational s = Rational(2) * dot(X, Y) * dot(V, W) + dot(X, V) * dot(Y, W) + dot(X, W) * dot(Y, V) +
               dot(JX, V) * dot(JY, W) + dot(JX, W) * dot(JY, V);
  return Rational(fr.sf().c) * s;
}

Rational shape_pairing(const TangentFrame& fr, const Vec<Rational>& X, const Vec<Rational>& Y,
                     const Vec<Rational>& V, const Vec<Rational>& W) {
  Vec<Rational> JX = fr.J() * X, JY = fr.J() * Y;
  Vec<Rational> AV = V * (Rational(2) * dot(X, Y)) + Y * dot(X, V) + X * dot(Y, V) + JY * dot(JX, V) +
                     JX * dot(JY, V);
  return Rational(fr.sf().c) * dot(AV, W);
}

Rational ambient_pair(const TangentFrame& fr, const AmbientTerm& a, const AmbientTerm& b) {
  using K = AmbientTerm;
  const int c = fr.sf().c, m = fr.sf().m;
  if (a.kind == K::Tangent || b.kind == K::Tangent) {
    if (a.kind == K::Tangent && b.kind == K::Tangent) return dot(a.X, b.X);
    return Rational(0);
  }
  if (a.kind == K::Sigma && b.kind == K::Sigma) return sigma_pair(fr, a.X, a.Y, b.X, b.Y);
  if (a.kind == K::Sigma || b.kind == K::Sigma) {
    const AmbientTerm& s = a.kind == K::Sigma ? a : b;
    const AmbientTerm& o = a.kind == K::Sigma ? b : a;
    return o.kind == K::Position ? -dot(s.X, s.Y) : Rational(0);
  }
  if (a.kind == K::Identity && b.kind == K::Identity) return Rational(c * (m + 1), 2);
  return Rational(c, 2);
}

SigmaGram sigma_gram(const TangentFrame& fr,
                     const std::vector<std::pair<std::string, AmbientTerm>>& terms) {
  SigmaGram g;
  auto n = static_cast<Eigen::Index>(terms.size());
  g.table = zeros<Rational>(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    g.labels.push_back(terms[i].first);
    for (Eigen::Index j = 0; j < n; ++j) g.table(i, j) = ambient_pair(fr, terms[i].second, terms[j].second);
  }
  return g;
}

}  // namespace hopf
