#include "hopflab/block.hpp"

#include <algorithm>

#include "hopflab/delta.hpp"
#include "hopflab/errors.hpp"

namespace hopf {

template <class S>
std::string MPoly<S>::str() const {
  if (t_.empty()) return "0";
  std::string out;
  for (auto& [e, c] : t_) {
    if (!out.empty()) out += " + ";
    out += "(" + c.str() + ")";
    for (int i = 0; i < nv_; ++i) {
      if (e[i] == 0) continue;
      out += "*v" + std::to_string(i);
      if (e[i] > 1) out += "^" + std::to_string(e[i]);
    }
  }
  return out;
}

template <class S>
MPoly<S> reduce(const MPoly<S>& p, const ProductQuadric<S>& q) {
  MPoly<S> cur = p;
  for (auto& f : q.factors) {
    const int y = f.first + 2 * f.pairs - 1;
    const S inv_eps(f.eps.back());  // eps is +-1, so it is its own inverse
    for (;;) {
      MPoly<S> next(cur.nv());
      bool changed = false;
      for (auto& [e, c] : cur.terms()) {
        if (e[y] < 2) {
          next.add(e, c);
          continue;
        }
        changed = true;
        auto base = e;
        base[y] -= 2;
        next.add(base, c * f.rho2 * inv_eps);
        for (int v = f.first; v < y; ++v) {
          auto ev = base;
          ev[v] += 2;
          next.add(ev, -(c * S(f.eps[(v - f.first) / 2]) * inv_eps));
        }
      }
      cur = std::move(next);
      if (!changed) break;
    }
  }
  return cur;
}

template <class S>
MPoly<S> factor_laplacian(const MPoly<S>& p, const QuadricFactor<S>& f) {
  const int N = f.dim();
  const S inv_rho2 = S(1) / f.rho2;
  MPoly<S> out(p.nv());
  for (auto& [e, c] : p.terms()) {
    int d = 0;
    for (int v = f.first; v < f.first + 2 * f.pairs; ++v) d += e[v];
    if (d == 0) continue;
    out.add(e, c * S(d * (d + N - 1)) * inv_rho2);
    for (int v = f.first; v < f.first + 2 * f.pairs; ++v) {
      if (e[v] < 2) continue;
      auto ev = e;
      ev[v] -= 2;
      out.add(ev, -(c * S(e[v] * (e[v] - 1) * f.eps[(v - f.first) / 2])));
    }
  }
  return out;
}

template <class S>
MPoly<S> circle_generator(const MPoly<S>& p, const ProductQuadric<S>& q) {
  MPoly<S> out(p.nv());
  for (auto& f : q.factors)
    for (int j = 0; j < f.pairs; ++j) {
      const int x = f.first + 2 * j, y = x + 1;
      auto X = MPoly<S>::var(p.nv(), x), Y = MPoly<S>::var(p.nv(), y);
      out = out + X * p.derivative(y) - Y * p.derivative(x);
    }
  return out;
}

template <class S>
MPoly<S> product_laplacian(const MPoly<S>& p, const ProductQuadric<S>& q) {
  auto r = reduce(p, q);
  if (!reduce(circle_generator(r, q), q).is_zero()) throw DomainError("not a basic function");
  MPoly<S> out(p.nv());
  for (auto& f : q.factors) out = out + factor_laplacian(r, f);
  return reduce(out, q);
}

template <class F>
BlockModel<F> block_model(int k, int l, int c, const Surd<F>& t) {
  using S = Surd<F>;
  if (k < 0 || l < 0) throw DomainError("block sizes must be nonnegative");
  if (c != 1 && c != -1) throw DomainError("c must be +1 or -1");
  BlockModel<F> bm;
  bm.k = k;
  bm.l = l;
  bm.c = c;
  bm.t = t;
  const S tc = t + S(c);
  if (tc.is_zero()) throw DomainError("radius parameter makes t + c vanish");
  bm.r1sq = t / tc;
  bm.r2sq = S(1) / tc;
  const int nv = 2 * (k + 1) + 2 * (l + 1);
  bm.quadric.nv = nv;
  QuadricFactor<S> z, w;
  z.first = 0;
  z.pairs = k + 1;
  z.eps.assign(k + 1, 1);
  z.eps[0] = c;
  z.rho2 = S(c) * bm.r1sq;
  w.first = 2 * (k + 1);
  w.pairs = l + 1;
  w.eps.assign(l + 1, 1);
  w.rho2 = bm.r2sq;
  bm.quadric.factors = {z, w};
  return bm;
}

template <class F>
char BlockModel<F>::block_of(int row, int col) const {
  const bool rz = row <= k, cz = col <= k;
  return rz ? (cz ? 'a' : 'b') : (cz ? 'c' : 'd');
}

template <class F>
CPoly<Surd<F>> BlockModel<F>::entry(int row, int col) const {
  using S = Surd<F>;
  using P = MPoly<S>;
  const int nv = quadric.nv;
  // column sign: the first z-column carries c * c = 1, the rest carry c
  const int sgn = (col == 0) ? 1 : c;
  auto re_im = [&](int i) { return std::pair{P::var(nv, 2 * i), P::var(nv, 2 * i + 1)}; };
  auto [a, b] = re_im(row);
  auto [x, y] = re_im(col);
  CPoly<S> e;
  e.re = (a * x + b * y) * S(sgn);
  e.im = (b * x - a * y) * S(sgn);
  return e;
}

namespace {

template <class F>
struct Eigen3 {
  Surd<F> u, v, w, x0_a, x0_d;
};

template <class F>
Eigen3<F> block_eigen(const BlockModel<F>& bm) {
  using S = Surd<F>;
  const S C(bm.c), K(bm.K()), L(bm.L());
  Eigen3<F> e;
  e.u = C * K / bm.r1sq + L / bm.r2sq;
  e.v = S(2) * C * (K + S(1)) / bm.r1sq;
  e.w = S(2) * (L + S(1)) / bm.r2sq;
  e.x0_a = S(2) * bm.r1sq / (K + S(1));
  e.x0_d = S(2) * C * bm.r2sq / (L + S(1));
  return e;
}

template <class S>
S power(const S& x, int s) {
  S r(1);
  for (int i = 0; i < s; ++i) r = r * x;
  return r;
}

}  // namespace

template <class F>
BlockRep<F> delta_power_blocks(const BlockModel<F>& bm, int s) {
  if (s < 1) throw DomainError("iterate order must be positive");
  auto e = block_eigen(bm);
  BlockRep<F> rep;
  rep.s = s;
  rep.a_coef = power(e.v, s);
  rep.a_const = -(power(e.v, s) * e.x0_a);
  rep.b_coef = power(e.u, s);
  rep.d_coef = power(e.w, s);
  rep.d_const = -(power(e.w, s) * e.x0_d);
  return rep;
}

template <class F>
OracleReport<F> block_oracle_check(const BlockModel<F>& bm, int smax) {
  using S = Surd<F>;
  OracleReport<F> rep;
  std::vector<BlockRep<F>> reps;
  for (int s = 1; s <= smax; ++s) reps.push_back(delta_power_blocks(bm, s));
  const int nv = bm.quadric.nv;
  for (int i = 0; i <= bm.k + bm.l + 1; ++i)
    for (int j = 0; j <= bm.k + bm.l + 1; ++j) {
      auto e = bm.entry(i, j);
      MPoly<S> re = e.re, im = e.im;
      const char blk = bm.block_of(i, j);
      for (int s = 1; s <= smax; ++s) {
        re = product_laplacian(re, bm.quadric);
        im = product_laplacian(im, bm.quadric);
        const auto& r = reps[s - 1];
        S coef = blk == 'a' ? r.a_coef : blk == 'd' ? r.d_coef : r.b_coef;
        S cst = i != j ? S(0) : blk == 'a' ? r.a_const : r.d_const;
        auto dre = reduce(re - e.re * coef - MPoly<S>::constant(nv, cst), bm.quadric);
        auto dim = reduce(im - e.im * coef, bm.quadric);
        ++rep.checked;
        if (!dre.is_zero() || !dim.is_zero())
          rep.mismatches.push_back("entry (" + std::to_string(i) + "," + std::to_string(j) + ") at power " +
                                   std::to_string(s));
      }
    }
  return rep;
}

template <class F>
A2TypeReport<F> a2_type_analysis(int k, int l, int c, const Surd<F>& t) {
  using S = Surd<F>;
  auto bm = block_model(k, l, c, t);
  auto ev = block_eigen(bm);
  A2TypeReport<F> rep;
  rep.k = k;
  rep.l = l;
  rep.c = c;
  rep.t = t;
  rep.r1sq = bm.r1sq;
  rep.r2sq = bm.r2sq;
  rep.x0_a = ev.x0_a;
  rep.x0_d = ev.x0_d;
  const S C(c), K(bm.K()), L(bm.L());
  const S r1 = bm.r1sq, r2 = bm.r2sq;
  rep.p = -(C * (S(3) * K + S(2)) / r1 + (S(3) * L + S(2)) / r2);
  rep.q = S(2) * (K * (K + S(1)) / (r1 * r1) + L * (L + S(1)) / (r2 * r2) +
                  C * (S(4) * K * L + S(3) * K + S(3) * L + S(2)) / (r1 * r2));
  rep.r = -(S(4) * C * (K + S(1)) * (L + S(1)) / (r1 * r2) * (C * K / r1 + L / r2));

  auto cubic_at = [&](const S& x) { return x * x * x + rep.p * x * x + rep.q * x + rep.r; };
  std::vector<BlockRep<F>> reps;
  for (int s = 1; s <= 3; ++s) reps.push_back(delta_power_blocks(bm, s));
  auto slot = [&](auto get) { return get(reps[2]) + rep.p * get(reps[1]) + rep.q * get(reps[0]); };
  rep.cubic_ok = (slot([](auto& r) { return r.a_coef; }) + rep.r).is_zero() &&
                 (slot([](auto& r) { return r.b_coef; }) + rep.r).is_zero() &&
                 (slot([](auto& r) { return r.d_coef; }) + rep.r).is_zero() &&
                 (slot([](auto& r) { return r.a_const; }) - rep.r * ev.x0_a).is_zero() &&
                 (slot([](auto& r) { return r.d_const; }) - rep.r * ev.x0_d).is_zero() &&
                 cubic_at(ev.u).is_zero();
  rep.root_relations_ok = (ev.u + ev.v + ev.w + rep.p).is_zero() &&
                          (ev.u * ev.v + ev.u * ev.w + ev.v * ev.w - rep.q).is_zero() &&
                          (ev.u * ev.v * ev.w + rep.r).is_zero();

  // a component vanishes when its block is constant on the quadric
  auto block_constant = [&](int lo, int hi, const S& x0) {
    for (int i = lo; i <= hi; ++i)
      for (int j = lo; j <= hi; ++j) {
        auto e = bm.entry(i, j);
        auto re = e.re - MPoly<S>::constant(bm.quadric.nv, i == j ? x0 : S(0));
        if (!reduce(re, bm.quadric).is_zero() || !reduce(e.im, bm.quadric).is_zero()) return false;
      }
    return true;
  };
  rep.components = {{"u", ev.u, false},
                    {"v", ev.v, block_constant(0, k, ev.x0_a)},
                    {"w", ev.w, block_constant(k + 1, k + l + 1, ev.x0_d)}};

  for (size_t i = 0; i < rep.components.size(); ++i) {
    const auto& a = rep.components[i];
    if (a.vanishes) continue;
    if (a.eigenvalue.is_zero()) rep.null_type = true;
    bool seen = false;
    for (size_t j = 0; j < i; ++j) {
      const auto& b = rep.components[j];
      if (b.vanishes || !(a.eigenvalue == b.eigenvalue)) continue;
      rep.coincidences.push_back(b.name + "=" + a.name);
      seen = true;
    }
    if (!seen) rep.eigenvalues.push_back(a.eigenvalue);
  }
  if constexpr (std::is_same_v<F, Rational>)
    std::sort(rep.eigenvalues.begin(), rep.eigenvalues.end(),
              [](const S& a, const S& b) { return sign(a - b) < 0; });
  rep.type = static_cast<int>(rep.eigenvalues.size());
  const S std_center = S(1) / S(bm.m() + 1);
  rep.center_is_standard = ev.x0_a == std_center && ev.x0_d == std_center;
  rep.mass_symmetric = rep.center_is_standard || rep.null_type;
  if (rep.null_type)
    rep.verdict = "null " + std::to_string(rep.type) + "-type";
  else
    rep.verdict = std::to_string(rep.type) + "-type, " +
                  (rep.mass_symmetric ? "mass-symmetric" : "not mass-symmetric");
  return rep;
}

template <class F>
FrameBlockCrossCheck<F> cross_check_frame_vs_block(const ModelSpec<F>& spec) {
  using S = Surd<F>;
  const int m = spec.sf.m, c = spec.sf.c;
  int k = 0, l = 0;
  S T;
  if (spec.family == Family::A1) {
    k = 0;
    l = m - 1;
    T = spec.param;
  } else if (spec.family == Family::A1tube) {
    k = m - 1;
    l = 0;
    T = S(1) / spec.param;
  } else {
    throw DomainError("frame/block cross-check needs A1 or A1''");
  }
  auto frame = chen_type_evidence(build_frame_module(spec));
  auto block = a2_type_analysis(k, l, c, T);
  std::vector<S> block_nonzero;
  for (auto& e : block.eigenvalues)
    if (!e.is_zero()) block_nonzero.push_back(e.compacted());
  FrameBlockCrossCheck<F> out;
  bool same = frame.type.has_value() && *frame.type == static_cast<int>(block_nonzero.size()) &&
              frame.eigenvalues.size() == block_nonzero.size();
  if (same)
    for (auto& fe : frame.eigenvalues) {
      const S x = fe.compacted();
      bool hit = false;
      for (auto& be : block_nonzero) {
        if (x == be) {
          hit = true;
          break;
        }
      }
      same = same && hit;
    }
  same = same && frame.mass_symmetric == block.center_is_standard;
  out.agree = same;
  out.type = block.type;
  out.null_type = block.null_type;
  out.mass_symmetric = block.mass_symmetric;
  out.eigenvalues = block.eigenvalues;
  out.verdict = block.verdict;
  out.detail = "frame: " + frame.verdict + "; block (k=" + std::to_string(k) + ", l=" + std::to_string(l) +
               "): " + block.verdict;
  return out;
}

#define HOPF_BLOCK_INST(F)                                                                             \
  template class MPoly<Surd<F>>;                                                                       \
  template MPoly<Surd<F>> reduce(const MPoly<Surd<F>>&, const ProductQuadric<Surd<F>>&);               \
  template MPoly<Surd<F>> factor_laplacian(const MPoly<Surd<F>>&, const QuadricFactor<Surd<F>>&);      \
  template MPoly<Surd<F>> circle_generator(const MPoly<Surd<F>>&, const ProductQuadric<Surd<F>>&);     \
  template MPoly<Surd<F>> product_laplacian(const MPoly<Surd<F>>&, const ProductQuadric<Surd<F>>&);    \
  template struct BlockModel<F>;                                                                       \
  template BlockModel<F> block_model(int, int, int, const Surd<F>&);                                   \
  template BlockRep<F> delta_power_blocks(const BlockModel<F>&, int);                                  \
  template OracleReport<F> block_oracle_check(const BlockModel<F>&, int);                              \
  template A2TypeReport<F> a2_type_analysis(int, int, int, const Surd<F>&);                            \
  template FrameBlockCrossCheck<F> cross_check_frame_vs_block(const ModelSpec<F>&);

HOPF_BLOCK_INST(Rational)
HOPF_BLOCK_INST(RatFunc)

}  // namespace hopf
