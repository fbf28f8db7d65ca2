#include "hopflab/polyroots.hpp"

#include <algorithm>
#include <functional>

namespace hopf {

template <class F>
std::optional<Poly<F>> descend(const SPoly<F>& p) {
  std::vector<F> out;
  for (auto& c : p.coeffs()) {
    auto b = c.compacted().base_value();
    if (!b) return std::nullopt;
    out.push_back(*b);
  }
  return Poly<F>(std::move(out));
}

template std::optional<Poly<Rational>> descend<Rational>(const SPoly<Rational>&);
template std::optional<Poly<RatFunc>> descend<RatFunc>(const SPoly<RatFunc>&);

namespace {

QPoly interpolate(const std::vector<Rational>& xs, const std::vector<Rational>& ys) {
  QPoly acc;
  for (size_t i = 0; i < xs.size(); ++i) {
    QPoly basis(Rational(1));
    Rational den(1);
    for (size_t j = 0; j < xs.size(); ++j) {
      if (j == i) continue;
      basis = basis * QPoly(std::vector<Rational>{-xs[j], Rational(1)});
      den *= xs[i] - xs[j];
    }
    acc += basis.scaled(ys[i] / den);
  }
  return acc;
}

Var var_of(const Poly<RatFunc>& p) {
  for (auto& c : p.coeffs())
    if (c.var() != Var::none) return c.var();
  return Var::none;
}

QPoly lcm(const QPoly& a, const QPoly& b) { return (a * b / gcd(a, b)).monic(); }

// Roots of q in Q(x)(sqrt) for a monic quadratic, lifted onto the context tower.
template <class F>
std::vector<Surd<F>> quadratic_roots(const SPoly<F>& q, const Surd<F>& context, int& complex_count) {
  Surd<F> b = q.coeff(1) / q.coeff(2), c = q.coeff(0) / q.coeff(2);
  Surd<F> disc = b * b - Surd<F>(4) * c;
  if constexpr (std::is_same_v<F, Rational>) {
    (void)context;
    if (sign(disc) < 0) {
      complex_count += 2;
      return {};
    }
    Surd<F> r = adjoin_sqrt(disc);
    return {(-b - r) / Surd<F>(2), (-b + r) / Surd<F>(2)};
  } else {
    Surd<F> r;
    auto base = disc.compacted().base_value();
    if (base && !exact_sqrt(*base)) {
      // keep square denominators outside the radical: sqrt(N/D) = sqrt(N D)/D
      Var v = base->var();
      QPoly D = base->den();
      Surd<F> scale, inner;
      if (auto d = exact_sqrt_poly(D)) {
        scale = Surd<F>(RatFunc(QPoly(Rational(1)), *d, v));
        inner = Surd<F>(RatFunc::poly(base->num(), v));
      } else {
        scale = Surd<F>(RatFunc(QPoly(Rational(1)), D, v));
        inner = Surd<F>(RatFunc::poly(base->num() * D, v));
      }
      r = adjoin_sqrt(in_tower_of(inner, context)) * scale;
    } else {
      r = adjoin_sqrt(in_tower_of(disc, context));
    }
    return {(-b - r) / Surd<F>(2), (-b + r) / Surd<F>(2)};
  }
}

}  // namespace

std::vector<RatFunc> ratfunc_roots(const Poly<RatFunc>& p0) {
  std::vector<RatFunc> out;
  if (p0.degree() < 1) return out;
  Poly<RatFunc> p = p0.monic();
  const int d = p.degree();
  Var v = var_of(p);
  if (v == Var::none) {
    auto qp = p.map<Rational>([](const RatFunc& r) { return r.constant(); });
    for (auto& r : rational_roots(qp)) out.emplace_back(r);
    return out;
  }
  QPoly D(Rational(1));
  for (auto& c : p.coeffs()) D = lcm(D, c.den());
  // u = D t turns p into a monic polynomial with coefficients in Q[x]
  std::vector<QPoly> b(d + 1);
  QPoly Dk(Rational(1));
  for (int i = d; i >= 0; --i) {
    RatFunc ci = p.coeff(i) * RatFunc::poly(Dk, v);
    if (ci.den().degree() != 0) throw InternalMismatch("denominator clearing failed");
    b[i] = ci.num().scaled(Rational(1) / ci.den().lead());
    Dk = Dk * D;
  }
  int bound = 0;
  for (int i = 0; i < d; ++i)
    if (!b[i].is_zero_poly()) bound = std::max(bound, (b[i].degree() + (d - i) - 1) / (d - i));
  const int need = bound + 1, extra = 2;
  std::vector<Rational> xs;
  std::vector<std::vector<Rational>> cands;
  for (long x = 2; static_cast<int>(xs.size()) < need + extra && x < 200; ++x) {
    std::vector<Rational> coeffs;
    for (auto& bi : b) coeffs.push_back(bi(Rational(x)));
    auto rr = rational_roots(QPoly(coeffs));
    if (rr.empty()) return out;
    xs.push_back(Rational(x));
    cands.push_back(rr);
  }
  if (static_cast<int>(xs.size()) < need + extra) return out;
  std::vector<QPoly> found;
  std::vector<Rational> pick(need);
  std::function<void(int)> rec = [&](int k) {
    if (k == need) {
      std::vector<Rational> sx(xs.begin(), xs.begin() + need);
      QPoly u = interpolate(sx, pick);
      for (int e = need; e < need + extra; ++e)
        if (std::find(cands[e].begin(), cands[e].end(), u(xs[e])) == cands[e].end()) return;
      for (auto& g : found)
        if (g == u) return;
      QPoly val;
      for (int i = d; i >= 0; --i) val = val * u + b[i];
      if (val.is_zero_poly()) found.push_back(u);
      return;
    }
    for (auto& r : cands[k]) {
      pick[k] = r;
      rec(k + 1);
    }
  };
  rec(0);
  for (auto& u : found) out.push_back(RatFunc(u, D, v));
  return out;
}

RootSet<Rational> exact_roots(const SPoly<Rational>& p, const std::vector<RadicalScalar>& candidates) {
  using S = RadicalScalar;
  RootSet<Rational> rs;
  auto factors = square_free_decomposition(p);
  for (size_t mi = 0; mi < factors.size(); ++mi) {
    SPoly<Rational> g = factors[mi];
    int mult = static_cast<int>(mi) + 1;
    auto add = [&](const S& r) {
      rs.roots.push_back(r);
      rs.multiplicity.push_back(mult);
      g = SPoly<Rational>::divmod(g, SPoly<Rational>(std::vector<S>{-r, S(1)})).first;
    };
    auto try_candidates = [&](int stop) {
      for (auto& c : candidates) {
        if (g.degree() <= stop) break;
        bool seen = false;
        for (auto& r : rs.roots) seen = seen || r == c;
        if (!seen && g.eval<S>(c).is_zero()) add(c);
      }
    };
    if (auto q = descend<Rational>(g)) {
      int real = 0, missing = 0;
      for (auto& er : exact_real_roots(*q)) {
        ++real;
        if (er.value)
          add(*er.value);
        else
          ++missing;
      }
      int complex = q->degree() - real;
      if (missing > 0) try_candidates(complex);
      rs.unresolved += (g.degree() - complex) * mult;
      rs.complex_count += complex * mult;
      continue;
    }
    try_candidates(2);
    if (g.degree() == 2) {
      int cc = 0;
      for (auto& r : quadratic_roots<Rational>(g, S(0), cc)) add(r);
      rs.complex_count += cc * mult;
    } else if (g.degree() == 1) {
      add(-g.coeff(0) / g.coeff(1));
    } else if (g.degree() > 2) {
      rs.unresolved += g.degree() * mult;
    }
  }
  return rs;
}

RootSet<RatFunc> exact_roots(const SPoly<RatFunc>& p, const SymbolicScalar& context) {
  using S = SymbolicScalar;
  RootSet<RatFunc> rs;
  auto factors = square_free_decomposition(p);
  for (size_t mi = 0; mi < factors.size(); ++mi) {
    SPoly<RatFunc> g = factors[mi];
    int mult = static_cast<int>(mi) + 1;
    auto add = [&](const S& r) {
      rs.roots.push_back(r);
      rs.multiplicity.push_back(mult);
      g = SPoly<RatFunc>::divmod(g, SPoly<RatFunc>(std::vector<S>{-r, S(1)})).first;
    };
    if (g.degree() >= 3) {
      if (auto q = descend<RatFunc>(g))
        for (auto& r : ratfunc_roots(*q)) add(S(r));
    }
    if (g.degree() == 2) {
      int cc = 0;
      for (auto& r : quadratic_roots<RatFunc>(g, context, cc)) add(r);
    } else if (g.degree() == 1) {
      add(-g.coeff(0) / g.coeff(1));
    } else if (g.degree() > 2) {
      rs.unresolved += g.degree() * mult;
    }
  }
  return rs;
}

}  // namespace hopf
