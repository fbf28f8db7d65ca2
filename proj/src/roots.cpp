#include "hopflab/roots.hpp"

#include <algorithm>

namespace hopf {

namespace {

std::vector<QPoly> sturm_chain(const QPoly& p) {
  std::vector<QPoly> s{p, p.derivative()};
  while (s.back().degree() > 0) {
    QPoly r = -(s[s.size() - 2] % s.back());
    if (r.is_zero_poly()) break;
    s.push_back(r);
  }
  return s;
}

int variations(const std::vector<int>& signs) {
  int v = 0, last = 0;
  for (int s : signs) {
    if (s == 0) continue;
    if (last != 0 && s != last) ++v;
    last = s;
  }
  return v;
}

int var_at(const std::vector<QPoly>& s, const Rational& x) {
  std::vector<int> sg;
  for (auto& q : s) sg.push_back(q(x).sign());
  return variations(sg);
}

Rational cauchy_bound(const QPoly& p) {
  Rational m(0);
  for (int i = 0; i < p.degree(); ++i) m = std::max(m, abs(p.coeff(i) / p.lead()));
  return m + 1;
}

// Roots of a square-free polynomial inside the open interval (a, b), neither endpoint a root.
void isolate_sf(const QPoly& q, const std::vector<QPoly>& s, Rational a, Rational b, int mult,
                std::vector<RealRoot>& out) {
  std::vector<std::pair<Rational, Rational>> stack{{a, b}};
  while (!stack.empty()) {
    auto [lo, hi] = stack.back();
    stack.pop_back();
    int n = var_at(s, lo) - var_at(s, hi);
    if (n == 0) continue;
    if (n == 1) {
      out.push_back({lo, hi, mult, q});
      continue;
    }
    Rational mid = (lo + hi) / Rational(2);
    if (q(mid).is_zero()) {
      out.push_back({mid, mid, mult, q});
      Rational d = (hi - lo) / Rational(4);
      while (true) {
        Rational l = mid - d, h = mid + d;
        if (!q(l).is_zero() && !q(h).is_zero() && var_at(s, l) - var_at(s, h) == 1) {
          stack.push_back({lo, l});
          stack.push_back({h, hi});
          break;
        }
        d /= Rational(2);
      }
      continue;
    }
    stack.push_back({lo, mid});
    stack.push_back({mid, hi});
  }
}

}  // namespace

QPoly primitive_part(const QPoly& p) {
  if (p.is_zero_poly()) return p;
  mpz_class l = 1;
  for (auto& c : p.coeffs()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.den().get_mpz_t());
  QPoly q = p.scaled(Rational(l));
  mpz_class g = 0;
  for (auto& c : q.coeffs()) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.num().get_mpz_t());
  Rational f(mpz_class(1), g);
  if (q.lead().sign() < 0) f = -f;
  return q.scaled(f);
}

std::vector<RealRoot> isolate_real_roots(const QPoly& p, const Domain& dom) {
  std::vector<RealRoot> out;
  if (p.degree() < 1 || dom.empty()) return out;
  auto factors = square_free_decomposition(p);
  for (size_t i = 0; i < factors.size(); ++i) {
    QPoly q = factors[i];
    if (q.degree() < 1) continue;
    // deflate roots sitting on finite domain endpoints
    for (auto& e : {dom.lo, dom.hi})
      if (e && q(*e).is_zero()) q = q / QPoly(std::vector<Rational>{-*e, Rational(1)});
    if (q.degree() < 1) continue;
    auto s = sturm_chain(q);
    Rational B = cauchy_bound(q);
    Rational a = dom.lo ? std::max(*dom.lo, -B - 1) : -B - 1;
    Rational b = dom.hi ? std::min(*dom.hi, B + 1) : B + 1;
    if (a >= b) continue;
    isolate_sf(q, s, a, b, static_cast<int>(i) + 1, out);
  }
  // Separate intervals coming from different square-free factors.
  auto by_lo = [](const RealRoot& x, const RealRoot& y) { return x.lo < y.lo; };
  while (true) {
    std::sort(out.begin(), out.end(), by_lo);
    bool clean = true;
    for (size_t i = 0; i + 1 < out.size(); ++i) {
      if (out[i].hi >= out[i + 1].lo) {
        clean = false;
        for (auto* r : {&out[i], &out[i + 1]})
          if (!r->is_point()) refine_root(*r, (r->hi - r->lo) / Rational(2));
      }
    }
    if (clean) break;
  }
  return out;
}

int count_real_roots(const QPoly& p, const Domain& dom) {
  return static_cast<int>(isolate_real_roots(p, dom).size());
}

void refine_root(RealRoot& r, const Rational& width) {
  const QPoly& q = r.factor;
  while (!r.is_point() && r.hi - r.lo > width) {
    Rational mid = (r.lo + r.hi) / Rational(2);
    Rational vm = q(mid);
    if (vm.is_zero()) {
      r.lo = r.hi = mid;
      return;
    }
    if (q(r.lo).sign() * vm.sign() < 0)
      r.hi = mid;
    else
      r.lo = mid;
  }
}

std::vector<Rational> rational_roots(const QPoly& p) {
  std::vector<Rational> out;
  if (p.degree() < 1) return out;
  for (auto& f : square_free_decomposition(p)) {
    QPoly z = primitive_part(f);
    Rational an = abs(z.lead());
    Rational w = Rational(1) / (Rational(2) * an * an);
    for (auto r : isolate_real_roots(z)) {
      if (r.is_point()) {
        out.push_back(r.lo);
        continue;
      }
      refine_root(r, w);
      if (r.is_point()) {
        out.push_back(r.lo);
        continue;
      }
      Rational c = simplest_between(r.lo, r.hi);
      if (z(c).is_zero()) out.push_back(c);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<ExactRoot> exact_real_roots(const QPoly& p, const Domain& dom) {
  std::vector<ExactRoot> out;
  for (auto& r : isolate_real_roots(p, dom)) {
    ExactRoot e{r, std::nullopt};
    if (r.is_point()) {
      e.value = RadicalScalar(r.lo);
    } else {
      QPoly f = r.factor;
      for (auto& q : rational_roots(f)) {
        if (q > r.lo && q < r.hi) e.value = RadicalScalar(q);
        f = f / QPoly(std::vector<Rational>{-q, Rational(1)});
      }
      if (!e.value && f.degree() == 2) {
        Rational a = f.coeff(2), b = f.coeff(1), c = f.coeff(0);
        RadicalScalar sd = adjoin_sqrt(RadicalScalar(b * b - Rational(4) * a * c));
        for (int sg : {-1, 1}) {
          RadicalScalar v = (RadicalScalar(-b) + RadicalScalar(sg) * sd) / RadicalScalar(Rational(2) * a);
          if (v > RadicalScalar(r.lo) && v < RadicalScalar(r.hi)) e.value = v;
        }
      }
    }
    out.push_back(std::move(e));
  }
  return out;
}

}  // namespace hopf
