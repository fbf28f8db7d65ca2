#pragma once

#include <functional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "hopflab/errors.hpp"
#include "hopflab/rational.hpp"

namespace hopf {

// Dense univariate polynomial over an exact field F, coefficients low to high.
template <class F>
class Poly {
 public:
  Poly() = default;
  Poly(const F& c) {  // NOLINT
    if (!is_zero(c)) c_.push_back(c);
  }
  explicit Poly(std::vector<F> coeffs) : c_(std::move(coeffs)) { trim(); }

  static Poly x() { return Poly(std::vector<F>{F(0), F(1)}); }
  static Poly monomial(const F& c, int d) {
    std::vector<F> v(d + 1, F(0));
    v[d] = c;
    return Poly(std::move(v));
  }

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero_poly() const { return c_.empty(); }
  const std::vector<F>& coeffs() const { return c_; }
  F coeff(int i) const { return (i >= 0 && i < static_cast<int>(c_.size())) ? c_[i] : F(0); }
  F lead() const { return c_.empty() ? F(0) : c_.back(); }

  template <class T>
  T eval(const T& x) const {
    T acc(0);
    for (int i = degree(); i >= 0; --i) acc = acc * x + T(c_[i]);
    return acc;
  }
  F operator()(const F& x) const { return eval<F>(x); }

  Poly operator-() const {
    Poly r = *this;
    for (auto& c : r.c_) c = -c;
    return r;
  }
  Poly& operator+=(const Poly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), F(0));
    for (size_t i = 0; i < o.c_.size(); ++i) c_[i] = c_[i] + o.c_[i];
    trim();
    return *this;
  }
  Poly& operator-=(const Poly& o) { return *this += -o; }
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b) {
    if (a.c_.empty() || b.c_.empty()) return Poly();
    std::vector<F> r(a.c_.size() + b.c_.size() - 1, F(0));
    for (size_t i = 0; i < a.c_.size(); ++i)
      for (size_t j = 0; j < b.c_.size(); ++j) r[i + j] = r[i + j] + a.c_[i] * b.c_[j];
    return Poly(std::move(r));
  }
  Poly& operator*=(const Poly& o) { return *this = *this * o; }
  friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }

  Poly scaled(const F& s) const {
    Poly r = *this;
    for (auto& c : r.c_) c = c * s;
    r.trim();
    return r;
  }

  Poly derivative() const {
    if (c_.size() <= 1) return Poly();
    std::vector<F> r(c_.size() - 1, F(0));
    for (size_t i = 1; i < c_.size(); ++i) r[i - 1] = c_[i] * F(static_cast<long>(i));
    return Poly(std::move(r));
  }

  Poly monic() const {
    if (c_.empty()) return *this;
    return scaled(F(1) / lead());
  }

  // Quotient and remainder, b nonzero.
  static std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b) {
    if (b.c_.empty()) throw DomainError("polynomial division by zero");
    Poly r = a;
    int db = b.degree();
    if (r.degree() < db) return {Poly(), r};
    std::vector<F> q(r.degree() - db + 1, F(0));
    F inv = F(1) / b.lead();
    while (!r.c_.empty() && r.degree() >= db) {
      int d = r.degree() - db;
      F f = r.lead() * inv;
      q[d] = f;
      for (int i = 0; i <= db; ++i) r.c_[i + d] = r.c_[i + d] - f * b.c_[i];
      r.c_.pop_back();
      r.trim();
    }
    return {Poly(std::move(q)), r};
  }
  friend Poly operator/(const Poly& a, const Poly& b) { return divmod(a, b).first; }
  friend Poly operator%(const Poly& a, const Poly& b) { return divmod(a, b).second; }

  Poly compose(const Poly& inner) const {
    Poly acc;
    for (int i = degree(); i >= 0; --i) acc = acc * inner + Poly(c_[i]);
    return acc;
  }

  template <class G, class Fn>
  Poly<G> map(Fn fn) const {
    std::vector<G> v;
    v.reserve(c_.size());
    for (auto& c : c_) v.push_back(fn(c));
    return Poly<G>(std::move(v));
  }

  std::string str(const std::string& var = "x") const {
    if (c_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = degree(); i >= 0; --i) {
      if (is_zero(c_[i])) continue;
      std::string cs = to_string(c_[i]);
      if (!first) {
        if (cs.size() > 1 && cs[0] == '-' && !needs_parens(cs.substr(1))) {
          os << " - ";
          cs = cs.substr(1);
        } else {
          os << " + ";
        }
      }
      first = false;
      bool unit = (cs == "1");
      if (i == 0 || !unit) os << (needs_parens(cs) && i > 0 ? "(" + cs + ")" : cs);
      if (i > 0) {
        if (!unit) os << "*";
        os << var;
        if (i > 1) os << "^" << i;
      }
    }
    return os.str();
  }

 private:
  static bool needs_parens(const std::string& s) {
    for (size_t i = 1; i < s.size(); ++i)
      if (s[i] == '+' || s[i] == '-' || s[i] == '/') return true;
    return false;
  }
  void trim() {
    while (!c_.empty() && is_zero(c_.back())) c_.pop_back();
  }
  std::vector<F> c_;
};

template <class F>
Poly<F> gcd(Poly<F> a, Poly<F> b) {
  while (!b.is_zero_poly()) {
    Poly<F> r = a % b;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

// Yun's algorithm: returns square-free, pairwise coprime monic factors; entry i has multiplicity i+1.
template <class F>
std::vector<Poly<F>> square_free_decomposition(const Poly<F>& p) {
  std::vector<Poly<F>> out;
  if (p.degree() < 1) return out;
  Poly<F> a = p.monic();
  Poly<F> d = a.derivative();
  Poly<F> g = gcd(a, d);
  Poly<F> b = a / g;
  Poly<F> c = d / g;
  Poly<F> e = c - b.derivative();
  while (b.degree() > 0) {
    Poly<F> h = gcd(b, e);
    out.push_back(h);
    b = b / h;
    c = e / h;
    e = c - b.derivative();
  }
  while (!out.empty() && out.back().degree() == 0) out.pop_back();
  return out;
}

template <class F>
Poly<F> square_free_part(const Poly<F>& p) {
  if (p.degree() < 1) return Poly<F>(F(1));
  return (p / gcd(p, p.derivative())).monic();
}

inline std::string to_string(const Rational& r) { return r.str(); }

}  // namespace hopf
