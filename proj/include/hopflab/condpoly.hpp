#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>

#include "hopflab/errors.hpp"

namespace hopf {

// Polynomial in the unknown constants p, q, f, f2 with scalar coefficients.
enum class Unknown { p = 0, q = 1, f = 2, f2 = 3 };

template <class S>
class CondPoly {
 public:
  using Exp = std::array<int, 4>;

  CondPoly() = default;
  CondPoly(const S& s) { add_term({0, 0, 0, 0}, s); }
  CondPoly(int v) : CondPoly(S(v)) {}

  static CondPoly var(Unknown u) {
    CondPoly r;
    Exp e{0, 0, 0, 0};
    e[static_cast<int>(u)] = 1;
    r.add_term(e, S(1));
    return r;
  }

  const std::map<Exp, S>& terms() const { return t_; }
  bool is_zero() const { return t_.empty(); }
  int degree_in(Unknown u) const {
    int d = 0;
    for (auto& [e, c] : t_) d = std::max(d, e[static_cast<int>(u)]);
    return d;
  }
  S coeff(const Exp& e) const {
    auto it = t_.find(e);
    return it == t_.end() ? S(0) : it->second;
  }
  std::optional<S> constant_value() const {
    for (auto& [e, c] : t_)
      if (e != Exp{0, 0, 0, 0}) return std::nullopt;
    return coeff({0, 0, 0, 0});
  }

  friend CondPoly operator+(CondPoly a, const CondPoly& b) {
    for (auto& [e, c] : b.t_) a.add_term(e, c);
    return a;
  }
  friend CondPoly operator-(const CondPoly& a) {
    CondPoly r;
    for (auto& [e, c] : a.t_) r.t_.emplace(e, -c);
    return r;
  }
  friend CondPoly operator-(const CondPoly& a, const CondPoly& b) { return a + (-b); }
  friend CondPoly operator*(const CondPoly& a, const CondPoly& b) {
    CondPoly r;
    for (auto& [ea, ca] : a.t_)
      for (auto& [eb, cb] : b.t_) {
        Exp e;
        for (int i = 0; i < 4; ++i) e[i] = ea[i] + eb[i];
        r.add_term(e, ca * cb);
      }
    return r;
  }
  friend CondPoly operator/(const CondPoly& a, const S& s) {
    CondPoly r;
    for (auto& [e, c] : a.t_) r.add_term(e, c / s);
    return r;
  }
  friend bool operator==(const CondPoly& a, const CondPoly& b) { return (a - b).is_zero(); }

  // Substitute a scalar for one unknown.
  CondPoly substitute(Unknown u, const S& value) const {
    CondPoly r;
    int k = static_cast<int>(u);
    for (auto& [e, c] : t_) {
      S w = c;
      for (int i = 0; i < e[k]; ++i) w = w * value;
      Exp e2 = e;
      e2[k] = 0;
      r.add_term(e2, w);
    }
    return r;
  }

  // Scalar ratio a = s * b when one exists.
  friend std::optional<S> proportional(const CondPoly& a, const CondPoly& b) {
    if (b.is_zero()) return std::nullopt;
    auto& [e0, c0] = *b.t_.begin();
    S ratio = a.coeff(e0) / c0;
    if (a == b * CondPoly(ratio)) return ratio;
    return std::nullopt;
  }

  std::string str() const {
    static const char* names[4] = {"p", "q", "f", "f2"};
    if (t_.empty()) return "0";
    std::string out;
    for (auto& [e, c] : t_) {
      if (!out.empty()) out += " + ";
      out += "(" + c.str() + ")";
      for (int i = 0; i < 4; ++i)
        if (e[i] > 0) out += std::string("*") + names[i] + (e[i] > 1 ? "^" + std::to_string(e[i]) : "");
    }
    return out;
  }

 private:
  void add_term(const Exp& e, const S& c) {
    if (c.is_zero()) return;
    auto it = t_.find(e);
    if (it == t_.end()) {
      t_.emplace(e, c);
      return;
    }
    it->second = it->second + c;
    if (it->second.is_zero()) t_.erase(it);
  }

  std::map<Exp, S> t_;
};

// The two-type conditions written as residuals (right side minus left side). T is
// either a scalar (all values known) or a CondPoly (p, q, f, f2 left as unknowns).
template <class T>
T e1_residual(const T& p, const T& q, const T& f, const T& f2, const T& kappa, int c, int n) {
  return q + kappa * f * (f2 + T(3 * c * (n + 3))) - T(4 * c) * f2 + T(4 * n * (n + 3)) -
         (T(2 * c * (n + 1)) + kappa * f) * p;
}

template <class T>
T e2_residual(const T& p, const T& q, const T& f, const T& f2, const T& kappa, const T& mu, const T& mus, int c,
              int n) {
  return q + T(2 * c) * f * f + T(4 * c) * f * mus + T(4 * c) * mus * mus + T(4 * c) * mu * mu +
         (f * (f2 + T(3 * c * (n + 3))) - T(4 * c) * kappa) * mu + T(4 * (n + 1) * (n + 3)) -
         (T(2 * c * (n + 2)) + mu * f) * p;
}

template <class T>
T e3_residual(const T& p, const T& f, const T& f2, const T& kappa, const T& mu, const T& mus, int c, int n) {
  return T(-4 * c) * kappa + T(4) * mu * (f * mu + mu * mu + f * mus + mus * mus) +
         T(2) * mu * (T(2) * f2 + f * f + T(2 * c * (n + 3)) - T(2) * f * kappa - T(2) * kappa * kappa) +
         f * (f2 + T(c * (3 * n + 5))) -
         (f + T(2) * mu) * p;
}

// q eliminated between the first two conditions.
template <class T>
T q_free_residual(const T& p, const T& f, const T& f2, const T& kappa, const T& mu, const T& mus, int c, int n) {
  return T(4 * c) * (mu * mu + mus * mus) + T(4 * c) * f * mus - T(4 * c) * kappa * mu + T(4 * (n + 3)) +
         T(4 * c) * f2 + T(2 * c) * f * f + f * (mu - kappa) * (f2 + T(3 * c * (n + 3))) -
         (T(2 * c) + f * (mu - kappa)) * p;
}

}  // namespace hopf
