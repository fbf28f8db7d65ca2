#pragma once

#include <optional>
#include <string>

#include "hopflab/poly.hpp"
#include "hopflab/rational.hpp"

namespace hopf {

enum class Var { none, t, kappa2, kappa };

const char* var_name(Var v);

// Rational function over Q in one named variable, kept as num/den with den monic and gcd 1.
class RatFunc {
 public:
  using QPoly = Poly<Rational>;

  RatFunc() = default;
  RatFunc(int c) : num_(Rational(c)) {}  // NOLINT
  RatFunc(long c) : num_(Rational(c)) {}  // NOLINT
  RatFunc(const Rational& c) : num_(c) {}  // NOLINT
  RatFunc(QPoly num, QPoly den, Var v);
  static RatFunc variable(Var v) { return RatFunc(QPoly::x(), QPoly(Rational(1)), v); }
  static RatFunc poly(QPoly p, Var v) { return RatFunc(std::move(p), QPoly(Rational(1)), v); }

  const QPoly& num() const { return num_; }
  const QPoly& den() const { return den_; }
  Var var() const { return var_; }
  bool is_zero() const { return num_.is_zero_poly(); }
  bool is_constant() const { return num_.degree() <= 0 && den_.degree() == 0; }
  Rational constant() const;  // throws unless is_constant()

  // Value at a rational point; DomainError on a pole.
  Rational eval(const Rational& x) const;
  bool has_pole_at(const Rational& x) const { return den_(x).is_zero(); }

  RatFunc operator-() const;
  friend RatFunc operator+(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator-(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator*(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator/(const RatFunc& a, const RatFunc& b);
  RatFunc& operator+=(const RatFunc& o) { return *this = *this + o; }
  RatFunc& operator-=(const RatFunc& o) { return *this = *this - o; }
  RatFunc& operator*=(const RatFunc& o) { return *this = *this * o; }
  RatFunc& operator/=(const RatFunc& o) { return *this = *this / o; }
  friend bool operator==(const RatFunc& a, const RatFunc& b) {
    return a.num_ == b.num_ && a.den_ == b.den_ && (a.var_ == b.var_ || a.is_constant());
  }

  std::string str() const;

 private:
  void normalize();
  QPoly num_;
  QPoly den_{Rational(1)};
  Var var_ = Var::none;
};

inline bool is_zero(const RatFunc& r) { return r.is_zero(); }
inline std::string to_string(const RatFunc& r) { return r.str(); }
inline std::ostream& operator<<(std::ostream& os, const RatFunc& r) { return os << r.str(); }
std::optional<RatFunc> exact_sqrt(const RatFunc& r);
std::optional<Poly<Rational>> exact_sqrt_poly(const Poly<Rational>& p);
RatFunc pow(const RatFunc& r, int e);

}  // namespace hopf
