#include "hopflab/ratfunc.hpp"

namespace hopf {

const char* var_name(Var v) {
  switch (v) {
    case Var::t: return "t";
    case Var::kappa2: return "kappa2";
    case Var::kappa: return "kappa";
    default: return "x";
  }
}

namespace {

Var join(Var a, Var b) {
  if (a == Var::none) return b;
  if (b == Var::none || a == b) return a;
  throw DomainError(std::string("mixing rational functions in ") + var_name(a) + " and " +
                    var_name(b));
}

}  // namespace

RatFunc::RatFunc(QPoly num, QPoly den, Var v) : num_(std::move(num)), den_(std::move(den)), var_(v) {
  if (den_.is_zero_poly()) throw DomainError("zero denominator");
  normalize();
}

void RatFunc::normalize() {
  if (num_.is_zero_poly()) {
    den_ = QPoly(Rational(1));
    return;
  }
  if (den_.degree() > 0 && num_.degree() >= 0) {
    QPoly g = gcd(num_, den_);
    if (g.degree() > 0) {
      num_ = num_ / g;
      den_ = den_ / g;
    }
  }
  Rational l = den_.lead();
  if (l != Rational(1)) {
    Rational inv = Rational(1) / l;
    num_ = num_.scaled(inv);
    den_ = den_.scaled(inv);
  }
}

Rational RatFunc::constant() const {
  if (!is_constant()) throw DomainError("rational function is not constant");
  return num_.coeff(0);
}

Rational RatFunc::eval(const Rational& x) const {
  Rational d = den_(x);
  if (d.is_zero()) throw DomainError("pole of rational function at " + x.str());
  return num_(x) / d;
}

RatFunc RatFunc::operator-() const {
  RatFunc r = *this;
  r.num_ = -r.num_;
  return r;
}

RatFunc operator+(const RatFunc& a, const RatFunc& b) {
  Var v = join(a.var_, b.var_);
  if (a.den_.degree() == 0 && b.den_.degree() == 0) {
    RatFunc r;
    r.num_ = a.num_ + b.num_;
    r.var_ = v;
    return r;
  }
  if (a.den_ == b.den_) return RatFunc(a.num_ + b.num_, a.den_, v);
  return RatFunc(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_, v);
}

RatFunc operator-(const RatFunc& a, const RatFunc& b) { return a + (-b); }

RatFunc operator*(const RatFunc& a, const RatFunc& b) {
  Var v = join(a.var_, b.var_);
  if (a.den_.degree() == 0 && b.den_.degree() == 0) {
    RatFunc r;
    r.num_ = a.num_ * b.num_;
    r.var_ = v;
    return r;
  }
  return RatFunc(a.num_ * b.num_, a.den_ * b.den_, v);
}

RatFunc operator/(const RatFunc& a, const RatFunc& b) {
  if (b.is_zero()) throw DomainError("division by zero rational function");
  Var v = join(a.var_, b.var_);
  return RatFunc(a.num_ * b.den_, a.den_ * b.num_, v);
}

RatFunc pow(const RatFunc& r, int e) {
  if (e < 0) return pow(RatFunc(1) / r, -e);
  RatFunc out(1), b = r;
  while (e) {
    if (e & 1) out *= b;
    b *= b;
    e >>= 1;
  }
  return out;
}

std::string RatFunc::str() const {
  std::string v = var_name(var_);
  if (den_.degree() == 0) return num_.str(v);
  std::string n = num_.str(v);
  if (num_.coeffs().size() > 1 || n.find('/') != std::string::npos) n = "(" + n + ")";
  return n + "/(" + den_.str(v) + ")";
}

std::optional<Poly<Rational>> exact_sqrt_poly(const Poly<Rational>& p) {
  using QPoly = Poly<Rational>;
  if (p.is_zero_poly()) return QPoly();
  int d2 = p.degree();
  if (d2 % 2) return std::nullopt;
  auto lc = exact_sqrt(p.lead());
  if (!lc) return std::nullopt;
  int d = d2 / 2;
  // Match coefficients from the top: q_d = sqrt(lead), then solve linear terms downward.
  std::vector<Rational> q(d + 1, Rational(0));
  q[d] = *lc;
  for (int k = d - 1; k >= 0; --k) {
    // coefficient of x^{d+k} in q^2 is 2 q_d q_k + sum_{i+j=d+k, i,j>k} q_i q_j
    Rational s(0);
    for (int i = k + 1; i <= d; ++i) {
      int j = d + k - i;
      if (j > k && j <= d) s += q[i] * q[j];
    }
    q[k] = (p.coeff(d + k) - s) / (Rational(2) * q[d]);
  }
  QPoly qq(q);
  if (!(qq * qq == p)) return std::nullopt;
  return qq;
}

std::optional<RatFunc> exact_sqrt(const RatFunc& r) {
  if (r.is_zero()) return RatFunc(0);
  auto n = exact_sqrt_poly(r.num());
  if (!n) return std::nullopt;
  auto d = exact_sqrt_poly(r.den());
  if (!d) return std::nullopt;
  return RatFunc(*n, *d, r.var());
}

}  // namespace hopf
