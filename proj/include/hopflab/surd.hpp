#pragma once

#include <memory>
#include <mutex>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "hopflab/errors.hpp"
#include "hopflab/ratfunc.hpp"
#include "hopflab/rational.hpp"

namespace hopf {

inline std::optional<Rational> as_rational(const Rational& r) { return r; }
inline std::optional<Rational> as_rational(const RatFunc& r) {
  if (r.is_constant()) return r.constant();
  return std::nullopt;
}

template <class F>
struct TowerNode;

template <class F>
using NodePtr = std::shared_ptr<const TowerNode<F>>;

// One square-root generator on top of its parent tower. The generator denotes the
// positive root when the base is Q; radicands are never squares in the parent field.
template <class F>
struct TowerNode {
  NodePtr<F> parent;
  int depth = 0;
  std::vector<F> rad;                   // radicand coordinates at depth - 1
  std::optional<Rational> rational_rad;  // set for prime generators
  std::string label;
  mutable std::mutex mu;
  mutable std::vector<std::pair<std::vector<F>, std::weak_ptr<const TowerNode<F>>>> children;
};

// Element of Base(sqrt a_1)(sqrt a_2)...(sqrt a_d): coordinates over the 2^d products of generators,
// bit j of the index selecting generator j+1.
template <class F>
class Surd {
 public:
  Surd() : x_{F(0)} {}
  Surd(int v) : x_{F(Rational(v))} {}              // NOLINT
  Surd(long v) : x_{F(Rational(v))} {}             // NOLINT
  Surd(const Rational& v) : x_{F(v)} {}            // NOLINT
  template <class G = F, class = std::enable_if_t<!std::is_same_v<G, Rational>>>
  Surd(const F& v) : x_{v} {}                      // NOLINT
  Surd(NodePtr<F> node, std::vector<F> coords) : node_(std::move(node)), x_(std::move(coords)) {
    if (x_.size() != (size_t{1} << depth())) throw InternalMismatch("surd coordinate size");
  }

  static Surd generator(const NodePtr<F>& node) {
    std::vector<F> c(size_t{1} << node->depth, F(0));
    c[size_t{1} << (node->depth - 1)] = F(1);
    return Surd(node, std::move(c));
  }

  int depth() const { return node_ ? node_->depth : 0; }
  const NodePtr<F>& node() const { return node_; }
  const std::vector<F>& coords() const { return x_; }

  bool is_zero() const {
    for (auto& c : x_)
      if (!hopf::is_zero(c)) return false;
    return true;
  }
  // Value when it lies in the base field.
  std::optional<F> base_value() const {
    for (size_t i = 1; i < x_.size(); ++i)
      if (!hopf::is_zero(x_[i])) return std::nullopt;
    return x_[0];
  }
  std::optional<Rational> rational_value() const {
    auto b = base_value();
    if (!b) return std::nullopt;
    return as_rational(*b);
  }
  bool is_rational() const { return rational_value().has_value(); }

  Surd lifted(const NodePtr<F>& target) const {
    int td = target ? target->depth : 0;
    if (td == depth()) return *this;
    std::vector<F> c(size_t{1} << td, F(0));
    for (size_t i = 0; i < x_.size(); ++i) c[i] = x_[i];
    return Surd(target, std::move(c));
  }
  // Drop to the shallowest tower prefix that still contains the value.
  Surd compacted() const {
    if (!node_) return *this;
    size_t h = x_.size() / 2;
    for (size_t i = h; i < x_.size(); ++i)
      if (!hopf::is_zero(x_[i])) return *this;
    Surd low(node_->parent, std::vector<F>(x_.begin(), x_.begin() + h));
    return low.compacted();
  }

  Surd operator-() const {
    Surd r = *this;
    for (auto& c : r.x_) c = -c;
    return r;
  }
  friend Surd operator+(const Surd& a, const Surd& b) {
    auto [x, y] = unify(a, b);
    for (size_t i = 0; i < x.x_.size(); ++i) x.x_[i] = x.x_[i] + y.x_[i];
    return x;
  }
  friend Surd operator-(const Surd& a, const Surd& b) { return a + (-b); }
  friend Surd operator*(const Surd& a, const Surd& b) {
    if (a.depth() == 0 && b.depth() == 0) return Surd(a.x_[0] * b.x_[0]);
    auto [x, y] = unify(a, b);
    auto chain = x.chain();
    return Surd(x.node_, mul_rec(x.x_.data(), y.x_.data(), x.depth(), chain));
  }
  friend Surd operator/(const Surd& a, const Surd& b) { return a * b.inverse(); }
  Surd& operator+=(const Surd& o) { return *this = *this + o; }
  Surd& operator-=(const Surd& o) { return *this = *this - o; }
  Surd& operator*=(const Surd& o) { return *this = *this * o; }
  Surd& operator/=(const Surd& o) { return *this = *this / o; }
  friend bool operator==(const Surd& a, const Surd& b) { return (a - b).is_zero(); }
  friend bool operator!=(const Surd& a, const Surd& b) { return !(a == b); }

  Surd inverse() const {
    if (is_zero()) throw DomainError("division by zero");
    auto chain = this->chain();
    return Surd(node_, inv_rec(x_, depth(), chain));
  }

  // Square root inside the current tower, if it exists (sign unnormalized).
  std::optional<Surd> try_sqrt() const {
    auto chain = this->chain();
    auto r = sqrt_rec(x_, depth(), chain);
    if (!r) return std::nullopt;
    return Surd(node_, std::move(*r));
  }

  std::string str() const;

  // Generators from depth 1 to depth d.
  std::vector<const TowerNode<F>*> chain() const {
    std::vector<const TowerNode<F>*> c(depth());
    for (const TowerNode<F>* n = node_.get(); n; n = n->parent.get()) c[n->depth - 1] = n;
    return c;
  }

  static std::pair<Surd, Surd> unify(const Surd& a, const Surd& b);

 private:
  using Vec = std::vector<F>;

  static Vec add(const Vec& a, const Vec& b) {
    Vec r(a.size(), F(0));
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
  }
  static Vec sub(const Vec& a, const Vec& b) {
    Vec r(a.size(), F(0));
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
  }
  static bool all_zero(const F* a, size_t n) {
    for (size_t i = 0; i < n; ++i)
      if (!hopf::is_zero(a[i])) return false;
    return true;
  }

 public:
  static Vec mul_rec(const F* a, const F* b, int d, const std::vector<const TowerNode<F>*>& ch) {
    if (d == 0) return Vec{a[0] * b[0]};
    size_t h = size_t{1} << (d - 1);
    bool a1z = all_zero(a + h, h), b1z = all_zero(b + h, h);
    Vec out(2 * h, F(0));
    if (a1z && b1z) {
      Vec p = mul_rec(a, b, d - 1, ch);
      std::copy(p.begin(), p.end(), out.begin());
      return out;
    }
    if (a1z || b1z) {
      const F* lo = a1z ? a : b;  // the one without top part
      const F* full = a1z ? b : a;
      Vec p0 = mul_rec(lo, full, d - 1, ch), p1 = mul_rec(lo, full + h, d - 1, ch);
      std::copy(p0.begin(), p0.end(), out.begin());
      std::copy(p1.begin(), p1.end(), out.begin() + h);
      return out;
    }
    Vec x0y0 = mul_rec(a, b, d - 1, ch);
    Vec x1y1 = mul_rec(a + h, b + h, d - 1, ch);
    Vec sa(a, a + h), sb(b, b + h);
    for (size_t i = 0; i < h; ++i) {
      sa[i] = sa[i] + a[h + i];
      sb[i] = sb[i] + b[h + i];
    }
    Vec mid = sub(sub(mul_rec(sa.data(), sb.data(), d - 1, ch), x0y0), x1y1);
    const Vec& R = ch[d - 1]->rad;
    Vec low = add(x0y0, mul_rec(x1y1.data(), R.data(), d - 1, ch));
    std::copy(low.begin(), low.end(), out.begin());
    std::copy(mid.begin(), mid.end(), out.begin() + h);
    return out;
  }

  static Vec inv_rec(const Vec& x, int d, const std::vector<const TowerNode<F>*>& ch) {
    if (d == 0) return Vec{F(1) / x[0]};
    size_t h = size_t{1} << (d - 1);
    Vec x0(x.begin(), x.begin() + h), x1(x.begin() + h, x.end());
    Vec out(2 * h, F(0));
    if (all_zero(x1.data(), h)) {
      Vec i0 = inv_rec(x0, d - 1, ch);
      std::copy(i0.begin(), i0.end(), out.begin());
      return out;
    }
    const Vec& R = ch[d - 1]->rad;
    Vec n = sub(mul_rec(x0.data(), x0.data(), d - 1, ch),
                mul_rec(mul_rec(x1.data(), x1.data(), d - 1, ch).data(), R.data(), d - 1, ch));
    Vec ni = inv_rec(n, d - 1, ch);
    Vec a = mul_rec(x0.data(), ni.data(), d - 1, ch);
    Vec b = mul_rec(x1.data(), ni.data(), d - 1, ch);
    for (size_t i = 0; i < h; ++i) {
      out[i] = a[i];
      out[h + i] = -b[i];
    }
    return out;
  }

  static std::optional<Vec> sqrt_rec(const Vec& x, int d, const std::vector<const TowerNode<F>*>& ch) {
    if (d == 0) {
      auto s = exact_sqrt(x[0]);
      if (!s) return std::nullopt;
      return Vec{*s};
    }
    size_t h = size_t{1} << (d - 1);
    Vec x0(x.begin(), x.begin() + h), x1(x.begin() + h, x.end());
    const Vec& R = ch[d - 1]->rad;
    Vec out(2 * h, F(0));
    if (all_zero(x1.data(), h)) {
      if (auto y = sqrt_rec(x0, d - 1, ch)) {
        std::copy(y->begin(), y->end(), out.begin());
        return out;
      }
      Vec q = mul_rec(x0.data(), inv_rec(R, d - 1, ch).data(), d - 1, ch);
      if (auto z = sqrt_rec(q, d - 1, ch)) {
        std::copy(z->begin(), z->end(), out.begin() + h);
        return out;
      }
      return std::nullopt;
    }
    Vec n = sub(mul_rec(x0.data(), x0.data(), d - 1, ch),
                mul_rec(mul_rec(x1.data(), x1.data(), d - 1, ch).data(), R.data(), d - 1, ch));
    auto s = sqrt_rec(n, d - 1, ch);
    if (!s) return std::nullopt;
    for (int sg = 0; sg < 2; ++sg) {
      Vec u2(h, F(0));
      for (size_t i = 0; i < h; ++i) u2[i] = (sg == 0 ? x0[i] + (*s)[i] : x0[i] - (*s)[i]) / F(Rational(2));
      if (all_zero(u2.data(), h)) continue;
      auto u = sqrt_rec(u2, d - 1, ch);
      if (!u) continue;
      Vec two_u = *u;
      for (auto& c : two_u) c = c * F(Rational(2));
      Vec v = mul_rec(x1.data(), inv_rec(two_u, d - 1, ch).data(), d - 1, ch);
      std::copy(u->begin(), u->end(), out.begin());
      std::copy(v.begin(), v.end(), out.begin() + h);
      return out;
    }
    return std::nullopt;
  }

 private:
  NodePtr<F> node_;
  std::vector<F> x_;
};

template <class F>
inline bool is_zero(const Surd<F>& s) {
  return s.is_zero();
}
template <class F>
inline std::string to_string(const Surd<F>& s) {
  return s.str();
}

template <class F>
bool is_ancestor_raw(const TowerNode<F>* a, const TowerNode<F>* b) {
  if (!a) return true;
  while (b && b->depth > a->depth) b = b->parent.get();
  return b == a;
}

template <class F>
bool is_ancestor(const NodePtr<F>& a, const NodePtr<F>& b) {
  if (!a) return true;
  const TowerNode<F>* n = b.get();
  while (n && n->depth > a->depth) n = n->parent.get();
  return n == a.get();
}

// Child of `parent` with the given radicand, reusing an existing node when present.
template <class F>
NodePtr<F> child_node(const NodePtr<F>& parent, const std::vector<F>& rad, std::optional<Rational> rr,
                      const std::string& label) {
  static std::mutex root_mu;
  static std::vector<std::pair<std::vector<F>, std::weak_ptr<const TowerNode<F>>>> roots;
  std::mutex& mu = parent ? parent->mu : root_mu;
  auto& kids = parent ? parent->children : roots;
  std::lock_guard<std::mutex> lock(mu);
  for (auto& [r, w] : kids)
    if (r == rad)
      if (auto p = w.lock()) return p;
  auto node = std::make_shared<TowerNode<F>>();
  node->parent = parent;
  node->depth = parent ? parent->depth + 1 : 1;
  node->rad = rad;
  node->rational_rad = rr;
  node->label = label;
  kids.push_back({rad, node});
  return node;
}

struct Interval;
// Sign of a real tower element over Q (exact, by interval refinement).
int sign(const Surd<Rational>& x);
Interval enclose(const Surd<Rational>& x, int bits);
double to_double(const Surd<Rational>& x);
Surd<Rational> abs(const Surd<Rational>& x);
bool operator<(const Surd<Rational>& a, const Surd<Rational>& b);
bool operator>(const Surd<Rational>& a, const Surd<Rational>& b);
bool operator<=(const Surd<Rational>& a, const Surd<Rational>& b);
bool operator>=(const Surd<Rational>& a, const Surd<Rational>& b);

namespace detail {

template <class F>
Surd<F> positive_root(const Surd<F>& r) {
  if constexpr (std::is_same_v<F, Rational>) {
    return sign(r) < 0 ? -r : r;
  } else {
    return r;
  }
}

}  // namespace detail

// sqrt(x), adjoining generators as needed. Rational radicands are split into prime generators.
template <class F>
Surd<F> adjoin_sqrt(const Surd<F>& x) {
  if (x.is_zero()) return Surd<F>(0);
  if (auto q = x.rational_value()) {
    if (q->sign() < 0) throw DomainError("square root of negative number " + q->str());
    auto split = square_free_split(*q);
    Surd<F> acc = Surd<F>(split.s).lifted(x.node());
    for (auto& p : odd_prime_factors(split.d)) {
      Surd<F> pr = Surd<F>(Rational(p)).lifted(acc.node());
      Surd<F> root;
      if (auto s = pr.try_sqrt()) {
        root = detail::positive_root(*s);
      } else {
        auto node = child_node<F>(acc.node(), pr.coords(), Rational(p), "sqrt(" + p.get_str() + ")");
        root = Surd<F>::generator(node);
      }
      acc = acc * root;
    }
    return acc;
  }
  if (auto s = x.try_sqrt()) return detail::positive_root(*s);
  if constexpr (std::is_same_v<F, Rational>) {
    if (sign(x) < 0) throw DomainError("square root of negative number " + x.str());
  }
  std::string lbl = x.str();
  auto node = child_node<F>(x.node(), x.coords(), std::nullopt, "sqrt(" + lbl + ")");
  return Surd<F>::generator(node);
}

// x expressed in ref's tower when x's tower is a prefix of it; otherwise x unchanged.
template <class F>
Surd<F> in_tower_of(const Surd<F>& x, const Surd<F>& ref) {
  if (is_ancestor<F>(x.node(), ref.node())) return x.lifted(ref.node());
  return x;
}

template <class F>
std::pair<Surd<F>, Surd<F>> Surd<F>::unify(const Surd& a, const Surd& b) {
  if (a.node_ == b.node_) return {a, b};
  if (is_ancestor<F>(a.node_, b.node_)) return {a.lifted(b.node_), b};
  if (is_ancestor<F>(b.node_, a.node_)) return {a, b.lifted(a.node_)};
  // Re-adjoin b's private generators on top of a's tower.
  auto bc = b.chain();
  const TowerNode<F>* common = b.node_.get();
  while (common && !is_ancestor_raw<F>(common, a.node_.get())) common = common->parent.get();
  int cd = common ? common->depth : 0;
  std::vector<Surd> img(bc.size());
  Surd cur = a;
  auto eval = [&](const std::vector<F>& c, int d) {
    // evaluate coordinates at depth d using generator images
    std::vector<Surd> level;
    level.reserve(c.size());
    for (auto& v : c) level.push_back(Surd(v));
    for (int j = 1; j <= d; ++j) {
      size_t half = level.size() / 2;
      std::vector<Surd> next(half);
      // index bit (j-1) is the lowest remaining bit after previous folds
      for (size_t i = 0; i < half; ++i) next[i] = level[2 * i] + level[2 * i + 1] * img[j - 1];
      level = std::move(next);
    }
    return level[0];
  };
  for (int j = 1; j <= static_cast<int>(bc.size()); ++j) {
    if (j <= cd) {
      img[j - 1] = Surd::generator(NodePtr<F>(b.node_, bc[j - 1]));
      continue;
    }
    Surd rad = eval(bc[j - 1]->rad, j - 1);
    if constexpr (!std::is_same_v<F, Rational>) {
      throw InternalMismatch("incompatible symbolic radical towers");
    }
    img[j - 1] = adjoin_sqrt((rad + Surd(0).lifted(cur.node_)));
    if (is_ancestor<F>(cur.node_, img[j - 1].node_)) cur = cur.lifted(img[j - 1].node_);
  }
  Surd bb = eval(b.x_, b.depth());
  Surd aa = a;
  if (is_ancestor<F>(aa.node_, bb.node_)) return {aa.lifted(bb.node_), bb};
  if (is_ancestor<F>(bb.node_, aa.node_)) return {aa, bb.lifted(aa.node_)};
  throw InternalMismatch("could not unify radical towers");
}

template <class F>
std::string Surd<F>::str() const {
  std::vector<std::string> terms;
  auto ch = chain();
  for (size_t i = 0; i < x_.size(); ++i) {
    if (hopf::is_zero(x_[i])) continue;
    Rational rprod(1);
    std::vector<std::string> parts;
    for (int j = 0; j < depth(); ++j) {
      if (!((i >> j) & 1)) continue;
      if (ch[j]->rational_rad)
        rprod *= *ch[j]->rational_rad;
      else
        parts.push_back(ch[j]->label);
    }
    if (rprod != Rational(1)) parts.insert(parts.begin(), "sqrt(" + rprod.str() + ")");
    std::string mono;
    for (size_t k = 0; k < parts.size(); ++k) mono += (k ? "*" : "") + parts[k];
    std::string cs = to_string(x_[i]);
    bool compound = false;
    for (size_t k = 1; k < cs.size(); ++k)
      if (cs[k] == '+' || cs[k] == '-' || cs[k] == ' ' || cs[k] == '(') compound = true;
    std::string term;
    if (mono.empty())
      term = cs;
    else if (cs == "1")
      term = mono;
    else if (cs == "-1")
      term = "-" + mono;
    else
      term = (compound ? "(" + cs + ")" : cs) + "*" + mono;
    terms.push_back(term);
  }
  if (terms.empty()) return "0";
  std::string out = terms[0];
  for (size_t k = 1; k < terms.size(); ++k) {
    if (!terms[k].empty() && terms[k][0] == '-')
      out += "-" + terms[k].substr(1);
    else
      out += "+" + terms[k];
  }
  return out;
}

template <class F>
std::ostream& operator<<(std::ostream& os, const Surd<F>& x) {
  return os << x.str();
}

using RadicalScalar = Surd<Rational>;
using SymbolicScalar = Surd<RatFunc>;

}  // namespace hopf
