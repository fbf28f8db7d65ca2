#pragma once

#include <optional>
#include <vector>

#include "hopflab/poly.hpp"
#include "hopflab/rational.hpp"
#include "hopflab/surd.hpp"

namespace hopf {

using QPoly = Poly<Rational>;

// Open interval (lo, hi); an empty bound means infinite.
struct Domain {
  std::optional<Rational> lo, hi;
  static Domain all() { return {}; }
  static Domain positive() { return {Rational(0), std::nullopt}; }
  static Domain open(const Rational& a, const Rational& b) { return {a, b}; }
  bool contains(const Rational& x) const { return (!lo || x > *lo) && (!hi || x < *hi); }
  bool empty() const { return lo && hi && *lo >= *hi; }
};

// A real root isolated in [lo, hi] (lo == hi for an exactly known rational root),
// together with the square-free factor that vanishes there.
struct RealRoot {
  Rational lo, hi;
  int multiplicity = 1;
  QPoly factor;
  bool is_point() const { return lo == hi; }
};

// Real roots inside the domain, sorted increasingly, with multiplicities.
std::vector<RealRoot> isolate_real_roots(const QPoly& p, const Domain& dom = Domain::all());
// Shrink an isolating interval below the requested width.
void refine_root(RealRoot& r, const Rational& width);
// Number of distinct real roots inside the domain.
int count_real_roots(const QPoly& p, const Domain& dom = Domain::all());

// All rational roots of p (distinct), increasing.
std::vector<Rational> rational_roots(const QPoly& p);

// A real root with an exact radical value when one was found.
struct ExactRoot {
  RealRoot where;
  std::optional<RadicalScalar> value;
};
// Roots in the domain; exact values are produced for rational roots and for roots of
// quadratic factors left after removing rational roots.
std::vector<ExactRoot> exact_real_roots(const QPoly& p, const Domain& dom = Domain::all());

// Make a polynomial with integer coefficients and positive content-free leading coefficient.
QPoly primitive_part(const QPoly& p);

}  // namespace hopf
