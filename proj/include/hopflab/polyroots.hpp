#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hopflab/poly.hpp"
#include "hopflab/roots.hpp"
#include "hopflab/surd.hpp"

namespace hopf {

template <class F>
using SPoly = Poly<Surd<F>>;

template <class F>
struct RootSet {
  std::vector<Surd<F>> roots;    // distinct roots found exactly
  std::vector<int> multiplicity;  // parallel to roots
  int complex_count = 0;          // roots known to be non-real (concrete only)
  int unresolved = 0;             // roots neither found nor excluded
  bool complete() const { return unresolved == 0; }
  bool all_real() const { return complex_count == 0 && unresolved == 0; }
};

// Coefficients pushed down to the base field, when they all lie there.
template <class F>
std::optional<Poly<F>> descend(const SPoly<F>& p);

// Roots in Q(x) of a polynomial over Q(x), found by interpolating rational roots of
// specializations and then verified exactly.
std::vector<RatFunc> ratfunc_roots(const Poly<RatFunc>& p);

// Exact roots over the real radical tower. Candidates (for example specializations of
// symbolic roots) are tried when a factor of degree three or more does not split otherwise.
RootSet<Rational> exact_roots(const SPoly<Rational>& p, const std::vector<RadicalScalar>& candidates = {});

// Exact roots over Q(x) and square-root extensions of it; new radicals are adjoined on
// top of the tower of context.
RootSet<RatFunc> exact_roots(const SPoly<RatFunc>& p, const SymbolicScalar& context);

}  // namespace hopf
