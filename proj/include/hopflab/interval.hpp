#pragma once

#include "hopflab/rational.hpp"

namespace hopf {

// Closed interval with rational endpoints; results are rounded outward to dyadics of `bits` bits.
struct Interval {
  Rational lo, hi;

  Interval() = default;
  Interval(const Rational& v) : lo(v), hi(v) {}  // NOLINT
  Interval(const Rational& l, const Rational& h) : lo(l), hi(h) {}

  bool contains_zero() const { return lo.sign() <= 0 && hi.sign() >= 0; }
  int sign() const { return lo.sign() > 0 ? 1 : (hi.sign() < 0 ? -1 : 0); }
  Rational width() const { return hi - lo; }
  Rational mid() const { return (lo + hi) / Rational(2); }
};

Interval operator+(const Interval& a, const Interval& b);
Interval operator-(const Interval& a, const Interval& b);
Interval operator-(const Interval& a);
Interval operator*(const Interval& a, const Interval& b);
Interval operator/(const Interval& a, const Interval& b);  // DomainError when b contains zero

// Outward rounding to multiples of 2^-bits.
Interval round_out(const Interval& a, int bits);
// Enclosure of sqrt over a nonnegative interval to roughly 2^-bits.
Interval sqrt(const Interval& a, int bits);

}  // namespace hopf
