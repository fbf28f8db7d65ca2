#include "hopflab/interval.hpp"

#include <algorithm>

#include "hopflab/errors.hpp"

namespace hopf {

Interval operator+(const Interval& a, const Interval& b) { return {a.lo + b.lo, a.hi + b.hi}; }
Interval operator-(const Interval& a, const Interval& b) { return {a.lo - b.hi, a.hi - b.lo}; }
Interval operator-(const Interval& a) { return {-a.hi, -a.lo}; }

Interval operator*(const Interval& a, const Interval& b) {
  Rational p[4] = {a.lo * b.lo, a.lo * b.hi, a.hi * b.lo, a.hi * b.hi};
  return {*std::min_element(p, p + 4), *std::max_element(p, p + 4)};
}

Interval operator/(const Interval& a, const Interval& b) {
  if (b.contains_zero()) throw DomainError("interval division by an interval containing zero");
  return a * Interval(Rational(1) / b.hi, Rational(1) / b.lo);
}

namespace {

mpz_class pow2(int bits) {
  mpz_class s = 1;
  s <<= bits;
  return s;
}

}  // namespace

Interval round_out(const Interval& a, int bits) {
  mpz_class s = pow2(bits);
  mpq_class lo = a.lo.get() * s, hi = a.hi.get() * s;
  mpz_class l, h;
  mpz_fdiv_q(l.get_mpz_t(), lo.get_num_mpz_t(), lo.get_den_mpz_t());
  mpz_cdiv_q(h.get_mpz_t(), hi.get_num_mpz_t(), hi.get_den_mpz_t());
  return {Rational(l, s), Rational(h, s)};
}

Interval sqrt(const Interval& a, int bits) {
  if (a.hi.sign() < 0) throw DomainError("sqrt of a negative interval");
  mpz_class s = pow2(bits);
  mpz_class s2 = s * s;
  Rational lo = a.lo.sign() < 0 ? Rational(0) : a.lo;
  mpq_class l = lo.get() * s2, h = a.hi.get() * s2;
  mpz_class lf, hc;
  mpz_fdiv_q(lf.get_mpz_t(), l.get_num_mpz_t(), l.get_den_mpz_t());
  mpz_cdiv_q(hc.get_mpz_t(), h.get_num_mpz_t(), h.get_den_mpz_t());
  mpz_class rl, rh;
  mpz_sqrt(rl.get_mpz_t(), lf.get_mpz_t());
  mpz_sqrt(rh.get_mpz_t(), hc.get_mpz_t());
  if (rh * rh < hc) rh += 1;
  return {Rational(rl, s), Rational(rh, s)};
}

}  // namespace hopf
