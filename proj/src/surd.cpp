#include "hopflab/surd.hpp"

#include "hopflab/interval.hpp"

namespace hopf {

namespace {

Interval eval_interval(const std::vector<Rational>& c, const std::vector<Interval>& gens, int d,
                       int bits) {
  std::vector<Interval> level(c.begin(), c.end());
  for (int j = 1; j <= d; ++j) {
    std::vector<Interval> next(level.size() / 2);
    for (size_t i = 0; i < next.size(); ++i)
      next[i] = round_out(level[2 * i] + level[2 * i + 1] * gens[j - 1], bits);
    level = std::move(next);
  }
  return level[0];
}

}  // namespace

Interval enclose(const RadicalScalar& x, int bits) {
  auto ch = x.chain();
  std::vector<Interval> gens;
  for (int j = 1; j <= x.depth(); ++j) {
    Interval r = eval_interval(ch[j - 1]->rad, gens, j - 1, bits + 8);
    gens.push_back(sqrt(r, bits + 8));
  }
  return eval_interval(x.coords(), gens, x.depth(), bits);
}

int sign(const RadicalScalar& x) {
  if (x.is_zero()) return 0;
  if (auto q = x.rational_value()) return q->sign();
  for (int bits = 64; bits <= (1 << 16); bits *= 2) {
    Interval iv = enclose(x, bits);
    if (iv.sign() != 0) return iv.sign();
  }
  throw InternalMismatch("sign refinement did not terminate for " + x.str());
}

double to_double(const RadicalScalar& x) {
  if (auto q = x.rational_value()) return q->to_double();
  return enclose(x, 96).mid().to_double();
}

RadicalScalar abs(const RadicalScalar& x) { return sign(x) < 0 ? -x : x; }
bool operator<(const RadicalScalar& a, const RadicalScalar& b) { return sign(a - b) < 0; }
bool operator>(const RadicalScalar& a, const RadicalScalar& b) { return sign(a - b) > 0; }
bool operator<=(const RadicalScalar& a, const RadicalScalar& b) { return sign(a - b) <= 0; }
bool operator>=(const RadicalScalar& a, const RadicalScalar& b) { return sign(a - b) >= 0; }

}  // namespace hopf
