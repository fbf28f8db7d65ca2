#include "hopflab/specialize.hpp"

#include <map>

namespace hopf {

RadicalScalar specialize(const RatFunc& x, const RadicalScalar& at) {
  RadicalScalar den = x.den().eval<RadicalScalar>(at);
  if (den.is_zero()) throw DomainError("pole at " + at.str());
  return x.num().eval<RadicalScalar>(at) / den;
}

namespace {

struct Specializer {
  const RadicalScalar& at;
  std::map<const TowerNode<RatFunc>*, RadicalScalar> images;

  // Coordinates are ordered with bit (j-1) selecting generator j, so the highest
  // generator splits the vector in halves; fold from the top.
  RadicalScalar eval(const std::vector<RatFunc>& c, const std::vector<const TowerNode<RatFunc>*>& chain, int d) {
    if (d == 0) return specialize(c[0], at);
    size_t h = c.size() / 2;
    std::vector<RatFunc> lo(c.begin(), c.begin() + h), hi(c.begin() + h, c.end());
    return eval(lo, chain, d - 1) + eval(hi, chain, d - 1) * image(chain, d);
  }

  const RadicalScalar& image(const std::vector<const TowerNode<RatFunc>*>& chain, int j) {
    const TowerNode<RatFunc>* node = chain[j - 1];
    auto it = images.find(node);
    if (it != images.end()) return it->second;
    RadicalScalar rad = eval(node->rad, chain, j - 1);
    if (sign(rad) < 0) throw DomainError("radicand " + rad.str() + " is negative at this parameter");
    return images.emplace(node, adjoin_sqrt(rad)).first->second;
  }
};

}  // namespace

RadicalScalar specialize(const SymbolicScalar& x, const RadicalScalar& at) {
  Specializer sp{at, {}};
  return sp.eval(x.coords(), x.chain(), x.depth());
}

}  // namespace hopf
