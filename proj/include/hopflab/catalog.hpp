#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hopflab/embedding.hpp"
#include "hopflab/surd.hpp"

namespace hopf {

enum class Family { A0, A1, A1tube, A2, B, C, D, E };

std::string family_name(Family f, int c);
Family parse_family(const std::string& s);
bool is_class_A(Family f);

// Param is t = cot_c^2 r for the A-family and kappa^2 for B, C, D, E (ignored for A0).
template <class F>
struct ModelSpec {
  Family family = Family::A1;
  SpaceForm sf;
  int k = 0;
  Surd<F> param;
  bool symbolic = false;

  int l() const { return sf.m - 1 - k; }
  int K() const { return 2 * k + 1; }
  int L() const { return 2 * l() + 1; }
};

using ConcreteSpec = ModelSpec<Rational>;
using SymbolicSpec = ModelSpec<RatFunc>;

// Symbolic spec whose parameter is the variable t (A-family) or kappa2 (B, C, D, E).
SymbolicSpec symbolic_spec(Family f, const SpaceForm& sf, int k = 0);
ConcreteSpec concrete_spec(Family f, const SpaceForm& sf, const RadicalScalar& param, int k = 0);

enum class JAction { Invariant, Swapped };

template <class F>
struct PrincipalBlock {
  std::string name;
  Surd<F> value;
  int multiplicity = 0;
  JAction j_action = JAction::Invariant;
  int partner = -1;  // index of the swapped block
};

template <class F>
struct PrincipalSpectrum {
  Surd<F> kappa;
  std::vector<PrincipalBlock<F>> blocks;
  bool coincidence = false;  // a D-curvature equals kappa
  std::string note;
  int dimension() const {
    int s = 1;
    for (auto& b : blocks) s += b.multiplicity;
    return s;
  }
};

struct ValidityReport {
  bool valid = true;
  std::string range;
  std::string dimension_rule;
  std::vector<std::string> flags;
  std::string message;
};

template <class F>
ValidityReport family_constraints(const ModelSpec<F>& spec);

// Throws DomainError on an illegal spec.
template <class F>
PrincipalSpectrum<F> spectrum(const ModelSpec<F>& spec);

// (kappa mu + 2c)/(2 mu - kappa)
template <class F>
Surd<F> mu_star(const Surd<F>& mu, const Surd<F>& kappa, int c);

template <class F>
Surd<F> power_trace(const PrincipalSpectrum<F>& sp, int k);

template <class F>
struct ParamConversions {
  Surd<F> r1sq, r2sq, kappa, t;
};
template <class F>
ParamConversions<F> param_conversions(const ModelSpec<F>& spec);

// Families present in the standard lists for the given space and dimension.
struct CatalogRow {
  Family family;
  int k = 0;
  std::string name;
  std::string parameter;
  std::string range;
};
std::vector<CatalogRow> catalog_rows(const SpaceForm& sf);

}  // namespace hopf
