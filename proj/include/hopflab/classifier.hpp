#pragma once

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "hopflab/catalog.hpp"
#include "hopflab/condpoly.hpp"
#include "hopflab/roots.hpp"

namespace hopf {

struct EigenOut {
  std::string exact;
  std::optional<double> decimal;
};

// One row of a classification: a family at a parameter value or over a parameter range.
struct ClassificationEntry {
  std::string family;
  std::string space;  // "CP" or "CH"
  int m = 2;
  int k = 0;
  std::string param_name;  // "t" or "kappa2"
  std::string param;       // exact value, or a range when is_range
  bool is_range = false;
  std::string radius;
  std::optional<int> type;
  std::string verdict;
  std::vector<EigenOut> eigenvalues;
  bool mass_symmetric = false;
  std::string anchor;
  std::vector<std::string> verified_by;
  std::vector<std::string> notes;
};

nlohmann::json to_json(const ClassificationEntry& e);

// Classify one model with every engine that applies; InternalMismatch when they disagree.
ClassificationEntry classify(const ConcreteSpec& spec);
// Generic verdict over the whole parameter range.
ClassificationEntry classify_symbolic(const SymbolicSpec& spec);

std::vector<ClassificationEntry> a1_classify(const SpaceForm& sf);

struct A2Solution {
  char which = 'a';  // 'a', 'b', 'c'
  RadicalScalar t;
  std::vector<RadicalScalar> eigenvalues;  // from the mu-formulas
  bool mass_symmetric = false;
};
struct A2SolveReport {
  int m = 3, k = 1, c = 1;
  QPoly condition;  // quartic in t = mu1^2
  std::vector<A2Solution> solutions;
  bool c_matches_b_swapped = false;  // case (c) at k is case (b) at m-1-k with t -> 1/t
};
A2SolveReport a2_two_type_solve(const SpaceForm& sf, int k);

// Consistency of the two-type conditions for A2 with p, f, f2 left unknown.
struct A2Consistency {
  CondPoly<SymbolicScalar> closed_form;  // f(f2 + f^2) + 2 kappa f (f + kappa) - c(n+3) f - 4c kappa
  CondPoly<SymbolicScalar> from_cross;   // q-free conditions at mu1, mu3 cross-multiplied to drop p
  CondPoly<SymbolicScalar> from_pq;      // p from the third condition put into the f p relation
  bool cross_matches = false;            // proportional to closed_form
  bool pq_matches = false;
  bool vanishes_at_solutions = false;  // closed_form at the true f, f2 is zero at every 2-type root
};
A2Consistency a2_consistency(const SpaceForm& sf, int k);

struct BTwoTypeReport {
  int m = 2, c = 1;
  QPoly compat;      // kappa^6 form in m
  QPoly compat_n;    // kappa^6 form in n
  QPoly factored;    // product of the two factors
  bool forms_agree = false;
  std::vector<RadicalScalar> roots;  // kappa^2 in the legal range
  std::vector<ClassificationEntry> entries;
};
BTwoTypeReport b_two_type_solve(const SpaceForm& sf);

struct BThreeTypeReport {
  RadicalScalar kappa2;
  RadicalScalar p, q, r;
  RadicalScalar lambda_u, lambda_v, lambda_w;
  bool roots_ok = false;         // the three formulas are roots of the cubic
  bool degenerate = false;       // lambda_u = lambda_w
  bool factorization_ok = true;  // checked only at kappa^2 = 4m
  ClassificationEntry entry;
};
BThreeTypeReport b_three_type(const SpaceForm& sf, const RadicalScalar& kappa2);

struct CDEExclusion {
  Family family;
  int m = 5;
  CondPoly<SymbolicScalar> p_from_pair13, p_from_pair24;    // p-relations from the third condition
  CondPoly<SymbolicScalar> fp_from_pair13, fp_from_pair24;  // f p relations from the q-free condition
  SymbolicScalar f_value;                                   // solved from the f p relations
  bool f_is_minus_kappa = false;
  CondPoly<SymbolicScalar> second_relation;  // linear in f, from the two p-relations
  RatFunc witness;                           // second relation at f = -kappa
  int positive_roots = -1;
  bool excluded() const { return f_is_minus_kappa && positive_roots == 0; }
};
CDEExclusion cde_exclude(Family family, int m);

ClassificationEntry horosphere_exclude(int m);

struct TheoremReport {
  std::string id;
  int m = 2;
  std::string banner;
  std::vector<ClassificationEntry> entries;
  std::vector<std::string> notes;
};
// id in T1, T2, T3, T4, C1, C2-note
TheoremReport theorem_report(const std::string& id, int m);

struct StabilityReport {
  int m = 3, k = 1;
  Rational t_b, t_c;
  bool c_is_swapped_b = false;
  bool endpoints_match = false;
  bool ordered = false;  // t_b < t_c
};
StabilityReport stability_remark_check(int m, int k);

}  // namespace hopf
