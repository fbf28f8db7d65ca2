#include "hopflab/suites.hpp"

#include <atomic>
#include <cstdlib>
#include <functional>
#include <sstream>
#include <thread>

#include "hopflab/block.hpp"
#include "hopflab/classifier.hpp"
#include "hopflab/delta.hpp"
#include "hopflab/embedding.hpp"
#include "hopflab/errors.hpp"
#include "hopflab/parse.hpp"
#include "hopflab/tangent.hpp"

namespace hopf {

namespace {

// An item returns the failure text, or nothing on success.
struct Item {
  std::string label;
  std::function<std::optional<std::string>()> run;
};

SuiteResult run_items(const std::string& name, const std::vector<Item>& items, int threads) {
  std::vector<std::optional<std::string>> out(items.size());
  auto work = [&](size_t i) {
    try {
      auto r = items[i].run();
      if (r) out[i] = items[i].label + ": " + *r;
    } catch (const std::exception& e) {
      out[i] = items[i].label + ": exception: " + e.what();
    }
  };
  int nt = std::max(1, std::min<int>(threads, static_cast<int>(items.size())));
  if (nt == 1) {
    for (size_t i = 0; i < items.size(); ++i) work(i);
  } else {
    std::atomic<size_t> next{0};
    std::vector<std::thread> pool;
    for (int t = 0; t < nt; ++t)
      pool.emplace_back([&] {
        for (size_t i; (i = next.fetch_add(1)) < items.size();) work(i);
      });
    for (auto& th : pool) th.join();
  }
  SuiteResult res;
  res.name = name;
  res.checks = static_cast<int>(items.size());
  for (auto& o : out)
    if (o) {
      ++res.failures;
      if (res.first_failure.empty()) res.first_failure = *o;
    }
  return res;
}

std::string where(Family f, const SpaceForm& sf, int k = -1) {
  std::string s = family_name(f, sf.c) + " " + (sf.c == 1 ? "CP" : "CH") + "^" + std::to_string(sf.m);
  if (k >= 0) s += " k=" + std::to_string(k);
  return s;
}

// A legal sample parameter for concrete runs.
RadicalScalar sample_param(Family f, int c) {
  if (f == Family::A1tube) return parse_radical("1/3");
  if (f == Family::B) return parse_radical("7/5");
  if (c == -1) return parse_radical("5/2");
  return parse_radical("7/5");
}

template <class F>
std::optional<std::string> iterate_failure(const DeltaModule<F>& dm) {
  for (auto& ic : verify_iterates(dm))
    if (!ic.ok()) return ic.name + " residual " + frame_str<F>(ic.residual);
  return std::nullopt;
}

template <class F>
std::optional<std::string> iterates_item(const ModelSpec<F>& spec) {
  if (auto r = iterate_failure(build_frame_module(spec))) return r;
  if (spec.family == Family::B) {
    if (auto r = iterate_failure(build_frame_module(spec, FramePath::ClassB))) return "class-B path: " + *r;
    auto res = cubic_residual(build_frame_module(spec), b_type_cubic(spec));
    if (!is_zero_matrix(res)) return "cubic residual " + frame_str<F>(res);
  }
  return std::nullopt;
}

template <class F>
ModelSpec<F> make_spec(Family f, const SpaceForm& sf, bool symbolic, int k = 0);
template <>
ModelSpec<RatFunc> make_spec(Family f, const SpaceForm& sf, bool, int k) {
  return symbolic_spec(f, sf, k);
}
template <>
ModelSpec<Rational> make_spec(Family f, const SpaceForm& sf, bool, int k) {
  return concrete_spec(f, sf, sample_param(f, sf.c), k);
}

std::vector<Family> frame_families(int c) {
  if (c == 1) return {Family::A1, Family::B};
  return {Family::A0, Family::A1, Family::A1tube, Family::B};
}

std::vector<Item> embedding_items(const SuiteOptions& opt) {
  std::vector<Item> items;
  for (int c : {1, -1})
    for (int m = 2; m <= 5; ++m) {
      SpaceForm sf(c, m);
      items.push_back({"embedding " + std::string(c == 1 ? "CP" : "CH") + "^" + std::to_string(m),
                       [sf, opt]() -> std::optional<std::string> {
                         auto r = run_embedding_suite(sf, opt.samples, opt.seed);
                         if (r.failures > 0) return r.first_failure;
                         if (r.max_float_error >= 1e-12)
                           return "float error " + std::to_string(r.max_float_error);
                         return std::nullopt;
                       }});
    }
  return items;
}

std::vector<Item> iterates_items(const SuiteOptions& opt) {
  std::vector<Item> items;
  for (int c : {1, -1})
    for (int m = 2; m <= 6; ++m) {
      SpaceForm sf(c, m);
      for (Family f : frame_families(c)) {
        if (opt.family && *opt.family != f) continue;
        items.push_back({"iterates " + where(f, sf), [f, sf, sym = opt.symbolic] {
                           return sym ? iterates_item(make_spec<RatFunc>(f, sf, true))
                                      : iterates_item(make_spec<Rational>(f, sf, false));
                         }});
      }
    }
  return items;
}

template <class F>
std::optional<std::string> block_item(int k, int l, int c, const Surd<F>& t) {
  auto rep = block_oracle_check(block_model<F>(k, l, c, t), 3);
  if (!rep.ok()) return rep.mismatches.front();
  auto a = a2_type_analysis<F>(k, l, c, t);
  if (!a.cubic_ok) return std::string("block cubic does not annihilate the blocks");
  if (!a.root_relations_ok) return std::string("block eigenvalues are not roots of the cubic");
  return std::nullopt;
}

std::vector<Item> block_items(const SuiteOptions& opt) {
  std::vector<Item> items;
  for (int c : {1, -1})
    for (int k = 0; k <= opt.max_kl; ++k)
      for (int l = 0; k + l <= opt.max_kl; ++l) {
        std::ostringstream os;
        os << "block k=" << k << " l=" << l << " c=" << c;
        items.push_back({os.str(), [k, l, c, sym = opt.symbolic] {
                           return sym ? block_item<RatFunc>(k, l, c, parse_symbolic("t"))
                                      : block_item<Rational>(k, l, c, parse_radical("7/2"));
                         }});
      }
  return items;
}

template <class F>
std::optional<std::string> solved_conditions(const ModelSpec<F>& spec) {
  auto pq = solve_pq(spec);
  if (!pq) return std::string("two-type conditions have no (p, q)");
  auto r = check_E_conditions(spec, pq->first, pq->second);
  if (!r.all_zero()) return "first condition residual " + r.e1.str();
  return std::nullopt;
}

std::vector<Item> type_equation_items() {
  std::vector<Item> items;
  for (int c : {1, -1})
    for (int m = 2; m <= 6; ++m) {
      SpaceForm sf(c, m);
      items.push_back({"conditions " + where(Family::A1, sf),
                       [sf] { return solved_conditions(symbolic_spec(Family::A1, sf)); }});
      if (c == -1)
        items.push_back({"conditions " + where(Family::A1tube, sf),
                         [sf] { return solved_conditions(symbolic_spec(Family::A1tube, sf)); }});
      items.push_back({"two-type tubes " + where(Family::B, sf), [sf]() -> std::optional<std::string> {
                         auto rep = b_two_type_solve(sf);
                         if (!rep.forms_agree) return std::string("compatibility polynomials disagree");
                         if (sf.c == 1 && rep.roots.size() != 2) return std::string("expected two roots");
                         if (sf.c == -1 && !rep.roots.empty()) return std::string("unexpected hyperbolic root");
                         for (auto& s : rep.roots)
                           if (auto f = solved_conditions(concrete_spec(Family::B, sf, s)))
                             return "kappa^2 = " + s.str() + ": " + *f;
                         return std::nullopt;
                       }});
      for (int k = 1; k <= m - 2; ++k)
        items.push_back({"A2 consistency " + where(Family::A2, sf, k), [sf, k]() -> std::optional<std::string> {
                           auto r = a2_consistency(sf, k);
                           if (!r.cross_matches) return "cross form " + r.from_cross.str();
                           if (!r.pq_matches) return "pq form " + r.from_pq.str();
                           if (!r.vanishes_at_solutions) return std::string("nonzero at a two-type root");
                           return std::nullopt;
                         }});
    }
  for (auto [f, m] : std::vector<std::pair<Family, int>>{{Family::C, 5}, {Family::C, 7}, {Family::D, 9}, {Family::E, 15}})
    items.push_back({"exclusion " + where(f, SpaceForm(1, m)), [f = f, m = m]() -> std::optional<std::string> {
                       auto r = cde_exclude(f, m);
                       if (!r.excluded()) return "witness " + r.witness.str();
                       return std::nullopt;
                     }});
  return items;
}

template <class F>
std::optional<std::string> traces_item(const ModelSpec<F>& spec) {
  auto tm = build_matrices(spec);
  auto defects = structure_defects(tm);
  if (!defects.empty()) return defects.front();
  auto tr = trace_identities(tm);
  if (!tr.ok()) return "tr(SAS) = " + tr.sas.str() + " vs " + tr.sas_closed.str();
  for (int k = 1; k <= 4; ++k)
    if (matrix_power_trace(tm, k) != power_trace(tm.spectrum, k)) return "power trace f" + std::to_string(k);
  if (spec.family == Family::A0 || spec.family == Family::A1 || spec.family == Family::A1tube ||
      spec.family == Family::B) {
    auto ip = inner_product_identities(build_frame_module(spec));
    if (!ip.ok()) return "<L x, x> = " + ip.lap_x.str() + ", <L^2 x, x> = " + ip.lap2_x.str();
  }
  if (is_class_A(spec.family)) {
    auto a = nabla_A_norm_from_spectrum(spec), b = nabla_A_frobenius(tm);
    if (a != b) return "|nabla A|^2 " + a.str() + " vs " + b.str();
  }
  return std::nullopt;
}

std::vector<Item> traces_items(const SuiteOptions& opt) {
  std::vector<Item> items;
  for (int c : {1, -1})
    for (int m : {2, 3, 4, 5, 9}) {
      SpaceForm sf(c, m);
      for (auto& row : catalog_rows(sf)) {
        // m = 9 is only needed for D
        if (m == 9 && row.family != Family::D) continue;
        items.push_back({"traces " + where(row.family, sf, row.family == Family::A2 ? row.k : -1),
                         [f = row.family, k = row.k, sf, sym = opt.symbolic] {
                           return sym ? traces_item(make_spec<RatFunc>(f, sf, true, k))
                                      : traces_item(make_spec<Rational>(f, sf, false, k));
                         }});
      }
    }
  return items;
}

}  // namespace

nlohmann::json to_json(const SuiteResult& r) {
  nlohmann::json j;
  j["suite"] = r.name;
  j["checks"] = r.checks;
  j["failures"] = r.failures;
  j["ok"] = r.ok();
  if (!r.first_failure.empty()) j["first_failure"] = r.first_failure;
  return j;
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {"embedding", "iterates", "block", "type-equations", "traces"};
  return names;
}

SuiteResult run_suite(const std::string& name, const SuiteOptions& opt) {
  std::vector<Item> items;
  if (name == "embedding")
    items = embedding_items(opt);
  else if (name == "iterates")
    items = iterates_items(opt);
  else if (name == "block")
    items = block_items(opt);
  else if (name == "type-equations")
    items = type_equation_items();
  else if (name == "traces")
    items = traces_items(opt);
  else
    throw DomainError("unknown suite " + name);
  return run_items(name, items, opt.threads);
}

int thread_cap() {
  if (const char* s = std::getenv("HOPFLAB_THREADS")) {
    int v = std::atoi(s);
    if (v >= 1) return v;
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

}  // namespace hopf
