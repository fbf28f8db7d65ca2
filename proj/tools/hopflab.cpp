#include <algorithm>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

#include "CLI11.hpp"
#include "hopflab/catalog.hpp"
#include "hopflab/classifier.hpp"
#include "hopflab/errors.hpp"
#include "hopflab/parse.hpp"
#include "hopflab/suites.hpp"

using namespace hopf;
using nlohmann::json;

namespace {

constexpr const char* kSchemaVersion = "1";

enum Exit { kOk = 0, kVerifyFailed = 1, kUsage = 2, kDomain = 3, kMismatch = 4 };

struct Config {
  std::string space = "cp";
  int m = 2;
  std::string family;
  std::string t, kappa2;
  int k = 0;
  std::string format = "json";
  std::string out;
  // verify
  std::string suite = "all";
  int max_kl = 4;
  int samples = 100;
  unsigned long seed = 7;
  bool symbolic = false;
  bool concrete = false;
  // report
  std::string theorem;
};

SpaceForm space_form(const Config& cfg) {
  if (cfg.space != "cp" && cfg.space != "ch") throw UsageError("--space must be cp or ch");
  return SpaceForm(cfg.space == "cp" ? 1 : -1, cfg.m);
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char ch : s) q += ch == '"' ? std::string("\"\"") : std::string(1, ch);
  return q + "\"";
}

std::string md_cell(const std::string& s) {
  std::string r;
  for (char ch : s) r += ch == '|' ? std::string("\\|") : std::string(1, ch);
  return r;
}

std::string join(const std::vector<std::string>& xs, const std::string& sep) {
  std::string s;
  for (size_t i = 0; i < xs.size(); ++i) s += (i ? sep : "") + xs[i];
  return s;
}

std::string eigen_list(const ClassificationEntry& e) {
  std::vector<std::string> xs;
  for (auto& x : e.eigenvalues) xs.push_back(x.exact);
  return join(xs, "; ");
}

std::string type_str(const ClassificationEntry& e) { return e.type ? std::to_string(*e.type) : "-"; }

const std::vector<std::string> kEntryColumns = {"family", "space", "m", "k", "param_name", "param", "radius", "type",
                                                "verdict", "eigenvalues", "mass_symmetric", "paper_anchor",
                                                "verified_by", "notes"};

std::vector<std::string> entry_cells(const ClassificationEntry& e) {
  return {e.family,
          e.space,
          std::to_string(e.m),
          std::to_string(e.k),
          e.param_name,
          e.param,
          e.radius,
          type_str(e),
          e.verdict,
          eigen_list(e),
          e.mass_symmetric ? "true" : "false",
          e.anchor,
          join(e.verified_by, "+"),
          join(e.notes, "; ")};
}

std::string entries_csv(const std::vector<ClassificationEntry>& es) {
  std::ostringstream os;
  os << join(kEntryColumns, ",") << "\n";
  for (auto& e : es) {
    std::vector<std::string> cells;
    for (auto& c : entry_cells(e)) cells.push_back(csv_field(c));
    os << join(cells, ",") << "\n";
  }
  return os.str();
}

std::string md_table(const std::vector<std::string>& head, const std::vector<std::vector<std::string>>& rows) {
  std::ostringstream os;
  os << "| " << join(head, " | ") << " |\n|";
  for (size_t i = 0; i < head.size(); ++i) os << " --- |";
  os << "\n";
  for (auto& r : rows) {
    std::vector<std::string> cells;
    for (auto& c : r) cells.push_back(md_cell(c));
    os << "| " << join(cells, " | ") << " |\n";
  }
  return os.str();
}

std::string entries_md(const std::vector<ClassificationEntry>& es) {
  const std::vector<std::string> head = {"family", "space", "m", "k", "parameter", "radius", "type",
                                         "eigenvalues", "mass-symmetric", "verified by"};
  std::vector<std::vector<std::string>> rows;
  for (auto& e : es)
    rows.push_back({e.family, e.space, std::to_string(e.m), std::to_string(e.k), e.param_name + " = " + e.param,
                    e.radius, type_str(e) + " (" + e.verdict + ")", eigen_list(e),
                    e.mass_symmetric ? "yes" : "no", join(e.verified_by, ", ")});
  std::string out = md_table(head, rows);
  std::string notes;
  for (auto& e : es)
    for (auto& n : e.notes) notes += "- " + e.family + " (" + e.param_name + " = " + e.param + "): " + n + "\n";
  return notes.empty() ? out : out + "\n" + notes;
}

// ---- catalog

std::string cmd_catalog(const Config& cfg) {
  SpaceForm sf = space_form(cfg);
  json rows = json::array();
  std::vector<std::vector<std::string>> table;
  for (auto& row : catalog_rows(sf)) {
    auto spec = symbolic_spec(row.family, sf, row.k);
    auto v = family_constraints(spec);
    auto sp = spectrum(spec);
    json blocks = json::array();
    std::vector<std::string> parts = {"kappa = " + sp.kappa.str() + " (1)"};
    for (auto& b : sp.blocks) {
      blocks.push_back({{"name", b.name},
                        {"value", b.value.str()},
                        {"multiplicity", b.multiplicity},
                        {"j_action", b.j_action == JAction::Invariant ? "invariant" : "swapped"}});
      parts.push_back(b.name + " = " + b.value.str() + " (" + std::to_string(b.multiplicity) + ")");
    }
    rows.push_back({{"family", row.name},
                    {"k", row.k},
                    {"parameter", row.parameter},
                    {"range", row.range},
                    {"dimension_rule", v.dimension_rule},
                    {"kappa", sp.kappa.str()},
                    {"blocks", blocks},
                    {"flags", v.flags}});
    table.push_back({row.name, std::to_string(row.k), row.parameter, row.range, v.dimension_rule,
                     join(parts, "; ")});
  }
  if (cfg.format == "json") {
    json j = {{"schema_version", kSchemaVersion}, {"command", "catalog"}, {"space", sf.space()},
              {"m", sf.m},                        {"rows", rows}};
    return j.dump(2) + "\n";
  }
  if (cfg.format == "csv") {
    std::ostringstream os;
    os << "family,k,parameter,range,dimension_rule,spectrum\n";
    for (auto& r : table) {
      std::vector<std::string> cells;
      for (auto& c : r) cells.push_back(csv_field(c));
      os << join(cells, ",") << "\n";
    }
    return os.str();
  }
  return "# Catalog for " + std::string(sf.c == 1 ? "CP" : "CH") + "^" + std::to_string(sf.m) + "\n\n" +
         md_table({"family", "k", "parameter", "range", "dimension", "spectrum (multiplicity)"}, table);
}

// ---- classify

std::string cmd_classify(const Config& cfg) {
  SpaceForm sf = space_form(cfg);
  if (cfg.family.empty()) throw UsageError("--family is required");
  Family f = parse_family(cfg.family);
  if (f == Family::A1tube && sf.c == 1) throw DomainError("A1'' exists only in CH^m");
  if (f == Family::A2 && cfg.k == 0) throw UsageError("A2 needs --k");
  std::string param;
  if (f == Family::A0) {
    if (!cfg.t.empty() || !cfg.kappa2.empty()) throw UsageError("A0 takes no parameter");
  } else if (is_class_A(f)) {
    if (cfg.t.empty() || !cfg.kappa2.empty()) throw UsageError("family " + cfg.family + " takes --t");
    param = cfg.t;
  } else {
    if (cfg.kappa2.empty() || !cfg.t.empty()) throw UsageError("family " + cfg.family + " takes --kappa2");
    param = cfg.kappa2;
  }
  ClassificationEntry e;
  if (param == "symbolic")
    e = classify_symbolic(symbolic_spec(f, sf, cfg.k));
  else
    e = classify(concrete_spec(f, sf, f == Family::A0 ? RadicalScalar(1) : parse_radical(param), cfg.k));
  if (cfg.format == "json") {
    json j = {{"schema_version", kSchemaVersion}, {"command", "classify"}, {"entry", to_json(e)}};
    return j.dump(2) + "\n";
  }
  if (cfg.format == "csv") return entries_csv({e});
  return "# Classification\n\n" + entries_md({e});
}

// ---- verify

std::pair<std::string, bool> cmd_verify(const Config& cfg) {
  SuiteOptions opt;
  opt.max_kl = cfg.max_kl;
  opt.samples = cfg.samples;
  opt.seed = cfg.seed;
  opt.symbolic = !cfg.concrete;
  opt.threads = thread_cap();
  if (!cfg.family.empty()) opt.family = parse_family(cfg.family);
  if (cfg.max_kl < 0 || cfg.samples < 1) throw UsageError("--max-kl must be >= 0 and --samples >= 1");
  std::vector<std::string> names;
  if (cfg.suite == "all") {
    names = suite_names();
  } else {
    const auto& all = suite_names();
    if (std::find(all.begin(), all.end(), cfg.suite) == all.end()) throw UsageError("unknown suite " + cfg.suite);
    names = {cfg.suite};
  }
  std::vector<SuiteResult> results;
  bool ok = true;
  for (auto& n : names) {
    results.push_back(run_suite(n, opt));
    ok = ok && results.back().ok();
  }
  if (cfg.format == "json") {
    json arr = json::array();
    for (auto& r : results) arr.push_back(to_json(r));
    json j = {{"schema_version", kSchemaVersion},
              {"command", "verify"},
              {"symbolic", opt.symbolic},
              {"seed", opt.seed},
              {"suites", arr},
              {"ok", ok}};
    return {j.dump(2) + "\n", ok};
  }
  std::vector<std::vector<std::string>> rows;
  for (auto& r : results)
    rows.push_back({r.name, std::to_string(r.checks), std::to_string(r.failures), r.ok() ? "pass" : "FAIL",
                    r.first_failure});
  if (cfg.format == "csv") {
    std::ostringstream os;
    os << "suite,checks,failures,status,first_failure\n";
    for (auto& r : rows) {
      std::vector<std::string> cells;
      for (auto& c : r) cells.push_back(csv_field(c));
      os << join(cells, ",") << "\n";
    }
    return {os.str(), ok};
  }
  return {"# Verification\n\n" + md_table({"suite", "checks", "failures", "status", "first failure"}, rows), ok};
}

// ---- report

std::string report_id(const std::string& s) {
  static const std::map<std::string, std::string> ids = {
      {"1", "T1"},  {"2", "T2"},  {"3", "T3"},  {"4", "T4"},  {"T1", "T1"}, {"T2", "T2"},
      {"T3", "T3"}, {"T4", "T4"}, {"C1", "C1"}, {"C2", "C2-note"}, {"C2-note", "C2-note"}};
  auto it = ids.find(s);
  if (it == ids.end()) throw UsageError("unknown theorem id '" + s + "'");
  return it->second;
}

std::string cmd_report(const Config& cfg) {
  if (cfg.theorem.empty()) throw UsageError("--theorem is required");
  std::string id = report_id(cfg.theorem);
  auto rep = theorem_report(id, cfg.m);
  if (cfg.format == "json") {
    json es = json::array();
    for (auto& e : rep.entries) es.push_back(to_json(e));
    json j = {{"schema_version", kSchemaVersion}, {"command", "report"}, {"id", rep.id},   {"m", rep.m},
              {"banner", rep.banner},             {"entries", es},       {"notes", rep.notes}};
    return j.dump(2) + "\n";
  }
  if (cfg.format == "csv") return entries_csv(rep.entries);
  // one section per anchor, in order of first appearance
  std::ostringstream os;
  os << "# Report " << rep.id << " (m = " << rep.m << ")\n\n_" << rep.banner << "_\n";
  std::vector<std::string> anchors;
  for (auto& e : rep.entries)
    if (std::find(anchors.begin(), anchors.end(), e.anchor) == anchors.end()) anchors.push_back(e.anchor);
  for (auto& a : anchors) {
    std::vector<ClassificationEntry> sec;
    for (auto& e : rep.entries)
      if (e.anchor == a) sec.push_back(e);
    os << "\n## " << a << "\n\n" << entries_md(sec);
  }
  if (!rep.notes.empty()) {
    os << "\n## Notes\n\n";
    for (auto& n : rep.notes) os << "- " << n << "\n";
  }
  return os.str();
}

void emit(const Config& cfg, const std::string& text) {
  if (cfg.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(cfg.out, std::ios::binary);
  if (!f) throw UsageError("cannot write " + cfg.out);
  f << text;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"hopflab: finite-type verification for Hopf hypersurfaces in complex space forms"};
  app.require_subcommand(1);
  Config cfg;
  auto common = [&](CLI::App* sub) {
    sub->add_option("--format", cfg.format, "json, csv or md")->check(CLI::IsMember({"json", "csv", "md"}));
    sub->add_option("--out", cfg.out, "write to FILE instead of stdout");
  };
  auto space = [&](CLI::App* sub) {
    sub->add_option("--space", cfg.space, "cp or ch")->check(CLI::IsMember({"cp", "ch"}));
    sub->add_option("--m", cfg.m, "complex dimension (>= 2)");
  };

  auto* catalog = app.add_subcommand("catalog", "list the standard families with symbolic spectra");
  space(catalog);
  common(catalog);

  auto* cls = app.add_subcommand("classify", "classify one model");
  space(cls);
  common(cls);
  cls->add_option("--family", cfg.family, "A0, A1, A1', A1'', A2, B, C, D, E")->required();
  cls->add_option("--t", cfg.t, "cot^2 r (CP) or coth^2 r / tanh^2 r (CH), exact, or 'symbolic'");
  cls->add_option("--kappa2", cfg.kappa2, "kappa^2 for B, C, D, E, exact, or 'symbolic'");
  cls->add_option("--k", cfg.k, "k for A2");

  auto* ver = app.add_subcommand("verify", "run identity verification suites");
  common(ver);
  ver->add_option("--suite", cfg.suite, "embedding, iterates, block, type-equations, traces or all");
  ver->add_option("--family", cfg.family, "restrict the iterates suite to one family");
  ver->add_option("--max-kl", cfg.max_kl, "largest k + l for the block suite");
  ver->add_option("--samples", cfg.samples, "samples per (c, m) for the embedding suite");
  ver->add_option("--seed", cfg.seed, "sampling seed");
  ver->add_flag("--symbolic", cfg.symbolic, "symbolic parameters (default)");
  ver->add_flag("--concrete", cfg.concrete, "sample rational parameters instead");

  auto* rep = app.add_subcommand("report", "reproduce a classification statement");
  common(rep);
  rep->add_option("--theorem", cfg.theorem, "1, 2, 3, 4, C1 or C2")->required();
  rep->add_option("--m", cfg.m, "complex dimension (>= 2)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? kOk : kUsage;
  }

  try {
    if (cfg.symbolic && cfg.concrete) throw UsageError("--symbolic and --concrete are exclusive");
    if (app.got_subcommand(catalog)) {
      emit(cfg, cmd_catalog(cfg));
    } else if (app.got_subcommand(cls)) {
      emit(cfg, cmd_classify(cfg));
    } else if (app.got_subcommand(ver)) {
      auto [text, ok] = cmd_verify(cfg);
      emit(cfg, text);
      if (!ok) return kVerifyFailed;
    } else if (app.got_subcommand(rep)) {
      emit(cfg, cmd_report(cfg));
    }
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kUsage;
  } catch (const DomainError& e) {
    std::cerr << "domain error: " << e.what() << "\n";
    return kDomain;
  } catch (const NotExpressible& e) {
    std::cerr << "domain error: " << e.what() << "\n";
    return kDomain;
  } catch (const InternalMismatch& e) {
    std::cerr << "internal mismatch: " << e.what() << "\n";
    return kMismatch;
  }
  return kOk;
}
