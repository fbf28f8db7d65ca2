#pragma once

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "hopflab/catalog.hpp"

namespace hopf {

struct SuiteOptions {
  int max_kl = 4;
  int samples = 100;
  unsigned long seed = 7;
  std::optional<Family> family;  // restricts the iterates suite
  bool symbolic = true;
  int threads = 1;
};

struct SuiteResult {
  std::string name;
  int checks = 0;
  int failures = 0;
  std::string first_failure;  // exact residual of the first failing item
  bool ok() const { return failures == 0 && checks > 0; }
};

nlohmann::json to_json(const SuiteResult& r);

// embedding, iterates, block, type-equations, traces
const std::vector<std::string>& suite_names();

// Throws DomainError for an unknown name. "all" is not accepted here; callers loop.
SuiteResult run_suite(const std::string& name, const SuiteOptions& opt);

// Parallelism cap from HOPFLAB_THREADS (default: hardware concurrency, at least 1).
int thread_cap();

}  // namespace hopf
