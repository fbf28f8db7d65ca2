#pragma once

#include <string_view>

#include "hopflab/surd.hpp"

namespace hopf {

// Parses "a/b", "1.5", "sqrt(2)+sqrt(3)", "sqrt(sqrt(6)+sqrt(7))", "(3-sqrt(5))/2".
RadicalScalar parse_radical(std::string_view text);

// Same grammar plus the identifiers t, kappa2 and kappa.
SymbolicScalar parse_symbolic(std::string_view text);

}  // namespace hopf
