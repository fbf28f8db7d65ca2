#pragma once

#include "hopflab/surd.hpp"

namespace hopf {

// Substitute a value for the family variable of a symbolic tower element. Every
// symbolic generator maps to the positive square root of its specialized radicand.
// Throws DomainError at poles and when a radicand specializes to a negative number.
RadicalScalar specialize(const SymbolicScalar& x, const RadicalScalar& at);
RadicalScalar specialize(const RatFunc& x, const RadicalScalar& at);

}  // namespace hopf
