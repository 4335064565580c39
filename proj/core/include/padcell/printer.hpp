#pragma once

#include <string>

#include "padcell/ast.hpp"

namespace padcell {

// Deterministic concrete syntax; parse(print(x)) rebuilds a structurally
// equal tree for any constructor-built x.
std::string print(const Term& t);
std::string print(const Formula& f);

} // namespace padcell
