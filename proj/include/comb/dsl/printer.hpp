#pragma once

#include <string>

#include "comb/dsl/ast.hpp"

namespace comb::dsl {

// Canonical source text; parse(print(p)) has the same structure as p.
std::string print(const Program& p);
std::string print(const Term& t);
std::string print(const Expr& e);
std::string print(const ObjExpr& o);
std::string print(const FamExpr& f);

}  // namespace comb::dsl
