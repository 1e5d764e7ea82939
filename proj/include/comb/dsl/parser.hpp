#pragma once

#include <string>
#include <string_view>

#include "comb/bigfn.hpp"
#include "comb/dsl/ast.hpp"

namespace comb::dsl {

// Throws Error(Syntax) at the first offending token, listing what was expected.
Program parse(std::string_view source, const std::string& file = "<input>");

// A standalone morphism term, e.g. "(id[Z] * add) . copy[Z*Z]".
TermPtr parse_term(std::string_view source, const std::string& file = "<term>");

// Parses and elaborates a closed BigFn term (no generator references).
bigfn::Expr parse_bigfn_term(std::string_view source);

}  // namespace comb::dsl
