#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "comb/dsl/ast.hpp"
#include "comb/family.hpp"
#include "comb/morphism.hpp"
#include "comb/stream_comb.hpp"

namespace comb::dsl {

// Everything a program declares, in elaborated form.
struct Elaboration {
  std::optional<Backend> backend;
  std::map<std::string, Object> sets;
  std::map<std::string, Morphism> gens;
  std::map<std::string, ObjectFamily> families;
  std::map<std::string, StreamComb> combs;
  std::vector<std::string> comb_order;  // declaration order

  // Error(Type) naming the known combs when absent.
  const StreamComb& comb(const std::string& name) const;
};

// Elaborates every declaration in order. Failures carry the span of the
// offending declaration or subexpression. Each comb is checked stage by stage
// up to the point where all its eventually-constant parts have stabilized.
Elaboration elaborate(const Program& p);
StreamComb elaborate(const Program& p, const std::string& comb_name);

}  // namespace comb::dsl
