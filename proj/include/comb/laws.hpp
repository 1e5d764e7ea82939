#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "comb/morphism.hpp"
#include "comb/random.hpp"
#include "comb/stream_comb.hpp"

namespace comb::laws {

struct Config {
  Backend backend = Backend::FinFn;
  std::uint64_t seed = 1;
  std::size_t cases = 100;
  std::size_t depth = 6;
  random::Limits limits;
  // BigFn only; the sample keeps deep causal forms affordable.
  ProbeGrid grid{-2, 8, 2000, 0x5eed};
};

struct Result {
  std::string name;
  std::size_t cases = 0;
  std::size_t failures = 0;
  std::string first_failure;  // "case k: ..."
  bool passed() const { return failures == 0 && cases > 0; }
};

// First difference between the depth-bounded behaviors, if any.
std::optional<std::string> behavior_difference(const StreamComb& a, const StreamComb& b,
                                               std::size_t depth, const ProbeGrid& grid = {});

// Sequential composition, parallel composition and lifts form a symmetric
// monoidal category, up to depth-bounded behavior.
Result seq_associativity(const Config& cfg);
Result seq_unit(const Config& cfg);
Result interchange(const Config& cfg);
Result par_associativity(const Config& cfg);

// fbk^Y((g (x) id) . f) = fbk^X(f . (delay g (x) id)).
Result trace_law(const Config& cfg);
// delay (g . f) = delay g . delay f.
Result delay_functoriality(const Config& cfg);

// Cartesian only.
Result causal_round_trip(const Config& cfg);
Result open_normal_form(const Config& cfg);
Result comonad_laws(const Config& cfg);
Result kleisli_composition(const Config& cfg);

// Slides leave normal forms, plug results (all fillers) and lenses unchanged
// (FinFn), or the discard-memory behavior unchanged (other backends).
Result slide_invariance(const Config& cfg);

// Every suite that applies to cfg.backend, in a fixed order.
std::vector<Result> run_all(const Config& cfg);

}  // namespace comb::laws
