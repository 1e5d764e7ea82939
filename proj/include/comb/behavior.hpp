#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "comb/morphism.hpp"
#include "comb/object.hpp"

namespace comb {

// Depth-bounded cartesian normal form: maps[i] : X_0 (x) ... (x) X_i -> Y_i.
struct FiniteCausalForm {
  Backend backend = Backend::FinFn;
  std::vector<Object> inputs;
  std::vector<Object> outputs;
  std::vector<Morphism> maps;
};

// Threads accumulated inputs through a sequence of pieces, one stage at a
// time, keeping only the map Theta_i -> M_i. Cartesian backends only.
class CausalThreader {
 public:
  explicit CausalThreader(Backend backend);

  // Feeds f_i : M_{i-1} (x) X_i -> M_i (x) Y_i and returns h_i.
  Morphism step(const Morphism& piece, const Object& input, const Object& memory,
                const Object& output);

  const Object& accumulated_inputs() const { return theta_; }
  const Morphism& memory_map() const { return memory_; }  // Theta_i -> M_i

 private:
  Object theta_;
  Morphism memory_;
};

// Stage-wise observable behavior of a comb truncated at some depth.
// Cartesian: stages[i] = h_i : Theta_i -> Y_i.
// FinStoch: stages[i] = joint kernel Theta_i -> Y_0 (x) ... (x) Y_i with the
// open memory marginalized out.
struct Behavior {
  Backend backend = Backend::FinFn;
  std::vector<Morphism> stages;
};

struct BehaviorDifference {
  std::size_t stage = 0;
  std::string witness;
};

std::optional<BehaviorDifference> compare(const Behavior& a, const Behavior& b,
                                          const ProbeGrid& grid = {});

// Joint FinStoch behavior of pieces f_0..f_n with the given typings.
std::vector<Morphism> stochastic_joint_behavior(const std::vector<Morphism>& pieces,
                                                const std::vector<Object>& inputs,
                                                const std::vector<Object>& outputs);

// Behavior of pieces f_0..f_n for any backend (memories[i] = M_i).
Behavior behavior_of_pieces(const std::vector<Morphism>& pieces,
                            const std::vector<Object>& inputs,
                            const std::vector<Object>& memories,
                            const std::vector<Object>& outputs);

}  // namespace comb
