#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <vector>

#include "comb/behavior.hpp"
#include "comb/family.hpp"
#include "comb/lazy_seq.hpp"
#include "comb/morphism.hpp"
#include "comb/stream_comb.hpp"

namespace comb {

// A cartesian infinite comb in normal form: maps h_n : X_0 (x) ... (x) X_n -> Y_n.
// Equivalently a Kleisli arrow X -> Y of the comonad Theta.
class CausalForm {
 public:
  CausalForm(ObjectFamily inputs, ObjectFamily outputs,
             std::function<Morphism(std::size_t)> maps);

  Backend backend() const { return inputs_.backend(); }
  const ObjectFamily& inputs() const { return inputs_; }
  const ObjectFamily& outputs() const { return outputs_; }
  const Morphism& map(std::size_t n) const { return maps_.at(n); }

  FiniteCausalForm prefix(std::size_t depth) const;

 private:
  ObjectFamily inputs_;
  ObjectFamily outputs_;
  LazySeq<Morphism> maps_;
};

// Threads copies of all inputs through the comb. Cartesian backends only.
CausalForm causal_form(const StreamComb& c);
// Memory M_n = X_0 (x) ... (x) X_n; piece n keeps the accumulated inputs and
// applies h_n to a copy.
StreamComb from_causal_form(const CausalForm& cf);

std::optional<BehaviorDifference> compare(const CausalForm& a, const CausalForm& b,
                                          std::size_t depth, const ProbeGrid& grid = {});

// Theta(X)_n = X_0 (x) ... (x) X_n.
inline Object theta_object(const ObjectFamily& x, std::size_t n) {
  return accumulated(x, n);
}

// Counit eps_n : Theta(X)_n -> X_n (last projection), the Kleisli identity.
CausalForm theta_counit(const ObjectFamily& x);
// Comultiplication nu_n : Theta(X)_n -> Theta(Theta X)_n, the family of
// prefix projections <pi_0, ..., pi_n>.
LazySeq<Morphism> theta_comult(const ObjectFamily& x);
// Functor action on a family morphism u_n : A_n -> B_n: u_0 (x) ... (x) u_n.
LazySeq<Morphism> theta_map(std::function<Morphism(std::size_t)> u);
// Coextension f# = Theta(f) . nu, built from prefix projections so that it
// never materializes Theta(Theta X).
LazySeq<Morphism> kleisli_extend(const CausalForm& f);
// (g . f)_n = g_n . f#_n.
CausalForm kleisli_compose(const CausalForm& g, const CausalForm& f);

// Observable states of a comb from the unit family.
struct StateFamily {
  Backend backend = Backend::FinFn;
  std::vector<Object> outputs;          // Y_0 .. Y_depth
  std::vector<Morphism> values;         // cartesian: I -> Y_n
  std::vector<StochRow> distributions;  // FinStoch: over Y_0 (x) ... (x) Y_n
};

StateFamily extract_state_stream(const StreamComb& c, std::size_t depth);

// First stage n at which the family is not coherent: stage n does not sum to
// exactly 1, or marginalizing stage n over Y_n differs from stage n-1.
std::optional<std::size_t> check_coherence(const StateFamily& sf, std::size_t depth);

}  // namespace comb
