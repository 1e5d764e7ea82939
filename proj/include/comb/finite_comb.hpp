#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "comb/behavior.hpp"
#include "comb/morphism.hpp"
#include "comb/object.hpp"

namespace comb {

// A representative of a comb class: pieces f_0..f_n with
//   f_i : M_{i-1} (x) X_i -> M_i (x) Y_i,   M_{-1} = I.
// A closed comb has M_n = I and declares n memories; an open comb exposes
// M_n and declares n + 1.
class FiniteComb {
 public:
  static FiniteComb make(std::vector<Object> inputs, std::vector<Object> outputs,
                         std::vector<Object> memories, std::vector<Morphism> pieces,
                         bool open);

  Backend backend() const { return pieces_.front().backend(); }
  bool open() const { return open_; }
  std::size_t size() const { return pieces_.size(); }  // n + 1

  const std::vector<Object>& inputs() const { return inputs_; }
  const std::vector<Object>& outputs() const { return outputs_; }
  const std::vector<Object>& memories() const { return memories_; }
  const std::vector<Morphism>& pieces() const { return pieces_; }

  Object memory_before(std::size_t i) const;  // M_{i-1}
  Object memory_after(std::size_t i) const;   // M_i (unit at the end when closed)

 private:
  FiniteComb() = default;
  bool open_ = false;
  std::vector<Object> inputs_, outputs_, memories_;
  std::vector<Morphism> pieces_;
};

// A generating move of the dinaturality quotient at memory wire M_i.
//
// IntoNext: the mediator m : M' -> M_i currently ends piece i, that is
//   f_i = (m (x) id) . replacement. The result has memory M', piece i =
//   replacement and piece i+1 = f_{i+1} . (m (x) id).
// IntoPrevious: the mediator m : M_i -> M' currently starts piece i+1, that
//   is f_{i+1} = replacement . (m (x) id). The result has memory M', piece
//   i = (m (x) id) . f_i and piece i+1 = replacement. On the exposed wire of
//   an open comb there is no next piece and no replacement is needed.
enum class SlideDirection { IntoNext, IntoPrevious };

struct SlideMove {
  std::size_t position = 0;
  Morphism mediator;
  std::optional<Morphism> replacement;
  SlideDirection direction = SlideDirection::IntoNext;
};

FiniteComb slide(const FiniteComb& c, const SlideMove& move);

// Plugs g_i : Y_i -> X_{i+1} into the holes of a closed comb:
//   f_n . (id (x) g_{n-1}) . ... . (id (x) g_0) . f_0 : X_0 -> Y_n.
Morphism plug(const FiniteComb& c, const std::vector<Morphism>& fillers);

// Both arguments are closed 1-combs. Nesting fills the outer hole with the
// inner comb; the result has memory M_outer (x) M_inner.
FiniteComb compose_nest_inside(const FiniteComb& outer, const FiniteComb& inner);
// Teeth a_0, b_0, a_1, b_1 as a closed 3-comb with memories
// M_a, M_a (x) M_b, M_b.
FiniteComb compose_interleave(const FiniteComb& a, const FiniteComb& b);

// The 1-comb (id_first, id_second) with unit memory.
FiniteComb identity_one_comb(const Object& first, const Object& second);

struct Lens {
  Morphism view;    // X_0 -> Y_0
  Morphism update;  // X_0 (x) X_1 -> Y_1
};

// Yoneda-reduced form of a closed cartesian 1-comb (f, g):
// view = pi_Y . f, update = g . ((pi_M . f) (x) id).
Lens to_lens(const FiniteComb& c);

// h_i : X_0 (x) ... (x) X_i -> Y_i, open memory discarded.
FiniteCausalForm normal_form_cartesian(const FiniteComb& c);

struct Verdict {
  bool equal = true;
  std::optional<std::size_t> stage;  // first differing stage
  std::string witness;
};

// Normal-form comparison; sound and complete for FinFn.
Verdict equal_cartesian(const FiniteComb& a, const FiniteComb& b);
// Stage-prefix behaviors with open memory discarded (FinStoch exact,
// BigFn on the probe grid, FinFn exact).
Verdict behavior_equal_probe(const FiniteComb& a, const FiniteComb& b,
                             const ProbeGrid& grid = {});

}  // namespace comb
