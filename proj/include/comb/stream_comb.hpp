#pragma once

#include <cstddef>
#include <functional>
#include <memory>
#include <vector>

#include "comb/behavior.hpp"
#include "comb/family.hpp"
#include "comb/finite_comb.hpp"
#include "comb/lazy_seq.hpp"
#include "comb/morphism.hpp"

namespace comb {

// An infinite comb X -> Y given by a deterministic stage producer:
//   f_n : M_{n-1} (x) X_n -> M_n (x) Y_n,   M_{-1} = I.
// Memories and pieces are produced on first query and memoized; every piece
// is type-checked against the families when it is produced.
class StreamComb {
 public:
  using PieceProducer = std::function<Morphism(std::size_t)>;
  using MemoryProducer = std::function<Object(std::size_t)>;

  StreamComb(ObjectFamily inputs, ObjectFamily outputs, MemoryProducer memory,
             PieceProducer pieces);

  Backend backend() const { return impl_->inputs.backend(); }
  const ObjectFamily& inputs() const { return impl_->inputs; }
  const ObjectFamily& outputs() const { return impl_->outputs; }

  const Object& memory(std::size_t n) const { return impl_->memories.at(n); }
  Object memory_before(std::size_t n) const;
  const Morphism& piece(std::size_t n) const { return impl_->pieces.at(n); }

 private:
  struct Impl {
    ObjectFamily inputs;
    ObjectFamily outputs;
    LazySeq<Object> memories;
    LazySeq<Morphism> pieces;
  };
  std::shared_ptr<const Impl> impl_;
};

// The open comb f_0..f_n with exposed memory M_n.
FiniteComb truncate(const StreamComb& c, std::size_t n);

// g after f: memory M^f_n (x) M^g_n.
StreamComb compose_seq(const StreamComb& g, const StreamComb& f);
StreamComb tensor_par(const StreamComb& f, const StreamComb& g);

// Unit memories, pieces f_n : X_n -> Y_n.
StreamComb lift_family(ObjectFamily inputs, ObjectFamily outputs,
                       std::function<Morphism(std::size_t)> maps);
// Eventually constant family of maps: prefix, then tail forever.
StreamComb lift(std::vector<Morphism> prefix, Morphism tail);
StreamComb lift_identity(const ObjectFamily& family);

// Stages 0..n; see Behavior.
Behavior behavior_up_to(const StreamComb& c, std::size_t n);

}  // namespace comb
