#include "comb/stream_comb.hpp"

#include "comb/error.hpp"

namespace comb {

namespace {

std::string typing(const Object& a, const Object& b) {
  return a.to_string() + " -> " + b.to_string();
}

void require_same_backend(const StreamComb& a, const StreamComb& b, const char* what) {
  if (a.backend() != b.backend()) {
    fail(ErrorKind::BackendMismatch,
         std::string(what) + " of a " + std::string(backend_name(a.backend())) +
             " comb with a " + std::string(backend_name(b.backend())) + " comb");
  }
}

}  // namespace

StreamComb::StreamComb(ObjectFamily inputs, ObjectFamily outputs, MemoryProducer memory,
                       PieceProducer pieces) {
  if (inputs.backend() != outputs.backend()) {
    fail(ErrorKind::BackendMismatch, "comb families live in different backends");
  }
  auto impl = std::make_shared<Impl>();
  impl->inputs = std::move(inputs);
  impl->outputs = std::move(outputs);
  const auto backend = impl->inputs.backend();
  impl->memories = LazySeq<Object>([backend, memory = std::move(memory)](std::size_t n) {
    Object m = memory(n);
    if (m.backend() != backend) {
      fail(ErrorKind::BackendMismatch, "memory " + std::to_string(n) + " is a " +
                                           std::string(backend_name(m.backend())) +
                                           " object");
    }
    return m;
  });
  // The checking producer reads the memoized memories through a weak
  // reference to avoid a reference cycle.
  std::weak_ptr<Impl> weak = impl;
  impl->pieces = LazySeq<Morphism>([weak, pieces = std::move(pieces)](std::size_t n) {
    auto self = weak.lock();
    Morphism f = pieces(n);
    const Object before = n == 0 ? Object::unit(self->inputs.backend())
                                 : self->memories.at(n - 1);
    auto dom = tensor(before, self->inputs[n]);
    auto cod = tensor(self->memories.at(n), self->outputs[n]);
    if (!(f.domain() == dom) || !(f.codomain() == cod)) {
      fail(ErrorKind::Type, "stage " + std::to_string(n) + " piece is typed " +
                                typing(f.domain(), f.codomain()) +
                                " but the comb requires " + typing(dom, cod));
    }
    return f;
  });
  impl_ = std::move(impl);
}

Object StreamComb::memory_before(std::size_t n) const {
  return n == 0 ? Object::unit(backend()) : memory(n - 1);
}

FiniteComb truncate(const StreamComb& c, std::size_t n) {
  std::vector<Object> inputs, outputs, memories;
  std::vector<Morphism> pieces;
  for (std::size_t i = 0; i <= n; ++i) {
    inputs.push_back(c.inputs()[i]);
    outputs.push_back(c.outputs()[i]);
    memories.push_back(c.memory(i));
    pieces.push_back(c.piece(i));
  }
  return FiniteComb::make(std::move(inputs), std::move(outputs), std::move(memories),
                          std::move(pieces), true);
}

StreamComb compose_seq(const StreamComb& g, const StreamComb& f) {
  require_same_backend(g, f, "sequential composition");
  if (auto n = first_mismatch(f.outputs(), g.inputs())) {
    fail(ErrorKind::Type, "family mismatch at index " + std::to_string(*n) +
                              ": the first comb outputs " + f.outputs()[*n].to_string() +
                              " but the second expects " + g.inputs()[*n].to_string());
  }
  auto memory = [f, g](std::size_t n) { return tensor(f.memory(n), g.memory(n)); };
  auto piece = [f, g](std::size_t n) {
    const auto mf = f.memory_before(n);
    const auto mg = g.memory_before(n);
    const auto mf2 = f.memory(n);
    const auto& x = f.inputs()[n];
    const auto& y = f.outputs()[n];
    // (Mf Mg) X -> Mf X Mg -> Mf' Y Mg -> Mf' Mg Y -> Mf' Mg' Z
    return compose_chain({tensor(identity(mf), swap(mg, x)),
                          tensor(f.piece(n), identity(mg)),
                          tensor(identity(mf2), swap(y, mg)),
                          tensor(identity(mf2), g.piece(n))});
  };
  return StreamComb(f.inputs(), g.outputs(), memory, piece);
}

StreamComb tensor_par(const StreamComb& f, const StreamComb& g) {
  require_same_backend(f, g, "parallel composition");
  auto memory = [f, g](std::size_t n) { return tensor(f.memory(n), g.memory(n)); };
  auto piece = [f, g](std::size_t n) {
    const auto mf = f.memory_before(n);
    const auto mg = g.memory_before(n);
    const auto& x = f.inputs()[n];
    const auto& y2 = g.inputs()[n];
    const auto mf2 = f.memory(n);
    const auto mg2 = g.memory(n);
    const auto& y = f.outputs()[n];
    const auto& yg = g.outputs()[n];
    // Mf Mg X X' -> Mf X Mg X' -> Mf' Y Mg' Y' -> Mf' Mg' Y Y'
    return compose_chain({tensor(tensor(identity(mf), swap(mg, x)), identity(y2)),
                          tensor(f.piece(n), g.piece(n)),
                          tensor(tensor(identity(mf2), swap(y, mg2)), identity(yg))});
  };
  return StreamComb(tensor(f.inputs(), g.inputs()), tensor(f.outputs(), g.outputs()),
                    memory, piece);
}

StreamComb lift_family(ObjectFamily inputs, ObjectFamily outputs,
                       std::function<Morphism(std::size_t)> maps) {
  const auto backend = inputs.backend();
  return StreamComb(std::move(inputs), std::move(outputs),
                    [backend](std::size_t) { return Object::unit(backend); },
                    std::move(maps));
}

StreamComb lift(std::vector<Morphism> prefix, Morphism tail) {
  std::vector<Object> in, out;
  for (const auto& m : prefix) {
    if (m.backend() != tail.backend()) {
      fail(ErrorKind::BackendMismatch, "lifted family mixes backends");
    }
    in.push_back(m.domain());
    out.push_back(m.codomain());
  }
  ObjectFamily inputs(std::move(in), tail.domain());
  ObjectFamily outputs(std::move(out), tail.codomain());
  return lift_family(std::move(inputs), std::move(outputs),
                     [prefix = std::move(prefix), tail = std::move(tail)](std::size_t n) {
                       return n < prefix.size() ? prefix[n] : tail;
                     });
}

StreamComb lift_identity(const ObjectFamily& family) {
  return lift_family(family, family, [family](std::size_t n) { return identity(family[n]); });
}

Behavior behavior_up_to(const StreamComb& c, std::size_t n) {
  std::vector<Morphism> pieces;
  std::vector<Object> inputs, memories, outputs;
  for (std::size_t i = 0; i <= n; ++i) {
    pieces.push_back(c.piece(i));
    inputs.push_back(c.inputs()[i]);
    memories.push_back(c.memory(i));
    outputs.push_back(c.outputs()[i]);
  }
  return behavior_of_pieces(pieces, inputs, memories, outputs);
}

}  // namespace comb
