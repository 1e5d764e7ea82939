#include "comb/finite_comb.hpp"

#include "comb/error.hpp"

namespace comb {

namespace {

std::string typing(const Object& a, const Object& b) {
  return a.to_string() + " -> " + b.to_string();
}

void require_closed_one_comb(const FiniteComb& c, const char* what) {
  if (c.open() || c.size() != 2) {
    fail(ErrorKind::Type, std::string(what) + " expects a closed 1-comb, got " +
                              (c.open() ? "an open " : "a closed ") +
                              std::to_string(c.size() - 1) + "-comb");
  }
}

void require_cartesian(const FiniteComb& c, const char* what) {
  if (!is_cartesian(c.backend())) {
    fail(ErrorKind::Unsupported, std::string(what) + " needs a cartesian backend, not " +
                                     std::string(backend_name(c.backend())));
  }
}

void require_same_boundary(const FiniteComb& a, const FiniteComb& b) {
  if (a.backend() != b.backend()) {
    fail(ErrorKind::BackendMismatch, "combs live in different backends");
  }
  if (a.size() != b.size()) {
    fail(ErrorKind::Type, "boundary mismatch: " + std::to_string(a.size()) +
                              " vs " + std::to_string(b.size()) + " stages");
  }
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!(a.inputs()[i] == b.inputs()[i]) || !(a.outputs()[i] == b.outputs()[i])) {
      fail(ErrorKind::Type, "boundary mismatch at stage " + std::to_string(i) + ": " +
                                typing(a.inputs()[i], a.outputs()[i]) + " vs " +
                                typing(b.inputs()[i], b.outputs()[i]));
    }
  }
}

std::vector<Object> memories_with_end(const FiniteComb& c) {
  std::vector<Object> out;
  for (std::size_t i = 0; i < c.size(); ++i) out.push_back(c.memory_after(i));
  return out;
}

}  // namespace

FiniteComb FiniteComb::make(std::vector<Object> inputs, std::vector<Object> outputs,
                            std::vector<Object> memories, std::vector<Morphism> pieces,
                            bool open) {
  if (pieces.empty()) fail(ErrorKind::Type, "a comb needs at least one piece");
  const auto n = pieces.size();
  if (inputs.size() != n || outputs.size() != n) {
    fail(ErrorKind::Type, "a comb with " + std::to_string(n) + " pieces needs " +
                              std::to_string(n) + " inputs and outputs");
  }
  const auto expected_memories = open ? n : n - 1;
  if (memories.size() != expected_memories) {
    fail(ErrorKind::Type, std::string(open ? "an open" : "a closed") + " comb with " +
                              std::to_string(n) + " pieces declares " +
                              std::to_string(expected_memories) + " memories, got " +
                              std::to_string(memories.size()));
  }
  const auto backend = pieces.front().backend();
  auto check_backend = [&](const Object& o) {
    if (o.backend() != backend) {
      fail(ErrorKind::BackendMismatch, "comb mixes backends");
    }
  };
  for (const auto& o : inputs) check_backend(o);
  for (const auto& o : outputs) check_backend(o);
  for (const auto& o : memories) check_backend(o);

  FiniteComb c;
  c.open_ = open;
  c.inputs_ = std::move(inputs);
  c.outputs_ = std::move(outputs);
  c.memories_ = std::move(memories);
  c.pieces_ = std::move(pieces);
  for (std::size_t i = 0; i < n; ++i) {
    const auto& f = c.pieces_[i];
    if (f.backend() != backend) fail(ErrorKind::BackendMismatch, "comb mixes backends");
    auto dom = tensor(c.memory_before(i), c.inputs_[i]);
    auto cod = tensor(c.memory_after(i), c.outputs_[i]);
    if (!(f.domain() == dom) || !(f.codomain() == cod)) {
      fail(ErrorKind::Type, "piece " + std::to_string(i) + " is typed " +
                                typing(f.domain(), f.codomain()) +
                                " but the comb requires " + typing(dom, cod));
    }
  }
  return c;
}

Object FiniteComb::memory_before(std::size_t i) const {
  return i == 0 ? Object::unit(backend()) : memories_[i - 1];
}

Object FiniteComb::memory_after(std::size_t i) const {
  return i < memories_.size() ? memories_[i] : Object::unit(backend());
}

FiniteComb slide(const FiniteComb& c, const SlideMove& move) {
  const auto i = move.position;
  if (i >= c.memories().size()) {
    fail(ErrorKind::Type, "no memory wire at position " + std::to_string(i));
  }
  const bool exposed = i + 1 == c.size();  // the open end of an open comb
  const auto& m = move.mediator;
  const Object& current = c.memories()[i];
  auto pieces = c.pieces();
  auto memories = c.memories();

  if (move.direction == SlideDirection::IntoNext) {
    if (!(m.codomain() == current)) {
      fail(ErrorKind::Type, "mediator codomain " + m.codomain().to_string() +
                                " is not the memory " + current.to_string());
    }
    if (!move.replacement) {
      fail(ErrorKind::Factorization, "sliding into the next piece needs the replacement piece");
    }
    const auto& r = *move.replacement;
    auto recomposed = compose(tensor(m, identity(c.outputs()[i])), *move.replacement);
    if (auto diff = first_difference(recomposed, c.pieces()[i])) {
      fail(ErrorKind::Factorization, "piece " + std::to_string(i) +
                                         " does not factor through the mediator: " + *diff);
    }
    pieces[i] = r;
    if (!exposed) {
      pieces[i + 1] = compose(c.pieces()[i + 1], tensor(m, identity(c.inputs()[i + 1])));
    }
    memories[i] = m.domain();
  } else {
    if (!(m.domain() == current)) {
      fail(ErrorKind::Type, "mediator domain " + m.domain().to_string() +
                                " is not the memory " + current.to_string());
    }
    pieces[i] = compose(tensor(m, identity(c.outputs()[i])), c.pieces()[i]);
    if (!exposed) {
      if (!move.replacement) {
        fail(ErrorKind::Factorization,
             "sliding into the previous piece needs the replacement piece");
      }
      auto recomposed =
          compose(*move.replacement, tensor(m, identity(c.inputs()[i + 1])));
      if (auto diff = first_difference(recomposed, c.pieces()[i + 1])) {
        fail(ErrorKind::Factorization, "piece " + std::to_string(i + 1) +
                                           " does not factor through the mediator: " + *diff);
      }
      pieces[i + 1] = *move.replacement;
    }
    memories[i] = m.codomain();
  }
  return FiniteComb::make(c.inputs(), c.outputs(), std::move(memories), std::move(pieces),
                          c.open());
}

Morphism plug(const FiniteComb& c, const std::vector<Morphism>& fillers) {
  if (c.open()) fail(ErrorKind::Type, "only closed combs can be plugged");
  if (fillers.size() + 1 != c.size()) {
    fail(ErrorKind::Type, "a comb with " + std::to_string(c.size() - 1) +
                              " holes needs that many fillers, got " +
                              std::to_string(fillers.size()));
  }
  Morphism h = c.pieces().front();
  for (std::size_t i = 0; i < fillers.size(); ++i) {
    const auto& g = fillers[i];
    if (!(g.domain() == c.outputs()[i]) || !(g.codomain() == c.inputs()[i + 1])) {
      fail(ErrorKind::Type, "filler " + std::to_string(i) + " is typed " +
                                typing(g.domain(), g.codomain()) + " but the hole is " +
                                typing(c.outputs()[i], c.inputs()[i + 1]));
    }
    h = compose(tensor(identity(c.memories()[i]), g), h);
    h = compose(c.pieces()[i + 1], h);
  }
  return h;
}

FiniteComb compose_nest_inside(const FiniteComb& outer, const FiniteComb& inner) {
  require_closed_one_comb(outer, "nesting");
  require_closed_one_comb(inner, "nesting");
  if (outer.backend() != inner.backend()) {
    fail(ErrorKind::BackendMismatch, "nested combs live in different backends");
  }
  if (!(inner.inputs()[0] == outer.outputs()[0]) ||
      !(inner.outputs()[1] == outer.inputs()[1])) {
    fail(ErrorKind::Type, "boundary mismatch: the outer hole is " +
                              typing(outer.outputs()[0], outer.inputs()[1]) +
                              " but the inner comb spans " +
                              typing(inner.inputs()[0], inner.outputs()[1]));
  }
  const auto& m = outer.memories()[0];
  auto first = compose(tensor(identity(m), inner.pieces()[0]), outer.pieces()[0]);
  auto second = compose(outer.pieces()[1], tensor(identity(m), inner.pieces()[1]));
  return FiniteComb::make({outer.inputs()[0], inner.inputs()[1]},
                          {inner.outputs()[0], outer.outputs()[1]},
                          {tensor(m, inner.memories()[0])}, {first, second}, false);
}

FiniteComb compose_interleave(const FiniteComb& a, const FiniteComb& b) {
  require_closed_one_comb(a, "interleaving");
  require_closed_one_comb(b, "interleaving");
  if (a.backend() != b.backend()) {
    fail(ErrorKind::BackendMismatch, "interleaved combs live in different backends");
  }
  const auto& ma = a.memories()[0];
  const auto& mb = b.memories()[0];
  const auto& x1 = a.inputs()[1];
  const auto& y1 = a.outputs()[1];
  auto p1 = tensor(identity(ma), b.pieces()[0]);
  auto p2 = compose_chain({tensor(identity(ma), swap(mb, x1)),
                           tensor(a.pieces()[1], identity(mb)), swap(y1, mb)});
  return FiniteComb::make({a.inputs()[0], b.inputs()[0], x1, b.inputs()[1]},
                          {a.outputs()[0], b.outputs()[0], y1, b.outputs()[1]},
                          {ma, tensor(ma, mb), mb},
                          {a.pieces()[0], p1, p2, b.pieces()[1]}, false);
}

FiniteComb identity_one_comb(const Object& first, const Object& second) {
  return FiniteComb::make({first, second}, {first, second},
                          {Object::unit(first.backend())},
                          {identity(first), identity(second)}, false);
}

Lens to_lens(const FiniteComb& c) {
  require_closed_one_comb(c, "lens extraction");
  require_cartesian(c, "lens extraction");
  const auto& f = c.pieces()[0];
  const auto& g = c.pieces()[1];
  const auto& m = c.memories()[0];
  const auto& y0 = c.outputs()[0];
  auto view = compose(project_right(m, y0), f);
  auto remembered = compose(project_left(m, y0), f);
  auto update = compose(g, tensor(remembered, identity(c.inputs()[1])));
  return Lens{std::move(view), std::move(update)};
}

FiniteCausalForm normal_form_cartesian(const FiniteComb& c) {
  require_cartesian(c, "normal form");
  FiniteCausalForm cf;
  cf.backend = c.backend();
  cf.inputs = c.inputs();
  cf.outputs = c.outputs();
  CausalThreader threader(c.backend());
  for (std::size_t i = 0; i < c.size(); ++i) {
    cf.maps.push_back(threader.step(c.pieces()[i], c.inputs()[i], c.memory_after(i),
                                    c.outputs()[i]));
  }
  return cf;
}

Verdict equal_cartesian(const FiniteComb& a, const FiniteComb& b) {
  require_same_boundary(a, b);
  auto na = normal_form_cartesian(a);
  auto nb = normal_form_cartesian(b);
  for (std::size_t i = 0; i < na.maps.size(); ++i) {
    if (auto diff = first_difference(na.maps[i], nb.maps[i])) {
      return Verdict{false, i, *diff};
    }
  }
  return {};
}

Verdict behavior_equal_probe(const FiniteComb& a, const FiniteComb& b,
                             const ProbeGrid& grid) {
  require_same_boundary(a, b);
  auto ba = behavior_of_pieces(a.pieces(), a.inputs(), memories_with_end(a), a.outputs());
  auto bb = behavior_of_pieces(b.pieces(), b.inputs(), memories_with_end(b), b.outputs());
  if (auto diff = compare(ba, bb, grid)) return Verdict{false, diff->stage, diff->witness};
  return {};
}

}  // namespace comb
