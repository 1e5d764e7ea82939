#include "comb/random.hpp"

#include <algorithm>
#include <numeric>

#include "comb/error.hpp"

namespace comb::random {

namespace {

std::size_t uniform(Rng& rng, std::size_t lo, std::size_t hi) {
  return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

bigfn::Expr tensor_all(const std::vector<bigfn::Expr>& parts) {
  if (parts.empty()) return bigfn::id(0);
  auto out = parts.front();
  for (std::size_t k = 1; k < parts.size(); ++k) out = bigfn::tensor(out, parts[k]);
  return out;
}

// Z^a -> Z picking wire k.
bigfn::Expr select(std::size_t a, std::size_t k) {
  return tensor_all({bigfn::discard(k), bigfn::id(1), bigfn::discard(a - k - 1)});
}

// Z^a -> Z^(a*b), b copies of the input.
bigfn::Expr copies(std::size_t a, std::size_t b) {
  if (b == 0) return bigfn::discard(a);
  auto out = bigfn::id(a);
  for (std::size_t k = 1; k < b; ++k) {
    out = bigfn::compose(bigfn::tensor(out, bigfn::id(a)), bigfn::copy(a));
  }
  return out;
}

bigfn::Expr random_component(Rng& rng, std::size_t a) {
  const auto kind = a == 0 ? uniform(rng, 3, 4) : uniform(rng, 0, 4);
  switch (kind) {
    case 0: return select(a, uniform(rng, 0, a - 1));
    case 1: {
      auto both = bigfn::tensor(select(a, uniform(rng, 0, a - 1)),
                                select(a, uniform(rng, 0, a - 1)));
      return bigfn::compose(bigfn::add(), bigfn::compose(both, bigfn::copy(a)));
    }
    case 2: return bigfn::compose(bigfn::succ(), select(a, uniform(rng, 0, a - 1)));
    case 3: return bigfn::compose(bigfn::zero(), bigfn::discard(a));
    default: return bigfn::compose(bigfn::one(), bigfn::discard(a));
  }
}

std::uint64_t memory_part(std::uint64_t index, std::uint64_t outputs) { return index / outputs; }

}  // namespace

Rng derive(std::uint64_t seed, std::uint64_t a, std::uint64_t b) {
  auto lo = [](std::uint64_t v) { return static_cast<std::uint32_t>(v); };
  auto hi = [](std::uint64_t v) { return static_cast<std::uint32_t>(v >> 32); };
  std::seed_seq seq{lo(seed), hi(seed), lo(a), hi(a), lo(b), hi(b)};
  return Rng(seq);
}

Object sized_set(Backend backend, std::size_t k) {
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < k; ++i) labels.push_back("s" + std::to_string(i));
  return Object::finite(backend, "S" + std::to_string(k), std::move(labels));
}

Object object(Rng& rng, Backend backend, const Limits& limits) {
  if (backend == Backend::BigFn) {
    return Object::integers(uniform(rng, limits.allow_unit ? 0 : 1, limits.max_arity));
  }
  if (limits.allow_unit && uniform(rng, 0, 3) == 0) return Object::unit(backend);
  return sized_set(backend, uniform(rng, 1, limits.max_set));
}

ObjectFamily family(Rng& rng, Backend backend, const Limits& limits) {
  std::vector<Object> prefix(uniform(rng, 0, limits.max_prefix));
  for (auto& o : prefix) o = object(rng, backend, limits);
  auto tail = object(rng, backend, limits);
  return ObjectFamily(std::move(prefix), std::move(tail));
}

Morphism morphism(Rng& rng, const Object& dom, const Object& cod) {
  switch (dom.backend()) {
    case Backend::FinFn: {
      std::vector<std::uint64_t> image(dom.cardinality());
      for (auto& v : image) v = uniform(rng, 0, cod.cardinality() - 1);
      return Morphism::table(dom, cod, std::move(image));
    }
    case Backend::FinStoch: {
      const auto n = cod.cardinality();
      std::vector<StochRow> rows(dom.cardinality());
      for (auto& row : rows) {
        const auto a = uniform(rng, 0, n - 1);
        if (n == 1 || uniform(rng, 0, 1) == 0) {
          row.emplace_back(a, Rational(1));
          continue;
        }
        auto b = uniform(rng, 0, n - 2);
        if (b >= a) ++b;
        const auto den = uniform(rng, 2, 4);
        const Rational p(static_cast<long>(uniform(rng, 1, den - 1)), static_cast<long>(den));
        row.emplace_back(a, p);
        row.emplace_back(b, 1 - p);
      }
      return Morphism::stochastic(dom, cod, std::move(rows));
    }
    case Backend::BigFn: {
      const auto a = dom.arity();
      const auto b = cod.arity();
      std::vector<bigfn::Expr> parts;
      for (std::size_t j = 0; j < b; ++j) parts.push_back(random_component(rng, a));
      if (b == 0) return Morphism::big(bigfn::discard(a));
      return Morphism::big(bigfn::compose(tensor_all(parts), copies(a, b)));
    }
  }
  fail(ErrorKind::Unsupported, "unknown backend");
}

StreamComb stream_comb(std::uint64_t seed, const ObjectFamily& inputs,
                       const ObjectFamily& outputs, const Limits& limits) {
  const auto backend = inputs.backend();
  auto memory = [seed, backend, limits](std::size_t n) {
    auto rng = derive(seed, n, 1);
    return object(rng, backend, limits);
  };
  auto piece = [seed, inputs, outputs, memory, backend](std::size_t n) {
    auto before = n == 0 ? Object::unit(backend) : memory(n - 1);
    auto rng = derive(seed, n, 2);
    return morphism(rng, tensor(before, inputs[n]), tensor(memory(n), outputs[n]));
  };
  return StreamComb(inputs, outputs, memory, piece);
}

CausalForm causal_form(std::uint64_t seed, const ObjectFamily& inputs,
                       const ObjectFamily& outputs) {
  return CausalForm(inputs, outputs, [seed, inputs, outputs](std::size_t n) {
    auto rng = derive(seed, n, 3);
    return morphism(rng, accumulated(inputs, n), outputs[n]);
  });
}

FiniteComb finite_comb(Rng& rng, Backend backend, std::size_t pieces, bool open,
                       const Limits& limits) {
  std::vector<Object> in(pieces), out(pieces), mem(open ? pieces : pieces - 1);
  for (auto& o : in) o = object(rng, backend, limits);
  for (auto& o : out) o = object(rng, backend, limits);
  for (auto& o : mem) o = object(rng, backend, limits);
  auto mem_at = [&](std::size_t i) { return i < mem.size() ? mem[i] : Object::unit(backend); };
  std::vector<Morphism> fs;
  for (std::size_t i = 0; i < pieces; ++i) {
    auto before = i == 0 ? Object::unit(backend) : mem[i - 1];
    fs.push_back(morphism(rng, tensor(before, in[i]), tensor(mem_at(i), out[i])));
  }
  return FiniteComb::make(std::move(in), std::move(out), std::move(mem), std::move(fs), open);
}

SlidePair slide_pair(Rng& rng, const FiniteComb& c, const Limits& limits) {
  if (c.memories().empty()) return {c, c};
  const auto backend = c.backend();
  const auto i = uniform(rng, 0, c.memories().size() - 1);
  const bool exposed = i + 1 == c.size();
  const auto dir = uniform(rng, 0, 1) == 0 ? SlideDirection::IntoNext
                                           : SlideDirection::IntoPrevious;
  const Object current = c.memories()[i];
  SlideMove move;
  move.position = i;
  move.direction = dir;

  if (backend != Backend::FinFn) {
    auto pieces = c.pieces();
    auto mid = object(rng, backend, limits);
    if (dir == SlideDirection::IntoNext) {
      move.mediator = morphism(rng, mid, current);
      auto r = morphism(rng, pieces[i].domain(), tensor(mid, c.outputs()[i]));
      pieces[i] = compose(tensor(move.mediator, identity(c.outputs()[i])), r);
      move.replacement = r;
    } else {
      move.mediator = morphism(rng, current, mid);
      if (!exposed) {
        auto s = morphism(rng, tensor(mid, c.inputs()[i + 1]), pieces[i + 1].codomain());
        pieces[i + 1] = compose(s, tensor(move.mediator, identity(c.inputs()[i + 1])));
        move.replacement = s;
      }
    }
    auto before = FiniteComb::make(c.inputs(), c.outputs(), c.memories(), std::move(pieces),
                                   c.open());
    return {before, slide(before, move)};
  }

  const auto k = current.cardinality();
  const auto mid = sized_set(backend, k + uniform(rng, 0, 1));
  const auto k2 = mid.cardinality();
  if (dir == SlideDirection::IntoNext) {
    // Surjection mid -> current, and a lift of piece i through it.
    std::vector<std::uint64_t> targets(k2);
    std::iota(targets.begin(), targets.begin() + k, 0);
    for (auto j = k; j < k2; ++j) targets[j] = uniform(rng, 0, k - 1);
    std::shuffle(targets.begin(), targets.end(), rng);
    move.mediator = Morphism::table(mid, current, targets);
    std::vector<std::vector<std::uint64_t>> preimages(k);
    for (std::uint64_t j = 0; j < k2; ++j) preimages[targets[j]].push_back(j);
    const auto& f = c.pieces()[i];
    const auto ny = c.outputs()[i].cardinality();
    std::vector<std::uint64_t> image(f.domain().cardinality());
    for (std::uint64_t e = 0; e < image.size(); ++e) {
      const auto v = f.apply(e);
      const auto& pre = preimages[memory_part(v, ny)];
      image[e] = pre[uniform(rng, 0, pre.size() - 1)] * ny + v % ny;
    }
    move.replacement = Morphism::table(f.domain(), tensor(mid, c.outputs()[i]), image);
  } else {
    // Injection current -> mid, and an extension of piece i+1 along it.
    std::vector<std::uint64_t> slots(k2);
    std::iota(slots.begin(), slots.end(), 0);
    std::shuffle(slots.begin(), slots.end(), rng);
    slots.resize(k);
    move.mediator = Morphism::table(current, mid, slots);
    if (!exposed) {
      const auto& g = c.pieces()[i + 1];
      const auto nx = c.inputs()[i + 1].cardinality();
      const auto dom = tensor(mid, c.inputs()[i + 1]);
      const auto ncod = g.codomain().cardinality();
      std::vector<std::uint64_t> image(dom.cardinality());
      for (auto& v : image) v = uniform(rng, 0, ncod - 1);
      for (std::uint64_t a = 0; a < k; ++a) {
        for (std::uint64_t x = 0; x < nx; ++x) image[slots[a] * nx + x] = g.apply(a * nx + x);
      }
      move.replacement = Morphism::table(dom, g.codomain(), image);
    }
  }
  return {c, slide(c, move)};
}

std::vector<Morphism> all_functions(const Object& domain, const Object& codomain) {
  const auto n = domain.cardinality();
  const auto m = codomain.cardinality();
  std::vector<Morphism> out;
  std::vector<std::uint64_t> image(n, 0);
  while (true) {
    out.push_back(Morphism::table(domain, codomain, image));
    std::size_t pos = 0;
    while (pos < n && ++image[pos] == m) image[pos++] = 0;
    if (pos == n) break;
  }
  return out;
}

}  // namespace comb::random
