#include "comb/cartesian.hpp"

#include <map>

#include "comb/error.hpp"

namespace comb {

namespace {

void require_cartesian(Backend backend, const char* what) {
  if (!is_cartesian(backend)) {
    fail(ErrorKind::Unsupported, std::string(what) + " needs a cartesian backend, not " +
                                     std::string(backend_name(backend)));
  }
}

Object theta_before(const ObjectFamily& x, std::size_t n) {
  return n == 0 ? Object::unit(x.backend()) : accumulated(x, n - 1);
}

struct Thread {
  Morphism memory;  // Theta_n -> M_n
  Morphism output;  // Theta_n -> Y_n
};

}  // namespace

CausalForm::CausalForm(ObjectFamily inputs, ObjectFamily outputs,
                       std::function<Morphism(std::size_t)> maps)
    : inputs_(std::move(inputs)), outputs_(std::move(outputs)) {
  require_cartesian(inputs_.backend(), "a causal form");
  maps_ = LazySeq<Morphism>([in = inputs_, out = outputs_, maps = std::move(maps)](std::size_t n) {
    Morphism h = maps(n);
    auto dom = accumulated(in, n);
    if (!(h.domain() == dom) || !(h.codomain() == out[n])) {
      fail(ErrorKind::Type, "causal map " + std::to_string(n) + " is typed " +
                                h.domain().to_string() + " -> " + h.codomain().to_string() +
                                " but should be " + dom.to_string() + " -> " +
                                out[n].to_string());
    }
    return h;
  });
}

FiniteCausalForm CausalForm::prefix(std::size_t depth) const {
  FiniteCausalForm out;
  out.backend = backend();
  for (std::size_t n = 0; n <= depth; ++n) {
    out.inputs.push_back(inputs_[n]);
    out.outputs.push_back(outputs_[n]);
    out.maps.push_back(map(n));
  }
  return out;
}

CausalForm causal_form(const StreamComb& c) {
  require_cartesian(c.backend(), "causal form");
  auto threads = LazySeq<Thread>::recursive([c](std::size_t n, const LazySeq<Thread>& self) {
    const auto& x = c.inputs()[n];
    const auto& y = c.outputs()[n];
    const auto& m = c.memory(n);
    Morphism before = n == 0 ? identity(Object::unit(c.backend())) : self.at(n - 1).memory;
    auto threaded = compose(c.piece(n), tensor(before, identity(x)));
    return Thread{compose(project_left(m, y), threaded),
                  compose(project_right(m, y), threaded)};
  });
  return CausalForm(c.inputs(), c.outputs(),
                    [threads](std::size_t n) { return threads.at(n).output; });
}

StreamComb from_causal_form(const CausalForm& cf) {
  const auto x = cf.inputs();
  auto memory = [x](std::size_t n) { return accumulated(x, n); };
  auto piece = [cf, x](std::size_t n) {
    auto theta = accumulated(x, n);
    return compose(tensor(identity(theta), cf.map(n)), copy(theta));
  };
  return StreamComb(cf.inputs(), cf.outputs(), memory, piece);
}

std::optional<BehaviorDifference> compare(const CausalForm& a, const CausalForm& b,
                                          std::size_t depth, const ProbeGrid& grid) {
  for (std::size_t n = 0; n <= depth; ++n) {
    if (auto diff = first_difference(a.map(n), b.map(n), grid)) {
      return BehaviorDifference{n, *diff};
    }
  }
  return std::nullopt;
}

CausalForm theta_counit(const ObjectFamily& x) {
  return CausalForm(x, x, [x](std::size_t n) {
    return project_right(theta_before(x, n), x[n]);
  });
}

LazySeq<Morphism> theta_comult(const ObjectFamily& x) {
  require_cartesian(x.backend(), "the comultiplication");
  return LazySeq<Morphism>::recursive([x](std::size_t n, const LazySeq<Morphism>& self) {
    if (n == 0) return identity(x[0]);
    auto theta = accumulated(x, n);
    auto earlier = compose(self.at(n - 1), project_left(accumulated(x, n - 1), x[n]));
    return compose(tensor(earlier, identity(theta)), copy(theta));
  });
}

LazySeq<Morphism> theta_map(std::function<Morphism(std::size_t)> u) {
  return LazySeq<Morphism>::recursive(
      [u = std::move(u)](std::size_t n, const LazySeq<Morphism>& self) {
        return n == 0 ? u(0) : tensor(self.at(n - 1), u(n));
      });
}

LazySeq<Morphism> kleisli_extend(const CausalForm& f) {
  return LazySeq<Morphism>::recursive([f](std::size_t n, const LazySeq<Morphism>& self) {
    if (n == 0) return f.map(0);
    const auto& x = f.inputs();
    auto theta = accumulated(x, n);
    auto earlier = compose(self.at(n - 1), project_left(accumulated(x, n - 1), x[n]));
    return compose(tensor(earlier, f.map(n)), copy(theta));
  });
}

CausalForm kleisli_compose(const CausalForm& g, const CausalForm& f) {
  if (auto n = first_mismatch(f.outputs(), g.inputs())) {
    fail(ErrorKind::Type, "Kleisli composition: family mismatch at index " +
                              std::to_string(*n));
  }
  auto extended = kleisli_extend(f);
  return CausalForm(f.inputs(), g.outputs(), [g, extended](std::size_t n) {
    return compose(g.map(n), extended.at(n));
  });
}

StateFamily extract_state_stream(const StreamComb& c, std::size_t depth) {
  if (!c.inputs().is_unit()) {
    fail(ErrorKind::Type, "state extraction needs the constant unit input family, got " +
                              c.inputs().to_string());
  }
  StateFamily sf;
  sf.backend = c.backend();
  for (std::size_t n = 0; n <= depth; ++n) sf.outputs.push_back(c.outputs()[n]);
  if (is_cartesian(c.backend())) {
    auto cf = causal_form(c);
    for (std::size_t n = 0; n <= depth; ++n) sf.values.push_back(cf.map(n));
    return sf;
  }
  auto behavior = behavior_up_to(c, depth);
  for (const auto& stage : behavior.stages) sf.distributions.push_back(stage.row(0));
  return sf;
}

std::optional<std::size_t> check_coherence(const StateFamily& sf, std::size_t depth) {
  if (sf.backend != Backend::FinStoch) return std::nullopt;
  const auto stages = std::min(depth + 1, sf.distributions.size());
  for (std::size_t n = 0; n < stages; ++n) {
    const auto& dist = sf.distributions[n];
    Rational total = 0;
    for (const auto& [outcome, p] : dist) {
      if (p < 0) return n;
      total += p;
    }
    if (total != 1) return n;
    if (n == 0) continue;
    const auto last = sf.outputs[n].cardinality();
    std::map<std::uint64_t, Rational> marginal;
    for (const auto& [outcome, p] : dist) marginal[outcome / last] += p;
    std::erase_if(marginal, [](const auto& e) { return e.second == 0; });
    const auto& previous = sf.distributions[n - 1];
    if (marginal.size() != previous.size()) return n;
    auto it = marginal.begin();
    for (const auto& [outcome, p] : previous) {
      if (it->first != outcome || it->second != p) return n;
      ++it;
    }
  }
  return std::nullopt;
}

}  // namespace comb
