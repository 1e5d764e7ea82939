#include "comb/behavior.hpp"

#include <map>

#include "comb/error.hpp"

namespace comb {

CausalThreader::CausalThreader(Backend backend)
    : theta_(Object::unit(backend)), memory_(identity(Object::unit(backend))) {
  if (!is_cartesian(backend)) {
    fail(ErrorKind::Unsupported, "causal normal forms need a cartesian backend, not " +
                                     std::string(backend_name(backend)));
  }
}

Morphism CausalThreader::step(const Morphism& piece, const Object& input,
                              const Object& memory, const Object& output) {
  // P_i = f_i . (m_{i-1} (x) id_X) : Theta_i -> M_i (x) Y_i
  auto threaded = compose(piece, tensor(memory_, identity(input)));
  auto h = compose(project_right(memory, output), threaded);
  memory_ = compose(project_left(memory, output), threaded);
  theta_ = tensor(theta_, input);
  return h;
}

std::optional<BehaviorDifference> compare(const Behavior& a, const Behavior& b,
                                          const ProbeGrid& grid) {
  const auto n = std::min(a.stages.size(), b.stages.size());
  for (std::size_t i = 0; i < n; ++i) {
    if (auto diff = first_difference(a.stages[i], b.stages[i], grid)) {
      return BehaviorDifference{i, *diff};
    }
  }
  if (a.stages.size() != b.stages.size()) {
    return BehaviorDifference{n, "behaviors have different depths"};
  }
  return std::nullopt;
}

std::vector<Morphism> stochastic_joint_behavior(const std::vector<Morphism>& pieces,
                                                const std::vector<Object>& inputs,
                                                const std::vector<Object>& outputs) {
  // Each row of the running kernel maps (output prefix, memory) to mass.
  using Key = std::pair<std::uint64_t, std::uint64_t>;
  using Dist = std::map<Key, Rational>;
  std::vector<Dist> rows(1);
  rows[0][{0, 0}] = 1;
  Object theta = Object::unit(Backend::FinStoch);
  Object joint = Object::unit(Backend::FinStoch);
  std::vector<Morphism> stages;
  stages.reserve(pieces.size());

  for (std::size_t i = 0; i < pieces.size(); ++i) {
    const auto& f = pieces[i];
    if (f.backend() != Backend::FinStoch) {
      fail(ErrorKind::BackendMismatch, "joint behavior expects finstoch pieces");
    }
    const auto nx = inputs[i].cardinality();
    const auto ny = outputs[i].cardinality();
    std::vector<Dist> next(rows.size() * nx);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      for (std::uint64_t x = 0; x < nx; ++x) {
        auto& out = next[r * nx + x];
        for (const auto& [key, p] : rows[r]) {
          const auto [prefix, mem] = key;
          for (const auto& [col, q] : f.row(mem * nx + x)) {
            out[{prefix * ny + col % ny, col / ny}] += p * q;
          }
        }
      }
    }
    rows = std::move(next);
    theta = tensor(theta, inputs[i]);
    joint = tensor(joint, outputs[i]);

    std::vector<StochRow> marginal(rows.size());
    for (std::size_t r = 0; r < rows.size(); ++r) {
      std::map<std::uint64_t, Rational> acc;
      for (const auto& [key, p] : rows[r]) acc[key.first] += p;
      marginal[r].assign(acc.begin(), acc.end());
    }
    stages.push_back(Morphism::stochastic(theta, joint, std::move(marginal)));
  }
  return stages;
}

Behavior behavior_of_pieces(const std::vector<Morphism>& pieces,
                            const std::vector<Object>& inputs,
                            const std::vector<Object>& memories,
                            const std::vector<Object>& outputs) {
  if (pieces.empty()) fail(ErrorKind::Usage, "behavior of an empty comb");
  Behavior b;
  b.backend = pieces.front().backend();
  if (b.backend == Backend::FinStoch) {
    b.stages = stochastic_joint_behavior(pieces, inputs, outputs);
    return b;
  }
  CausalThreader threader(b.backend);
  for (std::size_t i = 0; i < pieces.size(); ++i) {
    b.stages.push_back(threader.step(pieces[i], inputs[i], memories[i], outputs[i]));
  }
  return b;
}

}  // namespace comb
