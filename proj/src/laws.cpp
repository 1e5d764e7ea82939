#include "comb/laws.hpp"

#include "comb/cartesian.hpp"
#include "comb/delay_feedback.hpp"
#include "comb/error.hpp"
#include "comb/finite_comb.hpp"

namespace comb::laws {

namespace {

using random::Rng;

// Largest X_0 (x) ... (x) X_depth the randomized suites will tabulate.
constexpr std::uint64_t kInputBudget = 20000;

template <class Check>
Result run(const std::string& name, const Config& cfg, std::uint64_t tag, Check check) {
  Result r;
  r.name = name;
  for (std::size_t k = 0; k < cfg.cases; ++k) {
    auto rng = random::derive(cfg.seed, tag, k);
    std::optional<std::string> failure;
    try {
      failure = check(rng);
    } catch (const std::exception& e) {
      failure = std::string("exception: ") + e.what();
    }
    ++r.cases;
    if (failure) {
      if (r.failures++ == 0) r.first_failure = "case " + std::to_string(k) + ": " + *failure;
    }
  }
  return r;
}

bool fits(const ObjectFamily& x, std::size_t depth) {
  if (!is_finite(x.backend())) return true;
  std::uint64_t total = 1;
  for (std::size_t n = 0; n <= depth; ++n) {
    total *= x[n].cardinality();
    if (total > kInputBudget) return false;
  }
  return true;
}

// A random family whose accumulated objects stay within budget, alone and
// tensored with the given companions.
ObjectFamily input_family(Rng& rng, const Config& cfg, std::size_t depth,
                          std::initializer_list<ObjectFamily> companions = {}) {
  for (int attempt = 0; attempt < 64; ++attempt) {
    auto x = random::family(rng, cfg.backend, cfg.limits);
    auto whole = x;
    for (const auto& c : companions) whole = tensor(whole, c);
    if (fits(whole, depth)) return x;
  }
  return ObjectFamily::unit(cfg.backend);
}

ObjectFamily any_family(Rng& rng, const Config& cfg) {
  return random::family(rng, cfg.backend, cfg.limits);
}

StreamComb comb(Rng& rng, const Config& cfg, const ObjectFamily& in, const ObjectFamily& out) {
  return random::stream_comb(rng(), in, out, cfg.limits);
}

std::optional<std::string> prefixed(const char* what, std::optional<std::string> diff) {
  if (!diff) return std::nullopt;
  return std::string(what) + ": " + *diff;
}

std::optional<std::string> compare_maps(const std::vector<Morphism>& a,
                                        const std::vector<Morphism>& b,
                                        const ProbeGrid& grid) {
  if (a.size() != b.size()) return "different stage counts";
  for (std::size_t n = 0; n < a.size(); ++n) {
    if (auto d = first_difference(a[n], b[n], grid)) {
      return "stage " + std::to_string(n) + ": " + *d;
    }
  }
  return std::nullopt;
}

ObjectFamily theta_family(const ObjectFamily& x, std::size_t depth) {
  std::vector<Object> prefix;
  for (std::size_t n = 0; n <= depth; ++n) prefix.push_back(accumulated(x, n));
  auto tail = prefix.back();
  return ObjectFamily(std::move(prefix), std::move(tail));
}

std::optional<std::string> plug_difference(const FiniteComb& a, const FiniteComb& b) {
  const auto holes = a.size() - 1;
  std::vector<std::vector<Morphism>> choices;
  for (std::size_t i = 0; i < holes; ++i) {
    choices.push_back(random::all_functions(a.outputs()[i], a.inputs()[i + 1]));
  }
  std::vector<std::size_t> pick(holes, 0);
  while (true) {
    std::vector<Morphism> fillers;
    for (std::size_t i = 0; i < holes; ++i) fillers.push_back(choices[i][pick[i]]);
    if (auto d = first_difference(plug(a, fillers), plug(b, fillers))) {
      return "plug differs: " + *d;
    }
    std::size_t pos = 0;
    while (pos < holes && ++pick[pos] == choices[pos].size()) pick[pos++] = 0;
    if (pos == holes) break;
  }
  return std::nullopt;
}

std::optional<std::string> finfn_slide_difference(const FiniteComb& a, const FiniteComb& b) {
  if (auto d = compare_maps(normal_form_cartesian(a).maps, normal_form_cartesian(b).maps, {})) {
    return "normal form " + *d;
  }
  if (!a.open()) {
    if (auto d = plug_difference(a, b)) return d;
    if (a.size() == 2) {
      auto la = to_lens(a), lb = to_lens(b);
      if (auto d = first_difference(la.view, lb.view)) return "lens view: " + *d;
      if (auto d = first_difference(la.update, lb.update)) return "lens update: " + *d;
    }
  }
  return std::nullopt;
}

}  // namespace

std::optional<std::string> behavior_difference(const StreamComb& a, const StreamComb& b,
                                               std::size_t depth, const ProbeGrid& grid) {
  for (std::size_t n = 0; n <= depth; ++n) {
    if (!(a.inputs()[n] == b.inputs()[n]) || !(a.outputs()[n] == b.outputs()[n])) {
      return "stage " + std::to_string(n) + ": boundary " + a.inputs()[n].to_string() +
             " -> " + a.outputs()[n].to_string() + " vs " + b.inputs()[n].to_string() +
             " -> " + b.outputs()[n].to_string();
    }
  }
  if (auto d = compare(behavior_up_to(a, depth), behavior_up_to(b, depth), grid)) {
    return "stage " + std::to_string(d->stage) + ": " + d->witness;
  }
  return std::nullopt;
}

Result seq_associativity(const Config& cfg) {
  return run("sequential associativity", cfg, 1, [&](Rng& rng) {
    auto x = input_family(rng, cfg, cfg.depth);
    auto y = any_family(rng, cfg), z = any_family(rng, cfg), w = any_family(rng, cfg);
    auto f = comb(rng, cfg, x, y), g = comb(rng, cfg, y, z), h = comb(rng, cfg, z, w);
    return behavior_difference(compose_seq(h, compose_seq(g, f)),
                               compose_seq(compose_seq(h, g), f), cfg.depth, cfg.grid);
  });
}

Result seq_unit(const Config& cfg) {
  return run("sequential unit", cfg, 2, [&](Rng& rng) -> std::optional<std::string> {
    auto x = input_family(rng, cfg, cfg.depth);
    auto y = any_family(rng, cfg);
    auto f = comb(rng, cfg, x, y);
    if (auto d = behavior_difference(compose_seq(lift_identity(y), f), f, cfg.depth, cfg.grid)) {
      return "left unit " + *d;
    }
    return prefixed("right unit",
                    behavior_difference(compose_seq(f, lift_identity(x)), f, cfg.depth, cfg.grid));
  });
}

Result interchange(const Config& cfg) {
  return run("interchange", cfg, 3, [&](Rng& rng) {
    auto x1 = input_family(rng, cfg, cfg.depth);
    auto x2 = input_family(rng, cfg, cfg.depth, {x1});
    auto y1 = any_family(rng, cfg), y2 = any_family(rng, cfg);
    auto z1 = any_family(rng, cfg), z2 = any_family(rng, cfg);
    auto f1 = comb(rng, cfg, x1, y1), g1 = comb(rng, cfg, y1, z1);
    auto f2 = comb(rng, cfg, x2, y2), g2 = comb(rng, cfg, y2, z2);
    return behavior_difference(compose_seq(tensor_par(g1, g2), tensor_par(f1, f2)),
                               tensor_par(compose_seq(g1, f1), compose_seq(g2, f2)), cfg.depth,
                               cfg.grid);
  });
}

Result par_associativity(const Config& cfg) {
  return run("parallel associativity", cfg, 4, [&](Rng& rng) {
    auto x1 = input_family(rng, cfg, cfg.depth);
    auto x2 = input_family(rng, cfg, cfg.depth, {x1});
    auto x3 = input_family(rng, cfg, cfg.depth, {x1, x2});
    auto f = comb(rng, cfg, x1, any_family(rng, cfg));
    auto g = comb(rng, cfg, x2, any_family(rng, cfg));
    auto h = comb(rng, cfg, x3, any_family(rng, cfg));
    return behavior_difference(tensor_par(tensor_par(f, g), h), tensor_par(f, tensor_par(g, h)),
                               cfg.depth, cfg.grid);
  });
}

Result trace_law(const Config& cfg) {
  return run("trace-like feedback law", cfg, 5, [&](Rng& rng) {
    auto a = input_family(rng, cfg, cfg.depth);
    auto b = any_family(rng, cfg), x = any_family(rng, cfg), y = any_family(rng, cfg);
    auto f = comb(rng, cfg, tensor(delay_family(y), a), tensor(x, b));
    auto g = comb(rng, cfg, x, y);
    auto lhs = feedback(y, a, b, compose_seq(tensor_par(g, lift_identity(b)), f));
    auto rhs = feedback(x, a, b, compose_seq(f, tensor_par(delay_comb(g), lift_identity(a))));
    return behavior_difference(lhs, rhs, cfg.depth, cfg.grid);
  });
}

Result delay_functoriality(const Config& cfg) {
  return run("delay functoriality", cfg, 6, [&](Rng& rng) -> std::optional<std::string> {
    auto x = input_family(rng, cfg, cfg.depth);
    auto y = any_family(rng, cfg), z = any_family(rng, cfg);
    auto f = comb(rng, cfg, x, y), g = comb(rng, cfg, y, z);
    if (auto d = behavior_difference(delay_comb(compose_seq(g, f)),
                                     compose_seq(delay_comb(g), delay_comb(f)), cfg.depth,
                                     cfg.grid)) {
      return "composite " + *d;
    }
    return prefixed("identity", behavior_difference(delay_comb(lift_identity(x)),
                                                    lift_identity(delay_family(x)), cfg.depth,
                                                    cfg.grid));
  });
}

Result causal_round_trip(const Config& cfg) {
  return run("causal form round trip", cfg, 7, [&](Rng& rng) -> std::optional<std::string> {
    auto x = input_family(rng, cfg, cfg.depth);
    auto y = any_family(rng, cfg);
    auto cf = random::causal_form(rng(), x, y);
    if (auto d = compare(causal_form(from_causal_form(cf)), cf, cfg.depth, cfg.grid)) {
      return "causalForm . fromCausalForm at stage " + std::to_string(d->stage) + ": " +
             d->witness;
    }
    auto c = comb(rng, cfg, x, y);
    return prefixed("fromCausalForm . causalForm",
                    behavior_difference(from_causal_form(causal_form(c)), c, cfg.depth, cfg.grid));
  });
}

Result open_normal_form(const Config& cfg) {
  return run("open normal form of truncations", cfg, 8,
             [&](Rng& rng) -> std::optional<std::string> {
               auto x = input_family(rng, cfg, cfg.depth);
               auto c = comb(rng, cfg, x, any_family(rng, cfg));
               auto cf = causal_form(c);
               for (std::size_t n = 0; n <= cfg.depth; ++n) {
                 auto d = compare_maps(normal_form_cartesian(truncate(c, n)).maps,
                                       cf.prefix(n).maps, cfg.grid);
                 if (d) return "truncation " + std::to_string(n) + " " + *d;
               }
               return std::nullopt;
             });
}

Result comonad_laws(const Config& cfg) {
  return run("comonad laws", cfg, 9, [&](Rng& rng) -> std::optional<std::string> {
    auto x = input_family(rng, cfg, cfg.depth);
    auto y = any_family(rng, cfg), z = any_family(rng, cfg), w = any_family(rng, cfg);
    auto f = random::causal_form(rng(), x, y);
    auto g = random::causal_form(rng(), y, z);
    auto h = random::causal_form(rng(), z, w);
    // Co-Kleisli triple form: eps# = id, eps . f# = f, (g . f)# = g# . f#,
    // which gives the unit and associativity laws of Kleisli composition.
    auto eps_x = theta_counit(x);
    auto eps_ext = kleisli_extend(eps_x);
    for (std::size_t n = 0; n <= cfg.depth; ++n) {
      if (auto d = first_difference(eps_ext.at(n), identity(accumulated(x, n)), cfg.grid)) {
        return "extension of the counit at stage " + std::to_string(n) + ": " + *d;
      }
    }
    if (auto d = compare(kleisli_compose(theta_counit(y), f), f, cfg.depth, cfg.grid)) {
      return "left counit at stage " + std::to_string(d->stage) + ": " + d->witness;
    }
    if (auto d = compare(kleisli_compose(f, eps_x), f, cfg.depth, cfg.grid)) {
      return "right counit at stage " + std::to_string(d->stage) + ": " + d->witness;
    }
    if (auto d = compare(kleisli_compose(h, kleisli_compose(g, f)),
                         kleisli_compose(kleisli_compose(h, g), f), cfg.depth, cfg.grid)) {
      return "coassociativity at stage " + std::to_string(d->stage) + ": " + d->witness;
    }
    // The (eps, nu) form materializes Theta(Theta X), so it runs on a short prefix.
    const std::size_t small = std::min<std::size_t>(cfg.depth, 2);
    auto tx = theta_family(x, small);
    auto nu = theta_comult(x);
    auto theta_eps = theta_map([eps_x](std::size_t k) { return eps_x.map(k); });
    auto theta_nu = theta_map([nu](std::size_t k) { return nu.at(k); });
    auto eps_tx = theta_counit(tx);
    auto nu_tx = theta_comult(tx);
    for (std::size_t n = 0; n <= small; ++n) {
      if (!is_finite(x.backend()) || accumulated(tx, n).cardinality() <= kInputBudget) {
        auto id = identity(accumulated(x, n));
        if (auto d = first_difference(compose(theta_eps.at(n), nu.at(n)), id, cfg.grid)) {
          return "Theta(eps) . nu at stage " + std::to_string(n) + ": " + *d;
        }
        if (auto d = first_difference(compose(eps_tx.map(n), nu.at(n)), id, cfg.grid)) {
          return "eps_Theta . nu at stage " + std::to_string(n) + ": " + *d;
        }
        if (!is_finite(x.backend()) ||
            accumulated(theta_family(tx, small), n).cardinality() <= kInputBudget) {
          if (auto d = first_difference(compose(theta_nu.at(n), nu.at(n)),
                                        compose(nu_tx.at(n), nu.at(n)), cfg.grid)) {
            return "coassociativity of nu at stage " + std::to_string(n) + ": " + *d;
          }
        }
      }
    }
    return std::nullopt;
  });
}

Result kleisli_composition(const Config& cfg) {
  return run("comb composition is Kleisli composition", cfg, 10,
             [&](Rng& rng) -> std::optional<std::string> {
               auto x = input_family(rng, cfg, cfg.depth);
               auto y = any_family(rng, cfg), z = any_family(rng, cfg);
               auto f = comb(rng, cfg, x, y), g = comb(rng, cfg, y, z);
               auto d = compare(causal_form(compose_seq(g, f)),
                                kleisli_compose(causal_form(g), causal_form(f)), cfg.depth,
                                cfg.grid);
               if (!d) return std::nullopt;
               return "stage " + std::to_string(d->stage) + ": " + d->witness;
             });
}

Result slide_invariance(const Config& cfg) {
  return run("slide invariance", cfg, 11, [&](Rng& rng) -> std::optional<std::string> {
    auto limits = cfg.limits;
    limits.max_set = std::min<std::size_t>(limits.max_set, 2);
    const auto size = std::uniform_int_distribution<std::size_t>(2, 4)(rng);
    auto c = random::finite_comb(rng, cfg.backend, size, false, limits);
    auto one = random::finite_comb(rng, cfg.backend, 2, false, limits);
    auto open = random::finite_comb(rng, cfg.backend, size, true, limits);
    for (const auto* start : {&c, &one, &open}) {
      if (cfg.backend == Backend::FinFn) {
        // A chain of slides, compared end to end.
        auto current = *start;
        const auto moves = std::uniform_int_distribution<int>(1, 3)(rng);
        for (int m = 0; m < moves; ++m) current = random::slide_pair(rng, current, limits).after;
        if (auto d = finfn_slide_difference(*start, current)) return d;
      } else {
        auto pair = random::slide_pair(rng, *start, limits);
        auto v = behavior_equal_probe(pair.before, pair.after, cfg.grid);
        if (!v.equal) {
          return "behavior differs at stage " + std::to_string(v.stage.value_or(0)) + ": " +
                 v.witness;
        }
      }
    }
    return std::nullopt;
  });
}

std::vector<Result> run_all(const Config& cfg) {
  std::vector<Result> out{seq_associativity(cfg), seq_unit(cfg),   interchange(cfg),
                          par_associativity(cfg), trace_law(cfg),  delay_functoriality(cfg),
                          slide_invariance(cfg)};
  if (is_cartesian(cfg.backend)) {
    out.push_back(causal_round_trip(cfg));
    out.push_back(open_normal_form(cfg));
    out.push_back(comonad_laws(cfg));
    out.push_back(kleisli_composition(cfg));
  }
  return out;
}

}  // namespace comb::laws
