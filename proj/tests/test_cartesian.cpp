#include "support.hpp"

#include "comb/dsl/bundled.hpp"
#include "comb/dsl/elaborate.hpp"
#include "comb/dsl/parser.hpp"
#include "comb/random.hpp"

namespace comb::test {
namespace {

random::Limits small() {
  random::Limits l;
  l.max_set = 3;
  return l;
}

std::pair<ObjectFamily, ObjectFamily> random_families(std::uint64_t seed) {
  auto rng = random::derive(seed, 17);
  return {random::family(rng, Backend::FinFn, small()),
          random::family(rng, Backend::FinFn, small())};
}

void expect_same_prefix(const CausalForm& a, const CausalForm& b, std::size_t depth) {
  for (std::size_t n = 0; n <= depth; ++n) {
    ASSERT_EQ(a.map(n).image(), b.map(n).image()) << "stage " << n;
  }
}

// (g . f)_n(x_0..x_n) = g_n(f_0(x_0), ..., f_n(x_0..x_n)), by enumeration.
std::vector<std::uint64_t> kleisli_oracle(const CausalForm& g, const CausalForm& f,
                                          std::size_t n) {
  const auto theta = theta_object(f.inputs(), n);
  std::vector<std::uint64_t> out(theta.cardinality());
  for (std::uint64_t x = 0; x < theta.cardinality(); ++x) {
    // Mixed radix: the prefix x_0..x_i is x divided by the sizes of later inputs.
    std::uint64_t later = 1;
    std::vector<std::uint64_t> ys(n + 1);
    for (std::size_t i = n + 1; i-- > 0;) {
      ys[i] = f.map(i).apply(x / later);
      later *= f.inputs()[i].cardinality();
    }
    std::uint64_t joint = 0;
    for (std::size_t i = 0; i <= n; ++i) joint = joint * f.outputs()[i].cardinality() + ys[i];
    out[x] = g.map(n).apply(joint);
  }
  return out;
}

TEST(CausalForm, LiftedCombReadsTheLastInput) {
  const auto f0 = Morphism::table(boolean(), tri(), {2, 0});
  const auto f = Morphism::table(tri(), boolean(), {1, 1, 0});
  const auto cf = causal_form(lift({f0}, f));
  EXPECT_EQ(cf.map(0), f0);
  EXPECT_EQ(cf.map(2), compose(f, project_right(tensor(boolean(), tri()), tri())));
}

TEST(CausalForm, FibonacciStates) {
  const auto cf = causal_form(fibonacci_feedback());
  for (std::size_t n = 0; n <= 5; ++n) {
    EXPECT_EQ(cf.map(n).apply(std::vector<Integer>{}),
              (std::vector<Integer>{fibonacci_numbers(6)[n]}));
  }
}

TEST(CausalForm, AgreesWithTheFiniteNormalForm) {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const auto [x, y] = random_families(seed);
    const auto c = random::stream_comb(seed, x, y, small());
    const auto nf = normal_form_cartesian(truncate(c, 3));
    const auto cf = causal_form(c);
    for (std::size_t n = 0; n <= 3; ++n) EXPECT_EQ(nf.maps[n], cf.map(n));
  }
}

TEST(CausalForm, RebuildThenNormalizeIsAFixpoint) {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const auto [x, y] = random_families(seed);
    const auto cf = causal_form(random::stream_comb(seed, x, y, small()));
    expect_same_prefix(causal_form(from_causal_form(cf)), cf, 3);
  }
}

TEST(CausalForm, StochasticCombsHaveNone) {
  const auto sb = ObjectFamily::constant(boolean(Backend::FinStoch));
  expect_error(ErrorKind::Unsupported, [&] { causal_form(lift_identity(sb)); });
}

TEST(FromCausalForm, ConstantMapsGiveAConstantStream) {
  const auto in = ObjectFamily::constant(boolean());
  const auto out = ObjectFamily::constant(tri());
  const auto cf = CausalForm(in, out, [&](std::size_t n) {
    return compose(Morphism::table(Object::unit(Backend::FinFn), tri(), {1}),
                   discard(theta_object(in, n)));
  });
  const auto b = behavior_up_to(from_causal_form(cf), 4);
  for (const auto& h : b.stages) {
    for (std::uint64_t x = 0; x < h.domain().cardinality(); ++x) EXPECT_EQ(h.apply(x), 1u);
  }
}

TEST(FromCausalForm, FibonacciRoundTrip) {
  const auto cf = causal_form(fibonacci_feedback());
  const auto again = causal_form(from_causal_form(cf));
  for (std::size_t n = 0; n <= 8; ++n) {
    EXPECT_EQ(again.map(n).apply(std::vector<Integer>{}),
              cf.map(n).apply(std::vector<Integer>{}));
  }
}

TEST(FromCausalForm, RandomRoundTrips) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const auto [x, y] = random_families(seed + 50);
    const auto cf = random::causal_form(seed, x, y);
    expect_same_prefix(causal_form(from_causal_form(cf)), cf, 5);
  }
}

TEST(Kleisli, CounitIsAnIdentity) {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const auto [x, y] = random_families(seed + 80);
    const auto f = random::causal_form(seed, x, y);
    expect_same_prefix(kleisli_compose(theta_counit(y), f), f, 5);
    expect_same_prefix(kleisli_compose(f, theta_counit(x)), f, 5);
  }
}

TEST(Kleisli, Associative) {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    auto rng = random::derive(seed, 23);
    const auto x = random::family(rng, Backend::FinFn, small());
    const auto y = random::family(rng, Backend::FinFn, small());
    const auto z = random::family(rng, Backend::FinFn, small());
    const auto w = random::family(rng, Backend::FinFn, small());
    const auto f = random::causal_form(seed * 3, x, y);
    const auto g = random::causal_form(seed * 3 + 1, y, z);
    const auto h = random::causal_form(seed * 3 + 2, z, w);
    expect_same_prefix(kleisli_compose(h, kleisli_compose(g, f)),
                       kleisli_compose(kleisli_compose(h, g), f), 4);
  }
}

TEST(Kleisli, MatchesTheEnumerationOracle) {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    auto rng = random::derive(seed, 29);
    const auto x = random::family(rng, Backend::FinFn, small());
    const auto y = random::family(rng, Backend::FinFn, small());
    const auto z = random::family(rng, Backend::FinFn, small());
    const auto f = random::causal_form(seed * 2, x, y);
    const auto g = random::causal_form(seed * 2 + 1, y, z);
    const auto gf = kleisli_compose(g, f);
    for (std::size_t n = 0; n <= 4; ++n) EXPECT_EQ(gf.map(n).image(), kleisli_oracle(g, f, n));
  }
}

TEST(Kleisli, CombCompositionIsKleisliComposition) {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    auto rng = random::derive(seed, 31);
    const auto x = random::family(rng, Backend::FinFn, small());
    const auto y = random::family(rng, Backend::FinFn, small());
    const auto z = random::family(rng, Backend::FinFn, small());
    const auto f = random::stream_comb(seed * 2, x, y, small());
    const auto g = random::stream_comb(seed * 2 + 1, y, z, small());
    expect_same_prefix(causal_form(compose_seq(g, f)),
                       kleisli_compose(causal_form(g), causal_form(f)), 5);
  }
}

TEST(Kleisli, ComultiplicationProjectsPrefixes) {
  const auto x = ObjectFamily({boolean()}, tri());
  const auto nu = theta_comult(x);
  const auto& nu2 = nu.at(2);
  EXPECT_EQ(nu2.domain(), theta_object(x, 2));
  // Bool*Tri*Tri -> Bool * (Bool*Tri) * (Bool*Tri*Tri).
  EXPECT_EQ(nu2.codomain().cardinality(), 2u * 6u * 18u);
  std::vector<std::string> in{"f", "mid", "hi"};
  std::vector<std::string> expected{"f", "f", "mid", "f", "mid", "hi"};
  EXPECT_EQ(nu2.codomain().element_labels(nu2.apply(nu2.domain().element_index(in))), expected);
}

TEST(StateStream, ConstantsGiveAConstantStream) {
  const auto u = Object::unit(Backend::FinFn);
  const auto c = lift({}, Morphism::table(u, tri(), {2}));
  const auto sf = extract_state_stream(c, 3);
  ASSERT_EQ(sf.values.size(), 4u);
  for (const auto& v : sf.values) EXPECT_EQ(v.apply(0), 2u);
}

TEST(StateStream, Fibonacci) {
  std::vector<long> values;
  for (const auto& v : state_values(fibonacci_feedback(), 5)) values.push_back(v.at(0));
  EXPECT_EQ(values, (std::vector<long>{0, 1, 1, 2, 3, 5}));
}

TEST(StateStream, NeedsUnitInputs) {
  expect_error(ErrorKind::Type, [] {
    extract_state_stream(lift_identity(ObjectFamily::constant(boolean())), 2);
  });
}

StateFamily lotka_states(std::size_t depth) {
  const auto program = dsl::parse(*dsl::bundled_source("lotka"), "lotka");
  return extract_state_stream(dsl::elaborate(program, "lotka"), depth);
}

TEST(StateStream, LotkaStartsAtADirac) {
  const auto sf = lotka_states(0);
  ASSERT_EQ(sf.distributions.size(), 1u);
  ASSERT_EQ(sf.distributions[0].size(), 1u);
  EXPECT_EQ(sf.distributions[0][0].second, Rational(1));
  EXPECT_EQ(sf.outputs[0].element_labels(sf.distributions[0][0].first),
            (std::vector<std::string>{"r0", "f0"}));
}

TEST(Coherence, LotkaIsCoherent) {
  const auto sf = lotka_states(5);
  EXPECT_EQ(check_coherence(sf, 5), std::nullopt);
}

TEST(Coherence, CorruptedFamilyFailsAtTheCorruptedStage) {
  for (std::size_t stage = 0; stage <= 4; ++stage) {
    auto sf = lotka_states(4);
    sf.distributions[stage][0].second += Rational(1, 100);
    EXPECT_EQ(check_coherence(sf, 4), stage);
  }
}

TEST(Coherence, MassMovedWithinAStageBreaksTheMarginal) {
  auto sf = lotka_states(2);
  // Stage 1 has support (r0,f0,r0,f0) and (r0,f0,r1,f0), one half each.
  ASSERT_EQ(sf.distributions[1].size(), 2u);
  sf.distributions[2] = {{sf.distributions[2][0].first, Rational(1)}};
  EXPECT_EQ(check_coherence(sf, 2), 2u);
}

TEST(Coherence, DepthZeroIsVacuous) {
  EXPECT_EQ(check_coherence(lotka_states(0), 0), std::nullopt);
}

}  // namespace
}  // namespace comb::test
