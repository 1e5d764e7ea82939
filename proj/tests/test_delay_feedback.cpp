#include "support.hpp"

#include "comb/laws.hpp"
#include "comb/random.hpp"

namespace comb::test {
namespace {

TEST(DelayFamily, ConstantFamilyGainsAUnitHead) {
  const auto d = delay_family(ObjectFamily::constant(tri()));
  EXPECT_TRUE(d[0].is_unit());
  EXPECT_EQ(d[1], tri());
  EXPECT_EQ(d[7], tri());
}

TEST(DelayFamily, TwiceShiftsTwice) {
  const auto x = ObjectFamily({boolean(), tri()}, boolean());
  const auto dd = delay_family(delay_family(x));
  EXPECT_TRUE(dd[0].is_unit());
  EXPECT_TRUE(dd[1].is_unit());
  EXPECT_EQ(dd[2], boolean());
  EXPECT_EQ(dd[3], tri());
}

TEST(DelayFamily, UnitFamilyIsFixed) {
  const auto u = ObjectFamily::unit(Backend::FinFn);
  EXPECT_EQ(delay_family(u), u);
}

TEST(DelayComb, IdentitiesStayIdentities) {
  const auto x = ObjectFamily({boolean()}, tri());
  const auto dx = delay_family(x);
  EXPECT_FALSE(laws::behavior_difference(delay_comb(lift_identity(x)), lift_identity(dx), 6));
}

TEST(DelayComb, DelayedFibonacci) {
  const auto d = delay_comb(fibonacci_feedback());
  const auto values = state_values(d, 5);
  EXPECT_TRUE(values[0].empty());  // stage 0 emits the unit
  std::vector<long> rest;
  for (std::size_t i = 1; i < values.size(); ++i) rest.push_back(values[i].at(0));
  EXPECT_EQ(rest, (std::vector<long>{0, 1, 1, 2, 3}));
}

TEST(DelayComb, IsFunctorial) {
  random::Limits limits;
  limits.max_set = 2;
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    auto rng = random::derive(seed, 5);
    const auto x = random::family(rng, Backend::FinFn, limits);
    const auto y = random::family(rng, Backend::FinFn, limits);
    const auto z = random::family(rng, Backend::FinFn, limits);
    const auto f = random::stream_comb(seed * 2, x, y, limits);
    const auto g = random::stream_comb(seed * 2 + 1, y, z, limits);
    const auto left = delay_comb(compose_seq(g, f));
    const auto right = compose_seq(delay_comb(g), delay_comb(f));
    EXPECT_EQ(laws::behavior_difference(left, right, 8), std::nullopt) << "seed " << seed;
  }
}

TEST(Feedback, UnitCarrierChangesNothing) {
  const auto f = fibonacci_direct();
  const auto fb = feedback(unit_bigfn(), unit_bigfn(), zs(), f);
  EXPECT_FALSE(laws::behavior_difference(fb, f, 8));
}

TEST(Feedback, Counter) {
  std::vector<long> values;
  for (const auto& v : state_values(counter(), 4)) values.push_back(v.at(0));
  EXPECT_EQ(values, (std::vector<long>{0, 1, 2, 3, 4}));
}

TEST(Feedback, FibonacciMatchesTheRecurrence) {
  std::vector<long> values;
  for (const auto& v : state_values(fibonacci_feedback(), 20)) values.push_back(v.at(0));
  EXPECT_EQ(values, fibonacci_numbers(21));
}

TEST(Feedback, FibonacciMatchesTheDirectComb) {
  EXPECT_FALSE(laws::behavior_difference(fibonacci_feedback(), fibonacci_direct(), 12));
}

TEST(Feedback, MemoryCarriesTheFedBackValue) {
  const auto c = fibonacci_feedback();
  EXPECT_EQ(c.memory(3), z(2));
}

TEST(Feedback, PassengersAreRecoveredFromTheFamilies) {
  using namespace bigfn;
  const auto carrier = zs();
  // f : delay Z * Z -> Z * Z; stage n adds the input to the running sum.
  auto f = lift_family(tensor(delay_family(carrier), zs()), zs(2), [](std::size_t n) {
    return Morphism::big(n == 0 ? copy(1) : compose(copy(1), add()));
  });
  const auto sums = feedback(carrier, f);
  EXPECT_EQ(sums.inputs(), zs());
  EXPECT_EQ(sums.outputs(), zs());
  // Input k at stage k: running sums 0, 1, 3, 6.
  const auto b = behavior_up_to(sums, 3);
  std::vector<Integer> in{0, 1, 2, 3};
  EXPECT_EQ(b.stages[3].apply(in), (std::vector<Integer>{6}));
}

TEST(Feedback, CarrierMustSplitOffTheFamilies) {
  const auto f = lift_identity(ObjectFamily::constant(boolean()));
  expect_error(ErrorKind::FamilyShape,
               [&] { feedback(ObjectFamily::constant(tri()), f); });
}

TEST(Feedback, TraceLikeLawOnAnExample) {
  // f : delay X * A -> Y * B with X = Y = Bool, A = B = Tri, g : Y -> X.
  random::Limits limits;
  const auto b = ObjectFamily::constant(boolean());
  const auto t = ObjectFamily::constant(tri());
  const auto f = random::stream_comb(42, tensor(delay_family(b), t), tensor(b, t), limits);
  const auto g = random::stream_comb(43, b, b, limits);
  const auto left = feedback(b, t, t, compose_seq(tensor_par(g, lift_identity(t)), f));
  const auto right = feedback(b, t, t, compose_seq(f, tensor_par(delay_comb(g), lift_identity(t))));
  EXPECT_FALSE(laws::behavior_difference(left, right, 6));
}

}  // namespace
}  // namespace comb::test
