#include "support.hpp"

#include "comb/laws.hpp"
#include "comb/random.hpp"

namespace comb::test {
namespace {

laws::Config small(Backend b) {
  laws::Config cfg;
  cfg.backend = b;
  cfg.cases = 10;
  cfg.depth = 3;
  return cfg;
}

class LawSuite : public ::testing::TestWithParam<Backend> {};

TEST_P(LawSuite, AllPass) {
  for (const auto& r : laws::run_all(small(GetParam()))) {
    EXPECT_TRUE(r.passed()) << r.name << ": " << r.first_failure;
    EXPECT_EQ(r.cases, 10u) << r.name;
  }
}

INSTANTIATE_TEST_SUITE_P(Backends, LawSuite,
                         ::testing::Values(Backend::FinFn, Backend::BigFn, Backend::FinStoch),
                         [](const auto& info) { return std::string(backend_name(info.param)); });

TEST(Laws, CartesianSuitesOnlyForCartesianBackends) {
  EXPECT_EQ(laws::run_all(small(Backend::FinFn)).size(), 11u);
  EXPECT_EQ(laws::run_all(small(Backend::FinStoch)).size(), 7u);
}

TEST(Laws, SameSeedSameCases) {
  auto a = random::derive(9, 1, 2);
  auto b = random::derive(9, 1, 2);
  auto c = random::derive(9, 1, 3);
  const auto x = a(), y = b(), w = c();
  EXPECT_EQ(x, y);
  EXPECT_NE(x, w);
}

TEST(Laws, BehaviorDifferenceDetectsChanges) {
  const auto b = ObjectFamily::constant(boolean());
  EXPECT_TRUE(laws::behavior_difference(lift({}, not_gate()), lift_identity(b), 2).has_value());
  // A change only at stage 3 is invisible at depth 2.
  const auto late = lift({identity(boolean()), identity(boolean()), identity(boolean())}, not_gate());
  EXPECT_FALSE(laws::behavior_difference(late, lift_identity(b), 2).has_value());
  EXPECT_TRUE(laws::behavior_difference(late, lift_identity(b), 3).has_value());
}

TEST(Laws, RandomSlidesAreValidAndNontrivial) {
  random::Limits limits;
  limits.max_set = 2;
  std::size_t changed = 0;
  for (std::uint64_t k = 0; k < 30; ++k) {
    auto rng = random::derive(4, k);
    const auto c = random::finite_comb(rng, Backend::FinFn, 3, false, limits);
    const auto s = random::slide_pair(rng, c, limits);
    EXPECT_TRUE(equal_cartesian(s.before, s.after).equal);
    for (std::size_t i = 0; i < s.before.size(); ++i) {
      if (!(s.before.memories().size() == s.after.memories().size()) ||
          !(s.before.pieces()[i].domain() == s.after.pieces()[i].domain()) ||
          !(s.before.pieces()[i].codomain() == s.after.pieces()[i].codomain()) ||
          !(s.before.pieces()[i] == s.after.pieces()[i])) {
        ++changed;
        break;
      }
    }
  }
  // Most moves change the representative, so the invariance checks have teeth.
  EXPECT_GE(changed, 20u);
}

TEST(Laws, AllFunctionsEnumeratesEveryTable) {
  EXPECT_EQ(random::all_functions(boolean(), tri()).size(), 9u);
  EXPECT_EQ(random::all_functions(tri(), boolean()).size(), 8u);
}

}  // namespace
}  // namespace comb::test
