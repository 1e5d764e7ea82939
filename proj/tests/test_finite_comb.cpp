#include "support.hpp"

#include "comb/random.hpp"

namespace comb::test {
namespace {

const Object kB = boolean();

Morphism constant_t() { return Morphism::table(kB, kB, {0, 0}); }
Morphism constant_f() { return Morphism::table(kB, kB, {1, 1}); }

FiniteComb slid_by_not() {
  SlideMove move;
  move.position = 0;
  move.mediator = not_gate();
  move.replacement = compose(tensor(not_gate(), identity(kB)), copy(kB));
  move.direction = SlideDirection::IntoNext;
  return slide(copy_then(and_gate()), move);
}

std::vector<std::uint64_t> table_of(const Morphism& f) { return f.image(); }

TEST(FiniteComb, ZeroCombFromAMorphism) {
  const auto c = FiniteComb::make({kB}, {tri()}, {}, {Morphism::table(kB, tri(), {2, 0})}, false);
  EXPECT_EQ(c.size(), 1u);
  EXPECT_EQ(normal_form_cartesian(c).maps[0], c.pieces()[0]);
}

TEST(FiniteComb, CopyAndTypeChecks) {
  const auto c = copy_then(and_gate());
  EXPECT_EQ(c.memory_before(1), kB);
  EXPECT_TRUE(c.memory_after(1).is_unit());
}

TEST(FiniteComb, IllTypedMemoryIsRejected) {
  const auto emits_tri = Morphism::table(kB, tensor(tri(), kB), {0, 5});
  expect_error(ErrorKind::Type, [&] {
    FiniteComb::make({kB, kB}, {kB, kB}, {kB}, {emits_tri, and_gate()}, false);
  });
}

TEST(FiniteComb, OpenCombDeclaresItsExposedMemory) {
  const auto c = FiniteComb::make({kB}, {kB}, {kB}, {copy(kB)}, true);
  EXPECT_TRUE(c.open());
  EXPECT_EQ(c.memory_after(0), kB);
  expect_error(ErrorKind::Type, [&] { plug(c, {}); });
}

TEST(Slide, IdentityMediatorChangesNothing) {
  const auto c = copy_then(and_gate());
  SlideMove move{0, identity(kB), c.pieces()[0], SlideDirection::IntoNext};
  const auto d = slide(c, move);
  EXPECT_EQ(d.pieces()[0], c.pieces()[0]);
  EXPECT_EQ(d.pieces()[1], c.pieces()[1]);
}

TEST(Slide, NotAcrossTheMemoryOfCopyAnd) {
  const auto d = slid_by_not();
  // Oracle tables: t -> (f, t), f -> (t, f); then (m, x) -> AND(NOT m, x).
  EXPECT_EQ(table_of(d.pieces()[0]), (std::vector<std::uint64_t>{2, 1}));
  EXPECT_EQ(table_of(d.pieces()[1]), (std::vector<std::uint64_t>{1, 1, 0, 1}));
}

TEST(Slide, NonFactoringMediatorIsRejected) {
  const auto c = copy_then(and_gate());
  SlideMove move{0, constant_t(), copy(kB), SlideDirection::IntoNext};
  expect_error(ErrorKind::Factorization, [&] { slide(c, move); });
  SlideMove back{0, constant_t(), and_gate(), SlideDirection::IntoPrevious};
  expect_error(ErrorKind::Factorization, [&] { slide(c, back); });
}

TEST(Slide, IntoPreviousUndoesIntoNext) {
  const auto d = slid_by_not();
  // d's second piece starts with NOT on the memory; move it back.
  SlideMove back{0, not_gate(), and_gate(), SlideDirection::IntoPrevious};
  const auto e = slide(d, back);
  EXPECT_EQ(e.pieces()[0], copy(kB));
  EXPECT_EQ(e.pieces()[1], and_gate());
}

TEST(Slide, ExposedWireOfAnOpenComb) {
  const auto c = FiniteComb::make({kB}, {kB}, {kB}, {copy(kB)}, true);
  SlideMove move{0, not_gate(), std::nullopt, SlideDirection::IntoPrevious};
  const auto d = slide(c, move);
  EXPECT_EQ(d.pieces()[0], compose(tensor(not_gate(), identity(kB)), copy(kB)));
  EXPECT_EQ(normal_form_cartesian(d).maps[0], normal_form_cartesian(c).maps[0]);
}

TEST(Plug, IdentityFillerGivesAndAfterCopy) {
  EXPECT_EQ(plug(copy_then(and_gate()), {identity(kB)}), identity(kB));
}

TEST(Plug, NotFillerGivesConstantF) {
  EXPECT_EQ(plug(copy_then(and_gate()), {not_gate()}), constant_f());
}

TEST(Plug, SlidRepresentativesAgreeOnEveryFiller) {
  const auto c = copy_then(and_gate());
  const auto d = slid_by_not();
  for (const auto& g : random::all_functions(kB, kB)) EXPECT_EQ(plug(c, {g}), plug(d, {g}));
}

TEST(Plug, WrongFillerTypeIsRejected) {
  expect_error(ErrorKind::Type, [] { plug(copy_then(and_gate()), {identity(tri())}); });
  expect_error(ErrorKind::Type, [] { plug(copy_then(and_gate()), {}); });
}

TEST(Nest, InsideTheIdentityCombIsSlideEquivalent) {
  const auto c = copy_then(and_gate());
  const auto nested = compose_nest_inside(identity_one_comb(kB, kB), c);
  EXPECT_TRUE(equal_cartesian(nested, c).equal);
  for (const auto& g : random::all_functions(kB, kB)) EXPECT_EQ(plug(nested, {g}), plug(c, {g}));
}

TEST(Nest, CopyAndInsideCopyOr) {
  const auto outer = copy_then(or_gate());
  const auto inner = copy_then(and_gate());
  const auto nested = compose_nest_inside(outer, inner);
  const auto direct = plug(outer, {compose(and_gate(), copy(kB))});
  EXPECT_EQ(plug(nested, {identity(kB)}), direct);
  // OR after copy is the identity too.
  for (std::uint64_t x = 0; x < 2; ++x) EXPECT_EQ(direct.apply(x), x);
}

TEST(Interleave, MemorylessCombsInterleavePointwise) {
  const auto a0 = not_gate();
  const auto a1 = constant_t();
  const auto b0 = Morphism::table(kB, tri(), {2, 1});
  const auto b1 = Morphism::table(tri(), kB, {1, 0, 1});
  const auto u = Object::unit(Backend::FinFn);
  const auto a = FiniteComb::make({kB, kB}, {kB, kB}, {u}, {a0, a1}, false);
  const auto b = FiniteComb::make({kB, tri()}, {tri(), kB}, {u}, {b0, b1}, false);
  const auto nf = normal_form_cartesian(compose_interleave(a, b));
  const std::vector<Morphism> teeth{a0, b0, a1, b1};
  ASSERT_EQ(nf.maps.size(), 4u);
  // Oracle: h_i reads only the newest input and applies the i-th tooth.
  for (std::size_t i = 0; i < 4; ++i) {
    const auto& h = nf.maps[i];
    const auto last = nf.inputs[i].cardinality();
    for (std::uint64_t x = 0; x < h.domain().cardinality(); ++x) {
      EXPECT_EQ(h.apply(x), teeth[i].apply(x % last)) << "stage " << i;
    }
  }
}

TEST(Interleave, MatchesADirectSimulation) {
  const auto a = copy_then(and_gate());
  const auto b = copy_then(or_gate());
  const auto c = compose_interleave(a, b);
  for (const auto& g0 : random::all_functions(kB, kB)) {
    for (const auto& g1 : random::all_functions(kB, kB)) {
      for (const auto& g2 : random::all_functions(kB, kB)) {
        const auto h = plug(c, {g0, g1, g2});
        for (std::uint64_t x = 0; x < 2; ++x) {
          // a keeps x, b keeps g0(x); a's second tooth sees g1(g0(x)).
          const auto ma = x;
          const auto yb0 = g0.apply(x);
          const auto ya1 = and_gate().apply(ma * 2 + g1.apply(yb0));
          const auto expected = or_gate().apply(yb0 * 2 + g2.apply(ya1));
          EXPECT_EQ(h.apply(x), expected);
        }
      }
    }
  }
}

TEST(Lens, CopyAndSplitsIntoIdentityAndAnd) {
  const auto l = to_lens(copy_then(and_gate()));
  EXPECT_EQ(l.view, identity(kB));
  EXPECT_EQ(l.update, and_gate());
}

TEST(Lens, UnitMemoryIgnoresTheFirstInput) {
  const auto u = Object::unit(Backend::FinFn);
  const auto f = Morphism::table(kB, kB, {1, 0});  // <!, NOT> with M = I
  const auto g = Morphism::table(kB, tri(), {0, 2});
  const auto c = FiniteComb::make({kB, kB}, {kB, tri()}, {u}, {f, g}, false);
  const auto l = to_lens(c);
  EXPECT_EQ(l.view, f);
  EXPECT_EQ(l.update, compose(g, project_right(kB, kB)));
}

TEST(Lens, SlideInvariant) {
  const auto a = to_lens(copy_then(and_gate()));
  const auto b = to_lens(slid_by_not());
  EXPECT_EQ(table_of(a.view), table_of(b.view));
  EXPECT_EQ(table_of(a.update), table_of(b.update));
}

TEST(Lens, NeedsACartesianOneComb) {
  const auto sb = boolean(Backend::FinStoch);
  const auto s = FiniteComb::make({sb, sb}, {sb, sb}, {Object::unit(Backend::FinStoch)},
                                  {identity(sb), identity(sb)}, false);
  expect_error(ErrorKind::Unsupported, [&] { to_lens(s); });
}

TEST(NormalForm, ZeroCombIsItsPiece) {
  const auto f = Morphism::table(tri(), kB, {1, 1, 0});
  const auto c = FiniteComb::make({tri()}, {kB}, {}, {f}, false);
  EXPECT_EQ(normal_form_cartesian(c).maps.at(0), f);
}

TEST(NormalForm, UnitMemoriesReadTheLastInput) {
  const auto u = Object::unit(Backend::FinFn);
  const auto f0 = Morphism::table(kB, tri(), {1, 2});
  const auto f1 = Morphism::table(tri(), kB, {1, 0, 0});
  const auto c = FiniteComb::make({kB, tri()}, {tri(), kB}, {u}, {f0, f1}, false);
  const auto nf = normal_form_cartesian(c);
  EXPECT_EQ(nf.maps[1], compose(f1, project_right(kB, tri())));
}

TEST(NormalForm, CopyAnd) {
  // Oracle: exhaustive evaluation over the four input pairs.
  const auto nf = normal_form_cartesian(copy_then(and_gate()));
  EXPECT_EQ(nf.maps[0], identity(kB));
  for (std::uint64_t x0 = 0; x0 < 2; ++x0) {
    for (std::uint64_t x1 = 0; x1 < 2; ++x1) {
      const bool both_true = x0 == 0 && x1 == 0;
      EXPECT_EQ(nf.maps[1].apply(x0 * 2 + x1), both_true ? 0u : 1u);
    }
  }
}

TEST(EqualCartesian, SlidCombsAreEqual) {
  EXPECT_TRUE(equal_cartesian(copy_then(and_gate()), slid_by_not()).equal);
}

TEST(EqualCartesian, CopyAndVersusCopyOr) {
  const auto v = equal_cartesian(copy_then(and_gate()), copy_then(or_gate()));
  EXPECT_FALSE(v.equal);
  EXPECT_EQ(v.stage, 1u);
  EXPECT_NE(v.witness.find("(t,f)"), std::string::npos) << v.witness;
}

TEST(BehaviorEqualProbe, FinStochMemoryIsMarginalized) {
  const auto sb = boolean(Backend::FinStoch);
  const auto u = Object::unit(Backend::FinStoch);
  const auto half = Morphism::stochastic(u, tensor(sb, sb),
                                         {{{0, Rational(1, 2)}, {3, Rational(1, 2)}}});
  const auto indep = Morphism::stochastic(
      u, tensor(sb, sb),
      {{{0, Rational(1, 4)}, {1, Rational(1, 4)}, {2, Rational(1, 4)}, {3, Rational(1, 4)}}});
  // Same marginal on the output; the memories differ but are discarded.
  const auto a = FiniteComb::make({u}, {sb}, {sb}, {half}, true);
  const auto b = FiniteComb::make({u}, {sb}, {sb}, {indep}, true);
  EXPECT_TRUE(behavior_equal_probe(a, b).equal);
  // Closing with a second piece exposes the correlation.
  const auto read = project_left(sb, sb);
  const auto ca = FiniteComb::make({u, sb}, {sb, sb}, {sb}, {half, read}, false);
  const auto cb = FiniteComb::make({u, sb}, {sb, sb}, {sb}, {indep, read}, false);
  EXPECT_FALSE(behavior_equal_probe(ca, cb).equal);
}

}  // namespace
}  // namespace comb::test
