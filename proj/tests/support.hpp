#pragma once

#include <gtest/gtest.h>

#include <string>
#include <vector>

#include "comb/behavior.hpp"
#include "comb/bigfn.hpp"
#include "comb/cartesian.hpp"
#include "comb/delay_feedback.hpp"
#include "comb/error.hpp"
#include "comb/finite_comb.hpp"
#include "comb/morphism.hpp"
#include "comb/stream_comb.hpp"

namespace comb {

inline void PrintTo(const Object& o, std::ostream* os) { *os << o.to_string(); }
inline void PrintTo(const ObjectFamily& f, std::ostream* os) { *os << f.to_string(); }
inline void PrintTo(const Morphism& m, std::ostream* os) { *os << m.to_string(); }

}  // namespace comb

namespace comb::test {

// Bool = {t, f}: t has index 0, f index 1.
inline Object boolean(Backend b = Backend::FinFn) { return Object::finite(b, "Bool", {"t", "f"}); }
inline Object tri(Backend b = Backend::FinFn) {
  return Object::finite(b, "Tri", {"lo", "mid", "hi"});
}
inline Object z(std::size_t k = 1) { return Object::integers(k); }

inline Morphism not_gate(Backend b = Backend::FinFn) {
  if (b == Backend::FinStoch) {
    std::vector<std::uint64_t> image{1, 0};
    return Morphism::deterministic(boolean(b), boolean(b), image);
  }
  return Morphism::table(boolean(), boolean(), {1, 0});
}
// Pairs enumerate as (t,t), (t,f), (f,t), (f,f).
inline Morphism and_gate() {
  return Morphism::table(tensor(boolean(), boolean()), boolean(), {0, 1, 1, 1});
}
inline Morphism or_gate() {
  return Morphism::table(tensor(boolean(), boolean()), boolean(), {0, 0, 0, 1});
}

// The closed 1-comb (copy, gate) over Bool with memory Bool.
inline FiniteComb copy_then(const Morphism& gate) {
  const auto b = boolean();
  return FiniteComb::make({b, b}, {b, b}, {b}, {copy(b), gate}, false);
}

template <class F>
void expect_error(ErrorKind kind, F&& f) {
  try {
    f();
    ADD_FAILURE() << "expected " << to_string(kind) << " error";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), kind) << e.what();
  }
}

inline ObjectFamily zs(std::size_t k = 1) { return ObjectFamily::constant(z(k)); }
inline ObjectFamily unit_bigfn() { return ObjectFamily::unit(Backend::BigFn); }

// Fibonacci written directly: memory (F_{n+1}, F_{n+2}), output F_n.
inline StreamComb fibonacci_direct() {
  using namespace bigfn;
  auto first = tensor(tensor(one(), one()), zero());
  auto step = compose(tensor(tensor(proj2(), add()), proj1()),
                      compose(tensor(copy(2), id(2)), copy(2)));
  return StreamComb(unit_bigfn(), zs(), [](std::size_t) { return z(2); },
                    [=](std::size_t n) { return Morphism::big(n == 0 ? first : step); });
}

// Fibonacci through feedback over the carrier Z*Z: f_0 stores (1, 1) and
// emits 0; later stages map (a, b) to ((b, a + b), a).
inline StreamComb fibonacci_feedback() {
  using namespace bigfn;
  auto first = tensor(tensor(one(), one()), zero());
  auto step = compose(tensor(tensor(proj2(), add()), proj1()),
                      compose(tensor(copy(2), id(2)), copy(2)));
  const auto carrier = zs(2);
  auto f = lift_family(delay_family(carrier), zs(3), [=](std::size_t n) {
    return Morphism::big(n == 0 ? first : step);
  });
  return feedback(carrier, unit_bigfn(), zs(), f);
}

// Counter through feedback over Z: 0, 1, 2, ...
inline StreamComb counter() {
  using namespace bigfn;
  auto first = tensor(zero(), zero());
  auto step = compose(copy(1), succ());
  const auto carrier = zs();
  auto f = lift_family(delay_family(carrier), zs(2), [=](std::size_t n) {
    return Morphism::big(n == 0 ? first : step);
  });
  return feedback(carrier, unit_bigfn(), zs(), f);
}

// Integer tuples of the states of a BigFn state stream.
inline std::vector<std::vector<long>> state_values(const StreamComb& c, std::size_t depth) {
  std::vector<std::vector<long>> out;
  for (const auto& s : extract_state_stream(c, depth).values) {
    std::vector<long> row;
    for (const auto& v : s.apply(std::vector<Integer>{})) row.push_back(static_cast<long>(v));
    out.push_back(row);
  }
  return out;
}

// Fibonacci numbers by the recurrence, the oracle for the combs above.
inline std::vector<long> fibonacci_numbers(std::size_t count) {
  std::vector<long> f;
  long a = 0, b = 1;
  for (std::size_t i = 0; i < count; ++i) {
    f.push_back(a);
    long next = a + b;
    a = b;
    b = next;
  }
  return f;
}

}  // namespace comb::test
