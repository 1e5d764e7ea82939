#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "comb/bigfn.hpp"
#include "comb/numeric.hpp"
#include "comb/object.hpp"

namespace comb {

// Sparse row of a stochastic matrix: (column, probability) pairs sorted by
// column, all probabilities strictly positive.
using StochRow = std::vector<std::pair<std::uint64_t, Rational>>;

// Finite grid used to compare BigFn maps, which have no decidable equality.
// All tuples with entries in [low, high] are probed when there are at most
// max_points of them; otherwise a deterministic sample of max_points tuples.
struct ProbeGrid {
  long low = -2;
  long high = 8;
  std::size_t max_points = 20000;
  std::uint64_t seed = 0x5eed;
};

// Enumerates the probe points of the given arity.
std::vector<std::vector<Integer>> probe_points(std::size_t arity,
                                               const ProbeGrid& grid);

// A morphism of one of the backends. Immutable; copies share the payload.
class Morphism {
 public:
  // Identity on the FinFn unit.
  Morphism();

  // FinFn: image[i] is the codomain index of domain element i.
  static Morphism table(Object domain, Object codomain,
                        std::vector<std::uint64_t> image);
  static Morphism from_function(
      Object domain, Object codomain,
      const std::function<std::uint64_t(std::uint64_t)>& fn);
  // FinStoch: one sparse row per domain element; rows must sum to 1.
  static Morphism stochastic(Object domain, Object codomain,
                             std::vector<StochRow> rows);
  // FinStoch morphism induced by a function (Dirac rows).
  static Morphism deterministic(Object domain, Object codomain,
                                std::span<const std::uint64_t> image);
  static Morphism big(bigfn::Expr expr);

  Backend backend() const { return domain_.backend(); }
  const Object& domain() const { return domain_; }
  const Object& codomain() const { return codomain_; }

  const std::vector<std::uint64_t>& image() const;  // FinFn
  const std::vector<StochRow>& rows() const;         // FinStoch
  const bigfn::Expr& expr() const;                   // BigFn

  std::uint64_t apply(std::uint64_t element) const;  // FinFn
  const StochRow& row(std::uint64_t element) const;  // FinStoch
  std::vector<Integer> apply(std::span<const Integer> input) const;  // BigFn

  // Human-readable rendering; for BigFn a reparseable term.
  std::string to_string() const;

 private:
  using Payload = std::variant<std::vector<std::uint64_t>,
                               std::vector<StochRow>, bigfn::Expr>;
  Morphism(Object domain, Object codomain, std::shared_ptr<const Payload> p);

  Object domain_;
  Object codomain_;
  std::shared_ptr<const Payload> payload_;
};

// Exact equality for FinFn/FinStoch; probe equality for BigFn.
bool equal(const Morphism& a, const Morphism& b, const ProbeGrid& grid = {});
inline bool operator==(const Morphism& a, const Morphism& b) {
  return equal(a, b);
}

// Describes the first input on which a and b disagree, if any.
std::optional<std::string> first_difference(const Morphism& a,
                                            const Morphism& b,
                                            const ProbeGrid& grid = {});

// Category structure.
Morphism compose(const Morphism& g, const Morphism& f);  // g after f
Morphism tensor(const Morphism& f, const Morphism& g);
Morphism identity(const Object& x);
Morphism swap(const Object& x, const Object& y);
Morphism copy(const Object& x);     // cartesian backends only
Morphism discard(const Object& x);  // all backends
// f after the state s : I -> dom f.
Morphism apply_to_state(const Morphism& f, const Morphism& s);

// Composes a chain given in application order: last(...(second(first))).
Morphism compose_chain(std::initializer_list<Morphism> in_order);

// Projections out of strict products (cartesian or semicartesian).
Morphism project_left(const Object& left, const Object& right);   // L*R -> L
Morphism project_right(const Object& left, const Object& right);  // L*R -> R
// <f, g> = (f * g) . copy, cartesian only.
Morphism pair(const Morphism& f, const Morphism& g);

bool is_row_stochastic(const Morphism& f);

}  // namespace comb
