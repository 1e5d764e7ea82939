#pragma once

#include <json.hpp>

#include "comb/behavior.hpp"
#include "comb/cartesian.hpp"
#include "comb/finite_comb.hpp"
#include "comb/morphism.hpp"
#include "comb/object.hpp"

namespace comb {

// Insertion-ordered, so emitted keys follow a fixed canonical order.
using Json = nlohmann::ordered_json;

// {"num": "p", "den": "q"} in lowest terms.
Json to_json(const Rational& r);
Rational rational_from_json(const Json& j);

// Integers that fit in 64 bits are numbers, larger ones decimal strings.
Json to_json(const Integer& i);

Json to_json(const Object& o);
Object object_from_json(const Json& j);

Json to_json(const Morphism& f);
Morphism morphism_from_json(const Json& j);

Json to_json(const FiniteComb& c);
FiniteComb finite_comb_from_json(const Json& j);

Json to_json(const FiniteCausalForm& cf);

// The value of a state I -> Y (cartesian): a label, a label tuple, an
// integer, or an integer tuple.
Json state_value_json(const Morphism& state);

// Cartesian: [{"stage", "value"}]; FinStoch: [{"stage", "support"}] with
// support entries [[labels...], rational] in ascending outcome order.
Json to_json(const StateFamily& sf);

// Behavior trace for combs with non-unit inputs. Cartesian finite backends:
// one {"stage", "inputs", "outputs"} record per input prefix; FinStoch:
// {"stage", "inputs", "joint_distribution"}.
Json trace_json(const Behavior& b);

}  // namespace comb
