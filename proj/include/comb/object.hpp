#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace comb {

enum class Backend : std::uint8_t {
  FinFn,     // finite sets and total functions (cartesian)
  BigFn,     // tuples of integers and generated computable maps (cartesian)
  FinStoch,  // finite sets and exact row-stochastic matrices (semicartesian)
};

std::string_view backend_name(Backend backend);
std::optional<Backend> backend_from_name(std::string_view name);

inline bool is_cartesian(Backend b) { return b != Backend::FinStoch; }
inline bool is_finite(Backend b) { return b != Backend::BigFn; }

// A named finite set of pairwise distinct labels.
struct FiniteSet {
  std::string name;
  std::vector<std::string> labels;
};

// An object of one of the semantic categories.
//
// Finite objects are ordered lists of atomic sets; the tensor concatenates
// the lists, so the tensor is strictly associative and the unit (the empty
// list, whose single element prints as "*") is strict. Elements of a product
// are indexed in mixed radix with the left factor most significant, which is
// the lexicographic order of label tuples.
//
// BigFn objects are integer tuples of a given arity; the tensor adds arities.
class Object {
 public:
  Object();  // FinFn unit

  static Object unit(Backend backend);
  static Object finite(Backend backend, std::string name,
                       std::vector<std::string> labels);
  static Object integers(std::size_t arity);

  Backend backend() const { return backend_; }
  bool is_unit() const;

  // BigFn only.
  std::size_t arity() const;

  // Finite backends only.
  std::span<const std::shared_ptr<const FiniteSet>> factors() const {
    return factors_;
  }
  std::uint64_t cardinality() const;
  std::vector<std::string> element_labels(std::uint64_t index) const;
  std::string element_name(std::uint64_t index) const;
  std::uint64_t element_index(std::span<const std::string> labels) const;

  // "Bool*Tri", "Z*Z", "I" for the unit.
  std::string to_string() const;

  // The object R with *this == prefix (x) R, if any.
  std::optional<Object> strip_prefix(const Object& prefix) const;
  // The object L with *this == L (x) suffix, if any.
  std::optional<Object> strip_suffix(const Object& suffix) const;

  friend Object tensor(const Object& a, const Object& b);
  friend bool operator==(const Object& a, const Object& b);

 private:
  Backend backend_ = Backend::FinFn;
  std::vector<std::shared_ptr<const FiniteSet>> factors_;
  std::size_t arity_ = 0;
  std::uint64_t cardinality_ = 1;
};

Object tensor(std::span<const Object> objects, Backend backend);

// Largest finite cardinality the library will index.
inline constexpr std::uint64_t kMaxCardinality = std::uint64_t{1} << 62;

}  // namespace comb
