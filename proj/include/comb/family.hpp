#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "comb/object.hpp"

namespace comb {

// An N-indexed family of objects that is constant from some index on:
// X_n = prefix[n] for n < prefix.size(), tail otherwise. Trailing prefix
// entries equal to the tail are dropped, so equal families compare equal.
class ObjectFamily {
 public:
  ObjectFamily() = default;
  ObjectFamily(std::vector<Object> prefix, Object tail);

  static ObjectFamily constant(Object tail) { return ObjectFamily({}, std::move(tail)); }
  static ObjectFamily unit(Backend backend) { return constant(Object::unit(backend)); }

  Backend backend() const { return tail_.backend(); }
  const Object& at(std::size_t n) const {
    return n < prefix_.size() ? prefix_[n] : tail_;
  }
  const Object& operator[](std::size_t n) const { return at(n); }
  const std::vector<Object>& prefix() const { return prefix_; }
  const Object& tail() const { return tail_; }
  bool is_unit() const { return prefix_.empty() && tail_.is_unit(); }

  // "[A, B; T]", or "[T]" for a constant family
  std::string to_string() const;

  friend bool operator==(const ObjectFamily& a, const ObjectFamily& b);

 private:
  std::vector<Object> prefix_;
  Object tail_;
};

// Pointwise tensor.
ObjectFamily tensor(const ObjectFamily& a, const ObjectFamily& b);

// First index where the families differ, if any.
std::optional<std::size_t> first_mismatch(const ObjectFamily& a, const ObjectFamily& b);

// R with whole_n == prefix_n (x) R_n for every n, if it exists.
std::optional<ObjectFamily> strip_prefix(const ObjectFamily& whole,
                                         const ObjectFamily& prefix);

// X_0 (x) ... (x) X_n.
Object accumulated(const ObjectFamily& family, std::size_t n);

}  // namespace comb
