#include "comb/family.hpp"

#include <algorithm>

#include "comb/error.hpp"

namespace comb {

ObjectFamily::ObjectFamily(std::vector<Object> prefix, Object tail)
    : prefix_(std::move(prefix)), tail_(std::move(tail)) {
  for (const auto& o : prefix_) {
    if (o.backend() != tail_.backend()) {
      fail(ErrorKind::BackendMismatch, "family mixes backends");
    }
  }
  while (!prefix_.empty() && prefix_.back() == tail_) prefix_.pop_back();
}

std::string ObjectFamily::to_string() const {
  std::string out = "[";
  for (std::size_t i = 0; i < prefix_.size(); ++i) {
    if (i) out += ", ";
    out += prefix_[i].to_string();
  }
  if (!prefix_.empty()) out += "; ";
  out += tail_.to_string() + "]";
  return out;
}

bool operator==(const ObjectFamily& a, const ObjectFamily& b) {
  return a.tail_ == b.tail_ && a.prefix_ == b.prefix_;
}

ObjectFamily tensor(const ObjectFamily& a, const ObjectFamily& b) {
  const auto len = std::max(a.prefix().size(), b.prefix().size());
  std::vector<Object> prefix;
  prefix.reserve(len);
  for (std::size_t n = 0; n < len; ++n) prefix.push_back(tensor(a[n], b[n]));
  return ObjectFamily(std::move(prefix), tensor(a.tail(), b.tail()));
}

std::optional<std::size_t> first_mismatch(const ObjectFamily& a, const ObjectFamily& b) {
  const auto len = std::max(a.prefix().size(), b.prefix().size());
  for (std::size_t n = 0; n <= len; ++n) {
    if (!(a[n] == b[n])) return n;
  }
  return std::nullopt;
}

std::optional<ObjectFamily> strip_prefix(const ObjectFamily& whole,
                                         const ObjectFamily& prefix) {
  const auto len = std::max(whole.prefix().size(), prefix.prefix().size());
  std::vector<Object> rest;
  for (std::size_t n = 0; n < len; ++n) {
    auto r = whole[n].strip_prefix(prefix[n]);
    if (!r) return std::nullopt;
    rest.push_back(std::move(*r));
  }
  auto tail = whole.tail().strip_prefix(prefix.tail());
  if (!tail) return std::nullopt;
  return ObjectFamily(std::move(rest), std::move(*tail));
}

Object accumulated(const ObjectFamily& family, std::size_t n) {
  Object out = Object::unit(family.backend());
  for (std::size_t i = 0; i <= n; ++i) out = tensor(out, family[i]);
  return out;
}

}  // namespace comb
