#include "comb/object.hpp"

#include <unordered_set>

#include "comb/error.hpp"

namespace comb {

std::string_view backend_name(Backend backend) {
  switch (backend) {
    case Backend::FinFn: return "finfn";
    case Backend::BigFn: return "bigfn";
    case Backend::FinStoch: return "finstoch";
  }
  return "?";
}

std::optional<Backend> backend_from_name(std::string_view name) {
  if (name == "finfn") return Backend::FinFn;
  if (name == "bigfn") return Backend::BigFn;
  if (name == "finstoch") return Backend::FinStoch;
  return std::nullopt;
}

namespace {

std::uint64_t checked_product(std::uint64_t a, std::uint64_t b) {
  if (a != 0 && b > kMaxCardinality / a) {
    fail(ErrorKind::ResourceLimit,
         "object cardinality exceeds 2^62; the product is too large to index");
  }
  return a * b;
}

bool same_set(const FiniteSet& a, const FiniteSet& b) {
  return a.name == b.name && a.labels == b.labels;
}

}  // namespace

Object::Object() = default;

Object Object::unit(Backend backend) {
  Object o;
  o.backend_ = backend;
  return o;
}

Object Object::finite(Backend backend, std::string name,
                      std::vector<std::string> labels) {
  if (!is_finite(backend)) {
    fail(ErrorKind::Unsupported, "bigfn has no finite-set objects");
  }
  if (labels.empty()) {
    fail(ErrorKind::Type, "set '" + name + "' must have at least one element");
  }
  std::unordered_set<std::string> seen;
  for (const auto& l : labels) {
    if (!seen.insert(l).second) {
      fail(ErrorKind::Type, "set '" + name + "' repeats the label '" + l + "'");
    }
  }
  Object o;
  o.backend_ = backend;
  o.cardinality_ = labels.size();
  o.factors_.push_back(std::make_shared<const FiniteSet>(
      FiniteSet{std::move(name), std::move(labels)}));
  return o;
}

Object Object::integers(std::size_t arity) {
  Object o;
  o.backend_ = Backend::BigFn;
  o.arity_ = arity;
  return o;
}

bool Object::is_unit() const {
  return is_finite(backend_) ? factors_.empty() : arity_ == 0;
}

std::size_t Object::arity() const {
  if (is_finite(backend_)) {
    fail(ErrorKind::Unsupported, "arity is only defined for bigfn objects");
  }
  return arity_;
}

std::uint64_t Object::cardinality() const {
  if (!is_finite(backend_)) {
    fail(ErrorKind::Unsupported, "bigfn objects are infinite");
  }
  return cardinality_;
}

std::vector<std::string> Object::element_labels(std::uint64_t index) const {
  std::vector<std::string> out(factors_.size());
  for (std::size_t k = factors_.size(); k-- > 0;) {
    const auto& labels = factors_[k]->labels;
    out[k] = labels[index % labels.size()];
    index /= labels.size();
  }
  return out;
}

std::string Object::element_name(std::uint64_t index) const {
  auto labels = element_labels(index);
  if (labels.empty()) return "*";
  if (labels.size() == 1) return labels.front();
  std::string out = "(";
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (i) out += ",";
    out += labels[i];
  }
  return out + ")";
}

std::uint64_t Object::element_index(std::span<const std::string> labels) const {
  if (labels.size() != factors_.size()) {
    fail(ErrorKind::Type, "element of " + to_string() + " needs " +
                              std::to_string(factors_.size()) + " labels");
  }
  std::uint64_t index = 0;
  for (std::size_t k = 0; k < factors_.size(); ++k) {
    const auto& set = factors_[k]->labels;
    std::uint64_t pos = set.size();
    for (std::uint64_t j = 0; j < set.size(); ++j) {
      if (set[j] == labels[k]) {
        pos = j;
        break;
      }
    }
    if (pos == set.size()) {
      fail(ErrorKind::Type, "'" + labels[k] + "' is not an element of " +
                                factors_[k]->name);
    }
    index = index * set.size() + pos;
  }
  return index;
}

std::string Object::to_string() const {
  if (is_unit()) return "I";
  std::string out;
  if (is_finite(backend_)) {
    for (std::size_t i = 0; i < factors_.size(); ++i) {
      if (i) out += "*";
      out += factors_[i]->name;
    }
  } else {
    for (std::size_t i = 0; i < arity_; ++i) {
      if (i) out += "*";
      out += "Z";
    }
  }
  return out;
}

std::optional<Object> Object::strip_prefix(const Object& prefix) const {
  if (prefix.backend_ != backend_) return std::nullopt;
  if (!is_finite(backend_)) {
    if (prefix.arity_ > arity_) return std::nullopt;
    return integers(arity_ - prefix.arity_);
  }
  if (prefix.factors_.size() > factors_.size()) return std::nullopt;
  Object rest = unit(backend_);
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    if (i < prefix.factors_.size()) {
      if (!same_set(*factors_[i], *prefix.factors_[i])) return std::nullopt;
    } else {
      rest.factors_.push_back(factors_[i]);
      rest.cardinality_ *= factors_[i]->labels.size();
    }
  }
  return rest;
}

std::optional<Object> Object::strip_suffix(const Object& suffix) const {
  if (suffix.backend_ != backend_) return std::nullopt;
  if (!is_finite(backend_)) {
    if (suffix.arity_ > arity_) return std::nullopt;
    return integers(arity_ - suffix.arity_);
  }
  if (suffix.factors_.size() > factors_.size()) return std::nullopt;
  std::size_t keep = factors_.size() - suffix.factors_.size();
  Object rest = unit(backend_);
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    if (i >= keep) {
      if (!same_set(*factors_[i], *suffix.factors_[i - keep])) return std::nullopt;
    } else {
      rest.factors_.push_back(factors_[i]);
      rest.cardinality_ *= factors_[i]->labels.size();
    }
  }
  return rest;
}

Object tensor(const Object& a, const Object& b) {
  if (a.backend_ != b.backend_) {
    fail(ErrorKind::BackendMismatch,
         "cannot tensor " + std::string(backend_name(a.backend_)) + " object " +
             a.to_string() + " with " + std::string(backend_name(b.backend_)) +
             " object " + b.to_string());
  }
  Object out = a;
  if (is_finite(a.backend_)) {
    out.cardinality_ = checked_product(a.cardinality_, b.cardinality_);
    out.factors_.insert(out.factors_.end(), b.factors_.begin(), b.factors_.end());
  } else {
    out.arity_ += b.arity_;
  }
  return out;
}

bool operator==(const Object& a, const Object& b) {
  if (a.backend_ != b.backend_) return false;
  if (!is_finite(a.backend_)) return a.arity_ == b.arity_;
  if (a.factors_.size() != b.factors_.size()) return false;
  for (std::size_t i = 0; i < a.factors_.size(); ++i) {
    if (a.factors_[i] != b.factors_[i] && !same_set(*a.factors_[i], *b.factors_[i])) {
      return false;
    }
  }
  return true;
}

Object tensor(std::span<const Object> objects, Backend backend) {
  Object out = Object::unit(backend);
  for (const auto& o : objects) out = tensor(out, o);
  return out;
}

}  // namespace comb
