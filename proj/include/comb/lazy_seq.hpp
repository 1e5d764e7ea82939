#pragma once

#include <cstddef>
#include <functional>
#include <memory>
#include <mutex>
#include <unordered_map>
#include <utility>

namespace comb {

// An index -> T sequence produced on demand and memoized.
//
// Concurrent queries may race to produce the same index; the first value
// stored wins and every caller observes it. The producer runs without the
// lock held, so it may query other indices of the same sequence.
template <class T>
class LazySeq {
 public:
  using Producer = std::function<T(std::size_t)>;
  // Receives the sequence itself, for stage recursions such as x_n = F(x_{n-1}).
  using RecursiveProducer = std::function<T(std::size_t, const LazySeq&)>;

  LazySeq() = default;
  explicit LazySeq(Producer produce)
      : impl_(std::make_shared<Impl>(
            [p = std::move(produce)](std::size_t n, const LazySeq&) { return p(n); })) {}

  static LazySeq recursive(RecursiveProducer produce) {
    LazySeq seq;
    seq.impl_ = std::make_shared<Impl>(std::move(produce));
    return seq;
  }

  static LazySeq constant(T value) {
    return LazySeq([value = std::move(value)](std::size_t) { return value; });
  }

  bool valid() const { return static_cast<bool>(impl_); }

  const T& at(std::size_t n) const {
    {
      std::lock_guard lock(impl_->mu);
      if (auto it = impl_->cache.find(n); it != impl_->cache.end()) return it->second;
    }
    T value = impl_->produce(n, *this);
    std::lock_guard lock(impl_->mu);
    return impl_->cache.try_emplace(n, std::move(value)).first->second;
  }

  const T& operator[](std::size_t n) const { return at(n); }

 private:
  struct Impl {
    explicit Impl(RecursiveProducer p) : produce(std::move(p)) {}
    RecursiveProducer produce;
    std::mutex mu;
    std::unordered_map<std::size_t, T> cache;  // node-based: references stay valid
  };
  std::shared_ptr<Impl> impl_;
};

}  // namespace comb
