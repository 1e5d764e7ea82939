#pragma once

#include <cstddef>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "comb/numeric.hpp"

namespace comb::bigfn {

// Generators of the BigFn vocabulary; Compose and Tensor close it.
enum class Op {
  Id,       // Z^k -> Z^k
  Swap,     // Z^a * Z^b -> Z^b * Z^a
  Copy,     // Z^k -> Z^k * Z^k
  Discard,  // Z^k -> I
  Zero,     // I -> Z
  One,      // I -> Z
  Succ,     // Z -> Z
  Add,      // Z*Z -> Z
  Proj1,    // Z*Z -> Z
  Proj2,    // Z*Z -> Z
  Compose,
  Tensor,
};

struct Node;
using Expr = std::shared_ptr<const Node>;

struct Node {
  Op op;
  std::size_t left_arity = 0;   // Id/Copy/Discard: k; Swap: a
  std::size_t right_arity = 0;  // Swap: b
  Expr first;                   // Compose: applied first; Tensor: left
  Expr second;                  // Compose: applied second; Tensor: right
  std::size_t domain = 0;
  std::size_t codomain = 0;
};

Expr id(std::size_t k);
Expr swap(std::size_t a, std::size_t b);
Expr copy(std::size_t k);
Expr discard(std::size_t k);
Expr zero();
Expr one();
Expr succ();
Expr add();
Expr proj1();
Expr proj2();
// second after first; arities must agree.
Expr compose(Expr second, Expr first);
Expr tensor(Expr left, Expr right);

std::vector<Integer> evaluate(const Node& expr, std::span<const Integer> input);

// Term syntax accepted by the circuit language, e.g. "(id[Z] * add) . copy[Z*Z]".
std::string print(const Node& expr);

std::size_t node_count(const Node& expr);

}  // namespace comb::bigfn
