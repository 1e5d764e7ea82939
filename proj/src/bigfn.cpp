#include "comb/bigfn.hpp"

#include "comb/error.hpp"

namespace comb::bigfn {

namespace {

Expr make(Op op, std::size_t dom, std::size_t cod, std::size_t a = 0,
          std::size_t b = 0, Expr first = nullptr, Expr second = nullptr) {
  auto n = std::make_shared<Node>();
  n->op = op;
  n->domain = dom;
  n->codomain = cod;
  n->left_arity = a;
  n->right_arity = b;
  n->first = std::move(first);
  n->second = std::move(second);
  return n;
}

std::string object_text(std::size_t arity) {
  if (arity == 0) return "I";
  std::string out = "Z";
  for (std::size_t i = 1; i < arity; ++i) out += "*Z";
  return out;
}

// 0: top level / composite operand, 1: tensor operand.
std::string print_at(const Node& e, int level) {
  switch (e.op) {
    case Op::Id: return "id[" + object_text(e.left_arity) + "]";
    case Op::Swap:
      return "swap[" + object_text(e.left_arity) + ", " +
             object_text(e.right_arity) + "]";
    case Op::Copy: return "copy[" + object_text(e.left_arity) + "]";
    case Op::Discard: return "discard[" + object_text(e.left_arity) + "]";
    case Op::Zero: return "zero";
    case Op::One: return "one";
    case Op::Succ: return "succ";
    case Op::Add: return "add";
    case Op::Proj1: return "proj1";
    case Op::Proj2: return "proj2";
    case Op::Compose: {
      std::string s = print_at(*e.second, 0) + " . " + print_at(*e.first, 0);
      return level > 0 ? "(" + s + ")" : s;
    }
    case Op::Tensor:
      return print_at(*e.first, 1) + " * " + print_at(*e.second, 1);
  }
  return "?";
}

}  // namespace

Expr id(std::size_t k) { return make(Op::Id, k, k, k); }
Expr swap(std::size_t a, std::size_t b) { return make(Op::Swap, a + b, a + b, a, b); }
Expr copy(std::size_t k) { return make(Op::Copy, k, 2 * k, k); }
Expr discard(std::size_t k) { return make(Op::Discard, k, 0, k); }
Expr zero() { return make(Op::Zero, 0, 1); }
Expr one() { return make(Op::One, 0, 1); }
Expr succ() { return make(Op::Succ, 1, 1); }
Expr add() { return make(Op::Add, 2, 1); }
Expr proj1() { return make(Op::Proj1, 2, 1); }
Expr proj2() { return make(Op::Proj2, 2, 1); }

Expr compose(Expr second, Expr first) {
  if (first->codomain != second->domain) {
    fail(ErrorKind::Type, "cannot compose " + print(*second) + " : " +
                              object_text(second->domain) + " -> " +
                              object_text(second->codomain) + " after " +
                              print(*first) + " : " + object_text(first->domain) +
                              " -> " + object_text(first->codomain));
  }
  auto dom = first->domain;
  auto cod = second->codomain;
  return make(Op::Compose, dom, cod, 0, 0, std::move(first), std::move(second));
}

Expr tensor(Expr left, Expr right) {
  auto dom = left->domain + right->domain;
  auto cod = left->codomain + right->codomain;
  return make(Op::Tensor, dom, cod, 0, 0, std::move(left), std::move(right));
}

std::vector<Integer> evaluate(const Node& e, std::span<const Integer> x) {
  if (x.size() != e.domain) {
    fail(ErrorKind::Type, "bigfn map expects " + std::to_string(e.domain) +
                              " integers, got " + std::to_string(x.size()));
  }
  switch (e.op) {
    case Op::Id: return {x.begin(), x.end()};
    case Op::Swap: {
      std::vector<Integer> out(x.begin() + e.left_arity, x.end());
      out.insert(out.end(), x.begin(), x.begin() + e.left_arity);
      return out;
    }
    case Op::Copy: {
      std::vector<Integer> out(x.begin(), x.end());
      out.insert(out.end(), x.begin(), x.end());
      return out;
    }
    case Op::Discard: return {};
    case Op::Zero: return {Integer(0)};
    case Op::One: return {Integer(1)};
    case Op::Succ: return {x[0] + 1};
    case Op::Add: return {x[0] + x[1]};
    case Op::Proj1: return {x[0]};
    case Op::Proj2: return {x[1]};
    case Op::Compose: {
      auto mid = evaluate(*e.first, x);
      return evaluate(*e.second, mid);
    }
    case Op::Tensor: {
      auto split = e.first->domain;
      auto left = evaluate(*e.first, x.subspan(0, split));
      auto right = evaluate(*e.second, x.subspan(split));
      left.insert(left.end(), std::make_move_iterator(right.begin()),
                  std::make_move_iterator(right.end()));
      return left;
    }
  }
  return {};
}

std::string print(const Node& expr) { return print_at(expr, 0); }

std::size_t node_count(const Node& e) {
  std::size_t n = 1;
  if (e.first) n += node_count(*e.first);
  if (e.second) n += node_count(*e.second);
  return n;
}

}  // namespace comb::bigfn
