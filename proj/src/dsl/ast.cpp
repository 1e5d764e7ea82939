#include "comb/dsl/ast.hpp"

#include <algorithm>
#include <array>
#include <string_view>

namespace comb::dsl {

bool is_builtin_name(const std::string& name) {
  static constexpr std::array<std::string_view, 10> names = {
      "id", "swap", "copy", "discard", "zero", "one", "succ", "add", "proj1", "proj2"};
  return std::find(names.begin(), names.end(), name) != names.end();
}

namespace {

bool same(const ObjExpr& a, const ObjExpr& b) {
  return std::equal(a.atoms.begin(), a.atoms.end(), b.atoms.begin(), b.atoms.end(),
                    [](const ObjAtom& x, const ObjAtom& y) { return x.name == y.name; });
}

bool same(const FamExpr& a, const FamExpr& b) {
  return a.literal == b.literal && same(a.tail, b.tail) &&
         std::equal(a.prefix.begin(), a.prefix.end(), b.prefix.begin(), b.prefix.end(),
                    [](const ObjExpr& x, const ObjExpr& y) { return same(x, y); });
}

bool same(const TermPtr& a, const TermPtr& b) {
  if (!a || !b) return !a && !b;
  return a->kind == b->kind && a->name == b->name && same(a->lhs, b->lhs) &&
         same(a->rhs, b->rhs) &&
         std::equal(a->args.begin(), a->args.end(), b->args.begin(), b->args.end(),
                    [](const ObjExpr& x, const ObjExpr& y) { return same(x, y); });
}

bool same(const ExprPtr& a, const ExprPtr& b) {
  if (!a || !b) return !a && !b;
  if (a->kind != b->kind || a->name != b->name || !same(a->lhs, b->lhs) ||
      !same(a->rhs, b->rhs) || !same(a->lift_tail, b->lift_tail)) {
    return false;
  }
  if (a->kind == Expr::Kind::Feedback && !same(a->carrier, b->carrier)) return false;
  if (!std::equal(a->lift_prefix.begin(), a->lift_prefix.end(), b->lift_prefix.begin(),
                  b->lift_prefix.end(),
                  [](const TermPtr& x, const TermPtr& y) { return same(x, y); })) {
    return false;
  }
  return std::equal(a->stages.begin(), a->stages.end(), b->stages.begin(), b->stages.end(),
                    [](const StageEntry& x, const StageEntry& y) {
                      return x.tail == y.tail && x.index == y.index &&
                             same(x.memory, y.memory) && same(x.piece, y.piece);
                    });
}

bool same_entries(const std::vector<Entry>& a, const std::vector<Entry>& b) {
  return std::equal(a.begin(), a.end(), b.begin(), b.end(), [](const Entry& x, const Entry& y) {
    return x.in == y.in && x.out == y.out && x.probability == y.probability;
  });
}

struct SameDecl {
  const Decl& other;
  bool operator()(const BackendDecl& a) const {
    return a.backend == std::get<BackendDecl>(other).backend;
  }
  bool operator()(const SetDecl& a) const {
    const auto& b = std::get<SetDecl>(other);
    return a.name == b.name && a.labels == b.labels;
  }
  bool operator()(const GenDecl& a) const {
    const auto& b = std::get<GenDecl>(other);
    return a.name == b.name && same(a.domain, b.domain) && same(a.codomain, b.codomain) &&
           a.body == b.body && same_entries(a.entries, b.entries) && a.builtin == b.builtin &&
           same(a.term, b.term);
  }
  bool operator()(const FamilyDecl& a) const {
    const auto& b = std::get<FamilyDecl>(other);
    return a.name == b.name && same(a.family, b.family);
  }
  bool operator()(const CombDecl& a) const {
    const auto& b = std::get<CombDecl>(other);
    return a.name == b.name && same(a.inputs, b.inputs) && same(a.outputs, b.outputs) &&
           same(a.body, b.body);
  }
};

}  // namespace

bool same_structure(const Program& a, const Program& b) {
  if (a.decls.size() != b.decls.size()) return false;
  for (std::size_t i = 0; i < a.decls.size(); ++i) {
    if (a.decls[i].index() != b.decls[i].index()) return false;
    if (!std::visit(SameDecl{b.decls[i]}, a.decls[i])) return false;
  }
  return true;
}

}  // namespace comb::dsl
