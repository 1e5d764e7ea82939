#pragma once

#include <memory>
#include <string>
#include <variant>
#include <vector>

#include "comb/error.hpp"
#include "comb/object.hpp"

namespace comb::dsl {

// `Bool*Tri`, `Z*Z`, `I`: atoms are set names, `Z` or `I`.
struct ObjAtom {
  std::string name;
  SourceSpan span;
};

struct ObjExpr {
  std::vector<ObjAtom> atoms;
  SourceSpan span;
};

// `[O1, O2; T]` (literal) or a bare object / family name.
struct FamExpr {
  bool literal = false;
  std::vector<ObjExpr> prefix;
  ObjExpr tail;
  SourceSpan span;
};

struct Term;
using TermPtr = std::shared_ptr<const Term>;

// Morphism terms: generator references, builtins with type arguments,
// `.` (composition, lowest precedence) and `*` (tensor).
struct Term {
  enum class Kind { Ref, Builtin, Compose, Tensor };
  Kind kind = Kind::Ref;
  std::string name;
  std::vector<ObjExpr> args;
  TermPtr lhs;  // Compose: applied second
  TermPtr rhs;  // Compose: applied first
  SourceSpan span;
};

bool is_builtin_name(const std::string& name);

// A row `IN -> OUT` of a table, or `IN -> OUT : p/q` of a matrix.
// Elements are label tuples; the unit element is written `*`.
struct Entry {
  std::vector<std::string> in;
  std::vector<std::string> out;
  std::string probability;  // matrices only, as written
  SourceSpan span;
};

struct BackendDecl {
  Backend backend = Backend::FinFn;
  SourceSpan span;
};

struct SetDecl {
  std::string name;
  std::vector<std::string> labels;
  SourceSpan span;
};

struct GenDecl {
  enum class Body { Table, Matrix, Builtin, Term };
  std::string name;
  ObjExpr domain;
  ObjExpr codomain;
  Body body = Body::Term;
  std::vector<Entry> entries;  // Table, Matrix
  std::string builtin;         // Builtin
  TermPtr term;                // Term
  SourceSpan span;
};

struct FamilyDecl {
  std::string name;
  FamExpr family;
  SourceSpan span;
};

struct Expr;
using ExprPtr = std::shared_ptr<const Expr>;

// `n: MEM, PIECE` or `tail(k): MEM, PIECE`.
struct StageEntry {
  bool tail = false;
  std::size_t index = 0;
  ObjExpr memory;
  TermPtr piece;
  SourceSpan span;
};

struct Expr {
  enum class Kind { Lift, Seq, Par, Delay, Feedback, Stages, Ref };
  Kind kind = Kind::Ref;
  std::vector<TermPtr> lift_prefix;
  TermPtr lift_tail;
  ExprPtr lhs;  // Seq: runs first; Par: left; Delay/Feedback: operand
  ExprPtr rhs;
  FamExpr carrier;
  std::vector<StageEntry> stages;
  std::string name;
  SourceSpan span;
};

struct CombDecl {
  std::string name;
  FamExpr inputs;
  FamExpr outputs;
  ExprPtr body;
  SourceSpan span;
};

using Decl = std::variant<BackendDecl, SetDecl, GenDecl, FamilyDecl, CombDecl>;

struct Program {
  std::vector<Decl> decls;
};

// Structural equality, spans ignored.
bool same_structure(const Program& a, const Program& b);

}  // namespace comb::dsl
