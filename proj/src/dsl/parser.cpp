#include "comb/dsl/parser.hpp"

#include <algorithm>
#include <array>

#include "comb/dsl/lexer.hpp"

namespace comb::dsl {

namespace {

constexpr std::array<std::string_view, 5> kDeclKeywords = {"backend", "set", "gen", "family",
                                                           "comb"};
constexpr std::array<std::string_view, 10> kReserved = {
    "backend", "set", "gen", "family", "comb", "lift", "delay", "feedback", "stages", "builtin"};

SourceSpan join(const SourceSpan& a, const SourceSpan& b) {
  SourceSpan s = a;
  if (b.line == a.line && b.column_end > a.column_end) s.column_end = b.column_end;
  return s;
}

std::string shown(const Token& t) {
  return t.kind == Tok::End ? "end of input" : "'" + t.text + "'";
}

class Parser {
 public:
  explicit Parser(std::vector<Token> toks) : toks_(std::move(toks)) {}

  Program program() {
    Program p;
    while (!at(Tok::End)) p.decls.push_back(decl());
    return p;
  }

  TermPtr standalone_term() {
    auto t = term();
    expect(Tok::End, "after the term");
    return t;
  }

 private:
  const Token& peek(std::size_t k = 0) const {
    return toks_[std::min(pos_ + k, toks_.size() - 1)];
  }
  bool at(Tok t) const { return peek().kind == t; }
  bool at_word(std::string_view w, std::size_t k = 0) const {
    return peek(k).kind == Tok::Ident && peek(k).text == w;
  }
  const Token& next() {
    const Token& t = toks_[pos_];
    if (pos_ + 1 < toks_.size()) ++pos_;
    return t;
  }

  [[noreturn]] void expected(const std::string& what) const {
    throw Error(ErrorKind::Syntax, "expected " + what + ", found " + shown(peek()),
                peek().span);
  }

  const Token& expect(Tok t, const std::string& context) {
    if (!at(t)) expected(std::string(describe(t)) + " " + context);
    return next();
  }

  const Token& expect_word(std::string_view w) {
    if (!at_word(w)) expected("'" + std::string(w) + "'");
    return next();
  }

  Token name(const std::string& context) {
    if (!at(Tok::Ident)) expected("a name " + context);
    const Token& t = peek();
    if (std::find(kReserved.begin(), kReserved.end(), t.text) != kReserved.end()) {
      throw Error(ErrorKind::Syntax, "'" + t.text + "' is a keyword and cannot be a name",
                  t.span);
    }
    return next();
  }

  bool at_decl_keyword(std::size_t k = 0) const {
    if (peek(k).kind == Tok::End) return true;
    if (peek(k).kind != Tok::Ident) return false;
    return std::find(kDeclKeywords.begin(), kDeclKeywords.end(), peek(k).text) !=
           kDeclKeywords.end();
  }

  Decl decl() {
    if (at_word("backend")) {
      auto kw = next();
      auto id = name("after 'backend'");
      auto b = backend_from_name(id.text);
      if (!b) {
        throw Error(ErrorKind::Syntax,
                    "unknown backend '" + id.text + "'; expected finfn, bigfn or finstoch",
                    id.span);
      }
      auto end = expect(Tok::Semi, "after the backend declaration");
      return BackendDecl{*b, join(kw.span, end.span)};
    }
    if (at_word("set")) return set_decl();
    if (at_word("gen")) return gen_decl();
    if (at_word("family")) {
      auto kw = next();
      FamilyDecl d;
      d.name = name("after 'family'").text;
      expect(Tok::Equals, "in the family declaration");
      d.family = family();
      auto end = expect(Tok::Semi, "after the family declaration");
      d.span = join(kw.span, end.span);
      return d;
    }
    if (at_word("comb")) return comb_decl();
    expected("one of 'backend', 'set', 'gen', 'family', 'comb'");
  }

  std::string label() {
    if (at(Tok::Ident) || at(Tok::Number)) return next().text;
    expected("a label");
  }

  SetDecl set_decl() {
    auto kw = next();
    SetDecl d;
    d.name = name("after 'set'").text;
    expect(Tok::Equals, "in the set declaration");
    expect(Tok::LBrace, "to open the label list");
    d.labels.push_back(label());
    while (at(Tok::Comma)) {
      next();
      d.labels.push_back(label());
    }
    expect(Tok::RBrace, "to close the label list");
    auto end = expect(Tok::Semi, "after the set declaration");
    d.span = join(kw.span, end.span);
    return d;
  }

  std::vector<std::string> element() {
    if (at(Tok::Star)) {
      next();
      return {};
    }
    if (at(Tok::LParen)) {
      next();
      std::vector<std::string> out{label()};
      while (at(Tok::Comma)) {
        next();
        out.push_back(label());
      }
      expect(Tok::RParen, "to close the element tuple");
      return out;
    }
    return {label()};
  }

  std::string rational() {
    std::string text;
    if (at(Tok::Minus)) text += next().text;
    text += expect(Tok::Number, "in the probability").text;
    if (at(Tok::Slash)) {
      next();
      text += "/" + expect(Tok::Number, "as the denominator").text;
    }
    return text;
  }

  std::vector<Entry> entries(bool with_probability) {
    expect(Tok::LBrace, with_probability ? "to open the matrix" : "to open the table");
    std::vector<Entry> out;
    while (!at(Tok::RBrace)) {
      Entry e;
      e.span = peek().span;
      e.in = element();
      expect(Tok::Arrow, "between the input and output element");
      e.out = element();
      if (with_probability) {
        expect(Tok::Colon, "before the probability");
        e.probability = rational();
      }
      e.span = join(e.span, toks_[pos_ - 1].span);
      out.push_back(std::move(e));
      if (!at(Tok::Comma)) break;
      next();
    }
    expect(Tok::RBrace, with_probability ? "to close the matrix" : "to close the table");
    return out;
  }

  GenDecl gen_decl() {
    auto kw = next();
    GenDecl d;
    auto id = name("after 'gen'");
    if (is_builtin_name(id.text)) {
      throw Error(ErrorKind::Syntax, "'" + id.text + "' is a builtin and cannot be redefined",
                  id.span);
    }
    d.name = id.text;
    expect(Tok::Colon, "before the generator typing");
    d.domain = object();
    expect(Tok::Arrow, "in the generator typing");
    d.codomain = object();
    expect(Tok::Equals, "before the generator body");
    if (at_word("table")) {
      next();
      d.body = GenDecl::Body::Table;
      d.entries = entries(false);
    } else if (at_word("matrix")) {
      next();
      d.body = GenDecl::Body::Matrix;
      d.entries = entries(true);
    } else if (at_word("builtin")) {
      next();
      if (!at(Tok::Ident) || !is_builtin_name(peek().text)) {
        expected("a builtin (id, swap, copy, discard, zero, one, succ, add, proj1, proj2)");
      }
      d.body = GenDecl::Body::Builtin;
      d.builtin = next().text;
    } else {
      d.body = GenDecl::Body::Term;
      d.term = term();
    }
    auto end = expect(Tok::Semi, "after the generator declaration");
    d.span = join(kw.span, end.span);
    return d;
  }

  CombDecl comb_decl() {
    auto kw = next();
    CombDecl d;
    d.name = name("after 'comb'").text;
    expect(Tok::Colon, "before the comb typing");
    d.inputs = family();
    expect(Tok::Arrow, "in the comb typing");
    d.outputs = family();
    expect(Tok::Equals, "before the comb expression");
    d.body = expr();
    auto end = expect(Tok::Semi, "after the comb declaration");
    d.span = join(kw.span, end.span);
    return d;
  }

  ObjExpr object() {
    ObjExpr o;
    auto atom = [&] {
      if (!at(Tok::Ident)) expected("an object (a set name, Z or I)");
      auto t = next();
      return ObjAtom{t.text, t.span};
    };
    o.atoms.push_back(atom());
    while (at(Tok::Star)) {
      next();
      o.atoms.push_back(atom());
    }
    o.span = join(o.atoms.front().span, o.atoms.back().span);
    return o;
  }

  FamExpr family() {
    FamExpr f;
    if (!at(Tok::LBracket)) {
      f.tail = object();
      f.span = f.tail.span;
      return f;
    }
    auto open = next();
    f.literal = true;
    if (at(Tok::Semi)) {
      next();
      f.tail = object();
    } else {
      std::vector<ObjExpr> objs{object()};
      while (at(Tok::Comma)) {
        next();
        objs.push_back(object());
      }
      if (at(Tok::Semi)) {
        next();
        f.prefix = std::move(objs);
        f.tail = object();
      } else if (objs.size() == 1) {
        f.tail = std::move(objs.front());
      } else {
        expected("';' and the tail object of the family");
      }
    }
    auto close = expect(Tok::RBracket, "to close the family");
    f.span = join(open.span, close.span);
    return f;
  }

  // term := tensor ('.' tensor)*
  TermPtr term() {
    auto lhs = tensor_term();
    while (at(Tok::Dot)) {
      next();
      auto rhs = tensor_term();
      auto t = std::make_shared<Term>();
      t->kind = Term::Kind::Compose;
      t->span = join(lhs->span, rhs->span);
      t->lhs = std::move(lhs);
      t->rhs = std::move(rhs);
      lhs = std::move(t);
    }
    return lhs;
  }

  TermPtr tensor_term() {
    auto lhs = atom_term();
    while (at(Tok::Star)) {
      next();
      auto rhs = atom_term();
      auto t = std::make_shared<Term>();
      t->kind = Term::Kind::Tensor;
      t->span = join(lhs->span, rhs->span);
      t->lhs = std::move(lhs);
      t->rhs = std::move(rhs);
      lhs = std::move(t);
    }
    return lhs;
  }

  TermPtr atom_term() {
    if (at(Tok::LParen)) {
      next();
      auto inner = term();
      expect(Tok::RParen, "to close the parenthesized term");
      return inner;
    }
    if (!at(Tok::Ident)) expected("a morphism term");
    auto id = next();
    auto t = std::make_shared<Term>();
    t->name = id.text;
    t->span = id.span;
    t->kind = is_builtin_name(id.text) ? Term::Kind::Builtin : Term::Kind::Ref;
    if (at(Tok::LBracket)) {
      if (t->kind == Term::Kind::Ref) {
        throw Error(ErrorKind::Syntax,
                    "only builtins take type arguments; '" + id.text + "' is not a builtin",
                    peek().span);
      }
      next();
      t->args.push_back(object());
      while (at(Tok::Comma)) {
        next();
        t->args.push_back(object());
      }
      auto close = expect(Tok::RBracket, "to close the type arguments");
      t->span = join(t->span, close.span);
    }
    return t;
  }

  // expr := par (';' par)*, where a ';' followed by a declaration keyword or
  // the end of input terminates the declaration instead.
  ExprPtr expr() {
    auto lhs = par_expr();
    while (at(Tok::Semi) && !at_decl_keyword(1)) {
      next();
      auto rhs = par_expr();
      auto e = std::make_shared<Expr>();
      e->kind = Expr::Kind::Seq;
      e->span = join(lhs->span, rhs->span);
      e->lhs = std::move(lhs);
      e->rhs = std::move(rhs);
      lhs = std::move(e);
    }
    return lhs;
  }

  ExprPtr par_expr() {
    auto lhs = unary();
    while (at(Tok::Bar)) {
      next();
      auto rhs = unary();
      auto e = std::make_shared<Expr>();
      e->kind = Expr::Kind::Par;
      e->span = join(lhs->span, rhs->span);
      e->lhs = std::move(lhs);
      e->rhs = std::move(rhs);
      lhs = std::move(e);
    }
    return lhs;
  }

  // Index just past the bracket group opening at token index i, if it closes.
  std::optional<std::size_t> group_end(std::size_t i) const {
    std::vector<Tok> stack;
    for (; i < toks_.size(); ++i) {
      switch (toks_[i].kind) {
        case Tok::LBracket: stack.push_back(Tok::RBracket); break;
        case Tok::LParen: stack.push_back(Tok::RParen); break;
        case Tok::LBrace: stack.push_back(Tok::RBrace); break;
        case Tok::RBracket:
        case Tok::RParen:
        case Tok::RBrace:
          if (stack.empty() || stack.back() != toks_[i].kind) return std::nullopt;
          stack.pop_back();
          if (stack.empty()) return i + 1;
          break;
        case Tok::End: return std::nullopt;
        default: break;
      }
    }
    return std::nullopt;
  }

  ExprPtr unary() {
    if (at_word("delay")) {
      auto kw = next();
      auto operand = unary();
      auto e = std::make_shared<Expr>();
      e->kind = Expr::Kind::Delay;
      e->span = join(kw.span, operand->span);
      e->lhs = std::move(operand);
      return e;
    }
    if (at_word("feedback")) {
      auto kw = next();
      auto unbalanced = [&](const std::string& what) {
        throw Error(ErrorKind::Syntax, "unbalanced feedback block: " + what, kw.span);
      };
      if (!at(Tok::LBracket)) expected("'[' and the carrier family after 'feedback'");
      auto carrier_end = group_end(pos_);
      if (!carrier_end) unbalanced("the carrier bracket is never closed");
      if (toks_[*carrier_end].kind == Tok::LParen && !group_end(*carrier_end)) {
        unbalanced("the parenthesized body is never closed");
      }
      next();
      auto e = std::make_shared<Expr>();
      e->kind = Expr::Kind::Feedback;
      e->carrier = family();
      expect(Tok::RBracket, "to close the feedback carrier");
      auto operand = unary();
      e->span = join(kw.span, operand->span);
      e->lhs = std::move(operand);
      return e;
    }
    return primary();
  }

  ExprPtr primary() {
    auto e = std::make_shared<Expr>();
    if (at_word("lift")) {
      auto kw = next();
      e->kind = Expr::Kind::Lift;
      expect(Tok::LBracket, "after 'lift'");
      std::vector<TermPtr> terms{term()};
      while (at(Tok::Comma)) {
        next();
        terms.push_back(term());
      }
      if (at(Tok::Semi)) {
        next();
        e->lift_prefix = std::move(terms);
        e->lift_tail = term();
      } else if (terms.size() == 1) {
        e->lift_tail = terms.front();
      } else {
        expected("';' and the tail morphism of the lift");
      }
      auto close = expect(Tok::RBracket, "to close the lift");
      e->span = join(kw.span, close.span);
      return e;
    }
    if (at_word("stages")) {
      auto kw = next();
      e->kind = Expr::Kind::Stages;
      expect(Tok::LBrace, "after 'stages'");
      while (!at(Tok::RBrace)) {
        StageEntry s;
        s.span = peek().span;
        if (at_word("tail")) {
          next();
          s.tail = true;
          expect(Tok::LParen, "after 'tail'");
          s.index = std::stoul(expect(Tok::Number, "as the first tail index").text);
          expect(Tok::RParen, "after the tail index");
        } else {
          if (!at(Tok::Number)) expected("a stage index or 'tail(k)'");
          s.index = std::stoul(next().text);
        }
        expect(Tok::Colon, "after the stage index");
        s.memory = object();
        expect(Tok::Comma, "between the stage memory and its piece");
        s.piece = term();
        s.span = join(s.span, s.piece->span);
        e->stages.push_back(std::move(s));
        if (!at(Tok::Semi)) break;
        next();
      }
      auto close = expect(Tok::RBrace, "to close the stages block");
      e->span = join(kw.span, close.span);
      return e;
    }
    if (at(Tok::LParen)) {
      next();
      auto inner = expr();
      expect(Tok::RParen, "to close the parenthesized comb expression");
      return inner;
    }
    if (at(Tok::Ident)) {
      auto id = name("of a comb");
      e->kind = Expr::Kind::Ref;
      e->name = id.text;
      e->span = id.span;
      return e;
    }
    expected("a comb expression ('lift', 'stages', 'delay', 'feedback', '(' or a comb name)");
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
};

}  // namespace

Program parse(std::string_view source, const std::string& file) {
  return Parser(lex(source, file)).program();
}

TermPtr parse_term(std::string_view source, const std::string& file) {
  return Parser(lex(source, file)).standalone_term();
}

}  // namespace comb::dsl
