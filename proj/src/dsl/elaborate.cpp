#include "comb/dsl/elaborate.hpp"

#include <algorithm>
#include <limits>
#include <set>

#include "comb/delay_feedback.hpp"
#include "comb/dsl/parser.hpp"
#include "comb/dsl/printer.hpp"

namespace comb::dsl {

namespace {

// Attaches the span to errors raised by the library below this node.
template <class F>
auto at_span(const SourceSpan& span, F&& fn) -> decltype(fn()) {
  try {
    return fn();
  } catch (const Error& e) {
    if (e.span()) throw;
    throw Error(e.kind(), e.detail(), span);
  }
}

[[noreturn]] void fail_at(ErrorKind kind, const std::string& msg, const SourceSpan& span) {
  throw Error(kind, msg, span);
}

std::size_t factor_count(const Object& o) {
  return o.backend() == Backend::BigFn ? o.arity() : o.factors().size();
}

Object sub_object(const Object& o, std::size_t from, std::size_t to) {
  if (o.backend() == Backend::BigFn) return Object::integers(to - from);
  Object out = Object::unit(o.backend());
  for (std::size_t k = from; k < to; ++k) {
    const auto& f = o.factors()[k];
    out = tensor(out, Object::finite(o.backend(), f->name, f->labels));
  }
  return out;
}

class Elaborator {
 public:
  Elaboration run(const Program& p) {
    for (const auto& d : p.decls) std::visit([this](const auto& x) { declare(x); }, d);
    return std::move(out_);
  }

  Morphism term(const Term& t, const std::optional<std::pair<Object, Object>>& typing = {}) {
    return at_span(t.span, [&] { return term_unchecked(t, typing); });
  }

  void set_backend(Backend b) { out_.backend = b; }

 private:
  Backend backend(const SourceSpan& span) const {
    if (!out_.backend) fail_at(ErrorKind::Type, "no backend declared before this point", span);
    return *out_.backend;
  }

  void claim(const std::string& name, const SourceSpan& span) {
    if (!names_.insert(name).second) {
      fail_at(ErrorKind::Type, "'" + name + "' is already declared", span);
    }
  }

  Object atom(const ObjAtom& a) {
    const auto b = backend(a.span);
    if (a.name == "I") return Object::unit(b);
    if (b == Backend::BigFn) {
      if (a.name == "Z") return Object::integers(1);
      fail_at(ErrorKind::Type, "bigfn objects are built from Z and I, not '" + a.name + "'",
              a.span);
    }
    if (auto it = out_.sets.find(a.name); it != out_.sets.end()) return it->second;
    fail_at(ErrorKind::Type, "unknown set '" + a.name + "'", a.span);
  }

  Object object(const ObjExpr& o) {
    Object out = Object::unit(backend(o.span));
    for (const auto& a : o.atoms) out = tensor(out, atom(a));
    return out;
  }

  ObjectFamily family(const FamExpr& f) {
    if (!f.literal && f.tail.atoms.size() == 1) {
      if (auto it = out_.families.find(f.tail.atoms.front().name); it != out_.families.end()) {
        return it->second;
      }
    }
    std::vector<Object> prefix;
    for (const auto& o : f.prefix) prefix.push_back(object(o));
    return ObjectFamily(std::move(prefix), object(f.tail));
  }

  void declare(const BackendDecl& d) {
    if (out_.backend) fail_at(ErrorKind::Type, "the backend is declared twice", d.span);
    out_.backend = d.backend;
  }

  void declare(const SetDecl& d) {
    claim(d.name, d.span);
    const auto b = backend(d.span);
    if (b == Backend::BigFn) {
      fail_at(ErrorKind::Type, "finite sets need the finfn or finstoch backend", d.span);
    }
    out_.sets.emplace(d.name, at_span(d.span, [&] {
                        return Object::finite(b, d.name, d.labels);
                      }));
  }

  void declare(const FamilyDecl& d) {
    claim(d.name, d.span);
    out_.families.emplace(d.name, family(d.family));
  }

  void declare(const GenDecl& d) {
    claim(d.name, d.span);
    const auto b = backend(d.span);
    const auto dom = object(d.domain);
    const auto cod = object(d.codomain);
    Morphism m;
    switch (d.body) {
      case GenDecl::Body::Table: m = table(d, b, dom, cod); break;
      case GenDecl::Body::Matrix: m = matrix(d, b, dom, cod); break;
      case GenDecl::Body::Builtin: {
        Term t;
        t.kind = Term::Kind::Builtin;
        t.name = d.builtin;
        t.span = d.span;
        m = term(t, std::pair{dom, cod});
        break;
      }
      case GenDecl::Body::Term: m = term(*d.term, std::pair{dom, cod}); break;
    }
    if (!(m.domain() == dom) || !(m.codomain() == cod)) {
      fail_at(ErrorKind::Type,
              "generator '" + d.name + "' is declared " + dom.to_string() + " -> " +
                  cod.to_string() + " but its body is typed " + m.domain().to_string() +
                  " -> " + m.codomain().to_string(),
              d.span);
    }
    out_.gens.emplace(d.name, m);
  }

  Morphism table(const GenDecl& d, Backend b, const Object& dom, const Object& cod) {
    if (b == Backend::BigFn) {
      fail_at(ErrorKind::Unsupported, "bigfn generators are terms, not tables", d.span);
    }
    constexpr auto missing = std::numeric_limits<std::uint64_t>::max();
    std::vector<std::uint64_t> image(at_span(d.span, [&] { return dom.cardinality(); }),
                                     missing);
    for (const auto& e : d.entries) {
      at_span(e.span, [&] {
        auto i = dom.element_index(e.in);
        if (image[i] != missing) {
          fail(ErrorKind::Type, "input " + dom.element_name(i) + " is listed twice");
        }
        image[i] = cod.element_index(e.out);
      });
    }
    for (std::uint64_t i = 0; i < image.size(); ++i) {
      if (image[i] == missing) {
        fail_at(ErrorKind::Type,
                "table of '" + d.name + "' is not total: no entry for " + dom.element_name(i),
                d.span);
      }
    }
    if (b == Backend::FinStoch) return Morphism::deterministic(dom, cod, image);
    return Morphism::table(dom, cod, std::move(image));
  }

  Morphism matrix(const GenDecl& d, Backend b, const Object& dom, const Object& cod) {
    if (b != Backend::FinStoch) {
      fail_at(ErrorKind::Unsupported, "matrices need the finstoch backend", d.span);
    }
    std::vector<StochRow> rows(at_span(d.span, [&] { return dom.cardinality(); }));
    for (const auto& e : d.entries) {
      at_span(e.span, [&] {
        auto i = dom.element_index(e.in);
        auto j = cod.element_index(e.out);
        for (const auto& [col, p] : rows[i]) {
          if (col == j) {
            fail(ErrorKind::Type, "entry " + dom.element_name(i) + " -> " +
                                      cod.element_name(j) + " is listed twice");
          }
        }
        auto p = parse_rational(e.probability);
        if (p < 0) fail(ErrorKind::Type, "negative probability " + e.probability);
        rows[i].emplace_back(j, p);
      });
    }
    return at_span(d.span, [&] { return Morphism::stochastic(dom, cod, std::move(rows)); });
  }

  Morphism builtin(const Term& t, const std::optional<std::pair<Object, Object>>& typing) {
    const auto b = backend(t.span);
    std::vector<Object> args;
    for (const auto& a : t.args) args.push_back(object(a));
    auto want_args = [&](std::size_t n) {
      if (!args.empty() && args.size() != n) {
        fail(ErrorKind::Type, "'" + t.name + "' takes " + std::to_string(n) +
                                  " type argument" + (n == 1 ? "" : "s"));
      }
      if (args.empty() && !typing) {
        fail(ErrorKind::Type, "'" + t.name + "' needs type arguments here, e.g. " + t.name +
                                  (n == 1 ? "[X]" : "[X, Y]"));
      }
    };
    if (t.name == "id" || t.name == "copy" || t.name == "discard") {
      want_args(1);
      const Object x = args.empty() ? typing->first : args.front();
      if (t.name == "id") return identity(x);
      if (t.name == "copy") return copy(x);
      return discard(x);
    }
    if (t.name == "swap") {
      want_args(2);
      if (!args.empty()) return swap(args[0], args[1]);
      const auto& [dom, cod] = *typing;
      const auto n = factor_count(dom);
      for (std::size_t k = 0; k <= n; ++k) {
        auto left = sub_object(dom, 0, k);
        auto right = sub_object(dom, k, n);
        if (tensor(right, left) == cod) return swap(left, right);
      }
      fail(ErrorKind::Type, "no swap is typed " + dom.to_string() + " -> " + cod.to_string());
    }
    if (!args.empty()) fail(ErrorKind::Type, "'" + t.name + "' takes no type arguments");
    if (b != Backend::BigFn) {
      fail(ErrorKind::Unsupported, "'" + t.name + "' is an integer builtin; it needs bigfn");
    }
    if (t.name == "zero") return Morphism::big(bigfn::zero());
    if (t.name == "one") return Morphism::big(bigfn::one());
    if (t.name == "succ") return Morphism::big(bigfn::succ());
    if (t.name == "add") return Morphism::big(bigfn::add());
    if (t.name == "proj1") return Morphism::big(bigfn::proj1());
    return Morphism::big(bigfn::proj2());
  }

  Morphism term_unchecked(const Term& t, const std::optional<std::pair<Object, Object>>& typing) {
    switch (t.kind) {
      case Term::Kind::Ref: {
        auto it = out_.gens.find(t.name);
        if (it == out_.gens.end()) fail(ErrorKind::Type, "unknown generator '" + t.name + "'");
        return it->second;
      }
      case Term::Kind::Builtin: return builtin(t, typing);
      case Term::Kind::Compose: return compose(term(*t.lhs), term(*t.rhs));
      case Term::Kind::Tensor: return tensor(term(*t.lhs), term(*t.rhs));
    }
    fail(ErrorKind::Type, "malformed term");
  }

  // Index from which every eventually-constant ingredient of e is constant.
  std::size_t horizon(const Expr& e) const {
    switch (e.kind) {
      case Expr::Kind::Lift: return e.lift_prefix.size();
      case Expr::Kind::Seq:
      case Expr::Kind::Par: return std::max(horizon(*e.lhs), horizon(*e.rhs));
      case Expr::Kind::Delay: return horizon(*e.lhs) + 1;
      case Expr::Kind::Feedback: return std::max(horizon(*e.lhs), e.carrier.prefix.size() + 1);
      case Expr::Kind::Stages: {
        std::size_t h = 0;
        for (const auto& s : e.stages) h = std::max(h, s.index);
        return h;
      }
      case Expr::Kind::Ref: {
        auto it = horizons_.find(e.name);
        return it == horizons_.end() ? 0 : it->second;
      }
    }
    return 0;
  }

  StreamComb stages(const Expr& e) {
    const auto b = backend(e.span);
    std::vector<Object> memories;
    std::vector<Morphism> pieces;
    std::optional<Object> tail_memory;
    std::optional<Morphism> tail_piece;
    for (const auto& s : e.stages) {
      if (tail_piece) fail_at(ErrorKind::Type, "no stage may follow the tail entry", s.span);
      if (s.index != pieces.size()) {
        fail_at(ErrorKind::Type,
                "stage entries must be numbered 0, 1, ... in order; expected " +
                    std::to_string(pieces.size()) + ", found " + std::to_string(s.index),
                s.span);
      }
      auto mem = object(s.memory);
      auto piece = term(*s.piece);
      if (s.tail) {
        tail_memory = mem;
        tail_piece = piece;
      } else {
        memories.push_back(mem);
        pieces.push_back(piece);
      }
    }
    if (!tail_piece) {
      fail_at(ErrorKind::Type, "a stages block needs a final 'tail(k)' entry", e.span);
    }
    const auto k = pieces.size();
    auto memory_at = [=](std::size_t n) { return n < k ? memories[n] : *tail_memory; };
    auto piece_at = [=](std::size_t n) { return n < k ? pieces[n] : *tail_piece; };
    auto before = [&](std::size_t n) { return n == 0 ? Object::unit(b) : memory_at(n - 1); };
    // Families are read off the pieces; from k + 1 on everything is constant.
    std::vector<Object> in, out;
    for (std::size_t n = 0; n <= k + 1; ++n) {
      const auto& p = piece_at(n);
      auto x = p.domain().strip_prefix(before(n));
      auto y = p.codomain().strip_prefix(memory_at(n));
      if (!x || !y) {
        const auto& span = n < k ? e.stages[n].span : e.stages.back().span;
        fail_at(ErrorKind::Type,
                "stage " + std::to_string(n) + " piece " + p.domain().to_string() + " -> " +
                    p.codomain().to_string() + " does not fit memory " +
                    before(n).to_string() + " before and " + memory_at(n).to_string() +
                    " after",
                span);
      }
      in.push_back(*x);
      out.push_back(*y);
    }
    Object in_tail = in.back(), out_tail = out.back();
    in.pop_back();
    out.pop_back();
    return StreamComb(ObjectFamily(std::move(in), std::move(in_tail)),
                      ObjectFamily(std::move(out), std::move(out_tail)), memory_at, piece_at);
  }

  StreamComb expr(const Expr& e) {
    switch (e.kind) {
      case Expr::Kind::Ref: {
        auto it = out_.combs.find(e.name);
        if (it == out_.combs.end()) {
          fail_at(ErrorKind::Type, "unknown comb '" + e.name + "'", e.span);
        }
        return it->second;
      }
      case Expr::Kind::Lift: {
        std::vector<Morphism> prefix;
        for (const auto& t : e.lift_prefix) prefix.push_back(term(*t));
        auto tail = term(*e.lift_tail);
        return at_span(e.span, [&] { return lift(std::move(prefix), tail); });
      }
      case Expr::Kind::Seq: {
        auto first = expr(*e.lhs);
        auto second = expr(*e.rhs);
        return at_span(e.span, [&] { return compose_seq(second, first); });
      }
      case Expr::Kind::Par: {
        auto left = expr(*e.lhs);
        auto right = expr(*e.rhs);
        return at_span(e.span, [&] { return tensor_par(left, right); });
      }
      case Expr::Kind::Delay: {
        auto inner = expr(*e.lhs);
        return delay_comb(inner);
      }
      case Expr::Kind::Feedback: {
        auto carrier = family(e.carrier);
        auto inner = expr(*e.lhs);
        return at_span(e.span, [&] { return feedback(carrier, inner); });
      }
      case Expr::Kind::Stages: return stages(e);
    }
    fail_at(ErrorKind::Type, "malformed comb expression", e.span);
  }

  void declare(const CombDecl& d) {
    claim(d.name, d.span);
    auto in = family(d.inputs);
    auto out = family(d.outputs);
    auto c = expr(*d.body);
    if (first_mismatch(c.inputs(), in) || first_mismatch(c.outputs(), out)) {
      fail_at(ErrorKind::Type,
              "comb '" + d.name + "' is declared " + in.to_string() + " -> " + out.to_string() +
                  " but its expression is typed " + c.inputs().to_string() + " -> " +
                  c.outputs().to_string(),
              d.span);
    }
    auto h = std::max({horizon(*d.body), in.prefix().size(), out.prefix().size()});
    at_span(d.body->span, [&] {
      for (std::size_t n = 0; n <= h + 1; ++n) c.piece(n);
    });
    horizons_[d.name] = h;
    out_.combs.emplace(d.name, c);
    out_.comb_order.push_back(d.name);
  }

  Elaboration out_;
  std::set<std::string> names_;
  std::map<std::string, std::size_t> horizons_;
};

}  // namespace

const StreamComb& Elaboration::comb(const std::string& name) const {
  auto it = combs.find(name);
  if (it == combs.end()) {
    std::string known;
    for (const auto& n : comb_order) known += (known.empty() ? "" : ", ") + n;
    fail(ErrorKind::Type, "no comb named '" + name + "'" +
                              (known.empty() ? std::string(" (none declared)")
                                             : " (declared: " + known + ")"));
  }
  return it->second;
}

Elaboration elaborate(const Program& p) { return Elaborator().run(p); }

StreamComb elaborate(const Program& p, const std::string& comb_name) {
  return elaborate(p).comb(comb_name);
}

bigfn::Expr parse_bigfn_term(std::string_view source) {
  auto t = parse_term(source);
  Elaborator e;
  e.set_backend(Backend::BigFn);
  return e.term(*t).expr();
}

}  // namespace comb::dsl
