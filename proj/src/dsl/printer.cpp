#include "comb/dsl/printer.hpp"

#include <sstream>

namespace comb::dsl {

namespace {

std::string join(const std::vector<std::string>& parts, const char* sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) out += sep;
    out += parts[i];
  }
  return out;
}

std::string element(const std::vector<std::string>& labels) {
  if (labels.empty()) return "*";
  if (labels.size() == 1) return labels.front();
  return "(" + join(labels, ", ") + ")";
}

// Levels: 0 composite, 1 tensor operand, 2 atom.
std::string term_at(const Term& t, int level) {
  switch (t.kind) {
    case Term::Kind::Ref: return t.name;
    case Term::Kind::Builtin: {
      if (t.args.empty()) return t.name;
      std::vector<std::string> args;
      for (const auto& a : t.args) args.push_back(print(a));
      return t.name + "[" + join(args, ", ") + "]";
    }
    case Term::Kind::Compose: {
      auto s = term_at(*t.lhs, 0) + " . " + term_at(*t.rhs, 1);
      return level > 0 ? "(" + s + ")" : s;
    }
    case Term::Kind::Tensor: {
      auto s = term_at(*t.lhs, 1) + " * " + term_at(*t.rhs, 2);
      return level > 1 ? "(" + s + ")" : s;
    }
  }
  return "?";
}

// Levels: 0 sequence, 1 parallel operand, 2 prefix-operator operand.
std::string expr_at(const Expr& e, int level) {
  switch (e.kind) {
    case Expr::Kind::Ref: return e.name;
    case Expr::Kind::Lift: {
      std::string s = "lift [";
      if (!e.lift_prefix.empty()) {
        std::vector<std::string> parts;
        for (const auto& t : e.lift_prefix) parts.push_back(print(*t));
        s += join(parts, ", ") + "; ";
      }
      return s + print(*e.lift_tail) + "]";
    }
    case Expr::Kind::Stages: {
      std::vector<std::string> parts;
      for (const auto& st : e.stages) {
        std::string head = st.tail ? "tail(" + std::to_string(st.index) + ")"
                                   : std::to_string(st.index);
        parts.push_back(head + ": " + print(st.memory) + ", " + print(*st.piece));
      }
      return "stages { " + join(parts, "; ") + " }";
    }
    case Expr::Kind::Seq: {
      auto s = expr_at(*e.lhs, 0) + " ; " + expr_at(*e.rhs, 1);
      return level > 0 ? "(" + s + ")" : s;
    }
    case Expr::Kind::Par: {
      auto s = expr_at(*e.lhs, 1) + " | " + expr_at(*e.rhs, 2);
      return level > 1 ? "(" + s + ")" : s;
    }
    case Expr::Kind::Delay: return "delay " + expr_at(*e.lhs, 2);
    case Expr::Kind::Feedback:
      return "feedback [" + print(e.carrier) + "] " + expr_at(*e.lhs, 2);
  }
  return "?";
}

struct DeclPrinter {
  std::ostream& out;
  void operator()(const BackendDecl& d) const {
    out << "backend " << backend_name(d.backend) << ";\n";
  }
  void operator()(const SetDecl& d) const {
    out << "set " << d.name << " = {" << join(d.labels, ", ") << "};\n";
  }
  void operator()(const GenDecl& d) const {
    out << "gen " << d.name << " : " << print(d.domain) << " -> " << print(d.codomain) << " = ";
    switch (d.body) {
      case GenDecl::Body::Table:
      case GenDecl::Body::Matrix: {
        out << (d.body == GenDecl::Body::Table ? "table {" : "matrix {");
        for (std::size_t i = 0; i < d.entries.size(); ++i) {
          const auto& e = d.entries[i];
          out << (i ? ",\n    " : "\n    ") << element(e.in) << " -> " << element(e.out);
          if (d.body == GenDecl::Body::Matrix) out << " : " << e.probability;
        }
        out << "\n}";
        break;
      }
      case GenDecl::Body::Builtin: out << "builtin " << d.builtin; break;
      case GenDecl::Body::Term: out << print(*d.term); break;
    }
    out << ";\n";
  }
  void operator()(const FamilyDecl& d) const {
    out << "family " << d.name << " = " << print(d.family) << ";\n";
  }
  void operator()(const CombDecl& d) const {
    out << "comb " << d.name << " : " << print(d.inputs) << " -> " << print(d.outputs)
        << " =\n    " << print(*d.body) << ";\n";
  }
};

}  // namespace

std::string print(const ObjExpr& o) {
  std::vector<std::string> names;
  for (const auto& a : o.atoms) names.push_back(a.name);
  return join(names, "*");
}

std::string print(const FamExpr& f) {
  if (!f.literal) return print(f.tail);
  std::string s = "[";
  if (!f.prefix.empty()) {
    std::vector<std::string> parts;
    for (const auto& o : f.prefix) parts.push_back(print(o));
    s += join(parts, ", ") + "; ";
  }
  return s + print(f.tail) + "]";
}

std::string print(const Term& t) { return term_at(t, 0); }
std::string print(const Expr& e) { return expr_at(e, 0); }

std::string print(const Program& p) {
  std::ostringstream out;
  for (const auto& d : p.decls) std::visit(DeclPrinter{out}, d);
  return out.str();
}

}  // namespace comb::dsl
