#include "comb/dsl/lexer.hpp"

#include <cctype>

namespace comb::dsl {

const char* describe(Tok t) {
  switch (t) {
    case Tok::Ident: return "identifier";
    case Tok::Number: return "number";
    case Tok::Arrow: return "'->'";
    case Tok::Semi: return "';'";
    case Tok::Comma: return "','";
    case Tok::Colon: return "':'";
    case Tok::Equals: return "'='";
    case Tok::LBracket: return "'['";
    case Tok::RBracket: return "']'";
    case Tok::LBrace: return "'{'";
    case Tok::RBrace: return "'}'";
    case Tok::LParen: return "'('";
    case Tok::RParen: return "')'";
    case Tok::Star: return "'*'";
    case Tok::Dot: return "'.'";
    case Tok::Bar: return "'|'";
    case Tok::Slash: return "'/'";
    case Tok::Minus: return "'-'";
    case Tok::End: return "end of input";
  }
  return "?";
}

std::vector<Token> lex(std::string_view src, const std::string& file) {
  std::vector<Token> out;
  std::size_t i = 0, line = 1, col = 1;
  auto span_of = [&](std::size_t len) {
    return SourceSpan{file, line, col, col + len};
  };
  auto advance = [&](std::size_t n) {
    i += n;
    col += n;
  };
  while (i < src.size()) {
    char c = src[i];
    if (c == '\n') {
      ++i;
      ++line;
      col = 1;
      continue;
    }
    if (std::isspace(static_cast<unsigned char>(c))) {
      advance(1);
      continue;
    }
    if (c == '#' || (c == '/' && i + 1 < src.size() && src[i + 1] == '/')) {
      while (i < src.size() && src[i] != '\n') advance(1);
      continue;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t j = i;
      while (j < src.size() &&
             (std::isalnum(static_cast<unsigned char>(src[j])) || src[j] == '_' || src[j] == '\'')) {
        ++j;
      }
      out.push_back({Tok::Ident, std::string(src.substr(i, j - i)), span_of(j - i)});
      advance(j - i);
      continue;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t j = i;
      while (j < src.size() && std::isdigit(static_cast<unsigned char>(src[j]))) ++j;
      out.push_back({Tok::Number, std::string(src.substr(i, j - i)), span_of(j - i)});
      advance(j - i);
      continue;
    }
    if (c == '-' && i + 1 < src.size() && src[i + 1] == '>') {
      out.push_back({Tok::Arrow, "->", span_of(2)});
      advance(2);
      continue;
    }
    Tok kind;
    switch (c) {
      case ';': kind = Tok::Semi; break;
      case ',': kind = Tok::Comma; break;
      case ':': kind = Tok::Colon; break;
      case '=': kind = Tok::Equals; break;
      case '[': kind = Tok::LBracket; break;
      case ']': kind = Tok::RBracket; break;
      case '{': kind = Tok::LBrace; break;
      case '}': kind = Tok::RBrace; break;
      case '(': kind = Tok::LParen; break;
      case ')': kind = Tok::RParen; break;
      case '*': kind = Tok::Star; break;
      case '.': kind = Tok::Dot; break;
      case '|': kind = Tok::Bar; break;
      case '/': kind = Tok::Slash; break;
      case '-': kind = Tok::Minus; break;
      default:
        throw Error(ErrorKind::Syntax, std::string("unexpected character '") + c + "'",
                    span_of(1));
    }
    out.push_back({kind, std::string(1, c), span_of(1)});
    advance(1);
  }
  out.push_back({Tok::End, "", SourceSpan{file, line, col, col}});
  return out;
}

}  // namespace comb::dsl
