#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "comb/error.hpp"

namespace comb::dsl {

enum class Tok {
  Ident,
  Number,
  Arrow,     // ->
  Semi,      // ;
  Comma,     // ,
  Colon,     // :
  Equals,    // =
  LBracket,  // [
  RBracket,  // ]
  LBrace,    // {
  RBrace,    // }
  LParen,    // (
  RParen,    // )
  Star,      // *
  Dot,       // .
  Bar,       // |
  Slash,     // /
  Minus,     // - (only in negative rationals)
  End,
};

const char* describe(Tok t);

struct Token {
  Tok kind = Tok::End;
  std::string text;
  SourceSpan span;
};

// Comments run from `#` or `//` to the end of the line.
std::vector<Token> lex(std::string_view source, const std::string& file);

}  // namespace comb::dsl
