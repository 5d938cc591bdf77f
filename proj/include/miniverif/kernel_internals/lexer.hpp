#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "miniverif/kernel_services/ast.hpp"
#include "miniverif/kernel_services/diagnostics.hpp"

namespace miniverif::frontend {

enum class TokenKind {
  kw_int,
  kw_fnptr,
  kw_if,
  kw_else,
  kw_while,
  kw_return,
  identifier,
  int_literal,
  lparen,
  rparen,
  lbrace,
  rbrace,
  lbracket,
  rbracket,
  semicolon,
  comma,
  assign,
  plus,
  minus,
  star,
  slash,
  percent,
  lt,
  le,
  gt,
  ge,
  eq,
  ne,
  and_and,
  or_or,
  bang,
  ampersand,
  result_kw,   // `\result`, annotation bodies only
  annotation,  // one `//@ ...;` comment, body tokens nested
  end_of_file,
};

std::string_view token_kind_name(TokenKind kind);

struct Token {
  TokenKind kind = TokenKind::end_of_file;
  Location loc;
  std::string text;             // identifier spelling
  std::int64_t int_value = 0;   // int_literal payload
  ast::AnnotationKind annotation_kind = ast::AnnotationKind::assertion;
  std::vector<Token> annotation_body;  // predicate tokens, annotation only
};

struct LexResult {
  std::vector<Token> tokens;  // ends with end_of_file on success
  Diagnostics diagnostics;
  bool ok() const { return diagnostics.empty(); }
};

/// Splits MiniC source into tokens. `//@ <kind> <pred> ;` comments become
/// single annotation tokens carrying the predicate's tokens; plain `//`
/// comments are dropped.
LexResult tokenize(std::string_view text, std::string_view file);

}  // namespace miniverif::frontend
