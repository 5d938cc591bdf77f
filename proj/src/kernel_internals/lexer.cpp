#include "miniverif/kernel_internals/lexer.hpp"

#include <cctype>
#include <charconv>
#include <map>

namespace miniverif::frontend {

std::string_view token_kind_name(TokenKind kind) {
  switch (kind) {
    case TokenKind::kw_int: return "'int'";
    case TokenKind::kw_fnptr: return "'fnptr'";
    case TokenKind::kw_if: return "'if'";
    case TokenKind::kw_else: return "'else'";
    case TokenKind::kw_while: return "'while'";
    case TokenKind::kw_return: return "'return'";
    case TokenKind::identifier: return "identifier";
    case TokenKind::int_literal: return "integer literal";
    case TokenKind::lparen: return "'('";
    case TokenKind::rparen: return "')'";
    case TokenKind::lbrace: return "'{'";
    case TokenKind::rbrace: return "'}'";
    case TokenKind::lbracket: return "'['";
    case TokenKind::rbracket: return "']'";
    case TokenKind::semicolon: return "';'";
    case TokenKind::comma: return "','";
    case TokenKind::assign: return "'='";
    case TokenKind::plus: return "'+'";
    case TokenKind::minus: return "'-'";
    case TokenKind::star: return "'*'";
    case TokenKind::slash: return "'/'";
    case TokenKind::percent: return "'%'";
    case TokenKind::lt: return "'<'";
    case TokenKind::le: return "'<='";
    case TokenKind::gt: return "'>'";
    case TokenKind::ge: return "'>='";
    case TokenKind::eq: return "'=='";
    case TokenKind::ne: return "'!='";
    case TokenKind::and_and: return "'&&'";
    case TokenKind::or_or: return "'||'";
    case TokenKind::bang: return "'!'";
    case TokenKind::ampersand: return "'&'";
    case TokenKind::result_kw: return "'\\result'";
    case TokenKind::annotation: return "annotation";
    case TokenKind::end_of_file: return "end of file";
  }
  return "token";
}

namespace {

const std::map<std::string_view, TokenKind> kKeywords = {
    {"int", TokenKind::kw_int},       {"fnptr", TokenKind::kw_fnptr},
    {"if", TokenKind::kw_if},         {"else", TokenKind::kw_else},
    {"while", TokenKind::kw_while},   {"return", TokenKind::kw_return},
};

class Lexer {
 public:
  Lexer(std::string_view text, std::string_view file, bool in_annotation)
      : text_(text), file_(file), in_annotation_(in_annotation) {}

  // Lexing an annotation body starts from the annotation's own position.
  void set_position(int line, int column) {
    line_ = line;
    column_ = column;
  }

  LexResult run();

 private:
  Location here() const { return Location{std::string(file_), line_, column_}; }

  bool at_end() const { return pos_ >= text_.size(); }
  char peek(std::size_t ahead = 0) const {
    return pos_ + ahead < text_.size() ? text_[pos_ + ahead] : '\0';
  }
  char advance() {
    char c = text_[pos_++];
    if (c == '\n') {
      ++line_;
      column_ = 1;
    } else {
      ++column_;
    }
    return c;
  }

  void push(TokenKind kind, Location loc) { result_.tokens.push_back(Token{kind, loc}); }
  void error(DiagCode code, Location loc, std::string message) {
    result_.diagnostics.push_back(Diagnostic{code, loc, std::move(message)});
  }

  void lex_identifier(Location start);
  void lex_number(Location start);
  void lex_comment_or_slash(Location start);
  void lex_annotation(Location start);

  std::string_view text_;
  std::string_view file_;
  bool in_annotation_;
  std::size_t pos_ = 0;
  int line_ = 1;
  int column_ = 1;
  LexResult result_;
};

void Lexer::lex_identifier(Location start) {
  std::string word;
  while (!at_end() && (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_'))
    word += advance();
  auto kw = kKeywords.find(word);
  Token tok{kw != kKeywords.end() ? kw->second : TokenKind::identifier, start};
  tok.text = std::move(word);
  result_.tokens.push_back(std::move(tok));
}

void Lexer::lex_number(Location start) {
  std::string digits;
  while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) digits += advance();
  Token tok{TokenKind::int_literal, start};
  auto [ptr, ec] =
      std::from_chars(digits.data(), digits.data() + digits.size(), tok.int_value);
  if (ec != std::errc() || ptr != digits.data() + digits.size()) {
    error(DiagCode::bad_literal, start, "integer literal out of range: " + digits);
    return;
  }
  result_.tokens.push_back(std::move(tok));
}

void Lexer::lex_annotation(Location start) {
  // Past "//@". Body runs to end of line and must close with ';'.
  std::string kind_word;
  while (!at_end() && (peek() == ' ' || peek() == '\t')) advance();
  Location kind_loc = here();
  while (!at_end() && std::isalpha(static_cast<unsigned char>(peek()))) kind_word += advance();

  ast::AnnotationKind kind;
  if (kind_word == "assert") {
    kind = ast::AnnotationKind::assertion;
  } else if (kind_word == "requires") {
    kind = ast::AnnotationKind::requires_clause;
  } else if (kind_word == "ensures") {
    kind = ast::AnnotationKind::ensures_clause;
  } else {
    error(DiagCode::bad_annotation, kind_loc,
          "expected 'assert', 'requires' or 'ensures' after '//@'");
    while (!at_end() && peek() != '\n') advance();
    return;
  }

  Location body_start = here();
  std::string body;
  while (!at_end() && peek() != '\n') body += advance();

  auto last = body.find_last_not_of(" \t\r");
  if (last == std::string::npos || body[last] != ';') {
    error(DiagCode::bad_annotation, body_start, "annotation must end with ';'");
    return;
  }
  body = body.substr(0, last);  // strip the terminator

  Lexer body_lexer(body, file_, /*in_annotation=*/true);
  body_lexer.set_position(body_start.line, body_start.column);
  LexResult body_result = body_lexer.run();
  for (auto& d : body_result.diagnostics) result_.diagnostics.push_back(std::move(d));
  if (!body_result.tokens.empty() &&
      body_result.tokens.back().kind == TokenKind::end_of_file)
    body_result.tokens.pop_back();

  Token tok{TokenKind::annotation, start};
  tok.annotation_kind = kind;
  tok.annotation_body = std::move(body_result.tokens);
  result_.tokens.push_back(std::move(tok));
}

void Lexer::lex_comment_or_slash(Location start) {
  if (peek() != '/') {
    push(TokenKind::slash, start);
    return;
  }
  advance();  // second '/'
  if (peek() == '@') {
    advance();
    lex_annotation(start);
    return;
  }
  while (!at_end() && peek() != '\n') advance();
}

LexResult Lexer::run() {
  while (!at_end()) {
    Location start = here();
    char c = advance();
    switch (c) {
      case ' ':
      case '\t':
      case '\r':
      case '\n':
        break;
      case '(': push(TokenKind::lparen, start); break;
      case ')': push(TokenKind::rparen, start); break;
      case '{': push(TokenKind::lbrace, start); break;
      case '}': push(TokenKind::rbrace, start); break;
      case '[': push(TokenKind::lbracket, start); break;
      case ']': push(TokenKind::rbracket, start); break;
      case ';': push(TokenKind::semicolon, start); break;
      case ',': push(TokenKind::comma, start); break;
      case '+': push(TokenKind::plus, start); break;
      case '-': push(TokenKind::minus, start); break;
      case '*': push(TokenKind::star, start); break;
      case '%': push(TokenKind::percent, start); break;
      case '/': lex_comment_or_slash(start); break;
      case '=':
        if (peek() == '=') {
          advance();
          push(TokenKind::eq, start);
        } else {
          push(TokenKind::assign, start);
        }
        break;
      case '<':
        if (peek() == '=') {
          advance();
          push(TokenKind::le, start);
        } else {
          push(TokenKind::lt, start);
        }
        break;
      case '>':
        if (peek() == '=') {
          advance();
          push(TokenKind::ge, start);
        } else {
          push(TokenKind::gt, start);
        }
        break;
      case '!':
        if (peek() == '=') {
          advance();
          push(TokenKind::ne, start);
        } else {
          push(TokenKind::bang, start);
        }
        break;
      case '&':
        if (peek() == '&') {
          advance();
          push(TokenKind::and_and, start);
        } else {
          push(TokenKind::ampersand, start);
        }
        break;
      case '|':
        if (peek() == '|') {
          advance();
          push(TokenKind::or_or, start);
        } else {
          error(DiagCode::illegal_character, start, "stray '|'");
        }
        break;
      case '\\':
        if (in_annotation_ && text_.substr(pos_, 6) == "result") {
          for (int i = 0; i < 6; ++i) advance();
          push(TokenKind::result_kw, start);
        } else {
          error(DiagCode::illegal_character, start, "illegal character '\\'");
        }
        break;
      default:
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
          --pos_;
          --column_;
          lex_identifier(start);
        } else if (std::isdigit(static_cast<unsigned char>(c))) {
          --pos_;
          --column_;
          lex_number(start);
        } else {
          error(DiagCode::illegal_character, start, "illegal character");
        }
        break;
    }
  }
  push(TokenKind::end_of_file, here());
  return std::move(result_);
}

}  // namespace

LexResult tokenize(std::string_view text, std::string_view file) {
  return Lexer(text, file, /*in_annotation=*/false).run();
}

}  // namespace miniverif::frontend
