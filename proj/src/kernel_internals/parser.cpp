#include "miniverif/kernel_internals/parser.hpp"

#include <utility>

namespace miniverif::frontend {

using namespace miniverif::ast;

namespace {

struct SyntaxError {
  Diagnostic diagnostic;
};

[[noreturn]] void fail(Location loc, std::string message) {
  throw SyntaxError{Diagnostic{DiagCode::syntax_error, std::move(loc), std::move(message)}};
}

class Parser {
 public:
  Parser(std::vector<Token> tokens, bool annotation_context)
      : tokens_(std::move(tokens)), annotation_(annotation_context) {}

  TranslationUnit parse_unit();
  ExprPtr parse_whole_expr();  // annotation bodies: one expression, then end

 private:
  const Token& peek(std::size_t ahead = 0) const {
    std::size_t i = pos_ + ahead;
    return i < tokens_.size() ? tokens_[i] : tokens_.back();
  }
  bool at(TokenKind kind) const { return peek().kind == kind; }
  Token take() { return tokens_[pos_ < tokens_.size() - 1 ? pos_++ : pos_]; }
  Token expect(TokenKind kind) {
    if (!at(kind))
      fail(peek().loc, "expected " + std::string(token_kind_name(kind)) + ", found " +
                           std::string(token_kind_name(peek().kind)));
    return take();
  }

  // Annotation bodies are parsed by a nested Parser over the body tokens.
  Annotation parse_annotation(const Token& tok);

  FunctionDef parse_fundef(Contract contract);
  void parse_decl(FunctionDef& fn);
  StmtPtr parse_stmt(std::vector<Annotation> asserts);
  StmtPtr parse_stmt_or_null();  // handles leading asserts; null at '}'
  std::vector<StmtPtr> parse_stmt_list();

  ExprPtr parse_expr();
  ExprPtr parse_or();
  ExprPtr parse_and();
  ExprPtr parse_comparison();
  ExprPtr parse_additive();
  ExprPtr parse_multiplicative();
  ExprPtr parse_unary();
  ExprPtr parse_primary();

  ExprPtr make_expr(Location loc) {
    auto e = std::make_unique<Expr>();
    e->loc = std::move(loc);
    return e;
  }

  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
  bool annotation_ = false;
};

Annotation Parser::parse_annotation(const Token& tok) {
  Parser body(tok.annotation_body, /*annotation_context=*/true);
  Annotation ann;
  ann.kind = tok.annotation_kind;
  ann.loc = tok.loc;
  ann.predicate = body.parse_whole_expr();
  return ann;
}

ExprPtr Parser::parse_whole_expr() {
  if (tokens_.empty()) fail(Location{}, "empty predicate");
  // Body token lists carry no end_of_file sentinel; append a synthetic one
  // located after the last token so peek() stays well defined.
  Token eof;
  eof.kind = TokenKind::end_of_file;
  eof.loc = tokens_.back().loc;
  tokens_.push_back(std::move(eof));
  ExprPtr e = parse_expr();
  if (!at(TokenKind::end_of_file))
    fail(peek().loc, "unexpected " + std::string(token_kind_name(peek().kind)) +
                         " after predicate");
  return e;
}

ExprPtr Parser::parse_expr() { return parse_or(); }

ExprPtr Parser::parse_or() {
  ExprPtr lhs = parse_and();
  while (at(TokenKind::or_or)) {
    take();
    auto node = make_expr(lhs->loc);
    node->node = Expr::Binary{BinaryOp::lor, std::move(lhs), parse_and()};
    lhs = std::move(node);
  }
  return lhs;
}

ExprPtr Parser::parse_and() {
  ExprPtr lhs = parse_comparison();
  while (at(TokenKind::and_and)) {
    take();
    auto node = make_expr(lhs->loc);
    node->node = Expr::Binary{BinaryOp::land, std::move(lhs), parse_comparison()};
    lhs = std::move(node);
  }
  return lhs;
}

ExprPtr Parser::parse_comparison() {
  ExprPtr lhs = parse_additive();
  while (true) {
    BinaryOp op;
    switch (peek().kind) {
      case TokenKind::lt: op = BinaryOp::lt; break;
      case TokenKind::le: op = BinaryOp::le; break;
      case TokenKind::gt: op = BinaryOp::gt; break;
      case TokenKind::ge: op = BinaryOp::ge; break;
      case TokenKind::eq: op = BinaryOp::eq; break;
      case TokenKind::ne: op = BinaryOp::ne; break;
      default: return lhs;
    }
    take();
    auto node = make_expr(lhs->loc);
    node->node = Expr::Binary{op, std::move(lhs), parse_additive()};
    lhs = std::move(node);
  }
}

ExprPtr Parser::parse_additive() {
  ExprPtr lhs = parse_multiplicative();
  while (at(TokenKind::plus) || at(TokenKind::minus)) {
    BinaryOp op = at(TokenKind::plus) ? BinaryOp::add : BinaryOp::sub;
    take();
    auto node = make_expr(lhs->loc);
    node->node = Expr::Binary{op, std::move(lhs), parse_multiplicative()};
    lhs = std::move(node);
  }
  return lhs;
}

ExprPtr Parser::parse_multiplicative() {
  ExprPtr lhs = parse_unary();
  while (at(TokenKind::star) || at(TokenKind::slash) || at(TokenKind::percent)) {
    BinaryOp op = at(TokenKind::star)    ? BinaryOp::mul
                  : at(TokenKind::slash) ? BinaryOp::div
                                         : BinaryOp::rem;
    take();
    auto node = make_expr(lhs->loc);
    node->node = Expr::Binary{op, std::move(lhs), parse_unary()};
    lhs = std::move(node);
  }
  return lhs;
}

ExprPtr Parser::parse_unary() {
  if (at(TokenKind::minus) || at(TokenKind::bang)) {
    Token op = take();
    auto node = make_expr(op.loc);
    node->node = Expr::Unary{op.kind == TokenKind::minus ? UnaryOp::neg : UnaryOp::lnot,
                             parse_unary()};
    return node;
  }
  return parse_primary();
}

ExprPtr Parser::parse_primary() {
  if (at(TokenKind::int_literal)) {
    Token tok = take();
    auto node = make_expr(tok.loc);
    node->node = Expr::IntLit{tok.int_value};
    return node;
  }
  if (at(TokenKind::lparen)) {
    take();
    ExprPtr inner = parse_expr();
    expect(TokenKind::rparen);
    return inner;
  }
  if (at(TokenKind::ampersand)) {
    Token amp = take();
    Token name = expect(TokenKind::identifier);
    auto node = make_expr(amp.loc);
    node->node = Expr::AddrOfFn{name.text};
    return node;
  }
  if (at(TokenKind::result_kw)) {
    Token tok = take();
    auto node = make_expr(tok.loc);
    node->node = Expr::Result{};
    return node;
  }
  if (at(TokenKind::identifier)) {
    Token name = take();
    if (at(TokenKind::lparen)) {
      take();
      Expr::Call call{name.text, {}, CallKind::unresolved};
      if (!at(TokenKind::rparen)) {
        call.args.push_back(parse_expr());
        while (at(TokenKind::comma)) {
          take();
          call.args.push_back(parse_expr());
        }
      }
      expect(TokenKind::rparen);
      auto node = make_expr(name.loc);
      node->node = std::move(call);
      return node;
    }
    if (at(TokenKind::lbracket)) {
      take();
      ExprPtr index = parse_expr();
      expect(TokenKind::rbracket);
      auto node = make_expr(name.loc);
      node->node = Expr::ArrayRead{name.text, std::move(index)};
      return node;
    }
    auto node = make_expr(name.loc);
    node->node = Expr::Var{name.text};
    return node;
  }
  fail(peek().loc, "expected expression, found " +
                       std::string(token_kind_name(peek().kind)));
}

StmtPtr Parser::parse_stmt_or_null() {
  std::vector<Annotation> asserts;
  while (at(TokenKind::annotation)) {
    Token tok = take();
    if (tok.annotation_kind != AnnotationKind::assertion)
      fail(tok.loc, "requires/ensures annotations belong before a function definition");
    asserts.push_back(parse_annotation(tok));
  }
  if (at(TokenKind::rbrace)) {
    if (!asserts.empty())
      fail(peek().loc, "assert annotation is not followed by a statement");
    return nullptr;
  }
  return parse_stmt(std::move(asserts));
}

std::vector<StmtPtr> Parser::parse_stmt_list() {
  std::vector<StmtPtr> stmts;
  while (StmtPtr s = parse_stmt_or_null()) stmts.push_back(std::move(s));
  return stmts;
}

StmtPtr Parser::parse_stmt(std::vector<Annotation> asserts) {
  auto stmt = std::make_unique<Stmt>();
  stmt->loc = peek().loc;
  stmt->asserts = std::move(asserts);

  switch (peek().kind) {
    case TokenKind::lbrace: {
      take();
      Stmt::Block block{parse_stmt_list()};
      expect(TokenKind::rbrace);
      stmt->node = std::move(block);
      return stmt;
    }
    case TokenKind::kw_if: {
      take();
      expect(TokenKind::lparen);
      ExprPtr cond = parse_expr();
      expect(TokenKind::rparen);
      StmtPtr then_branch = parse_stmt({});
      StmtPtr else_branch;
      if (at(TokenKind::kw_else)) {
        take();
        else_branch = parse_stmt({});
      }
      stmt->node = Stmt::If{std::move(cond), std::move(then_branch), std::move(else_branch)};
      return stmt;
    }
    case TokenKind::kw_while: {
      take();
      expect(TokenKind::lparen);
      ExprPtr cond = parse_expr();
      expect(TokenKind::rparen);
      stmt->node = Stmt::While{std::move(cond), parse_stmt({})};
      return stmt;
    }
    case TokenKind::kw_return: {
      take();
      ExprPtr value = parse_expr();
      expect(TokenKind::semicolon);
      stmt->node = Stmt::Return{std::move(value)};
      return stmt;
    }
    case TokenKind::kw_int:
    case TokenKind::kw_fnptr:
      fail(peek().loc, "declarations must precede the statements of a function body");
    case TokenKind::identifier: {
      if (peek(1).kind == TokenKind::assign) {
        Token name = take();
        take();  // '='
        auto target = make_expr(name.loc);
        target->node = Expr::Var{name.text};
        ExprPtr value = parse_expr();
        expect(TokenKind::semicolon);
        stmt->node = Stmt::Assign{std::move(target), std::move(value)};
        return stmt;
      }
      if (peek(1).kind == TokenKind::lbracket) {
        Token name = take();
        take();  // '['
        ExprPtr index = parse_expr();
        expect(TokenKind::rbracket);
        expect(TokenKind::assign);
        ExprPtr value = parse_expr();
        expect(TokenKind::semicolon);
        stmt->node = Stmt::ArrayAssign{name.text, std::move(index), std::move(value)};
        return stmt;
      }
      if (peek(1).kind == TokenKind::lparen) {
        ExprPtr call = parse_primary();
        expect(TokenKind::semicolon);
        stmt->node = Stmt::ExprStmt{std::move(call)};
        return stmt;
      }
      fail(peek(1).loc, "expected '=', '[' or '(' after identifier");
    }
    default:
      fail(peek().loc, "expected statement, found " +
                           std::string(token_kind_name(peek().kind)));
  }
}

void Parser::parse_decl(FunctionDef& fn) {
  if (at(TokenKind::kw_fnptr)) {
    Token kw = take();
    Token name = expect(TokenKind::identifier);
    expect(TokenKind::semicolon);
    fn.locals.push_back(Local{name.text, Type::fnptr(), kw.loc});
    return;
  }
  Token kw = expect(TokenKind::kw_int);
  Token name = expect(TokenKind::identifier);
  if (at(TokenKind::lbracket)) {
    take();
    Token size = expect(TokenKind::int_literal);
    if (size.int_value <= 0) fail(size.loc, "array size must be positive");
    expect(TokenKind::rbracket);
    expect(TokenKind::semicolon);
    fn.locals.push_back(Local{name.text, Type::array(size.int_value), kw.loc});
    return;
  }
  fn.locals.push_back(Local{name.text, Type::integer(), kw.loc});
  if (at(TokenKind::assign)) {
    // `int x = e;` is sugar for a declaration plus an assignment.
    take();
    auto stmt = std::make_unique<Stmt>();
    stmt->loc = name.loc;
    auto target = make_expr(name.loc);
    target->node = Expr::Var{name.text};
    ExprPtr value = parse_expr();
    stmt->node = Stmt::Assign{std::move(target), std::move(value)};
    fn.body.push_back(std::move(stmt));
  }
  expect(TokenKind::semicolon);
}

FunctionDef Parser::parse_fundef(Contract contract) {
  FunctionDef fn;
  expect(TokenKind::kw_int);
  Token name = expect(TokenKind::identifier);
  fn.name = name.text;
  fn.loc = name.loc;
  fn.contract = std::move(contract);
  if (fn.contract.requires_clause) fn.contract.requires_clause->function = fn.name;
  if (fn.contract.ensures_clause) fn.contract.ensures_clause->function = fn.name;

  expect(TokenKind::lparen);
  if (!at(TokenKind::rparen)) {
    do {
      expect(TokenKind::kw_int);
      Token pname = expect(TokenKind::identifier);
      fn.params.push_back(Param{pname.text, Type::integer(), pname.loc});
    } while (at(TokenKind::comma) && (take(), true));
  }
  expect(TokenKind::rparen);
  expect(TokenKind::lbrace);
  while (at(TokenKind::kw_int) || at(TokenKind::kw_fnptr)) {
    // Lookahead: `int f(` starts a nested definition, which is an error
    // reported by the statement parser; declarations are `int x ...`.
    if (peek(1).kind == TokenKind::identifier && peek(2).kind == TokenKind::lparen)
      fail(peek().loc, "nested function definitions are not supported");
    parse_decl(fn);
  }
  auto stmts = parse_stmt_list();
  for (auto& s : stmts) fn.body.push_back(std::move(s));
  expect(TokenKind::rbrace);
  return fn;
}

TranslationUnit Parser::parse_unit() {
  TranslationUnit unit;
  while (!at(TokenKind::end_of_file)) {
    Contract contract;
    while (at(TokenKind::annotation)) {
      Token tok = take();
      if (tok.annotation_kind == AnnotationKind::assertion)
        fail(tok.loc, "assert annotation is not followed by a statement");
      Annotation ann = parse_annotation(tok);
      if (tok.annotation_kind == AnnotationKind::requires_clause) {
        if (contract.requires_clause) fail(tok.loc, "duplicate requires clause");
        if (contract.ensures_clause) fail(tok.loc, "requires must precede ensures");
        contract.requires_clause = std::move(ann);
      } else {
        if (contract.ensures_clause) fail(tok.loc, "duplicate ensures clause");
        contract.ensures_clause = std::move(ann);
      }
    }
    unit.functions.push_back(parse_fundef(std::move(contract)));
  }
  return unit;
}

// --- final numbering pass -------------------------------------------------
//
// Ids follow the read-only traversal order of ast::visit. The attach ids of
// annotations and the side tables are filled afterwards, once every node
// has its final id.

class Numberer {
 public:
  void run(TranslationUnit& unit) {
    for (auto& f : unit.functions) number_function(f);
    unit.node_count = next_;
    unit.node_locations = std::move(locations_);
    unit.enclosing_stmt.assign(unit.node_count, NodeId::invalid());
    for (auto& f : unit.functions)
      for (auto& s : f.body) fill_enclosing(unit, *s);
    for (auto& f : unit.functions) fill_attach(f);
  }

 private:
  NodeId fresh(const Location& loc) {
    locations_.push_back(loc);
    return NodeId{next_++};
  }

  void number_expr(Expr& e) {
    e.id = fresh(e.loc);
    std::visit(
        [&](auto& n) {
          using T = std::decay_t<decltype(n)>;
          if constexpr (std::is_same_v<T, Expr::ArrayRead>) {
            number_expr(*n.index);
          } else if constexpr (std::is_same_v<T, Expr::Binary>) {
            number_expr(*n.lhs);
            number_expr(*n.rhs);
          } else if constexpr (std::is_same_v<T, Expr::Unary>) {
            number_expr(*n.operand);
          } else if constexpr (std::is_same_v<T, Expr::Call>) {
            for (auto& a : n.args) number_expr(*a);
          }
        },
        e.node);
  }

  void number_stmt(Stmt& s) {
    for (auto& a : s.asserts) number_expr(*a.predicate);
    s.id = fresh(s.loc);
    std::visit(
        [&](auto& n) {
          using T = std::decay_t<decltype(n)>;
          if constexpr (std::is_same_v<T, Stmt::Assign>) {
            number_expr(*n.target);
            number_expr(*n.value);
          } else if constexpr (std::is_same_v<T, Stmt::ArrayAssign>) {
            number_expr(*n.index);
            number_expr(*n.value);
          } else if constexpr (std::is_same_v<T, Stmt::If>) {
            number_expr(*n.cond);
            number_stmt(*n.then_branch);
            if (n.else_branch) number_stmt(*n.else_branch);
          } else if constexpr (std::is_same_v<T, Stmt::While>) {
            number_expr(*n.cond);
            number_stmt(*n.body);
          } else if constexpr (std::is_same_v<T, Stmt::Return>) {
            number_expr(*n.value);
          } else if constexpr (std::is_same_v<T, Stmt::ExprStmt>) {
            number_expr(*n.call);
          } else if constexpr (std::is_same_v<T, Stmt::Block>) {
            for (auto& inner : n.stmts) number_stmt(*inner);
          }
        },
        s.node);
  }

  void number_function(FunctionDef& f) {
    f.id = fresh(f.loc);
    if (f.contract.requires_clause) number_expr(*f.contract.requires_clause->predicate);
    if (f.contract.ensures_clause) number_expr(*f.contract.ensures_clause->predicate);
    for (auto& s : f.body) number_stmt(*s);
  }

  void mark_expr(TranslationUnit& unit, const Expr& e, NodeId stmt) {
    unit.enclosing_stmt[e.id.raw] = stmt;
    std::visit(
        [&](const auto& n) {
          using T = std::decay_t<decltype(n)>;
          if constexpr (std::is_same_v<T, Expr::ArrayRead>) {
            mark_expr(unit, *n.index, stmt);
          } else if constexpr (std::is_same_v<T, Expr::Binary>) {
            mark_expr(unit, *n.lhs, stmt);
            mark_expr(unit, *n.rhs, stmt);
          } else if constexpr (std::is_same_v<T, Expr::Unary>) {
            mark_expr(unit, *n.operand, stmt);
          } else if constexpr (std::is_same_v<T, Expr::Call>) {
            for (const auto& a : n.args) mark_expr(unit, *a, stmt);
          }
        },
        e.node);
  }

  void fill_enclosing(TranslationUnit& unit, const Stmt& s) {
    unit.enclosing_stmt[s.id.raw] = s.id;
    std::visit(
        [&](const auto& n) {
          using T = std::decay_t<decltype(n)>;
          if constexpr (std::is_same_v<T, Stmt::Assign>) {
            mark_expr(unit, *n.target, s.id);
            mark_expr(unit, *n.value, s.id);
          } else if constexpr (std::is_same_v<T, Stmt::ArrayAssign>) {
            mark_expr(unit, *n.index, s.id);
            mark_expr(unit, *n.value, s.id);
          } else if constexpr (std::is_same_v<T, Stmt::If>) {
            mark_expr(unit, *n.cond, s.id);
            fill_enclosing(unit, *n.then_branch);
            if (n.else_branch) fill_enclosing(unit, *n.else_branch);
          } else if constexpr (std::is_same_v<T, Stmt::While>) {
            mark_expr(unit, *n.cond, s.id);
            fill_enclosing(unit, *n.body);
          } else if constexpr (std::is_same_v<T, Stmt::Return>) {
            mark_expr(unit, *n.value, s.id);
          } else if constexpr (std::is_same_v<T, Stmt::ExprStmt>) {
            mark_expr(unit, *n.call, s.id);
          } else if constexpr (std::is_same_v<T, Stmt::Block>) {
            for (const auto& inner : n.stmts) fill_enclosing(unit, *inner);
          }
        },
        s.node);
  }

  void fill_attach_stmt(Stmt& s) {
    for (auto& a : s.asserts) a.attach = s.id;
    std::visit(
        [&](auto& n) {
          using T = std::decay_t<decltype(n)>;
          if constexpr (std::is_same_v<T, Stmt::If>) {
            fill_attach_stmt(*n.then_branch);
            if (n.else_branch) fill_attach_stmt(*n.else_branch);
          } else if constexpr (std::is_same_v<T, Stmt::While>) {
            fill_attach_stmt(*n.body);
          } else if constexpr (std::is_same_v<T, Stmt::Block>) {
            for (auto& inner : n.stmts) fill_attach_stmt(*inner);
          }
        },
        s.node);
  }

  void fill_attach(FunctionDef& f) {
    if (f.contract.requires_clause) f.contract.requires_clause->attach = f.id;
    if (f.contract.ensures_clause) f.contract.ensures_clause->attach = f.id;
    for (auto& s : f.body) fill_attach_stmt(*s);
  }

  std::uint32_t next_ = 0;
  std::vector<Location> locations_;
};

}  // namespace

ParseResult parse(std::vector<Token> tokens) {
  ParseResult result;
  try {
    Parser parser(std::move(tokens), false);
    TranslationUnit unit = parser.parse_unit();
    Numberer().run(unit);
    result.unit = std::move(unit);
  } catch (SyntaxError& e) {
    result.diagnostics.push_back(std::move(e.diagnostic));
  }
  return result;
}

ParseResult parse_sources(const std::vector<std::pair<std::string, std::string>>& name_text) {
  // Lex each file, splice the token streams, parse once.
  std::vector<Token> tokens;
  ParseResult result;
  for (const auto& [name, text] : name_text) {
    LexResult lexed = tokenize(text, name);
    if (!lexed.ok()) {
      for (auto& d : lexed.diagnostics) result.diagnostics.push_back(std::move(d));
      return result;
    }
    if (!lexed.tokens.empty() && lexed.tokens.back().kind == TokenKind::end_of_file)
      lexed.tokens.pop_back();
    for (auto& t : lexed.tokens) tokens.push_back(std::move(t));
  }
  Token eof;
  eof.kind = TokenKind::end_of_file;
  if (!name_text.empty()) eof.loc.file = name_text.back().first;
  tokens.push_back(std::move(eof));
  return parse(std::move(tokens));
}

}  // namespace miniverif::frontend
