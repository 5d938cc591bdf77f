#include "miniverif/kernel_services/ast.hpp"

#include <algorithm>

namespace miniverif::ast {

Expr::Expr() = default;
Expr::~Expr() = default;
Expr::Expr(Expr&&) noexcept = default;
Expr& Expr::operator=(Expr&&) noexcept = default;

Stmt::Stmt() = default;
Stmt::~Stmt() = default;
Stmt::Stmt(Stmt&&) noexcept = default;
Stmt& Stmt::operator=(Stmt&&) noexcept = default;

std::string Type::to_string() const {
  switch (kind_) {
    case Kind::unknown: return "<unknown>";
    case Kind::integer: return "int";
    case Kind::boolean: return "bool";
    case Kind::array: return "int[" + std::to_string(size_) + "]";
    case Kind::fnptr: return "fnptr";
  }
  return "<unknown>";
}

std::string_view binary_op_text(BinaryOp op) {
  switch (op) {
    case BinaryOp::add: return "+";
    case BinaryOp::sub: return "-";
    case BinaryOp::mul: return "*";
    case BinaryOp::div: return "/";
    case BinaryOp::rem: return "%";
    case BinaryOp::lt: return "<";
    case BinaryOp::le: return "<=";
    case BinaryOp::gt: return ">";
    case BinaryOp::ge: return ">=";
    case BinaryOp::eq: return "==";
    case BinaryOp::ne: return "!=";
    case BinaryOp::land: return "&&";
    case BinaryOp::lor: return "||";
  }
  return "?";
}

std::string_view unary_op_text(UnaryOp op) {
  return op == UnaryOp::neg ? "-" : "!";
}

bool is_arithmetic(BinaryOp op) {
  return op == BinaryOp::add || op == BinaryOp::sub || op == BinaryOp::mul;
}

bool is_comparison(BinaryOp op) {
  switch (op) {
    case BinaryOp::lt:
    case BinaryOp::le:
    case BinaryOp::gt:
    case BinaryOp::ge:
    case BinaryOp::eq:
    case BinaryOp::ne:
      return true;
    default:
      return false;
  }
}

ExprPtr clone(const Expr& e) {
  auto out = std::make_unique<Expr>();
  out->id = e.id;
  out->loc = e.loc;
  out->type = e.type;
  std::visit(
      [&](const auto& n) {
        using T = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<T, Expr::IntLit>) {
          out->node = Expr::IntLit{n.value};
        } else if constexpr (std::is_same_v<T, Expr::Var>) {
          out->node = Expr::Var{n.name};
        } else if constexpr (std::is_same_v<T, Expr::ArrayRead>) {
          out->node = Expr::ArrayRead{n.array, clone(*n.index)};
        } else if constexpr (std::is_same_v<T, Expr::Binary>) {
          out->node = Expr::Binary{n.op, clone(*n.lhs), clone(*n.rhs)};
        } else if constexpr (std::is_same_v<T, Expr::Unary>) {
          out->node = Expr::Unary{n.op, clone(*n.operand)};
        } else if constexpr (std::is_same_v<T, Expr::Call>) {
          Expr::Call c{n.callee, {}, n.kind};
          c.args.reserve(n.args.size());
          for (const auto& a : n.args) c.args.push_back(clone(*a));
          out->node = std::move(c);
        } else if constexpr (std::is_same_v<T, Expr::AddrOfFn>) {
          out->node = Expr::AddrOfFn{n.function};
        } else {
          out->node = Expr::Result{};
        }
      },
      e.node);
  return out;
}

ExprPtr substitute_vars(const Expr& e,
                        const std::map<std::string, const Expr*>& replacements) {
  if (const auto* v = e.as<Expr::Var>()) {
    auto it = replacements.find(v->name);
    if (it != replacements.end()) return clone(*it->second);
  }
  ExprPtr out = clone(e);
  // Rewrite children of the fresh copy in place.
  std::visit(
      [&](auto& n) {
        using T = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<T, Expr::ArrayRead>) {
          n.index = substitute_vars(*n.index, replacements);
        } else if constexpr (std::is_same_v<T, Expr::Binary>) {
          n.lhs = substitute_vars(*n.lhs, replacements);
          n.rhs = substitute_vars(*n.rhs, replacements);
        } else if constexpr (std::is_same_v<T, Expr::Unary>) {
          n.operand = substitute_vars(*n.operand, replacements);
        } else if constexpr (std::is_same_v<T, Expr::Call>) {
          for (auto& a : n.args) a = substitute_vars(*a, replacements);
        }
      },
      out->node);
  return out;
}

Annotation clone(const Annotation& a) {
  Annotation out;
  out.kind = a.kind;
  out.predicate = a.predicate ? clone(*a.predicate) : nullptr;
  out.attach = a.attach;
  out.function = a.function;
  out.generator = a.generator;
  out.loc = a.loc;
  return out;
}

const Param* FunctionDef::find_param(std::string_view n) const {
  for (const auto& p : params)
    if (p.name == n) return &p;
  return nullptr;
}

const Local* FunctionDef::find_local(std::string_view n) const {
  for (const auto& l : locals)
    if (l.name == n) return &l;
  return nullptr;
}

const FunctionDef* TranslationUnit::find_function(std::string_view name) const {
  for (const auto& f : functions)
    if (f.name == name) return &f;
  return nullptr;
}

namespace {

bool equal_expr(const Expr& a, const Expr& b);

bool equal_opt_expr(const ExprPtr& a, const ExprPtr& b) {
  if (!a || !b) return !a && !b;
  return equal_expr(*a, *b);
}

bool equal_expr(const Expr& a, const Expr& b) {
  if (a.id != b.id || a.node.index() != b.node.index()) return false;
  if (const auto* x = a.as<Expr::IntLit>()) return x->value == b.as<Expr::IntLit>()->value;
  if (const auto* x = a.as<Expr::Var>()) return x->name == b.as<Expr::Var>()->name;
  if (const auto* x = a.as<Expr::ArrayRead>()) {
    const auto* y = b.as<Expr::ArrayRead>();
    return x->array == y->array && equal_expr(*x->index, *y->index);
  }
  if (const auto* x = a.as<Expr::Binary>()) {
    const auto* y = b.as<Expr::Binary>();
    return x->op == y->op && equal_expr(*x->lhs, *y->lhs) && equal_expr(*x->rhs, *y->rhs);
  }
  if (const auto* x = a.as<Expr::Unary>()) {
    const auto* y = b.as<Expr::Unary>();
    return x->op == y->op && equal_expr(*x->operand, *y->operand);
  }
  if (const auto* x = a.as<Expr::Call>()) {
    const auto* y = b.as<Expr::Call>();
    if (x->callee != y->callee || x->args.size() != y->args.size()) return false;
    for (std::size_t i = 0; i < x->args.size(); ++i)
      if (!equal_expr(*x->args[i], *y->args[i])) return false;
    return true;
  }
  if (const auto* x = a.as<Expr::AddrOfFn>())
    return x->function == b.as<Expr::AddrOfFn>()->function;
  return true;  // Result
}

bool equal_annotation(const Annotation& a, const Annotation& b) {
  return a.kind == b.kind && a.attach == b.attach && a.function == b.function &&
         a.generator == b.generator && equal_opt_expr(a.predicate, b.predicate);
}

bool equal_stmt(const Stmt& a, const Stmt& b) {
  if (a.id != b.id || a.node.index() != b.node.index()) return false;
  if (a.asserts.size() != b.asserts.size()) return false;
  for (std::size_t i = 0; i < a.asserts.size(); ++i)
    if (!equal_annotation(a.asserts[i], b.asserts[i])) return false;
  if (const auto* x = a.as<Stmt::Assign>()) {
    const auto* y = b.as<Stmt::Assign>();
    return equal_expr(*x->target, *y->target) && equal_expr(*x->value, *y->value);
  }
  if (const auto* x = a.as<Stmt::ArrayAssign>()) {
    const auto* y = b.as<Stmt::ArrayAssign>();
    return x->array == y->array && equal_expr(*x->index, *y->index) &&
           equal_expr(*x->value, *y->value);
  }
  if (const auto* x = a.as<Stmt::If>()) {
    const auto* y = b.as<Stmt::If>();
    if (!equal_expr(*x->cond, *y->cond) || !equal_stmt(*x->then_branch, *y->then_branch))
      return false;
    if (!x->else_branch || !y->else_branch) return !x->else_branch && !y->else_branch;
    return equal_stmt(*x->else_branch, *y->else_branch);
  }
  if (const auto* x = a.as<Stmt::While>()) {
    const auto* y = b.as<Stmt::While>();
    return equal_expr(*x->cond, *y->cond) && equal_stmt(*x->body, *y->body);
  }
  if (const auto* x = a.as<Stmt::Return>())
    return equal_expr(*x->value, *b.as<Stmt::Return>()->value);
  if (const auto* x = a.as<Stmt::ExprStmt>())
    return equal_expr(*x->call, *b.as<Stmt::ExprStmt>()->call);
  const auto* x = a.as<Stmt::Block>();
  const auto* y = b.as<Stmt::Block>();
  if (x->stmts.size() != y->stmts.size()) return false;
  for (std::size_t i = 0; i < x->stmts.size(); ++i)
    if (!equal_stmt(*x->stmts[i], *y->stmts[i])) return false;
  return true;
}

}  // namespace

bool structurally_equal(const Expr& a, const Expr& b) { return equal_expr(a, b); }

bool structurally_equal(const TranslationUnit& a, const TranslationUnit& b) {
  if (a.functions.size() != b.functions.size()) return false;
  for (std::size_t i = 0; i < a.functions.size(); ++i) {
    const auto& fa = a.functions[i];
    const auto& fb = b.functions[i];
    if (fa.id != fb.id || fa.name != fb.name) return false;
    if (fa.params.size() != fb.params.size() || fa.locals.size() != fb.locals.size())
      return false;
    for (std::size_t j = 0; j < fa.params.size(); ++j)
      if (fa.params[j].name != fb.params[j].name || fa.params[j].type != fb.params[j].type)
        return false;
    for (std::size_t j = 0; j < fa.locals.size(); ++j)
      if (fa.locals[j].name != fb.locals[j].name || fa.locals[j].type != fb.locals[j].type)
        return false;
    const bool ra = fa.contract.requires_clause.has_value();
    const bool rb = fb.contract.requires_clause.has_value();
    const bool ea = fa.contract.ensures_clause.has_value();
    const bool eb = fb.contract.ensures_clause.has_value();
    if (ra != rb || ea != eb) return false;
    if (ra && !equal_annotation(*fa.contract.requires_clause, *fb.contract.requires_clause))
      return false;
    if (ea && !equal_annotation(*fa.contract.ensures_clause, *fb.contract.ensures_clause))
      return false;
    if (fa.body.size() != fb.body.size()) return false;
    for (std::size_t j = 0; j < fa.body.size(); ++j)
      if (!equal_stmt(*fa.body[j], *fb.body[j])) return false;
  }
  return true;
}

}  // namespace miniverif::ast
