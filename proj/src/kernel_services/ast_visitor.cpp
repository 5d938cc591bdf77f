#include "miniverif/kernel_services/ast_visitor.hpp"

namespace miniverif::ast {

namespace {

void visit_annotation(const Annotation& a, const Visitor& v) {
  if (v.on_annotation) v.on_annotation(a);
  if (a.predicate) visit(*a.predicate, v);
}

}  // namespace

void visit(const Expr& expr, const Visitor& v) {
  if (v.on_expr) v.on_expr(expr);
  std::visit(
      [&](const auto& n) {
        using T = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<T, Expr::ArrayRead>) {
          visit(*n.index, v);
        } else if constexpr (std::is_same_v<T, Expr::Binary>) {
          visit(*n.lhs, v);
          visit(*n.rhs, v);
        } else if constexpr (std::is_same_v<T, Expr::Unary>) {
          visit(*n.operand, v);
        } else if constexpr (std::is_same_v<T, Expr::Call>) {
          for (const auto& a : n.args) visit(*a, v);
        }
      },
      expr.node);
}

void visit(const Stmt& stmt, const Visitor& v) {
  for (const auto& a : stmt.asserts) visit_annotation(a, v);
  if (v.on_stmt) v.on_stmt(stmt);
  std::visit(
      [&](const auto& n) {
        using T = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<T, Stmt::Assign>) {
          visit(*n.target, v);
          visit(*n.value, v);
        } else if constexpr (std::is_same_v<T, Stmt::ArrayAssign>) {
          visit(*n.index, v);
          visit(*n.value, v);
        } else if constexpr (std::is_same_v<T, Stmt::If>) {
          visit(*n.cond, v);
          visit(*n.then_branch, v);
          if (n.else_branch) visit(*n.else_branch, v);
        } else if constexpr (std::is_same_v<T, Stmt::While>) {
          visit(*n.cond, v);
          visit(*n.body, v);
        } else if constexpr (std::is_same_v<T, Stmt::Return>) {
          visit(*n.value, v);
        } else if constexpr (std::is_same_v<T, Stmt::ExprStmt>) {
          visit(*n.call, v);
        } else if constexpr (std::is_same_v<T, Stmt::Block>) {
          for (const auto& s : n.stmts) visit(*s, v);
        }
      },
      stmt.node);
}

void visit(const FunctionDef& fn, const Visitor& v) {
  if (v.on_function) v.on_function(fn);
  if (fn.contract.requires_clause) visit_annotation(*fn.contract.requires_clause, v);
  if (fn.contract.ensures_clause) visit_annotation(*fn.contract.ensures_clause, v);
  for (const auto& s : fn.body) visit(*s, v);
}

void visit(const TranslationUnit& unit, const Visitor& v) {
  for (const auto& f : unit.functions) visit(f, v);
}

}  // namespace miniverif::ast
