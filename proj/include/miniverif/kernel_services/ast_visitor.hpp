#pragma once

#include <functional>

#include "miniverif/kernel_services/ast.hpp"

namespace miniverif::ast {

/// Read-only pre-order traversal callbacks; unset members are skipped.
/// Visit order equals NodeId order: a function, then its contract
/// predicates, then per statement its attached asserts followed by the
/// statement and its children.
struct Visitor {
  std::function<void(const FunctionDef&)> on_function;
  std::function<void(const Stmt&)> on_stmt;
  std::function<void(const Expr&)> on_expr;
  std::function<void(const Annotation&)> on_annotation;
};

void visit(const TranslationUnit& unit, const Visitor& visitor);
void visit(const FunctionDef& fn, const Visitor& visitor);
void visit(const Stmt& stmt, const Visitor& visitor);
void visit(const Expr& expr, const Visitor& visitor);

}  // namespace miniverif::ast
