#include "miniverif/kernel_services/ast_printer.hpp"

#include <sstream>

namespace miniverif::ast {

namespace {

// Binding strengths, tighter binds higher. Unary sits above everything.
int precedence(BinaryOp op) {
  switch (op) {
    case BinaryOp::mul:
    case BinaryOp::div:
    case BinaryOp::rem:
      return 5;
    case BinaryOp::add:
    case BinaryOp::sub:
      return 4;
    case BinaryOp::lt:
    case BinaryOp::le:
    case BinaryOp::gt:
    case BinaryOp::ge:
    case BinaryOp::eq:
    case BinaryOp::ne:
      return 3;
    case BinaryOp::land:
      return 2;
    case BinaryOp::lor:
      return 1;
  }
  return 0;
}

constexpr int kUnaryPrec = 6;

void print_expr(std::ostream& out, const Expr& e, int parent_prec) {
  if (const auto* n = e.as<Expr::IntLit>()) {
    out << n->value;
  } else if (const auto* n = e.as<Expr::Var>()) {
    out << n->name;
  } else if (const auto* n = e.as<Expr::ArrayRead>()) {
    out << n->array << "[";
    print_expr(out, *n->index, 0);
    out << "]";
  } else if (const auto* n = e.as<Expr::Binary>()) {
    int prec = precedence(n->op);
    bool parens = prec < parent_prec;
    if (parens) out << "(";
    // Operators associate left; the right child needs parens at equal
    // precedence (a - (b - c)).
    print_expr(out, *n->lhs, prec);
    out << " " << binary_op_text(n->op) << " ";
    print_expr(out, *n->rhs, prec + 1);
    if (parens) out << ")";
  } else if (const auto* n = e.as<Expr::Unary>()) {
    bool parens = kUnaryPrec < parent_prec;
    if (parens) out << "(";
    out << unary_op_text(n->op);
    print_expr(out, *n->operand, kUnaryPrec + 1);
    if (parens) out << ")";
  } else if (const auto* n = e.as<Expr::Call>()) {
    out << n->callee << "(";
    for (std::size_t i = 0; i < n->args.size(); ++i) {
      if (i) out << ", ";
      print_expr(out, *n->args[i], 0);
    }
    out << ")";
  } else if (const auto* n = e.as<Expr::AddrOfFn>()) {
    out << "&" << n->function;
  } else {
    out << "\\result";
  }
}

void print_indent(std::ostream& out, int depth) {
  for (int i = 0; i < depth; ++i) out << "  ";
}

void print_stmt(std::ostream& out, const Stmt& s, int depth) {
  for (const auto& a : s.asserts) {
    print_indent(out, depth);
    out << "//@ assert " << to_string(*a.predicate) << ";\n";
  }
  print_indent(out, depth);
  if (const auto* n = s.as<Stmt::Assign>()) {
    out << to_string(*n->target) << " = " << to_string(*n->value) << ";\n";
  } else if (const auto* n = s.as<Stmt::ArrayAssign>()) {
    out << n->array << "[" << to_string(*n->index) << "] = " << to_string(*n->value)
        << ";\n";
  } else if (const auto* n = s.as<Stmt::If>()) {
    out << "if (" << to_string(*n->cond) << ")\n";
    print_stmt(out, *n->then_branch, depth + 1);
    if (n->else_branch) {
      print_indent(out, depth);
      out << "else\n";
      print_stmt(out, *n->else_branch, depth + 1);
    }
  } else if (const auto* n = s.as<Stmt::While>()) {
    out << "while (" << to_string(*n->cond) << ")\n";
    print_stmt(out, *n->body, depth + 1);
  } else if (const auto* n = s.as<Stmt::Return>()) {
    out << "return " << to_string(*n->value) << ";\n";
  } else if (const auto* n = s.as<Stmt::ExprStmt>()) {
    out << to_string(*n->call) << ";\n";
  } else {
    const auto* block = s.as<Stmt::Block>();
    out << "{\n";
    for (const auto& inner : block->stmts) print_stmt(out, *inner, depth + 1);
    print_indent(out, depth);
    out << "}\n";
  }
}

}  // namespace

std::string to_string(const Expr& expr) {
  std::ostringstream out;
  print_expr(out, expr, 0);
  return out.str();
}

std::string to_source(const TranslationUnit& unit) {
  std::ostringstream out;
  bool first = true;
  for (const auto& f : unit.functions) {
    if (!first) out << "\n";
    first = false;
    if (f.contract.requires_clause)
      out << "//@ requires " << to_string(*f.contract.requires_clause->predicate) << ";\n";
    if (f.contract.ensures_clause)
      out << "//@ ensures " << to_string(*f.contract.ensures_clause->predicate) << ";\n";
    out << "int " << f.name << "(";
    for (std::size_t i = 0; i < f.params.size(); ++i) {
      if (i) out << ", ";
      out << "int " << f.params[i].name;
    }
    out << ") {\n";
    for (const auto& l : f.locals) {
      print_indent(out, 1);
      if (l.type.kind() == Type::Kind::array) {
        out << "int " << l.name << "[" << l.type.array_size() << "];\n";
      } else if (l.type.kind() == Type::Kind::fnptr) {
        out << "fnptr " << l.name << ";\n";
      } else {
        out << "int " << l.name << ";\n";
      }
    }
    for (const auto& s : f.body) print_stmt(out, *s, 1);
    out << "}\n";
  }
  return out.str();
}

}  // namespace miniverif::ast
