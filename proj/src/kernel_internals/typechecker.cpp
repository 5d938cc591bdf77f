#include "miniverif/kernel_internals/typechecker.hpp"

#include <map>
#include <string>

namespace miniverif::frontend {

using namespace miniverif::ast;

namespace {

// Scope a predicate is checked in: which names resolve and whether
// `\result` is meaningful.
struct PredScope {
  const FunctionDef* fn = nullptr;
  bool params_only = false;   // requires clauses: locals not yet alive
  bool allow_result = false;  // ensures clauses only
};

class Checker {
 public:
  explicit Checker(TranslationUnit& unit) : unit_(unit) {}

  Diagnostics run(const TypecheckOptions& options);

 private:
  void error(DiagCode code, const Location& loc, std::string message) {
    diags_.push_back(Diagnostic{code, loc, std::move(message)});
  }

  const Type* lookup_var(const FunctionDef& fn, const std::string& name,
                         bool params_only) const {
    if (const Param* p = fn.find_param(name)) return &p->type;
    if (!params_only)
      if (const Local* l = fn.find_local(name)) return &l->type;
    return nullptr;
  }

  Type check_expr(Expr& e, const PredScope& scope);
  void check_int_operand(const Expr& e, const Type& t, std::string_view what);
  void check_stmt(Stmt& s, const FunctionDef& fn);
  void check_predicate(Annotation& ann, const PredScope& scope);
  void check_function(FunctionDef& fn);

  TranslationUnit& unit_;
  std::map<std::string, const FunctionDef*> functions_;
  Diagnostics diags_;
};

void Checker::check_int_operand(const Expr& e, const Type& t, std::string_view what) {
  if (t.kind() == Type::Kind::unknown) return;  // already reported
  if (!t.is_int())
    error(DiagCode::type_mismatch, e.loc,
          std::string(what) + " must have type int, found " + t.to_string());
}

Type Checker::check_expr(Expr& e, const PredScope& scope) {
  Type result;
  if (auto* n = e.as<Expr::IntLit>()) {
    (void)n;
    result = Type::integer();
  } else if (auto* n = e.as<Expr::Var>()) {
    const Type* t = lookup_var(*scope.fn, n->name, scope.params_only);
    if (!t) {
      error(DiagCode::undeclared_variable, e.loc, "undeclared variable '" + n->name + "'");
      result = Type();
    } else if (t->kind() == Type::Kind::array) {
      error(DiagCode::type_mismatch, e.loc,
            "array '" + n->name + "' used without subscript");
      result = Type();
    } else {
      result = *t;
    }
  } else if (auto* n = e.as<Expr::ArrayRead>()) {
    const Type* t = lookup_var(*scope.fn, n->array, scope.params_only);
    if (!t) {
      error(DiagCode::undeclared_variable, e.loc, "undeclared variable '" + n->array + "'");
    } else if (t->kind() != Type::Kind::array) {
      error(DiagCode::type_mismatch, e.loc, "'" + n->array + "' is not an array");
    }
    Type it = check_expr(*n->index, scope);
    check_int_operand(*n->index, it, "array index");
    result = Type::integer();
  } else if (auto* n = e.as<Expr::Binary>()) {
    Type lt = check_expr(*n->lhs, scope);
    Type rt = check_expr(*n->rhs, scope);
    if (n->op == BinaryOp::land || n->op == BinaryOp::lor) {
      for (auto [sub, t] : {std::pair{n->lhs.get(), lt}, std::pair{n->rhs.get(), rt}})
        if (t.kind() != Type::Kind::unknown && !t.is_bool())
          error(DiagCode::type_mismatch, sub->loc,
                std::string(binary_op_text(n->op)) + " expects boolean operands, found " +
                    t.to_string());
      result = Type::boolean();
    } else {
      check_int_operand(*n->lhs, lt, "operand");
      check_int_operand(*n->rhs, rt, "operand");
      result = is_comparison(n->op) ? Type::boolean() : Type::integer();
    }
  } else if (auto* n = e.as<Expr::Unary>()) {
    Type t = check_expr(*n->operand, scope);
    if (n->op == UnaryOp::neg) {
      check_int_operand(*n->operand, t, "operand");
      result = Type::integer();
    } else {
      if (t.kind() != Type::Kind::unknown && !t.is_bool())
        error(DiagCode::type_mismatch, n->operand->loc,
              "! expects a boolean operand, found " + t.to_string());
      result = Type::boolean();
    }
  } else if (auto* n = e.as<Expr::Call>()) {
    const Type* var = lookup_var(*scope.fn, n->callee, scope.params_only);
    if (var) {
      if (var->kind() == Type::Kind::fnptr) {
        n->kind = CallKind::indirect;
      } else {
        error(DiagCode::type_mismatch, e.loc, "'" + n->callee + "' is not callable");
      }
    } else if (auto it = functions_.find(n->callee); it != functions_.end()) {
      n->kind = CallKind::direct;
      if (it->second->params.size() != n->args.size())
        error(DiagCode::arity_mismatch, e.loc,
              "'" + n->callee + "' takes " + std::to_string(it->second->params.size()) +
                  " argument(s), got " + std::to_string(n->args.size()));
    } else {
      error(DiagCode::undeclared_variable, e.loc,
            "call to undeclared function '" + n->callee + "'");
    }
    for (auto& a : n->args) {
      Type t = check_expr(*a, scope);
      check_int_operand(*a, t, "argument");
    }
    result = Type::integer();
  } else if (auto* n = e.as<Expr::AddrOfFn>()) {
    if (!functions_.count(n->function))
      error(DiagCode::undeclared_variable, e.loc,
            "'&' of undeclared function '" + n->function + "'");
    result = Type::fnptr();
  } else {  // Result
    if (!scope.allow_result)
      error(DiagCode::type_mismatch, e.loc, "\\result is only allowed in ensures clauses");
    result = Type::integer();
  }
  e.type = result;
  return result;
}

void Checker::check_predicate(Annotation& ann, const PredScope& scope) {
  Type t = check_expr(*ann.predicate, scope);
  if (t.kind() != Type::Kind::unknown && !t.is_bool())
    error(DiagCode::type_mismatch, ann.predicate->loc,
          "annotation predicate must be boolean, found " + t.to_string());
}

void Checker::check_stmt(Stmt& s, const FunctionDef& fn) {
  PredScope scope{&fn, false, false};
  for (auto& a : s.asserts) check_predicate(a, scope);
  if (auto* n = s.as<Stmt::Assign>()) {
    Type tt = check_expr(*n->target, scope);
    Type vt = check_expr(*n->value, scope);
    bool t_ok = tt.kind() != Type::Kind::unknown;
    bool v_ok = vt.kind() != Type::Kind::unknown;
    if (t_ok && v_ok && tt != vt)
      error(DiagCode::type_mismatch, s.loc,
            "cannot assign " + vt.to_string() + " to " + tt.to_string());
    else if (t_ok && tt.is_bool())
      error(DiagCode::type_mismatch, s.loc, "cannot assign to a boolean");
  } else if (auto* n = s.as<Stmt::ArrayAssign>()) {
    const Type* t = lookup_var(fn, n->array, false);
    if (!t)
      error(DiagCode::undeclared_variable, s.loc, "undeclared variable '" + n->array + "'");
    else if (t->kind() != Type::Kind::array)
      error(DiagCode::type_mismatch, s.loc, "'" + n->array + "' is not an array");
    Type it = check_expr(*n->index, scope);
    check_int_operand(*n->index, it, "array index");
    Type vt = check_expr(*n->value, scope);
    check_int_operand(*n->value, vt, "stored value");
  } else if (auto* n = s.as<Stmt::If>()) {
    Type ct = check_expr(*n->cond, scope);
    if (ct.kind() != Type::Kind::unknown && !ct.is_int() && !ct.is_bool())
      error(DiagCode::type_mismatch, n->cond->loc,
            "condition must be int or boolean, found " + ct.to_string());
    check_stmt(*n->then_branch, fn);
    if (n->else_branch) check_stmt(*n->else_branch, fn);
  } else if (auto* n = s.as<Stmt::While>()) {
    Type ct = check_expr(*n->cond, scope);
    if (ct.kind() != Type::Kind::unknown && !ct.is_int() && !ct.is_bool())
      error(DiagCode::type_mismatch, n->cond->loc,
            "condition must be int or boolean, found " + ct.to_string());
    check_stmt(*n->body, fn);
  } else if (auto* n = s.as<Stmt::Return>()) {
    Type t = check_expr(*n->value, scope);
    check_int_operand(*n->value, t, "return value");
  } else if (auto* n = s.as<Stmt::ExprStmt>()) {
    check_expr(*n->call, scope);
  } else if (auto* n = s.as<Stmt::Block>()) {
    for (auto& inner : n->stmts) check_stmt(*inner, fn);
  }
}

void Checker::check_function(FunctionDef& fn) {
  std::map<std::string, Location> seen;
  auto declare = [&](const std::string& name, const Location& loc) {
    if (functions_.count(name) != 0) {
      error(DiagCode::duplicate_definition, loc,
            "'" + name + "' is already a function name");
      return;
    }
    auto [it, inserted] = seen.emplace(name, loc);
    if (!inserted)
      error(DiagCode::duplicate_definition, loc, "duplicate declaration of '" + name + "'");
  };
  for (const auto& p : fn.params) declare(p.name, p.loc);
  for (const auto& l : fn.locals) declare(l.name, l.loc);

  if (fn.contract.requires_clause)
    check_predicate(*fn.contract.requires_clause, PredScope{&fn, true, false});
  if (fn.contract.ensures_clause)
    check_predicate(*fn.contract.ensures_clause, PredScope{&fn, false, true});
  for (auto& s : fn.body) check_stmt(*s, fn);
}

Diagnostics Checker::run(const TypecheckOptions& options) {
  for (const auto& f : unit_.functions) {
    auto [it, inserted] = functions_.emplace(f.name, &f);
    if (!inserted)
      error(DiagCode::duplicate_definition, f.loc,
            "duplicate definition of function '" + f.name + "'");
  }
  if (options.require_main && functions_.count("main") == 0) {
    Location loc = unit_.functions.empty() ? Location{} : unit_.functions.front().loc;
    error(DiagCode::missing_main, loc, "no 'main' function defined");
  }
  for (auto& f : unit_.functions) check_function(f);
  return std::move(diags_);
}

}  // namespace

Diagnostics typecheck(TranslationUnit& unit, const TypecheckOptions& options) {
  return Checker(unit).run(options);
}

}  // namespace miniverif::frontend
