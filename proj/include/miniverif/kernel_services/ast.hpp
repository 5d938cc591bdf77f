#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "miniverif/kernel_services/location.hpp"

namespace miniverif::ast {

using miniverif::Location;
using miniverif::NodeId;

// ---------------------------------------------------------------------------
// Types

class Type {
 public:
  enum class Kind { unknown, integer, boolean, array, fnptr };

  Type() = default;
  static Type integer() { return Type(Kind::integer, 0); }
  static Type boolean() { return Type(Kind::boolean, 0); }
  static Type array(std::int64_t size) { return Type(Kind::array, size); }
  static Type fnptr() { return Type(Kind::fnptr, 0); }

  Kind kind() const { return kind_; }
  std::int64_t array_size() const { return size_; }  // pre: array
  bool is_int() const { return kind_ == Kind::integer; }
  bool is_bool() const { return kind_ == Kind::boolean; }

  friend bool operator==(const Type&, const Type&) = default;

  std::string to_string() const;

 private:
  Type(Kind k, std::int64_t size) : kind_(k), size_(size) {}
  Kind kind_ = Kind::unknown;
  std::int64_t size_ = 0;
};

// ---------------------------------------------------------------------------
// Expressions

enum class BinaryOp { add, sub, mul, div, rem, lt, le, gt, ge, eq, ne, land, lor };
enum class UnaryOp { neg, lnot };

std::string_view binary_op_text(BinaryOp op);
std::string_view unary_op_text(UnaryOp op);
bool is_arithmetic(BinaryOp op);  // add/sub/mul (overflow-guarded set)
bool is_comparison(BinaryOp op);

struct Expr;
using ExprPtr = std::unique_ptr<Expr>;

/// How a call expression resolved during typechecking.
enum class CallKind { unresolved, direct, indirect };

struct Expr {
  struct IntLit {
    std::int64_t value;
  };
  struct Var {
    std::string name;
  };
  struct ArrayRead {
    std::string array;
    ExprPtr index;
  };
  struct Binary {
    BinaryOp op;
    ExprPtr lhs;
    ExprPtr rhs;
  };
  struct Unary {
    UnaryOp op;
    ExprPtr operand;
  };
  struct Call {
    std::string callee;  // function name (direct) or fnptr variable (indirect)
    std::vector<ExprPtr> args;
    CallKind kind;
  };
  struct AddrOfFn {
    std::string function;
  };
  struct Result {};  // `\result`, ensures clauses only

  NodeId id;
  Location loc;
  Type type;  // filled by the typechecker
  std::variant<IntLit, Var, ArrayRead, Binary, Unary, Call, AddrOfFn, Result> node;

  // Out of line: the variant alternatives hold pointers to the still
  // incomplete Expr.
  Expr();
  ~Expr();
  Expr(Expr&&) noexcept;
  Expr& operator=(Expr&&) noexcept;

  template <typename T>
  const T* as() const {
    return std::get_if<T>(&node);
  }
  template <typename T>
  T* as() {
    return std::get_if<T>(&node);
  }
};

/// Deep copy preserving node ids (clones are used to build derived
/// predicates; they never re-enter the translation unit).
ExprPtr clone(const Expr& e);

/// Clone with every Var named in `replacements` swapped for a clone of its
/// mapped expression. Instantiates a requires clause at a call site.
ExprPtr substitute_vars(const Expr& e,
                        const std::map<std::string, const Expr*>& replacements);

// ---------------------------------------------------------------------------
// Annotations (mini-ACSL)

enum class AnnotationKind { assertion, requires_clause, ensures_clause };

struct Annotation {
  AnnotationKind kind = AnnotationKind::assertion;
  ExprPtr predicate;
  NodeId attach;         // assertion: next statement; contract clauses: the function
  std::string function;  // requires/ensures: owning function name
  std::string generator;  // empty = written in the source
  Location loc;

  bool from_source() const { return generator.empty(); }
};

Annotation clone(const Annotation& a);

// ---------------------------------------------------------------------------
// Statements

struct Stmt;
using StmtPtr = std::unique_ptr<Stmt>;

struct Stmt {
  struct Assign {
    ExprPtr target;  // Var node
    ExprPtr value;
  };
  struct ArrayAssign {
    std::string array;
    ExprPtr index;
    ExprPtr value;
  };
  struct If {
    ExprPtr cond;
    StmtPtr then_branch;
    StmtPtr else_branch;  // may be null
  };
  struct While {
    ExprPtr cond;
    StmtPtr body;
  };
  struct Return {
    ExprPtr value;
  };
  struct ExprStmt {
    ExprPtr call;  // calls are the only expression statements
  };
  struct Block {
    std::vector<StmtPtr> stmts;
  };

  NodeId id;
  Location loc;
  std::vector<Annotation> asserts;  // source asserts attached to this statement
  std::variant<Assign, ArrayAssign, If, While, Return, ExprStmt, Block> node;

  Stmt();
  ~Stmt();
  Stmt(Stmt&&) noexcept;
  Stmt& operator=(Stmt&&) noexcept;

  template <typename T>
  const T* as() const {
    return std::get_if<T>(&node);
  }
  template <typename T>
  T* as() {
    return std::get_if<T>(&node);
  }
};

// ---------------------------------------------------------------------------
// Functions and the translation unit

struct Param {
  std::string name;
  Type type;  // int only in the current grammar
  Location loc;
};

struct Local {
  std::string name;
  Type type;  // int, int array of constant size, or fnptr
  Location loc;
};

struct Contract {
  std::optional<Annotation> requires_clause;
  std::optional<Annotation> ensures_clause;
};

struct FunctionDef {
  NodeId id;
  Location loc;
  std::string name;
  std::vector<Param> params;
  std::vector<Local> locals;
  std::vector<StmtPtr> body;
  Contract contract;

  const Param* find_param(std::string_view n) const;
  const Local* find_local(std::string_view n) const;
};

struct TranslationUnit {
  std::vector<FunctionDef> functions;
  std::uint32_t node_count = 0;

  // Side tables indexed by NodeId, filled by the parser.
  std::vector<Location> node_locations;        // location of every node
  std::vector<NodeId> enclosing_stmt;          // statement owning each node

  const FunctionDef* find_function(std::string_view name) const;
  bool has_node(NodeId id) const { return id.is_valid() && id.raw < node_count; }
  const Location& location_of(NodeId id) const { return node_locations[id.raw]; }
  /// Statement owning a node (statements map to themselves); invalid for
  /// function nodes and contract predicates.
  NodeId statement_of(NodeId id) const { return enclosing_stmt[id.raw]; }
};

/// Structural equality ignoring locations; node ids participate (identical
/// structure implies identical pre-order ids).
bool structurally_equal(const TranslationUnit& a, const TranslationUnit& b);
bool structurally_equal(const Expr& a, const Expr& b);

}  // namespace miniverif::ast
