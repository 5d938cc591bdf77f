#pragma once

#include "miniverif/kernel_services/ast.hpp"
#include "miniverif/kernel_services/diagnostics.hpp"

namespace miniverif::frontend {

struct TypecheckOptions {
  /// Whole-program analyses need a `main`; unit tests on fragments may not.
  bool require_main = true;
};

/// Binds every variable, resolves call kinds, checks arities and operand
/// types, and annotates each expression with its type. Collects all errors
/// before failing; an empty result means the unit is well typed.
Diagnostics typecheck(ast::TranslationUnit& unit, const TypecheckOptions& options = {});

}  // namespace miniverif::frontend
