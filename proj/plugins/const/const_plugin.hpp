#pragma once

#include <optional>

#include "miniverif/kernel_services/ast.hpp"
#include "miniverif/kernel_services/kernel.hpp"

namespace miniverif::constfold {

/// Registration entry point, invoked by the driver at Boot.
void register_self(kernel::Kernel& kernel);

/// True when the predicate mentions no variable, array cell, call or
/// \result — i.e. it folds to a constant.
bool is_literal_predicate(const ast::Expr& pred);

/// Folds a literal boolean predicate. Empty on arithmetic that has no
/// defined value (division by zero, 64-bit overflow).
std::optional<bool> fold_predicate(const ast::Expr& pred);

}  // namespace miniverif::constfold
