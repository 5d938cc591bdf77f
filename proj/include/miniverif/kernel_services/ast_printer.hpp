#pragma once

#include <string>

#include "miniverif/kernel_services/ast.hpp"

namespace miniverif::ast {

/// Canonical rendering with minimal parentheses. The print form of a
/// predicate doubles as part of the property deduplication key, so it is
/// deterministic by construction.
std::string to_string(const Expr& expr);

/// Debug service: prints a whole unit back to MiniC source. The output
/// re-parses to a structurally equal unit.
std::string to_source(const TranslationUnit& unit);

}  // namespace miniverif::ast
