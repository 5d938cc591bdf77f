#pragma once

#include <optional>

#include "miniverif/kernel_internals/lexer.hpp"
#include "miniverif/kernel_services/ast.hpp"
#include "miniverif/kernel_services/diagnostics.hpp"

namespace miniverif::frontend {

struct ParseResult {
  std::optional<ast::TranslationUnit> unit;
  Diagnostics diagnostics;
  bool ok() const { return unit.has_value() && diagnostics.empty(); }
};

/// Recursive-descent parse of one token stream. Stops at the first syntax
/// error. Node ids are assigned by a final pre-order numbering pass, so
/// identical inputs always yield identical ids.
ParseResult parse(std::vector<Token> tokens);

/// Parses several files into one unit (functions concatenated in file
/// order, ids unit-wide).
ParseResult parse_sources(const std::vector<std::pair<std::string, std::string>>& name_text);

}  // namespace miniverif::frontend
