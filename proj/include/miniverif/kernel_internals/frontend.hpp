#pragma once

#include <memory>
#include <string>
#include <vector>

#include "miniverif/kernel_internals/typechecker.hpp"
#include "miniverif/kernel_services/ast.hpp"
#include "miniverif/kernel_services/diagnostics.hpp"

namespace miniverif::frontend {

struct LoadResult {
  std::unique_ptr<ast::TranslationUnit> unit;  // null on failure
  Diagnostics diagnostics;
  bool ok() const { return unit != nullptr && diagnostics.empty(); }
};

/// tokenize + parse + typecheck one in-memory source.
LoadResult load_source(std::string_view text, std::string_view name,
                       const TypecheckOptions& options = {});

/// Same over a list of files, combined into a single unit.
LoadResult load_files(const std::vector<std::string>& paths,
                      const TypecheckOptions& options = {});

}  // namespace miniverif::frontend
