#include "miniverif/kernel_internals/frontend.hpp"

#include "miniverif/kernel_internals/lexer.hpp"
#include "miniverif/kernel_internals/parser.hpp"
#include "miniverif/libraries/file_io.hpp"

namespace miniverif::frontend {

namespace {

LoadResult finish(ParseResult parsed, const TypecheckOptions& options) {
  LoadResult result;
  result.diagnostics = std::move(parsed.diagnostics);
  if (!parsed.unit || !result.diagnostics.empty()) return result;
  auto unit = std::make_unique<ast::TranslationUnit>(std::move(*parsed.unit));
  Diagnostics type_errors = typecheck(*unit, options);
  if (!type_errors.empty()) {
    result.diagnostics = std::move(type_errors);
    return result;
  }
  result.unit = std::move(unit);
  return result;
}

}  // namespace

LoadResult load_source(std::string_view text, std::string_view name,
                       const TypecheckOptions& options) {
  return finish(parse_sources({{std::string(name), std::string(text)}}), options);
}

LoadResult load_files(const std::vector<std::string>& paths,
                      const TypecheckOptions& options) {
  std::vector<std::pair<std::string, std::string>> sources;
  LoadResult result;
  for (const auto& path : paths) {
    auto text = io::read_file(path);
    if (!text) {
      result.diagnostics.push_back(
          Diagnostic{DiagCode::io_error, Location{path, 1, 1}, "cannot read file"});
      return result;
    }
    sources.emplace_back(path, std::move(*text));
  }
  return finish(parse_sources(sources), options);
}

}  // namespace miniverif::frontend
