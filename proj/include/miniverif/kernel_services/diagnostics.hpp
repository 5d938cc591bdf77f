#pragma once

#include <string>
#include <vector>

#include "miniverif/kernel_services/location.hpp"

namespace miniverif::frontend {

enum class DiagCode {
  illegal_character,
  bad_literal,
  bad_annotation,
  syntax_error,
  undeclared_variable,
  arity_mismatch,
  type_mismatch,
  duplicate_definition,
  missing_main,
  io_error,
};

std::string_view diag_code_name(DiagCode code);

struct Diagnostic {
  DiagCode code{};
  Location loc;
  std::string message;

  std::string to_string() const {
    return loc.to_string() + ": " + std::string(diag_code_name(code)) + ": " + message;
  }
};

using Diagnostics = std::vector<Diagnostic>;

}  // namespace miniverif::frontend
