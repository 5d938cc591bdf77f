#include "miniverif/kernel_services/diagnostics.hpp"

namespace miniverif::frontend {

std::string_view diag_code_name(DiagCode code) {
  switch (code) {
    case DiagCode::illegal_character: return "IllegalCharacter";
    case DiagCode::bad_literal: return "BadLiteral";
    case DiagCode::bad_annotation: return "BadAnnotation";
    case DiagCode::syntax_error: return "SyntaxError";
    case DiagCode::undeclared_variable: return "UndeclaredVariable";
    case DiagCode::arity_mismatch: return "ArityMismatch";
    case DiagCode::type_mismatch: return "TypeMismatch";
    case DiagCode::duplicate_definition: return "DuplicateDefinition";
    case DiagCode::missing_main: return "MissingMain";
    case DiagCode::io_error: return "IoError";
  }
  return "Error";
}

}  // namespace miniverif::frontend
