#include "miniverif/kernel_services/errors.hpp"

namespace miniverif::kernel {

std::string_view error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::duplicate_plugin: return "DuplicatePlugin";
    case ErrorCode::invalid_name: return "InvalidName";
    case ErrorCode::stage_violation: return "StageViolation";
    case ErrorCode::unknown_option: return "UnknownOption";
    case ErrorCode::bad_value: return "BadValue";
    case ErrorCode::duplicate_value: return "DuplicateValue";
    case ErrorCode::foreign_prefix: return "ForeignPrefix";
    case ErrorCode::unknown_property: return "UnknownProperty";
    case ErrorCode::self_hypothesis: return "SelfHypothesis";
    case ErrorCode::bad_attach_point: return "BadAttachPoint";
    case ErrorCode::internal: return "Internal";
  }
  return "Internal";
}

}  // namespace miniverif::kernel
