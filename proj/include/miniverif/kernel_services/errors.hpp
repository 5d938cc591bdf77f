#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace miniverif::kernel {

enum class ErrorCode {
  // plugin registration
  duplicate_plugin,
  invalid_name,
  stage_violation,
  // command line
  unknown_option,
  bad_value,
  // dynamic value registry
  duplicate_value,
  foreign_prefix,
  // property database
  unknown_property,
  self_hypothesis,
  bad_attach_point,
  // lifecycle
  internal,
};

std::string_view error_code_name(ErrorCode code);

/// Contract violations against kernel services. Plugin code that lets one
/// escape its main is caught by the kernel and treated as a plugin panic.
class KernelError : public std::runtime_error {
 public:
  KernelError(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(error_code_name(code)) + ": " + message),
        code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace miniverif::kernel
