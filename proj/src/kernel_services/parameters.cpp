#include "miniverif/kernel_services/parameters.hpp"

#include <algorithm>

#include "miniverif/kernel_services/errors.hpp"

namespace miniverif::kernel {

namespace {

const ParamValue& find_value(const std::map<std::string, ParamValue, std::less<>>& values,
                             std::string_view key) {
  auto it = values.find(key);
  if (it == values.end())
    throw KernelError(ErrorCode::internal, "no such parameter: " + std::string(key));
  return it->second;
}

}  // namespace

bool Config::flag(std::string_view key) const {
  return std::get<bool>(find_value(values_, key));
}

std::int64_t Config::integer(std::string_view key) const {
  return std::get<std::int64_t>(find_value(values_, key));
}

const std::string& Config::text(std::string_view key) const {
  return std::get<std::string>(find_value(values_, key));
}

void Config::enable_plugin(const std::string& name) {
  if (std::find(enabled_plugins_.begin(), enabled_plugins_.end(), name) ==
      enabled_plugins_.end())
    enabled_plugins_.push_back(name);
}

}  // namespace miniverif::kernel
