#pragma once

#include <optional>
#include <string>
#include <string_view>

namespace miniverif::io {

std::optional<std::string> read_file(const std::string& path);
bool write_file(const std::string& path, std::string_view contents);

}  // namespace miniverif::io
