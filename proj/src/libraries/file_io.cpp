#include "miniverif/libraries/file_io.hpp"

#include <fstream>
#include <sstream>

namespace miniverif::io {

std::optional<std::string> read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return std::nullopt;
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

bool write_file(const std::string& path, std::string_view contents) {
  std::ofstream out(path, std::ios::binary);
  if (!out) return false;
  out << contents;
  return bool(out);
}

}  // namespace miniverif::io
