#pragma once

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "xdhh/core/errors.hpp"

namespace xdhh {

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) raise(Errc::IoError, "cannot open '" + path + "' for reading");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

// Write-then-rename so readers never observe a half-written file.
inline void write_file_atomic(const std::string& path, const std::string& content) {
  std::filesystem::path target(path);
  std::filesystem::path tmp = target;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) raise(Errc::IoError, "cannot open '" + tmp.string() + "' for writing");
    out << content;
    if (!out) raise(Errc::IoError, "short write to '" + tmp.string() + "'");
  }
  std::error_code ec;
  std::filesystem::rename(tmp, target, ec);
  if (ec) raise(Errc::IoError, "cannot rename '" + tmp.string() + "' to '" + path + "': " + ec.message());
}

}  // namespace xdhh
