#include "emit.hpp"

#include <charconv>
#include <fstream>
#include <system_error>

namespace xychain::cli {

std::string format_double(double value) {
  char buf[32];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, value);
  if (ec != std::errc{}) throw std::runtime_error("format_double failed");
  return std::string(buf, ptr);
}

void write_atomic(const std::filesystem::path& path, const std::string& data) {
  std::filesystem::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot open " + tmp.string());
    out << data;
    if (!out.flush()) throw std::runtime_error("write failed: " + tmp.string());
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec)
    throw std::runtime_error("rename to " + path.string() + " failed: " +
                             ec.message());
}

std::string dump_json(nlohmann::json j) {
  j["schema_version"] = schema_version;
  return j.dump(2) + "\n";
}

}  // namespace xychain::cli
