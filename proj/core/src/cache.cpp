#include "bcjack/cache.hpp"

#include <cstdint>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace bcjack {

namespace fs = std::filesystem;

std::string cache_directory() {
  if (const char* env = std::getenv("BCJACK_CACHE"); env && *env)
    return env;
  return ".bcjack-cache";
}

std::string content_hash(const std::string& text) {
  std::uint64_t hash = 0xcbf29ce484222325ULL;
  for (unsigned char c : text) {
    hash ^= c;
    hash *= 0x100000001b3ULL;
  }
  std::ostringstream out;
  out << std::hex << hash;
  return out.str();
}

namespace {

constexpr const char* kEntrySchema = "bcjack/1";

fs::path entry_path(const std::string& key) {
  return fs::path(cache_directory()) / (content_hash(key) + ".json");
}

}  // namespace

std::optional<std::string> cache_load(const std::string& key) {
  std::error_code ec;
  const fs::path path = entry_path(key);
  if (!fs::exists(path, ec) || ec) return std::nullopt;
  std::ifstream in(path);
  if (!in) return std::nullopt;
  std::ostringstream buffer;
  buffer << in.rdbuf();
  try {
    const auto j = nlohmann::json::parse(buffer.str());
    if (j.at("schema").get<std::string>() != kEntrySchema)
      return std::nullopt;
    if (j.at("key").get<std::string>() != key) return std::nullopt;
    return j.at("payload").get<std::string>();
  } catch (const nlohmann::json::exception&) {
    return std::nullopt;
  }
}

void cache_store(const std::string& key, const std::string& payload) {
  std::error_code ec;
  const fs::path dir = cache_directory();
  fs::create_directories(dir, ec);
  if (ec) return;
  const nlohmann::json j{
      {"schema", kEntrySchema}, {"key", key}, {"payload", payload}};
  std::ofstream out(entry_path(key), std::ios::trunc);
  if (!out) return;
  out << j.dump();
}

}  // namespace bcjack
