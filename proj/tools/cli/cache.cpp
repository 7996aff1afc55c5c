#include "cli/cache.hpp"

#include <cstdlib>
#include <fstream>
#include <random>

#include <json.hpp>

#include "penney/error.hpp"

namespace penney::cli {

std::optional<std::filesystem::path> resolve_cache_path(const std::string& flag) {
  namespace fs = std::filesystem;
  if (!flag.empty()) return fs::path(flag);
  if (const char* env = std::getenv(kCacheEnv); env && *env) return fs::path(env);
  if (const char* xdg = std::getenv("XDG_CONFIG_HOME"); xdg && *xdg) return fs::path(xdg) / "penney" / "cn_cache.json";
  if (const char* home = std::getenv("HOME"); home && *home)
    return fs::path(home) / ".config" / "penney" / "cn_cache.json";
  return std::nullopt;
}

CacheLoad load_cache(const std::filesystem::path& path, CnSequence& seq) {
  CacheLoad result;
  std::ifstream in(path);
  if (!in) {
    result.note = "no cache file";
    return result;
  }
  std::map<int, BigInt> values;
  try {
    const auto doc = nlohmann::json::parse(in);
    for (const auto& [key, text] : doc.at("values").items()) values.emplace(std::stoi(key), BigInt(text.get<std::string>()));
  } catch (const std::exception& e) {
    result.note = std::string("unreadable cache: ") + e.what();
    return result;
  }
  if (values.empty()) {
    result.note = "empty cache";
    return result;
  }
  std::mt19937_64 rng(0x5eed);
  std::uniform_int_distribution<int> pick(values.begin()->first, values.rbegin()->first);
  CnSequence fresh;
  for (int i = 0; i < 3; ++i) {
    const int n = pick(rng);
    const auto it = values.find(n);
    if (it == values.end() || it->second != fresh.value(n)) {
      result.note = "cache entry for n = " + std::to_string(n) + " failed recomputation";
      return result;
    }
  }
  try {
    seq.import(values);
  } catch (const Error& e) {
    result.note = e.what();
    return result;
  }
  result.used = true;
  result.entries = static_cast<int>(values.size());
  return result;
}

void save_cache(const std::filesystem::path& path, const CnSequence& seq) {
  nlohmann::ordered_json doc;
  doc["format"] = 1;
  nlohmann::ordered_json values = nlohmann::ordered_json::object();
  for (const auto& [n, v] : seq.snapshot()) values[std::to_string(n)] = v.get_str();
  doc["values"] = std::move(values);
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
  auto tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::trunc);
    if (!out) throw Error(ErrorCode::InvalidArgument, "cannot write cache " + tmp.string());
    out << doc.dump() << '\n';
  }
  std::filesystem::rename(tmp, path);
}

}  // namespace penney::cli
