#pragma once

#include <filesystem>
#include <optional>
#include <string>

#include "penney/sequence.hpp"

namespace penney::cli {

/// Environment variable naming the cache file; overrides the default path.
inline constexpr const char* kCacheEnv = "PENNEY_CACHE";

/// --cache wins, then $PENNEY_CACHE, then $XDG_CONFIG_HOME/penney/cn_cache.json,
/// then ~/.config/penney/cn_cache.json. nullopt when no location is known.
std::optional<std::filesystem::path> resolve_cache_path(const std::string& flag);

struct CacheLoad {
  bool used = false;
  int entries = 0;
  std::string note;  // why the file was ignored, if it was
};

/// Installs cached c_n values into `seq` after recomputing three entries
/// chosen by a fixed-seed draw. Any mismatch or parse failure leaves `seq`
/// untouched.
CacheLoad load_cache(const std::filesystem::path& path, CnSequence& seq);

/// Writes the table through a temporary file and a rename.
void save_cache(const std::filesystem::path& path, const CnSequence& seq);

}  // namespace penney::cli
