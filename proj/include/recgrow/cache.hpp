#pragma once

// On-disk cache of sequence tables. One JSON document per parameter set,
// keyed by the canonical (a, b, d0) strings and guarded by a SHA-256
// checksum over the key and values. Writes go to a temporary file that is
// renamed into place.

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>

#include "recgrow/core_recurrence.hpp"

namespace recgrow {

inline constexpr int kCacheSchemaVersion = 1;

/// Environment variable that selects the cache directory.
inline constexpr const char* kCacheDirEnv = "RECGROW_CACHE_DIR";

std::string cache_key(const Params& params);

std::string sha256_hex(std::string_view data);

std::filesystem::path cache_file_for(const std::filesystem::path& dir, const Params& params);

void write_cache(const SequenceTable& table, const std::filesystem::path& path);

/// Throws CacheCorrupted on unreadable JSON, missing fields or checksum
/// mismatch.
SequenceTable read_cache(const std::filesystem::path& path);

SequenceTable cache_roundtrip(const SequenceTable& table, const std::filesystem::path& path);

/// Directory named by RECGROW_CACHE_DIR, if set and non-empty.
std::optional<std::filesystem::path> cache_dir_from_env();

}  // namespace recgrow
