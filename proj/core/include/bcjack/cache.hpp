#pragma once

#include <optional>
#include <string>

namespace bcjack {

// Content-addressed result cache on disk. The directory comes from the
// BCJACK_CACHE environment variable, defaulting to ".bcjack-cache"; it is
// created on first store. Entries record the full key next to the payload,
// so a filename-hash collision or a stale schema falls back to a recompute.
std::string cache_directory();

std::optional<std::string> cache_load(const std::string& key);

// Best effort: silently skips storing when the directory is not writable.
void cache_store(const std::string& key, const std::string& payload);

// Stable 64-bit FNV-1a, used for cache filenames.
std::string content_hash(const std::string& text);

}  // namespace bcjack
