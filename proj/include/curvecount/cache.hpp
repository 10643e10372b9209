#pragma once

// On-disk cache of JSON blobs keyed by a content hash.

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>

namespace curvecount {

/// Lowercase hex SHA-256 digest.
std::string sha256_hex(std::string_view data);

class ResultCache {
 public:
  explicit ResultCache(std::filesystem::path dir) : dir_(std::move(dir)) {}
  /// $CURVECOUNT_CACHE, else $HOME/.cache/curvecount, else ./.curvecount-cache.
  static ResultCache from_environment();

  const std::filesystem::path& dir() const { return dir_; }
  std::filesystem::path path_for(std::string_view key) const;

  std::optional<std::string> get(std::string_view key) const;
  /// Writes to a temporary file in the cache directory, then renames it into place.
  void put(std::string_view key, std::string_view value) const;

 private:
  std::filesystem::path dir_;
};

}  // namespace curvecount
