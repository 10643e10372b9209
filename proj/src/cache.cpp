#include "curvecount/cache.hpp"

#include <openssl/evp.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <random>
#include <sstream>
#include <stdexcept>

namespace curvecount {

std::string sha256_hex(std::string_view data) {
  std::array<unsigned char, EVP_MAX_MD_SIZE> digest{};
  unsigned int len = 0;
  if (EVP_Digest(data.data(), data.size(), digest.data(), &len, EVP_sha256(), nullptr) != 1) {
    throw std::runtime_error("SHA-256 failed");
  }
  static constexpr char kHex[] = "0123456789abcdef";
  std::string out;
  for (unsigned int k = 0; k < len; ++k) {
    out += kHex[digest[k] >> 4];
    out += kHex[digest[k] & 0xf];
  }
  return out;
}

ResultCache ResultCache::from_environment() {
  if (const char* dir = std::getenv("CURVECOUNT_CACHE"); dir != nullptr && *dir != '\0') return ResultCache(dir);
  if (const char* home = std::getenv("HOME"); home != nullptr && *home != '\0') {
    return ResultCache(std::filesystem::path(home) / ".cache" / "curvecount");
  }
  return ResultCache(".curvecount-cache");
}

std::filesystem::path ResultCache::path_for(std::string_view key) const {
  return dir_ / (sha256_hex(key) + ".json");
}

std::optional<std::string> ResultCache::get(std::string_view key) const {
  std::ifstream in(path_for(key), std::ios::binary);
  if (!in) return std::nullopt;
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void ResultCache::put(std::string_view key, std::string_view value) const {
  std::filesystem::create_directories(dir_);
  const std::filesystem::path target = path_for(key);
  std::random_device rd;
  const std::filesystem::path temp = target.string() + ".tmp-" + std::to_string(rd());
  {
    std::ofstream out(temp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write cache file " + temp.string());
    out.write(value.data(), static_cast<std::streamsize>(value.size()));
    if (!out) throw std::runtime_error("cannot write cache file " + temp.string());
  }
  std::filesystem::rename(temp, target);
}

}  // namespace curvecount
