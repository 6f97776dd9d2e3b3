#pragma once

#include <filesystem>
#include <fstream>
#include <mutex>
#include <optional>
#include <shared_mutex>
#include <string>
#include <unordered_map>

namespace accnote::llm {

/// Key → completion store. With a backing file, entries are appended as
/// {"key", "response_text"} JSON lines and reloaded on construction.
/// Concurrent lookups are allowed; inserts are serialized.
class ResponseCache {
 public:
  /// In-memory only.
  ResponseCache() = default;
  /// Loads any existing records; malformed lines are ignored. Throws
  /// std::runtime_error when the file cannot be opened for appending.
  explicit ResponseCache(std::filesystem::path file);

  ResponseCache(const ResponseCache&) = delete;
  ResponseCache& operator=(const ResponseCache&) = delete;

  std::optional<std::string> lookup(const std::string& key) const;
  void store(const std::string& key, const std::string& response_text);
  std::size_t size() const;

 private:
  mutable std::shared_mutex mu_;
  std::unordered_map<std::string, std::string> entries_;
  std::optional<std::filesystem::path> file_;
  std::ofstream sink_;
};

}  // namespace accnote::llm
