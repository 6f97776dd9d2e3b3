#pragma once

#include <filesystem>
#include <functional>
#include <stdexcept>
#include <string>

namespace accnote {

class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Run configuration. Sources apply in increasing precedence: defaults,
/// config file, environment, command-line flags.
struct AppConfig {
  std::string base_url;
  std::string api_key;
  std::string chat_model;
  std::string embed_model;
  double temperature = 0.0;
  int max_tokens = 512;
  int retries = 2;
  int backoff_ms = 1000;
  int timeout_s = 120;
  int max_concurrent_entries = 4;
  int reasoner_fanout = 4;
  bool empty_context_always = true;
  /// Empty disables the on-disk cache.
  std::string cache_path = "accnote_cache.jsonl";
  int embed_dimension = 256;
  bool literal_neutrality = false;
  std::string lexicon_path;
};

/// Flat "key = value" file (TOML subset): '#' comments, optional quotes,
/// [section] headers ignored. Unknown keys and bad values throw ConfigError.
void apply_config_file(AppConfig& config, const std::filesystem::path& path);

/// Sets one documented key from its text value.
void apply_config_value(AppConfig& config, std::string_view key, std::string_view value);

using EnvLookup = std::function<const char*(const char*)>;

/// ACCNOTE_BASE_URL, ACCNOTE_API_KEY, ACCNOTE_CHAT_MODEL, ACCNOTE_EMBED_MODEL.
void apply_environment(AppConfig& config, const EnvLookup& getenv_fn);

}  // namespace accnote
