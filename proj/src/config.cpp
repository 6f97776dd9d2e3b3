#include "accnote/config.hpp"

#include <charconv>
#include <cstdlib>
#include <fstream>

#include "accnote/strings.hpp"

namespace accnote {
namespace {

int to_int(std::string_view key, std::string_view value, int min) {
  int v = 0;
  const auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), v);
  if (ec != std::errc{} || ptr != value.data() + value.size() || v < min) {
    throw ConfigError("config key '" + std::string(key) + "': expected an integer >= " + std::to_string(min) +
                      ", got '" + std::string(value) + "'");
  }
  return v;
}

double to_double(std::string_view key, std::string_view value, double lo, double hi) {
  const std::string text(value);
  char* end = nullptr;
  const double v = std::strtod(text.c_str(), &end);
  if (end == text.c_str() || *end != '\0' || v < lo || v > hi) {
    throw ConfigError("config key '" + std::string(key) + "': expected a number in [" + std::to_string(lo) +
                      ", " + std::to_string(hi) + "], got '" + text + "'");
  }
  return v;
}

bool to_bool(std::string_view key, std::string_view value) {
  const auto v = to_lower(value);
  if (v == "true" || v == "1" || v == "yes" || v == "on") return true;
  if (v == "false" || v == "0" || v == "no" || v == "off") return false;
  throw ConfigError("config key '" + std::string(key) + "': expected a boolean, got '" + std::string(value) + "'");
}

std::string_view unquote(std::string_view v) {
  if (v.size() >= 2 && (v.front() == '"' || v.front() == '\'') && v.back() == v.front()) {
    return v.substr(1, v.size() - 2);
  }
  return v;
}

}  // namespace

void apply_config_value(AppConfig& c, std::string_view key, std::string_view value) {
  if (key == "base_url") c.base_url = value;
  else if (key == "api_key") c.api_key = value;
  else if (key == "chat_model") c.chat_model = value;
  else if (key == "embed_model") c.embed_model = value;
  else if (key == "temperature") c.temperature = to_double(key, value, 0.0, 1.0);
  else if (key == "max_tokens") c.max_tokens = to_int(key, value, 1);
  else if (key == "retries") c.retries = to_int(key, value, 0);
  else if (key == "backoff_ms") c.backoff_ms = to_int(key, value, 0);
  else if (key == "timeout_s") c.timeout_s = to_int(key, value, 1);
  else if (key == "max_concurrent_entries") c.max_concurrent_entries = to_int(key, value, 1);
  else if (key == "reasoner_fanout") c.reasoner_fanout = to_int(key, value, 1);
  else if (key == "empty_context_always") c.empty_context_always = to_bool(key, value);
  else if (key == "cache_path") c.cache_path = value;
  else if (key == "embed_dimension") c.embed_dimension = to_int(key, value, 1);
  else if (key == "literal_neutrality") c.literal_neutrality = to_bool(key, value);
  else if (key == "lexicon_path") c.lexicon_path = value;
  else throw ConfigError("unknown config key '" + std::string(key) + "'");
}

void apply_config_file(AppConfig& config, const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot read config file " + path.string());
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    auto body = trim(line);
    if (body.empty() || body.front() == '#' || body.front() == '[') continue;
    const auto eq = body.find('=');
    if (eq == std::string_view::npos) {
      throw ConfigError(path.string() + ":" + std::to_string(line_no) + ": expected key = value");
    }
    auto value = trim(body.substr(eq + 1));
    // trailing comment after an unquoted value
    if (!value.empty() && value.front() != '"' && value.front() != '\'') {
      value = trim(value.substr(0, value.find(" #")));
    }
    apply_config_value(config, trim(body.substr(0, eq)), unquote(value));
  }
}

void apply_environment(AppConfig& config, const EnvLookup& getenv_fn) {
  const auto set = [&](const char* name, std::string& field) {
    if (const char* v = getenv_fn(name); v != nullptr && *v != '\0') field = v;
  };
  set("ACCNOTE_BASE_URL", config.base_url);
  set("ACCNOTE_API_KEY", config.api_key);
  set("ACCNOTE_CHAT_MODEL", config.chat_model);
  set("ACCNOTE_EMBED_MODEL", config.embed_model);
}

}  // namespace accnote
