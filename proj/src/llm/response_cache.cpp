#include "accnote/llm/response_cache.hpp"

#include <stdexcept>

#include <json.hpp>

namespace accnote::llm {

ResponseCache::ResponseCache(std::filesystem::path file) : file_(std::move(file)) {
  if (std::ifstream in(*file_); in) {
    std::string line;
    while (std::getline(in, line)) {
      const auto j = nlohmann::json::parse(line, nullptr, /*allow_exceptions=*/false);
      if (!j.is_object()) continue;
      const auto key = j.find("key");
      const auto text = j.find("response_text");
      if (key == j.end() || text == j.end() || !key->is_string() || !text->is_string()) continue;
      entries_.insert_or_assign(key->get<std::string>(), text->get<std::string>());
    }
  }
  sink_.open(*file_, std::ios::app);
  if (!sink_) throw std::runtime_error("cannot open cache file " + file_->string());
}

std::optional<std::string> ResponseCache::lookup(const std::string& key) const {
  std::shared_lock lock(mu_);
  const auto it = entries_.find(key);
  if (it == entries_.end()) return std::nullopt;
  return it->second;
}

void ResponseCache::store(const std::string& key, const std::string& response_text) {
  std::unique_lock lock(mu_);
  const auto [it, inserted] = entries_.try_emplace(key, response_text);
  if (!inserted) return;
  if (sink_.is_open()) {
    sink_ << nlohmann::json{{"key", key}, {"response_text", response_text}}.dump() << '\n';
    sink_.flush();
  }
}

std::size_t ResponseCache::size() const {
  std::shared_lock lock(mu_);
  return entries_.size();
}

}  // namespace accnote::llm
