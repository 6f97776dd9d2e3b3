#pragma once

#include <filesystem>
#include <fstream>
#include <iterator>
#include <memory>
#include <random>
#include <string>
#include <vector>

#include "accnote/data_model.hpp"
#include "accnote/llm/backends.hpp"
#include "accnote/llm/gateway.hpp"

namespace testing {

inline std::filesystem::path fixture(const std::string& name) {
  return std::filesystem::path(ACCNOTE_FIXTURE_DIR) / name;
}

inline std::string slurp(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

inline void write_text(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  out << text;
}

/// Fresh directory under the system temp dir, removed on destruction.
class TempDir {
 public:
  TempDir() {
    std::random_device rd;
    path_ = std::filesystem::temp_directory_path() / ("accnote_test_" + std::to_string(rd()) + std::to_string(rd()));
    std::filesystem::create_directories(path_);
  }
  ~TempDir() {
    std::error_code ec;
    std::filesystem::remove_all(path_, ec);
  }
  TempDir(const TempDir&) = delete;
  TempDir& operator=(const TempDir&) = delete;

  std::filesystem::path operator/(const std::string& name) const { return path_ / name; }
  const std::filesystem::path& path() const { return path_; }

 private:
  std::filesystem::path path_;
};

inline accnote::Post make_post(std::string id, std::string text) {
  accnote::Post p;
  p.id = std::move(id);
  p.text = std::move(text);
  p.date = "2024-01-02 03:04:05";
  return p;
}

inline accnote::llm::MockRule rule(std::vector<std::string> match, std::vector<std::string> responses) {
  return accnote::llm::MockRule{std::move(match), std::move(responses), ""};
}

/// Gateway over a scripted mock; `mock` stays valid for the gateway's lifetime.
struct MockGateway {
  accnote::llm::MockChatBackend* mock = nullptr;
  std::unique_ptr<accnote::llm::LlmGateway> gateway;

  explicit MockGateway(std::vector<accnote::llm::MockRule> rules,
                       std::unique_ptr<accnote::llm::ResponseCache> cache = nullptr) {
    auto backend = std::make_unique<accnote::llm::MockChatBackend>(std::move(rules));
    mock = backend.get();
    gateway = std::make_unique<accnote::llm::LlmGateway>(
        std::move(backend), std::make_shared<accnote::llm::HashingEmbedder>(), std::move(cache));
  }
};

}  // namespace testing
