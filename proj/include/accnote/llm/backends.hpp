#pragma once

#include <atomic>
#include <chrono>
#include <filesystem>
#include <memory>
#include <string>
#include <vector>

#include "accnote/llm/chat.hpp"
#include "accnote/llm/embedding.hpp"

namespace accnote::llm {

/// Raw completion provider, wrapped by LlmGateway for caching and retries.
class ChatBackend {
 public:
  virtual ~ChatBackend() = default;
  /// Throws TransientError for retryable failures.
  virtual std::string complete(const ChatRequest& request) = 0;
};

/// A mock prompt with no matching script rule.
class MockUnmatchedError : public GatewayError {
 public:
  using GatewayError::GatewayError;
};

/// One scripted reply. The rule fires when every `match` substring occurs in
/// the rendered prompt. `responses[attempt]` is returned (the last one for
/// later attempts). A non-empty `error` ("transient", "auth", "schema")
/// raises that failure instead.
struct MockRule {
  std::vector<std::string> match;
  std::vector<std::string> responses;
  std::string error;
};

/// Scripted deterministic backend: first matching rule wins.
///
/// Script file shape:
///   {"rules": [{"match": "substring" | ["a", "b"],
///               "response": "text" | "responses": ["try 1", "try 2"]}]}
class MockChatBackend final : public ChatBackend {
 public:
  explicit MockChatBackend(std::vector<MockRule> rules);
  static std::unique_ptr<MockChatBackend> from_json_text(std::string_view text);
  static std::unique_ptr<MockChatBackend> from_file(const std::filesystem::path& path);

  std::string complete(const ChatRequest& request) override;
  int call_count() const { return calls_.load(); }

 private:
  std::vector<MockRule> rules_;
  std::atomic<int> calls_{0};
};

struct EndpointConfig {
  /// e.g. "https://api.openai.com/v1" or "http://127.0.0.1:8000/v1".
  std::string base_url;
  std::string api_key;
  std::chrono::seconds timeout{120};
};

/// POSTs to {base_url}/chat/completions in the OpenAI wire format. Images are
/// sent as image_url parts; local files are inlined as base64 data URLs.
class OpenAiChatBackend final : public ChatBackend {
 public:
  explicit OpenAiChatBackend(EndpointConfig config);
  std::string complete(const ChatRequest& request) override;

 private:
  EndpointConfig config_;
};

/// POSTs to {base_url}/embeddings. Errors follow the chat backend's rules.
class OpenAiEmbedder final : public TextEmbedder {
 public:
  OpenAiEmbedder(EndpointConfig config, std::string model_id);
  EmbeddingVector embed(std::string_view text) const override;

 private:
  EndpointConfig config_;
  std::string model_id_;
};

}  // namespace accnote::llm
