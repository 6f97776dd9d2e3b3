#pragma once

#include <atomic>
#include <chrono>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

namespace accnote::llm {

class GatewayError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Retryable failure: connection errors, timeouts, HTTP 408/429/5xx.
class TransientError : public GatewayError {
 public:
  using GatewayError::GatewayError;
};

/// Raised once the retry budget is spent on transient failures.
class NetworkError : public GatewayError {
 public:
  using GatewayError::GatewayError;
};

class AuthError : public GatewayError {
 public:
  using GatewayError::GatewayError;
};

/// The endpoint answered, but not in the expected shape.
class SchemaError : public GatewayError {
 public:
  using GatewayError::GatewayError;
};

struct TextPart {
  std::string text;
};

/// An image handed to a multimodal model. Bytes are loaded lazily from
/// `source` (file path or URL) unless supplied inline.
struct ImagePart {
  std::string source;
  std::string bytes;
  /// Content digest supplied by the dataset, if any.
  std::string digest;
};

using UserPart = std::variant<TextPart, ImagePart>;

struct ChatRequest {
  std::string system_text;
  std::vector<UserPart> user_parts;
  double temperature = 0.0;
  int max_tokens = 512;
  std::string model_id;
  /// 0 for the first try; parse-failure retries bump it so each attempt has
  /// its own cache slot and warm reruns replay the same sequence.
  int attempt = 0;
};

struct ChatResponse {
  std::string text;
  bool cached = false;
  std::chrono::milliseconds latency{0};
};

/// Anything that can answer a chat request.
class ChatService {
 public:
  virtual ~ChatService() = default;
  virtual ChatResponse chat(const ChatRequest& request) = 0;
};

/// Forwards to another service and counts requests. Agents of one entry share
/// one of these so the trace can report the entry's call count.
class CountingChat final : public ChatService {
 public:
  explicit CountingChat(ChatService& inner) : inner_(inner) {}

  ChatResponse chat(const ChatRequest& request) override {
    ++count_;
    return inner_.chat(request);
  }
  int count() const { return count_.load(); }

 private:
  ChatService& inner_;
  std::atomic<int> count_{0};
};

/// Stable identifier of an image part: supplied digest, else SHA-256 of inline
/// bytes, else SHA-256 of the local file, else a digest of the source string.
std::string image_digest(const ImagePart& image);

/// SHA-256 over model id, temperature, system text, text parts and image
/// digests (plus the attempt number when non-zero).
std::string cache_key(const ChatRequest& request);

/// Flat text of the prompt with images shown as "<image>". Mock matchers run
/// against this.
std::string render_prompt(const ChatRequest& request);

}  // namespace accnote::llm
