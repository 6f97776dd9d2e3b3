#pragma once

#include <atomic>
#include <chrono>
#include <memory>

#include "accnote/llm/backends.hpp"
#include "accnote/llm/chat.hpp"
#include "accnote/llm/embedding.hpp"
#include "accnote/llm/response_cache.hpp"

namespace accnote::llm {

struct RetryPolicy {
  int max_retries = 2;
  std::chrono::milliseconds initial_backoff{1000};
  /// Delay before retry k (0-based) is initial_backoff * factor^k: 1s, 4s.
  double backoff_factor = 4.0;
};

/// Single entry point for completions and embeddings. Chat responses are
/// served from the cache when the key matches; transient backend failures are
/// retried with exponential backoff, then surface as NetworkError.
class LlmGateway final : public ChatService, public TextEmbedder {
 public:
  LlmGateway(std::unique_ptr<ChatBackend> chat, std::shared_ptr<const TextEmbedder> embedder,
             std::unique_ptr<ResponseCache> cache = std::make_unique<ResponseCache>(),
             RetryPolicy retry = {});

  ChatResponse chat(const ChatRequest& request) override;

  /// Throws GatewayError when the embedder changes dimension mid-run.
  EmbeddingVector embed(std::string_view text) const override;

  /// Requests that reached the backend (cache misses, each retry counted).
  int backend_calls() const { return backend_calls_.load(); }
  int cache_hits() const { return cache_hits_.load(); }
  const ResponseCache& cache() const { return *cache_; }

 private:
  template <typename Fn>
  auto with_retries(Fn&& fn) const;

  std::unique_ptr<ChatBackend> chat_;
  std::shared_ptr<const TextEmbedder> embedder_;
  std::unique_ptr<ResponseCache> cache_;
  RetryPolicy retry_;
  mutable std::atomic<int> backend_calls_{0};
  std::atomic<int> cache_hits_{0};
  mutable std::atomic<std::size_t> dimension_{0};
};

}  // namespace accnote::llm
