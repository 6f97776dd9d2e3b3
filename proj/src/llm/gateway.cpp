#include "accnote/llm/gateway.hpp"

#include <cmath>
#include <thread>

namespace accnote::llm {

LlmGateway::LlmGateway(std::unique_ptr<ChatBackend> chat,
                       std::shared_ptr<const TextEmbedder> embedder,
                       std::unique_ptr<ResponseCache> cache, RetryPolicy retry)
    : chat_(std::move(chat)),
      embedder_(std::move(embedder)),
      cache_(std::move(cache)),
      retry_(retry) {
  if (!cache_) cache_ = std::make_unique<ResponseCache>();
}

template <typename Fn>
auto LlmGateway::with_retries(Fn&& fn) const {
  for (int attempt = 0;; ++attempt) {
    try {
      return fn();
    } catch (const TransientError& e) {
      if (attempt >= retry_.max_retries) {
        throw NetworkError("network failure after retries: " + std::string(e.what()));
      }
      const auto delay = std::chrono::duration<double, std::milli>(
          static_cast<double>(retry_.initial_backoff.count()) * std::pow(retry_.backoff_factor, attempt));
      std::this_thread::sleep_for(delay);
    }
  }
}

ChatResponse LlmGateway::chat(const ChatRequest& request) {
  if (request.user_parts.empty()) throw GatewayError("chat request needs at least one user part");
  if (!chat_) throw GatewayError("no chat backend configured");

  const auto key = cache_key(request);
  if (auto hit = cache_->lookup(key)) {
    ++cache_hits_;
    return ChatResponse{std::move(*hit), true, std::chrono::milliseconds{0}};
  }
  const auto start = std::chrono::steady_clock::now();
  auto text = with_retries([&] {
    ++backend_calls_;
    return chat_->complete(request);
  });
  cache_->store(key, text);
  const auto latency =
      std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start);
  return ChatResponse{std::move(text), false, latency};
}

EmbeddingVector LlmGateway::embed(std::string_view text) const {
  if (!embedder_) throw GatewayError("no embedding backend configured");
  auto vec = with_retries([&] { return embedder_->embed(text); });
  std::size_t expected = 0;
  if (!dimension_.compare_exchange_strong(expected, vec.dimension()) && expected != vec.dimension()) {
    throw GatewayError("embedding dimension changed from " + std::to_string(expected) + " to " +
                       std::to_string(vec.dimension()));
  }
  return vec;
}

}  // namespace accnote::llm
