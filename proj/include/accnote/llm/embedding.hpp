#pragma once

#include <cstddef>
#include <string_view>
#include <vector>

namespace accnote::llm {

struct EmbeddingVector {
  std::vector<double> values;

  std::size_t dimension() const { return values.size(); }
  friend bool operator==(const EmbeddingVector&, const EmbeddingVector&) = default;
};

/// Text → vector. Implementations must be safe to call concurrently.
class TextEmbedder {
 public:
  virtual ~TextEmbedder() = default;
  virtual EmbeddingVector embed(std::string_view text) const = 0;
};

/// Offline embedder: lowercase word tokens hashed (FNV-1a) into a fixed number
/// of buckets, counted, then L2-normalized. Text without tokens maps to the
/// zero vector.
class HashingEmbedder final : public TextEmbedder {
 public:
  static constexpr std::size_t kDefaultDimension = 256;

  explicit HashingEmbedder(std::size_t dimension = kDefaultDimension);
  EmbeddingVector embed(std::string_view text) const override;
  std::size_t dimension() const { return dimension_; }

 private:
  std::size_t dimension_;
};

}  // namespace accnote::llm
