#include "accnote/llm/embedding.hpp"

#include <cmath>
#include <cstdint>
#include <stdexcept>

#include "accnote/metrics/text.hpp"

namespace accnote::llm {
namespace {

std::uint64_t fnv1a(std::string_view s) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

}  // namespace

HashingEmbedder::HashingEmbedder(std::size_t dimension) : dimension_(dimension) {
  if (dimension_ == 0) throw std::invalid_argument("embedding dimension must be positive");
}

EmbeddingVector HashingEmbedder::embed(std::string_view text) const {
  EmbeddingVector out{std::vector<double>(dimension_, 0.0)};
  for (const auto& token : metrics::tokenize(text)) out.values[fnv1a(token) % dimension_] += 1.0;
  double norm = 0.0;
  for (double v : out.values) norm += v * v;
  if (norm > 0.0) {
    norm = std::sqrt(norm);
    for (double& v : out.values) v /= norm;
  }
  return out;
}

}  // namespace accnote::llm
