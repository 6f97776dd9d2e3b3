#include "accnote/metrics/similarity.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace accnote::metrics {

double cosine(const llm::EmbeddingVector& u, const llm::EmbeddingVector& v) {
  if (u.dimension() != v.dimension()) {
    throw std::invalid_argument("cosine: dimension mismatch (" + std::to_string(u.dimension()) +
                                " vs " + std::to_string(v.dimension()) + ")");
  }
  double dot = 0.0, uu = 0.0, vv = 0.0;
  for (std::size_t i = 0; i < u.dimension(); ++i) {
    dot += u.values[i] * v.values[i];
    uu += u.values[i] * u.values[i];
    vv += v.values[i] * v.values[i];
  }
  if (uu == 0.0 || vv == 0.0) return 0.0;
  // sqrt(uu * vv) rather than sqrt(uu) * sqrt(vv): for u == v it equals dot
  // exactly, so self-similarity is exactly 1.
  return std::clamp(dot / std::sqrt(uu * vv), -1.0, 1.0);
}

}  // namespace accnote::metrics
