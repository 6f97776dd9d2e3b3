#pragma once

#include "accnote/llm/embedding.hpp"

namespace accnote::metrics {

/// dot(u,v) / (|u||v|), or 0 when either vector is zero. Throws
/// std::invalid_argument on a dimension mismatch.
double cosine(const llm::EmbeddingVector& u, const llm::EmbeddingVector& v);

}  // namespace accnote::metrics
