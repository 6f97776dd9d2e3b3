#pragma once

#include <array>
#include <span>
#include <string>
#include <string_view>

#include "accnote/data_model.hpp"
#include "accnote/llm/embedding.hpp"
#include "accnote/metrics/sentiment.hpp"

namespace accnote::metrics {

/// Context Helpfulness Score: five proxies for the Community Notes criteria
/// (credibility, clarity, relevance, veracity, neutrality) and their mean.
struct ChsReport {
  double chs1 = 0.0;
  double chs2 = 0.0;
  double chs3 = 0.0;
  double chs4 = 0.0;
  double chs5 = 0.0;
  double composite = 0.0;

  std::array<double, 5> components() const { return {chs1, chs2, chs3, chs4, chs5}; }
  friend bool operator==(const ChsReport&, const ChsReport&) = default;
};

/// Builds a report whose composite is the arithmetic mean of the components.
ChsReport make_chs_report(double chs1, double chs2, double chs3, double chs4, double chs5);

enum class NeutralityMode {
  /// 1 - |polarity|: strong sentiment of either sign is penalized.
  kAbsolute,
  /// 1 - polarity, clamped to [0, 1]; kept for comparison runs.
  kLiteral,
};

struct ChsOptions {
  NeutralityMode neutrality = NeutralityMode::kAbsolute;
};

/// Text used for note-to-note overlap: rationale, then citation URLs,
/// space-joined. The class label is not included.
std::string render_note(const Note& note);

/// Mean of the embeddings of the URLs, each lowercased with its scheme
/// stripped. Returns an empty vector for an empty set.
llm::EmbeddingVector url_set_embedding(std::span<const std::string> urls,
                                       const llm::TextEmbedder& embedder);

/// Scores a generated note against the ground-truth note of the same post.
///   chs1 = cos(E(citations), E(gold citations)), 1 if both empty, 0 if one is
///   chs2 = chs4 = ROUGE-L(render(note), render(gold))
///   chs3 = cos(E(rationale), E(post_text + " " + gold rationale))
///   chs5 = neutrality of the rationale's polarity
/// Cosines are clamped to [0, 1].
ChsReport chs(const Note& note, const Note& gold, std::string_view post_text,
              const llm::TextEmbedder& embedder, const PolarityLexicon& lexicon,
              ChsOptions options = {});

}  // namespace accnote::metrics
