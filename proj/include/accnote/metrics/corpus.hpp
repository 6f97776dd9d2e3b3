#pragma once

#include <span>
#include <string>
#include <vector>

#include "accnote/data_model.hpp"
#include "accnote/llm/embedding.hpp"
#include "accnote/metrics/chs.hpp"
#include "accnote/metrics/sentiment.hpp"

namespace accnote::metrics {

/// One generated note paired with its ground truth.
struct CorpusItem {
  std::string id;
  Note note;
  Note gold;
  std::string post_text;
};

struct NoteScores {
  std::string id;
  double rouge_l = 0.0;
  double bleu = 0.0;
  ChsReport chs;

  friend bool operator==(const NoteScores&, const NoteScores&) = default;
};

struct CorpusMeans {
  std::size_t count = 0;
  double rouge_l = 0.0;
  double bleu = 0.0;
  ChsReport chs;
};

/// Reference implementation: one item after another.
std::vector<NoteScores> score_corpus_serial(std::span<const CorpusItem> items,
                                            const llm::TextEmbedder& embedder,
                                            const PolarityLexicon& lexicon, ChsOptions options = {});

/// OpenMP over items; output matches score_corpus_serial element for element.
/// threads <= 0 uses the OpenMP default. The embedder must be thread-safe.
std::vector<NoteScores> score_corpus_parallel(std::span<const CorpusItem> items,
                                              const llm::TextEmbedder& embedder,
                                              const PolarityLexicon& lexicon, ChsOptions options = {},
                                              int threads = 0);

/// Per-column means, summed in input order. Empty input gives count 0.
CorpusMeans corpus_means(std::span<const NoteScores> scores);

}  // namespace accnote::metrics
