#include "accnote/metrics/corpus.hpp"

#include <omp.h>

#include <exception>
#include <mutex>

#include "accnote/metrics/overlap.hpp"

namespace accnote::metrics {
namespace {

NoteScores score_item(const CorpusItem& item, const llm::TextEmbedder& embedder,
                      const PolarityLexicon& lexicon, ChsOptions options) {
  const auto cand = render_note(item.note);
  const auto ref = render_note(item.gold);
  return NoteScores{item.id, rouge_l(cand, ref), bleu(cand, ref),
                    chs(item.note, item.gold, item.post_text, embedder, lexicon, options)};
}

}  // namespace

std::vector<NoteScores> score_corpus_serial(std::span<const CorpusItem> items,
                                            const llm::TextEmbedder& embedder,
                                            const PolarityLexicon& lexicon, ChsOptions options) {
  std::vector<NoteScores> out;
  out.reserve(items.size());
  for (const auto& item : items) out.push_back(score_item(item, embedder, lexicon, options));
  return out;
}

std::vector<NoteScores> score_corpus_parallel(std::span<const CorpusItem> items,
                                              const llm::TextEmbedder& embedder,
                                              const PolarityLexicon& lexicon, ChsOptions options,
                                              int threads) {
  std::vector<NoteScores> out(items.size());
  std::exception_ptr failure;
  std::mutex failure_mu;
  const auto n = static_cast<long>(items.size());
  const int team = threads > 0 ? threads : omp_get_max_threads();

#pragma omp parallel for schedule(dynamic, 4) num_threads(team)
  for (long i = 0; i < n; ++i) {
    try {
      out[static_cast<std::size_t>(i)] = score_item(items[static_cast<std::size_t>(i)], embedder, lexicon, options);
    } catch (...) {
      std::lock_guard lock(failure_mu);
      if (!failure) failure = std::current_exception();
    }
  }
  if (failure) std::rethrow_exception(failure);
  return out;
}

CorpusMeans corpus_means(std::span<const NoteScores> scores) {
  CorpusMeans m;
  m.count = scores.size();
  if (scores.empty()) return m;
  double sums[7] = {};
  for (const auto& s : scores) {
    sums[0] += s.rouge_l;
    sums[1] += s.bleu;
    sums[2] += s.chs.chs1;
    sums[3] += s.chs.chs2;
    sums[4] += s.chs.chs3;
    sums[5] += s.chs.chs4;
    sums[6] += s.chs.chs5;
  }
  const double n = static_cast<double>(scores.size());
  m.rouge_l = sums[0] / n;
  m.bleu = sums[1] / n;
  m.chs = make_chs_report(sums[2] / n, sums[3] / n, sums[4] / n, sums[5] / n, sums[6] / n);
  return m;
}

}  // namespace accnote::metrics
