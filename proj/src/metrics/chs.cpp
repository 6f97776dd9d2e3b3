#include "accnote/metrics/chs.hpp"

#include <algorithm>
#include <cmath>

#include "accnote/metrics/overlap.hpp"
#include "accnote/metrics/similarity.hpp"
#include "accnote/strings.hpp"
#include "accnote/url.hpp"

namespace accnote::metrics {

ChsReport make_chs_report(double chs1, double chs2, double chs3, double chs4, double chs5) {
  ChsReport r{chs1, chs2, chs3, chs4, chs5, 0.0};
  r.composite = (chs1 + chs2 + chs3 + chs4 + chs5) / 5.0;
  return r;
}

std::string render_note(const Note& note) {
  std::string out = note.rationale;
  for (const auto& url : note.citations) {
    if (!out.empty()) out.push_back(' ');
    out += url;
  }
  return out;
}

llm::EmbeddingVector url_set_embedding(std::span<const std::string> urls,
                                       const llm::TextEmbedder& embedder) {
  llm::EmbeddingVector sum;
  for (const auto& url : urls) {
    const auto vec = embedder.embed(to_lower(strip_scheme(url)));
    if (sum.values.empty()) sum.values.assign(vec.dimension(), 0.0);
    for (std::size_t i = 0; i < vec.dimension() && i < sum.values.size(); ++i) sum.values[i] += vec.values[i];
  }
  for (double& v : sum.values) v /= static_cast<double>(urls.size());
  return sum;
}

ChsReport chs(const Note& note, const Note& gold, std::string_view post_text,
              const llm::TextEmbedder& embedder, const PolarityLexicon& lexicon, ChsOptions options) {
  double credibility = 0.0;
  if (note.citations.empty() && gold.citations.empty()) {
    credibility = 1.0;
  } else if (!note.citations.empty() && !gold.citations.empty()) {
    credibility = std::clamp(cosine(url_set_embedding(note.citations, embedder),
                                    url_set_embedding(gold.citations, embedder)),
                             0.0, 1.0);
  }

  const double overlap = rouge_l(render_note(note), render_note(gold));

  std::string context(post_text);
  context += ' ';
  context += gold.rationale;
  const double relevance =
      std::clamp(cosine(embedder.embed(note.rationale), embedder.embed(context)), 0.0, 1.0);

  const double polarity = lexicon.polarity(note.rationale);
  const double neutrality = options.neutrality == NeutralityMode::kAbsolute
                                ? std::clamp(1.0 - std::fabs(polarity), 0.0, 1.0)
                                : std::clamp(1.0 - polarity, 0.0, 1.0);

  return make_chs_report(credibility, overlap, relevance, overlap, neutrality);
}

}  // namespace accnote::metrics
