#pragma once

#include <filesystem>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>

namespace accnote::metrics {

class LexiconError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Word → polarity in [-1, 1], read from "word<TAB>polarity" lines ('#'
/// starts a comment line).
class PolarityLexicon {
 public:
  PolarityLexicon() = default;
  explicit PolarityLexicon(std::unordered_map<std::string, double> entries);

  static PolarityLexicon load(const std::filesystem::path& path);
  /// The lexicon shipped in resources/, or $ACCNOTE_LEXICON when set.
  static const PolarityLexicon& bundled();

  /// Mean polarity of the lexicon words in the text. A word preceded within
  /// three tokens by not/no/never/n't has its sign flipped. Text with no
  /// lexicon words scores 0.
  double polarity(std::string_view text) const;

  std::size_t size() const { return entries_.size(); }
  const double* find(std::string_view word) const;

 private:
  std::unordered_map<std::string, double> entries_;
};

}  // namespace accnote::metrics
