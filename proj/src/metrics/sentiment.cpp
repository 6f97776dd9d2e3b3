#include "accnote/metrics/sentiment.hpp"

#include <cstdlib>
#include <fstream>
#include <vector>

#include "accnote/metrics/text.hpp"
#include "accnote/strings.hpp"

namespace accnote::metrics {
namespace {

constexpr int kNegationWindow = 3;

bool is_negator(const std::string& token) {
  return token == "not" || token == "no" || token == "never";
}

// "don't" -> "do not" so the contraction survives tokenization as a negator.
std::string expand_contractions(std::string_view text) {
  std::string out;
  out.reserve(text.size() + 8);
  for (std::size_t i = 0; i < text.size(); ++i) {
    const auto rest = text.substr(i);
    if (istarts_with(rest, "n't")) {
      out += " not";
      i += 2;
    } else if (istarts_with(rest, "n\xE2\x80\x99t")) {  // n’t
      out += " not";
      i += 4;
    } else {
      out.push_back(text[i]);
    }
  }
  return out;
}

}  // namespace

PolarityLexicon::PolarityLexicon(std::unordered_map<std::string, double> entries)
    : entries_(std::move(entries)) {}

PolarityLexicon PolarityLexicon::load(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw LexiconError("lexicon missing: " + path.string());
  std::unordered_map<std::string, double> entries;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto body = trim(line);
    if (body.empty() || body.front() == '#') continue;
    const auto tab = body.find('\t');
    if (tab == std::string_view::npos) {
      throw LexiconError(path.string() + ":" + std::to_string(line_no) + ": expected word<TAB>polarity");
    }
    const std::string value(trim(body.substr(tab + 1)));
    char* end = nullptr;
    const double polarity = std::strtod(value.c_str(), &end);
    if (end == value.c_str() || *end != '\0' || polarity < -1.0 || polarity > 1.0) {
      throw LexiconError(path.string() + ":" + std::to_string(line_no) + ": bad polarity '" + value + "'");
    }
    entries.insert_or_assign(to_lower(trim(body.substr(0, tab))), polarity);
  }
  return PolarityLexicon(std::move(entries));
}

const PolarityLexicon& PolarityLexicon::bundled() {
  static const PolarityLexicon lexicon = [] {
    const char* env = std::getenv("ACCNOTE_LEXICON");
    return load(env != nullptr && *env != '\0' ? env : ACCNOTE_DEFAULT_LEXICON);
  }();
  return lexicon;
}

const double* PolarityLexicon::find(std::string_view word) const {
  const auto it = entries_.find(std::string(word));
  return it == entries_.end() ? nullptr : &it->second;
}

double PolarityLexicon::polarity(std::string_view text) const {
  const auto tokens = tokenize(expand_contractions(text));
  double sum = 0.0;
  int matched = 0;
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    const double* value = find(tokens[i]);
    if (value == nullptr) continue;
    bool negated = false;
    for (int back = 1; back <= kNegationWindow && static_cast<int>(i) - back >= 0; ++back) {
      if (is_negator(tokens[i - back])) {
        negated = true;
        break;
      }
    }
    sum += negated ? -*value : *value;
    ++matched;
  }
  return matched == 0 ? 0.0 : sum / matched;
}

}  // namespace accnote::metrics
