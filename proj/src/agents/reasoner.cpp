#include "accnote/agents/reasoner.hpp"

#include <array>
#include <cctype>
#include <stdexcept>

#include "accnote/strings.hpp"

namespace accnote::agents {
namespace {

// Multi-byte punctuation seen around labels: curly quotes and dashes.
constexpr std::array<std::string_view, 7> kWidePunct = {
    "\xE2\x80\x9C", "\xE2\x80\x9D", "\xE2\x80\x98", "\xE2\x80\x99",  // “ ” ‘ ’
    "\xE2\x80\x94", "\xE2\x80\x93", "\xE2\x80\x90",                  // — – ‐
};

std::string_view skip_chars(std::string_view text, std::string_view ascii) {
  for (;;) {
    if (text.empty()) return text;
    if (std::isspace(static_cast<unsigned char>(text.front())) || ascii.find(text.front()) != std::string_view::npos) {
      text.remove_prefix(1);
      continue;
    }
    bool wide = false;
    for (const auto p : kWidePunct) {
      if (text.starts_with(p)) {
        text.remove_prefix(p.size());
        wide = true;
        break;
      }
    }
    if (!wide) return text;
  }
}

// Length of the matched label token, or 0.
std::size_t match_token(std::string_view text, std::string_view token) {
  if (!istarts_with(text, token)) return 0;
  if (text.size() > token.size() && std::isalnum(static_cast<unsigned char>(text[token.size()]))) return 0;
  return token.size();
}

}  // namespace

std::optional<LabeledRationale> parse_label_and_rationale(std::string_view raw) {
  const auto text = skip_chars(raw, "*_#>`\"'-");
  LabeledRationale out;
  std::size_t len = 0;
  for (const auto token : {std::string_view("non-deceptive"), std::string_view("non deceptive"),
                           std::string_view("nondeceptive"), std::string_view("non\xE2\x80\x90" "deceptive"),
                           std::string_view("non\xE2\x80\x91" "deceptive")}) {
    if ((len = match_token(text, token)) != 0) break;
  }
  if (len != 0) {
    out.label = Label::kNonDeceptive;
  } else if ((len = match_token(text, "deceptive")) != 0) {
    out.label = Label::kDeceptive;
  } else {
    return std::nullopt;
  }
  out.rationale = std::string(trim(skip_chars(text.substr(len), "*_.:,;!-\"'`)]")));
  if (out.rationale.empty()) return std::nullopt;
  return out;
}

Reasoner::Reasoner(llm::ChatService& chat, ModelSettings model) : chat_(chat), model_(std::move(model)) {}

CandidateRecord Reasoner::reason(const Post& post, Provenance cluster,
                                 std::span<const ContextItem> items) const {
  if (cluster == Provenance::kJudge || cluster == Provenance::kGroundTruth) {
    throw std::invalid_argument("reason: cluster must be a stance cluster or EmptyContext");
  }
  if (cluster == Provenance::kEmptyContext && !items.empty()) {
    throw std::invalid_argument("reason: EmptyContext takes no context items");
  }
  CandidateRecord record;
  record.cluster = cluster;
  auto request = reasoner_request(post, items, model_);
  for (int attempt = 0; attempt < 2; ++attempt) {
    request.attempt = attempt;
    record.raw.push_back(chat_.chat(request).text);
    if (auto parsed = parse_label_and_rationale(record.raw.back())) {
      Note note;
      note.label = parsed->label;
      note.rationale = std::move(parsed->rationale);
      for (const auto& item : items) note.citations.push_back(item.url);
      note.provenance = cluster;
      record.note = std::move(note);
      break;
    }
  }
  return record;
}

}  // namespace accnote::agents
