#include "accnote/data_model.hpp"

#include <chrono>
#include <cstdio>

#include "accnote/strings.hpp"
#include "accnote/url.hpp"

namespace accnote {

std::string_view to_string(Label label) {
  return label == Label::kDeceptive ? "Deceptive" : "NonDeceptive";
}

std::string_view to_string(Provenance provenance) {
  switch (provenance) {
    case Provenance::kSupporting:
      return "Supporting";
    case Provenance::kRefuting:
      return "Refuting";
    case Provenance::kIrrelevant:
      return "Irrelevant";
    case Provenance::kEmptyContext:
      return "EmptyContext";
    case Provenance::kJudge:
      return "Judge";
    case Provenance::kGroundTruth:
      return "GroundTruth";
  }
  return "Judge";
}

std::optional<Label> label_from_string(std::string_view text) {
  std::string key;
  for (char c : to_lower(trim(text))) {
    if (c != '-' && c != '_' && c != ' ') key.push_back(c);
  }
  if (key == "deceptive") return Label::kDeceptive;
  if (key == "nondeceptive") return Label::kNonDeceptive;
  return std::nullopt;
}

std::optional<Provenance> provenance_from_string(std::string_view text) {
  for (auto p : {Provenance::kSupporting, Provenance::kRefuting, Provenance::kIrrelevant,
                 Provenance::kEmptyContext, Provenance::kJudge, Provenance::kGroundTruth}) {
    if (iequals(text, to_string(p))) return p;
  }
  return std::nullopt;
}

std::optional<Label> label_from_classification(std::string_view classification) {
  const auto c = to_lower(trim(classification));
  if (c == "misinformed_or_potentially_misleading") return Label::kDeceptive;
  if (c == "not_misleading") return Label::kNonDeceptive;
  return label_from_string(c);
}

std::optional<Timestamp> Timestamp::parse(std::string_view text) {
  // YYYY-MM-DD HH:MM:SS
  if (text.size() != 19) return std::nullopt;
  constexpr std::string_view kShape = "dddd-dd-dd dd:dd:dd";
  for (std::size_t i = 0; i < kShape.size(); ++i) {
    const char c = text[i];
    if (kShape[i] == 'd') {
      if (c < '0' || c > '9') return std::nullopt;
    } else if (c != kShape[i]) {
      return std::nullopt;
    }
  }
  const auto num = [&](std::size_t pos, std::size_t len) {
    int v = 0;
    for (std::size_t i = pos; i < pos + len; ++i) v = v * 10 + (text[i] - '0');
    return v;
  };
  Timestamp ts{num(0, 4), num(5, 2), num(8, 2), num(11, 2), num(14, 2), num(17, 2)};
  const std::chrono::year_month_day ymd{std::chrono::year{ts.year},
                                        std::chrono::month{static_cast<unsigned>(ts.month)},
                                        std::chrono::day{static_cast<unsigned>(ts.day)}};
  if (!ymd.ok() || ts.hour > 23 || ts.minute > 59 || ts.second > 59) return std::nullopt;
  return ts;
}

std::string Timestamp::to_string() const {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%04d-%02d-%02d %02d:%02d:%02d", year, month, day, hour, minute,
                second);
  return buf;
}

std::optional<std::string> Post::primary_image() const {
  if (image_path && !image_path->empty()) return image_path;
  if (!image_urls.empty()) return image_urls.front();
  return std::nullopt;
}

std::vector<std::string> validate_entry(const DataEntry& entry) {
  std::vector<std::string> report;
  const auto& post = entry.post;
  if (trim(post.id).empty()) report.emplace_back("post.id empty");
  if (trim(post.text).empty()) report.emplace_back("post.text empty");
  if (!post.timestamp()) report.emplace_back("post.timestamp invalid");

  if (entry.contexts.size() > kMaxContexts) {
    report.push_back("contexts length " + std::to_string(entry.contexts.size()) + " exceeds " +
                     std::to_string(kMaxContexts));
  }
  for (std::size_t k = 0; k < entry.contexts.size(); ++k) {
    if (!is_absolute_url(entry.contexts[k].url)) {
      report.push_back("contexts[" + std::to_string(k) + "].url invalid");
    }
  }

  if (entry.gold_note) {
    if (trim(entry.gold_note->rationale).empty()) report.emplace_back("gold_note.rationale empty");
    if (!entry.gold_label) {
      report.emplace_back("gold_note present without gold_label");
    } else if (*entry.gold_label != entry.gold_note->label) {
      report.emplace_back("gold_label inconsistent with gold_note");
    }
  }
  return report;
}

}  // namespace accnote
