#include "accnote/agents/judge.hpp"

#include <cctype>
#include <stdexcept>

#include "accnote/strings.hpp"

namespace accnote::agents {

std::optional<int> parse_option(std::string_view raw, int n) {
  if (n < 1) return std::nullopt;
  const auto lower = to_lower(raw);
  // "The best option is Option 2": skip mentions not followed by a number.
  for (auto pos = lower.find("option"); pos != std::string::npos; pos = lower.find("option", pos + 1)) {
    std::size_t i = pos + 6;
    while (i < lower.size() && (lower[i] == ' ' || lower[i] == '#' || lower[i] == ':' || lower[i] == '(')) ++i;
    if (i >= lower.size() || !std::isdigit(static_cast<unsigned char>(lower[i]))) continue;
    long value = 0;
    while (i < lower.size() && std::isdigit(static_cast<unsigned char>(lower[i]))) {
      if (value < 1'000'000) value = value * 10 + (lower[i] - '0');
      ++i;
    }
    if (value < 1 || value > n) return std::nullopt;
    return static_cast<int>(value);
  }
  return std::nullopt;
}

Judge::Judge(llm::ChatService& chat, ModelSettings model) : chat_(chat), model_(std::move(model)) {}

Judgment Judge::judge(const Post& post, std::span<const Note> candidates) const {
  if (candidates.empty()) throw std::invalid_argument("judge: no candidates");
  if (candidates.size() == 1) return Judgment{0, "", false};

  auto request = judge_request(post, candidates, model_);
  const int n = static_cast<int>(candidates.size());
  Judgment out;
  for (int attempt = 0; attempt < 2; ++attempt) {
    request.attempt = attempt;
    out.raw = chat_.chat(request).text;
    if (const auto option = parse_option(out.raw, n)) {
      out.selected = static_cast<std::size_t>(*option - 1);
      return out;
    }
  }
  out.selected = 0;
  out.fallback = true;
  return out;
}

}  // namespace accnote::agents
