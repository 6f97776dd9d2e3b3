#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>

#include "accnote/agents/prompts.hpp"
#include "accnote/data_model.hpp"
#include "accnote/llm/chat.hpp"

namespace accnote::agents {

/// The first integer after "Option" (case-insensitive), when it lies in 1..n.
std::optional<int> parse_option(std::string_view raw, int n);

struct Judgment {
  /// 0-based position in the candidate list.
  std::size_t selected = 0;
  /// Completion of the last attempt; empty when no model call was made.
  std::string raw;
  /// True when both attempts were unparseable and the first candidate was taken.
  bool fallback = false;
};

/// Judge agent: picks the candidate that best meets the Community Notes
/// criteria. A single candidate is returned without a model call.
class Judge {
 public:
  Judge(llm::ChatService& chat, ModelSettings model);

  /// Requires at least one candidate.
  Judgment judge(const Post& post, std::span<const Note> candidates) const;

 private:
  llm::ChatService& chat_;
  ModelSettings model_;
};

}  // namespace accnote::agents
