#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>

#include "accnote/agents/prompts.hpp"
#include "accnote/data_model.hpp"
#include "accnote/llm/chat.hpp"

namespace accnote::agents {

struct LabeledRationale {
  Label label = Label::kNonDeceptive;
  std::string rationale;
};

/// Reads "<Deceptive|Non-deceptive><punct> rationale". Leading markdown,
/// quotes and whitespace are skipped; the label match is case-insensitive and
/// tries the non-deceptive spellings first. nullopt when there is no leading
/// label or nothing follows it.
std::optional<LabeledRationale> parse_label_and_rationale(std::string_view raw);

/// Reasoner agent: one candidate note from the post and one evidence cluster.
class Reasoner {
 public:
  Reasoner(llm::ChatService& chat, ModelSettings model);

  /// `cluster` is Supporting, Refuting, Irrelevant or EmptyContext (which
  /// takes no items). Citations are the cluster's URLs in order. A completion
  /// without a label is retried once; a second failure yields an invalid
  /// candidate rather than an exception.
  CandidateRecord reason(const Post& post, Provenance cluster, std::span<const ContextItem> items) const;

 private:
  llm::ChatService& chat_;
  ModelSettings model_;
};

}  // namespace accnote::agents
