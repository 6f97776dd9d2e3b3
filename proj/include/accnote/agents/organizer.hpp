#pragma once

#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "accnote/agents/prompts.hpp"
#include "accnote/data_model.hpp"
#include "accnote/llm/chat.hpp"

namespace accnote::agents {

/// The model's partition could not be parsed on either attempt.
class OrganizerError : public std::runtime_error {
 public:
  OrganizerError(const std::string& what, std::vector<std::string> raw_responses)
      : std::runtime_error(what), raw_responses_(std::move(raw_responses)) {}
  const std::vector<std::string>& raw_responses() const { return raw_responses_; }

 private:
  std::vector<std::string> raw_responses_;
};

/// Data Organizer: keeps the useful and trustworthy contexts, then splits them
/// by stance toward the post's claim.
class DataOrganizer {
 public:
  DataOrganizer(llm::ChatService& chat, ModelSettings model);

  /// Two requests (usefulness over summaries, credibility over URLs), issued
  /// concurrently. Requires 1 <= contexts.size() <= 10.
  FilterDecision filter_contexts(std::span<const ContextItem> contexts) const;

  /// One request over the kept items; an empty list returns an empty partition
  /// without calling the model.
  StancePartition cluster_contexts(const Post& post, std::span<const ContextItem> kept) const;

 private:
  llm::ChatService& chat_;
  ModelSettings model_;
};

}  // namespace accnote::agents
