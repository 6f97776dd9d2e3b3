#pragma once

#include <filesystem>
#include <span>
#include <stdexcept>

#include "accnote/agents/prompts.hpp"
#include "accnote/data_model.hpp"
#include "accnote/llm/gateway.hpp"

namespace accnote {

class PipelineError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct PipelineOptions {
  agents::ModelSettings model;
  /// Run the closed-book reasoner even when stance clusters exist.
  bool empty_context_always = true;
  /// Concurrent reasoners per entry (at most four are ever needed).
  int reasoner_fanout = 4;
  int max_concurrent_entries = 4;
};

struct EntryOutcome {
  Note note;
  PipelineTrace trace;
};

struct BatchSummary {
  std::size_t total = 0;
  std::size_t success = 0;
  /// Entries failing validate_entry; not sent to the model.
  std::size_t invalid = 0;
  std::size_t error = 0;
  /// Entries already present in the output file (resume mode).
  std::size_t skipped = 0;
  /// Chat requests issued, cache hits included.
  std::size_t chat_calls = 0;
  std::size_t cache_hits = 0;
  /// Requests that reached the backend, retries included.
  std::size_t backend_calls = 0;
};

/// Organizer → concurrent reasoners → judge, for one post or a whole file.
class Pipeline {
 public:
  Pipeline(llm::LlmGateway& gateway, PipelineOptions options);

  /// Throws PipelineError when every candidate is invalid and lets gateway
  /// and organizer errors through.
  EntryOutcome run_entry(const DataEntry& entry) const;

  /// Writes one result line per entry, in input order, as results complete.
  /// Per-entry failures become error records. With `resume`, entries whose id
  /// is already in the output file are skipped and new lines are appended.
  /// Throws std::runtime_error when the output cannot be written.
  BatchSummary run_batch(std::span<const DataEntry> entries, const std::filesystem::path& output,
                         bool resume = false) const;

 private:
  EntryOutcome run_entry_with(llm::ChatService& chat, const DataEntry& entry) const;

  llm::LlmGateway& gateway_;
  PipelineOptions options_;
};

}  // namespace accnote
