#include "accnote/pipeline.hpp"

#include <algorithm>
#include <atomic>
#include <fstream>
#include <functional>
#include <future>
#include <mutex>
#include <optional>
#include <thread>
#include <unordered_set>

#include <json.hpp>

#include "accnote/agents/judge.hpp"
#include "accnote/agents/organizer.hpp"
#include "accnote/agents/reasoner.hpp"
#include "accnote/records.hpp"

namespace accnote {
namespace {

struct ReasonerTask {
  Provenance cluster;
  std::vector<ContextItem> items;
};

std::vector<ContextItem> pick(std::span<const ContextItem> items, const IndexSet& indices) {
  std::vector<ContextItem> out;
  for (int i : indices) out.push_back(items[static_cast<std::size_t>(i - 1)]);
  return out;
}

std::unordered_set<std::string> ids_in_file(const std::filesystem::path& path) {
  std::unordered_set<std::string> ids;
  std::ifstream in(path);
  std::string line;
  while (std::getline(in, line)) {
    const auto j = nlohmann::json::parse(line, nullptr, /*allow_exceptions=*/false);
    if (j.is_object() && j.contains("entry_id") && j["entry_id"].is_string()) {
      ids.insert(j["entry_id"].get<std::string>());
    }
  }
  return ids;
}

}  // namespace

Pipeline::Pipeline(llm::LlmGateway& gateway, PipelineOptions options)
    : gateway_(gateway), options_(std::move(options)) {
  options_.reasoner_fanout = std::clamp(options_.reasoner_fanout, 1, 4);
  options_.max_concurrent_entries = std::max(options_.max_concurrent_entries, 1);
}

EntryOutcome Pipeline::run_entry(const DataEntry& entry) const { return run_entry_with(gateway_, entry); }

EntryOutcome Pipeline::run_entry_with(llm::ChatService& chat, const DataEntry& entry) const {
  llm::CountingChat counter(chat);
  const agents::DataOrganizer organizer(counter, options_.model);
  const agents::Reasoner reasoner(counter, options_.model);
  const agents::Judge judge(counter, options_.model);
  const auto& post = entry.post;

  PipelineTrace trace;
  std::vector<ContextItem> kept;
  if (!entry.contexts.empty()) {
    trace.filter = organizer.filter_contexts(entry.contexts);
    kept = pick(entry.contexts, trace.filter->kept);
  }
  trace.partition = organizer.cluster_contexts(post, kept);

  std::vector<ReasonerTask> tasks;
  const std::pair<Provenance, const IndexSet*> clusters[] = {
      {Provenance::kSupporting, &trace.partition.supporting},
      {Provenance::kRefuting, &trace.partition.refuting},
      {Provenance::kIrrelevant, &trace.partition.irrelevant},
  };
  for (const auto& [tag, indices] : clusters) {
    if (!indices->empty()) tasks.push_back({tag, pick(kept, *indices)});
  }
  if (options_.empty_context_always || tasks.empty()) tasks.push_back({Provenance::kEmptyContext, {}});

  // Waves of at most `reasoner_fanout`; results stay in task order.
  trace.candidates.resize(tasks.size());
  const auto fanout = static_cast<std::size_t>(options_.reasoner_fanout);
  for (std::size_t start = 0; start < tasks.size(); start += fanout) {
    const auto end = std::min(tasks.size(), start + fanout);
    std::vector<std::future<CandidateRecord>> wave;
    for (std::size_t i = start; i < end; ++i) {
      wave.push_back(std::async(std::launch::async, [&, i] {
        return reasoner.reason(post, tasks[i].cluster, tasks[i].items);
      }));
    }
    for (std::size_t i = start; i < end; ++i) trace.candidates[i] = wave[i - start].get();
  }

  std::vector<Note> valid;
  std::vector<int> valid_positions;
  for (std::size_t i = 0; i < trace.candidates.size(); ++i) {
    if (trace.candidates[i].valid()) {
      valid.push_back(*trace.candidates[i].note);
      valid_positions.push_back(static_cast<int>(i));
    }
  }
  if (valid.empty()) {
    trace.model_call_count = counter.count();
    throw PipelineError("all candidates invalid: no completion began with a label");
  }

  const auto judgment = judge.judge(post, valid);
  trace.judge_raw = judgment.raw;
  trace.judge_fallback = judgment.fallback;
  trace.selected_index = valid_positions[judgment.selected];
  trace.model_call_count = counter.count();
  return EntryOutcome{valid[judgment.selected], std::move(trace)};
}

BatchSummary Pipeline::run_batch(std::span<const DataEntry> entries, const std::filesystem::path& output,
                                 bool resume) const {
  BatchSummary summary;
  summary.total = entries.size();

  std::unordered_set<std::string> done;
  if (resume && std::filesystem::exists(output)) done = ids_in_file(output);

  std::vector<const DataEntry*> pending;
  for (const auto& e : entries) {
    if (done.contains(e.post.id)) {
      ++summary.skipped;
    } else {
      pending.push_back(&e);
    }
  }

  std::ofstream out(output, resume ? std::ios::app : std::ios::trunc);
  if (!out) throw std::runtime_error("cannot write output file " + output.string());

  llm::CountingChat batch_counter(gateway_);
  const int hits_before = gateway_.cache_hits();
  const int backend_before = gateway_.backend_calls();

  std::vector<std::optional<std::string>> slots(pending.size());
  std::size_t next_to_write = 0;
  std::mutex write_mu;
  std::atomic<std::size_t> next_entry{0};
  std::atomic<std::size_t> success{0}, invalid{0}, error{0};
  bool write_failed = false;

  const auto worker = [&] {
    for (std::size_t i = next_entry++; i < pending.size(); i = next_entry++) {
      const auto& entry = *pending[i];
      std::string line;
      if (const auto violations = validate_entry(entry); !violations.empty()) {
        std::string msg;
        for (const auto& v : violations) msg += (msg.empty() ? "" : "; ") + v;
        line = serialize_failure(entry.post.id, ResultStatus::kInvalid, msg);
        ++invalid;
      } else {
        try {
          const auto outcome = run_entry_with(batch_counter, entry);
          line = serialize_result(entry.post.id, outcome.note, outcome.trace);
          ++success;
        } catch (const std::exception& e) {
          line = serialize_failure(entry.post.id, ResultStatus::kError, e.what());
          ++error;
        }
      }
      std::lock_guard lock(write_mu);
      slots[i] = std::move(line);
      while (next_to_write < slots.size() && slots[next_to_write]) {
        out << *slots[next_to_write] << '\n';
        slots[next_to_write].reset();
        ++next_to_write;
      }
      out.flush();
      if (!out) write_failed = true;
    }
  };

  const auto workers = std::min<std::size_t>(static_cast<std::size_t>(options_.max_concurrent_entries),
                                             pending.size());
  {
    std::vector<std::jthread> pool;
    for (std::size_t w = 0; w < workers; ++w) pool.emplace_back(worker);
  }
  if (write_failed) throw std::runtime_error("write to " + output.string() + " failed");

  summary.success = success;
  summary.invalid = invalid;
  summary.error = error;
  summary.chat_calls = static_cast<std::size_t>(batch_counter.count());
  summary.cache_hits = static_cast<std::size_t>(gateway_.cache_hits() - hits_before);
  summary.backend_calls = static_cast<std::size_t>(gateway_.backend_calls() - backend_before);
  return summary;
}

}  // namespace accnote
