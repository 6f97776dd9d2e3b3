#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace accnote {

enum class Label { kDeceptive, kNonDeceptive };

/// Where a note came from: one of the stance clusters, the closed-book
/// reasoner, the judge, or a human-written Community Note.
enum class Provenance {
  kSupporting,
  kRefuting,
  kIrrelevant,
  kEmptyContext,
  kJudge,
  kGroundTruth,
};

std::string_view to_string(Label label);
std::string_view to_string(Provenance provenance);

// Accepts "Deceptive", "NonDeceptive", "Non-deceptive" and
// "non_deceptive" spellings, case-insensitively.
std::optional<Label> label_from_string(std::string_view text);
std::optional<Provenance> provenance_from_string(std::string_view text);

/// Second-resolution calendar timestamp in the "YYYY-MM-DD HH:MM:SS" form.
struct Timestamp {
  int year = 0;
  int month = 0;
  int day = 0;
  int hour = 0;
  int minute = 0;
  int second = 0;

  /// Strict parse: exactly 19 characters and a real calendar date.
  static std::optional<Timestamp> parse(std::string_view text);
  std::string to_string() const;

  friend bool operator==(const Timestamp&, const Timestamp&) = default;
};

/// 1-based option numbers, ascending and unique.
using IndexSet = std::vector<int>;

struct Post {
  std::string id;
  std::string text;
  /// Raw "date" field; validity is checked by validate_entry.
  std::string date;
  std::vector<std::string> image_urls;
  std::optional<std::string> image_path;
  std::optional<std::string> image_digest;
  std::optional<std::uint64_t> retweet_count;
  std::optional<std::string> tweet_url;
  std::optional<std::vector<std::string>> topics;
  std::optional<std::vector<std::string>> factors;

  /// The single image handed to the model: the local path when present,
  /// otherwise the first image URL. Collages arrive as one image.
  std::optional<std::string> primary_image() const;
  std::optional<Timestamp> timestamp() const { return Timestamp::parse(date); }

  friend bool operator==(const Post&, const Post&) = default;
};

struct ContextItem {
  std::string url;
  std::string summary;

  friend bool operator==(const ContextItem&, const ContextItem&) = default;
};

struct Note {
  Label label = Label::kNonDeceptive;
  std::string rationale;
  std::vector<std::string> citations;
  Provenance provenance = Provenance::kJudge;

  friend bool operator==(const Note&, const Note&) = default;
};

inline constexpr std::size_t kMaxContexts = 10;

struct DataEntry {
  Post post;
  std::vector<ContextItem> contexts;
  std::optional<Note> gold_note;
  std::optional<Label> gold_label;

  friend bool operator==(const DataEntry&, const DataEntry&) = default;
};

/// Usefulness and credibility verdicts over contexts 1..m.
struct FilterDecision {
  IndexSet useful;
  IndexSet useless;
  IndexSet trustworthy;
  IndexSet untrustworthy;
  /// useful ∩ trustworthy in original order.
  IndexSet kept;

  friend bool operator==(const FilterDecision&, const FilterDecision&) = default;
};

/// Stance clusters; indices address the kept list (1-based).
struct StancePartition {
  IndexSet supporting;
  IndexSet refuting;
  IndexSet irrelevant;

  friend bool operator==(const StancePartition&, const StancePartition&) = default;
};

struct CandidateRecord {
  Provenance cluster = Provenance::kEmptyContext;
  /// Absent when the completion never carried a leading label.
  std::optional<Note> note;
  /// Raw completion of every attempt, in order.
  std::vector<std::string> raw;

  bool valid() const { return note.has_value(); }
  friend bool operator==(const CandidateRecord&, const CandidateRecord&) = default;
};

struct PipelineTrace {
  std::optional<FilterDecision> filter;
  StancePartition partition;
  std::vector<CandidateRecord> candidates;
  std::string judge_raw;
  bool judge_fallback = false;
  /// Index into candidates; always addresses a valid candidate.
  int selected_index = 0;
  int model_call_count = 0;

  friend bool operator==(const PipelineTrace&, const PipelineTrace&) = default;
};

/// Type-invariant check. An empty result means the entry is valid.
std::vector<std::string> validate_entry(const DataEntry& entry);

/// Maps a Community Notes classification such as
/// MISINFORMED_OR_POTENTIALLY_MISLEADING onto a label.
std::optional<Label> label_from_classification(std::string_view classification);

}  // namespace accnote
