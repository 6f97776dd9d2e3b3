#pragma once

#include <filesystem>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "accnote/data_model.hpp"

namespace accnote {

/// A JSONL line that does not match the record schema.
class RecordError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

using Json = nlohmann::ordered_json;

// Dataset records use the released dataset's field names: id, text, date,
// image_urls, contexts[{url, summary}], community_note{summary, urls,
// classification}, label.
Json entry_to_json(const DataEntry& entry);
DataEntry entry_from_json(const Json& record);
std::string serialize_entry(const DataEntry& entry);
DataEntry parse_entry(std::string_view line);

Json note_to_json(const Note& note);
Note note_from_json(const Json& record);

enum class ResultStatus { kOk, kInvalid, kError };
std::string_view to_string(ResultStatus status);

/// One line of a results file.
struct ResultRecord {
  std::string entry_id;
  ResultStatus status = ResultStatus::kOk;
  std::optional<Note> note;
  std::optional<PipelineTrace> trace;
  std::string error;

  friend bool operator==(const ResultRecord&, const ResultRecord&) = default;
};

std::string serialize_result(std::string_view entry_id, const Note& note,
                             const PipelineTrace& trace);
std::string serialize_failure(std::string_view entry_id, ResultStatus status,
                              std::string_view message);
ResultRecord parse_result(std::string_view line);

/// Reads every non-blank line of a results file. Throws RecordError naming
/// the first malformed line.
std::vector<ResultRecord> load_results(const std::filesystem::path& path);

}  // namespace accnote
