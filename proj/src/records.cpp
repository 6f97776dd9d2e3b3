#include "accnote/records.hpp"

#include <fstream>

#include "accnote/url.hpp"

namespace accnote {
namespace {

const Json* find(const Json& obj, std::string_view key) {
  const auto it = obj.find(key);
  if (it == obj.end() || it->is_null()) return nullptr;
  return &*it;
}

std::string require_string(const Json& obj, std::string_view key) {
  const Json* v = find(obj, key);
  if (v == nullptr) throw RecordError("missing field '" + std::string(key) + "'");
  if (!v->is_string()) throw RecordError("field '" + std::string(key) + "' is not a string");
  return v->get<std::string>();
}

std::optional<std::string> optional_string(const Json& obj, std::string_view key) {
  const Json* v = find(obj, key);
  if (v == nullptr) return std::nullopt;
  if (!v->is_string()) throw RecordError("field '" + std::string(key) + "' is not a string");
  return v->get<std::string>();
}

std::vector<std::string> string_list(const Json& value, std::string_view key) {
  if (!value.is_array()) throw RecordError("field '" + std::string(key) + "' is not a list");
  std::vector<std::string> out;
  for (const auto& item : value) {
    if (!item.is_string()) {
      throw RecordError("field '" + std::string(key) + "' holds a non-string item");
    }
    out.push_back(item.get<std::string>());
  }
  return out;
}

std::optional<std::vector<std::string>> optional_string_list(const Json& obj,
                                                             std::string_view key) {
  const Json* v = find(obj, key);
  if (v == nullptr) return std::nullopt;
  return string_list(*v, key);
}

IndexSet index_list(const Json& obj, std::string_view key) {
  const Json* v = find(obj, key);
  if (v == nullptr) return {};
  if (!v->is_array()) throw RecordError("field '" + std::string(key) + "' is not a list");
  IndexSet out;
  for (const auto& item : *v) {
    if (!item.is_number_integer()) throw RecordError("non-integer index in '" + std::string(key) + "'");
    out.push_back(item.get<int>());
  }
  return out;
}

Label require_label(const Json& obj, std::string_view key) {
  const auto text = require_string(obj, key);
  const auto label = label_from_string(text);
  if (!label) throw RecordError("unknown label '" + text + "'");
  return *label;
}

Provenance require_provenance(const Json& obj, std::string_view key) {
  const auto text = require_string(obj, key);
  const auto p = provenance_from_string(text);
  if (!p) throw RecordError("unknown provenance '" + text + "'");
  return *p;
}

Json parse_line(std::string_view line) {
  try {
    auto j = Json::parse(line);
    if (!j.is_object()) throw RecordError("record is not a JSON object");
    return j;
  } catch (const Json::parse_error& e) {
    throw RecordError(std::string("malformed JSON: ") + e.what());
  }
}

Json candidate_to_json(const CandidateRecord& c) {
  Json j;
  j["provenance"] = to_string(c.cluster);
  j["valid"] = c.valid();
  if (c.note) {
    j["label"] = to_string(c.note->label);
    j["rationale"] = c.note->rationale;
    j["citations"] = c.note->citations;
  }
  j["raw"] = c.raw;
  return j;
}

CandidateRecord candidate_from_json(const Json& j) {
  CandidateRecord c;
  c.cluster = require_provenance(j, "provenance");
  const Json* valid = find(j, "valid");
  if (valid != nullptr && valid->is_boolean() && valid->get<bool>()) {
    Note note;
    note.label = require_label(j, "label");
    note.rationale = require_string(j, "rationale");
    note.citations = string_list(j.at("citations"), "citations");
    note.provenance = c.cluster;
    c.note = std::move(note);
  }
  if (const Json* raw = find(j, "raw")) c.raw = string_list(*raw, "raw");
  return c;
}

Json trace_to_json(const PipelineTrace& t) {
  Json j;
  if (t.filter) {
    j["filter"] = {{"useful", t.filter->useful},
                   {"useless", t.filter->useless},
                   {"trustworthy", t.filter->trustworthy},
                   {"untrustworthy", t.filter->untrustworthy},
                   {"kept", t.filter->kept}};
  } else {
    j["filter"] = nullptr;
  }
  j["partition"] = {{"supporting", t.partition.supporting},
                    {"refuting", t.partition.refuting},
                    {"irrelevant", t.partition.irrelevant}};
  j["candidates"] = Json::array();
  for (const auto& c : t.candidates) j["candidates"].push_back(candidate_to_json(c));
  j["judge_raw"] = t.judge_raw;
  j["judge_fallback"] = t.judge_fallback;
  j["selected_index"] = t.selected_index;
  j["model_call_count"] = t.model_call_count;
  return j;
}

PipelineTrace trace_from_json(const Json& j) {
  if (!j.is_object()) throw RecordError("trace is not an object");
  PipelineTrace t;
  if (const Json* f = find(j, "filter")) {
    t.filter = FilterDecision{index_list(*f, "useful"), index_list(*f, "useless"),
                              index_list(*f, "trustworthy"), index_list(*f, "untrustworthy"),
                              index_list(*f, "kept")};
  }
  if (const Json* p = find(j, "partition")) {
    t.partition = StancePartition{index_list(*p, "supporting"), index_list(*p, "refuting"),
                                  index_list(*p, "irrelevant")};
  }
  if (const Json* cs = find(j, "candidates")) {
    for (const auto& c : *cs) t.candidates.push_back(candidate_from_json(c));
  }
  t.judge_raw = optional_string(j, "judge_raw").value_or("");
  if (const Json* fb = find(j, "judge_fallback")) t.judge_fallback = fb->get<bool>();
  if (const Json* s = find(j, "selected_index")) t.selected_index = s->get<int>();
  if (const Json* n = find(j, "model_call_count")) t.model_call_count = n->get<int>();
  return t;
}

}  // namespace

Json note_to_json(const Note& note) {
  Json j;
  j["label"] = to_string(note.label);
  j["rationale"] = note.rationale;
  j["citations"] = note.citations;
  j["provenance"] = to_string(note.provenance);
  return j;
}

Note note_from_json(const Json& record) {
  if (!record.is_object()) throw RecordError("note is not a JSON object");
  Note note;
  note.label = require_label(record, "label");
  note.rationale = require_string(record, "rationale");
  if (const Json* c = find(record, "citations")) note.citations = string_list(*c, "citations");
  note.provenance = find(record, "provenance") ? require_provenance(record, "provenance")
                                               : Provenance::kJudge;
  return note;
}

Json entry_to_json(const DataEntry& entry) {
  const auto& p = entry.post;
  Json j;
  j["id"] = p.id;
  j["text"] = p.text;
  j["date"] = p.date;
  if (p.retweet_count) j["retweet_count"] = *p.retweet_count;
  if (!p.image_urls.empty()) j["image_urls"] = p.image_urls;
  if (p.image_path) j["image_path"] = *p.image_path;
  if (p.image_digest) j["image_digest"] = *p.image_digest;
  if (p.tweet_url) j["tweet_url"] = *p.tweet_url;
  if (p.topics) j["topics"] = *p.topics;
  if (p.factors) j["factors"] = *p.factors;
  j["contexts"] = Json::array();
  for (const auto& c : entry.contexts) j["contexts"].push_back({{"url", c.url}, {"summary", c.summary}});
  if (entry.gold_note) {
    const auto& n = *entry.gold_note;
    j["community_note"] = {{"classification", n.label == Label::kDeceptive
                                                  ? "MISINFORMED_OR_POTENTIALLY_MISLEADING"
                                                  : "NOT_MISLEADING"},
                           {"summary", n.rationale},
                           {"urls", n.citations}};
  }
  if (entry.gold_label) j["label"] = to_string(*entry.gold_label);
  return j;
}

DataEntry entry_from_json(const Json& record) {
  if (!record.is_object()) throw RecordError("record is not a JSON object");
  DataEntry entry;
  auto& p = entry.post;

  const Json* id = find(record, "id");
  if (id == nullptr) throw RecordError("missing field 'id'");
  if (id->is_string()) {
    p.id = id->get<std::string>();
  } else if (id->is_number_unsigned()) {
    p.id = std::to_string(id->get<std::uint64_t>());
  } else if (id->is_number_integer()) {
    p.id = std::to_string(id->get<std::int64_t>());
  } else {
    throw RecordError("field 'id' must be a string or integer");
  }

  p.text = require_string(record, "text");
  p.date = require_string(record, "date");
  if (const Json* rc = find(record, "retweet_count")) {
    if (!rc->is_number_unsigned()) throw RecordError("field 'retweet_count' must be a non-negative integer");
    p.retweet_count = rc->get<std::uint64_t>();
  }
  if (const Json* urls = find(record, "image_urls")) p.image_urls = string_list(*urls, "image_urls");
  p.image_path = optional_string(record, "image_path");
  p.image_digest = optional_string(record, "image_digest");
  p.tweet_url = optional_string(record, "tweet_url");
  p.topics = optional_string_list(record, "topics");
  p.factors = optional_string_list(record, "factors");

  if (const Json* contexts = find(record, "contexts")) {
    if (!contexts->is_array()) throw RecordError("field 'contexts' is not a list");
    for (const auto& c : *contexts) {
      if (!c.is_object()) throw RecordError("context item is not an object");
      // Reverse-search summaries are sometimes null; they stay listed as empty.
      entry.contexts.push_back({require_string(c, "url"), optional_string(c, "summary").value_or("")});
    }
  }

  if (const Json* label = find(record, "label")) {
    if (!label->is_string()) throw RecordError("field 'label' is not a string");
    entry.gold_label = label_from_string(label->get<std::string>());
    if (!entry.gold_label) throw RecordError("unknown label '" + label->get<std::string>() + "'");
  }

  if (const Json* cn = find(record, "community_note")) {
    if (!cn->is_object()) throw RecordError("field 'community_note' is not an object");
    Note gold;
    gold.provenance = Provenance::kGroundTruth;
    const auto summary = require_string(*cn, "summary");
    if (const Json* urls = find(*cn, "urls")) {
      gold.rationale = summary;
      gold.citations = string_list(*urls, "community_note.urls");
    } else {
      // Released notes inline their links in the summary text.
      auto split = split_urls(summary);
      gold.rationale = std::move(split.prose);
      gold.citations = std::move(split.urls);
    }
    std::optional<Label> note_label;
    if (const auto cls = optional_string(*cn, "classification")) {
      note_label = label_from_classification(*cls);
      if (!note_label) throw RecordError("unknown classification '" + *cls + "'");
    } else {
      note_label = entry.gold_label;
    }
    if (!note_label) throw RecordError("community_note has no classification and record has no label");
    gold.label = *note_label;
    if (!entry.gold_label) entry.gold_label = gold.label;
    entry.gold_note = std::move(gold);
  }
  return entry;
}

std::string serialize_entry(const DataEntry& entry) { return entry_to_json(entry).dump(); }

DataEntry parse_entry(std::string_view line) { return entry_from_json(parse_line(line)); }

std::string_view to_string(ResultStatus status) {
  switch (status) {
    case ResultStatus::kOk:
      return "ok";
    case ResultStatus::kInvalid:
      return "invalid";
    case ResultStatus::kError:
      return "error";
  }
  return "error";
}

std::string serialize_result(std::string_view entry_id, const Note& note,
                             const PipelineTrace& trace) {
  Json j;
  j["entry_id"] = entry_id;
  j["status"] = "ok";
  j["label"] = to_string(note.label);
  j["rationale"] = note.rationale;
  j["citations"] = note.citations;
  j["provenance"] = to_string(note.provenance);
  j["trace"] = trace_to_json(trace);
  return j.dump();
}

std::string serialize_failure(std::string_view entry_id, ResultStatus status,
                              std::string_view message) {
  Json j;
  j["entry_id"] = entry_id;
  j["status"] = to_string(status);
  j["error"] = message;
  return j.dump();
}

ResultRecord parse_result(std::string_view line) {
  const auto j = parse_line(line);
  ResultRecord r;
  r.entry_id = require_string(j, "entry_id");
  const auto status = optional_string(j, "status").value_or("ok");
  if (status == "ok") {
    r.status = ResultStatus::kOk;
    r.note = note_from_json(j);
    if (const Json* t = find(j, "trace")) r.trace = trace_from_json(*t);
  } else if (status == "invalid" || status == "error") {
    r.status = status == "invalid" ? ResultStatus::kInvalid : ResultStatus::kError;
    r.error = optional_string(j, "error").value_or("");
  } else {
    throw RecordError("unknown status '" + status + "'");
  }
  return r;
}

std::vector<ResultRecord> load_results(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw RecordError("cannot read results file " + path.string());
  std::vector<ResultRecord> out;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    try {
      out.push_back(parse_result(line));
    } catch (const std::exception& e) {
      throw RecordError(path.string() + ":" + std::to_string(line_no) + ": " + e.what());
    }
  }
  return out;
}

}  // namespace accnote
