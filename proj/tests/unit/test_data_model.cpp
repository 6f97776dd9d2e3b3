#include <doctest.h>

#include "accnote/dataset.hpp"
#include "accnote/records.hpp"
#include "accnote/url.hpp"
#include "helpers.hpp"

using namespace accnote;
using testing::TempDir;

namespace {

bool contains(const std::vector<std::string>& v, const std::string& s) {
  return std::find(v.begin(), v.end(), s) != v.end();
}

DataEntry valid_entry() {
  DataEntry e;
  e.post = testing::make_post("42", "A flooded street.");
  e.contexts = {{"https://example.org/a", "Summary A"}, {"https://example.org/b", ""}};
  return e;
}

}  // namespace

TEST_CASE("timestamps are strict") {
  const auto ts = Timestamp::parse("2023-08-03 18:31:13");
  REQUIRE(ts);
  CHECK(ts->year == 2023);
  CHECK(ts->second == 13);
  CHECK(ts->to_string() == "2023-08-03 18:31:13");
  CHECK_FALSE(Timestamp::parse("2023-02-30 00:00:00"));
  CHECK_FALSE(Timestamp::parse("2023-08-03T18:31:13"));
  CHECK_FALSE(Timestamp::parse("2023-08-03 24:00:00"));
  CHECK_FALSE(Timestamp::parse(""));
}

TEST_CASE("label spellings") {
  CHECK(label_from_string("Deceptive") == Label::kDeceptive);
  CHECK(label_from_string("non-deceptive") == Label::kNonDeceptive);
  CHECK(label_from_string("NonDeceptive") == Label::kNonDeceptive);
  CHECK_FALSE(label_from_string("maybe"));
  CHECK(label_from_classification("MISINFORMED_OR_POTENTIALLY_MISLEADING") == Label::kDeceptive);
  CHECK(label_from_classification("NOT_MISLEADING") == Label::kNonDeceptive);
}

TEST_CASE("the Example 1 record loads with its id and timestamp") {
  const auto loaded = load_dataset(testing::fixture("example1.jsonl"));
  REQUIRE(loaded.entries.size() == 1);
  const auto& e = loaded.entries[0];
  CHECK(e.post.id == "1687169266754158592");
  REQUIRE(e.post.timestamp());
  CHECK(e.post.timestamp()->to_string() == "2023-08-03 18:31:13");
  CHECK(e.post.retweet_count == 8503u);
  CHECK(e.gold_label == Label::kDeceptive);
  REQUIRE(e.gold_note);
  CHECK(e.gold_note->rationale == "The image depicts unofficial ballots from a mock election.");
  CHECK(e.gold_note->citations == std::vector<std::string>{"https://www.reuters.com/fact-check/mock-ballots"});
  CHECK(validate_entry(e).empty());
  // absent optional fields stay absent
  CHECK_FALSE(e.post.topics);
  CHECK_FALSE(e.post.image_path);
  CHECK(e.contexts.empty());
}

TEST_CASE("empty dataset file is an error") {
  TempDir dir;
  testing::write_text(dir / "empty.jsonl", "");
  CHECK_THROWS_WITH_AS(load_dataset(dir / "empty.jsonl"), doctest::Contains("zero valid entries"), DatasetError);
  CHECK_THROWS_AS(load_dataset(dir / "missing.jsonl"), DatasetError);
}

TEST_CASE("eleven contexts fail validation and the line is skipped") {
  TempDir dir;
  auto big = valid_entry();
  big.post.id = "big";
  big.contexts.clear();
  for (int i = 0; i < 11; ++i) big.contexts.push_back({"https://example.org/" + std::to_string(i), "s"});
  const auto path = dir / "d.jsonl";
  testing::write_text(path, serialize_entry(valid_entry()) + "\n" + serialize_entry(big) + "\nnot json\n");
  const auto loaded = load_dataset(path);
  REQUIRE(loaded.entries.size() == 1);
  CHECK(loaded.entries[0].post.id == "42");
  REQUIRE(loaded.issues.size() == 2);
  CHECK(loaded.issues[0].line == 2);
  CHECK(loaded.issues[0].message.find("contexts length 11 exceeds 10") != std::string::npos);
  CHECK(loaded.issues[1].line == 3);
}

TEST_CASE("validate_entry reports each violation") {
  CHECK(validate_entry(valid_entry()).empty());

  auto e = valid_entry();
  e.post.text = "";
  CHECK(contains(validate_entry(e), "post.text empty"));

  e = valid_entry();
  e.contexts[1].url = "not-a-url";
  CHECK(contains(validate_entry(e), "contexts[1].url invalid"));

  e = valid_entry();
  e.post.date = "yesterday";
  CHECK(contains(validate_entry(e), "post.timestamp invalid"));

  e = valid_entry();
  e.gold_note = Note{Label::kDeceptive, "r", {}, Provenance::kGroundTruth};
  CHECK(contains(validate_entry(e), "gold_note present without gold_label"));
  e.gold_label = Label::kNonDeceptive;
  CHECK(contains(validate_entry(e), "gold_label inconsistent with gold_note"));
}

TEST_CASE("dataset entries round-trip") {
  auto e = valid_entry();
  e.post.image_urls = {"https://img.example/1.jpg"};
  e.post.image_digest = "abc";
  e.post.topics = std::vector<std::string>{"politics"};
  e.gold_label = Label::kDeceptive;
  e.gold_note = Note{Label::kDeceptive, "Context here.", {"https://a.example/x"}, Provenance::kGroundTruth};
  CHECK(parse_entry(serialize_entry(e)) == e);
}

TEST_CASE("results round-trip with the full trace") {
  PipelineTrace trace;
  trace.filter = FilterDecision{{1, 2}, {3}, {1}, {2, 3}, {1}};
  trace.partition = StancePartition{{}, {1}, {}};
  trace.candidates.push_back({Provenance::kRefuting,
                              Note{Label::kDeceptive, "R", {"https://u.example/1"}, Provenance::kRefuting},
                              {"Deceptive. R"}});
  trace.candidates.push_back({Provenance::kEmptyContext, std::nullopt, {"hm", "still hm"}});
  trace.judge_raw = "";
  trace.selected_index = 0;
  trace.model_call_count = 5;
  const Note note{Label::kDeceptive, "R", {"https://u.example/1", "https://u.example/2"}, Provenance::kRefuting};

  const auto line = serialize_result("e1", note, trace);
  const auto rec = parse_result(line);
  CHECK(rec.entry_id == "e1");
  CHECK(rec.status == ResultStatus::kOk);
  CHECK(rec.note == note);
  CHECK(rec.trace == trace);
  CHECK(serialize_result("e1", *rec.note, *rec.trace) == line);

  const Note bare{Label::kNonDeceptive, "x", {}, Provenance::kEmptyContext};
  CHECK(serialize_result("e2", bare, trace).find("\"citations\":[]") != std::string::npos);

  const auto failure = parse_result(serialize_failure("e3", ResultStatus::kError, "boom"));
  CHECK(failure.status == ResultStatus::kError);
  CHECK(failure.error == "boom");
  CHECK_FALSE(failure.note);
}

TEST_CASE("url helpers") {
  CHECK(is_absolute_url("https://www.misbar.com/en/factcheck/x"));
  CHECK_FALSE(is_absolute_url("not-a-url"));
  CHECK_FALSE(is_absolute_url("https://"));
  CHECK(strip_scheme("https://a.b/c") == "a.b/c");
  const auto split = split_urls("See https://a.example/x, and www.b.example/y. Done");
  CHECK(split.urls == std::vector<std::string>{"https://a.example/x", "www.b.example/y"});
  CHECK(split.prose == "See, and. Done");
}
